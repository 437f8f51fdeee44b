"""f-, h- and gamma-vectors of flag simplicial complexes, the Kruskal-Katona and
Frankl-Furedi-Kalai inequalities, and explicit complexes whose f-vectors are the
gamma-vectors of Coxeter complexes, associahedra and cyclohedra."""

from .complex import (
    Complex,
    build_from_facets,
    clique_complex,
    contract_edge,
    induced,
    is_flag,
    join,
    link,
    octahedral_sphere,
    polygon,
    read_facets,
    suspension,
)
from .errors import BudgetExceededError, DomainError, FlagGammaError, MalformedInputError, PreconditionError
from .gamma_complexes import GammaComplex, build_gamma_complex, gamma_image_complex
from .homology import betti, is_homology_sphere
from .permstats import DecPerm, eulerian, parse_decperm, render
from .vectors import f_to_gamma, f_to_h, ffk_check, gal_34_check, h_to_gamma, kk_check

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError", "Complex", "DecPerm", "DomainError", "FlagGammaError", "GammaComplex",
    "MalformedInputError", "PreconditionError", "betti", "build_from_facets", "build_gamma_complex",
    "clique_complex", "contract_edge", "eulerian", "f_to_gamma", "f_to_h", "ffk_check", "gal_34_check",
    "gamma_image_complex", "h_to_gamma", "induced", "is_flag", "is_homology_sphere", "join", "kk_check",
    "link", "octahedral_sphere", "parse_decperm", "polygon", "read_facets", "render", "suspension",
]
