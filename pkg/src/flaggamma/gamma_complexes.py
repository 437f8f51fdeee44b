"""Flag complexes whose f-vectors are the gamma-vectors of Coxeter complexes,
associahedra and cyclohedra.

Families:

``B``      one-bar decorated permutations, adjacent when they assemble into a
           two-bar decorated permutation;
``A``      the zero-coloured one-bar vertices with empty decreasing part;
``D``      the one-bar vertices of the type-D subfamily;
``assoc``  arcs (a, b), 1 <= a < b <= n-1, adjacent when disjoint and noncrossing;
``cyc``    pairs (l, r) with l != r, adjacent when all four letters differ and
           the l- and r-orders agree.

A one-bar vertex is written ``u1 |c ud uu``: increasing prefix, bar colour,
decreasing part, increasing part.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .complex import DEFAULT_FACE_BUDGET, Complex, clique_complex
from .errors import BudgetExceededError, DomainError, PreconditionError
from .permstats import (
    DecPerm,
    Perm,
    PairTableau,
    decperm_problem,
    enumerate_decorated,
    enumerate_pairs,
    enumerate_pk,
    enumerate_pk312,
    is_312_avoiding,
    is_pk,
    is_permutation,
    is_type_D,
    peak_set_0,
    render,
    split_block,
)

FAMILIES = ("A", "B", "D", "assoc", "cyc")
_LIMITS = {"A": 8, "B": 6, "D": 6, "assoc": 8, "cyc": 8}

Arc = Tuple[int, int]
LR = Tuple[int, int]


# -- one-bar vertices ------------------------------------------------------------

def vertex_parts(v: DecPerm) -> Tuple[Perm, int, Perm, Perm]:
    if v.pk != 1:
        raise DomainError(f"{render(v)} does not have exactly one bar")
    p, c = v.bars[0]
    dec, inc = split_block(v.word[p:], last=True)
    return v.word[:p], c, dec, inc


def des_vertices(n: int) -> List[DecPerm]:
    """All one-bar decorated permutations of [n] in canonical order."""
    return sorted(enumerate_decorated(n, one_bar=True), key=DecPerm.sort_key)


def _phi_raw(word: Perm, bars: Sequence[Tuple[int, int]]):
    cuts = [p for p, _ in bars] + [len(word)]
    out = []
    for i, (p, c) in enumerate(bars):
        block = word[p:cuts[i + 1]]
        dec, _ = split_block(block, last=i == len(bars) - 1)
        out.append((tuple(sorted(word[:p])) + dec + tuple(sorted(word[p + len(dec):])), ((p, c),)))
    return out


def phi(dp: DecPerm) -> FrozenSet[DecPerm]:
    """One vertex per bar: colour, position and decreasing part kept, both sides sorted."""
    return frozenset(DecPerm(w, b) for w, b in _phi_raw(dp.word, dp.bars))


def assemble(u: DecPerm, v: DecPerm) -> Tuple[Perm, Tuple[Tuple[int, int], ...]]:
    """The candidate word u1 |c ud a |d vd vu with a = (uu ∩ v1) ascending."""
    u1, c, ud, uu = vertex_parts(u)
    v1, d, vd, vu = vertex_parts(v)
    a = tuple(sorted(set(uu) & set(v1)))
    word = u1 + ud + a + vd + vu
    return word, ((len(u1), c), (len(u1) + len(ud) + len(a), d))


def bullets_hold(u: DecPerm, v: DecPerm) -> bool:
    """The three set conditions on u (smaller bar position) and v."""
    u1, _, ud, uu = vertex_parts(u)
    v1, _, vd, _ = vertex_parts(v)
    if not set(u1 + ud) <= set(v1):
        return False
    common = set(uu) & set(v1)
    if not common:
        return False
    return min(common) < min(ud, default=float("inf")) and max(common) > max(vd, default=float("-inf"))


def assembled_word_valid(u: DecPerm, v: DecPerm) -> bool:
    """The assembled word is a decorated permutation (bars exactly at the peaks of 0w)."""
    word, bars = assemble(u, v)
    return len(word) == u.n and decperm_problem(word, bars) is None


def assembly_valid(u: DecPerm, v: DecPerm) -> bool:
    """The assembled word is a decorated permutation whose image under phi is {u, v}."""
    if not assembled_word_valid(u, v):
        return False
    word, bars = assemble(u, v)
    return set(_phi_raw(word, bars)) == {(u.word, u.bars), (v.word, v.bars)}


def _ordered(u: DecPerm, v: DecPerm):
    if u.n != v.n:
        raise DomainError("vertices come from different n")
    pu, pv = u.bars[0][0], v.bars[0][0]
    if pu == pv:
        return None
    return (u, v) if pu < pv else (v, u)


_RULES = {
    "normative": assembly_valid,
    "bullets": bullets_hold,
    "word": assembled_word_valid,
}


def adjacent_des(u: DecPerm, v: DecPerm, rule: str = "normative") -> bool:
    """Adjacency of one-bar vertices.

    The normative rule assembles the two-bar word and requires it to be a
    decorated permutation with phi-image {u, v}.  ``"bullets"`` (the three set
    conditions alone) and ``"word"`` (word validity alone) both over-accept and
    exist only for comparison.
    """
    try:
        test = _RULES[rule]
    except KeyError:
        raise DomainError(f"unknown adjacency rule {rule!r}") from None
    pair = _ordered(u, v)
    if pair is None:
        return False
    return test(*pair)


def phi_inverse(face: Iterable[DecPerm], n: Optional[int] = None) -> DecPerm:
    """Rebuild the decorated permutation of a face, inserting bars left to right."""
    verts = sorted(face, key=lambda v: v.bars[0][0] if v.pk == 1 else -1)
    if not verts:
        if n is None:
            raise PreconditionError("n is required for the empty face")
        return DecPerm(tuple(range(1, n + 1)))
    for v in verts:
        if v.pk != 1:
            raise PreconditionError(f"{render(v)} is not a one-bar vertex")
    word, bars = verts[0].word, verts[0].bars
    for v in verts[1:]:
        p = bars[-1][0]
        dec, inc = split_block(word[p:], last=True)
        v1, d, _, _ = vertex_parts(v)
        a = tuple(sorted(set(inc) & set(v1)))
        q = v.bars[0][0]
        word = word[:p] + dec + a + v.word[q:]
        bars = bars + ((p + len(dec) + len(a), d),)
        if len(word) != v.n or decperm_problem(word, bars) is not None:
            raise PreconditionError("vertices are not pairwise adjacent")
    dp = DecPerm(word, bars)
    if phi(dp) != frozenset(verts):
        raise PreconditionError("vertices are not pairwise adjacent")
    return dp


def coarsen(dp: DecPerm, bar_index: int) -> DecPerm:
    """Remove bar number ``bar_index`` (1-based), keeping the decreasing part before it
    and sorting the remaining letters of the two merged blocks."""
    if not 1 <= bar_index <= dp.pk:
        raise DomainError(f"bar index {bar_index} out of range 1..{dp.pk}")
    blocks = dp.blocks()
    i = bar_index - 1
    left, right = blocks[i], blocks[i + 1]
    dec, _ = split_block(left, first=i == 0)
    merged = dec + tuple(sorted(set(left + right) - set(dec)))
    word = sum(blocks[:i], ()) + merged + sum(blocks[i + 2:], ())
    bars = dp.bars[:i] + dp.bars[i + 1:]
    return DecPerm(word, bars)


def balanced_coloring(v: DecPerm) -> int:
    """Colour ceil(position / 2) of a one-bar vertex."""
    return ceil(v.bars[0][0] / 2)


def is_pk_vertex(v: DecPerm) -> bool:
    return v.colors == (0,) and not vertex_parts(v)[2]


# -- arcs and (l, r) pairs -------------------------------------------------------

def noncrossing(p: Arc, q: Arc) -> bool:
    a, b = p
    c, d = q
    return not (a < c < b < d or c < a < d < b)


def arcs_adjacent(p: Arc, q: Arc) -> bool:
    return not set(p) & set(q) and noncrossing(p, q)


def lr_adjacent(p: LR, q: LR) -> bool:
    (l1, r1), (l2, r2) = p, q
    return len({l1, l2, r1, r2}) == 4 and (l1 < l2) == (r1 < r2)


def pi(w: Sequence[int]) -> FrozenSet[Arc]:
    w = tuple(w)
    if not (is_permutation(w) and is_pk(w) and is_312_avoiding(w)):
        raise PreconditionError(f"{w} is not in Pk_n(312)")
    return frozenset((w[i + 1], w[i]) for i in range(len(w) - 1) if w[i] > w[i + 1])


def pi_inverse(face: Iterable[Arc], n: int) -> Perm:
    """Order pairs by larger letter and interleave them with the sorted free letters."""
    pairs = sorted(face, key=lambda p: p[1])
    for p, q in combinations(pairs, 2):
        if not arcs_adjacent(p, q):
            raise PreconditionError(f"{p} and {q} are not adjacent")
    for i, j in pairs:
        if not 1 <= i < j <= n - 1:
            raise PreconditionError(f"({i},{j}) is not an arc for n={n}")
    used = {x for p in pairs for x in p}
    word: List[int] = []
    prev = 0
    for i, j in pairs + [(None, n + 1)]:
        word.extend(r for r in range(prev + 1, j) if r not in used)
        if i is not None:
            word.extend((j, i))
        prev = j
    w = tuple(word)
    if pi(w) != frozenset(pairs):
        raise PreconditionError("face does not come from a permutation in Pk_n(312)")
    return w


def psi(sigma: PairTableau) -> FrozenSet[LR]:
    return frozenset(sigma.rows)


def psi_inverse(face: Iterable[LR]) -> PairTableau:
    rows = sorted(face)
    for p, q in combinations(rows, 2):
        if not lr_adjacent(p, q):
            raise PreconditionError(f"{p} and {q} are not adjacent")
    return PairTableau(tuple(l for l, _ in rows), tuple(r for _, r in rows))


# -- the complexes -----------------------------------------------------------------

@dataclass(frozen=True)
class GammaComplex:
    family: str
    n: int
    labels: Tuple  # vertex id i carries labels[i]
    complex: Complex

    @property
    def fvector(self) -> Tuple[int, ...]:
        return self.complex.fvector

    def label_face(self, face: Sequence[int]) -> Tuple:
        return tuple(self.labels[i] for i in face)

    def labelled_faces(self) -> List[Tuple]:
        return [self.label_face(f) for f in self.complex]


def _pk_decorated(n: int) -> List[DecPerm]:
    # a word in Pk_n has its descents exactly at the peaks of 0w
    return [DecPerm(w, tuple((p, 0) for p in peak_set_0(w))) for w in enumerate_pk(n)]


def family_vertices(family: str, n: int) -> List:
    if family == "B":
        return des_vertices(n)
    if family == "A":
        return sorted((dp for dp in _pk_decorated(n) if dp.pk == 1), key=DecPerm.sort_key)
    if family == "D":
        return [v for v in des_vertices(n) if is_type_D(v)]
    if family == "assoc":
        return [(a, b) for a in range(1, n) for b in range(a + 1, n)]
    if family == "cyc":
        return [(l, r) for l in range(1, n + 1) for r in range(1, n + 1) if l != r]
    raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")


def build_gamma_complex(family: str, n: int, rule: str = "normative",
                        budget: int = DEFAULT_FACE_BUDGET) -> GammaComplex:
    """Clique complex of the family's adjacency graph on its vertex set."""
    if family not in _LIMITS:
        raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise DomainError("n must be positive")
    if n > _LIMITS[family]:
        raise BudgetExceededError(f"family {family} is limited to n <= {_LIMITS[family]}")
    verts = family_vertices(family, n)
    if family in ("A", "B", "D"):
        adjacent = lambda p, q: adjacent_des(p, q, rule)  # noqa: E731
    elif family == "assoc":
        adjacent = arcs_adjacent
    else:
        adjacent = lr_adjacent
    graph: Dict[int, set] = {i: set() for i in range(len(verts))}
    for i, j in combinations(range(len(verts)), 2):
        if adjacent(verts[i], verts[j]):
            graph[i].add(j)
            graph[j].add(i)
    return GammaComplex(family, n, tuple(verts), clique_complex(graph, budget=budget))


def family_members(family: str, n: int) -> List:
    """The objects counted by the family's gamma-vector, as faces of the construction.

    A: Pk_n as zero-coloured decorated permutations; B: all of Des_n; D: the type-D
    subfamily; assoc: Pk_n(312); cyc: the pairs (L, R).
    """
    if family == "B":
        return enumerate_decorated(n)
    if family == "A":
        return _pk_decorated(n)
    if family == "D":
        return [dp for dp in enumerate_decorated(n) if is_type_D(dp)]
    if family == "assoc":
        return enumerate_pk312(n)
    if family == "cyc":
        return enumerate_pairs(n)
    raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")


def face_of(family: str, x) -> FrozenSet:
    """The face (as a set of vertex labels) attached to a family member."""
    if family in ("A", "B", "D"):
        return phi(x)
    if family == "assoc":
        return pi(x)
    return psi(x)


def gamma_image_complex(family: str, n: int, budget: int = DEFAULT_FACE_BUDGET) -> GammaComplex:
    """The complex whose faces are the images of the family members.

    Its f-vector counts members by bars (or descents, or rho) and hence equals the
    gamma-vector whenever the images are distinct and closed under taking subsets,
    both of which are checked here.  Unlike ``build_gamma_complex`` it need not be flag.
    """
    if family not in _LIMITS:
        raise DomainError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n > _LIMITS[family]:
        raise BudgetExceededError(f"family {family} is limited to n <= {_LIMITS[family]}")
    verts = family_vertices(family, n)
    index = {v: i for i, v in enumerate(verts)}
    faces = set()
    for x in family_members(family, n):
        face = tuple(sorted(index[v] for v in face_of(family, x)))
        if face in faces:
            raise PreconditionError(f"two members of {family}{n} share the face {face}")
        faces.add(face)
        if len(faces) > budget:
            raise BudgetExceededError(f"more than {budget} faces")
    for face in faces:
        for i in range(len(face)):
            if face[:i] + face[i + 1:] not in faces:
                raise PreconditionError(f"images for {family}{n} are not closed under subsets")
    return GammaComplex(family, n, tuple(verts), Complex(faces))


def flag_defects(family: str, n: int, rule: str = "normative") -> List[Tuple]:
    """Cliques of the adjacency graph that are not images of family members.

    Empty exactly when ``build_gamma_complex`` and ``gamma_image_complex`` agree.
    """
    gc = build_gamma_complex(family, n, rule=rule)
    images = {face_of(family, x) for x in family_members(family, n)}
    out = []
    for face in gc.complex:
        labels = gc.label_face(face)
        if frozenset(labels) not in images:
            out.append(labels)
    return sorted(out, key=lambda f: (len(f), [format_label_for(family, x) for x in f]))


def format_label(x) -> str:
    if isinstance(x, DecPerm):
        return render(x)
    return f"({x[0]},{x[1]})"


def format_label_for(family: str, x) -> str:
    if family == "cyc":
        return f"({x[0]};{x[1]})"
    return format_label(x)


# -- exhaustive structural checks ------------------------------------------------------

def phi_bijection_failures(n: int, rule: str = "normative") -> List[str]:
    """Ways in which phi fails to be a bijection from Des_n onto the faces of Γ(Des_n)."""
    gc = build_gamma_complex("B", n, rule=rule)
    index = {v: i for i, v in enumerate(gc.labels)}
    faces = set(gc.complex.faces)
    problems = []
    images = set()
    for dp in enumerate_decorated(n):
        img = phi(dp)
        key = tuple(sorted(index[v] for v in img))
        if key not in faces:
            problems.append(f"phi({render(dp)}) is not a face")
        if key in images:
            problems.append(f"phi({render(dp)}) repeats an image")
        images.add(key)
        back = phi_inverse(img, n) if key in faces else None
        if back is not None and back != dp:
            problems.append(f"phi_inverse(phi({render(dp)})) = {render(back)}")
    missing = faces - images
    if missing:
        problems.append(f"{len(missing)} faces have no preimage")
    return problems


def verify_poset_iso(n: int) -> bool:
    """phi maps the coarsening order on Des_n isomorphically onto face inclusion."""
    if n > 5:
        raise BudgetExceededError("verify_poset_iso is exhaustive only for n <= 5")
    if phi_bijection_failures(n):
        return False
    for dp in enumerate_decorated(n):
        img = phi(dp)
        coarser = {coarsen(dp, i) for i in range(1, dp.pk + 1)}
        if len(coarser) != dp.pk:
            return False
        for u in coarser:
            sub = phi(u)
            if not (sub < img and len(img - sub) == 1):
                return False
        # every codimension-one subface comes from removing a single bar
        for x in img:
            if phi_inverse(img - {x}, n) not in coarser:
                return False
    return True


def bar_positions_separated(gc: GammaComplex) -> bool:
    for face in gc.complex.faces:
        pos = sorted(gc.labels[i].bars[0][0] for i in face)
        if any(b - a < 2 for a, b in zip(pos, pos[1:])):
            return False
    return True


def coloring_is_balanced(gc: GammaComplex) -> bool:
    """Every face is rainbow under ceil(position / 2)."""
    col = [balanced_coloring(v) for v in gc.labels]
    return all(len({col[i] for i in f}) == len(f) for f in gc.complex.faces)
