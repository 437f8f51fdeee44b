"""Verification suites: each check recomputes an identity exhaustively at a fixed
size and reports pass/fail with timing."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from .complex import Complex, contract_edge, is_flag, join, link, octahedral_sphere, polygon, suspension
from .gamma_complexes import (
    bar_positions_separated,
    build_gamma_complex,
    coloring_is_balanced,
    flag_defects,
    format_label_for,
    gamma_image_complex,
    phi_bijection_failures,
    verify_poset_iso,
)
from .homology import is_homology_sphere
from .models import (
    associahedron_complex,
    coxeter_complex,
    enumerate_flag_2spheres,
    exceptional_gamma,
    exceptional_labels,
    sphere_catalog,
)
from .permstats import (
    des,
    enumerate_pk,
    enumerate_pk312,
    eulerian,
    gamma_assoc,
    gamma_cyc,
    gamma_cyc_formula,
    enumerate_decorated,
    enumerate_decorated_D,
)
from .vectors import (
    f_to_gamma,
    f_to_h,
    ffk_check,
    gal_34_check,
    gamma_expand,
    h_to_gamma,
    kk_check,
    poly_add,
    poly_shift,
    poly_trim,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str
    seconds: float


def _run(name: str, fn: Callable[[], Tuple[bool, str]]) -> Check:
    start = time.perf_counter()
    ok, detail = fn()
    return Check(name, bool(ok), detail, time.perf_counter() - start)


def _expansion(objs, stat, d: int) -> Tuple[int, ...]:
    total: Tuple[int, ...] = (0,)
    for x in objs:
        k = stat(x)
        term = [0] * (k + 1)
        term[k] = 1
        total = poly_add(total, gamma_expand(term, d))
    return poly_trim(total)


# -- individual identities ------------------------------------------------------------

def foata_schutzenberger(n: int) -> Tuple[bool, str]:
    got = _expansion(enumerate_pk(n), des, n - 1)
    want = eulerian("A", n)
    return got == want, f"n={n}: {got}"


def peak_expansion(kind: str, n: int) -> Tuple[bool, str]:
    objs = enumerate_decorated(n) if kind == "B" else enumerate_decorated_D(n)
    got = _expansion(objs, lambda dp: dp.pk, n)
    want = eulerian(kind, n)
    return got == want, f"{kind}{n}: {got}"


def _gamma_of(family: str, n: int) -> Tuple[int, ...]:
    if family == "A":
        return h_to_gamma(eulerian("A", n)) if n > 1 else (1,)
    if family in ("B", "D"):
        return h_to_gamma(eulerian(family, n))
    if family == "assoc":
        return gamma_assoc(n)
    return gamma_cyc_formula(n)


def gamma_complex_equality(family: str, n: int) -> Tuple[bool, str]:
    """f of the clique complex against the gamma-vector; on mismatch names a defect."""
    gc = build_gamma_complex(family, n)
    f, g = poly_trim(gc.fvector), poly_trim(_gamma_of(family, n))
    if f == g:
        return True, f"{family}{n}: f={f}"
    bad = flag_defects(family, n)
    example = ", ".join(format_label_for(family, x) for x in bad[0]) if bad else "-"
    return False, f"{family}{n}: f={f} gamma={g}; {len(bad)} cliques without preimage, e.g. {{{example}}}"


def image_complex_equality(family: str, n: int) -> Tuple[bool, str]:
    ic = gamma_image_complex(family, n)
    f, g = poly_trim(ic.fvector), poly_trim(_gamma_of(family, n))
    return f == g and coloring_ok(ic, family), f"{family}{n}: f={f}"


def coloring_ok(gc, family: str) -> bool:
    if family not in ("A", "B", "D"):
        return True
    return bar_positions_separated(gc) and coloring_is_balanced(gc)


def coxeter_oracle(kind: str, n: int, homology: bool = True) -> Tuple[bool, str]:
    c = coxeter_complex(kind, n)
    h = f_to_h(c.fvector)
    ok = h == eulerian(kind, n) and is_flag(c)
    if homology:
        ok = ok and is_homology_sphere(c)
    return ok, f"{kind}{n}: h={h}"


def associahedron_oracle(n: int, homology: bool = True) -> Tuple[bool, str]:
    c = associahedron_complex(n)
    h = f_to_h(c.fvector)
    want = _expansion(enumerate_pk312(n), des, n - 1)
    ok = h == want and is_flag(c)
    if homology:
        ok = ok and is_homology_sphere(c)
    return ok, f"n={n}: h={h}"


def gamma_poly(c: Complex) -> Tuple[int, ...]:
    return poly_trim(f_to_gamma(c.fvector))


def contraction_identity(c: Complex, u: int, v: int):
    """None if contracting {u, v} does not give a homology sphere, else whether
    gamma(c) = gamma(c') + t * gamma(lk{u, v})."""
    c2 = contract_edge(c, u, v)
    if not is_homology_sphere(c2):
        return None
    rhs = poly_add(gamma_poly(c2), poly_shift(gamma_poly(link(c, (min(u, v), max(u, v)))), 1))
    return gamma_poly(c) == poly_trim(rhs)


def contraction_survey(catalog: Sequence[Tuple[str, Complex]], per_complex: int = 4,
                       max_vertices: int = 10) -> Tuple[int, int, List[str]]:
    """(admissible edges tried, identity failures, notes) over the first edges of each complex."""
    tried = failed = 0
    notes = []
    for name, c in catalog:
        if len(c.vertices) > max_vertices:
            continue
        seen = 0
        for u, v in c.edges:
            if seen >= per_complex:
                break
            res = contraction_identity(c, u, v)
            if res is None:
                continue
            seen += 1
            tried += 1
            if not res:
                failed += 1
                notes.append(f"{name} edge {u}-{v}")
    return tried, failed, notes


# -- suites ----------------------------------------------------------------------------------

def suite_coxeter() -> List[Check]:
    out = [_run(f"Pk expansion = Eulerian A, n={n}", lambda n=n: foata_schutzenberger(n)) for n in range(1, 9)]
    for kind in ("B", "D"):
        lo = 1 if kind == "B" else 2
        out += [_run(f"Des expansion = Eulerian {kind}, n={n}", lambda k=kind, n=n: peak_expansion(k, n))
                for n in range(lo, 7)]
    out += [_run(f"order complex A, n={n}", lambda n=n: coxeter_oracle("A", n)) for n in range(2, 7)]
    out += [_run(f"order complex B, n={n}", lambda n=n: coxeter_oracle("B", n)) for n in range(1, 5)]
    return out


_GAMMA_SIZES = {"A": range(2, 8), "B": range(1, 7), "D": range(2, 7), "assoc": range(2, 9), "cyc": range(1, 9)}


def suite_gamma(families: Sequence[str] = ("A", "B", "D")) -> List[Check]:
    out = []
    for fam in families:
        for n in _GAMMA_SIZES[fam]:
            out.append(_run(f"f(Gamma {fam}{n}) = gamma", lambda f=fam, n=n: gamma_complex_equality(f, n)))
            out.append(_run(f"f(image {fam}{n}) = gamma", lambda f=fam, n=n: image_complex_equality(f, n)))
    for n in range(1, 6):
        out.append(_run(f"phi bijection and poset iso, n={n}",
                        lambda n=n: (not phi_bijection_failures(n) and verify_poset_iso(n), f"n={n}")))
    return out


def suite_assoc() -> List[Check]:
    out = [_run(f"f(Gamma assoc{n}) = gamma", lambda n=n: gamma_complex_equality("assoc", n)) for n in range(2, 9)]
    out += [_run(f"diagonal complex, n={n}", lambda n=n: associahedron_oracle(n)) for n in range(2, 8)]
    return out


def suite_cyc() -> List[Check]:
    out = [_run(f"P_n count = multinomial, n={n}",
                lambda n=n: (gamma_cyc(n) == gamma_cyc_formula(n), f"n={n}: {gamma_cyc(n)}")) for n in range(1, 9)]
    out += [_run(f"f(Gamma cyc{n}) = gamma", lambda n=n: gamma_complex_equality("cyc", n)) for n in range(1, 9)]
    return out


def _small_spheres() -> Tuple[bool, str]:
    spheres = enumerate_flag_2spheres(8)
    by_n: Dict[int, List[Tuple[int, ...]]] = {}
    for s in spheres:
        by_n.setdefault(len(s.vertices), []).append(gamma_poly(s))
    allowed = {(1,), (1, 1), (1, 2)}
    ok = all(g in allowed for gs in by_n.values() for g in gs)
    ok = ok and by_n.get(6) == [(1,)] and spheres[0].fvector == octahedral_sphere(3).fvector
    # gamma_1 = f_1 - 2d with d = 3
    ok = ok and all(g == poly_trim((1, n - 6)) for n, gs in by_n.items() for g in gs)
    return ok, "; ".join(f"{n} vertices: {len(gs)} spheres, gamma {sorted(set(gs))}" for n, gs in sorted(by_n.items()))


def _witnesses() -> Tuple[bool, str]:
    cases = {
        (1,): octahedral_sphere(3),
        (1, 1): polygon(5),
        (1, 2): polygon(6),
        (1, 2, 1): join(polygon(5), polygon(5)),
    }
    got = {k: gamma_poly(c) for k, c in cases.items()}
    return all(k == v for k, v in got.items()), str(got)


def _suspension_invariance() -> Tuple[bool, str]:
    cat = [(n, c) for n, c in sphere_catalog() if len(c.vertices) <= 10]
    bad = [n for n, c in cat if gamma_poly(suspension(c)) != gamma_poly(c)]
    return not bad, f"{len(cat)} spheres" + (f", failures: {bad}" if bad else "")


def _contractions() -> Tuple[bool, str]:
    hexagon = polygon(6)
    first = contraction_identity(hexagon, 1, 2)
    tried, failed, notes = contraction_survey(sphere_catalog())
    ok = first is True and tried >= 20 and failed == 0
    return ok, f"hexagon: {first}; {tried} admissible edges, {failed} failures {notes[:3]}"


def suite_small_spheres() -> List[Check]:
    return [
        _run("flag 2-spheres on <= 8 vertices", _small_spheres),
        _run("gamma witnesses 1, 1+t, 1+2t, 1+2t+t^2", _witnesses),
        _run("suspension keeps gamma", _suspension_invariance),
        _run("contraction identity", _contractions),
    ]


def _vector_ok(v: Sequence[int]) -> bool:
    return kk_check(v) and ffk_check(v)


def _table() -> Tuple[bool, str]:
    bad = [g for g in exceptional_labels(12) if not _vector_ok(exceptional_gamma(g))]
    return not bad, "all rows pass" if not bad else f"failures: {bad}"


def _gamma_vectors() -> Tuple[bool, str]:
    bad = []
    for fam, sizes in _GAMMA_SIZES.items():
        for n in sizes:
            if fam in ("A", "B", "D") and n > 6:
                continue
            g = _gamma_of(fam, n)
            if not _vector_ok(g):
                bad.append(f"{fam}{n}")
    return not bad, "all pass" if not bad else f"failures: {bad}"


def _gal() -> Tuple[bool, str]:
    three = [(n, c) for n, c in sphere_catalog() if c.dim == 3]
    bad = [n for n, c in three if not gal_34_check(gamma_poly(c))]
    return not bad, f"{len(three)} 3-spheres" + (f", failures: {bad}" if bad else "")


def suite_inequalities() -> List[Check]:
    return [
        _run("exceptional table through kk and ffk", _table),
        _run("family gamma-vectors through kk and ffk", _gamma_vectors),
        _run("4 gamma_2 <= gamma_1^2 on catalog 3-spheres", _gal),
    ]


SUITES: Dict[str, Callable[[], List[Check]]] = {
    "coxeter": suite_coxeter,
    "gamma": suite_gamma,
    "assoc": suite_assoc,
    "cyc": suite_cyc,
    "small-spheres": suite_small_spheres,
    "inequalities": suite_inequalities,
}


def run_suite(name: str) -> List[Check]:
    if name == "all":
        return [c for key in SUITES for c in SUITES[key]()]
    try:
        return SUITES[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected all or one of {sorted(SUITES)}") from None
