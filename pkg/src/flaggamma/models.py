"""Independent oracles: Coxeter complexes as barycentric subdivisions, the
polygon-diagonal associahedron, tabulated exceptional gamma-vectors, a catalog
of flag spheres and an exhaustive enumerator of small flag 2-spheres."""

from __future__ import annotations

import re
from itertools import combinations, permutations
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .complex import (
    DEFAULT_FACE_BUDGET,
    Complex,
    clique_complex,
    join,
    octahedral_sphere,
    polygon,
    suspension,
)
from .errors import BudgetExceededError, DomainError, MalformedInputError
from .homology import is_homology_sphere

_COXETER_LIMITS = {"A": 6, "B": 4}


def _order_complex(elements: List, less, budget: int) -> Complex:
    """Chains of a finite poset, with vertex ids given by position in ``elements``."""
    up: Dict[int, List[int]] = {
        i: [j for j, y in enumerate(elements) if less(x, y)] for i, x in enumerate(elements)
    }
    graph = {i: set() for i in up}
    for i, js in up.items():
        for j in js:
            graph[i].add(j)
            graph[j].add(i)
    # comparability graphs are exactly the graphs whose cliques are chains
    return clique_complex(graph, budget=budget)


def coxeter_complex(kind: str, n: int, budget: int = DEFAULT_FACE_BUDGET) -> Complex:
    """Type A_{n-1} or B_n Coxeter complex as an order complex.

    A: chains of proper nonempty subsets of [n] (vertices indexed by bitmask order).
    B: chains of nonempty faces of the boundary of the n-cross-polytope, i.e. of
    nonempty signed sets without an antipodal pair.
    """
    if kind not in _COXETER_LIMITS:
        raise DomainError(f"unknown Coxeter type {kind!r}; expected A or B")
    if n < 1:
        raise DomainError("n must be positive")
    if n > _COXETER_LIMITS[kind]:
        raise BudgetExceededError(f"coxeter_complex({kind}) is limited to n <= {_COXETER_LIMITS[kind]}")
    if kind == "A":
        if n == 1:
            return Complex([()])
        elements = [frozenset(i + 1 for i in range(n) if m >> i & 1) for m in range(1, (1 << n) - 1)]
    else:
        elements = []
        for k in range(1, n + 1):
            for support in combinations(range(1, n + 1), k):
                for signs in range(1 << k):
                    elements.append(frozenset(-x if signs >> i & 1 else x for i, x in enumerate(support)))
    return _order_complex(elements, lambda x, y: x < y, budget)


def polygon_diagonals(m: int) -> List[Tuple[int, int]]:
    """Diagonals (i, j), 0 <= i < j < m, of a convex m-gon."""
    return [(i, j) for i, j in combinations(range(m), 2) if j - i not in (1, m - 1)]


def _diagonals_cross(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
    (a, b), (c, d) = p, q
    return a < c < b < d or c < a < d < b


def associahedron_complex(n: int, budget: int = DEFAULT_FACE_BUDGET) -> Complex:
    """Pairwise noncrossing diagonals of a convex (n+2)-gon.

    Vertex id i is the i-th diagonal of ``polygon_diagonals(n + 2)``.  Diagonals
    sharing an endpoint do not cross.
    """
    if n < 2:
        raise DomainError("associahedron_complex needs n >= 2")
    if n > 8:
        raise BudgetExceededError("associahedron_complex is limited to n <= 8")
    diags = polygon_diagonals(n + 2)
    graph = {i: set() for i in range(len(diags))}
    for i, j in combinations(range(len(diags)), 2):
        if not _diagonals_cross(diags[i], diags[j]):
            graph[i].add(j)
            graph[j].add(i)
    return clique_complex(graph, budget=budget)


# -- tabulated exceptional types --------------------------------------------------

EXCEPTIONAL_GAMMA: Dict[str, Tuple[int, ...]] = {
    "E6": (1, 1266, 7104, 3104),
    "E7": (1, 17628, 221808, 282176),
    "E8": (1, 881744, 23045856, 63613184, 17111296),
    "F4": (1, 232, 208),
    "G2": (1, 8),
    "H3": (1, 56),
    "H4": (1, 2632, 3856),
}

_I2 = re.compile(r"I2\((\d+)\)$")


def exceptional_gamma(group: str) -> Tuple[int, ...]:
    """Gamma-vector of an exceptional finite Coxeter complex; ``I2(m)`` gives (1, 2m-4)."""
    label = group.strip().replace(" ", "")
    if label in EXCEPTIONAL_GAMMA:
        return EXCEPTIONAL_GAMMA[label]
    m = _I2.match(label)
    if m:
        k = int(m.group(1))
        if k < 3:
            raise DomainError("I2(m) needs m >= 3")
        return (1, 2 * k - 4)
    raise MalformedInputError(f"unknown Coxeter group label {group!r}")


def exceptional_labels(max_m: int = 12) -> List[str]:
    return list(EXCEPTIONAL_GAMMA) + [f"I2({m})" for m in range(3, max_m + 1)]


# -- flag 2-spheres ------------------------------------------------------------------

def _canonical(g: nx.Graph) -> Tuple:
    """Lexicographically least edge list over relabellings that respect the degree sort."""
    key = {v: (g.degree(v), tuple(sorted(g.degree(u) for u in g[v]))) for v in g}
    nodes = sorted(g, key=key.__getitem__)
    classes: List[List] = []
    for v in nodes:
        if classes and key[classes[-1][0]] == key[v]:
            classes[-1].append(v)
        else:
            classes.append([v])

    best: Optional[Tuple] = None

    def rec(i: int, order: List) -> None:
        nonlocal best
        if i == len(classes):
            pos = {v: k for k, v in enumerate(order)}
            edges = tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.edges()))
            if best is None or edges < best:
                best = edges
            return
        for perm in permutations(classes[i]):
            rec(i + 1, order + list(perm))

    rec(0, [])
    return (g.number_of_nodes(), best)


def _graph_complex(g: nx.Graph) -> Complex:
    mapping = {v: i for i, v in enumerate(sorted(g), start=1)}
    return clique_complex({mapping[v]: {mapping[u] for u in g[v]} for v in g})


def _sphere_candidates(n: int):
    edges = 3 * n - 6
    if n <= 7:
        for g in nx.graph_atlas_g():
            if g.number_of_nodes() == n and g.number_of_edges() == edges:
                yield g
        return
    # n = 8: a vertex of minimum degree has degree 4; delete it to land in the atlas
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != 7 or h.number_of_edges() != edges - 4:
            continue
        for nbrs in combinations(range(7), 4):
            g = h.copy()
            g.add_edges_from((7, u) for u in nbrs)
            yield g


def enumerate_flag_2spheres(max_vertices: int = 8) -> List[Complex]:
    """All flag homology 2-spheres on at most ``max_vertices`` vertices, up to isomorphism.

    Returned complexes have vertices 1..n and are ordered by vertex count, then by
    canonical form.
    """
    if max_vertices > 8:
        raise BudgetExceededError("enumerate_flag_2spheres is limited to max_vertices <= 8")
    found: Dict[Tuple, Complex] = {}
    for n in range(6, max_vertices + 1):
        for g in _sphere_candidates(n):
            # vertex links of a flag 2-sphere are cycles of length >= 4
            if min(d for _, d in g.degree()) < 4 or not nx.is_connected(g):
                continue
            key = _canonical(g)
            if key in found:
                continue
            c = _graph_complex(g)
            if c.dim == 2 and is_homology_sphere(c):
                found[key] = c
    return [found[k] for k in sorted(found)]


# -- a catalog of flag spheres ----------------------------------------------------------

def sphere_catalog(max_vertices: int = 12) -> List[Tuple[str, Complex]]:
    """Named flag spheres: polygons, octahedral spheres, suspensions, polygon joins and
    suspended small 2-spheres, each on at most ``max_vertices`` vertices."""
    out: List[Tuple[str, Complex]] = []
    for n in range(4, max_vertices + 1):
        out.append((f"C{n}", polygon(n)))
    for d in range(2, max_vertices // 2 + 1):
        out.append((f"O{d}", octahedral_sphere(d)))
    for n in range(4, max_vertices - 1):
        out.append((f"S(C{n})", suspension(polygon(n))))
    for n in range(4, max_vertices - 3):
        out.append((f"SS(C{n})", suspension(suspension(polygon(n)))))
    for a in range(4, max_vertices):
        for b in range(a, max_vertices - a + 1):
            out.append((f"C{a}*C{b}", join(polygon(a), polygon(b))))
    for i, s in enumerate(enumerate_flag_2spheres(min(8, max_vertices - 2))):
        if len(s.vertices) > 6:
            out.append((f"S(P{len(s.vertices)}.{i})", suspension(s)))
    return out
