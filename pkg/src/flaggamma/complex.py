"""Finite simplicial complexes over small integer vertex ids.

A :class:`Complex` stores its full face set, so every query is a set lookup.
Faces are sorted tuples of vertex ids; the empty face ``()`` is always
present.  Complexes are immutable once built.
"""

from __future__ import annotations

import json
from collections import defaultdict
from itertools import combinations
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple

from .errors import BudgetExceededError, DomainError, MalformedInputError

Face = Tuple[int, ...]

DEFAULT_FACE_BUDGET = 10**7


class Complex:
    """An abstract simplicial complex given by its (downward closed) face set."""

    __slots__ = ("faces", "vertices", "facets", "adjacency", "_by_vertex")

    def __init__(self, faces: Iterable[Face]):
        face_set = frozenset(faces) | {()}
        self.faces: FrozenSet[Face] = face_set
        self.vertices: Tuple[int, ...] = tuple(sorted(f[0] for f in face_set if len(f) == 1))
        adj: Dict[int, set] = {v: set() for v in self.vertices}
        for f in face_set:
            if len(f) == 2:
                a, b = f
                adj[a].add(b)
                adj[b].add(a)
        self.adjacency: Dict[int, FrozenSet[int]] = {v: frozenset(n) for v, n in adj.items()}
        self.facets: Tuple[Face, ...] = _maximal(face_set)
        self._by_vertex = None

    # -- basic queries -------------------------------------------------
    @property
    def dim(self) -> int:
        return max(len(f) for f in self.faces) - 1

    @property
    def fvector(self) -> Tuple[int, ...]:
        """Face counts by cardinality: ``f[0] = 1`` counts the empty face."""
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    @property
    def edges(self) -> List[Face]:
        return sorted(f for f in self.faces if len(f) == 2)

    def faces_of_size(self, k: int) -> List[Face]:
        return sorted(f for f in self.faces if len(f) == k)

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[Face]:
        return iter(sorted(self.faces, key=lambda f: (len(f), f)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Complex) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __repr__(self) -> str:
        return f"Complex(f={list(self.fvector)}, facets={len(self.facets)})"

    def facets_containing(self, face: Face) -> List[Face]:
        if self._by_vertex is None:
            idx = defaultdict(list)
            for i, g in enumerate(self.facets):
                for v in g:
                    idx[v].append(i)
            self._by_vertex = {v: frozenset(ids) for v, ids in idx.items()}
        if not face:
            return list(self.facets)
        ids = self._by_vertex.get(face[0], frozenset())
        for v in face[1:]:
            ids = ids & self._by_vertex.get(v, frozenset())
        return [self.facets[i] for i in sorted(ids)]


def _maximal(face_set: FrozenSet[Face]) -> Tuple[Face, ...]:
    top = max(len(f) for f in face_set)
    covered = set()
    facets = []
    for k in range(top, -1, -1):
        for f in sorted(g for g in face_set if len(g) == k):
            if f not in covered:
                facets.append(f)
            if k > 0:
                covered.update(combinations(f, k - 1))
    return tuple(sorted(facets, key=lambda f: (-len(f), f)))


def _closure(facets: Iterable[Face], budget: int) -> set:
    faces = {()}
    for g in facets:
        if tuple(sorted(g)) in faces:
            continue
        for k in range(1, len(g) + 1):
            faces.update(combinations(g, k))
        if len(faces) > budget:
            raise BudgetExceededError(f"face count exceeds budget {budget}")
    return faces


def _as_face(raw: Iterable[int]) -> Face:
    items = list(raw)
    for x in items:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise MalformedInputError(f"vertex ids must be nonnegative integers, got {x!r}")
    face = tuple(sorted(items))
    if len(set(face)) != len(face):
        raise MalformedInputError(f"duplicate vertex in facet {items}")
    return face


# -- constructors ------------------------------------------------------

def build_from_facets(facets: Iterable[Iterable[int]], budget: int = DEFAULT_FACE_BUDGET) -> Complex:
    """Downward closure of a list of facets."""
    return Complex(_closure([_as_face(g) for g in facets], budget))


def from_faces(faces: Iterable[Iterable[int]]) -> Complex:
    """Build a complex from an explicit face list, which must be downward closed."""
    face_set = {_as_face(f) for f in faces} | {()}
    for f in face_set:
        for sub in combinations(f, len(f) - 1) if f else ():
            if sub not in face_set:
                raise MalformedInputError(f"face {f} present but its subface {sub} is missing")
    return Complex(face_set)


def graph_from_edges(vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> Dict[int, FrozenSet[int]]:
    adj: Dict[int, set] = {v: set() for v in vertices}
    for a, b in edges:
        if a == b:
            raise MalformedInputError(f"loop at vertex {a}")
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return {v: frozenset(n) for v, n in adj.items()}


def iter_cliques(graph: Mapping[int, Iterable[int]]) -> Iterator[Face]:
    """Yield every clique of ``graph`` (including the empty one) as a sorted tuple."""
    order = sorted(graph)
    index = {v: i for i, v in enumerate(order)}
    nbr = [0] * len(order)
    for v, ns in graph.items():
        for u in ns:
            if u not in index:
                raise MalformedInputError(f"edge to unknown vertex {u}")
            if u == v:
                raise MalformedInputError(f"loop at vertex {v}")
            nbr[index[v]] |= 1 << index[u]
            nbr[index[u]] |= 1 << index[v]

    yield ()
    stack = [((i,), nbr[i] >> (i + 1) << (i + 1)) for i in range(len(order) - 1, -1, -1)]
    while stack:
        clique, cand = stack.pop()
        yield tuple(order[i] for i in clique)
        ext = []
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            ext.append((clique + (j,), cand & nbr[j] & ~((low << 1) - 1)))
            cand ^= low
        stack.extend(reversed(ext))


def clique_complex(graph: Mapping[int, Iterable[int]], budget: int = DEFAULT_FACE_BUDGET) -> Complex:
    """The flag complex whose faces are the cliques of ``graph``."""
    faces = []
    for q in iter_cliques(graph):
        faces.append(q)
        if len(faces) > budget:
            raise BudgetExceededError(f"face count exceeds budget {budget}")
    return Complex(faces)


# -- predicates and derived complexes ------------------------------------

def is_flag(c: Complex) -> bool:
    return c.faces == clique_complex(c.adjacency).faces


def _require_face(c: Complex, face: Iterable[int]) -> Face:
    f = tuple(sorted(face))
    if f not in c.faces:
        raise DomainError(f"{f} is not a face of the complex")
    return f


def _require_vertex(c: Complex, v: int) -> None:
    if v not in c.adjacency:
        raise DomainError(f"unknown vertex {v}")


def link(c: Complex, face: Iterable[int] = ()) -> Complex:
    """lk(F) = {G : F ∪ G ∈ c, F ∩ G = ∅}, computed from the facets containing F."""
    f = _require_face(c, face)
    if not f:
        return c
    fs = set(f)
    return Complex(_closure([tuple(v for v in g if v not in fs) for g in c.facets_containing(f)], DEFAULT_FACE_BUDGET))


def induced(c: Complex, vertex_set: Iterable[int]) -> Complex:
    a = set(vertex_set)
    for v in a:
        _require_vertex(c, v)
    return Complex(f for f in c.faces if a.issuperset(f))


def antistar(c: Complex, v: int) -> Complex:
    _require_vertex(c, v)
    return induced(c, set(c.vertices) - {v})


def interior_antistar_vertices(c: Complex, v: int) -> FrozenSet[int]:
    """Vertices other than ``v`` that are not neighbours of ``v``; i(v) is its size."""
    _require_vertex(c, v)
    return frozenset(c.vertices) - c.adjacency[v] - {v}


def suspension(c: Complex, return_apexes: bool = False):
    """Cone ``c`` from two fresh, non-adjacent apex vertices."""
    top = max(c.vertices, default=0)
    a, b = top + 1, top + 2
    faces = set(c.faces)
    for f in c.faces:
        faces.add(f + (a,))
        faces.add(f + (b,))
    s = Complex(faces)
    return (s, (a, b)) if return_apexes else s


def join(c1: Complex, c2: Complex, return_maps: bool = False, budget: int = DEFAULT_FACE_BUDGET):
    """Join of two complexes; ``c2`` is shifted past ``c1`` when their vertex ids overlap."""
    map1 = {v: v for v in c1.vertices}
    if set(c1.vertices) & set(c2.vertices):
        shift = max(c1.vertices) + 1 - min(c2.vertices)
        map2 = {v: v + shift for v in c2.vertices}
    else:
        map2 = {v: v for v in c2.vertices}
    if len(c1.faces) * len(c2.faces) > budget:
        raise BudgetExceededError(f"face count exceeds budget {budget}")
    faces = [tuple(sorted(f1 + tuple(map2[v] for v in f2))) for f1 in c1.faces for f2 in c2.faces]
    j = Complex(faces)
    return (j, map1, map2) if return_maps else j


def contract_edge(c: Complex, u: int, v: int) -> Complex:
    """Identify ``u`` into ``v``: {F : u ∉ F} ∪ {(F - u) ∪ v : u ∈ F}."""
    if tuple(sorted((u, v))) not in c.faces or u == v:
        raise DomainError(f"{{{u}, {v}}} is not an edge")
    out = set()
    for f in c.faces:
        if u in f:
            out.add(tuple(sorted({x for x in f if x != u} | {v})))
        else:
            out.add(f)
    return Complex(out)


def has_induced_4cycle_through(c: Complex, u: int, v: int) -> bool:
    """True iff some induced 4-cycle (v, u, v', u') contains the edge {u, v}."""
    if u == v or v not in c.adjacency.get(u, ()):
        raise DomainError(f"{{{u}, {v}}} is not an edge")
    adj = c.adjacency
    for u2 in interior_antistar_vertices(c, u):
        if v not in adj[u2]:
            continue
        for v2 in interior_antistar_vertices(c, v):
            if u in adj[v2] and v2 in adj[u2]:
                return True
    return False


# -- standard spheres ----------------------------------------------------

def octahedral_sphere(d: int) -> Complex:
    """Boundary of the d-dimensional cross-polytope; antipodal pairs are (2i-1, 2i)."""
    if d < 1:
        raise DomainError("octahedral sphere needs d >= 1")
    graph = {}
    for v in range(1, 2 * d + 1):
        mate = v + 1 if v % 2 else v - 1
        graph[v] = frozenset(u for u in range(1, 2 * d + 1) if u not in (v, mate))
    return clique_complex(graph)


def polygon(n: int) -> Complex:
    """Boundary of an n-gon on vertices 1..n."""
    if n < 3:
        raise DomainError("polygon needs n >= 3")
    return build_from_facets([(i, i % n + 1) for i in range(1, n + 1)])


def simplex_boundary(n: int) -> Complex:
    """All proper subsets of [n]."""
    if n < 2:
        raise DomainError("simplex boundary needs n >= 2")
    return build_from_facets(combinations(range(1, n + 1), n - 1))


def simplex(n: int) -> Complex:
    if n < 1:
        raise DomainError("simplex needs n >= 1")
    return build_from_facets([tuple(range(1, n + 1))])


def empty_sphere() -> Complex:
    """The (-1)-sphere {∅}."""
    return Complex([()])


_STANDARD = {
    "octahedral_sphere": octahedral_sphere,
    "polygon": polygon,
    "simplex_boundary": simplex_boundary,
    "simplex": simplex,
}


def standard_complex(kind: str, k: int) -> Complex:
    try:
        return _STANDARD[kind](k)
    except KeyError:
        raise DomainError(f"unknown standard complex {kind!r}") from None


# -- facet files -----------------------------------------------------------

def parse_facets(text: str) -> List[Face]:
    """Parse the whitespace facet format or its JSON alternative ``{"facets": [...]}``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            raw = data["facets"]
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedInputError(f"bad JSON facet file: {exc}") from None
        if not isinstance(raw, list):
            raise MalformedInputError("'facets' must be a list")
        return [_as_face(f) for f in raw]

    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            ids = [int(tok) for tok in line.split()]
        except ValueError:
            raise MalformedInputError(f"line {lineno}: non-integer token in {line!r}") from None
        try:
            facets.append(_as_face(ids))
        except MalformedInputError as exc:
            raise MalformedInputError(f"line {lineno}: {exc}") from None
    if not facets:
        raise MalformedInputError("no facets found")
    return facets


def read_facets(path, budget: int = DEFAULT_FACE_BUDGET) -> Complex:
    return build_from_facets(parse_facets(Path(path).read_text()), budget=budget)


def format_facets(c: Complex) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in c.facets)


def relabel(c: Complex, mapping: Mapping[int, int]) -> Complex:
    return Complex(tuple(sorted(mapping[v] for v in f)) for f in c.faces)


def normalize(c: Complex) -> Complex:
    """Relabel vertices to 1..n preserving order."""
    return relabel(c, {v: i for i, v in enumerate(c.vertices, start=1)})
