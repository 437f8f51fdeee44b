"""f-, h- and gamma-vectors, and the face-number inequalities.

Vectors are tuples of Python ints indexed by face cardinality, so ``f[0]``
is the empty face.  Three independent routes decide whether an integer
vector is an f-vector:

* :func:`kk_check` - the Kruskal-Katona shadow inequalities via cascades;
* :func:`kk_realize_compressed` - build the colex-compressed family and test
  that it is downward closed;
* :func:`fvector_exists` - exhaustive search over small complexes.

The balanced (r-colourable) analogues are :func:`ffk_check`,
:func:`ffk_realize_compressed` and :func:`balanced_fvector_exists`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from .complex import Complex
from .errors import BudgetExceededError, PreconditionError

IntVector = Tuple[int, ...]


# -- polynomials -------------------------------------------------------------

def poly_trim(p: Iterable[int]) -> IntVector:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def poly_add(p: Sequence[int], q: Sequence[int]) -> IntVector:
    n = max(len(p), len(q))
    return poly_trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def poly_mul(p: Sequence[int], q: Sequence[int]) -> IntVector:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_shift(p: Sequence[int], k: int = 1) -> IntVector:
    """Multiply by t**k."""
    return poly_trim((0,) * k + tuple(p))


def gamma_expand(gamma: Sequence[int], d: int) -> IntVector:
    """sum_i gamma_i t^i (1+t)^(d-2i) as a coefficient tuple of length d+1."""
    h = [0] * (d + 1)
    for i, g in enumerate(gamma):
        if not g:
            continue
        if 2 * i > d:
            raise PreconditionError(f"gamma_{i} nonzero but 2*{i} > d={d}")
        for j in range(d - 2 * i + 1):
            h[i + j] += g * comb(d - 2 * i, j)
    return tuple(h)


# -- f <-> h <-> gamma ----------------------------------------------------------

def f_to_h(f: Sequence[int]) -> IntVector:
    """h(t) = (1-t)^d f(t/(1-t)) with d = len(f) - 1."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def h_to_f(h: Sequence[int], d: Optional[int] = None) -> IntVector:
    d = len(h) - 1 if d is None else d
    h = list(h) + [0] * (d + 1 - len(h))
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def is_symmetric(h: Sequence[int]) -> bool:
    return all(h[i] == h[-1 - i] for i in range(len(h)))


def h_to_gamma(h: Sequence[int]) -> IntVector:
    """Coefficients of a symmetric h-polynomial in the basis t^i (1+t)^(d-2i)."""
    if not is_symmetric(h):
        raise PreconditionError(
            f"h = {tuple(h)} is not symmetric; gamma is only defined when the "
            "Dehn-Sommerville relations h_i = h_(d-i) hold"
        )
    d = len(h) - 1
    gamma: List[int] = []
    for i in range(d // 2 + 1):
        gamma.append(h[i] - sum(g * comb(d - 2 * j, i - j) for j, g in enumerate(gamma)))
    return tuple(gamma)


def gamma_to_h(gamma: Sequence[int], d: int) -> IntVector:
    return gamma_expand(gamma, d)


def f_to_gamma(f: Sequence[int]) -> IntVector:
    return h_to_gamma(f_to_h(f))


# -- cascades and Kruskal-Katona -------------------------------------------------

@dataclass(frozen=True)
class Cascade:
    """Greedy expansion a = C(a_i, i) + C(a_(i-1), i-1) + ... + C(a_j, j)."""

    level: int
    terms: Tuple[Tuple[int, int], ...]  # (top a_s, level s), levels decreasing

    @property
    def value(self) -> int:
        return sum(comb(a, s) for a, s in self.terms)

    def shadow(self) -> int:
        return sum(comb(a, s - 1) for a, s in self.terms)


def _max_top(a: int, i: int) -> int:
    """Largest m with C(m, i) <= a (for a >= 1)."""
    lo, hi = i, i + 1
    while comb(hi, i) <= a:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def cascade(a: int, i: int) -> Cascade:
    if a < 0 or i < 1:
        raise PreconditionError("cascade needs a >= 0 and i >= 1")
    terms = []
    level, rest = i, a
    while rest > 0 and level >= 1:
        top = _max_top(rest, level)
        terms.append((top, level))
        rest -= comb(top, level)
        level -= 1
    return Cascade(i, tuple(terms))


def kk_shadow_bound(m: int, k: int) -> int:
    """Fewest (k-1)-sets that can be covered by m distinct k-sets."""
    if k < 1 or m < 0:
        raise PreconditionError("kk_shadow_bound needs m >= 0 and k >= 1")
    return cascade(m, k).shadow()


def kk_violation(v: Sequence[int]):
    """First failed condition as ``(index, shadow, bound)``, or None if ``v`` passes.

    Index 0 flags ``v_0 != 1`` and a negative entry is reported at its own index
    with shadow ``None``.
    """
    v = tuple(v)
    if not v or v[0] != 1:
        return (0, None, 1)
    for i, x in enumerate(v):
        if x < 0:
            return (i, None, 0)
    for i in range(1, len(v) - 1):
        s = kk_shadow_bound(v[i + 1], i + 1)
        if s > v[i]:
            return (i, s, v[i])
    return None


def kk_check(v: Sequence[int]) -> bool:
    return kk_violation(v) is None


def _colex_initial(m: int, k: int) -> List[Tuple[int, ...]]:
    if m > 10**6:
        raise BudgetExceededError("compressed realisation limited to 10^6 sets per level")
    top = k
    while comb(top, k) < m:
        top += 1
    sets = sorted(combinations(range(1, top + 1), k), key=lambda s: s[::-1])
    return sets[:m]


def _closed_levels(levels: List[List[Tuple[int, ...]]]) -> Optional[Complex]:
    faces = {()}
    for fam in levels:
        for s in fam:
            if any(s[:j] + s[j + 1:] not in faces for j in range(len(s))):
                return None
        faces.update(fam)
    return Complex(faces)


def kk_realize_compressed(v: Sequence[int]) -> Optional[Complex]:
    """Take the first v_i i-sets in colex order at every level; None unless closed."""
    v = tuple(v)
    if not v or v[0] != 1 or any(x < 0 for x in v):
        return None
    return _closed_levels([_colex_initial(v[i], i) for i in range(1, len(v))])


# -- balanced complexes (Frankl-Furedi-Kalai) --------------------------------------

def default_colors(v: Sequence[int]) -> int:
    """Largest index holding a positive entry; a (k-1)-dimensional complex needs k colours."""
    top = 0
    for i, x in enumerate(v):
        if x > 0:
            top = i
    return top


def _color_count(N: int, r: int, j: int) -> int:
    # elements 1..N are coloured (x - 1) mod r
    return (N + r - 1 - j) // r


def _elementary(values: Sequence[int], k: int) -> int:
    e = [1] + [0] * k
    for x in values:
        for t in range(k, 0, -1):
            e[t] += e[t - 1] * x
    return e[k]


def _rainbow_count(palette: Tuple[int, ...], k: int, N: int, r: int) -> int:
    return _elementary([_color_count(N, r, j) for j in palette], k)


def _rainbow_shadow(palette: Tuple[int, ...], k: int, m: int, r: int) -> int:
    # Shadow of the first m rainbow k-sets (colours drawn from ``palette``) in colex order.
    if m == 0:
        return 0
    if k == 1:
        return 1
    lo, hi = 0, 1
    while _rainbow_count(palette, k, hi, r) <= m:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _rainbow_count(palette, k, mid, r) <= m:
            lo = mid
        else:
            hi = mid
    N = lo
    rest = m - _rainbow_count(palette, k, N, r)
    present = sum(1 for j in palette if _color_count(N, r, j) > 0)
    full = _rainbow_count(palette, k - 1, N, r) if present >= k else 0
    if rest == 0:
        return full
    colour = N % r  # colour of element N + 1
    stray = 0 if present >= k else rest
    sub = tuple(j for j in palette if j != colour)
    return full + stray + _rainbow_shadow(sub, k - 1, rest, r)


def ffk_shadow_bound(m: int, k: int, r: int) -> int:
    """Fewest (k-1)-sets covered by m k-sets that are rainbow under some r-colouring."""
    if m < 0 or k < 1 or r < 1:
        raise PreconditionError("ffk_shadow_bound needs m >= 0, k >= 1, r >= 1")
    if k > r:
        if m:
            raise PreconditionError(f"no rainbow {k}-sets exist with {r} colours")
        return 0
    return _rainbow_shadow(tuple(range(r)), k, m, r)


def _check_colors(v: Sequence[int], r: Optional[int]) -> int:
    need = default_colors(v)
    if r is None:
        return max(need, 1)
    if r < need:
        raise PreconditionError(f"{r} colours cannot carry faces of size {need}")
    return r


def ffk_violation(v: Sequence[int], r: Optional[int] = None):
    v = tuple(v)
    r = _check_colors(v, r)
    if not v or v[0] != 1:
        return (0, None, 1)
    for i, x in enumerate(v):
        if x < 0:
            return (i, None, 0)
    for i in range(1, len(v) - 1):
        s = ffk_shadow_bound(v[i + 1], i + 1, r)
        if s > v[i]:
            return (i, s, v[i])
    return None


def ffk_check(v: Sequence[int], r: Optional[int] = None) -> bool:
    """Is ``v`` the f-vector of a complex with a proper r-colouring making every face rainbow?"""
    return ffk_violation(v, r) is None


def _rainbow_colex_initial(m: int, k: int, r: int) -> List[Tuple[int, ...]]:
    if m > 10**6:
        raise BudgetExceededError("compressed realisation limited to 10^6 sets per level")
    top = k
    while True:
        sets = [s for s in combinations(range(1, top + 1), k)
                if len({(x - 1) % r for x in s}) == k]
        if len(sets) >= m:
            break
        top += 1
    sets.sort(key=lambda s: s[::-1])
    return sets[:m]


def ffk_realize_compressed(v: Sequence[int], r: int) -> Optional[Complex]:
    """First v_i rainbow i-sets in colex order (element x coloured (x-1) mod r)."""
    v = tuple(v)
    if not v or v[0] != 1 or any(x < 0 for x in v):
        return None
    if any(v[i] for i in range(r + 1, len(v))):
        return None
    return _closed_levels([_rainbow_colex_initial(v[i], i, r) for i in range(1, len(v))])


# -- exhaustive oracles ------------------------------------------------------------

_SUBSET_BUDGET = 1 << 22


def _partitions(n: int, parts: int, largest: Optional[int] = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def _tails(colour: Tuple[int, ...], family: Tuple[Tuple[int, ...], ...], depth: int, acc: set, prefix: tuple):
    have = set(family)
    k = len(family[0]) + 1 if family else 0
    verts = sorted({x for s in family for x in s})
    cand = [
        s for s in combinations(verts, k)
        if len({colour[x] for x in s}) == k and all(s[:j] + s[j + 1:] in have for j in range(k))
    ] if family else []
    if depth == 1:
        for c in range(len(cand) + 1):
            acc.add(prefix + (c,))
        return
    if (1 << len(cand)) > _SUBSET_BUDGET:
        raise BudgetExceededError("exhaustive search space too large")
    for mask in range(1 << len(cand)):
        chosen = tuple(s for b, s in enumerate(cand) if mask >> b & 1)
        if chosen:
            _tails(colour, chosen, depth - 1, acc, prefix + (len(chosen),))
        else:
            acc.add(prefix + (0,) * depth)


@lru_cache(maxsize=None)
def _realizable(n: int, r: int, length: int) -> frozenset:
    # All (f_2, ..., f_(length-1)) over complexes on exactly n vertices with a proper r-colouring.
    acc: set = set()
    for sizes in _partitions(n, r):
        colour = tuple(c for c, s in enumerate(sizes) for _ in range(s))
        _tails(colour, tuple((x,) for x in range(n)), length - 2, acc, ())
    return frozenset(acc)


def balanced_fvector_exists(v: Sequence[int], r: int, nmax: int = 8) -> bool:
    """Exhaustive search for an r-coloured complex with f-vector exactly ``v``."""
    v = list(v)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    if not v or v[0] != 1 or any(x < 0 for x in v):
        return False
    if len(v) == 1:
        return True
    n = v[1]
    if n > nmax or nmax > 12:
        raise BudgetExceededError(f"exhaustive search limited to {min(nmax, 12)} vertices")
    if len(v) == 2:
        return True
    if n == 0:
        return False
    return tuple(v[2:]) in _realizable(n, r, len(v))


def fvector_exists(v: Sequence[int], nmax: int = 8) -> bool:
    """Exhaustive search for any simplicial complex with f-vector ``v``."""
    n = v[1] if len(v) > 1 else 0
    return balanced_fvector_exists(v, max(n, 1), nmax)


# -- Gal's bound ----------------------------------------------------------------------

def gal_34_check(gamma: Sequence[int]) -> bool:
    """0 <= gamma_2 <= gamma_1^2 / 4, with every entry required nonnegative."""
    g = list(gamma) + [0] * max(0, 3 - len(gamma))
    if any(x < 0 for x in g):
        return False
    return 4 * g[2] <= g[1] ** 2
