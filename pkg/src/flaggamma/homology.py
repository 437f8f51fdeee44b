"""Reduced Betti numbers over the rationals and the homology-sphere test.

Ranks of boundary matrices are computed exactly by sparse fraction-free
elimination on integer rows.  Torsion is invisible over Q; that is adequate
for the small complexes handled here.
"""

from __future__ import annotations

from math import gcd
from typing import Dict, List, Tuple

from .complex import DEFAULT_FACE_BUDGET, Complex, link
from .errors import BudgetExceededError


def _rank(rows: List[Dict[int, int]]) -> int:
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        r = dict(row)
        while r:
            col = min(r)
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            a, b = p[col], r[col]
            out = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                x = out.get(k, 0) - b * v
                if x:
                    out[k] = x
                else:
                    out.pop(k, None)
            g = 0
            for v in out.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                out = {k: v // g for k, v in out.items()}
            r = out
    return len(pivots)


def boundary_rank(c: Complex, k: int) -> int:
    """Rank of the boundary map from faces of size k to faces of size k-1 (k >= 1)."""
    lower = {f: i for i, f in enumerate(c.faces_of_size(k - 1))}
    rows = []
    for f in c.faces_of_size(k):
        row = {}
        for j in range(k):
            row[lower[f[:j] + f[j + 1:]]] = -1 if j % 2 else 1
        rows.append(row)
    return _rank(rows)


def betti(c: Complex, budget: int = DEFAULT_FACE_BUDGET) -> Tuple[int, ...]:
    """Reduced Betti numbers in degrees -1..dim (index 0 is degree -1)."""
    if len(c.faces) > budget:
        raise BudgetExceededError(f"{len(c.faces)} faces exceed budget {budget}")
    f = c.fvector
    top = len(f) - 1
    # rank of the map from size-k faces; the augmentation counts as k = 1
    ranks = [0] + [boundary_rank(c, k) for k in range(1, top + 1)] + [0]
    return tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))


def sphere_betti(dim: int) -> Tuple[int, ...]:
    return tuple(1 if k == dim + 1 else 0 for k in range(dim + 2))


def euler_characteristic(c: Complex) -> int:
    """Reduced Euler characteristic sum_k (-1)^(k-1) f_k, with f indexed by face size."""
    return sum((-1) ** (k - 1) * x for k, x in enumerate(c.fvector))


def is_homology_sphere(c: Complex, budget: int = DEFAULT_FACE_BUDGET) -> bool:
    """Every link lk(F), including lk(∅) = c, has the Betti numbers of a (dim - |F|)-sphere."""
    if len(c.faces) > budget:
        raise BudgetExceededError(f"{len(c.faces)} faces exceed budget {budget}")
    d = c.dim
    for face in sorted(c.faces, key=lambda f: (-len(f), f)):
        lk = link(c, face)
        if lk.dim != d - len(face) or betti(lk) != sphere_betti(d - len(face)):
            return False
    return True
