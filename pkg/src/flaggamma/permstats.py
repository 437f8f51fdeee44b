"""Permutation families whose statistics enumerate gamma-vectors.

Permutations are tuples of the letters 1..n (one-line notation) and positions
are 1-based throughout, so ``descent_set((3, 5, 1, 4, 2)) == (2, 4)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import BudgetExceededError, DomainError, MalformedInputError, PreconditionError

Perm = Tuple[int, ...]

COLORS = (0, 1, 2, 3)


def _budget(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise DomainError(f"{what}: n must be nonnegative")
    if n > cap:
        raise BudgetExceededError(f"{what} is limited to n <= {cap}")


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def descent_set(w: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def peak_set(w: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i in range(2, len(w)) if w[i - 2] < w[i - 1] > w[i])


def peak_set_0(w: Sequence[int]) -> Tuple[int, ...]:
    """Peaks of the word 0w, at positions 1..n-1 of w."""
    return tuple(i for i in range(1, len(w)) if (w[i - 2] if i > 1 else 0) < w[i - 1] > w[i])


def des(w: Sequence[int]) -> int:
    return len(descent_set(w))


def is_pk(w: Sequence[int]) -> bool:
    """No double descents and no final descent."""
    n = len(w)
    if n >= 2 and w[-2] > w[-1]:
        return False
    return not any(w[i - 1] > w[i] > w[i + 1] for i in range(1, n - 1))


def is_312_avoiding(w: Sequence[int]) -> bool:
    """No i < j < k with w_j < w_k < w_i."""
    n = len(w)
    prefix_max = 0
    for j in range(n):
        if any(w[j] < w[k] < prefix_max for k in range(j + 1, n)):
            return False
        prefix_max = max(prefix_max, w[j])
    return True


def _pk_words(n: int, avoid_312: bool) -> Iterator[Perm]:
    # depth-first, pruning double descents (and 312 patterns when asked)
    if n == 0:
        yield ()
        return
    word: List[int] = []
    used = [False] * (n + 1)

    def makes_312(x: int) -> bool:
        # is there an earlier pair a ... b with b < x < a?
        best = 0
        for y in word:
            if y > x:
                best = max(best, y)
            elif best and y < x:
                return True
        return False

    def rec() -> Iterator[Perm]:
        if len(word) == n:
            if n < 2 or word[-2] < word[-1]:
                yield tuple(word)
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            if len(word) >= 2 and word[-2] > word[-1] > x:
                continue
            if avoid_312 and makes_312(x):
                continue
            used[x] = True
            word.append(x)
            yield from rec()
            word.pop()
            used[x] = False

    yield from rec()


def enumerate_pk(n: int) -> List[Perm]:
    _budget(n, 9, "enumerate_pk")
    return list(_pk_words(n, avoid_312=False))


def enumerate_pk312(n: int) -> List[Perm]:
    _budget(n, 10, "enumerate_pk312")
    return list(_pk_words(n, avoid_312=True))


def counts_by(items: Iterable, stat: Callable[..., int]) -> Tuple[int, ...]:
    counts: List[int] = []
    for x in items:
        s = stat(x)
        while len(counts) <= s:
            counts.append(0)
        counts[s] += 1
    return tuple(counts)


# -- Eulerian polynomials ---------------------------------------------------------

def signed_permutations(n: int, even: bool = False) -> Iterator[Perm]:
    """Signed permutations of [n] as tuples of signed values; ``even`` keeps type D only."""
    for w in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if even and signs.count(-1) % 2:
                continue
            yield tuple(s * x for s, x in zip(signs, w))


def type_b_descents(w: Sequence[int]) -> int:
    ext = (0,) + tuple(w)
    return sum(1 for i in range(len(w)) if ext[i] > ext[i + 1])


def type_d_descents(w: Sequence[int]) -> int:
    d = 1 if w[0] + w[1] < 0 else 0
    return d + sum(1 for i in range(1, len(w)) if w[i - 1] > w[i])


def eulerian(kind: str, n: int) -> Tuple[int, ...]:
    """Descent-generating polynomial of the Coxeter group of type A_(n-1), B_n or D_n."""
    kind = kind.upper()
    if kind == "A":
        _budget(n, 8, "eulerian A")
        if n == 0:
            return (1,)
        h = [0] * n
        for w in permutations(range(1, n + 1)):
            h[des(w)] += 1
        return tuple(h)
    if kind == "B":
        _budget(n, 7, "eulerian B")
        h = [0] * (n + 1)
        for w in signed_permutations(n):
            h[type_b_descents(w)] += 1
        return tuple(h)
    if kind == "D":
        _budget(n, 7, "eulerian D")
        if n < 2:
            raise DomainError("type D needs n >= 2")
        h = [0] * (n + 1)
        for w in signed_permutations(n, even=True):
            h[type_d_descents(w)] += 1
        return tuple(h)
    raise DomainError(f"unknown type {kind!r}")


# -- decorated permutations ---------------------------------------------------------

def decperm_problem(word: Sequence[int], bars: Sequence[Tuple[int, int]]) -> Optional[str]:
    """Why ``(word, bars)`` is not a decorated permutation, or None if it is."""
    if not is_permutation(word):
        return f"{tuple(word)} is not a permutation"
    positions = tuple(p for p, _ in bars)
    if positions != peak_set_0(word):
        return f"bars at {positions} but peaks of 0w at {peak_set_0(word)}"
    if any(c not in COLORS for _, c in bars):
        return "bar colours must lie in 0..3"
    return None


def _strictly_decreasing(block: Sequence[int]) -> bool:
    return all(block[i] > block[i + 1] for i in range(len(block) - 1))


def split_block(block: Sequence[int], first: bool = False, last: bool = False) -> Tuple[Perm, Perm]:
    """Split a down-up block into its decreasing and increasing parts.

    The leftmost block has an empty decreasing part; a strictly decreasing
    rightmost block is all decreasing part.
    """
    block = tuple(block)
    if first or not block:
        return (), block
    if last and _strictly_decreasing(block):
        return block, ()
    m = block.index(min(block))
    return block[:m], block[m:]


@dataclass(frozen=True, order=True)
class DecPerm:
    """A permutation with a coloured bar after every peak of 0w.

    ``bars`` holds ``(position, colour)`` pairs, the bar sitting between
    letters ``position`` and ``position + 1``.
    """

    word: Perm
    bars: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "bars", tuple((int(p), int(c)) for p, c in self.bars))
        problem = decperm_problem(self.word, self.bars)
        if problem:
            raise MalformedInputError(problem)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def pk(self) -> int:
        return len(self.bars)

    @property
    def positions(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.bars)

    @property
    def colors(self) -> Tuple[int, ...]:
        return tuple(c for _, c in self.bars)

    def blocks(self) -> List[Perm]:
        cuts = (0,) + self.positions + (self.n,)
        return [self.word[cuts[i]:cuts[i + 1]] for i in range(len(cuts) - 1)]

    def block_parts(self) -> List[Tuple[Perm, Perm]]:
        bl = self.blocks()
        return [split_block(b, first=i == 0, last=i == len(bl) - 1) for i, b in enumerate(bl)]

    def sort_key(self):
        return (self.positions, self.word, self.colors)

    def __str__(self) -> str:
        return render(self)


def render(dp: DecPerm) -> str:
    """Text form such as ``4|0 238|1 76519``; letters are comma separated when n > 9."""
    sep = "," if dp.n > 9 else ""
    blocks = [sep.join(map(str, b)) for b in dp.blocks()]
    out = blocks[0]
    for (_, c), b in zip(dp.bars, blocks[1:]):
        out += f"|{c} {b}"
    return out


_BAR = re.compile(r"\|(?:\^(\d)|(\d)(?=\s))?\s*")


def parse_decperm(text: str) -> DecPerm:
    """Inverse of :func:`render`.  A bare ``|`` has colour 0; otherwise the colour is
    written ``|c`` followed by a space, or ``|^c``."""
    word: List[int] = []
    bars = []

    def letters(chunk: str) -> None:
        chunk = chunk.strip()
        if "," in chunk:
            word.extend(int(x) for x in chunk.split(",") if x.strip())
        else:
            word.extend(int(ch) for ch in chunk if not ch.isspace())

    pos = 0
    try:
        for m in _BAR.finditer(text):
            letters(text[pos:m.start()])
            bars.append((len(word), int(m.group(1) or m.group(2) or 0)))
            pos = m.end()
        letters(text[pos:])
    except ValueError:
        raise MalformedInputError(f"cannot parse decorated permutation {text!r}") from None
    return DecPerm(tuple(word), tuple(bars))


def decorations(w: Perm) -> Iterator[DecPerm]:
    peaks = peak_set_0(w)
    for cols in product(COLORS, repeat=len(peaks)):
        yield DecPerm(w, tuple(zip(peaks, cols)))


def enumerate_decorated(n: int, pk: Optional[int] = None, one_bar: bool = False) -> List[DecPerm]:
    """All of Des_n (optionally only elements with ``pk`` bars)."""
    _budget(n, 7, "enumerate_decorated")
    if one_bar:
        pk = 1
    out = []
    for w in permutations(range(1, n + 1)):
        if pk is not None and len(peak_set_0(w)) != pk:
            continue
        out.extend(decorations(w))
    return out


def is_type_D(dp: DecPerm) -> bool:
    """Membership in the type-D subfamily.

    Excludes words with w_2 < w_1 < w_3 and restricts bars at positions 1 and 2
    to colours 0 and 1.  Missing letters (n < 3) count as larger than all others.
    """
    big = dp.n + 1
    w = dp.word + (big, big, big)
    if w[1] < w[0] < w[2]:
        return False
    return all(c in (0, 1) for p, c in dp.bars if p <= 2)


def enumerate_decorated_D(n: int) -> List[DecPerm]:
    return [dp for dp in enumerate_decorated(n) if is_type_D(dp)]


# -- 312-avoiding peak permutations ----------------------------------------------------

def descent_pairs(w: Sequence[int]) -> List[Tuple[int, int]]:
    """Pairs (w_(i+1), w_i) at the descents of w, for w in Pk_n(312)."""
    if not (is_permutation(w) and is_pk(w) and is_312_avoiding(w)):
        raise PreconditionError(f"{tuple(w)} is not in Pk_n(312)")
    return [(w[i], w[i - 1]) for i in descent_set(w)]


# -- pairs (L, R) --------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class PairTableau:
    """Disjoint equal-size subsets L, R of [n], stored sorted."""

    left: Tuple[int, ...]
    right: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(sorted(self.left)))
        object.__setattr__(self, "right", tuple(sorted(self.right)))
        if len(self.left) != len(self.right):
            raise MalformedInputError("L and R must have the same size")
        if set(self.left) & set(self.right):
            raise MalformedInputError("L and R must be disjoint")

    @property
    def rho(self) -> int:
        return len(self.left)

    @property
    def rows(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(zip(self.left, self.right))


def enumerate_pairs(n: int) -> List[PairTableau]:
    _budget(n, 9, "enumerate_pairs")
    letters = range(1, n + 1)
    out = []
    for k in range(n // 2 + 1):
        for left in combinations(letters, k):
            rest = [x for x in letters if x not in left]
            for right in combinations(rest, k):
                out.append(PairTableau(left, right))
    return out


def multinomial(n: int, *parts: int) -> int:
    if sum(parts) != n or min(parts, default=0) < 0:
        return 0
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


# -- gamma-vectors from the families --------------------------------------------------

def gamma_A(n: int) -> Tuple[int, ...]:
    """Counts of Pk_n by descents."""
    return counts_by(enumerate_pk(n), des)


def gamma_B(n: int) -> Tuple[int, ...]:
    return counts_by(enumerate_decorated(n), lambda dp: dp.pk)


def gamma_D(n: int) -> Tuple[int, ...]:
    return counts_by(enumerate_decorated_D(n), lambda dp: dp.pk)


def gamma_assoc(n: int) -> Tuple[int, ...]:
    return counts_by(enumerate_pk312(n), des)


def gamma_cyc(n: int) -> Tuple[int, ...]:
    return counts_by(enumerate_pairs(n), lambda s: s.rho)


def gamma_cyc_formula(n: int) -> Tuple[int, ...]:
    return tuple(multinomial(n, i, i, n - 2 * i) for i in range(n // 2 + 1))
