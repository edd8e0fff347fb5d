"""Exact set arithmetic over prime fields.

Subsets of F_p are stored as p-bit masks (bit i set <=> residue i present),
so unions, intersections and translate-accumulate loops are word-parallel
big-int operations.  All arithmetic is exact; nothing here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@lru_cache(maxsize=None)
def _inverse_table(p: int) -> tuple:
    """inv[i] = i^-1 mod p for i in 1..p-1; inv[0] = 0 (never used)."""
    return (0,) + tuple(pow(i, -1, p) for i in range(1, p))


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ModulusMismatchError(ValueError):
    """Two residue sets with different moduli were combined."""


@dataclass(frozen=True)
class ResidueSet:
    """A subset of F_p as a bit array.

    The modulus must be an odd prime: p = 2 has no nontrivial multiplicative
    structure and even/composite moduli are out of scope.
    """

    p: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime >= 3, got {self.p}")
        if self.mask < 0 or self.mask >> self.p:
            raise ValueError("mask has bits outside [0, p-1]")

    @classmethod
    def from_elements(cls, p: int, elements: Iterable[int]) -> "ResidueSet":
        mask = 0
        for x in elements:
            mask |= 1 << (x % p)
        return cls(p, mask)

    def cardinality(self) -> int:
        return self.mask.bit_count()

    def elements(self) -> tuple:
        """Elements as canonical residues, ascending."""
        return tuple(_iter_bits(self.mask))

    def __contains__(self, r: int) -> bool:
        return (self.mask >> (r % self.p)) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        inner = ", ".join(map(str, self.elements()))
        return f"ResidueSet({self.p}, {{{inner}}})"


@dataclass(frozen=True)
class IntervalSpec:
    """The interval {n+1, ..., n+N} reduced mod p.

    N = 0 is permitted as the degenerate witness of the empty set (so that
    is_interval can return a spec for every interval-shaped input); realized
    cardinality always equals N.
    """

    p: int
    n: int
    N: int

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime >= 3, got {self.p}")
        if not 0 <= self.n < self.p:
            raise ValueError(f"start offset n must satisfy 0 <= n < p, got {self.n}")
        if not 0 <= self.N <= self.p:
            raise ValueError(f"length N must satisfy 0 <= N <= p, got {self.N}")


@dataclass(frozen=True)
class ApCover:
    """An arithmetic progression start, start+d, ..., start+(length-1)d mod p."""

    start: int
    difference: int
    length: int

    def __post_init__(self) -> None:
        if self.difference < 1:
            raise ValueError("difference must be a nonzero residue (>= 1)")
        if self.length < 1:
            raise ValueError("length must be >= 1")

    def terms(self, p: int) -> tuple:
        return tuple((self.start + i * self.difference) % p for i in range(self.length))

    def covers(self, x: "ResidueSet") -> bool:
        m = 0
        for t in self.terms(x.p):
            m |= 1 << t
        return x.mask & ~m == 0


def _same_modulus(x: ResidueSet, y: ResidueSet) -> int:
    if x.p != y.p:
        raise ModulusMismatchError(f"moduli differ: {x.p} vs {y.p}")
    return x.p


def _rotl(mask: int, s: int, p: int) -> int:
    # cyclic shift of a p-bit mask; adding s to every residue
    s %= p
    if s == 0:
        return mask
    full = (1 << p) - 1
    return ((mask << s) | (mask >> (p - s))) & full


def make_interval(spec: IntervalSpec) -> ResidueSet:
    block = (1 << spec.N) - 1  # residues 0..N-1
    return ResidueSet(spec.p, _rotl(block, spec.n + 1, spec.p))


def sumset(x: ResidueSet, y: ResidueSet) -> ResidueSet:
    """{a + b : a in X, b in Y} mod p."""
    p = _same_modulus(x, y)
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    acc = 0
    for e in small:
        acc |= _rotl(big.mask, e, p)
    return ResidueSet(p, acc)


def productset(x: ResidueSet, y: ResidueSet) -> ResidueSet:
    """{a * b : a in X, b in Y} mod p."""
    p = _same_modulus(x, y)
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    big_elems = big.elements()
    acc = 0
    for e in small:
        if e == 0:
            if big_elems:
                acc |= 1
        else:
            for f in big_elems:
                acc |= 1 << (e * f % p)
    return ResidueSet(p, acc)


def kfold_sum(k: int, x: ResidueSet) -> ResidueSet:
    """The k-fold sumset X + X + ... + X (k terms), by iterated doubling."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        return x
    half = kfold_sum(k // 2, x)
    acc = sumset(half, half)
    if k % 2:
        acc = sumset(acc, x)
    return acc


def dilate(lam: int, x: ResidueSet) -> ResidueSet:
    """{lam * a : a in X} for lam a nonzero residue."""
    p = x.p
    lam %= p
    if lam == 0:
        raise ValueError("dilation factor must be nonzero mod p")
    acc = 0
    for e in x:
        acc |= 1 << (lam * e % p)
    return ResidueSet(p, acc)


def negate(x: ResidueSet) -> ResidueSet:
    return dilate(x.p - 1, x)


def strip_zero(s: ResidueSet) -> ResidueSet:
    return ResidueSet(s.p, s.mask & ~1)


def is_symmetric(s: ResidueSet) -> bool:
    """True iff S \\ {0} = -(S \\ {0}); membership of 0 is ignored."""
    t = strip_zero(s)
    return t.mask == negate(t).mask


def ap_cover_mod_p(x: ResidueSet, max_length: int) -> Optional[ApCover]:
    """A minimum-length AP mod p containing X, if its length is <= max_length.

    Scans every difference d in [1, (p-1)/2] (d and p-d give reversed covers
    of equal length).  For fixed d the minimal cover corresponds, under
    division by d, to the minimal cyclic interval containing d^-1 * X, which
    hugs the largest cyclic gap.  Ties: smallest difference, then smallest
    start residue.
    """
    n = len(x)
    if n == 0:
        raise ValueError("cover of the empty set is undefined")
    p = x.p
    elems = x.elements()
    if n == 1:
        return ApCover(elems[0], 1, 1) if max_length >= 1 else None
    inv = _inverse_table(p)
    best = None  # (length, difference, start)
    for d in range(1, (p - 1) // 2 + 1):
        dinv = inv[d]
        ys = sorted(e * dinv % p for e in elems)
        best_gap = -1
        starts: list = []
        for i in range(n):
            nxt = ys[(i + 1) % n]
            gap = (nxt - ys[i]) % p
            if gap > best_gap:
                best_gap = gap
                starts = [nxt]
            elif gap == best_gap:
                starts.append(nxt)
        length = p - best_gap + 1
        start = min(s * d % p for s in starts)
        key = (length, d, start)
        if best is None or key < best:
            best = key
    length, d, start = best
    if length > max_length:
        return None
    return ApCover(start, d, length)


def is_interval(s: ResidueSet) -> Optional[IntervalSpec]:
    """The (n, N) witness if S = {n+1,...,n+N} mod p, else None.

    The full set gets the canonical witness (n=0, N=p); the empty set the
    degenerate (n=0, N=0).
    """
    p = s.p
    c = len(s)
    if c == 0:
        return IntervalSpec(p, 0, 0)
    if c == p:
        return IntervalSpec(p, 0, p)
    elems = s.elements()
    if c == 1:
        return IntervalSpec(p, (elems[0] - 1) % p, 1)
    best_gap = -1
    start = 0
    for i in range(c):
        nxt = elems[(i + 1) % c]
        gap = (nxt - elems[i]) % p
        if gap > best_gap:
            best_gap = gap
            start = nxt
    if p - best_gap + 1 != c:
        return None
    return IntervalSpec(p, (start - 1) % p, c)
