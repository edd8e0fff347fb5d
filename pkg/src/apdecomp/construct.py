"""Explicit decompositions of long intervals mod p.

Every constructor re-verifies its output by direct product-set computation
and raises VerificationError instead of returning a bad witness, so a
returned ConstructionResult always has verified=True.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .fpset import ResidueSet, is_prime, is_symmetric, productset, strip_zero


class VerificationError(Exception):
    """A constructed witness failed its own product re-check (a bug, not math)."""


@dataclass(frozen=True)
class TwoSquares:
    """p = u^2 + v^2 with 0 < u < v (unique for a prime p = 1 mod 4)."""

    p: int
    u: int
    v: int

    def __post_init__(self) -> None:
        if not (0 < self.u < self.v):
            raise ValueError("require 0 < u < v")
        if self.u * self.u + self.v * self.v != self.p:
            raise ValueError("u^2 + v^2 != p")


@dataclass(frozen=True)
class ConstructionResult:
    interval: ResidueSet
    a: ResidueSet
    b: ResidueSet
    verified: bool


def _verified(interval: ResidueSet, a: ResidueSet, b: ResidueSet) -> ConstructionResult:
    if len(a) < 2 or len(b) < 2:
        raise VerificationError("constructed factor has fewer than two elements")
    if productset(a, b).mask != strip_zero(interval).mask:
        raise VerificationError("constructed product set does not match the target")
    return ConstructionResult(interval, a, b, True)


def sum_two_squares(p: int) -> TwoSquares:
    """Brute-force the unique representation p = u^2 + v^2, u < v."""
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"need a prime p = 1 (mod 4), got {p}")
    for u in range(1, isqrt(p // 2) + 1):
        v2 = p - u * u
        v = isqrt(v2)
        if v * v == v2:
            return TwoSquares(p, u, v)
    raise VerificationError(f"no two-square representation found for {p}")


def sqrt_minus_one(p: int) -> int:
    """h with h^2 = -1 mod p, namely u/v from p = u^2 + v^2."""
    t = sum_two_squares(p)
    h = t.u * pow(t.v, -1, p) % p
    if h * h % p != p - 1:
        raise VerificationError("square root of -1 failed its check")
    return h


def theorem2_decomposition(p: int, L: int) -> ConstructionResult:
    """Decompose {1,...,L} as A*{1,h} where h^2 = -1 mod p.

    Requires p = 1 (mod 4), p != 5, and (p-1)/2 <= L <= p-1.  A collects the
    x in the interval whose image h*x lands back in the interval; |A| >= L/2
    because each target element is x or h^-1*x for some x in A.
    """
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"need a prime p = 1 (mod 4), got {p}")
    if p == 5:
        raise ValueError("p = 5 is excluded (the factor A degenerates)")
    if not (p - 1) // 2 <= L <= p - 1:
        raise ValueError(f"need (p-1)/2 <= L <= p-1, got L={L}")
    h = sqrt_minus_one(p)
    interval = ResidueSet.from_elements(p, range(1, L + 1))
    a = ResidueSet.from_elements(
        p, (x for x in range(1, L + 1) if 1 <= h * x % p <= L))
    b = ResidueSet.from_elements(p, (1, h))
    return _verified(interval, a, b)


def theorem3_decomposition(p: int, k1: int, k2: int) -> ConstructionResult:
    """Decompose {-k1,...,k2} \\ {0} as A*{1,2} for k1, k2 >= 0.4(p-1).

    The bound is exact rational arithmetic: 5*k >= 2*(p-1).  A collects the x
    with both x and 2x in the punctured interval; every target element is
    then x or 2x for some x in A because for each x one of 2x, x/2 lies in
    the interval.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"need an odd prime, got {p}")
    if k1 < 0 or k2 < 0:
        raise ValueError("k1 and k2 must be nonnegative")
    if 5 * k1 < 2 * (p - 1) or 5 * k2 < 2 * (p - 1):
        raise ValueError("need k1, k2 >= 0.4*(p-1) (exactly: 5k >= 2(p-1))")
    interval = ResidueSet.from_elements(p, range(-k1, k2 + 1))
    t = strip_zero(interval)
    a = ResidueSet.from_elements(p, (x for x in t if 2 * x % p in t))
    b = ResidueSet.from_elements(p, (1, 2))
    return _verified(interval, a, b)


def special_triple(p: int, sign: int = 1) -> ConstructionResult:
    """Decompose sign * {t-1, t, t+1}, t = 3^-1 mod p; works for every p >= 5.

    The identity {-1,2} * {-t, 1-t} = {t-1, t, t+1} holds because
    -2t = t - 1 and 2 - 2t = t + 1 mod p.
    """
    if not is_prime(p) or p < 5:
        raise ValueError(f"need a prime p >= 5, got {p}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    t = pow(3, -1, p)
    interval = ResidueSet.from_elements(p, (sign * (t - 1), sign * t, sign * (t + 1)))
    a = ResidueSet.from_elements(p, (-sign, 2 * sign))
    b = ResidueSet.from_elements(p, (-t, 1 - t))
    return _verified(interval, a, b)


def symmetric_decomposition(s: ResidueSet) -> ConstructionResult:
    """Decompose any symmetric set with at least two nonzero elements as {-1,1} * (S \\ {0})."""
    t = strip_zero(s)
    if len(t) < 2:
        raise ValueError("need at least two nonzero elements")
    if not is_symmetric(s):
        raise ValueError("set is not symmetric")
    a = ResidueSet.from_elements(s.p, (1, -1))
    return _verified(s, a, t)
