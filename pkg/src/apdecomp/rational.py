"""Multiplicative decompositions of rational arithmetic progressions.

Works over Q with fractions.Fraction throughout (exact; Python integers do
not overflow, so the guard against runaway inputs is a magnitude bound on
the normalized target rather than a wraparound check).

Enumeration: scale the target P \\ {0} to a coprime integer set T.  Any
decomposition class of T contains a member whose factors are both coprime
integer sets multiplying exactly to T (scale each factor to coprime
integers: their product is then an integer coprime dilation of T, and the
only such dilations are +-T; a sign flip on one factor fixes -T).  Each
integer factor element divides some element of T, so candidates are the
signed divisors of T's elements and the search is a pruned DFS over that
finite lattice, mirroring the mod-p search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Tuple

from .decomp import TAG_DOUBLING_PAIR, TAG_OTHER, TAG_SYMMETRIC_FACTOR

MAX_NORMALIZED_MAGNITUDE = 10 ** 6

RationalSet = Tuple[Fraction, ...]


class MagnitudeError(Exception):
    """Normalized target exceeds the desk-scale magnitude bound."""


class NotAProgressionError(ValueError):
    """Input set is not an arithmetic progression."""


@dataclass(frozen=True)
class RationalDecomposition:
    """A class representative: first factor in canonical coprime-integer form,
    second factor the exact cofactor, so a * b equals the target P \\ {0}."""

    a: RationalSet
    b: RationalSet
    tag: str


def rational_set(values: Iterable) -> RationalSet:
    """Sorted duplicate-free tuple of Fractions."""
    return tuple(sorted({Fraction(v) for v in values}))


def is_rational_ap(p_set: RationalSet) -> Optional[Tuple[Fraction, Fraction]]:
    """(first, difference) if the sorted set is an AP, else None.

    Singletons count as APs with difference 0.
    """
    if len(p_set) == 0:
        raise ValueError("empty set")
    if len(p_set) == 1:
        return (p_set[0], Fraction(0))
    d = p_set[1] - p_set[0]
    for i in range(2, len(p_set)):
        if p_set[i] - p_set[i - 1] != d:
            return None
    return (p_set[0], d)


def normalize_coprime(x_set: RationalSet) -> Tuple[tuple, Fraction]:
    """(scaled, factor): scaled = factor * X is the coprime integer form, factor > 0."""
    if not x_set:
        raise ValueError("empty set")
    if any(x == 0 for x in x_set):
        raise ValueError("set must not contain zero")
    l = lcm(*(x.denominator for x in x_set))
    g = gcd(*(abs(x.numerator) for x in x_set))
    factor = Fraction(l, g)
    scaled = tuple(int(x * factor) for x in x_set)
    return scaled, factor


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _sign_canonical(ints) -> Tuple[tuple, int]:
    """(canonical, sigma) with canonical = sorted(sigma * ints).

    Convention: the largest-magnitude element is positive; when both +M and
    -M are present the tie is broken by the lexicographically smaller of the
    two sorted orientations.
    """
    s = tuple(sorted(ints))
    neg = tuple(sorted(-x for x in s))
    m = max(-s[0], s[-1])
    has_pos = s[-1] == m
    has_neg = -s[0] == m
    if has_pos and not has_neg:
        return s, 1
    if has_neg and not has_pos:
        return neg, -1
    return (s, 1) if s <= neg else (neg, -1)


def _is_pm(s: tuple) -> bool:
    return len(s) == 2 and s[0] == -s[1]


def _is_doubling_q(s: tuple) -> bool:
    return len(s) == 2 and (s[0] == -2 * s[1] or s[1] == -2 * s[0])


def _classify_pair_q(a: tuple, b: tuple) -> str:
    if _is_pm(a) or _is_pm(b):
        return TAG_SYMMETRIC_FACTOR
    if _is_doubling_q(a) and _is_doubling_q(b):
        return TAG_DOUBLING_PAIR
    return TAG_OTHER


def classify_rational(p_set: Iterable, a, b: Optional[Iterable] = None) -> str:
    """Tag a concrete pair after validating its product against P \\ {0}.

    Accepts either (P, decomposition) or (P, a, b).
    """
    if isinstance(a, RationalDecomposition):
        a, b = a.a, a.b
    target = {x for x in rational_set(p_set) if x != 0}
    a = rational_set(a)
    b = rational_set(b)
    if len(a) < 2 or len(b) < 2:
        raise ValueError("factors must each have at least two elements")
    if 0 in a or 0 in b:
        raise ValueError("factors must avoid zero")
    if {x * y for x in a for y in b} != target:
        raise ValueError("product set does not equal P \\ {0}")
    return _classify_pair_q(a, b)


def special_triple_scale(p_set: Iterable) -> Optional[Fraction]:
    """h such that P \\ {0} = h * {-2, 1, 4}, if one exists."""
    t = [x for x in rational_set(p_set) if x != 0]
    if len(t) != 3:
        return None
    mid = t[1]
    if mid == 0:
        return None
    if t[0] == -2 * mid and t[2] == 4 * mid:  # h > 0: sorted (-2h, h, 4h)
        return mid
    if t[0] == 4 * mid and t[2] == -2 * mid:  # h < 0: sorted (4h, h, -2h)
        return mid
    return None


def rational_decompositions(values: Iterable,
                            max_magnitude: int = MAX_NORMALIZED_MAGNITUDE
                            ) -> List[RationalDecomposition]:
    """All decomposition classes of P \\ {0} for an arithmetic progression P.

    P may contain 0 (it is stripped).  Classes are returned sorted by their
    canonical encoding.  Raises NotAProgressionError for non-AP inputs and
    MagnitudeError when the normalized target exceeds max_magnitude.
    """
    p_set = rational_set(values)
    if is_rational_ap(p_set) is None:
        raise NotAProgressionError("input is not an arithmetic progression")
    return _decompose_target(p_set, max_magnitude)


def _decompose_target(p_set: RationalSet, max_magnitude: int) -> List[RationalDecomposition]:
    target = tuple(x for x in p_set if x != 0)
    if len(target) < 2:
        return []
    t_ints, factor = normalize_coprime(target)
    if max(abs(t) for t in t_ints) > max_magnitude:
        raise MagnitudeError(
            f"normalized target magnitude exceeds {max_magnitude}")
    n_t = len(t_ints)
    t_pos = {t: i for i, t in enumerate(t_ints)}
    full_cover = (1 << n_t) - 1

    divs = sorted({s * d for t in t_ints for d in _divisors(t) for s in (1, -1)})
    nd = len(divs)
    idx = {d: i for i, d in enumerate(divs)}

    # rows[i] = bitmask (over divisor indices) of b with divs[i]*b in target
    rows = []
    for a in divs:
        m = 0
        for t in t_ints:
            if t % a == 0:
                b = t // a
                j = idx.get(b)
                if j is not None:
                    m |= 1 << j
        rows.append(m)

    found: Dict[tuple, RationalDecomposition] = {}

    def emit(a_vals: list, b_vals: list) -> None:
        if {x * y for x in a_vals for y in b_vals} != set(t_ints):
            raise AssertionError("emitted pair fails the product re-check")
        ca, sa = _sign_canonical(a_vals)
        cb, sb = _sign_canonical(b_vals)
        if (cb, ca) < (ca, cb):
            key = (cb, ca)
            first_canon, first_sigma, second_vals = cb, sb, a_vals
        else:
            key = (ca, cb)
            first_canon, first_sigma, second_vals = ca, sa, b_vals
        if key in found:
            return
        rep_a = tuple(Fraction(x) for x in first_canon)
        rep_b = tuple(sorted(Fraction(first_sigma * x) / factor for x in second_vals))
        found[key] = RationalDecomposition(rep_a, rep_b, _classify_pair_q(rep_a, rep_b))

    def enumerate_b(a_vals: list, bmask: int) -> None:
        cands = []
        covers = []
        m = bmask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            b = divs[j]
            c = 0
            for a in a_vals:
                c |= 1 << t_pos[a * b]
            cands.append(b)
            covers.append(c)
        k = len(cands)
        suffix = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix[i] = suffix[i + 1] | covers[i]
        chosen: list = []

        def rec_b(i: int, covered: int) -> None:
            if i == k:
                if covered == full_cover and len(chosen) >= 2:
                    emit(a_vals, list(chosen))
                return
            if covered | suffix[i] != full_cover:
                return
            chosen.append(cands[i])
            rec_b(i + 1, covered | covers[i])
            chosen.pop()
            rec_b(i + 1, covered)

        rec_b(0, 0)

    a_chosen: list = []

    def rec_a(start: int, bmask: int) -> None:
        if len(a_chosen) >= 2 and bmask.bit_count() >= 2:
            enumerate_b(a_chosen, bmask)
        for j in range(start, nd):
            nb = bmask & rows[j]
            cnt = nb.bit_count()
            if cnt < 2:
                continue
            if (len(a_chosen) + 1 + (nd - j - 1)) * cnt < n_t:
                continue
            a_chosen.append(divs[j])
            rec_a(j + 1, nb)
            a_chosen.pop()

    rec_a(0, (1 << nd) - 1)
    return [found[key] for key in sorted(found)]
