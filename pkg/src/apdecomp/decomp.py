"""Enumerate and classify multiplicative decompositions A*B = S \\ {0} in F_p.

A decomposition is a pair of sets A, B of nonzero residues, each of size at
least two, whose elementwise product set equals S \\ {0} exactly.  Pairs are
grouped into classes under (A, B) ~ (c*A, c^-1*B) for nonzero c and under
swapping the factors.

Search: every class has a member with 1 in B (dilate by any element of B),
and then A = A*1 is forced to be a subset of the target.  So we DFS over
subsets A of the target in increasing element order, maintain
B_max(A) = intersection of a^-1 * target over a in A, prune when B_max is
too small to admit |B| >= 2 or when even (|A| + remaining)*|B_max| cannot
cover the target, and at each node enumerate all subsets B of B_max
containing 1 whose product with A covers the target.  Sub-maximal B must be
enumerated too: classes with B strictly inside B_max(A) are still classes.
Every emitted pair is re-verified by direct multiplication before it is
recorded.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .fpset import ResidueSet, _inverse_table, _iter_bits, is_symmetric, productset, strip_zero

TAG_SYMMETRIC_FACTOR = "SymmetricFactor"
TAG_DOUBLING_PAIR = "DoublingPair"
TAG_OTHER = "Other"
ALL_TAGS = (TAG_DOUBLING_PAIR, TAG_OTHER, TAG_SYMMETRIC_FACTOR)


class SetTooLargeError(Exception):
    """|S \\ {0}| exceeds the configured search limit; caller should skip."""


@dataclass(frozen=True)
class SearchLimits:
    max_set_size: int = 18


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class Decomposition:
    a: ResidueSet
    b: ResidueSet


@dataclass(frozen=True)
class DecompositionClass:
    """One equivalence class: lexicographically least member, tag, orbit size."""

    representative: Decomposition
    tag: str
    orbit_size: int

    def key(self) -> Tuple[tuple, tuple]:
        return (self.representative.a.elements(), self.representative.b.elements())


@dataclass
class SetReport:
    residues: ResidueSet
    symmetric: bool
    special_triple: bool
    classes: List[DecompositionClass]
    nodes_visited: int
    elapsed_micros: int


# ---------------------------------------------------------------------------
# classification

def _is_plus_minus(p: int, elems: tuple) -> bool:
    # {-r, r} for some nonzero r
    return len(elems) == 2 and (elems[0] + elems[1]) % p == 0


def _is_doubling(p: int, elems: tuple) -> bool:
    # {-r, 2r} for some nonzero r
    if len(elems) != 2:
        return False
    x, y = elems
    return (y + 2 * x) % p == 0 or (x + 2 * y) % p == 0


def _classify_elems(p: int, a_elems: tuple, b_elems: tuple) -> str:
    if _is_plus_minus(p, a_elems) or _is_plus_minus(p, b_elems):
        return TAG_SYMMETRIC_FACTOR
    if _is_doubling(p, a_elems) and _is_doubling(p, b_elems):
        return TAG_DOUBLING_PAIR
    return TAG_OTHER


def classify_decomposition(s: ResidueSet, dec: Decomposition) -> str:
    """Tag a concrete pair after validating it against S \\ {0}."""
    if dec.a.p != s.p or dec.b.p != s.p:
        raise ValueError("decomposition modulus does not match the set")
    if len(dec.a) < 2 or len(dec.b) < 2:
        raise ValueError("factors must each have at least two elements")
    if 0 in dec.a or 0 in dec.b:
        raise ValueError("factors must avoid zero")
    if productset(dec.a, dec.b).mask != strip_zero(s).mask:
        raise ValueError("product set does not equal S \\ {0}")
    return _classify_elems(s.p, dec.a.elements(), dec.b.elements())


def is_special_triple(s: ResidueSet) -> bool:
    """True iff S \\ {0} = h * {-2, 1, 4} for some nonzero h.

    Since h*1 = h lies in the set, trying each element as h is exhaustive.
    """
    p = s.p
    elems = strip_zero(s).elements()
    if len(elems) != 3:
        return False
    target = set(elems)
    for h in elems:
        if {(-2 * h) % p, h, 4 * h % p} == target:
            return True
    return False


# ---------------------------------------------------------------------------
# canonicalization

def _canonical_orbit(p: int, a_elems, b_elems) -> Tuple[tuple, int]:
    """Least (sorted A, sorted B) encoding over the class orbit, and its size.

    The orbit of ordered pairs under dilation is swap-closed once both
    (c*A, c^-1*B) and (c*B, c^-1*A) are generated, so the canonical form is
    simply the minimum member and orbit_size the number of distinct members.
    """
    inv = _inverse_table(p)
    a = tuple(sorted(x % p for x in a_elems))
    b = tuple(sorted(x % p for x in b_elems))
    members = set()
    for lam in range(1, p):
        lam_inv = inv[lam]
        da = tuple(sorted(lam * x % p for x in a))
        db = tuple(sorted(lam_inv * x % p for x in b))
        members.add((da, db))
        members.add((tuple(sorted(lam * x % p for x in b)),
                     tuple(sorted(lam_inv * x % p for x in a))))
    return min(members), len(members)


# ---------------------------------------------------------------------------
# search

class _StopSearch(Exception):
    pass


def _search(s: ResidueSet, limits: SearchLimits, stop_at_first: bool = False):
    """Core DFS; returns ({canonical key: orbit size}, nodes visited)."""
    p = s.p
    target = strip_zero(s)
    t_elems = target.elements()
    size = len(t_elems)
    if size < 2:
        return {}, 0
    if size > limits.max_set_size:
        raise SetTooLargeError(
            f"|S \\ {{0}}| = {size} exceeds search limit {limits.max_set_size}")
    t_mask = target.mask
    inv = _inverse_table(p)

    # rows[a] = bitmask of all b with a*b in the target
    rows = {}
    for a in t_elems:
        ia = inv[a]
        m = 0
        for t in t_elems:
            m |= 1 << (ia * t % p)
        rows[a] = m

    found: Dict[tuple, int] = {}
    nodes = 0

    def emit(a_list: list, b_list: list) -> None:
        prod = 0
        for a in a_list:
            for b in b_list:
                prod |= 1 << (a * b % p)
        if prod != t_mask:  # soundness re-check at emission
            raise AssertionError("emitted pair fails the product re-check")
        key, orbit = _canonical_orbit(p, a_list, b_list)
        if key not in found:
            found[key] = orbit
            if stop_at_first:
                raise _StopSearch

    def enumerate_b(a_list: list, bmax_mask: int) -> None:
        nonlocal nodes
        cands = [b for b in _iter_bits(bmax_mask) if b != 1]
        covers = []
        for b in cands:
            c = 0
            for a in a_list:
                c |= 1 << (a * b % p)
            covers.append(c)
        base = 0
        for a in a_list:
            base |= 1 << a  # A * {1}
        suffix = [0] * (len(cands) + 1)
        for i in range(len(cands) - 1, -1, -1):
            suffix[i] = suffix[i + 1] | covers[i]
        chosen: list = []

        def rec_b(i: int, covered: int) -> None:
            nonlocal nodes
            nodes += 1
            if i == len(cands):
                if covered == t_mask and chosen:
                    emit(a_list, [1] + chosen)
                return
            if covered | suffix[i] != t_mask:
                return
            chosen.append(cands[i])
            rec_b(i + 1, covered | covers[i])
            chosen.pop()
            rec_b(i + 1, covered)

        rec_b(0, base)

    a_chosen: list = []

    def rec_a(start: int, bmax_mask: int) -> None:
        nonlocal nodes
        nodes += 1
        if len(a_chosen) >= 2:
            enumerate_b(a_chosen, bmax_mask)
        for j in range(start, size):
            nb = bmax_mask & rows[t_elems[j]]
            cnt = nb.bit_count()
            if cnt < 2:
                continue
            if (len(a_chosen) + 1 + (size - j - 1)) * cnt < size:
                continue
            a_chosen.append(t_elems[j])
            rec_a(j + 1, nb)
            a_chosen.pop()

    try:
        rec_a(0, (1 << p) - 1)
    except _StopSearch:
        pass
    return found, nodes


def _classes_from_found(p: int, found: Dict[tuple, int]) -> List[DecompositionClass]:
    out = []
    for key in sorted(found):
        ka, kb = key
        rep = Decomposition(ResidueSet.from_elements(p, ka),
                            ResidueSet.from_elements(p, kb))
        out.append(DecompositionClass(rep, _classify_elems(p, ka, kb), found[key]))
    return out


def find_decompositions(s: ResidueSet,
                        limits: SearchLimits = DEFAULT_LIMITS) -> List[DecompositionClass]:
    """All decomposition classes of S \\ {0}, sorted by canonical encoding."""
    found, _ = _search(s, limits)
    return _classes_from_found(s.p, found)


def is_decomposable(s: ResidueSet, limits: SearchLimits = DEFAULT_LIMITS) -> bool:
    found, _ = _search(s, limits, stop_at_first=True)
    return bool(found)


def analyze_set(s: ResidueSet, limits: SearchLimits = DEFAULT_LIMITS) -> SetReport:
    """Full report: symmetry, special-triple shape, classes, search statistics."""
    t0 = time.perf_counter_ns()
    found, nodes = _search(s, limits)
    elapsed = (time.perf_counter_ns() - t0) // 1000
    return SetReport(
        residues=s,
        symmetric=is_symmetric(s),
        special_triple=is_special_triple(s),
        classes=_classes_from_found(s.p, found),
        nodes_visited=nodes,
        elapsed_micros=elapsed,
    )


# ---------------------------------------------------------------------------
# independent oracle

def naive_oracle(s: ResidueSet) -> List[Decomposition]:
    """Exhaustive reference enumeration for |S \\ {0}| <= 8.

    Same 1-in-B normalization as the search but no bitmasks, no pruning and
    no canonicalization: plain set arithmetic over all subsets.  Returns raw
    pairs; callers canonicalize when comparing against find_decompositions.
    """
    p = s.p
    t = sorted(strip_zero(s).elements())
    if len(t) > 8:
        raise ValueError("naive oracle is limited to |S \\ {0}| <= 8")
    tset = set(t)
    out: List[Decomposition] = []
    for r in range(2, len(t) + 1):
        for a in itertools.combinations(t, r):
            bmax = [b for b in range(1, p) if all(x * b % p in tset for x in a)]
            rest = [b for b in bmax if b != 1]
            for k in range(1, len(rest) + 1):
                for extra in itertools.combinations(rest, k):
                    b = (1,) + extra
                    prod = {x * y % p for x in a for y in b}
                    if prod == tset:
                        out.append(Decomposition(ResidueSet.from_elements(p, a),
                                                 ResidueSet.from_elements(p, b)))
    return out


def canonical_key(s_or_p, dec: Decomposition) -> tuple:
    """Canonical class encoding of a concrete pair (for cross-path comparison)."""
    p = s_or_p if isinstance(s_or_p, int) else s_or_p.p
    key, _ = _canonical_orbit(p, dec.a.elements(), dec.b.elements())
    return key
