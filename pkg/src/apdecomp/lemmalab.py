"""Checkers for the additive-combinatorics facts the interval results lean on.

Each checker evaluates one statement on one concrete instance and reports a
LemmaVerdict; none of them assert.  Hypotheses and conclusions are compared
in exact integer/rational arithmetic (0.4*(p-1) becomes 5k >= 2(p-1), the
12/5 doubling bound is cross-multiplied, delta powers are Fractions).

The *_suite helpers drive the checkers over seeded-random or constructed
instances; per-trial RNGs are derived from the root seed by string, so a
suite's outcome is independent of execution order.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .fpset import (ResidueSet, ap_cover_mod_p, is_prime, kfold_sum, negate,
                    productset, sumset)


class LemmaFalsified(Exception):
    """A guaranteed witness could not be found; aborts loudly."""


@dataclass(frozen=True)
class LemmaVerdict:
    lemma: str
    hypothesis_satisfied: bool
    conclusion_holds: Optional[bool]
    witness: dict = field(default_factory=dict)


def _require_useful(x: ResidueSet, name: str) -> None:
    if len(x) == 0 or x.mask == 1:
        raise ValueError(f"{name} must be nonempty and not equal {{0}}")


def check_bourgain(x: ResidueSet, y: ResidueSet) -> LemmaVerdict:
    """|8(XY) - 8(XY)| >= (1/2) * min(|X||Y|, p-1) for X, Y != {0}."""
    _require_useful(x, "X")
    _require_useful(y, "Y")
    p = x.p
    prod = productset(x, y)
    s8 = kfold_sum(8, prod)
    diff = sumset(s8, negate(s8))
    bound_num = min(len(x) * len(y), p - 1)  # conclusion: 2|D| >= bound_num
    return LemmaVerdict(
        lemma="bourgain",
        hypothesis_satisfied=True,
        conclusion_holds=2 * len(diff) >= bound_num,
        witness={"p": p, "xy_size": len(prod), "eightfold_size": len(s8),
                 "difference_size": len(diff), "half_bound_times_2": bound_num},
    )


def check_freiman(x: ResidueSet) -> LemmaVerdict:
    """If |X| < p/35 and |2X| < (12/5)|X| - 3, X lies in an AP of <= |2X|-|X|+1 terms."""
    if len(x) == 0:
        raise ValueError("X must be nonempty")
    p = x.p
    two_x = kfold_sum(2, x)
    hyp = 35 * len(x) < p and 5 * len(two_x) < 12 * len(x) - 15
    witness = {"p": p, "size": len(x), "doubling_size": len(two_x)}
    if not hyp:
        return LemmaVerdict("freiman", False, None, witness)
    max_len = len(two_x) - len(x) + 1
    cover = ap_cover_mod_p(x, max_len)
    if cover is not None:
        witness["cover"] = (cover.start, cover.difference, cover.length)
    witness["max_length"] = max_len
    return LemmaVerdict("freiman", True, cover is not None, witness)


def check_positive_prop_ap(x: ResidueSet, m: int) -> LemmaVerdict:
    """If |mX| < min(33m|X|, (p-1)/8) and mX sits in an AP of <= 2|mX| terms,
    then X sits in an AP of <= 132|X| terms."""
    if len(x) == 0:
        raise ValueError("X must be nonempty")
    if m < 1:
        raise ValueError("m must be >= 1")
    p = x.p
    mx = kfold_sum(m, x)
    size_ok = len(mx) < 33 * m * len(x) and 8 * len(mx) < p - 1
    witness = {"p": p, "m": m, "size": len(x), "m_fold_size": len(mx)}
    mx_cover = ap_cover_mod_p(mx, 2 * len(mx)) if size_ok else None
    if not size_ok or mx_cover is None:
        return LemmaVerdict("positive_prop_ap", False, None, witness)
    witness["m_fold_cover"] = (mx_cover.start, mx_cover.difference, mx_cover.length)
    cover = ap_cover_mod_p(x, 132 * len(x))
    if cover is not None:
        witness["cover"] = (cover.start, cover.difference, cover.length)
    return LemmaVerdict("positive_prop_ap", True, cover is not None, witness)


def check_cauchy_davenport(x: ResidueSet, y: ResidueSet) -> LemmaVerdict:
    """|X + Y| >= min(p, |X| + |Y| - 1)."""
    if len(x) == 0 or len(y) == 0:
        raise ValueError("X and Y must be nonempty")
    s = sumset(x, y)
    bound = min(x.p, len(x) + len(y) - 1)
    return LemmaVerdict(
        lemma="cauchy_davenport",
        hypothesis_satisfied=True,
        conclusion_holds=len(s) >= bound,
        witness={"p": x.p, "sum_size": len(s), "bound": bound},
    )


def find_close_pair(xs, delta, k: int, span: int) -> Tuple[int, int]:
    """A pair x1 > x2 from xs with delta^-(k-1)/2 <= x1 - x2 < 2*delta^-k.

    xs must be integers inside a window (r, r+span] with |xs| >= delta*span,
    span > delta^-1 and delta^-k < span; such a pair then exists by
    pigeonhole.  Deterministic choice: smallest x2, then smallest x1.
    Raises LemmaFalsified if no pair qualifies (which would refute the
    statement, not the input).
    """
    xs = sorted(set(int(v) for v in xs))
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError("delta must lie strictly between 0 and 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(xs) < 2:
        raise ValueError("need at least two integers")
    if span <= 1 / delta:
        raise ValueError("need span > 1/delta")
    if xs[-1] - xs[0] > span - 1:
        raise ValueError("xs does not fit a half-open window of the given span")
    if len(xs) < delta * span:
        raise ValueError("need |xs| >= delta * span")
    if delta ** (-k) >= span:
        raise ValueError("need delta^-k < span")
    lower = delta ** (-(k - 1)) / 2
    upper = 2 * delta ** (-k)
    for i, x2 in enumerate(xs):
        j = bisect_left(xs, x2 + lower, i + 1)
        if j < len(xs) and xs[j] - x2 < upper:
            return (xs[j], x2)
    raise LemmaFalsified(
        f"no pair with difference in [{lower}, {upper}) found")


# ---------------------------------------------------------------------------
# seeded suites

@dataclass
class SuiteResult:
    name: str
    trials: int
    hypothesis_met: int
    violations: int
    first_violation: Optional[dict] = None

    def record(self, verdict: LemmaVerdict) -> None:
        if not verdict.hypothesis_satisfied:
            return
        self.hypothesis_met += 1
        if verdict.conclusion_holds is False:
            self.violations += 1
            if self.first_violation is None:
                self.first_violation = dict(verdict.witness)


PRIMES_61 = tuple(p for p in range(3, 62) if is_prime(p))
PRIMES_101 = tuple(p for p in range(3, 102) if is_prime(p))
PRIMES_103_199 = tuple(p for p in range(103, 200) if is_prime(p))
# smallest primes where the doubling hypothesis |2X| < (12/5)|X| - 3 with
# |X| < p/35 is satisfiable at all (needs |X| >= 6, hence p > 210)
PRIMES_FREIMAN_TIGHT = (211, 223, 227, 229)


def _trial_rng(seed: int, suite: str, i: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{i}")


def _random_set(rng: random.Random, p: int, max_size: int,
                allow_zero: bool = True) -> ResidueSet:
    lo = 0 if allow_zero else 1
    size = rng.randint(1, min(max_size, p - lo))
    elems = rng.sample(range(lo, p), size)
    if elems == [0]:
        elems.append(rng.randint(1, p - 1))
    return ResidueSet.from_elements(p, elems)


def bourgain_suite(seed: int, trials: int = 500) -> SuiteResult:
    res = SuiteResult("bourgain", trials, 0, 0)
    for i in range(trials):
        rng = _trial_rng(seed, "bourgain", i)
        p = rng.choice(PRIMES_61)
        x = _random_set(rng, p, 10)
        y = _random_set(rng, p, 10)
        res.record(check_bourgain(x, y))
    return res


def cauchy_davenport_suite(seed: int, trials: int = 500) -> SuiteResult:
    res = SuiteResult("cauchy_davenport", trials, 0, 0)
    for i in range(trials):
        rng = _trial_rng(seed, "cauchy_davenport", i)
        p = rng.choice(PRIMES_101)
        x = _random_set(rng, p, 12)
        y = _random_set(rng, p, 12)
        res.record(check_cauchy_davenport(x, y))
    return res


def freiman_suite(seed: int, random_trials: int = 200, ap_trials: int = 100) -> SuiteResult:
    """Random probes at p in [103,199] plus 6-term APs at the smallest primes
    where the hypothesis is satisfiable (the random probes document that the
    hypothesis is vacuous below p = 211; the AP families make the
    zero-violations claim substantive)."""
    res = SuiteResult("freiman", random_trials + ap_trials, 0, 0)
    for i in range(random_trials):
        rng = _trial_rng(seed, "freiman-random", i)
        p = rng.choice(PRIMES_103_199)
        res.record(check_freiman(_random_set(rng, p, 8, allow_zero=True)))
    for i in range(ap_trials):
        rng = _trial_rng(seed, "freiman-ap", i)
        p = rng.choice(PRIMES_FREIMAN_TIGHT)
        a = rng.randrange(p)
        d = rng.randrange(1, p)
        x = ResidueSet.from_elements(p, ((a + j * d) % p for j in range(6)))
        res.record(check_freiman(x))
    return res


def positive_prop_suite(seed: int, trials: int = 200) -> SuiteResult:
    """Subsets of short APs with m in 2..4; the checker itself confirms the
    hypothesis (size bound plus mX covered by an AP of <= 2|mX| terms)."""
    res = SuiteResult("positive_prop_ap", trials, 0, 0)
    for i in range(trials):
        rng = _trial_rng(seed, "positive-prop", i)
        p = rng.choice(PRIMES_103_199)
        m = rng.randint(2, 4)
        length = rng.randint(2, 5)
        a = rng.randrange(p)
        d = rng.randrange(1, p)
        terms = [(a + j * d) % p for j in range(length)]
        keep = [t for t in terms if rng.random() < 0.8]
        if len(keep) < 2:
            keep = terms[:2]
        res.record(check_positive_prop_ap(ResidueSet.from_elements(p, keep), m))
    return res


def close_pair_suite(seed: int, trials: int = 200) -> SuiteResult:
    res = SuiteResult("close_pair", trials, 0, 0)
    for i in range(trials):
        rng = _trial_rng(seed, "close-pair", i)
        q = rng.randint(2, 12)
        k = rng.randint(1, 3)
        delta = Fraction(1, q)
        base = q ** k
        span = rng.randint(base + 1, 4 * base)
        r = rng.randint(-50, 50)
        need = -(-span // q)  # ceil(span/q) >= delta*span
        size = min(span, max(need, 2))
        xs = rng.sample(range(r + 1, r + span + 1), size)
        try:
            x1, x2 = find_close_pair(xs, delta, k, span)
            lo = delta ** (-(k - 1)) / 2
            hi = 2 * delta ** (-k)
            ok = x1 > x2 and lo <= x1 - x2 < hi
            res.record(LemmaVerdict("close_pair", True, ok,
                                    {"pair": (x1, x2), "delta": str(delta), "k": k}))
        except LemmaFalsified as exc:
            res.record(LemmaVerdict("close_pair", True, False, {"error": str(exc)}))
    return res


def run_default_suites(seed: int, trials: int = 500,
                       close_pairs: int = 200) -> Dict[str, SuiteResult]:
    """The standard battery: seeded random suites plus constructed families."""
    return {
        "bourgain": bourgain_suite(seed, trials),
        "freiman": freiman_suite(seed),
        "positive_prop_ap": positive_prop_suite(seed),
        "cauchy_davenport": cauchy_davenport_suite(seed, trials),
        "close_pair": close_pair_suite(seed, close_pairs),
    }
