"""Command-line surface.

Five subcommands: `analyze` (one set or interval), `construct` (the named
decomposition families), `survey` (every interval over a prime/length grid),
`rational-verify` (exhaustive integer-progression sweep), `lemmas` (seeded
statement probes).

Output is JSONL by default: one record per line with keys in fixed order,
UTF-8, LF line endings, and a summary footer where noted.  CSV is a lossy
flat projection of the same rows (lists joined, no footer).  For a fixed
command line the bytes written are identical across runs and worker counts;
wall-clock timing is therefore pinned to 0 in rendered records.

Exit codes: 0 success, 2 usage error, 3 verification failure, 4 resource
limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, TextIO

from .construct import (VerificationError, special_triple,
                        symmetric_decomposition, theorem2_decomposition,
                        theorem3_decomposition)
from .decomp import (ALL_TAGS, DEFAULT_LIMITS, Decomposition, SearchLimits,
                     SetTooLargeError, analyze_set, classify_decomposition)
from .fpset import IntervalSpec, ResidueSet, is_prime, make_interval, sumset
from .lemmalab import LemmaFalsified, run_default_suites
from .rational import (MAX_NORMALIZED_MAGNITUDE, MagnitudeError,
                       rational_decompositions, special_triple_scale)

# flags whose values may start with "-"; joined to "--flag=value" before
# argparse sees them so negative numbers parse
_JOINED_FLAGS = ("--interval", "--set", "--coeffs", "--primes", "--lengths")

_RANGE_RE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")
_INTERVAL_RE = re.compile(r"^(-?\d+):(-?\d+)$")


def _expand_joined(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _JOINED_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _parse_range(text: str) -> tuple:
    m = _RANGE_RE.match(text)
    if not m:
        raise ValueError(f"expected a range like A..B, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _parse_interval(text: str) -> tuple:
    m = _INTERVAL_RE.match(text)
    if not m:
        raise ValueError(f"expected an interval like a:b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise ValueError(f"interval {text!r} has a > b")
    return a, b


def _parse_set(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def _residues_from_args(args) -> ResidueSet:
    p = args.p
    if not is_prime(p) or p < 3:
        raise ValueError(f"--p must be an odd prime, got {p}")
    if getattr(args, "interval", None) is not None:
        a, b = _parse_interval(args.interval)
        if b - a + 1 > p:
            raise ValueError("interval longer than the modulus")
        return make_interval(IntervalSpec(p, (a - 1) % p, b - a + 1))
    if getattr(args, "set", None) is not None:
        elems = _parse_set(args.set)
        if not elems:
            raise ValueError("--set must name at least one residue")
        return ResidueSet.from_elements(p, elems)
    raise ValueError("need --interval or --set")


# ---------------------------------------------------------------------------
# output plumbing

class _Writer:
    """One record stream; JSONL verbatim, CSV projected onto fieldnames."""

    def __init__(self, fmt: str, stream: TextIO, fieldnames: Sequence[str]):
        self.fmt = fmt
        self.stream = stream
        self.fieldnames = list(fieldnames)
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(stream)
            self._csv.writerow(self.fieldnames)

    @staticmethod
    def _cell(value) -> str:
        if value is None:
            return ""
        if value is True or value is False:
            return "true" if value else "false"
        if isinstance(value, (list, tuple)):
            return "+".join(str(v) for v in value)
        return str(value)

    def record(self, rec: dict) -> None:
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(rec, separators=(",", ":")) + "\n")
        else:
            self._csv.writerow([self._cell(rec.get(k)) for k in self.fieldnames])

    def footer(self, rec: dict) -> None:
        if self.fmt == "jsonl":  # the CSV projection drops summary rows
            self.stream.write(json.dumps(rec, separators=(",", ":")) + "\n")


def _open_out(args):
    if args.out is None:
        return sys.stdout, False
    newline = "\n" if args.format == "jsonl" else ""
    return open(args.out, "w", encoding="utf-8", newline=newline), True


def _elems(s: ResidueSet) -> List[int]:
    return list(s.elements())


def _frs(values) -> List[str]:
    return [str(Fraction(v)) for v in values]


# ---------------------------------------------------------------------------
# analyze

_ANALYZE_FIELDS = ("p", "elements", "symmetric", "special_triple",
                   "class_count", "tags", "nodes_visited", "elapsed_micros")


def cmd_analyze(args) -> int:
    s = _residues_from_args(args)
    report = analyze_set(s, SearchLimits(max_set_size=args.limit))
    rec = {
        "p": s.p,
        "elements": _elems(s),
        "symmetric": report.symmetric,
        "special_triple": report.special_triple,
        "class_count": len(report.classes),
        "tags": sorted(c.tag for c in report.classes),
        "classes": [{"a": _elems(c.representative.a),
                     "b": _elems(c.representative.b),
                     "tag": c.tag,
                     "orbit_size": c.orbit_size} for c in report.classes],
        "nodes_visited": report.nodes_visited,
        "elapsed_micros": 0,
    }
    stream, close = _open_out(args)
    try:
        writer = _Writer(args.format, stream, _ANALYZE_FIELDS)
        if args.format == "csv":
            rec = {k: rec[k] for k in _ANALYZE_FIELDS}  # classes column dropped
        writer.record(rec)
    finally:
        if close:
            stream.close()
    return 0


# ---------------------------------------------------------------------------
# construct

_CONSTRUCT_FIELDS = ("kind", "p", "params", "interval", "a", "b", "tag", "verified")


def cmd_construct(args) -> int:
    kind = args.kind
    params: Dict[str, int] = {}
    if kind == "theorem2":
        if args.L is None:
            raise ValueError("construct theorem2 needs --L")
        result = theorem2_decomposition(args.p, args.L)
        params = {"L": args.L}
    elif kind == "theorem3":
        if args.k1 is None or args.k2 is None:
            raise ValueError("construct theorem3 needs --k1 and --k2")
        result = theorem3_decomposition(args.p, args.k1, args.k2)
        params = {"k1": args.k1, "k2": args.k2}
    elif kind == "triple":
        result = special_triple(args.p, args.sign)
        params = {"sign": args.sign}
    else:  # symmetric
        result = symmetric_decomposition(_residues_from_args(args))
    # independent soundness check at emission time: reclassify, which
    # re-verifies the product equality
    try:
        tag = classify_decomposition(result.interval,
                                     Decomposition(result.a, result.b))
    except ValueError as exc:
        raise VerificationError(str(exc))
    rec = {"kind": kind, "p": args.p}
    rec.update(params)
    rec.update({
        "interval": _elems(result.interval),
        "a": _elems(result.a),
        "b": _elems(result.b),
        "tag": tag,
        "verified": result.verified,
    })
    stream, close = _open_out(args)
    try:
        writer = _Writer(args.format, stream, _CONSTRUCT_FIELDS)
        if args.format == "csv":
            flat = dict(rec)
            flat["params"] = " ".join(f"{k}={v}" for k, v in params.items())
            writer.record(flat)
        else:
            writer.record(rec)
    finally:
        if close:
            stream.close()
    return 0


# ---------------------------------------------------------------------------
# survey

_SURVEY_FIELDS = ("p", "n", "N", "skipped", "symmetric", "special_triple",
                  "class_count", "tags", "nodes_visited", "elapsed_micros")


def _survey_worker(item: tuple) -> dict:
    p, n, length, limit = item
    rec = {"p": p, "n": n, "N": length, "skipped": None, "symmetric": None,
           "special_triple": None, "class_count": None, "tags": None,
           "nodes_visited": None, "elapsed_micros": None}
    if length > p:
        rec["skipped"] = "modulus"
        return rec
    s = make_interval(IntervalSpec(p, n, length))
    try:
        report = analyze_set(s, SearchLimits(max_set_size=limit))
    except SetTooLargeError:
        rec["skipped"] = "limit"
        return rec
    rec.update(
        symmetric=report.symmetric,
        special_triple=report.special_triple,
        class_count=len(report.classes),
        tags=sorted(c.tag for c in report.classes),
        nodes_visited=report.nodes_visited,
        elapsed_micros=0,
    )
    return rec


def cmd_survey(args) -> int:
    p_lo, p_hi = _parse_range(args.primes)
    n_lo, n_hi = _parse_range(args.lengths)
    if n_lo < 0:
        raise ValueError("interval lengths must be nonnegative")
    primes = [p for p in range(max(p_lo, 3), p_hi + 1) if is_prime(p)]
    if not primes:
        raise ValueError(f"no odd primes in {args.primes}")
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    # sorted by (p, N, n); emission preserves this order
    items = [(p, n, length, args.limit)
             for p in primes
             for length in range(n_lo, n_hi + 1)
             for n in range(p)]
    if args.workers == 1:
        records = map(_survey_worker, items)
    else:
        pool = ProcessPoolExecutor(max_workers=args.workers)
        records = pool.map(_survey_worker, items,
                           chunksize=max(1, len(items) // (args.workers * 8)))
    totals = {tag: 0 for tag in ALL_TAGS}
    emitted = skipped = decomposable = 0
    stream, close = _open_out(args)
    try:
        writer = _Writer(args.format, stream, _SURVEY_FIELDS)
        for rec in records:
            writer.record(rec)
            emitted += 1
            if rec["skipped"] is not None:
                skipped += 1
                continue
            if rec["class_count"]:
                decomposable += 1
            for tag in rec["tags"]:
                totals[tag] += 1
        writer.footer({
            "summary": True,
            "records": emitted,
            "skipped": skipped,
            "decomposable": decomposable,
            "tags": {tag: totals[tag] for tag in
                     ("SymmetricFactor", "DoublingPair", "Other")},
        })
    finally:
        if args.workers > 1:
            pool.shutdown()
        if close:
            stream.close()
    return 0


# ---------------------------------------------------------------------------
# rational-verify

_RATIONAL_FIELDS = ("first", "difference", "length", "scale", "a", "b")


def cmd_rational_verify(args) -> int:
    len_lo, len_hi = _parse_range(args.lengths)
    c_lo, c_hi = _parse_range(args.coeffs)
    if len_lo < 2:
        raise ValueError("progression lengths must be >= 2")
    totals = {tag: 0 for tag in ALL_TAGS}
    progressions = decomposable = 0
    bad: Optional[dict] = None
    stream, close = _open_out(args)
    try:
        writer = _Writer(args.format, stream, _RATIONAL_FIELDS)
        for length in range(len_lo, len_hi + 1):
            for first in range(c_lo, c_hi + 1):
                for diff in range(c_lo, c_hi + 1):
                    if diff == 0:  # constant sequences are not progressions
                        continue
                    values = [first + j * diff for j in range(length)]
                    classes = rational_decompositions(values, args.limit)
                    progressions += 1
                    if classes:
                        decomposable += 1
                    for cls in classes:
                        totals[cls.tag] += 1
                        if cls.tag == "Other" and bad is None:
                            bad = {"first": first, "difference": diff,
                                   "length": length, "a": _frs(cls.a),
                                   "b": _frs(cls.b)}
                        if cls.tag == "DoublingPair":
                            target = [v for v in values if v != 0]
                            scale = special_triple_scale(target)
                            if scale is None and bad is None:
                                bad = {"first": first, "difference": diff,
                                       "length": length, "a": _frs(cls.a),
                                       "b": _frs(cls.b),
                                       "error": "not a dilation of {-2,1,4}"}
                            writer.record({
                                "first": first, "difference": diff,
                                "length": length,
                                "scale": str(scale) if scale is not None else None,
                                "a": _frs(cls.a), "b": _frs(cls.b),
                            })
        writer.footer({
            "summary": True,
            "progressions": progressions,
            "decomposable": decomposable,
            "tags": {tag: totals[tag] for tag in
                     ("SymmetricFactor", "DoublingPair", "Other")},
            "other_free": totals["Other"] == 0,
        })
    finally:
        if close:
            stream.close()
    if bad is not None:
        print(f"counterexample: {json.dumps(bad)}", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# lemmas

_LEMMA_FIELDS = ("lemma", "trials", "hypothesis_met", "violations")


def _equality_census(p: int = 11) -> dict:
    """|X+Y| = |X|+|Y|-1 for every pair of intervals (difference-1 APs)."""
    pairs = attained = 0
    for a in range(p):
        x = make_interval(IntervalSpec(p, a, 3))
        for b in range(p):
            y = make_interval(IntervalSpec(p, b, 4))
            pairs += 1
            if len(sumset(x, y)) == min(p, len(x) + len(y) - 1):
                attained += 1
    return {"census": "cauchy_davenport_equality", "p": p,
            "pairs": pairs, "equality_attained": attained}


def cmd_lemmas(args) -> int:
    results = run_default_suites(args.seed, trials=args.trials)
    violations = 0
    stream, close = _open_out(args)
    try:
        writer = _Writer(args.format, stream, _LEMMA_FIELDS)
        for name in ("bourgain", "freiman", "positive_prop_ap",
                     "cauchy_davenport", "close_pair"):
            res = results[name]
            rec = {"lemma": res.name, "trials": res.trials,
                   "hypothesis_met": res.hypothesis_met,
                   "violations": res.violations}
            if res.first_violation is not None:
                rec["first_violation"] = res.first_violation
            writer.record(rec)
            violations += res.violations
        writer.footer(_equality_census())
    finally:
        if close:
            stream.close()
    return 3 if violations else 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apdecomp",
        description="Multiplicative decompositions of intervals and "
                    "progressions: search, constructions, surveys, probes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(sp):
        sp.add_argument("--out", default=None, help="output file (default stdout)")
        sp.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    sp = sub.add_parser("analyze", help="decompose one set or interval mod p")
    sp.add_argument("--p", type=int, required=True)
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--interval", help="a:b for {a,...,b} mod p")
    group.add_argument("--set", help="comma-separated residues")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMITS.max_set_size,
                    help="largest searchable set size")
    add_output(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("construct", help="build one of the named families")
    sp.add_argument("kind", choices=("theorem2", "theorem3", "triple", "symmetric"))
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--L", type=int, default=None)
    sp.add_argument("--k1", type=int, default=None)
    sp.add_argument("--k2", type=int, default=None)
    sp.add_argument("--sign", type=int, choices=(1, -1), default=1)
    sp.add_argument("--interval", help="a:b (symmetric kind only)")
    sp.add_argument("--set", help="comma-separated residues (symmetric kind only)")
    add_output(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("survey", help="scan every interval over a prime grid")
    sp.add_argument("--primes", required=True, help="A..B inclusive prime range")
    sp.add_argument("--lengths", required=True, help="A..B inclusive length range")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMITS.max_set_size)
    sp.add_argument("--workers", type=int, default=1)
    add_output(sp)
    sp.set_defaults(func=cmd_survey)

    sp = sub.add_parser("rational-verify",
                        help="sweep integer progressions and classify every "
                             "decomposition")
    sp.add_argument("--lengths", required=True, help="A..B progression lengths")
    sp.add_argument("--coeffs", required=True,
                    help="A..B range for first term and difference")
    sp.add_argument("--limit", type=int, default=MAX_NORMALIZED_MAGNITUDE,
                    help="largest normalized target magnitude")
    add_output(sp)
    sp.set_defaults(func=cmd_rational_verify)

    sp = sub.add_parser("lemmas", help="seeded probes of the supporting bounds")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--trials", type=int, default=500)
    add_output(sp)
    sp.set_defaults(func=cmd_lemmas)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_expand_joined(raw))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (SetTooLargeError, MagnitudeError) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    except (VerificationError, LemmaFalsified, AssertionError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
