"""Command line tools: find, verify, plot, stats.

Exit codes: 0 ok, 1 I/O failure, 2 usage or parse error, 3 not certified.
"""
from __future__ import annotations

import argparse
import ast
import logging
import sys
from collections import Counter, defaultdict
from pathlib import Path

import numpy as np

from .certifier import DEFAULT_THRESHOLD, NewtonConfig, certify, polish_and_certify
from .classification import morse_signature, rotation_number
from .csvio import CsvFormatError, read_csv, write_csv
from .dynamics import reflection_residual
from .errors import BilliardError, InvalidInputError
from .functional import as_params, evaluate
from .geometry import BoundarySpec
from .identity import canonicalize
from .runner import RESIDUAL_TOL, RunConfig, run
from .svg import render_svg

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_UNCERTIFIED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_theta(text: str) -> np.ndarray:
    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError):
        raise UsageError(f"cannot parse parameter list {text!r}") from None
    if not isinstance(value, (list, tuple)) or len(value) < 2:
        raise UsageError("expected a bracketed list of at least 2 numbers")
    if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
        raise UsageError("parameter list must contain only numbers")
    try:
        return as_params(value)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None


def make_spec(p: float) -> BoundarySpec:
    try:
        return BoundarySpec(p)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None


def summary_lines(records) -> list[str]:
    """Per-signature table plus the rotation split inside each signature."""
    total = len(records)
    by_sig = defaultdict(list)
    for r in records:
        by_sig[r.signature].append(r)
    lines = [f"{'Signature':<12}{'Count':>8}{'Percent':>10}  {'Rotations':<28}Perimeter range"]
    order = sorted(by_sig, key=lambda s: (-len(by_sig[s]), tuple(s)))
    for sig in order:
        recs = by_sig[sig]
        rots = sorted({r.rotation for r in recs}, key=lambda q: q.r / q.s)
        per = [r.perimeter for r in recs]
        lines.append(
            f"{str(sig):<12}{len(recs):>8}{100 * len(recs) / total:>9.1f}%  "
            f"{', '.join(map(str, rots)):<28}[{min(per):.4f}, {max(per):.4f}]"
        )
    lines.append(f"{'total':<12}{total:>8}")
    for sig in order:
        recs = by_sig[sig]
        lines.append(f"rotation split within {sig}:")
        counts = Counter(r.rotation for r in recs)
        for rot in sorted(counts, key=lambda q: q.r / q.s):
            lines.append(f"  {str(rot):<6}{counts[rot]:>8}  ({100 * counts[rot] / len(recs):.1f}%)")
    return lines


def cmd_find(args) -> int:
    spec = make_spec(args.p)
    if args.N < 2:
        raise UsageError("N must be >= 2")
    if args.n_seeds < 1:
        raise UsageError("n_seeds must be >= 1")
    try:
        newton = NewtonConfig(max_steps=args.max_steps, threshold=args.threshold)
        config = RunConfig(spec, args.N, args.n_seeds, rng_seed=args.rng_seed, newton=newton,
                           batch_size=args.batch_size, workers=args.workers)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    report = run(config)
    out = Path(args.out or f"p{args.p}_N{args.N}_orbits.csv")
    try:
        write_csv(out, args.p, report.records, args.N)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"p={args.p} N={args.N} seeds={args.n_seeds} rng_seed={args.rng_seed}")
    print(f"certified seeds: {report.n_certified}, unique orbits: {len(report.records)}")
    if report.failures:
        print("failures: " + ", ".join(f"{k}={v}" for k, v in sorted(report.failures.items())))
    if report.records:
        print("\n".join(summary_lines(report.records)))
    exp = report.power_law_exponent
    print("power-law exponent: " + ("n/a (fewer than 3 batches)" if exp is None else f"{exp:.4f}"))
    print(f"wrote {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = make_spec(args.p)
    theta = parse_theta(args.theta)
    try:
        cert = certify(spec, theta, args.threshold)
    except BilliardError as exc:
        print(f"degenerate input: {exc}")
        return EXIT_USAGE
    print(f"N = {theta.size}")
    print(f"alpha = {cert.alpha:.6e}  beta = {cert.beta:.6e}  gamma = {cert.gamma_s:.6e}")
    print(f"certified: {cert.certified} (threshold {cert.threshold})")

    refined = polish_and_certify(spec, theta, NewtonConfig(threshold=args.threshold))
    target = refined.theta if refined.failure is None else theta
    if refined.failure is not None:
        print(f"newton refinement failed ({refined.failure}); classifying the input point")
    try:
        ev = evaluate(spec, target)
        sig = morse_signature(ev.hessian)
        rot = rotation_number(canonicalize(target).theta)
        resid = reflection_residual(spec, target).max_residual
    except BilliardError as exc:
        print(f"classification failed: {exc}")
        return EXIT_UNCERTIFIED
    print("refined theta = [" + ", ".join(f"{t:.12f}" for t in target) + "]")
    print(f"perimeter = {ev.value:.12f}")
    print(f"signature = {sig}  rotation = {rot}")
    print(f"reflection residual = {resid:.3e}")
    if cert.certified and refined.failure is None and resid < RESIDUAL_TOL:
        return EXIT_OK
    return EXIT_UNCERTIFIED


def cmd_plot(args) -> int:
    if args.csv is not None:
        if args.p is not None:
            raise UsageError("give either --csv or p and theta, not both")
        try:
            rows = read_csv(args.csv)
        except OSError as exc:
            raise UsageError(f"cannot read {args.csv}: {exc}") from None
        except CsvFormatError as exc:
            raise UsageError(str(exc)) from None
        if not 0 <= args.row < len(rows):
            raise UsageError(f"row {args.row} out of range (file has {len(rows)} rows)")
        row = rows[args.row]
        spec, theta = make_spec(row.p), row.record.theta
        sig, rot = row.record.signature, row.record.rotation
        default_out = Path(args.csv).with_suffix("").name + f"_row{args.row}.svg"
    else:
        if args.p is None or args.theta is None:
            raise UsageError("plot needs --csv FILE --row K, or p and a theta list")
        spec, theta = make_spec(float(args.p)), parse_theta(args.theta)
        try:
            sig = morse_signature(evaluate(spec, theta).hessian)
            rot = rotation_number(theta)
        except BilliardError as exc:
            raise UsageError(str(exc)) from None
        default_out = "orbit.svg"
    out = Path(args.out or default_out)
    label = f"{sig}, {rot}   p = {spec.p:g}"
    try:
        out.write_text(render_svg(spec, theta, label), encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {out}")
    return EXIT_OK


def cmd_stats(args) -> int:
    try:
        rows = read_csv(args.csv)
    except OSError as exc:
        raise UsageError(f"cannot read {args.csv}: {exc}") from None
    except CsvFormatError as exc:
        raise UsageError(f"malformed CSV, {exc}") from None
    records = [r.record for r in rows]
    print(f"{len(records)} orbits in {args.csv}")
    if records:
        print("\n".join(summary_lines(records)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lpbilliards", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("find", help="search for certified periodic orbits")
    f.add_argument("p", type=float)
    f.add_argument("N", type=int)
    f.add_argument("n_seeds", type=int)
    f.add_argument("--rng-seed", type=int, default=0)
    f.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    f.add_argument("--max-steps", type=int, default=50)
    f.add_argument("--batch-size", type=int, default=1000)
    f.add_argument("--workers", type=int, default=1)
    f.add_argument("--out")
    f.set_defaults(func=cmd_find)

    v = sub.add_parser("verify", help="certify one parameter vector")
    v.add_argument("p", type=float)
    v.add_argument("theta", help='bracketed list, e.g. "[0.0657, 0.375, 0.6843]"')
    v.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    v.set_defaults(func=cmd_verify)

    pl = sub.add_parser("plot", help="render an orbit as SVG")
    pl.add_argument("p", nargs="?")
    pl.add_argument("theta", nargs="?")
    pl.add_argument("--csv")
    pl.add_argument("--row", type=int, default=0, help="0-based data row index")
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_plot)

    st = sub.add_parser("stats", help="summarise a CSV of orbits")
    st.add_argument("--csv", required=True)
    st.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
