"""Command-line front end.

One subcommand per analysis.  Default output is a short human-readable
summary; --format csv or json switches to the machine schema, --out writes
it to a file.  Exit codes: 0 success, 1 invariant or assertion failure,
2 usage error (including polynomial parse errors).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from ._util import env_int, fmt15, round15
from .asymptotics import (
    EULER_GAMMA,
    gd_constant,
    gdk_constant,
    generalized_product,
    mertens_product,
)
from .bounds import (
    CLASSIC_REFERENCE,
    bound_scan,
    curve_rows,
    envelope_crossing,
    pi3_inequality_check,
    pi_decomposition,
)
from .density import density_trace, report_rows, scan_densities
from .errors import PolytotError
from .modular import classify
from .polynomial import MODULUS_MAX, Polynomial, fixed_divisor, parse_polynomial, to_text
from .totient import phi_p_bruteforce, phi_p_lemma
from .selftest import run_selftest


def _poly_arg(text: str) -> Polynomial:
    try:
        return parse_polynomial(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _n_arg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if not (2 <= n <= MODULUS_MAX):
        raise argparse.ArgumentTypeError(f"n must be in [2, 2^63), got {n}")
    return n


def _pos_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _checkpoints_arg(text: str) -> list[int]:
    try:
        cps = [int(t.strip()) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid checkpoint list {text!r}") from None
    if any(b <= a for a, b in zip(cps, cps[1:])):
        raise argparse.ArgumentTypeError("checkpoints must be strictly ascending")
    return cps


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("csv", "json"), default=None,
                    help="machine-readable output instead of the summary text")
    sp.add_argument("--out", metavar="PATH", default=None, help="write output to a file")
    sp.add_argument("--threads", type=_pos_int, default=env_int("POLYTOT_THREADS", 1),
                    help="worker threads for batch operations")
    sp.add_argument("--budget", type=_pos_int, default=None,
                    help="sieve budget override (default from POLYTOT_BUDGET)")
    sp.add_argument("--seed", type=int, default=42, help="seed for randomized checks")
    sp.add_argument("--force", action="store_true",
                    help="proceed when the irreducibility screen returns unknown")


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit(args, lines: list[str], rows: list[dict], obj) -> None:
    """Render one of the three forms. CSV cells print floats at 15
    significant digits; JSON numbers are rounded the same way."""
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: fmt15(v) if isinstance(v, float) else v for k, v in r.items()})
        _write(args, buf.getvalue())
    elif args.format == "json":
        _write(args, json.dumps(_round_floats(obj), indent=2) + "\n")
    else:
        _write(args, "".join(line + "\n" for line in lines))


def _round_floats(obj):
    if isinstance(obj, float):
        return round15(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _cmd_phi(args) -> int:
    brute = phi_p_bruteforce(args.polynomial, args.n, threads=args.threads)
    lemma = phi_p_lemma(args.polynomial, args.n)
    agree = brute.value == lemma.value
    lines = [f"phi_P({args.n}) = {lemma.value} (bruteforce={brute.value}, lemma={lemma.value})"]
    rows = [{"n": args.n, "bruteforce": brute.value, "lemma": lemma.value}]
    obj = {"n": args.n, "bruteforce": brute.value, "lemma": lemma.value, "agree": agree}
    _emit(args, lines, rows, obj)
    if not agree:
        print(f"mismatch: bruteforce={brute.value} lemma={lemma.value}", file=sys.stderr)
        return 1
    return 0


def _cmd_delta(args) -> int:
    d = fixed_divisor(args.polynomial)
    txt = to_text(args.polynomial)
    _emit(args, [str(d)], [{"polynomial": txt, "delta": d}], {"polynomial": txt, "delta": d})
    return 0


def _cmd_roots(args) -> int:
    rec = classify(args.polynomial, args.p)
    lines = [f"f={rec.f} g={rec.g}"]
    row = {
        "p": rec.p,
        "f": rec.f,
        "g": rec.g,
        "reduced_degree": rec.reduced_degree,
        "ramified": rec.ramified,
    }
    _emit(args, lines, [row], row)
    return 0


def _cmd_density(args) -> int:
    cps = args.checkpoints if args.checkpoints else [args.limit]
    reports = density_trace(args.polynomial, cps, threads=args.threads, budget=args.budget)
    lines = []
    rows = []
    objs = []
    for rep in reports:
        lines.append(
            f"X={rep.X} total={rep.total} weighted_sum={fmt15(rep.weighted_sum)}"
            f" excluded={','.join(map(str, rep.excluded)) or '-'}"
        )
        for r in report_rows(rep):
            lines.append(
                f"  k={r['k']} count={r['count']} alpha_hat={fmt15(r['alpha_hat'])}"
                f" recip_sum={fmt15(r['recip_sum'])}"
            )
        if len(reports) == 1:
            rows.extend(report_rows(rep))
        else:
            rows.extend({"X": rep.X, **r} for r in report_rows(rep))
        objs.append(
            {
                "X": rep.X,
                "total": rep.total,
                "weighted_sum": rep.weighted_sum,
                "recip_total": rep.recip_total,
                "excluded": list(rep.excluded),
                "rows": report_rows(rep),
            }
        )
    _emit(args, lines, rows, objs[0] if len(objs) == 1 else objs)
    return 0


def _trace_cmd(args, fn) -> int:
    xs = args.checkpoints if args.checkpoints else [args.limit]
    lines = []
    rows = []
    for x in xs:
        tr = fn(x)
        lines.append(f"x={tr.x} value={fmt15(tr.value)} normalized={fmt15(tr.normalized)}")
        rows.append({"x": tr.x, "value": tr.value, "normalized": tr.normalized})
    _emit(args, lines, rows, rows if len(rows) > 1 else rows[0])
    return 0


def _cmd_mertens(args) -> int:
    if args.d == 1:
        return _trace_cmd(args, lambda x: mertens_product(x, budget=args.budget))
    return _trace_cmd(args, lambda x: generalized_product(args.d, x, budget=args.budget))


def _cmd_gd(args) -> int:
    if args.polynomial is not None:
        if args.k is None:
            raise ValueError("class product needs -k together with -P")
        return _trace_cmd(
            args,
            lambda x: gdk_constant(
                args.polynomial, args.k, x, threads=args.threads, budget=args.budget
            ),
        )
    return _trace_cmd(args, lambda x: gd_constant(args.d, x, budget=args.budget))


def _cmd_bound(args) -> int:
    rep = bound_scan(
        args.polynomial,
        args.limit,
        epsilon=args.epsilon,
        exponent_mode=args.mode,
        custom_exponent=args.exponent,
        threads=args.threads,
        budget=args.budget,
        force=args.force,
    )
    lines = [
        f"scan n in [{rep.range[0]}, {rep.range[1]}] mode={rep.exponent_mode}"
        f" exponent={fmt15(rep.exponent)} epsilon={fmt15(rep.epsilon)}",
        f"min_ratio={fmt15(rep.min_ratio)} argmin={rep.argmin}"
        f" skipped={rep.skipped} zeros={rep.zeros}",
    ]
    if rep.polynomial.degree == 1 and rep.exponent == 1.0:
        lines.append(f"classic reference e^-gamma = {fmt15(CLASSIC_REFERENCE)}")
    rows = curve_rows(rep, stride=args.stride)
    obj = {
        "polynomial": to_text(rep.polynomial),
        "exponent": rep.exponent,
        "epsilon": rep.epsilon,
        "exponent_mode": rep.exponent_mode,
        "range": list(rep.range),
        "skipped": rep.skipped,
        "zeros": rep.zeros,
        "min_ratio": rep.min_ratio,
        "argmin": rep.argmin,
    }
    _emit(args, lines, rows, obj)
    if rep.zeros == 0 and rep.min_ratio <= 0.0:
        return 1
    return 0


def _cmd_pi3(args) -> int:
    if args.n is None and not args.crossing:
        raise ValueError("need -n for a check, or --crossing for the envelope report")
    lines = []
    rows = []
    obj = {"polynomial": to_text(args.polynomial)}
    status = 0
    if args.n is not None:
        chk = pi3_inequality_check(args.polynomial, args.n)
        dec = pi_decomposition(args.polynomial, args.n)
        lines.append(
            f"n={chk.n} pi1={fmt15(dec.pi1)} pi2={fmt15(dec.pi2)} pi3={fmt15(dec.pi3)}"
        )
        lines.append(
            f"pi3={fmt15(chk.pi3)} >= envelope={fmt15(chk.envelope)}: {chk.holds}"
        )
        rows.append(
            {
                "n": chk.n,
                "pi1": dec.pi1,
                "pi2": dec.pi2,
                "pi3": chk.pi3,
                "envelope": chk.envelope,
                "holds": chk.holds,
            }
        )
        obj.update(rows[0])
        if not chk.holds:
            status = 1
    if args.crossing:
        cross = envelope_crossing(args.polynomial.degree)
        lines.append(
            f"envelope reaches 0.99 near log10(n) = {fmt15(cross)}"
            " (far beyond any direct scan)"
        )
        rows.append({"d": args.polynomial.degree, "log10_crossing": cross})
        obj["log10_crossing"] = cross
    _emit(args, lines, rows, obj)
    return status


def _cmd_selftest(args) -> int:
    ok, lines = run_selftest(seed=args.seed, threads=args.threads)
    rows = []
    for line in lines:
        status, rest = line.split(None, 1)
        name, detail = rest.split(None, 1)
        rows.append({"suite": name, "status": status, "detail": detail})
    lines = lines + ["all suites passed" if ok else "FAILURES present"]
    _emit(args, lines, rows, {"ok": ok, "suites": rows})
    return 0 if ok else 1


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polytot",
        description="Totients of integer polynomials: exact counts, splitting "
        "densities, Mertens products, lower-bound scans.",
        epilog="Coefficient lists starting with a minus sign need the attached "
        "form: --polynomial=-2,0,0,1",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="phi_P(n) by brute force and by the product formula")
    p.add_argument("-P", "--polynomial", type=_poly_arg, required=True,
                   help="coefficients, constant term first, e.g. '1,0,1'")
    p.add_argument("-n", type=_n_arg, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("delta", help="fixed divisor of P")
    p.add_argument("-P", "--polynomial", type=_poly_arg, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("roots", help="root counts of P mod p")
    p.add_argument("-P", "--polynomial", type=_poly_arg, required=True)
    p.add_argument("-p", type=_n_arg, required=True, help="prime modulus")
    _add_common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("density", help="splitting-class statistics up to a limit")
    p.add_argument("-P", "--polynomial", type=_poly_arg, required=True)
    p.add_argument("-x", "--limit", type=_n_arg, default=10**6)
    p.add_argument("--checkpoints", type=_checkpoints_arg, default=None,
                   help="comma-separated ascending limits, one report each")
    _add_common(p)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("mertens", help="prime product (1 - d/p) and its normalization")
    p.add_argument("-d", type=_pos_int, default=1)
    p.add_argument("-x", "--limit", type=_n_arg, default=10**6)
    p.add_argument("--checkpoints", type=_checkpoints_arg, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_mertens)

    p = sub.add_parser("gd", help="convergent correction product, plain or per class")
    p.add_argument("-d", type=_pos_int, default=2)
    p.add_argument("-x", "--limit", type=_n_arg, default=10**6)
    p.add_argument("-P", "--polynomial", type=_poly_arg, default=None,
                   help="with -k: restrict to primes where P has k roots")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--checkpoints", type=_checkpoints_arg, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_gd)

    p = sub.add_parser("bound", help="scan phi_P(n) (log log n)^e / n over n <= X")
    p.add_argument("-P", "--polynomial", type=_poly_arg, required=True)
    p.add_argument("-x", "--limit", type=_n_arg, default=10**6)
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--mode", choices=("qd-empirical", "safe-d", "custom"),
                   default="qd-empirical")
    p.add_argument("--exponent", type=float, default=None,
                   help="full exponent for --mode custom")
    p.add_argument("--stride", type=_pos_int, default=1,
                   help="downsample the CSV curve, keeping the minimizing n")
    _add_common(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("pi3", help="tail-factor inequality at one n, or the envelope report")
    p.add_argument("-P", "--polynomial", type=_poly_arg, required=True)
    p.add_argument("-n", type=_n_arg, default=None)
    p.add_argument("--crossing", action="store_true",
                   help="report where the tail envelope reaches 0.99")
    _add_common(p)
    p.set_defaults(func=_cmd_pi3)

    p = sub.add_parser("selftest", help="run the reduced-scale consistency suites")
    _add_common(p)
    p.set_defaults(func=_cmd_selftest)

    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (PolytotError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"invariant failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
