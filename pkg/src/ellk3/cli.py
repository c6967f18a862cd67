"""Command-line front end: classify / verify / hilbert / qseries /
invariant.

Exit codes: 0 on success (and in_U / no failures), 1 on domain-negative
results (not in U, verification failures), 2 on usage or parse errors.
All big integers serialize as decimal strings.
"""

import argparse
import json
import sys
from fractions import Fraction

from .elimination import CONVENTION_TAG
from .hilbert import ORACLE_MAX_DEGREE, character_series, invariant_dimension_oracle, molien_series
from .invariants import DEFAULTS, delta264, k552, r96, slice_divisibility, verify_bulk
from .qseries import borcherds_input
from .scalars import is_prime, scalar_to_str
from .weierstrass import SurfaceParams, fiber_profile


def _emit(data, path):
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_surface(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError("cannot read surface parameters from %s: %s" % (path, e))
    try:
        return SurfaceParams.from_json_dict(raw)
    except (ValueError, TypeError) as e:
        raise UsageError("malformed surface parameters in %s: %s" % (path, e))


class UsageError(Exception):
    pass


def cmd_classify(args):
    u = _load_surface(args.input)
    report = fiber_profile(u)
    _emit(report.to_json_dict(), args.output)
    return 0 if report.in_U else 1


def cmd_verify(args):
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.modulus is not None and not is_prime(args.modulus):
        raise UsageError("--modulus must be prime")
    report = verify_bulk(args.seed, trials=args.trials, modulus=args.modulus)
    _emit(report, args.output)
    return 0 if not report["failures"] else 1


def cmd_hilbert(args):
    N = args.max_degree
    if args.oracle and N > ORACLE_MAX_DEGREE:
        raise UsageError(
            "--oracle refuses t-degrees above %d (got --max-degree %d)"
            % (ORACLE_MAX_DEGREE, N)
        )
    plain, ext = character_series(N)
    rows = []
    for d in range(N + 1):
        row = {"degree": d, "dim": plain[d]}
        if args.with_characters:
            row["dim_with_characters"] = ext[d]
        if args.oracle:
            row["oracle_dim"] = invariant_dimension_oracle(d)
        rows.append(row)
    if args.output and args.output.endswith(".csv"):
        cols = list(rows[0].keys())
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join(str(row[c]) for c in cols))
        with open(args.output, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        _emit(rows, args.output)
    if args.oracle and any(r["dim"] != r["oracle_dim"] for r in rows):
        return 1
    return 0


def cmd_qseries(args):
    N = args.terms - 2  # q^-1 and the constant term count as the first two
    series = borcherds_input(max(N, 0))
    data = {
        "leading_exponent": series.e0,
        "coefficients": [scalar_to_str(Fraction(c)) for c in series.coeffs[: args.terms]],
    }
    _emit(data, args.output)
    return 0


def cmd_invariant(args):
    u = _load_surface(args.input)
    fn = {"r96": r96, "k552": k552, "delta264": delta264}[args.name]
    try:
        val = fn(u)
    except (ZeroDivisionError, ValueError) as e:
        _emit({"name": args.name, "error": str(e)}, args.output)
        return 1
    _emit(
        {
            "name": val.name,
            "value": scalar_to_str(val.value),
            "declared_weight": val.declared_weight,
            "convention_tag": val.convention_tag,
        },
        args.output,
    )
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ellk3",
        description="Exact invariants and fiber geometry of elliptic K3 Weierstrass models",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Kodaira fiber report for a surface parameter file")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify", help="bulk verification of the divisibility/invariance identities")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=DEFAULTS.pointwise_trials)
    p.add_argument("--modulus", type=int)
    p.add_argument("--output")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("hilbert", help="Molien-Weyl Hilbert series (optionally vs the kernel oracle)")
    p.add_argument("--max-degree", type=int, default=24)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--with-characters", action="store_true")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("qseries", help="coefficients of 1728 E4 / (E4^3 - E6^2)")
    p.add_argument("--terms", type=int, default=4)
    p.add_argument("--output")
    p.set_defaults(fn=cmd_qseries)

    p = sub.add_parser("invariant", help="evaluate r96 / k552 / delta264 at a parameter file")
    p.add_argument("name", choices=["r96", "k552", "delta264"])
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(fn=cmd_invariant)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
