"""Command-line entry point.

Every subcommand prints a JSON document (``"schema": 1``) by default, or a
CSV / markdown table with ``--format``.  Exit codes: 0 success, 1 usage
error, 2 verification failure, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import claims as claims_mod
from .algebra import parse_rational
from .characters import DEFAULT_TABLE, character
from .hurwitz import ORACLE_MAX_N, hurwitz_number, hurwitz_number_oracle
from .measures import (CONVENTIONS, DEFAULT_CONVENTION, ZeroPartitionFunctionError, measure_theta,
                       measure_xi, partition_function)
from .partitions import Partition, enumerate_partitions, partitions_with_colength
from .semiclassics import (hurwitz_series_combination, partition_function_series, weight_series,
                           weighted_hurwitz_series)
from .suites import EXIT_FAILED, EXIT_OK, EXIT_USAGE, SUITES, run_suite
from .tau import content_product, verify_generating_identity
from .weights import KINDS, WeightModel, colength_profile, weight_profile

SCHEMA = 1
FORMATS = ("json", "csv", "md")
CACHE_ENV = "HURWITZ_CACHE_DIR"


class UsageError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    """Comma-separated positive integers, sorted decreasingly; ``""`` or ``"[]"`` is empty."""
    text = text.strip()
    if text in ("", "[]"):
        return Partition()
    try:
        parts = [int(p) for p in text.strip("[]").split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition.from_parts(parts)


def parse_rational_list(text: str) -> tuple:
    return tuple(parse_rational(t) for t in text.split(",") if t.strip())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _typed(fn, label):
    def convert(text):
        try:
            return fn(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise argparse.ArgumentTypeError(f"invalid {label} {text!r}: {exc}")
    convert.__name__ = label
    return convert


RATIONAL = _typed(parse_rational, "rational")
PARTITION = _typed(parse_partition, "partition")
RATIONALS = _typed(parse_rational_list, "rational list")


def parse_profiles(text: str) -> list:
    """Semicolon-separated partitions, e.g. ``"2,1;3;2,1"``."""
    return [parse_partition(t) for t in text.split(";")]


PROFILES = _typed(parse_profiles, "profile list")


def _positive(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


NONNEG = _typed(_positive, "integer")


def _add_model(p, required=True):
    p.add_argument("--model", choices=KINDS, required=required, default=None if required else "eprime")
    p.add_argument("--q", type=RATIONAL, help="deformation parameter, 0 < q < 1 (quantum models)")
    p.add_argument("--c", type=RATIONALS, default=(), help="comma-separated parameters (product models)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qhurwitz", description="Exact weighted Hurwitz numbers and their expansions.")
    parser.add_argument("--format", choices=FORMATS, default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("partitions", help="list partitions of n")
    p.add_argument("--n", type=NONNEG, required=True)
    p.add_argument("--colength", type=NONNEG)

    p = sub.add_parser("character", help="irreducible character value")
    p.add_argument("--lambda", dest="lam", type=PARTITION, required=True)
    p.add_argument("--mu", type=PARTITION, required=True)

    p = sub.add_parser("hurwitz", help="Hurwitz number of a list of profiles")
    p.add_argument("--profiles", type=PROFILES, required=True, help='semicolon-separated, e.g. "2,1;3;2,1"')
    p.add_argument("--n", type=NONNEG, help="degree (default: weight of the first profile)")
    p.add_argument("--oracle", action="store_true", help="also compute the class-algebra value")

    p = sub.add_parser("weight", help="weight of a colength profile or of a list of branch profiles")
    _add_model(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", type=PARTITION, help="colength profile")
    group.add_argument("--profiles", type=PROFILES, help='branch profiles, e.g. "2,1,1;3,1"')
    p.add_argument("--n", type=NONNEG, help="degree the branch profiles must partition")

    p = sub.add_parser("zfun", help="partition function z_d")
    _add_model(p)
    p.add_argument("--d", type=NONNEG, required=True)

    p = sub.add_parser("measure", help="profile measure xi or configuration measure theta")
    _add_model(p)
    p.add_argument("--d", type=NONNEG, required=True)
    p.add_argument("--n", type=NONNEG, help="degree of the cover (configuration space)")
    p.add_argument("--space", choices=("profiles", "configs"),
                   help="profiles: measure on colength profiles; configs: on configurations "
                        "(default: configs when --n is given)")

    p = sub.add_parser("semiclassical", help="expansions at q = exp(-epsilon)")
    _add_model(p)
    p.add_argument("--d", type=NONNEG, required=True)
    p.add_argument("--what", choices=("zfun", "weights", "hurwitz"), default="zfun")
    p.add_argument("--order", type=NONNEG, default=2)
    p.add_argument("--mu", type=PARTITION)
    p.add_argument("--nu", type=PARTITION)
    p.add_argument("--n", type=NONNEG, help="cover degree for the hurwitz combination (default 2d)")

    p = sub.add_parser("content-product", help="content product as a beta-series")
    _add_model(p)
    p.add_argument("--lambda", dest="lam", type=PARTITION, required=True)
    p.add_argument("--order", type=NONNEG, default=4)

    p = sub.add_parser("tau-verify", help="compare tau coefficients with weighted Hurwitz numbers")
    _add_model(p)
    p.add_argument("--n", type=NONNEG, required=True)
    p.add_argument("--dmax", type=NONNEG, default=3)
    p.add_argument("--convention", choices=CONVENTIONS, default=DEFAULT_CONVENTION)

    p = sub.add_parser("claims-report", help="stated coefficients against exact recomputation")
    p.add_argument("--dmax", type=NONNEG, default=5)

    p = sub.add_parser("suite", help="run a verification suite")
    p.add_argument("name", choices=SUITES)
    p.add_argument("--budget", type=float, help="time budget in seconds")
    p.add_argument("--out", type=Path, help="write the report here instead of standard output")

    # allow --format after the subcommand as well
    for p in sub.choices.values():
        p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    return parser


def _model(args) -> WeightModel:
    if args.model in ("product", "inverse-product"):
        if not args.c:
            raise UsageError(f"model {args.model} needs --c")
        return WeightModel(args.model, args.c)
    if args.c:
        raise UsageError(f"--c does not apply to model {args.model}")
    model = WeightModel(args.model)
    if model.is_quantum:
        if args.q is None:
            raise UsageError(f"model {args.model} needs --q")
        if not 0 < args.q < 1:
            raise UsageError(f"--q must lie strictly between 0 and 1, got {args.q}")
    elif args.q is not None:
        raise UsageError(f"--q does not apply to model {args.model}")
    return model


def _quantum_model(args) -> WeightModel:
    if args.model not in ("eprime", "e", "h"):
        raise UsageError(f"expansions are defined for eprime, e and h, not {args.model}")
    if args.q is not None:
        raise UsageError("--q does not apply to expansions (q = exp(-epsilon))")
    return WeightModel(args.model)


def _text(v) -> str:
    if isinstance(v, (Partition, list, tuple)):
        return ",".join(map(str, v))
    return str(v)


class Output:
    """A JSON payload plus a flat table for csv / markdown."""

    def __init__(self, payload: dict, header=None, rows=None):
        self.payload = {"schema": SCHEMA, **payload}
        self.header = header or ["value"]
        self.rows = rows if rows is not None else []

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.header)
            w.writerows([[_text(c) for c in row] for row in self.rows])
            return buf.getvalue()
        lines = ["| " + " | ".join(self.header) + " |", "|" + "---|" * len(self.header)]
        lines += ["| " + " | ".join(_text(c) for c in row) + " |" for row in self.rows]
        return "\n".join(lines) + "\n"


def cmd_partitions(args):
    parts = partitions_with_colength(args.n, args.colength) if args.colength is not None \
        else enumerate_partitions(args.n)
    return Output({"n": args.n, "partitions": [list(p) for p in parts]}, ["partition"], [[p] for p in parts])


def cmd_character(args):
    value = character(args.lam, args.mu)
    return Output({"lambda": list(args.lam), "mu": list(args.mu), "value": str(value)},
                  ["lambda", "mu", "value"], [[args.lam, args.mu, value]])


def cmd_hurwitz(args):
    profiles = args.profiles
    n = args.n if args.n is not None else profiles[0].weight
    value = hurwitz_number(profiles, n)
    payload = {"profiles": [list(p) for p in profiles], "n": n, "value": str(value)}
    row = [";".join(_text(p) for p in profiles), value]
    header = ["profiles", "value"]
    if args.oracle:
        if n > ORACLE_MAX_N:
            raise UsageError(f"the class-algebra oracle is limited to n <= {ORACLE_MAX_N}")
        oracle = hurwitz_number_oracle(profiles, n)
        payload["oracle"] = str(oracle)
        row.append(oracle)
        header.append("oracle")
    return Output(payload, header, [row])


def cmd_weight(args):
    model = _model(args)
    if args.profiles is not None:
        n = args.n if args.n is not None else args.profiles[0].weight
        for mu in args.profiles:
            if mu.weight != n:
                raise UsageError(f"profile {_text(mu)} is not a partition of n={n}")
        lam = colength_profile(args.profiles)
    else:
        if args.n is not None:
            raise UsageError("--n applies to --profiles only")
        lam = args.lam
    value = weight_profile(model, lam, args.q)
    payload = {"model": model.to_json(), "q": _opt(args.q), "lambda": list(lam), "value": str(value)}
    if args.profiles is not None:
        payload["profiles"] = [list(p) for p in args.profiles]
    return Output(payload, ["lambda", "value"], [[lam, value]])


def _opt(q):
    return None if q is None else str(q)


def cmd_zfun(args):
    model = _model(args)
    value = partition_function(model, args.d, args.q)
    return Output({"model": model.to_json(), "q": _opt(args.q), "d": args.d, "value": str(value)},
                  ["d", "value"], [[args.d, value]])


def cmd_measure(args):
    model = _model(args)
    space = args.space or ("profiles" if args.n is None else "configs")
    if space == "configs" and args.n is None:
        raise UsageError("--space configs needs --n")
    if space == "profiles":
        table = measure_xi(model, args.d, args.q)
    else:
        table = measure_theta(model, args.n, args.d, args.q)
    payload = {"q": _opt(args.q), "d": args.d, "n": args.n, "space": space, "measure": table.to_json()}
    return Output(payload, ["key", "mass"], table.rows())


def cmd_semiclassical(args):
    model = _quantum_model(args)
    payload = {"model": model.to_json(), "d": args.d, "order": args.order, "what": args.what}
    if args.d < 1:
        raise UsageError("--d must be at least 1")
    if args.what == "zfun":
        s = partition_function_series(model, args.d, args.order)
        payload["series"] = s.to_json()
        rows = [[k, s.coeff(k)] for k in range(s.order) if k >= 0]
        return Output(payload, ["epsilon_power", "coefficient"], rows)
    if args.what == "weights":
        out, rows = [], []
        for lam in enumerate_partitions(args.d):
            s = weight_series(model, lam, args.order)
            out.append({"lambda": list(lam), "series": s.to_json()})
            rows += [[lam, k, s.coeff(k)] for k in range(s.min_exp, s.order)]
        payload["weights"] = out
        return Output(payload, ["lambda", "epsilon_power", "coefficient"], rows)
    if args.order > 2:
        raise UsageError("hurwitz expansions are available through order 2")
    if (args.mu is None) != (args.nu is None):
        raise UsageError("--mu and --nu go together")
    if args.mu is not None:
        coeffs = weighted_hurwitz_series(model, args.mu, args.nu, args.d, args.order)
        payload.update({"mu": list(args.mu), "nu": list(args.nu), "coefficients": [str(c) for c in coeffs]})
        return Output(payload, ["epsilon_power", "coefficient"], [[k, c] for k, c in enumerate(coeffs)])
    n = args.n if args.n is not None else 2 * args.d
    comb = hurwitz_series_combination(model, n, args.d, args.order)
    keys = sorted(comb)
    payload["n"] = n
    payload["combination"] = [{"branches": [list(p) for p in k], "coefficients": [str(c) for c in comb[k]]}
                              for k in keys]
    rows = [[";".join(_text(p) for p in k)] + comb[k] for k in keys]
    return Output(payload, ["branches"] + [f"epsilon^{k}" for k in range(args.order + 1)], rows)


def cmd_content_product(args):
    model = _model(args)
    if args.order < 1:
        raise UsageError("--order must be at least 1")
    cp = content_product(model, args.lam, args.q, args.order)
    return Output(cp.to_json(), ["beta_power", "coefficient"],
                  [[k, cp.series.coeff(k)] for k in range(cp.series.order)])


def cmd_tau_verify(args):
    model = _model(args)
    if args.n > 5 or args.dmax > 4:
        raise UsageError("tau-verify supports n <= 5 and dmax <= 4")
    cases = verify_generating_identity(model, args.n, args.q, args.dmax, args.convention)
    ok = all(c.equal for c in cases)
    payload = {"model": model.to_json(), "q": _opt(args.q), "n": args.n, "dmax": args.dmax,
               "convention": args.convention, "all_equal": ok, "cases": [c.to_json() for c in cases]}
    rows = [[c.mu, c.nu, c.d, c.tau, c.hurwitz, c.equal] for c in cases]
    return Output(payload, ["mu", "nu", "d", "tau", "hurwitz", "equal"], rows), (EXIT_OK if ok else EXIT_FAILED)


def cmd_claims_report(args):
    if not 1 <= args.dmax <= 6:
        raise UsageError("--dmax must lie in 1..6")
    records = claims_mod.claims_report(args.dmax)
    out = Output({"dmax": args.dmax, "claims": [r.to_json() for r in records]},
                 ["id", "status", "claimed", "computed"],
                 [[r.claim_id, r.status, json.dumps(claims_mod.to_jsonable(r.claimed)),
                   json.dumps(claims_mod.to_jsonable(r.computed))] for r in records])
    return out


def cmd_suite(args):
    code, report = run_suite(args.name, args.budget)
    rows = [[c["check"], "pass" if c["passed"] else "FAIL", c["detail"]] for c in report["checks"]]
    payload = {k: v for k, v in report.items() if k != "schema"}
    return Output(payload, ["check", "status", "detail"], rows), code


COMMANDS = {
    "partitions": cmd_partitions,
    "character": cmd_character,
    "hurwitz": cmd_hurwitz,
    "weight": cmd_weight,
    "zfun": cmd_zfun,
    "measure": cmd_measure,
    "semiclassical": cmd_semiclassical,
    "content-product": cmd_content_product,
    "tau-verify": cmd_tau_verify,
    "claims-report": cmd_claims_report,
    "suite": cmd_suite,
}


def _cache_path():
    root = os.environ.get(CACHE_ENV)
    return Path(root) / "characters.json" if root else None


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cache = _cache_path()
        if cache is not None:
            DEFAULT_TABLE.load(cache)
        result = COMMANDS[args.command](args)
        output, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    except (UsageError, ValueError, ZeroPartitionFunctionError) as exc:
        print(f"error: {str(exc).splitlines()[0]}", file=sys.stderr)
        return EXIT_USAGE
    text = output.render(args.format)
    if getattr(args, "out", None):
        args.out.write_text(text)
    else:
        stdout.write(text)
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        DEFAULT_TABLE.dump(cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
