"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 input-format error, 4 budget or
search limit exceeded, 5 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, cud, expsum, qmc, studies
from .discrepancy import (
    DEFAULT_BUDGET,
    ProductWeights,
    star_discrepancy_exact,
    star_discrepancy_lower,
    weighted_star_discrepancy,
)
from .errors import BudgetExceeded, NotFound, PointSetFormatError, StarDiscError
from .generators import FAMILIES, GeneratorSpec
from .pointset import format_pointset, read_pointset

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_BUDGET, EXIT_VERIFY = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def parse_weights(text: str, s: int) -> ProductWeights:
    """``1,0.5,0.25`` | ``geo:r`` (gamma_j = r^j) | ``poly:a`` (gamma_j = j^-a)."""
    try:
        if text.startswith("geo:"):
            r = float(text[4:])
            return ProductWeights([r ** j for j in range(1, s + 1)])
        if text.startswith("poly:"):
            a = float(text[5:])
            return ProductWeights([j ** -a for j in range(1, s + 1)])
        return ProductWeights(_floats(text))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        raise UsageError(f"bad weights {text!r}: {exc}") from None


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- subcommands

def cmd_gen(a):
    spec = GeneratorSpec(a.family, s=a.s, p=a.p, N=a.N, base=a.base, seed=a.seed)
    P = spec.build()
    comment = f"family={a.family} s={a.s}" + "".join(
        f" {k}={v}" for k, v in (("p", a.p), ("N", a.N), ("seed", a.seed)) if v is not None
    )
    _emit(format_pointset(P, comment), a.output)
    return EXIT_OK


def cmd_disc(a):
    P = read_pointset(a.file)
    if a.lower:
        res = star_discrepancy_lower(P, a.restarts, a.seed)
    else:
        try:
            res = star_discrepancy_exact(P, a.budget)
        except BudgetExceeded:
            if a.exact:
                raise
            res = star_discrepancy_lower(P, a.restarts, a.seed)
    print(res.to_record())
    return EXIT_OK


def cmd_wdisc(a):
    P = read_pointset(a.file)
    w = parse_weights(a.weights, P.s)
    res = weighted_star_discrepancy(P, w, a.budget, restarts=a.restarts, seed=a.seed)
    print(json.dumps({"value": res.value, "subset": list(res.subset), "method": res.method}))
    return EXIT_OK


def cmd_bound(a):
    inputs = {"N": a.N, "s": a.s}
    if a.kind in bounds.RATE_KINDS:
        value = bounds.rate(a.kind, a.N, a.s)
        note = "rate shape only; leading constant unknown (up to constants)"
    elif a.kind == "hoeffding":
        value = bounds.hoeffding_bound(a.N, a.s)
        note = "explicit: all constants known"
    elif a.kind in ("hps", "wang"):
        if not a.weights:
            raise UsageError(f"--weights is required for kind {a.kind}")
        w = parse_weights(a.weights, a.s)
        inputs["weights"] = list(w.gammas[: a.s])
        if a.kind == "hps":
            value = bounds.hps_weighted_rate(a.N, a.s, w)
            note = "rate shape only; leading constant unknown (up to constants)"
        else:
            if a.q is None or a.C is None:
                raise UsageError("kind wang needs --q and --C")
            inputs.update(q=a.q, C=a.C)
            value = bounds.wang_bound(a.N, a.s, a.q, w, a.C)
            note = "depends on the caller-supplied constant C"
    else:
        raise UsageError(f"unknown kind {a.kind!r}")
    print(json.dumps({"kind": a.kind, "inputs": inputs, "value": value, "constants": note}))
    return EXIT_OK


def cmd_expsum(a):
    if a.verify:
        if a.s is None:
            raise UsageError("--verify needs --s")
        fams = tuple(a.families.split(",")) if a.families else expsum.FAMILIES
        rep = expsum.verify_weil(a.p, a.s, a.tol, fams, a.budget)
        for line in rep.summary_lines():
            print(line)
        print(f"result={'pass' if rep.ok else 'FAIL'}")
        return EXIT_OK if rep.ok else EXIT_VERIFY
    if a.h is None:
        raise UsageError("single-sum mode needs --h")
    rep = expsum.exp_sum(a.family, a.p, a.h, a.tol)
    print(rep.to_record())
    return EXIT_OK if rep.within_bound else EXIT_VERIFY


def cmd_cud(a):
    stream = cud.Stream(a.stream)
    if a.growing is not None:
        rows = cud.growing_dim_profile(stream, a.growing, a.Ns, a.method, a.budget, a.restarts, a.seed)
        text = cud.rows_to_csv(rows, cud.GROWING_COLUMNS)
    else:
        rows = cud.cud_profile(stream, a.dims, a.Ns, a.method, a.budget, a.restarts, a.seed)
        text = cud.rows_to_csv(rows, cud.PROFILE_COLUMNS)
    _emit(text, a.output)
    return EXIT_BUDGET if any(r["method"] == "budget-exceeded" for r in rows) else EXIT_OK


def cmd_integrate(a):
    P = read_pointset(a.file)
    f = qmc.get_function(a.function)
    r = qmc.kh_check(P, f, a.budget)
    print(
        json.dumps(
            {
                "function": f.id,
                "value": r.estimate,
                "exact": r.exact,
                "error": r.abs_error,
                "dstar": r.dstar,
                "variation": r.variation,
                "bound": r.bound,
                "holds": r.holds,
            }
        )
    )
    return EXIT_OK if r.holds else EXIT_VERIFY


def cmd_study(a):
    if a.kind == "random-scaling":
        rows = studies.random_scaling(a.dims or [2, 3], a.Ns or [50, 100, 200, 400], a.seeds, a.seed, a.budget)
    elif a.kind == "pset-decay":
        rows = studies.pset_decay(a.family, a.ps or [11, 23, 47, 97], a.s, a.budget)
    else:
        rows = studies.cud_vdc(a.s, a.Ns or [16, 64, 256], a.base, a.budget)
    _emit(cud.rows_to_csv(rows, studies.COLUMNS[a.kind]), a.output)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stardisc", description="Star-discrepancy toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument("--budget", type=float, default=DEFAULT_BUDGET, help="cap on box-point operations (default 1e9)")

    def search(p):
        p.add_argument("--restarts", type=int, default=32)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", help="generate a point set")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--p", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("disc", help="star-discrepancy of a point-set file")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact only; exit 4 if over budget")
    mode.add_argument("--lower", action="store_true", help="multistart lower bound only")
    budget(p)
    search(p)
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("wdisc", help="weighted star-discrepancy (product weights)")
    p.add_argument("file")
    p.add_argument("--weights", required=True, help="1,0.5,... | geo:r | poly:a")
    budget(p)
    search(p)
    p.set_defaults(func=cmd_wdisc)

    p = sub.add_parser("bound", help="evaluate a rate or bound formula")
    p.add_argument("--kind", required=True, choices=bounds.RATE_KINDS + ("hoeffding", "hps", "wang"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--weights")
    p.add_argument("--q", type=int)
    p.add_argument("--C", type=float)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("expsum", help="exponential sums and exhaustive Weil-bound checks")
    p.add_argument("--family", choices=expsum.FAMILIES, default="P")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--h", type=_ints)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--s", type=int)
    p.add_argument("--families", help="subset of P,Q,R for --verify")
    p.add_argument("--tol", type=float, default=expsum.DEFAULT_TOL)
    budget(p)
    p.set_defaults(func=cmd_expsum)

    p = sub.add_parser("cud", help="block discrepancy profile of a stream (CSV)")
    p.add_argument("--stream", required=True, help="lcg:a,c,m,x0 | vdc:base | random:seed")
    p.add_argument("--dims", type=_ints, default=[1, 2])
    p.add_argument("--Ns", type=_ints, required=True)
    p.add_argument("--method", choices=("exact", "lower"), default="exact")
    p.add_argument("--growing", type=float, help="use s_N = max(1, ceil(c ln N)) with this c")
    p.add_argument("-o", "--output")
    budget(p)
    search(p)
    p.set_defaults(func=cmd_cud)

    p = sub.add_parser("integrate", help="QMC estimate with Koksma-Hlawka check")
    p.add_argument("file")
    p.add_argument("--function", required=True, choices=tuple(qmc.TEST_FUNCTIONS))
    budget(p)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("study", help="run a reproducible study, write CSV")
    p.add_argument("kind", choices=studies.STUDY_KINDS)
    p.add_argument("--dims", type=_ints)
    p.add_argument("--Ns", type=_ints)
    p.add_argument("--seeds", type=int, default=20, help="number of seeds (random-scaling)")
    p.add_argument("--seed", type=int, default=0, help="first seed (random-scaling)")
    p.add_argument("--family", default="P", choices=("P", "Q", "R"))
    p.add_argument("--ps", type=_ints)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--base", type=int, default=2)
    p.add_argument("-o", "--output")
    budget(p)
    p.set_defaults(func=cmd_study)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PointSetFormatError as exc:
        print(f"stardisc: input format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (BudgetExceeded, NotFound) as exc:
        print(f"stardisc: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, StarDiscError, ValueError, KeyError) as exc:
        print(f"stardisc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"stardisc: {exc}", file=sys.stderr)
        return EXIT_FORMAT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
