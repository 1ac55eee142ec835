"""Command line entry point: ``sylow-inv``."""
from __future__ import annotations

import argparse
import json
import sys

from . import families as fam
from . import groups as grp
from .config import FAMILIES, SUITES, ConfigInvalid, GridPoint, RunConfig
from .field import FieldElement, field_of_order
from .groups import GroupSpec
from .verify import dumps, suite_runner


def matrix_json(ctx, M):
    """Row-major, each entry as its coefficient vector over F_p."""
    return [[ctx.coeffs(c) for c in row] for row in M]


def _spec(args) -> GroupSpec:
    return GroupSpec(args.family, args.m, args.q)


def cmd_verify(args) -> int:
    given = [args.family is not None, args.m is not None, args.q is not None]
    if any(given) and not all(given):
        raise ConfigInvalid("--family, --m and --q go together")
    grid = (GridPoint(args.family, args.m, args.q),) if all(given) else ()
    suites = tuple(s.strip() for s in args.suites.split(",") if s.strip()) if args.suites else SUITES
    cfg = RunConfig(suites=suites, grid=grid, mutant=args.mutant, timings=args.timings)
    report = suite_runner(cfg)
    text = dumps(report)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    s = report["summary"]
    print(f"pass={s['pass']} fail={s['fail']} skipped={s['skipped']} total={s['total']}")
    for r in report["results"]:
        if r["status"] == "fail":
            print(f"FAIL {r['check_id']}: {json.dumps(r['witness'], sort_keys=True)[:300]}")
    return 0 if s["ok"] else 1


def cmd_group_dump(args) -> int:
    spec = _spec(args)
    ctx = spec.ctx
    gens = [(lab, g) for (lab, _), g in zip(grp.generator_params(spec), grp.g1_generators(spec))]
    L = grp.outer_involution(spec)
    if L is not None:
        gens.append(("L", L))
    out = {
        "spec": {"family": spec.family, "m": spec.m, "q": spec.q, "n": spec.n},
        "field": [ctx.p, ctx.s],
        "order": grp.group_order(spec),
        "form": matrix_json(ctx, grp.form_matrix(spec)),
        "generators": [{"label": lab, "matrix": matrix_json(ctx, g)} for lab, g in gens],
    }
    print(json.dumps(out, indent=2 if args.pretty else None, sort_keys=True))
    return 0


def cmd_poly_show(args) -> int:
    kind = args.kind
    if kind in ("h", "norm", "phi"):
        spec = GroupSpec(args.family, args.m, args.q)
        if kind == "h":
            f = fam.h_poly(spec, args.k)
        elif kind == "norm":
            f = fam.norm(spec, args.j)
        else:
            f = fam.chain_phi(spec, args.j)
    else:
        if args.n is None or args.s is None:
            raise ConfigInvalid("--n and --s are required for omega, gamma and lambda")
        r = args.q * args.q if kind == "lambda" else args.q
        ctx = field_of_order(r)
        param = args.j if kind == "omega" else FieldElement(ctx, args.lam)
        f = fam.family_poly(kind, args.n, args.s, param, ctx)
    if args.json:
        print(json.dumps(f.to_json(), sort_keys=True))
    else:
        print(f.to_str() if f else "0")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sylow-inv", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("--family", choices=FAMILIES)
    v.add_argument("--m", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--suites", help=f"comma separated subset of {','.join(SUITES)}")
    v.add_argument("--out", help="write the report here")
    v.add_argument("--mutant", help="run with a deliberately broken construction")
    v.add_argument("--timings", action="store_true", help="include wall_time in the report")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("group", help="group construction")
    gsub = g.add_subparsers(dest="gcmd", required=True)
    d = gsub.add_parser("dump", help="print the generator list as JSON")
    d.add_argument("--family", choices=FAMILIES, required=True)
    d.add_argument("--m", type=int, required=True)
    d.add_argument("--q", type=int, required=True)
    d.add_argument("--pretty", action="store_true")
    d.set_defaults(func=cmd_group_dump)

    p = sub.add_parser("poly", help="polynomial families")
    psub = p.add_subparsers(dest="pcmd", required=True)
    s = psub.add_parser("show", help="print one polynomial")
    s.add_argument("--kind", choices=("omega", "gamma", "lambda", "h", "norm", "phi"), required=True)
    s.add_argument("--s", type=int)
    s.add_argument("--j", type=int, default=1, help="omega sign, or variable index for norm/phi")
    s.add_argument("--lam", type=int, default=0, help="gamma/lambda parameter (field code)")
    s.add_argument("--n", type=int)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--family", choices=FAMILIES)
    s.add_argument("--m", type=int)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_poly_show)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigInvalid, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
