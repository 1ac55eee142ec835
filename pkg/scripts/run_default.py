"""Run the default verification grid and write the JSON report.

    python scripts/run_default.py [--out report.json] [--timings]
"""
import argparse
import sys

from sylow_inv.config import RunConfig
from sylow_inv.verify import dumps, suite_runner


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="report.json")
    ap.add_argument("--timings", action="store_true")
    args = ap.parse_args()
    rep = suite_runner(RunConfig(timings=args.timings))
    with open(args.out, "w") as fh:
        fh.write(dumps(rep))
    s = rep["summary"]
    print(f"pass={s['pass']} fail={s['fail']} skipped={s['skipped']} -> {args.out}")
    for r in rep["results"]:
        if r["status"] == "skipped":
            print(f"  skipped {r['check_id']}: {r['witness']['reason']}")
    return 0 if s["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
