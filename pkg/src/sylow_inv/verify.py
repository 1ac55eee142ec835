"""Run the verification suites and build the JSON report."""
from __future__ import annotations

import json

from . import __version__
from . import certificates, suites_examples, suites_group, suites_poly
from .config import FAMILIES, GridPoint, RunConfig
from .groups import GroupSpec
from .mutants import applied
from .report import Recorder

DEFAULT_GRID = tuple(GridPoint(f, m, q) for f in FAMILIES for m in (1, 2) for q in (2, 3))


def _runners(grid):
    specs = [GroupSpec(g.family, g.m, g.q) for g in grid]
    return {
        "group": lambda rec: suites_group.suite_group(rec, specs),
        "steenrod": lambda rec: suites_poly.suite_steenrod(rec),
        "psi": lambda rec: suites_poly.suite_psi(rec),
        "degrees": lambda rec: suites_poly.suite_degrees(rec),
        "invariance": lambda rec: suites_group.suite_invariance(rec, specs),
        "norms": lambda rec: suites_group.suite_norms(rec, specs),
        "oracle": lambda rec: suites_group.suite_oracle(rec, specs),
        "certificates": lambda rec: certificates.suite_certificates(rec, specs),
        "examples": lambda rec: suites_examples.suite_examples(rec),
    }


def suite_runner(cfg: RunConfig) -> dict:
    cfg.validate()
    grid = cfg.grid or DEFAULT_GRID
    rec = Recorder()
    runners = _runners(grid)
    with applied(cfg.mutant):
        for name in cfg.suites:
            runners[name](rec)
    counts = {s: sum(1 for r in rec.results if r.status == s) for s in ("pass", "fail", "skipped")}
    config = cfg.to_json()
    config["grid"] = [[g.family, g.m, g.q] for g in grid]
    return {
        "version": __version__,
        "config": config,
        "results": [r.to_json(cfg.timings) for r in rec.results],
        "summary": dict(counts, total=len(rec.results), ok=counts["fail"] == 0, notes=rec.notes),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
