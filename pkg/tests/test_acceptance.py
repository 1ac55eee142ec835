"""Acceptance gate: one check per acceptance criterion, exact, with time budgets.

Each criterion prints a single PASS/FAIL line in the terminal summary (and
when run as a script).  A criterion that fails is reported as such; the
reason is in its detail line.
"""
import time

import pytest

from sylow_inv import certificates, suites_examples, suites_group, suites_poly
from sylow_inv import families as fam
from sylow_inv import groups as grp
from sylow_inv.config import FAMILIES
from sylow_inv.groups import GroupSpec
from sylow_inv.mutants import MUTANTS, applied
from sylow_inv.oracle import oracle_min_degree
from sylow_inv.report import Recorder

RESULTS = {}

ORDER_TABLE = [
    (GroupSpec("gu-even", 1, 2), 2 ** 1), (GroupSpec("gu-even", 2, 2), 64), (GroupSpec("gu-even", 1, 3), 3),
    (GroupSpec("gu-odd", 1, 2), 2 ** 3), (GroupSpec("sp", 2, 3), 81), (GroupSpec("o-plus", 2, 3), 9),
    (GroupSpec("o-plus", 3, 2), 128), (GroupSpec("o-minus", 2, 2), 128), (GroupSpec("o-odd", 2, 2), 16),
    (GroupSpec("o-odd", 2, 3), 81),
]


def _record(num, name, ok, detail, elapsed, budget):
    ok = bool(ok) and elapsed < budget
    RESULTS[num] = (ok, name, f"{detail}; {elapsed:.1f}s of {budget}s")
    return ok


def _suite(fn, *args):
    rec = Recorder()
    fn(rec, *args)
    return rec


def _counts(rec):
    c = {s: sum(1 for r in rec.results if r.status == s) for s in ("pass", "fail", "skipped")}
    return c, [r.check_id for r in rec.failures()][:5]


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for spec, want in ORDER_TABLE:
        got = len(set(grp.enumerate_group(spec)))
        if not got == grp.group_order(spec) == want:
            bad.append((spec.label(), got, want))
    return _record(1, "group orders", not bad, f"{len(ORDER_TABLE)} points, mismatches {bad}",
                   time.perf_counter() - t0, 60)


def criterion_2():
    t0 = time.perf_counter()
    bad = [s.label() for s, _ in ORDER_TABLE
           if grp.group_order(s) != grp.p_part(grp.classical_order(s), s.p)]
    return _record(2, "Sylow property", not bad, f"mismatches {bad}", time.perf_counter() - t0, 1)


def criterion_3():
    t0 = time.perf_counter()
    specs = {s for s, _ in ORDER_TABLE}
    specs |= {GroupSpec(f, m, q) for f in FAMILIES for m in (1, 2) for q in (2, 3)}
    specs = sorted((s for s in specs if grp.group_order(s) <= 2 ** 13), key=lambda s: (s.family, s.m, s.q))
    n_el, bad = 0, []
    for spec in specs:
        for M in grp.enumerate_group(spec):
            n_el += 1
            if not (grp.preserves_form(spec, M) and grp.preserves_quadratic(spec, M)):
                bad.append(spec.label())
                break
    return _record(3, "form preservation", not bad, f"{len(specs)} groups, {n_el} elements, bad {bad}",
                   time.perf_counter() - t0, 120)


def criterion_4():
    t0 = time.perf_counter()
    rec = _suite(suites_group.s_count_fields)
    fields = {r.spec["field"] for r in rec.results if "n_blk" in r.spec}
    samples = min(len(r.witness["counts"]) for r in rec.results if r.status == "pass" and "n_blk" in r.spec)
    c, f = _counts(rec)
    ok = c["fail"] == 0 and c["skipped"] == 0 and fields == {2, 3, 4} and samples >= 5
    return _record(4, "S-solution counts", ok, f"{c}, fields {sorted(fields)}, {samples} B each, failing {f}",
                   time.perf_counter() - t0, 30)


def criterion_5():
    t0 = time.perf_counter()
    rec = _suite(suites_poly.suite_steenrod)
    c, f = _counts(rec)
    printed = [n for n in rec.notes if n.get("kind") == "printed-steenrod-item"]
    refuted = sorted({n["case"] for n in printed if not n["printed_item_holds"]})
    ok = c["fail"] == 0 and c["skipped"] == 0 and not refuted
    detail = (f"corrected table and P-bullet {c}; printed items refuted at {len(refuted)} of "
              f"{len(printed)} points, e.g. {refuted[:3]}")
    return _record(5, "Steenrod table", ok, detail, time.perf_counter() - t0, 120)


def criterion_6():
    t0 = time.perf_counter()
    rec = _suite(suites_poly.suite_psi)
    c, f = _counts(rec)
    kinds = sorted({r.check_id.split("[")[0] for r in rec.results})
    return _record(6, "psi identities", c["fail"] == 0 and c["skipped"] == 0,
                   f"{c} over {kinds}, failing {f}", time.perf_counter() - t0, 180)


def criterion_7():
    t0 = time.perf_counter()
    rec = _suite(suites_poly.suite_degrees)
    c, f = _counts(rec)
    # the statement itself: the claimed degree at every grid point with l <= m - 1
    off = [r.check_id for r in rec.results if r.check_id.startswith("degrees.psi")
           and r.witness.get("degree") != r.witness.get("claimed")]
    gu8 = [r for r in rec.results if r.check_id == "degrees.example-gu8"]
    ok = c["fail"] == 0 and not off and gu8 and gu8[0].status == "pass"
    detail = (f"computed degrees {c}; (32, 8, 2) at n=8 {'ok' if gu8 and gu8[0].status == 'pass' else 'FAILED'}; "
              f"stated degree differs at {len(off)} points, e.g. {off[:3]}")
    return _record(7, "degrees", ok, detail, time.perf_counter() - t0, 60)


def invariance_grid():
    out = []
    for f in FAMILIES:
        for q in (2, 3):
            for m in (1, 2, 3):
                if f.startswith("gu") and q == 3 and m == 3:
                    continue
                out.append(GroupSpec(f, m, q))
    return out


def criterion_8():
    t0 = time.perf_counter()
    rec = _suite(suites_group.suite_invariance, invariance_grid())
    c, f = _counts(rec)
    chains = sum(1 for r in rec.results if r.check_id.startswith("invariance.chain"))
    return _record(8, "invariance", c["fail"] == 0 and c["skipped"] == 0,
                   f"{c}, {chains} chain steps, failing {f}", time.perf_counter() - t0, 180)


def criterion_9():
    t0 = time.perf_counter()
    rec = _suite(suites_group.norms_fixed)
    c, f = _counts(rec)
    closed = [r for r in rec.results if r.check_id.startswith("norms.closed-form") and r.spec["q"] == 2]
    lk = [r for r in rec.results if r.check_id.startswith("norms.lk")]
    ok = c["fail"] == 0 and c["skipped"] == 0 and len(closed) == 4 and lk
    return _record(9, "norm closed forms", ok,
                   f"{c}; GF(4) closed forms {len(closed)}, L_k degree checks {len(lk)}, failing {f}",
                   time.perf_counter() - t0, 120)


def criterion_10():
    t0 = time.perf_counter()
    rows, ok = [], True
    for spec in (GroupSpec("gu-even", 2, 2), GroupSpec("sp", 2, 2), GroupSpec("o-plus", 2, 2),
                 GroupSpec("o-odd", 2, 2)):
        t, d = fam.h_range_params(spec)
        gens = grp.g1_generators(spec)
        for k in range(1, t + 1):
            j = t + d + k
            D = fam.chain_phi(spec, j).degree()
            got = oracle_min_degree(spec.ctx, gens, j, D, spec.n)
            want = fam.minimal_degree_bound(spec, k)
            rows.append(f"{spec.family} j={j}: {got}/{want}")
            ok = ok and got == want
    return _record(10, "minimal-degree oracle", ok and rows, ", ".join(rows), time.perf_counter() - t0, 600)


def certificate_grid():
    out = []
    for f in FAMILIES:
        for q in (2, 3):
            for m in (2, 3):
                if f.startswith("gu") and q == 3 and m == 3:
                    continue
                out.append(GroupSpec(f, m, q))
    return out


def criterion_11():
    t0 = time.perf_counter()
    rec = _suite(certificates.suite_certificates, certificate_grid())
    c, f = _counts(rec)
    return _record(11, "field-generation certificates", c["fail"] == 0 and c["skipped"] == 0,
                   f"{c} incl. L swap, L1 shear and Sigma_2 identities, failing {f}",
                   time.perf_counter() - t0, 600)


def criterion_12():
    t0 = time.perf_counter()
    rec = _suite(suites_examples.suite_examples)
    c, f = _counts(rec)
    return _record(12, "dimension-8 examples", c["fail"] == 0 and c["skipped"] == 0,
                   f"{c}, failing {f}", time.perf_counter() - t0, 300)


def criterion_13():
    t0 = time.perf_counter()
    caught, missed = [], []
    for name, (_, spec, suites) in MUTANTS.items():
        rec = Recorder()
        with applied(name):
            for s in suites:
                getattr(suites_group, f"suite_{s}")(rec, [spec])
        fails = rec.failures()
        (caught if fails and all(r.witness for r in fails) else missed).append(name)
    # and the unmutated run is clean
    rec = Recorder()
    for name, (_, spec, suites) in MUTANTS.items():
        for s in suites:
            getattr(suites_group, f"suite_{s}")(rec, [spec])
    clean = not rec.failures()
    return _record(13, "mutation sensitivity", not missed and clean,
                   f"caught {len(caught)}/{len(MUTANTS)}, missed {missed}, baseline clean {clean}",
                   time.perf_counter() - t0, 120)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11, criterion_12, criterion_13]


@pytest.mark.parametrize("crit", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(crit):
    ok = crit()
    num = int(crit.__name__.split("_")[1])
    assert ok, f"criterion {num}: {RESULTS[num][2]}"


def summary_lines():
    return [f"{'PASS' if ok else 'FAIL'} criterion {num}: {name} ({detail})"
            for num, (ok, name, detail) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for crit in CRITERIA:
        crit()
    print("\n".join(summary_lines()))
