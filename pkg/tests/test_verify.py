"""Suite runner, reports, certificates and mutants."""
import json

import pytest

from sylow_inv.certificates import certificate_field_generation, sigma2_checks
from sylow_inv.config import ConfigInvalid, GridPoint, RunConfig, caps
from sylow_inv.field import field_of_order
from sylow_inv.groups import GroupSpec
from sylow_inv.mutants import MUTANTS, applied
from sylow_inv.report import CheckResult, Recorder
from sylow_inv import families as fam
from sylow_inv.verify import dumps, suite_runner

GRID = (GridPoint("sp", 2, 3), GridPoint("o-plus", 2, 2))


def test_only_selected_suite():
    rep = suite_runner(RunConfig(suites=("steenrod",), grid=GRID))
    assert rep["results"] and all(r["check_id"].startswith("steenrod.") for r in rep["results"])
    assert set(rep) == {"version", "config", "results", "summary"}


def test_report_is_deterministic():
    cfg = lambda: RunConfig(suites=("group", "invariance"), grid=GRID)
    assert dumps(suite_runner(cfg())) == dumps(suite_runner(cfg()))


def test_wall_time_only_with_timings():
    rep = suite_runner(RunConfig(suites=("invariance",), grid=GRID[:1], timings=True))
    assert all("wall_time" in r for r in rep["results"])
    rep = suite_runner(RunConfig(suites=("invariance",), grid=GRID[:1]))
    assert not any("wall_time" in r for r in rep["results"])


def test_bad_config():
    with pytest.raises(ConfigInvalid):
        suite_runner(RunConfig(suites=("nope",)))
    with pytest.raises(ConfigInvalid):
        suite_runner(RunConfig(grid=(GridPoint("gl", 2, 2),)))


def test_failures_carry_witness():
    rec = Recorder()
    rec.run("x", {}, lambda: (False, None))
    rec.run("y", {}, lambda: 1 / 0)
    assert all(r.status == "fail" and r.witness for r in rec.results)
    assert json.dumps(CheckResult("z", {}, "pass").to_json())


def test_caps_override(monkeypatch):
    monkeypatch.setenv("SYLOW_INV_CAPS", '{"enum": 100}')
    assert caps().enum == 100
    monkeypatch.setenv("SYLOW_INV_CAPS", "orbit=7,dim=9")
    assert (caps().orbit, caps().dim) == (7, 9)
    monkeypatch.setenv("SYLOW_INV_CAPS", "bogus=1")
    with pytest.raises(ValueError):
        caps()


def test_mutant_spec_example():
    rep = suite_runner(RunConfig(suites=("invariance",), grid=(GridPoint("sp", 2, 3),), mutant="omega-sign"))
    fails = [r for r in rep["results"] if r["status"] == "fail"]
    assert fails and fails[0]["witness"]["generator"]
    # and the patch is gone afterwards
    rep = suite_runner(RunConfig(suites=("invariance",), grid=(GridPoint("sp", 2, 3),)))
    assert rep["summary"]["ok"]


def test_unknown_mutant():
    with pytest.raises(KeyError):
        with applied("no-such-mutant"):
            pass


@pytest.mark.parametrize("spec", [GroupSpec("gu-even", 2, 2), GroupSpec("o-plus", 2, 2),
                                  GroupSpec("o-minus", 2, 2), GroupSpec("gu-even", 1, 2)], ids=str)
def test_certificates(spec):
    cert = certificate_field_generation(spec)
    assert cert.verdict
    assert len(cert.phis) == spec.n
    assert json.dumps(cert.to_json())


def test_certificate_gu_even_degrees():
    cert = certificate_field_generation(GroupSpec("gu-even", 2, 2))
    # deg_{x_{m+1+k}} phi = q^{2(m-k)-1}
    assert cert.records[-1].deg == 2


def test_o_plus_certificate_records_both_lists():
    cert = certificate_field_generation(GroupSpec("o-plus", 3, 2))
    alts = cert.checks["list"]["alternatives"]
    assert alts["proof-list"]["length"] == 7 and cert.checks["list"]["length_ok"]


@pytest.mark.parametrize("r,which", [(2, "swap"), (3, "swap"), (2, "shear"), (4, "shear")])
def test_sigma2(r, which):
    assert sigma2_checks(field_of_order(r), which)["ok"]
