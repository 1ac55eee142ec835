"""Check results and the recorder that times and guards each check."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .field import CardinalityCapExceeded
from .groups import CapExceeded
from .poly import ExponentCapExceeded

WITNESS_CHARS = 600


class _Skip(Exception):
    pass


def skip(reason: str):
    """Abort the current check and record it as skipped."""
    raise _Skip(reason)


@dataclass
class CheckResult:
    check_id: str
    spec: dict
    status: str  # pass / fail / skipped
    witness: object = None
    wall_time: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out = {"check_id": self.check_id, "spec": self.spec, "status": self.status,
               "witness": self.witness}
        if timings:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def poly_witness(f, limit: int = WITNESS_CHARS) -> str:
    text = f.to_str() if hasattr(f, "to_str") else str(f)
    if len(text) > limit:
        text = text[:limit] + f"... [{len(f)} terms]"
    return text


def _cap_errors():
    from .families import OrbitCapExceeded
    from .oracle import DimensionCapExceeded
    return (CapExceeded, OrbitCapExceeded, DimensionCapExceeded,
            ExponentCapExceeded, CardinalityCapExceeded)


@dataclass
class Recorder:
    """Collects CheckResults; a check is a callable returning (ok, witness)."""
    results: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def run(self, check_id: str, spec: dict, fn) -> CheckResult:
        t0 = time.perf_counter()
        try:
            ok, witness = fn()
            status = "pass" if ok else "fail"
        except _Skip as exc:
            status, witness = "skipped", {"reason": str(exc)}
        except _cap_errors() as exc:
            status, witness = "skipped", {"reason": f"{type(exc).__name__}: {exc}"}
        except Exception as exc:  # a crash inside a check is a failure, not an abort
            status, witness = "fail", {"error": f"{type(exc).__name__}: {exc}"}
        if status == "fail" and witness is None:
            witness = {"note": "check returned False without a witness"}
        res = CheckResult(check_id, spec, status, witness, time.perf_counter() - t0)
        self.results.append(res)
        return res

    def note(self, **kw):
        self.notes.append(kw)

    def failures(self):
        return [r for r in self.results if r.status == "fail"]
