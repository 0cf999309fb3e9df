import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerificationReport:
    """Outcome of every requested check for one configuration and weight.

    ``points`` and ``weight`` are stored as plain lists so that a failing
    report can be replayed from its serialized form alone.
    """

    points: List[List[int]]
    weight: List[int]
    seed: Optional[int] = None
    checks: Dict[str, CheckResult] = field(default_factory=dict)
    polynomial: Optional[str] = None
    lattice_index: int = 1
    timings: Dict[str, float] = field(default_factory=dict)

    def add(self, result: CheckResult):
        self.checks[result.name] = result

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks.values() if not c.passed]

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {
            "points": self.points,
            "weight": self.weight,
            "seed": self.seed,
            "polynomial": self.polynomial,
            "lattice_index": self.lattice_index,
            "passed": self.passed,
            "checks": {name: c.to_dict() for name, c in sorted(self.checks.items())},
        }
        if include_timings:
            out["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return out

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), sort_keys=True)


@dataclass
class FuzzReport:
    """All fuzz cases of one run, keyed by case index."""

    seed: int
    bounds: dict
    cases: Dict[int, dict] = field(default_factory=dict)

    def add(self, index: int, record: dict):
        self.cases[index] = record

    @property
    def passed(self) -> bool:
        return all(r["passed"] for r in self.cases.values())

    def records(self) -> List[dict]:
        return [self.cases[k] for k in sorted(self.cases)]

    @property
    def frame(self) -> pd.DataFrame:
        """One row per case with a boolean column per check."""
        rows = []
        for record in self.records():
            row = {"case": record["case"], "n": record["n"], "d": record["d"], "passed": record["passed"]}
            row.update(record["checks"])
            rows.append(row)
        if not rows:
            return pd.DataFrame(columns=["case", "n", "d", "passed"])
        return pd.DataFrame(rows).sort_values("case").reset_index(drop=True)

    def summary(self) -> pd.DataFrame:
        """Passed and failed counts per check."""
        df = self.frame
        checks = [c for c in df.columns if c not in ("case", "n", "d", "passed")]
        rows = []
        for check in checks:
            column = df[check].dropna().astype(bool)
            rows.append({"check": check, "passed": int(column.sum()), "failed": int((~column).sum())})
        return pd.DataFrame(rows, columns=["check", "passed", "failed"])

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.records())
