"""Structured pass/fail records for the verification suite."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class TheoremReport:
    """Outcome of one mechanical check: predicted vs computed quantities.

    `passed` is meaningful only when `hypothesis_check` is true; checks whose
    preconditions fail are inapplicable rather than failing.
    """

    theorem_id: str
    inputs: list[str] = field(default_factory=list)
    hypothesis_check: bool = True
    predicted: dict = field(default_factory=dict)
    computed: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.hypothesis_check
            and not self.failures
            and all(
                abs(self.residuals[k]) <= self.tolerances.get(k, 0.0)
                for k in self.residuals
            )
        )

    @property
    def status(self) -> str:
        if not self.hypothesis_check:
            return "inapplicable"
        return "pass" if self.passed else "FAIL"

    def check(self, name: str, residual: float, tolerance: float) -> None:
        self.residuals[name] = float(residual)
        self.tolerances[name] = float(tolerance)

    def expect(self, name: str, condition: bool, detail: str = "") -> None:
        if not condition:
            self.failures.append(f"{name}: {detail}" if detail else name)

    def mark_inapplicable(self, reason: str) -> "TheoremReport":
        self.hypothesis_check = False
        self.notes.append(reason)
        return self

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "inputs": self.inputs,
            "hypothesis_check": self.hypothesis_check,
            "status": self.status,
            "passed": self.passed,
            "predicted": _plain(self.predicted),
            "computed": _plain(self.computed),
            "residuals": self.residuals,
            "tolerances": self.tolerances,
            "failures": self.failures,
            "notes": self.notes,
        }


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, (int, float, str, bool)) or obj is None:
        return obj
    return str(obj)
