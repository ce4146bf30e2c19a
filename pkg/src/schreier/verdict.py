"""Pass/fail records produced by the lemma checkers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    key: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def as_json(self):
        out = {"key": self.key, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def all_pass(verdicts) -> bool:
    return all(v.passed for v in verdicts)


def first_failure(verdicts) -> Verdict | None:
    for v in verdicts:
        if not v.passed:
            return v
    return None
