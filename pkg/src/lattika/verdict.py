"""Structured clause verdicts returned by the theorem checkers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one clause of a lemma or theorem.

    ``holds`` is the evaluated conclusion. ``hypotheses_met`` records whether
    the clause's hypotheses were satisfied; ``missing`` names the ones that
    were not. A clause only counts as a violation when its hypotheses hold
    and its conclusion does not.
    """

    name: str
    holds: bool
    hypotheses_met: bool = True
    missing: tuple[str, ...] = ()
    counterexample: dict | None = field(default=None)

    @classmethod
    def clause(cls, name, holds, missing, L, witness, key="element"):
        ce = None if witness is None else {key: L.label(witness)}
        return cls(name, bool(holds), not missing, tuple(missing), ce)

    @property
    def violated(self) -> bool:
        return self.hypotheses_met and not self.holds

    @property
    def ok(self) -> bool:
        return not self.violated

    def to_json(self) -> dict:
        out = {"clause": self.name, "holds": self.holds, "hypotheses_met": self.hypotheses_met}
        if self.missing:
            out["missing"] = list(self.missing)
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out
