"""Three-valued decision results shared by the deciders."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .core import format_scalar
from .linalg import TropMatrix


class Outcome(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    UNKNOWN = "Unknown"

    @property
    def exit_code(self) -> int:
        return {Outcome.HOLDS: 0, Outcome.FAILS: 1, Outcome.UNKNOWN: 2}[self]


@dataclass
class WitnessBundle:
    """Matrices certifying a relation; ``None`` stands for the adjoined identity."""

    relation: str
    matrices: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def identity_used(self) -> dict:
        return {k: v is None for k, v in self.matrices.items()}

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "matrices": {k: None if v is None else matrix_to_json(v)
                         for k, v in self.matrices.items()},
            "identity_used": self.identity_used,
            **({"extra": _jsonable(self.extra)} if self.extra else {}),
        }


@dataclass
class Obstruction:
    kind: str
    values: dict = field(default_factory=dict)
    details: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "values": _jsonable(self.values), "details": self.details}


@dataclass
class Verdict:
    outcome: Outcome
    witness: WitnessBundle | None = None
    obstruction: Obstruction | None = None
    budget_used: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.outcome is Outcome.HOLDS and self.witness is None:
            raise ValueError("a Holds verdict needs a witness")
        if self.outcome is Outcome.FAILS and self.obstruction is None:
            raise ValueError("a Fails verdict needs an obstruction")

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    @property
    def fails(self) -> bool:
        return self.outcome is Outcome.FAILS

    @property
    def unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    @classmethod
    def unknown_(cls, budget=None, *notes) -> "Verdict":
        return cls(Outcome.UNKNOWN, budget_used=dict(budget or {}), notes=list(notes))

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "obstruction": None if self.obstruction is None else self.obstruction.to_dict(),
            "budget_used": _jsonable(self.budget_used),
            "notes": list(self.notes),
        }


def matrix_to_json(m: TropMatrix) -> dict:
    return {"semiring": m.flavor.value,
            "rows": [[format_scalar(a) for a in r] for r in m.rows]}


def _jsonable(obj: Any):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, TropMatrix):
        return matrix_to_json(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, (bool, str)) or obj is None:
        return obj
    if isinstance(obj, int):
        return obj
    if hasattr(obj, "entries"):
        return [format_scalar(a) for a in obj.entries]
    return format_scalar(obj)
