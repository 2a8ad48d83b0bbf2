from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Iterator

from .values import render


class BudgetError(ValueError):
    pass


@dataclass(frozen=True)
class GenerationBudget:
    """Bounds for bounded-exhaustive enumeration.

    ``inner_effect_width`` bounds the inner layer of a composed effect so
    that doubly nested inputs stay enumerable.
    """

    max_structure_size: int = 3
    atom_domain: tuple = (0, 1, 2)
    max_effect_width: int = 2
    inner_effect_width: int = 1
    max_nesting: int = 2
    case_cap: int = 100_000

    def __post_init__(self) -> None:
        object.__setattr__(self, "atom_domain", tuple(self.atom_domain))
        for name in ("max_structure_size", "max_effect_width",
                     "inner_effect_width", "max_nesting", "case_cap"):
            if getattr(self, name) < 0:
                raise BudgetError(f"{name} must be >= 0")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["atom_domain"] = list(self.atom_domain)
        return d


@dataclass(frozen=True)
class Witness:
    input: Any
    lhs: Any
    rhs: Any
    note: str = ""

    def to_dict(self) -> dict:
        d = {"input": render(self.input), "lhs": render(self.lhs),
             "rhs": render(self.rhs)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class LawReport:
    law: str
    traversable: str
    applicatives: tuple = ()
    cases_run: int = 0
    witness: Witness | None = None
    truncated: bool = False
    observations: tuple = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = {"law": self.law, "traversable": self.traversable,
             "applicatives": list(self.applicatives),
             "cases_run": self.cases_run, "verdict": self.verdict,
             "truncated": self.truncated}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d

    def line(self) -> str:
        apps = ",".join(self.applicatives)
        head = f"{self.verdict.upper():4} {self.law}[{apps}] {self.traversable}"
        head += f" cases={self.cases_run}" + (" (truncated)" if self.truncated else "")
        if self.witness is not None:
            w = self.witness
            note = f" {w.note}:" if w.note else ""
            head += (f"\n     witness{note} input={render(w.input)}"
                     f"\n       lhs={render(w.lhs)}\n       rhs={render(w.rhs)}")
        return head


def run_cases(law: str, traversable: str, applicatives: Iterable[str],
              cases: Iterable[Any], check, budget: GenerationBudget) -> LawReport:
    """Evaluate ``check(case) -> (lhs, rhs)`` over ``cases`` in order.

    Stops at the first case whose sides differ.  ``check`` may also return
    ``(lhs, rhs, note)``.
    """
    applicatives = tuple(applicatives)
    it: Iterator = iter(cases)
    n = 0
    for case in itertools.islice(it, budget.case_cap):
        n += 1
        out = check(case)
        lhs, rhs = out[0], out[1]
        if lhs != rhs:
            note = out[2] if len(out) > 2 else ""
            return LawReport(law, traversable, applicatives, n,
                             Witness(case, lhs, rhs, note))
    truncated = next(it, _END) is not _END
    return LawReport(law, traversable, applicatives, n, truncated=truncated)


_END = object()
