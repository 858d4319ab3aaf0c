"""
Proof objects, budgets and the in-band outcomes of proof search.

Side entries are plain strings so a proof prints, serializes and re-parses
the same way in memory and on disk:
    "gamma" | "assumption" | "order"     provenance of a HYP leaf
    "order:<t1> <= <t2>" / "order:<t1> < <t2>"   temporal side condition
    "term:<term>"                        witness of a quantifier rule
    "eigen:<name>:<Sort>"                eigenvariable of ∀I / ∃E
    "inner"                              IK/IB node whose last premise is the inner derivation
    "discharge:<formula>"                informational, re-derived by the checker
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

from tentacle.errors import ConfigError
from tentacle.kernel.formulas import Formula


class RuleId(str, Enum):
    AND_I = "andI"
    AND_E = "andE"
    OR_I = "orI"
    OR_E = "orE"
    IMP_I = "impI"
    IMP_E = "impE"
    NOT_I = "notI"
    NOT_E = "notE"
    BOT_E = "botE"
    DNE = "DNE"
    ALL_I = "allI"
    ALL_E = "allE"
    EX_I = "exI"
    EX_E = "exE"
    REIT = "REIT"
    IK = "IK"
    IB = "IB"
    I4 = "I4"
    I13 = "I13"
    I14 = "I14"
    HYP = "HYP"


@dataclass(frozen=True)
class Proof:
    conclusion: Formula
    rule: RuleId
    premises: Tuple["Proof", ...] = ()
    side: Tuple[str, ...] = ()

    def nodes(self) -> Iterator["Proof"]:
        """Pre-order walk; the root comes first."""
        yield self
        for premise in self.premises:
            yield from premise.nodes()

    @property
    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def side_value(self, prefix: str) -> Optional[str]:
        for entry in self.side:
            if entry.startswith(prefix + ":"):
                return entry[len(prefix) + 1:]
        return None


def hyp(formula: Formula, origin: str = "gamma") -> Proof:
    return Proof(formula, RuleId.HYP, (), (origin,))


@dataclass(frozen=True)
class Budget:
    depth: int = 12
    size: int = 80
    candidates: int = 24

    def __post_init__(self):
        for name in ("depth", "size", "candidates"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"Budget {name} must be positive, got {getattr(self, name)}")

    @classmethod
    def from_settings(cls, settings) -> "Budget":
        return cls(settings.budget_depth, settings.budget_size, settings.budget_candidates)

    def to_record(self) -> dict:
        return {"depth": self.depth, "size": self.size, "candidates": self.candidates}

    @classmethod
    def from_record(cls, record: dict) -> "Budget":
        return cls(record["depth"], record["size"], record["candidates"])


@dataclass(frozen=True)
class NoProofWithinBudget:
    """Search gave up. `exhausted` names the limit hit first, None if the space closed."""
    goal: Formula
    budget: Budget
    exhausted: Optional[str] = None

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Consistent:
    """Consistent as far as checked: no refutation found within the budget."""
    budget: Budget
    exhausted: Optional[str] = None


@dataclass(frozen=True)
class Inconsistent:
    refutation: Proof
    base: object  # the KnowledgeBase the refutation checks against
