"""
The golden proof problems: one small Γ ⊢ φ per inference pattern the prover
implements, with the rule expected at the root of the proof it returns.
Shared by the schemata suite and the mutation fuzzer.
"""

from dataclasses import dataclass
from typing import Tuple

from fixtures.kernel import kb, signature
from tentacle.kernel.parser import parse_formula
from tentacle.prover.rules import RuleId


@dataclass(frozen=True)
class GoldenProblem:
    name: str
    gamma: Tuple[str, ...]
    goal: str
    root: RuleId

    def build(self):
        sig = signature()
        return kb(*self.gamma, sig=sig), parse_formula(self.goal, sig)


GOLDEN = (
    GoldenProblem("knowledge-is-true", ("(K a 1 p)",), "p", RuleId.I4),
    GoldenProblem("knowledge-closure",
                  ("(K a 1 p)", "(K a 1 (implies p q))"), "(K a 2 q)", RuleId.IK),
    GoldenProblem("knowledge-persists", ("(K a 1 p)",), "(K a 4 p)", RuleId.IK),
    GoldenProblem("belief-closure",
                  ("(B a 1 p)", "(B a 1 (implies p q))"), "(B a 3 q)", RuleId.IB),
    GoldenProblem("intention-to-perception", ("(I a 1 p)",), "(P a 2 p)", RuleId.I13),
    GoldenProblem("obligation-to-intention",
                  ("(B a 1 p)",
                   "(B a 1 (O a 1 p (happens (action a alpha) 2)))",
                   "(O a 1 p (happens (action a alpha) 2))"),
                  "(K a 1 (I a 1 (happens (action a alpha) 2)))", RuleId.I14),
    GoldenProblem("excluded-middle", (), "(or p (not p))", RuleId.DNE),
    GoldenProblem("universal-instance",
                  ("(forall (r Room) (clean r))",), "(clean kitchen)", RuleId.ALL_E),
    GoldenProblem("timed-modus-ponens",
                  ("(forall (t Moment) (implies (happens e1 t) (holds f1 (+ t 1))))",
                   "(happens e1 2)"),
                  "(holds f1 3)", RuleId.IMP_E),
    GoldenProblem("conjunction",
                  ("p", "(implies p q)"), "(and p q)", RuleId.AND_I),
    GoldenProblem("contraposition",
                  ("(implies p q)",), "(implies (not q) (not p))", RuleId.IMP_I),
)
