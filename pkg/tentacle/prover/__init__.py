"""Bounded natural-deduction search over the modal schemata, plus an independent checker."""

from tentacle.prover.checker import Accept, Reject, check, check_refutation  # noqa: F401
from tentacle.prover.rules import (  # noqa: F401
    Budget, Consistent, Inconsistent, NoProofWithinBudget, Proof, RuleId,
)
from tentacle.prover.search import Prover, consistent, prove  # noqa: F401
from tentacle.prover.serialize import dump_proof, load_proof  # noqa: F401
