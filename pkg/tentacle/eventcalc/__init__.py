"""Discrete event calculus: frozen axioms plus a projection evaluator that mirrors them."""

from tentacle.eventcalc.axioms import AXIOM_TEXTS, axioms, golden_digest, labelled_axioms  # noqa: F401
from tentacle.eventcalc.narrative import (  # noqa: F401
    Narrative, completion, narrative_formulas, project,
)
