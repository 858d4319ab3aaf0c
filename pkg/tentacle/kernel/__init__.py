"""Sorted term and formula language: signatures, parsing, printing, substitution."""

from tentacle.kernel.formulas import (  # noqa: F401
    AGENT_MODALS, ActionLiteral, AgentModal, And, Atom, BOTTOM, Believes, Bottom,
    Common, Desires, Exists, Flavor, ForAll, Formula, Implies, Intends, Knows,
    Not, Or, Ought, Perceives, Says, conjoin, formula_size, free_variables,
    ground_terms, is_closed,
)
from tentacle.kernel.knowledge import (  # noqa: F401
    AXIOM, DECLARED, DERIVED, PERCEPT, Entry, KnowledgeBase, Provenance,
    ProvenanceKind, contract_of,
)
from tentacle.kernel.moments import MomentOrder  # noqa: F401
from tentacle.kernel.parser import parse, parse_formula, parse_term  # noqa: F401
from tentacle.kernel.printer import pretty  # noqa: F401
from tentacle.kernel.signature import Signature, builtin_signature  # noqa: F401
from tentacle.kernel.sorts import Sort  # noqa: F401
from tentacle.kernel.substitution import (  # noqa: F401
    alpha_equivalent, alpha_key, check_formula, instantiate, sort_of, substitute,
)
from tentacle.kernel.terms import Application, Constant, Term, Variable, apply, moment  # noqa: F401
