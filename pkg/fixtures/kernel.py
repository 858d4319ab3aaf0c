"""
Signature and knowledge-base builders shared by the reasoning tests.
"""

import pytest

from tentacle.kernel.knowledge import KnowledgeBase
from tentacle.kernel.parser import parse_formula, parse_term
from tentacle.scenario import load_scenario

BASE_SIGNATURE = """
(sort Room)
(constant a Agent)
(constant b Agent)
(constant jack Agent)
(constant p Boolean)
(constant q Boolean)
(constant r Boolean)
(constant kitchen Room)
(constant hall Room)
(function clean (Room) Boolean)
(constant alpha ActionType)
(constant beta ActionType)
(constant running ActionType)
(constant e1 Event)
(constant e2 Event)
(constant f1 Fluent)
(constant f2 Fluent)
"""


def signature(extra: str = ""):
    """Fresh signature over the base declarations plus `extra` forms."""
    return load_scenario(BASE_SIGNATURE + extra).signature


def kb(*formulas: str, extra: str = "", sig=None) -> KnowledgeBase:
    """Knowledge base holding `formulas` (concrete syntax) in order."""
    sig = sig or signature(extra)
    base = KnowledgeBase(sig)
    for text in formulas:
        base.add(parse_formula(text, sig))
    return base


def formula(text: str, sig):
    return parse_formula(text, sig)


def term(text: str, sig):
    return parse_term(text, sig)


@pytest.fixture
def sig():
    return signature()


@pytest.fixture
def make_kb():
    return kb
