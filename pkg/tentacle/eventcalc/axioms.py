"""
The discrete event-calculus axioms, frozen as text.

The least moment is 0. Effects hold strictly after the initiating event;
an event that both initiates and terminates a fluent at the same moment
leaves it clipped. Negative facts (¬clipped) come from `completion`, never
from these axioms.
"""

import hashlib
from functools import lru_cache
from typing import Tuple

from tentacle.kernel.formulas import Formula
from tentacle.kernel.parser import parse_formula
from tentacle.kernel.signature import builtin_signature

AXIOM_TEXTS: Tuple[Tuple[str, str], ...] = (
    ("ec-can",
     "(forall (a Agent) (forall (x ActionType) (forall (t Moment)"
     " (implies (not (can a x t)) (not (happens (action a x) t))))))"),
    ("ec-initially",
     "(forall (f Fluent) (forall (t Moment)"
     " (implies (and (initially f) (not (clipped 0 f t))) (holds f t))))"),
    ("ec-inertia",
     "(forall (e Event) (forall (f Fluent) (forall (t1 Moment) (forall (t2 Moment)"
     " (implies (and (happens e t1) (initiates e f t1) (prior t1 t2) (not (clipped t1 f t2)))"
     " (holds f t2))))))"),
    ("ec-clipping",
     "(forall (e Event) (forall (f Fluent) (forall (t1 Moment) (forall (t Moment) (forall (t2 Moment)"
     " (implies (and (happens e t) (terminates e f t) (not (prior t t1)) (prior t t2))"
     " (clipped t1 f t2)))))))"),
)


@lru_cache(maxsize=1)
def _parsed() -> Tuple[Tuple[str, Formula], ...]:
    signature = builtin_signature()
    return tuple((label, parse_formula(text, signature)) for label, text in AXIOM_TEXTS)


def axioms() -> Tuple[Formula, ...]:
    return tuple(formula for _, formula in _parsed())


def labelled_axioms() -> Tuple[Tuple[str, Formula], ...]:
    return _parsed()


def golden_digest() -> str:
    """sha256 over `label<TAB>text<LF>` for every axiom, in order."""
    digest = hashlib.sha256()
    for label, text in AXIOM_TEXTS:
        digest.update(f"{label}\t{text}\n".encode("utf-8"))
    return digest.hexdigest()
