"""
Strict order on Moment terms.

Integer literals compare numerically. Symbolic moments are ordered only by
top-level ground `prior` atoms (and their transitive closure, mixed freely
with the integer order); any other pair is unordered and every side
condition mentioning it fails.
"""

from collections import deque
from typing import Dict, Iterable, List, Optional

from tentacle.kernel.formulas import Atom, Formula
from tentacle.kernel.terms import Term, int_value


class MomentOrder:
    def __init__(self, formulas: Iterable[Formula] = ()):
        self.edges: Dict[Term, List[Term]] = {}
        self.nodes: List[Term] = []
        for formula in formulas:
            self.observe(formula)

    def observe(self, formula: Formula):
        if not isinstance(formula, Atom) or formula.predicate != "prior":
            return
        earlier, later = formula.term.args
        if not (earlier.is_ground and later.is_ground):
            return
        for node in (earlier, later):
            if node not in self.edges:
                self.edges[node] = []
                self.nodes.append(node)
        if later not in self.edges[earlier]:
            self.edges[earlier].append(later)

    def contradicts(self, formula: Formula) -> bool:
        """True when a ground prior(a, b) would close a cycle: a == b or b already precedes a."""
        if not isinstance(formula, Atom) or formula.predicate != "prior":
            return False
        earlier, later = formula.term.args
        if not (earlier.is_ground and later.is_ground):
            return False
        return earlier == later or self.lt(later, earlier)

    def _successors(self, node: Term):
        yield from self.edges.get(node, ())
        value = int_value(node)
        if value is not None:
            for other in self.nodes:
                other_value = int_value(other)
                if other_value is not None and other_value > value:
                    yield other

    def lt(self, left: Term, right: Term) -> bool:
        lv, rv = int_value(left), int_value(right)
        if lv is not None and rv is not None:
            return lv < rv
        seen = {left}
        queue = deque([left])
        while queue:
            node = queue.popleft()
            for nxt in self._successors(node):
                if nxt == right:
                    return True
                nv = int_value(nxt)
                if nv is not None and rv is not None and nv < rv:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return False

    def leq(self, left: Term, right: Term) -> bool:
        return left == right or self.lt(left, right)

    def compare(self, left: Term, right: Term) -> Optional[int]:
        """-1, 0 or 1 when the pair is ordered, None otherwise."""
        if left == right:
            return 0
        if self.lt(left, right):
            return -1
        if self.lt(right, left):
            return 1
        return None

    def decide_prior(self, left: Term, right: Term) -> Optional[bool]:
        """Truth value of prior(left, right) when the order settles it."""
        if self.lt(left, right):
            return True
        if left == right or self.lt(right, left):
            return False
        return None
