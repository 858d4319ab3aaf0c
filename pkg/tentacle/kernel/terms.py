"""
Sorted terms. Construction validates argument sorts, so an ill-sorted
term cannot exist; `apply` is the preferred constructor because it folds
`+` over integer moment literals.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from tentacle.errors import SortError
from tentacle.kernel.sorts import MOMENT, Sort


class Term:
    sort: Sort

    def subterms(self) -> Iterator["Term"]:
        yield self

    def variables(self) -> Iterator["Variable"]:
        for sub in self.subterms():
            if isinstance(sub, Variable):
                yield sub

    @property
    def is_ground(self) -> bool:
        return next(self.variables(), None) is None


@dataclass(frozen=True)
class FunctionSymbol:
    name: str
    arg_sorts: Tuple[Sort, ...]
    result: Sort

    @property
    def arity(self) -> int:
        return len(self.arg_sorts)


@dataclass(frozen=True)
class Variable(Term):
    name: str
    sort: Sort

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Constant(Term):
    name: str
    sort: Sort

    @property
    def integer(self) -> Optional[int]:
        if self.sort == MOMENT and self.name.isdigit():
            return int(self.name)
        return None

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Application(Term):
    symbol: FunctionSymbol
    args: Tuple[Term, ...]

    def __post_init__(self):
        if len(self.args) != self.symbol.arity:
            raise SortError(
                f"{self.symbol.arity} arguments for {self.symbol.name}",
                f"{len(self.args)} arguments",
            )
        for expected, arg in zip(self.symbol.arg_sorts, self.args):
            if not arg.sort.is_subsort_of(expected):
                raise SortError(expected.name, arg.sort.name, detail=f"argument of {self.symbol.name}")

    @property
    def sort(self) -> Sort:
        return self.symbol.result

    def subterms(self) -> Iterator[Term]:
        yield self
        for arg in self.args:
            yield from arg.subterms()

    def __str__(self):
        return f"({self.symbol.name} {' '.join(str(a) for a in self.args)})"


def moment(value: int) -> Constant:
    return Constant(str(value), MOMENT)


def int_value(term: Term) -> Optional[int]:
    return term.integer if isinstance(term, Constant) else None


def apply(symbol: FunctionSymbol, args) -> Term:
    args = tuple(args)
    if symbol.name == "+" and len(args) == 2:
        left, right = int_value(args[0]), int_value(args[1])
        if left is not None and right is not None:
            return moment(left + right)
    return Application(symbol, args)


def map_term(term: Term, fn) -> Term:
    """Rebuild `term` bottom-up, replacing each variable v by fn(v)."""
    if isinstance(term, Variable):
        return fn(term)
    if isinstance(term, Application):
        return apply(term.symbol, (map_term(a, fn) for a in term.args))
    return term
