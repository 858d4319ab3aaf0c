"""
Exception hierarchy for the engine.
Everything raised on purpose derives from TentacleError so the CLI can map
it onto the exit-code contract (2 = input error, 1 = verification/planning).
"""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Position:
    line: int
    column: int

    def __str__(self):
        return f"{self.line}:{self.column}"


class TentacleError(Exception):
    exit_code = 2


class InputError(TentacleError):
    """Bad scenario text, bad sorts, bad files. Exit code 2."""

    def __init__(self, message: str, position: Optional[Position] = None):
        self.position = position
        where = f" at {position}" if position else ""
        super().__init__(f"{message}{where}")


class ScenarioSyntaxError(InputError):
    pass


class SortError(InputError):
    def __init__(self, expected: str, found: str, position: Optional[Position] = None, detail: str = ""):
        self.expected = expected
        self.found = found
        message = f"SortError: expected {expected}, found {found}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message, position)


class UnknownSymbol(InputError):
    def __init__(self, name: str, position: Optional[Position] = None):
        self.name = name
        super().__init__(f"UnknownSymbol: {name}", position)


class SignatureError(InputError):
    pass


class ConfigError(InputError):
    pass


class ArtifactError(InputError):
    pass


class CyclicOrder(InputError):
    """A ground prior fact that would put a moment before itself."""


class UnorderedMoment(TentacleError):
    exit_code = 1

    def __init__(self, moment: str, detail: str = ""):
        self.moment = moment
        super().__init__(f"UnorderedMoment: {moment} {detail}".rstrip())


class MalformedPlanTerm(InputError):
    pass


class HorizonTooLarge(TentacleError):
    exit_code = 1

    def __init__(self, count: int, ceiling: int):
        self.count = count
        self.ceiling = ceiling
        super().__init__(f"HorizonTooLarge: {count} candidate plans exceed the ceiling of {ceiling}")


class EpisodeFailed(TentacleError):
    exit_code = 1

    def __init__(self, goal, certificate):
        self.goal = goal
        self.certificate = certificate
        super().__init__("EpisodeFailed: neither a solo nor a joint plan was found")


class UnresolvedConflict(TentacleError):
    exit_code = 1

    def __init__(self, obligations, refutation=None):
        self.obligations = tuple(obligations)
        self.refutation = refutation
        super().__init__(f"UnresolvedConflict between {len(self.obligations)} moral obligations")


class LockTimeout(TentacleError):
    exit_code = 1
