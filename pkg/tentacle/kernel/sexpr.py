"""
S-expression reader with source positions.
`;` starts a comment that runs to the end of the line.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from tentacle.errors import Position, ScenarioSyntaxError


@dataclass(frozen=True)
class Symbol:
    text: str
    position: Position


@dataclass(frozen=True)
class SList:
    items: Tuple["Node", ...]
    position: Position

    @property
    def head(self):
        if self.items and isinstance(self.items[0], Symbol):
            return self.items[0].text
        return None


Node = Union[Symbol, SList]


def _tokens(text: str):
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, column = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            column += 1
            continue
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield ch, Position(line, column)
            i += 1
            column += 1
            continue
        start, start_col = i, column
        while i < len(text) and not text[i].isspace() and text[i] not in "();":
            i += 1
            column += 1
        yield text[start:i], Position(line, start_col)


def read_all(text: str) -> List[Node]:
    stack: List[Tuple[Position, list]] = []
    top: List[Node] = []
    for token, position in _tokens(text):
        if token == "(":
            stack.append((position, []))
        elif token == ")":
            if not stack:
                raise ScenarioSyntaxError("Unexpected ')'", position)
            opened, items = stack.pop()
            node = SList(tuple(items), opened)
            (stack[-1][1] if stack else top).append(node)
        else:
            (stack[-1][1] if stack else top).append(Symbol(token, position))
    if stack:
        raise ScenarioSyntaxError("Unclosed '('", stack[-1][0])
    return top


def read_one(text: str) -> Node:
    nodes = read_all(text)
    if not nodes:
        raise ScenarioSyntaxError("Empty input", Position(1, 1))
    if len(nodes) > 1:
        raise ScenarioSyntaxError("Trailing input after expression", nodes[1].position)
    return nodes[0]
