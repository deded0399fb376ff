"""Regular expression syntax trees, costs, exact matching, parsing and printing.

Text syntax::

    regex   := union
    union   := concat ('+' concat)*
    concat  := postfix postfix*
    postfix := atom ('*' | '?')*
    atom    := CHAR | '\\' ANYCHAR | '(' regex ')' | 'empty' | 'eps' | '∅' | 'ε'

Postfix operators bind tightest, juxtaposition is concatenation and ``+`` is
union. Concatenation and union associate to the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Union as _U

__all__ = [
    "Regex", "Empty", "Epsilon", "Char", "Question", "Star", "Concat", "Union",
    "EMPTY", "EPSILON", "CostFn", "RegexSyntaxError",
    "cost", "matches", "language_on", "parse_regex", "print_regex",
    "symbols", "size",
]

SPECIAL = frozenset("()*?+\\")


@dataclass(frozen=True)
class Empty:
    def __str__(self) -> str:
        return print_regex(self)


@dataclass(frozen=True)
class Epsilon:
    def __str__(self) -> str:
        return print_regex(self)


@dataclass(frozen=True)
class Char:
    symbol: str

    def __post_init__(self):
        if len(self.symbol) != 1:
            raise ValueError(f"Char needs a single character, got {self.symbol!r}")

    def __str__(self) -> str:
        return print_regex(self)


@dataclass(frozen=True)
class Question:
    child: "Regex"

    def __str__(self) -> str:
        return print_regex(self)


@dataclass(frozen=True)
class Star:
    child: "Regex"

    def __str__(self) -> str:
        return print_regex(self)


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"

    def __str__(self) -> str:
        return print_regex(self)


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"

    def __str__(self) -> str:
        return print_regex(self)


Regex = _U[Empty, Epsilon, Char, Question, Star, Concat, Union]

EMPTY = Empty()
EPSILON = Epsilon()


class CostFn(NamedTuple):
    """Constructor costs in the order (char, ?, *, concatenation, union).

    ``char`` is also the cost of the empty set and of the empty string.
    """

    char: int = 1
    question: int = 1
    star: int = 1
    concat: int = 1
    union: int = 1

    @classmethod
    def of(cls, costs: Iterable[int] | str | "CostFn") -> "CostFn":
        if isinstance(costs, CostFn):
            return costs
        if isinstance(costs, str):
            costs = [int(c) for c in costs.replace("(", "").replace(")", "").split(",")]
        costs = tuple(int(c) for c in costs)
        if len(costs) != 5:
            raise ValueError(f"cost function needs 5 components, got {len(costs)}")
        if any(c < 1 for c in costs):
            raise ValueError(f"all constructor costs must be >= 1, got {costs}")
        return cls(*costs)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self) + ")"


def cost(r: Regex, cf: CostFn | Sequence[int] = CostFn()) -> int:
    """Cost of ``r`` under the cost homomorphism ``cf``."""
    cf = CostFn.of(cf)
    # iterative to cope with deep trees
    total = 0
    stack = [r]
    while stack:
        node = stack.pop()
        if isinstance(node, (Empty, Epsilon, Char)):
            total += cf.char
        elif isinstance(node, Question):
            total += cf.question
            stack.append(node.child)
        elif isinstance(node, Star):
            total += cf.star
            stack.append(node.child)
        elif isinstance(node, Concat):
            total += cf.concat
            stack.extend((node.left, node.right))
        elif isinstance(node, Union):
            total += cf.union
            stack.extend((node.left, node.right))
        else:
            raise TypeError(f"not a regex: {node!r}")
    return total


def size(r: Regex) -> int:
    """Number of nodes in the tree."""
    if isinstance(r, (Question, Star)):
        return 1 + size(r.child)
    if isinstance(r, (Concat, Union)):
        return 1 + size(r.left) + size(r.right)
    return 1


def symbols(r: Regex) -> set[str]:
    """Characters occurring in ``r``."""
    if isinstance(r, Char):
        return {r.symbol}
    if isinstance(r, (Question, Star)):
        return symbols(r.child)
    if isinstance(r, (Concat, Union)):
        return symbols(r.left) | symbols(r.right)
    return set()


# -- matching ---------------------------------------------------------------

def _ends(r: Regex, w: str, starts: frozenset[int]) -> frozenset[int]:
    """Positions ``j`` such that ``w[i:j]`` is in L(r) for some ``i`` in ``starts``."""
    if not starts:
        return starts
    if isinstance(r, Char):
        n = len(w)
        return frozenset(i + 1 for i in starts if i < n and w[i] == r.symbol)
    if isinstance(r, Epsilon):
        return starts
    if isinstance(r, Empty):
        return frozenset()
    if isinstance(r, Question):
        return starts | _ends(r.child, w, starts)
    if isinstance(r, Concat):
        return _ends(r.right, w, _ends(r.left, w, starts))
    if isinstance(r, Union):
        return _ends(r.left, w, starts) | _ends(r.right, w, starts)
    if isinstance(r, Star):
        reached = set(starts)
        frontier = starts
        while frontier:
            frontier = _ends(r.child, w, frontier) - reached
            reached |= frontier
        return frozenset(reached)
    raise TypeError(f"not a regex: {r!r}")


def matches(r: Regex, w: str) -> bool:
    """True iff the whole of ``w`` is in the language of ``r``."""
    return len(w) in _ends(r, w, frozenset((0,)))


def language_on(r: Regex, words: Sequence[str]) -> int:
    """Bitvector (as an int) with bit ``i`` set iff ``words[i]`` is matched by ``r``."""
    bits = 0
    for i, w in enumerate(words):
        if matches(r, w):
            bits |= 1 << i
    return bits


# -- printing ---------------------------------------------------------------

_PREC_UNION, _PREC_CONCAT, _PREC_POSTFIX, _PREC_ATOM = range(4)


def _prec(r: Regex) -> int:
    if isinstance(r, Union):
        return _PREC_UNION
    if isinstance(r, Concat):
        return _PREC_CONCAT
    if isinstance(r, (Star, Question)):
        return _PREC_POSTFIX
    return _PREC_ATOM


def _tokens(r: Regex, out: list[tuple[str, bool]]) -> None:
    # each token is (text, is_literal_char)
    def wrap(sub: Regex, need: bool) -> None:
        if need:
            out.append(("(", False))
            _tokens(sub, out)
            out.append((")", False))
        else:
            _tokens(sub, out)

    if isinstance(r, Empty):
        out.append(("empty", False))
    elif isinstance(r, Epsilon):
        out.append(("eps", False))
    elif isinstance(r, Char):
        out.append((r.symbol, True))
    elif isinstance(r, (Star, Question)):
        wrap(r.child, _prec(r.child) < _PREC_POSTFIX)
        out.append(("*" if isinstance(r, Star) else "?", False))
    elif isinstance(r, Concat):
        wrap(r.left, _prec(r.left) < _PREC_CONCAT)
        wrap(r.right, _prec(r.right) <= _PREC_CONCAT)
    elif isinstance(r, Union):
        wrap(r.left, False)
        out.append(("+", False))
        wrap(r.right, _prec(r.right) <= _PREC_UNION)
    else:
        raise TypeError(f"not a regex: {r!r}")


def print_regex(r: Regex) -> str:
    """Render ``r`` with the fewest parentheses that still parse back to ``r``."""
    toks: list[tuple[str, bool]] = []
    _tokens(r, toks)
    texts = [t for t, _ in toks]
    parts = []
    for i, (text, literal) in enumerate(toks):
        if literal and (text in SPECIAL or text in "∅ε"):
            text = "\\" + text
        elif literal and text == "e":
            rest = "".join(texts[i + 1:i + 5])
            if rest.startswith("ps") or rest.startswith("mpty"):
                text = "\\e"
        parts.append(text)
    return "".join(parts)


# -- parsing ----------------------------------------------------------------

class RegexSyntaxError(ValueError):
    """Malformed regex text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def error(self, message: str) -> RegexSyntaxError:
        return RegexSyntaxError(message, self.text, self.pos)

    def parse(self) -> Regex:
        if not self.text:
            raise self.error("empty regex text")
        r = self.union()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.peek()!r}")
        return r

    def union(self) -> Regex:
        r = self.concat()
        while self.peek() == "+":
            self.pos += 1
            r = Union(r, self.concat())
        return r

    def concat(self) -> Regex:
        r = self.postfix()
        while self.peek() is not None and self.peek() not in "+)":
            r = Concat(r, self.postfix())
        return r

    def postfix(self) -> Regex:
        r = self.atom()
        while self.peek() in ("*", "?"):
            r = Star(r) if self.peek() == "*" else Question(r)
            self.pos += 1
        return r

    def atom(self) -> Regex:
        c = self.peek()
        if c is None:
            raise self.error("unexpected end of input")
        if c == "(":
            self.pos += 1
            r = self.union()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return r
        if c == "\\":
            if self.pos + 1 >= len(self.text):
                raise self.error("dangling escape")
            self.pos += 2
            return Char(self.text[self.pos - 1])
        if c in ")*?+":
            raise self.error(f"unexpected {c!r}")
        for word, node in (("empty", EMPTY), ("eps", EPSILON), ("∅", EMPTY), ("ε", EPSILON)):
            if self.text.startswith(word, self.pos):
                self.pos += len(word)
                return node
        self.pos += 1
        return Char(c)


def parse_regex(text: str) -> Regex:
    """Parse regex text (see module docstring for the grammar)."""
    return _Parser(text).parse()
