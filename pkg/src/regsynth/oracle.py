"""Brute-force reference synthesizer for cross-checking the engine on small inputs.

Two strategies, both independent of the characteristic-sequence machinery:

* ``exhaustive=True`` walks every regex tree in cost order
  (:func:`enumerate_regexes`) and tests it with :func:`~regsynth.regex.matches`.
  Only feasible up to cost 7 or so.
* the default keeps, per cost, one tree for each distinct *span table*: for
  every example string ``w`` the set of pairs ``(i, j)`` with ``w[i:j]`` in the
  language. Span tables compose exactly under every constructor, so a tree
  can be swapped for another with the same table without changing which
  examples it accepts. Answers are re-verified with ``matches``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Sequence

from .infix import Specification
from .regex import (EMPTY, EPSILON, Char, Concat, CostFn, Question, Regex, Star, Union, cost,
                    matches)
from .results import Found, NotFound, SearchStats

__all__ = ["enumerate_regexes", "oracle_synthesize", "SpanTables"]


def enumerate_regexes(alphabet: Sequence[str], cf=CostFn(), max_cost: int = 10) -> Iterator[Regex]:
    """Every regex over ``alphabet`` built from characters, ?, *, concatenation
    and union, in non-decreasing cost order; no tree is produced twice."""
    cf = CostFn.of(cf)
    pools: dict[int, list[Regex]] = {}
    for c in range(cf.char, max_cost + 1):
        pool: list[Regex] = []
        if c == cf.char:
            pool.extend(Char(a) for a in sorted(alphabet))
        pool.extend(Question(r) for r in pools.get(c - cf.question, ()))
        pool.extend(Star(r) for r in pools.get(c - cf.star, ()))
        for ctor, k in ((Concat, cf.concat), (Union, cf.union)):
            rem = c - k
            for lc in range(cf.char, rem - cf.char + 1):
                for l in pools.get(lc, ()):
                    for r in pools.get(rem - lc, ()):
                        pool.append(ctor(l, r))
        pools[c] = pool
        yield from pool


class SpanTables:
    """Span-table arithmetic for a fixed list of example strings.

    A table is a flat tuple of ints: for string ``k`` and start ``i``, the
    entry is a bitmask of end positions ``j`` with ``w[i:j]`` in the language.
    """

    def __init__(self, examples: Sequence[str]):
        self.examples = list(examples)
        self.offsets = []
        off = 0
        for w in self.examples:
            self.offsets.append(off)
            off += len(w) + 1
        self.length = off
        self._ident = []
        for w in self.examples:
            self._ident.extend(1 << i for i in range(len(w) + 1))
        self.identity = tuple(self._ident)
        self.empty = (0,) * off

    def char(self, a: str) -> tuple:
        rows = []
        for w in self.examples:
            rows.extend((1 << (i + 1)) if i < len(w) and w[i] == a else 0
                        for i in range(len(w) + 1))
        return tuple(rows)

    def union(self, x: tuple, y: tuple) -> tuple:
        return tuple(a | b for a, b in zip(x, y))

    def question(self, x: tuple) -> tuple:
        return tuple(a | b for a, b in zip(x, self.identity))

    def concat(self, x: tuple, y: tuple) -> tuple:
        out = []
        for off, w in zip(self.offsets, self.examples):
            for i in range(len(w) + 1):
                row = x[off + i]
                acc = 0
                j = 0
                while row:
                    if row & 1:
                        acc |= y[off + j]
                    row >>= 1
                    j += 1
                out.append(acc)
        return tuple(out)

    def star(self, x: tuple) -> tuple:
        s = self.identity
        while True:
            nxt = self.union(s, self.concat(s, x))
            if nxt == s:
                return s
            s = nxt

    def accepted(self, x: tuple) -> list[bool]:
        return [bool(x[off] >> len(w) & 1) for off, w in zip(self.offsets, self.examples)]


def _budget(allowed_error, n: int) -> int:
    frac = Fraction(repr(allowed_error)) if isinstance(allowed_error, float) else Fraction(allowed_error)
    return math.floor(frac * n)


def _errors(accepts: Sequence[bool], labels: Sequence[bool]) -> int:
    return sum(a != l for a, l in zip(accepts, labels))


def oracle_synthesize(spec: Specification, cost_fn=CostFn(), max_cost: int = 30,
                      allowed_error=0, exhaustive: bool = False):
    """Cheapest regex satisfying ``spec`` (up to ``allowed_error``), found by enumeration.

    Like the engine, the empty set and the empty string are tried first at the
    character cost and never appear as subterms.
    """
    cf = CostFn.of(cost_fn)
    examples = list(spec.positive) + list(spec.negative)
    labels = [True] * len(spec.positive) + [False] * len(spec.negative)
    budget = _budget(allowed_error, len(examples))
    stats = SearchStats()

    def ok(r: Regex) -> bool:
        return _errors([matches(r, w) for w in examples], labels) <= budget

    for r in (EMPTY, EPSILON):
        stats.cs_generated += 1
        if ok(r):
            return Found(stats=stats, regex=r, cost=cf.char)

    if exhaustive:
        for r in enumerate_regexes(spec.alphabet, cf, max_cost):
            stats.cs_generated += 1
            if ok(r):
                return Found(stats=stats, regex=r, cost=cost(r, cf))
        return NotFound(stats=stats, max_cost_reached=max_cost)

    st = SpanTables(examples)
    seen: set[tuple] = set()
    pools: dict[int, list[tuple[Regex, tuple]]] = {}

    for c in range(cf.char, max_cost + 1):
        pool: list[tuple[Regex, tuple]] = []

        def candidates():
            if c == cf.char:
                for a in spec.alphabet:
                    yield Char(a), st.char(a)
            for r, t in pools.get(c - cf.question, ()):
                yield Question(r), st.question(t)
            for r, t in pools.get(c - cf.star, ()):
                yield Star(r), st.star(t)
            rem = c - cf.concat
            for lc in range(cf.char, rem - cf.char + 1):
                for l, lt in pools.get(lc, ()):
                    for r, rt in pools.get(rem - lc, ()):
                        yield Concat(l, r), st.concat(lt, rt)
            rem = c - cf.union
            for lc in range(cf.char, rem - cf.char + 1):
                for l, lt in pools.get(lc, ()):
                    for r, rt in pools.get(rem - lc, ()):
                        yield Union(l, r), st.union(lt, rt)

        for r, t in candidates():
            stats.cs_generated += 1
            if t in seen:
                continue
            seen.add(t)
            if _errors(st.accepted(t), labels) <= budget:
                if not ok(r):  # span tables and the matcher disagree
                    raise AssertionError(f"span table for {r} is inconsistent with matches()")
                stats.unique_cs = len(seen)
                return Found(stats=stats, regex=r, cost=c)
            pool.append((r, t))
        pools[c] = pool
    stats.unique_cs = len(seen)
    return NotFound(stats=stats, max_cost_reached=max_cost)

