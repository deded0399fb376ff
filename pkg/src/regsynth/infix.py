"""Example specifications, their shortlex-ordered infix-closure and the guide table."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

__all__ = [
    "SpecError", "OverlapError", "AlphabetError",
    "Specification", "IndexedWordSet", "GuideTable",
    "validate_spec", "infix_closure", "build_guide_table", "shortlex_key",
]


class SpecError(ValueError):
    """Base class for invalid example specifications."""


class OverlapError(SpecError):
    def __init__(self, witnesses: Iterable[str]):
        self.witnesses = sorted(witnesses, key=lambda w: (len(w), w))
        super().__init__(f"strings are both positive and negative: {self.witnesses!r}")


class AlphabetError(SpecError):
    def __init__(self, missing: Iterable[str]):
        self.missing = sorted(missing)
        super().__init__(f"characters not in the alphabet: {self.missing!r}")


def _dedup(words: Iterable[str]) -> tuple[str, ...]:
    return tuple(dict.fromkeys(words))


@dataclass(frozen=True)
class Specification:
    """Positive and negative example strings over ``alphabet``.

    Example order is kept (first occurrence wins) so that spec files round-trip;
    equality ignores it.
    """

    positive: tuple[str, ...]
    negative: tuple[str, ...]
    alphabet: tuple[str, ...]

    def __eq__(self, other):
        if not isinstance(other, Specification):
            return NotImplemented
        return (set(self.positive) == set(other.positive)
                and set(self.negative) == set(other.negative)
                and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash((frozenset(self.positive), frozenset(self.negative), self.alphabet))

    @property
    def size(self) -> int:
        return len(self.positive) + len(self.negative)


def validate_spec(positive: Iterable[str], negative: Iterable[str],
                  alphabet: Iterable[str] | None = None) -> Specification:
    """Check disjointness and alphabet membership, infer the alphabet if not given."""
    pos = _dedup(positive)
    neg = _dedup(negative)
    for w in pos + neg:
        if not isinstance(w, str):
            raise TypeError(f"examples must be strings, got {w!r}")
    overlap = set(pos) & set(neg)
    if overlap:
        raise OverlapError(overlap)
    used = {c for w in pos + neg for c in w}
    if alphabet is None:
        sigma = used
    else:
        sigma = set(alphabet)
        bad = [a for a in sigma if len(a) != 1]
        if bad:
            raise SpecError(f"alphabet symbols must be single characters: {bad!r}")
        if used - sigma:
            raise AlphabetError(used - sigma)
    return Specification(pos, neg, tuple(sorted(sigma)))


def shortlex_key(w: str) -> tuple[int, str]:
    return (len(w), w)


@dataclass(frozen=True)
class IndexedWordSet:
    """The infix-closure of P and N in shortlex order; bit ``i`` of a CS is ``words[i]``."""

    words: tuple[str, ...]
    index: dict[str, int] = field(repr=False)
    p_mask: int
    n_mask: int
    eps_index: int = 0

    def __len__(self) -> int:
        return len(self.words)

    @property
    def positive_indices(self) -> list[int]:
        return [i for i in range(len(self.words)) if self.p_mask >> i & 1]

    @property
    def negative_indices(self) -> list[int]:
        return [i for i in range(len(self.words)) if self.n_mask >> i & 1]

    @property
    def max_length(self) -> int:
        return len(self.words[-1])


def infix_closure(spec: Specification) -> IndexedWordSet:
    infixes = {""}
    for w in spec.positive + spec.negative:
        n = len(w)
        infixes.update(w[i:j] for i in range(n) for j in range(i + 1, n + 1))
    words = tuple(sorted(infixes, key=shortlex_key))
    index = {w: i for i, w in enumerate(words)}
    p_mask = sum(1 << index[w] for w in spec.positive)
    n_mask = sum(1 << index[w] for w in spec.negative)
    return IndexedWordSet(words, index, p_mask, n_mask, index[""])


class GuideTable:
    """For every word index, the index pairs ``(l, r)`` with ``words[l] + words[r] == words[w]``.

    Rows list splits by increasing left length. ``left``, ``right`` and
    ``starts`` are the rows flattened into arrays, row ``w`` occupying
    ``left[starts[w]:starts[w + 1]]``.
    """

    def __init__(self, rows: list[tuple[tuple[int, int], ...]]):
        self.rows = tuple(rows)
        sizes = [len(r) for r in self.rows]
        self.starts = np.concatenate(([0], np.cumsum(sizes)[:-1])).astype(np.intp)
        flat = [pair for row in self.rows for pair in row]
        self.left = np.array([l for l, _ in flat], dtype=np.intp)
        self.right = np.array([r for _, r in flat], dtype=np.intp)

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, w: int) -> tuple[tuple[int, int], ...]:
        return self.rows[w]

    @property
    def n_splits(self) -> int:
        return len(self.left)


def build_guide_table(iws: IndexedWordSet) -> GuideTable:
    idx = iws.index
    rows = []
    for w in iws.words:
        rows.append(tuple((idx[w[:k]], idx[w[k:]]) for k in range(len(w) + 1)))
    return GuideTable(rows)
