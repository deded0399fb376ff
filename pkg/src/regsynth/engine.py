"""Bottom-up search for a cost-minimal regex over characteristic sequences (CSs).

A CS is a language restricted to the infix-closure of the examples, stored
as a row of little-endian ``uint64`` words: bit ``i`` is set iff the
language contains ``iws.words[i]``. Because the closure is infix-closed,
union, concatenation, ``?`` and ``*`` can be computed on CSs directly, and
the cost of every language can be built up from strictly cheaper ones.

Candidates are produced in blocks (numpy arrays of CSs plus provenance) and
each block is deduplicated against every CS seen so far before being checked
against the specification. The first unique CS that satisfies the
specification wins, which keeps results identical to a one-at-a-time loop.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .infix import (GuideTable, IndexedWordSet, Specification, build_guide_table,
                    infix_closure)
from .regex import (EMPTY, EPSILON, Char, Concat, CostFn, Empty, Epsilon, Question, Regex,
                    Star, Union)
from .results import Found, MemoryExhausted, NotFound, SearchStats, SynthesisResult, TimedOut

__all__ = [
    "TAG_CHAR", "TAG_QUESTION", "TAG_STAR", "TAG_CONCAT", "TAG_UNION",
    "cs_width", "cs_zeros", "cs_from_indices", "cs_indices", "cs_from_int", "cs_to_int",
    "cs_union", "cs_concat", "cs_of_regex", "cs_star", "cs_question",
    "satisfies", "satisfies_with_error",
    "error_budget", "LanguageCache", "UniquenessSet", "dedup_insert", "reconstruct",
    "SearchStats", "SynthesisResult", "Found", "NotFound", "MemoryExhausted", "TimedOut",
    "Synthesizer", "synthesize",
]

TAG_CHAR, TAG_QUESTION, TAG_STAR, TAG_CONCAT, TAG_UNION = range(5)

DEFAULT_MAX_COST = 500
DEFAULT_MEMORY = 1 << 30

# bool elements materialized per concatenation chunk
_CHUNK_ELEMS = 1 << 22


# -- single-CS operations ---------------------------------------------------

def cs_width(n_words: int) -> int:
    """Bits per CS: the smallest power of two not below ``n_words``, at least 64."""
    return max(64, 1 << max(0, n_words - 1).bit_length())


def cs_zeros(width: int) -> np.ndarray:
    return np.zeros(width // 64, dtype=np.uint64)


def cs_from_indices(indices, width: int) -> np.ndarray:
    cs = cs_zeros(width)
    for i in indices:
        cs[i // 64] |= np.uint64(1 << (i % 64))
    return cs


def cs_indices(cs: np.ndarray) -> list[int]:
    bits = np.unpackbits(np.ascontiguousarray(cs, dtype="<u8").view(np.uint8), bitorder="little")
    return np.flatnonzero(bits).tolist()


def cs_from_int(x: int, width: int) -> np.ndarray:
    return np.array([(x >> (64 * k)) & 0xFFFFFFFFFFFFFFFF for k in range(width // 64)],
                    dtype=np.uint64)


def cs_to_int(cs: np.ndarray) -> int:
    return sum(int(w) << (64 * k) for k, w in enumerate(cs))


def _pack(bits: np.ndarray, n_words64: int) -> np.ndarray:
    """(m, n) bool -> (m, n_words64) uint64."""
    m = bits.shape[0]
    packed = np.packbits(bits, axis=1, bitorder="little")
    out = np.zeros((m, n_words64 * 8), dtype=np.uint8)
    out[:, :packed.shape[1]] = packed
    return out.view("<u8").astype(np.uint64, copy=False)


def _unpack(packed: np.ndarray, n: int) -> np.ndarray:
    """(m, W) uint64 -> (m, n) bool."""
    raw = np.ascontiguousarray(packed, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, axis=1, count=n, bitorder="little").view(bool)


def _concat_rows(a: np.ndarray, b: np.ndarray, gt: GuideTable) -> np.ndarray:
    """Row-wise product of (m, n) bool arrays: row k of ``a`` times row k of ``b``."""
    t = a[:, gt.left] & b[:, gt.right]
    return np.logical_or.reduceat(t, gt.starts, axis=1)


def _star_rows(a: np.ndarray, gt: GuideTable, eps_index: int) -> np.ndarray:
    s = np.zeros_like(a)
    s[:, eps_index] = True
    while True:
        nxt = s | _concat_rows(s, a, gt)
        if np.array_equal(nxt, s):
            return s
        s = nxt


def _check_widths(*css: np.ndarray) -> None:
    if len({c.shape for c in css}) != 1:
        raise ValueError("characteristic sequences differ in width")


def cs_union(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    _check_widths(a, b)
    return a | b


def cs_concat(a: np.ndarray, b: np.ndarray, gt: GuideTable) -> np.ndarray:
    _check_widths(a, b)
    n = len(gt)
    bits = _concat_rows(_unpack(a[None], n), _unpack(b[None], n), gt)
    return _pack(bits, len(a))[0]


def cs_star(a: np.ndarray, gt: GuideTable, eps_index: int = 0) -> np.ndarray:
    bits = _star_rows(_unpack(a[None], len(gt)), gt, eps_index)
    return _pack(bits, len(a))[0]


def cs_question(a: np.ndarray, eps_index: int = 0) -> np.ndarray:
    out = a.copy()
    out[eps_index // 64] |= np.uint64(1 << (eps_index % 64))
    return out


def cs_of_regex(r: Regex, iws: IndexedWordSet, gt: GuideTable) -> np.ndarray:
    """CS of ``r`` computed by composing CS operations along its structure."""
    width = cs_width(len(iws))
    if isinstance(r, Empty):
        return cs_zeros(width)
    if isinstance(r, Epsilon):
        return cs_question(cs_zeros(width), iws.eps_index)
    if isinstance(r, Char):
        i = iws.index.get(r.symbol)
        return cs_from_indices([] if i is None else [i], width)
    if isinstance(r, Question):
        return cs_question(cs_of_regex(r.child, iws, gt), iws.eps_index)
    if isinstance(r, Star):
        return cs_star(cs_of_regex(r.child, iws, gt), gt, iws.eps_index)
    a = cs_of_regex(r.left, iws, gt)
    b = cs_of_regex(r.right, iws, gt)
    return cs_concat(a, b, gt) if isinstance(r, Concat) else cs_union(a, b)


def satisfies(cs: np.ndarray, p_mask: np.ndarray, n_mask: np.ndarray) -> bool:
    return bool(np.array_equal(cs & p_mask, p_mask) and not (cs & n_mask).any())


def _misclassified(cs: np.ndarray, p_mask: np.ndarray, n_mask: np.ndarray) -> np.ndarray:
    """Per-row count of positives missed plus negatives accepted; ``cs`` is (m, W)."""
    missed = np.bitwise_count(p_mask & ~cs).sum(axis=-1, dtype=np.int64)
    wrong = np.bitwise_count(cs & n_mask).sum(axis=-1, dtype=np.int64)
    return missed + wrong


def satisfies_with_error(cs: np.ndarray, p_mask: np.ndarray, n_mask: np.ndarray,
                         budget: int) -> bool:
    return int(_misclassified(cs, p_mask, n_mask)) <= budget


def error_budget(allowed_error, n_examples: int) -> int:
    """Number of examples that may be misclassified: floor(allowed_error * n_examples)."""
    if isinstance(allowed_error, float):
        allowed_error = Fraction(repr(allowed_error))
    frac = Fraction(allowed_error)
    if not 0 <= frac < 1:
        raise ValueError(f"allowed error must be in [0, 1), got {allowed_error}")
    return math.floor(frac * n_examples)


# -- language cache and uniqueness -----------------------------------------

class LanguageCache:
    """Append-only store of unique CSs ordered by cost, with provenance.

    ``start_points`` maps a cost to the half-open entry range holding exactly
    the CSs of that cost. ``bits`` mirrors ``cs`` unpacked to one bool per
    word, which is what concatenation and star consume.
    """

    def __init__(self, n: int, width: int, capacity: int):
        self.n = n
        self.width = width
        self.capacity = capacity
        self._w = width // 64
        self._size = 0
        alloc = 64
        self.cs = np.zeros((alloc, self._w), dtype=np.uint64)
        self.bits = np.zeros((alloc, n), dtype=bool)
        self.tag = np.zeros(alloc, dtype=np.int8)
        self.left = np.zeros(alloc, dtype=np.int64)
        self.right = np.zeros(alloc, dtype=np.int64)
        self.start_points: dict[int, tuple[int, int]] = {}
        self.max_cached_cost = 0

    def __len__(self) -> int:
        return self._size

    def _grow(self, need: int) -> None:
        alloc = len(self.tag)
        if need <= alloc:
            return
        while alloc < need:
            alloc *= 2
        for name in ("cs", "bits", "tag", "left", "right"):
            old = getattr(self, name)
            new = np.zeros((alloc,) + old.shape[1:], dtype=old.dtype)
            new[:self._size] = old[:self._size]
            setattr(self, name, new)

    def append_level(self, cost: int, cs: np.ndarray, tag: np.ndarray,
                     left: np.ndarray, right: np.ndarray) -> None:
        if self.start_points and cost <= max(self.start_points):
            raise ValueError(f"level {cost} does not extend the cache")
        m = len(cs)
        start = self._size
        self._grow(start + m)
        end = start + m
        self.cs[start:end] = cs
        self.bits[start:end] = _unpack(cs, self.n)
        self.tag[start:end] = tag
        self.left[start:end] = left
        self.right[start:end] = right
        self._size = end
        if m:
            self.start_points[cost] = (start, end)
        self.max_cached_cost = cost

    def level(self, cost: int) -> tuple[int, int]:
        return self.start_points.get(cost, (0, 0))

    def cost_of(self, idx: int) -> int:
        for c, (s, e) in self.start_points.items():
            if s <= idx < e:
                return c
        raise IndexError(idx)

    def entry(self, idx: int) -> np.ndarray:
        if not 0 <= idx < self._size:
            raise IndexError(idx)
        return self.cs[idx]


class UniquenessSet:
    """Exact set of CS bit patterns (no fingerprinting, so no false merges)."""

    def __init__(self):
        self._seen: set = set()

    def __len__(self) -> int:
        return len(self._seen)

    @staticmethod
    def keys(cs: np.ndarray) -> list:
        """Hashable key per row of an (m, W) array."""
        if cs.shape[1] == 1:
            return cs[:, 0].tolist()
        raw = np.ascontiguousarray(cs).tobytes()
        step = cs.shape[1] * 8
        return [raw[k:k + step] for k in range(0, len(raw), step)]

    def __contains__(self, cs: np.ndarray) -> bool:
        return self.keys(np.atleast_2d(cs))[0] in self._seen

    def insert(self, cs: np.ndarray) -> bool:
        key = self.keys(np.atleast_2d(cs))[0]
        if key in self._seen:
            return False
        self._seen.add(key)
        return True

    def insert_block(self, cs: np.ndarray, stop_at: np.ndarray | None = None) -> tuple[list[int], int | None]:
        """Insert rows in order; return indices of rows that were new.

        If ``stop_at`` (a bool mask) is given, insertion stops right after the
        first new row flagged in it, and that row's index is returned too.
        """
        if len(cs) == 0:
            return [], None
        if len(cs) > 1:
            view = np.ascontiguousarray(cs).view(np.dtype((np.void, cs.shape[1] * 8))).ravel()
            _, first = np.unique(view, return_index=True)
            first.sort()
            cand = first
        else:
            cand = np.zeros(1, dtype=np.intp)
        keys = self.keys(cs[cand])
        seen = self._seen
        fresh = []
        if stop_at is None or not stop_at.any():
            for k, key in zip(cand.tolist(), keys):
                if key not in seen:
                    seen.add(key)
                    fresh.append(k)
            return fresh, None
        for k, key in zip(cand.tolist(), keys):
            if key not in seen:
                seen.add(key)
                fresh.append(k)
                if stop_at[k]:
                    return fresh, k
        return fresh, None


def dedup_insert(uniq: UniquenessSet, cs: np.ndarray) -> bool:
    return uniq.insert(cs)


def _regex_of(cache: LanguageCache, tag: int, left: int, right: int,
              alphabet: Sequence[str], memo: dict) -> Regex:
    if tag == TAG_CHAR:
        return Char(alphabet[left])
    if tag == TAG_QUESTION:
        return Question(reconstruct(cache, left, alphabet, memo))
    if tag == TAG_STAR:
        return Star(reconstruct(cache, left, alphabet, memo))
    l = reconstruct(cache, left, alphabet, memo)
    r = reconstruct(cache, right, alphabet, memo)
    return Concat(l, r) if tag == TAG_CONCAT else Union(l, r)


def reconstruct(cache: LanguageCache, idx: int, alphabet: Sequence[str],
                memo: dict | None = None) -> Regex:
    """Rebuild a regex for cache entry ``idx`` by following provenance."""
    memo = {} if memo is None else memo
    if idx in memo:
        return memo[idx]
    if not 0 <= idx < len(cache):
        raise IndexError(idx)
    r = _regex_of(cache, int(cache.tag[idx]), int(cache.left[idx]), int(cache.right[idx]),
                  alphabet, memo)
    memo[idx] = r
    return r


# -- the search -------------------------------------------------------------

@dataclass
class _Block:
    cs: np.ndarray
    tag: int
    left: np.ndarray
    right: np.ndarray


class _Overflow(Exception):
    pass


class Synthesizer:
    """One synthesis run. ``run()`` returns a :class:`SynthesisResult`.

    The cache, closure and guide table stay available afterwards for audits.
    """

    def __init__(self, spec: Specification, cost_fn=CostFn(), max_cost: int = DEFAULT_MAX_COST,
                 memory_budget: int = DEFAULT_MEMORY, allowed_error=0,
                 timeout: float | None = None):
        self.spec = spec
        self.cf = CostFn.of(cost_fn)
        self.max_cost = max_cost
        self.timeout = timeout
        self.budget = error_budget(allowed_error, spec.size)
        self.iws: IndexedWordSet = infix_closure(spec)
        self.guide: GuideTable = build_guide_table(self.iws)
        self.n = len(self.iws)
        self.width = cs_width(self.n)
        self._w = self.width // 64
        self.p_mask = cs_from_int(self.iws.p_mask, self.width)
        self.n_mask = cs_from_int(self.iws.n_mask, self.width)
        self.capacity = memory_budget // (3 * (self.width // 8))
        self.cache = LanguageCache(self.n, self.width, self.capacity)
        self.uniq = UniquenessSet()
        self.stats = SearchStats(width=self.width, n_words=self.n)
        self._level_buf: list[tuple[np.ndarray, int, np.ndarray, np.ndarray]] = []
        self._level_count = 0
        self._deadline = None

    # predicates

    def _ok(self, cs: np.ndarray) -> np.ndarray:
        if self.budget == 0:
            return (((cs & self.p_mask) == self.p_mask).all(axis=1)
                    & ((cs & self.n_mask) == 0).all(axis=1))
        return _misclassified(cs, self.p_mask, self.n_mask) <= self.budget

    # candidate generators; operands come from complete cache levels only

    def _operands(self, cost: int) -> tuple[int, int]:
        if cost < self.cf.char:
            return (0, 0)
        return self.cache.level(cost)

    def _question_blocks(self, c: int) -> Iterator[_Block]:
        s, e = self._operands(c - self.cf.question)
        if s == e:
            return
        eps = self.iws.eps_index
        idx = s + np.flatnonzero(~self.cache.bits[s:e, eps])
        if len(idx):
            cs = self.cache.cs[idx].copy()
            cs[:, eps // 64] |= np.uint64(1 << (eps % 64))
            yield _Block(cs, TAG_QUESTION, idx, idx)

    def _star_blocks(self, c: int) -> Iterator[_Block]:
        s, e = self._operands(c - self.cf.star)
        step = max(1, _CHUNK_ELEMS // max(1, self.guide.n_splits))
        for i0 in range(s, e, step):
            i1 = min(e, i0 + step)
            bits = _star_rows(self.cache.bits[i0:i1], self.guide, self.iws.eps_index)
            idx = np.arange(i0, i1)
            yield _Block(_pack(bits, self._w), TAG_STAR, idx, idx)

    def _splits(self, rem: int, ordered: bool) -> Iterator[tuple[int, int]]:
        c1 = self.cf.char
        for lc in range(c1, rem - c1 + 1):
            rc = rem - lc
            if not ordered and lc > rc:
                break
            yield lc, rc

    def _concat_blocks(self, c: int) -> Iterator[_Block]:
        gt = self.guide
        n_splits = gt.n_splits
        for lc, rc in self._splits(c - self.cf.concat, ordered=True):
            ls, le = self._operands(lc)
            rs, re_ = self._operands(rc)
            if ls == le or rs == re_:
                continue
            a_ext = self.cache.bits[ls:le][:, gt.left]
            b_ext = self.cache.bits[rs:re_][:, gt.right]
            nb = re_ - rs
            per_row = nb * n_splits
            if per_row <= _CHUNK_ELEMS:
                m = max(1, _CHUNK_ELEMS // per_row)
                jj_all = np.arange(rs, re_)
                for i0 in range(0, le - ls, m):
                    i1 = min(le - ls, i0 + m)
                    t = a_ext[i0:i1, None, :] & b_ext[None, :, :]
                    bits = np.logical_or.reduceat(t, gt.starts, axis=2).reshape(-1, self.n)
                    ii = np.repeat(np.arange(ls + i0, ls + i1), nb)
                    jj = np.tile(jj_all, i1 - i0)
                    yield _Block(_pack(bits, self._w), TAG_CONCAT, ii, jj)
            else:
                mj = max(1, _CHUNK_ELEMS // n_splits)
                for i in range(le - ls):
                    for j0 in range(0, nb, mj):
                        j1 = min(nb, j0 + mj)
                        t = a_ext[i][None, :] & b_ext[j0:j1]
                        bits = np.logical_or.reduceat(t, gt.starts, axis=1)
                        ii = np.full(j1 - j0, ls + i)
                        jj = np.arange(rs + j0, rs + j1)
                        yield _Block(_pack(bits, self._w), TAG_CONCAT, ii, jj)

    def _union_blocks(self, c: int) -> Iterator[_Block]:
        for lc, rc in self._splits(c - self.cf.union, ordered=False):
            ls, le = self._operands(lc)
            rs, re_ = self._operands(rc)
            if ls == le or rs == re_:
                continue
            a = self.cache.cs[ls:le]
            b = self.cache.cs[rs:re_]
            nb = re_ - rs
            m = max(1, _CHUNK_ELEMS // (nb * self._w * 8))
            for i0 in range(0, le - ls, m):
                i1 = min(le - ls, i0 + m)
                if lc == rc:
                    # unordered pairs i < j within one level
                    ii, jj = np.nonzero(np.arange(i0, i1)[:, None] < np.arange(nb)[None, :])
                    ii = ii + i0
                else:
                    ii = np.repeat(np.arange(i0, i1), nb)
                    jj = np.tile(np.arange(nb), i1 - i0)
                if len(ii) == 0:
                    continue
                yield _Block(a[ii] | b[jj], TAG_UNION, ls + ii, rs + jj)

    def _level_blocks(self, c: int) -> Iterator[_Block]:
        return itertools.chain(self._question_blocks(c), self._star_blocks(c),
                               self._concat_blocks(c), self._union_blocks(c))

    # block processing

    def _check_time(self, cost: int) -> None:
        if self._deadline is not None and time.perf_counter() > self._deadline:
            raise _Timeout(cost)

    def _process(self, block: _Block, c: int) -> Regex | None:
        """Dedup, check and buffer one block; returns the winning regex if any."""
        sat = self._ok(block.cs)
        fresh, winner = self.uniq.insert_block(block.cs, stop_at=sat)
        if winner is not None:
            self.stats.cs_generated += winner + 1
        else:
            self.stats.cs_generated += len(block.cs)
        if fresh:
            sel = np.asarray(fresh)
            self._level_buf.append((block.cs[sel], block.tag, block.left[sel], block.right[sel]))
            self._level_count += len(sel)
        if winner is not None:
            self._commit(c)
            return reconstruct(self.cache, len(self.cache) - 1, self.spec.alphabet)
        if len(self.cache) + self._level_count > self.capacity:
            raise _Overflow()
        return None

    def _process_onthefly(self, block: _Block) -> Regex | None:
        sat = self._ok(block.cs)
        hits = np.flatnonzero(sat)
        if len(hits) == 0:
            self.stats.cs_generated += len(block.cs)
            return None
        k = int(hits[0])
        self.stats.cs_generated += k + 1
        return _regex_of(self.cache, block.tag, int(block.left[k]), int(block.right[k]),
                         self.spec.alphabet, {})

    def _commit(self, c: int) -> None:
        if self._level_buf:
            cs = np.concatenate([b[0] for b in self._level_buf])
            tag = np.concatenate([np.full(len(b[0]), b[1], dtype=np.int8) for b in self._level_buf])
            left = np.concatenate([b[2] for b in self._level_buf])
            right = np.concatenate([b[3] for b in self._level_buf])
        else:
            cs = np.zeros((0, self._w), dtype=np.uint64)
            tag = np.zeros(0, dtype=np.int8)
            left = right = np.zeros(0, dtype=np.int64)
        self.cache.append_level(c, cs, tag, left, right)
        self._level_buf = []
        self._level_count = 0
        self.stats.peak_cache_entries = max(self.stats.peak_cache_entries, len(self.cache))

    def _reachable(self, c: int) -> bool:
        m = self.cache.max_cached_cost
        cf = self.cf
        return (c - cf.question <= m or c - cf.star <= m
                or c - cf.concat <= 2 * m or c - cf.union <= 2 * m)

    # driver

    def _trivial(self) -> Regex | None:
        """The empty language and {eps}, checked at the base cost before any character."""
        zero = cs_zeros(self.width)
        eps = cs_question(zero, self.iws.eps_index)
        for regex, cs in ((EMPTY, zero), (EPSILON, eps)):
            self.stats.cs_generated += 1
            if self._ok(cs[None])[0]:
                return regex
        return None

    def _seed_block(self) -> _Block:
        rows = []
        for a in self.spec.alphabet:
            i = self.iws.index.get(a)
            rows.append(cs_from_indices([] if i is None else [i], self.width))
        idx = np.arange(len(rows))
        cs = np.array(rows, dtype=np.uint64).reshape(len(rows), self._w)
        return _Block(cs, TAG_CHAR, idx, idx)

    def _finish(self, result: SynthesisResult, t0: float) -> SynthesisResult:
        self.stats.unique_cs = len(self.uniq)
        self.stats.peak_cache_entries = max(self.stats.peak_cache_entries, len(self.cache))
        self.stats.elapsed = time.perf_counter() - t0
        result.stats = self.stats
        return result

    def run(self) -> SynthesisResult:
        t0 = time.perf_counter()
        if self.timeout is not None:
            self._deadline = t0 + self.timeout
        c1 = self.cf.char
        found = self._trivial()
        if found is not None:
            return self._finish(Found(regex=found, cost=c1), t0)
        if c1 > self.max_cost:
            return self._finish(NotFound(max_cost_reached=self.max_cost), t0)
        try:
            if self.spec.alphabet:
                found = self._process(self._seed_block(), c1)
                if found is not None:
                    return self._finish(Found(regex=found, cost=c1), t0)
        except _Overflow:
            self._level_buf, self._level_count = [], 0
            self.stats.onthefly_from = c1
            return self._finish(MemoryExhausted(last_complete_cost=0), t0)
        self._commit(c1)
        onthefly = False
        try:
            for c in range(c1 + 1, self.max_cost + 1):
                self._check_time(c)
                if onthefly and not self._reachable(c):
                    return self._finish(
                        MemoryExhausted(last_complete_cost=self.cache.max_cached_cost), t0)
                if not onthefly:
                    try:
                        for block in self._level_blocks(c):
                            found = self._process(block, c)
                            if found is not None:
                                return self._finish(Found(regex=found, cost=c), t0)
                            self._check_time(c)
                        self._commit(c)
                        continue
                    except _Overflow:
                        self._level_buf, self._level_count = [], 0
                        onthefly = True
                        self.stats.onthefly_from = c
                for block in self._level_blocks(c):
                    found = self._process_onthefly(block)
                    if found is not None:
                        return self._finish(Found(regex=found, cost=c), t0)
                    self._check_time(c)
        except _Timeout as exc:
            return self._finish(TimedOut(cost_reached=exc.cost), t0)
        return self._finish(NotFound(max_cost_reached=self.max_cost), t0)


class _Timeout(Exception):
    def __init__(self, cost: int):
        self.cost = cost


def synthesize(spec: Specification, cost_fn=CostFn(), max_cost: int = DEFAULT_MAX_COST,
               memory_budget: int = DEFAULT_MEMORY, allowed_error=0,
               timeout: float | None = None) -> SynthesisResult:
    """Find a cost-minimal regex consistent with ``spec`` (up to ``allowed_error``)."""
    return Synthesizer(spec, cost_fn, max_cost, memory_budget, allowed_error, timeout).run()
