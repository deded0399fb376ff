"""Seeded random specifications ("Type 1" and "Type 2" benchmarks).

All randomness comes from SplitMix64, so a ``(type, params, seed)`` triple
names one benchmark instance on every platform.

Type 1 draws ``p + n`` distinct strings uniformly from all strings of length
at most ``le`` and gives the first ``p`` to P. Since long strings vastly
outnumber short ones, these specs are dominated by long strings.

Type 2 gives each slot a length drawn uniformly from ``0..le`` and then a
string of that length, so short strings such as the empty one turn up often.
A slot whose string is already in its own set, or whose length has no string
left outside the opposite set, is redrawn (length and string).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .infix import Specification, validate_spec

__all__ = [
    "MASK64", "prng_next", "SplitMix64", "BenchParams", "InfeasibleParams", "ResampleLimit",
    "count_strings", "string_of_rank", "gen_type1", "gen_type2", "generate",
    "default_alphabet", "parse_manifest", "format_manifest",
]

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
RESAMPLE_LIMIT = 10 ** 6
DENSE_LIMIT = 1 << 24
SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"


class InfeasibleParams(ValueError):
    pass


class ResampleLimit(RuntimeError):
    pass


def prng_next(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(output, new_state)``."""
    state = (state + GOLDEN) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        value, self.state = prng_next(self.state)
        return value

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection, no modulo bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound > 1 << 64:
            # compose wider draws for huge ranges
            nbits = (bound - 1).bit_length()
            while True:
                x = 0
                for _ in range((nbits + 63) // 64):
                    x = (x << 64) | self.next()
                x >>= (-nbits) % 64
                if x < bound:
                    return x
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def default_alphabet(k: int) -> tuple[str, ...]:
    if not 0 <= k <= len(SYMBOLS):
        raise ValueError(f"alphabet size must be in 0..{len(SYMBOLS)}")
    return tuple(SYMBOLS[:k])


@dataclass(frozen=True)
class BenchParams:
    bench_type: int
    seed: int
    alphabet: tuple[str, ...]
    le: int
    p: int
    n: int

    @classmethod
    def of(cls, bench_type: int, seed: int, k: int, le: int, p: int, n: int) -> "BenchParams":
        return cls(int(bench_type), int(seed), default_alphabet(int(k)), int(le), int(p), int(n))

    @property
    def k(self) -> int:
        return len(self.alphabet)


def count_strings(k: int, le: int) -> int:
    """Number of strings of length at most ``le`` over ``k`` symbols."""
    if k == 0:
        return 1
    if k == 1:
        return le + 1
    return (k ** (le + 1) - 1) // (k - 1)


def _word(alphabet: Sequence[str], length: int, r: int) -> str:
    k = len(alphabet)
    chars = []
    for _ in range(length):
        r, d = divmod(r, k)
        chars.append(alphabet[d])
    return "".join(reversed(chars))


def string_of_rank(alphabet: Sequence[str], rank: int) -> str:
    """The ``rank``-th string (0-based) in shortlex order over ``alphabet``."""
    k = len(alphabet)
    length = 0
    while True:
        block = k ** length
        if rank < block:
            return _word(alphabet, length, rank)
        rank -= block
        length += 1
        if k == 0:
            raise IndexError("only the empty string exists over an empty alphabet")


def _check(params: BenchParams) -> None:
    if params.le < 0 or params.p < 0 or params.n < 0:
        raise InfeasibleParams("le, p and n must be non-negative")
    total = count_strings(params.k, params.le)
    if params.p + params.n > total:
        raise InfeasibleParams(
            f"p + n = {params.p + params.n} exceeds the {total} strings of length <= {params.le}")


def gen_type1(params: BenchParams) -> Specification:
    _check(params)
    rng = SplitMix64(params.seed)
    total = count_strings(params.k, params.le)
    m = params.p + params.n
    if total <= DENSE_LIMIT:
        # partial Fisher-Yates over 0..total-1, stored sparsely
        swapped: dict[int, int] = {}
        ranks = []
        for i in range(m):
            j = i + rng.below(total - i)
            ranks.append(swapped.get(j, j))
            swapped[j] = swapped.get(i, i)
    else:
        chosen: set[int] = set()
        ranks = []
        while len(ranks) < m:
            r = rng.below(total)
            if r not in chosen:
                chosen.add(r)
                ranks.append(r)
    words = [string_of_rank(params.alphabet, r) for r in ranks]
    return validate_spec(words[:params.p], words[params.p:], params.alphabet)


def gen_type2(params: BenchParams) -> Specification:
    _check(params)
    rng = SplitMix64(params.seed)
    k, le = params.k, params.le
    pos: list[set[str]] = [set() for _ in range(le + 1)]
    neg: list[set[str]] = [set() for _ in range(le + 1)]
    out_pos: list[str] = []
    out_neg: list[str] = []
    attempts = 0
    for same, opposite, out, count in ((pos, neg, out_pos, params.p), (neg, pos, out_neg, params.n)):
        for _ in range(count):
            while True:
                attempts += 1
                if attempts > RESAMPLE_LIMIT:
                    raise ResampleLimit(f"gave up after {RESAMPLE_LIMIT} draws for {params}")
                length = rng.below(le + 1)
                size = k ** length
                if len(opposite[length]) + len(same[length]) >= size:
                    continue
                while True:
                    w = _word(params.alphabet, length, rng.below(size))
                    if w not in opposite[length]:
                        break
                    attempts += 1
                    if attempts > RESAMPLE_LIMIT:
                        raise ResampleLimit(f"gave up after {RESAMPLE_LIMIT} draws for {params}")
                if w in same[length]:
                    continue
                same[length].add(w)
                out.append(w)
                break
    return validate_spec(out_pos, out_neg, params.alphabet)


def generate(params: BenchParams) -> Specification:
    if params.bench_type == 1:
        return gen_type1(params)
    if params.bench_type == 2:
        return gen_type2(params)
    raise ValueError(f"unknown benchmark type {params.bench_type}")


MANIFEST_FIELDS = ("type", "seed", "k", "le", "p", "n")


def _parse_type(text: str) -> int:
    t = text.strip().lower().replace("type", "").strip()
    if t not in ("1", "2"):
        raise ValueError(f"benchmark type must be 1 or 2, got {text!r}")
    return int(t)


def parse_manifest(text: str) -> list[BenchParams]:
    """Parse ``type,seed,k,le,p,n`` lines; ``#`` comments, blanks and a header are skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if fields[0].lower() == "type":
            continue
        if len(fields) != 6:
            raise ValueError(f"manifest line {lineno}: expected 6 fields, got {len(fields)}")
        try:
            rows.append(BenchParams.of(_parse_type(fields[0]), *(int(f, 0) for f in fields[1:])))
        except ValueError as exc:
            raise ValueError(f"manifest line {lineno}: {exc}") from None
    return rows


def format_manifest(rows: Sequence[BenchParams]) -> str:
    lines = [",".join(MANIFEST_FIELDS)]
    lines += [f"{r.bench_type},{r.seed},{r.k},{r.le},{r.p},{r.n}" for r in rows]
    return "\n".join(lines) + "\n"
