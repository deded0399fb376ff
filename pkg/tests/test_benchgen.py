import math

import pytest

from regsynth.benchgen import (BenchParams, InfeasibleParams, SplitMix64, count_strings,
                               format_manifest, gen_type1, gen_type2, generate, parse_manifest,
                               prng_next, string_of_rank)
from regsynth.infix import shortlex_key
from regsynth.specfile import format_spec


def test_splitmix_reference_value():
    assert prng_next(0)[0] == 0xE220A8397B1DCDAF
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF
    assert SplitMix64(1).next() != SplitMix64(2).next()
    a, b = SplitMix64(99), SplitMix64(99)
    assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]


def test_below_is_in_range_and_covers():
    rng = SplitMix64(5)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    big = 3 ** 50
    assert all(0 <= rng.below(big) < big for _ in range(100))


def test_count_and_rank():
    assert count_strings(2, 3) == 15 and count_strings(1, 4) == 5 and count_strings(3, 0) == 1
    words = [string_of_rank("01", r) for r in range(15)]
    assert words == sorted(words, key=shortlex_key) and len(set(words)) == 15
    assert words[0] == "" and words[-1] == "111"


def test_type1_infeasible():
    with pytest.raises(InfeasibleParams):
        gen_type1(BenchParams.of(1, 0, 2, 3, 10, 6))
    gen_type1(BenchParams.of(1, 0, 2, 3, 10, 5))  # exactly fills the 15 strings


def test_le_zero():
    spec = gen_type1(BenchParams.of(1, 4, 2, 0, 1, 0))
    assert spec.positive == ("",) and spec.negative == ()
    with pytest.raises(InfeasibleParams):
        gen_type2(BenchParams.of(2, 4, 2, 0, 1, 1))
    assert gen_type2(BenchParams.of(2, 4, 2, 0, 0, 1)).negative == ("",)


@pytest.mark.parametrize("t", [1, 2])
def test_determinism_byte_identical(t):
    for seed in range(20):
        params = BenchParams.of(t, seed, 3, 6, 8, 7)
        assert format_spec(generate(params)) == format_spec(generate(params))
    assert generate(BenchParams.of(t, 1, 2, 8, 5, 5)) != generate(BenchParams.of(t, 2, 2, 8, 5, 5))


@pytest.mark.parametrize("t", [1, 2])
def test_validity_and_cardinality(t):
    for seed in range(200):
        k, le = 1 + seed % 3, seed % 6
        total = count_strings(k, le)
        p, n = min(seed % 7, total // 2), min(seed % 5, total - total // 2)
        spec = generate(BenchParams.of(t, seed, k, le, p, n))
        assert len(spec.positive) == p and len(spec.negative) == n
        assert not set(spec.positive) & set(spec.negative)
        words = spec.positive + spec.negative
        assert all(len(w) <= le and set(w) <= set(spec.alphabet) for w in words)


def test_type1_dense_and_sparse_paths():
    spec = gen_type1(BenchParams.of(1, 11, 2, 30, 20, 20))  # 2^31 - 1 strings: sparse path
    assert len(set(spec.positive + spec.negative)) == 40
    assert max(map(len, spec.positive + spec.negative)) >= 25


def test_type1_length_marginal():
    sevens = total = 0
    for seed in range(400):
        spec = gen_type1(BenchParams.of(1, seed, 2, 7, 10, 10))
        words = spec.positive + spec.negative
        sevens += sum(len(w) == 7 for w in words)
        total += len(words)
    p = 128 / 255
    sd = math.sqrt(p * (1 - p) / total)
    # sampling without replacement only shrinks the variance
    assert abs(sevens / total - p) < 4 * sd


def test_type2_epsilon_rate_meets_bound():
    le, p, n = 10, 10, 10
    seeds = 10_000
    hits = sum("" in (s := gen_type2(BenchParams.of(2, seed, 2, le, p, n))).positive + s.negative
               for seed in range(seeds))
    bound = 1 - (le / (le + 1)) ** (p + n)
    sd = math.sqrt(bound * (1 - bound) / seeds)
    assert hits / seeds >= bound - 3 * sd


def test_type2_has_short_strings_type1_does_not():
    def mean_len(t):
        lens = [len(w) for seed in range(100)
                for s in [generate(BenchParams.of(t, seed, 2, 10, 10, 10))]
                for w in s.positive + s.negative]
        return sum(lens) / len(lens)
    assert mean_len(1) > 8.5 and mean_len(2) < 6


def test_manifest_round_trip():
    text = "# suite\ntype,seed,k,le,p,n\n1,0,2,3,2,2\n\ntype2,0x10,3,4,1,1\n"
    rows = parse_manifest(text)
    assert rows == [BenchParams.of(1, 0, 2, 3, 2, 2), BenchParams.of(2, 16, 3, 4, 1, 1)]
    assert parse_manifest(format_manifest(rows)) == rows
    with pytest.raises(ValueError):
        parse_manifest("3,0,2,3,1,1\n")
    with pytest.raises(ValueError):
        parse_manifest("1,0,2,3\n")
