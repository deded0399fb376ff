"""Engine-versus-oracle agreement checks on random small specifications."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .benchgen import BenchParams, SplitMix64, count_strings, gen_type1
from .engine import Found, synthesize
from .infix import Specification
from .oracle import oracle_synthesize
from .regex import CostFn, cost, matches

__all__ = ["DEFAULT_COST_FNS", "random_small_spec", "Mismatch", "CheckReport", "cross_check"]

DEFAULT_COST_FNS = (CostFn(1, 1, 1, 1, 1), CostFn(2, 1, 3, 1, 1))


def random_small_spec(rng: SplitMix64, max_le: int = 4, max_examples: int = 5,
                      k: int = 2) -> Specification:
    """A Type 1 instance with ``le``, ``|P|`` and ``|N|`` drawn uniformly within the bounds."""
    le = rng.below(max_le + 1)
    total = count_strings(k, le)
    p = min(rng.below(max_examples + 1), total)
    n = min(rng.below(max_examples + 1), total - p)
    return gen_type1(BenchParams.of(1, rng.next(), k, le, p, n))


def precise(spec: Specification, regex, budget: int = 0) -> bool:
    wrong = sum(not matches(regex, w) for w in spec.positive)
    wrong += sum(matches(regex, w) for w in spec.negative)
    return wrong <= budget


@dataclass
class Mismatch:
    spec: Specification
    cost_fn: CostFn
    reason: str


@dataclass
class CheckReport:
    instances: int = 0
    agree: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __str__(self) -> str:
        return f"{self.agree}/{self.instances} agree"


def check_one(spec: Specification, cf: CostFn, max_cost: int = 60) -> str | None:
    """None if engine and oracle agree on ``spec``, else the reason they do not."""
    eng = synthesize(spec, cf, max_cost=max_cost)
    orc = oracle_synthesize(spec, cf, max_cost=max_cost)
    if not isinstance(eng, Found) or not isinstance(orc, Found):
        if type(eng) is type(orc):
            return None
        return f"engine {type(eng).__name__} vs oracle {type(orc).__name__}"
    if eng.cost != orc.cost:
        return f"engine cost {eng.cost} ({eng.regex}) vs oracle cost {orc.cost} ({orc.regex})"
    if cost(eng.regex, cf) != eng.cost:
        return f"engine reports cost {eng.cost} for {eng.regex} of cost {cost(eng.regex, cf)}"
    if not precise(spec, eng.regex):
        return f"engine answer {eng.regex} is not precise"
    return None


def cross_check(instances: int = 100, max_le: int = 4, max_examples: int = 5, seed: int = 0,
                cost_fns: Sequence[CostFn] = DEFAULT_COST_FNS, max_cost: int = 60) -> CheckReport:
    """Run ``instances`` random specs through engine and oracle under every cost function.

    A spec counts as agreeing when it agrees under all of ``cost_fns``.
    """
    rng = SplitMix64(seed)
    report = CheckReport()
    for _ in range(instances):
        spec = random_small_spec(rng, max_le, max_examples)
        report.instances += 1
        bad = [(cf, check_one(spec, cf, max_cost)) for cf in cost_fns]
        bad = [(cf, reason) for cf, reason in bad if reason is not None]
        if not bad:
            report.agree += 1
        for cf, reason in bad:
            report.mismatches.append(Mismatch(spec, cf, reason))
    return report
