"""Result types shared by the engine and the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .regex import Regex

__all__ = ["SearchStats", "SynthesisResult", "Found", "NotFound", "MemoryExhausted", "TimedOut"]


@dataclass
class SearchStats:
    cs_generated: int = 0
    unique_cs: int = 0
    peak_cache_entries: int = 0
    onthefly_from: int | None = None
    elapsed: float = 0.0
    width: int = 0
    n_words: int = 0


@dataclass
class SynthesisResult:
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def cs_generated(self) -> int:
        return self.stats.cs_generated

    @property
    def elapsed(self) -> float:
        return self.stats.elapsed


@dataclass
class Found(SynthesisResult):
    regex: Regex = None
    cost: int = 0


@dataclass
class NotFound(SynthesisResult):
    max_cost_reached: int = 0


@dataclass
class MemoryExhausted(SynthesisResult):
    last_complete_cost: int = 0


@dataclass
class TimedOut(SynthesisResult):
    cost_reached: int = 0
