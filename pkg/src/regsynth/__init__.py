"""Cost-minimal regular expression inference from positive and negative examples."""

from .engine import Synthesizer, synthesize
from .infix import (AlphabetError, OverlapError, SpecError, Specification, build_guide_table,
                    infix_closure, validate_spec)
from .oracle import enumerate_regexes, oracle_synthesize
from .regex import CostFn, cost, language_on, matches, parse_regex, print_regex
from .results import Found, MemoryExhausted, NotFound, SynthesisResult, TimedOut

__all__ = [
    "Synthesizer", "synthesize", "AlphabetError", "OverlapError", "SpecError", "Specification",
    "build_guide_table", "infix_closure", "validate_spec", "enumerate_regexes",
    "oracle_synthesize", "CostFn", "cost", "language_on", "matches", "parse_regex",
    "print_regex", "Found", "MemoryExhausted", "NotFound", "SynthesisResult", "TimedOut",
]

__version__ = "0.1.0"
