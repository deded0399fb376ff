"""Text format for example specifications.

One example per line: ``+STRING`` is positive, ``-STRING`` negative. The
string is everything after the sign, so a bare ``+`` puts the empty string in
P. Lines starting with ``#`` and blank lines are ignored, except that a
comment of the form ``# alphabet: SYMBOLS`` declares the alphabet (useful
when it has characters no example uses).
"""

from __future__ import annotations

from pathlib import Path

from .infix import Specification, validate_spec

__all__ = ["SpecFileError", "parse_spec_text", "format_spec", "read_spec", "write_spec"]

_ALPHABET = "# alphabet:"


class SpecFileError(ValueError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_spec_text(text: str) -> Specification:
    pos: list[str] = []
    neg: list[str] = []
    alphabet = None
    for lineno, line in enumerate(text.split("\n"), 1):
        line = line.rstrip("\r")
        if line.startswith(_ALPHABET):
            alphabet = line[len(_ALPHABET):].strip()
            continue
        if not line.strip() or line.startswith("#"):
            continue
        sign, word = line[0], line[1:]
        if sign == "+":
            pos.append(word)
        elif sign == "-":
            neg.append(word)
        else:
            raise SpecFileError(f"expected '+', '-' or '#', got {sign!r}", lineno)
    return validate_spec(pos, neg, alphabet)


def format_spec(spec: Specification, alphabet: bool = False) -> str:
    lines = [f"{_ALPHABET} {''.join(spec.alphabet)}"] if alphabet else []
    lines += ["+" + w for w in spec.positive]
    lines += ["-" + w for w in spec.negative]
    return "\n".join(lines) + "\n"


def read_spec(path) -> Specification:
    return parse_spec_text(Path(path).read_text(encoding="utf-8"))


def write_spec(spec: Specification, path, alphabet: bool = False) -> None:
    Path(path).write_text(format_spec(spec, alphabet), encoding="utf-8")
