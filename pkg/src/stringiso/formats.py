"""Plain-text interchange formats for groups, strings and expressions.

Group file::

    # comments run to end of line
    degree 5
    gen 1 2 3 4 0        # image list, 0-indexed
    gen (0 1)(2 4)       # or cycle notation

String file::

    str a b b a c

Symbols are whitespace-separated tokens.  A pair of strings is encoded
jointly so that equal tokens get equal integer ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .expr import Expression, ParseError, parse, serialize
from .perm import Perm, check_perm, from_cycles


class FormatError(ValueError):
    def __init__(self, message: str, source: str = "<text>", line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class GroupSpec:
    degree: int
    generators: tuple[Perm, ...]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_cycles(text: str, degree: int) -> Perm:
    cycs = []
    rest = text.strip()
    while rest:
        if not rest.startswith("("):
            raise ValueError("cycle notation must be a sequence of (a b ...) groups")
        close = rest.find(")")
        if close < 0:
            raise ValueError("missing ')'")
        cycs.append([int(t) for t in rest[1:close].replace(",", " ").split()])
        rest = rest[close + 1 :].strip()
    pts = [x for c in cycs for x in c]
    if len(pts) != len(set(pts)) or any(not 0 <= x < degree for x in pts):
        raise ValueError("cycles must use distinct points in range")
    return from_cycles(degree, *cycs)


def parse_group(text: str, source: str = "<text>") -> GroupSpec:
    degree = None
    gens = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        key, _, body = line.partition(" ")
        try:
            if key == "degree":
                if degree is not None:
                    raise ValueError("degree given twice")
                degree = int(body)
                if degree < 1:
                    raise ValueError("degree must be positive")
            elif key == "gen":
                if degree is None:
                    raise ValueError("'gen' before 'degree'")
                body = body.strip()
                if body.startswith("("):
                    gens.append(_parse_cycles(body, degree))
                else:
                    p = check_perm(tuple(int(t) for t in body.split()))
                    if len(p) != degree:
                        raise ValueError(f"generator has {len(p)} entries, expected {degree}")
                    gens.append(p)
            else:
                raise ValueError(f"unknown keyword {key!r}")
        except ValueError as exc:
            raise FormatError(str(exc), source, no) from None
    if degree is None:
        raise FormatError("missing 'degree' line", source)
    return GroupSpec(degree, tuple(gens))


def format_group(degree: int, gens: Sequence[Perm], comment: str = "") -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"degree {degree}")
    lines.extend("gen " + " ".join(map(str, g)) for g in gens)
    return "\n".join(lines) + "\n"


def parse_string_tokens(text: str, source: str = "<text>") -> tuple[str, ...]:
    found = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        key, _, body = line.partition(" ")
        if key != "str":
            raise FormatError(f"expected 'str', got {key!r}", source, no)
        if found is not None:
            raise FormatError("more than one 'str' line", source, no)
        found = tuple(body.split())
    if found is None:
        raise FormatError("missing 'str' line", source)
    return found


def _token_key(t: str):
    return (0, int(t), "") if t.isdigit() else (1, 0, t)


def encode_strings(*strings: Sequence[str]) -> tuple[tuple[int, ...], ...]:
    """Map tokens to integer ids, shared across all strings, in sorted token order."""
    alphabet = sorted({t for s in strings for t in s}, key=_token_key)
    ids = {t: i for i, t in enumerate(alphabet)}
    return tuple(tuple(ids[t] for t in s) for s in strings)


def format_string(s: Sequence) -> str:
    return "str " + " ".join(map(str, s)) + "\n"


def parse_expression(text: str, source: str = "<text>") -> Expression:
    body = "\n".join(_strip(line) for line in text.splitlines())
    try:
        return parse(body)
    except ParseError as exc:
        raise FormatError(str(exc), source) from None


def format_expression(e: Expression) -> str:
    return serialize(e) + "\n"


def format_perm(p: Perm) -> str:
    return " ".join(map(str, p))


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(exc.strerror or "cannot read file", str(path)) from None


def load_group(path: str | Path) -> GroupSpec:
    return parse_group(read_text(path), str(path))


def load_string(path: str | Path) -> tuple[str, ...]:
    return parse_string_tokens(read_text(path), str(path))


def load_expression(path: str | Path) -> Expression:
    return parse_expression(read_text(path), str(path))


__all__ = [
    "FormatError",
    "GroupSpec",
    "encode_strings",
    "format_expression",
    "format_group",
    "format_perm",
    "format_string",
    "load_expression",
    "load_group",
    "load_string",
    "parse_expression",
    "parse_group",
    "parse_string_tokens",
]
