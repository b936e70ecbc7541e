"""Text format for families::

    # comment
    n = 3
    f 1: 0 1, 1/2 0, 1 0
    f 2: 0 0, 1/2 1, 1 0
    f 3: 0 0, 1/2 0, 1 1

Each ``f`` line lists ``x y`` breakpoints, x strictly increasing from 0 to 1.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .plfun import PLFunc
from .props import FuzzyFamily

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_MEMBER = re.compile(r"^f\s*(\d+)\s*:\s*(.*)$")


class FamilyFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _number(text: str, line: int) -> Fraction:
    try:
        if "." in text or "e" in text.lower():
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FamilyFormatError(f"not an exact rational: {text!r}", line) from None


def loads(text: str) -> FuzzyFamily:
    n = None
    members: dict[int, PLFunc] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise FamilyFormatError("expected 'n = <int>' header", lineno)
            n = int(m.group(1))
            if n < 1:
                raise FamilyFormatError("n must be at least 1", lineno)
            continue
        m = _MEMBER.match(line)
        if not m:
            raise FamilyFormatError("expected 'f <i>: x y, x y, ...'", lineno)
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise FamilyFormatError(f"member index {i} outside 1..{n}", lineno)
        if i in members:
            raise FamilyFormatError(f"member {i} defined twice", lineno)
        points = []
        for chunk in m.group(2).split(","):
            parts = chunk.split()
            if len(parts) != 2:
                raise FamilyFormatError(f"expected 'x y' pair, got {chunk.strip()!r}", lineno)
            x, y = (_number(p, lineno) for p in parts)
            if points and x <= points[-1][0]:
                raise FamilyFormatError(f"x coordinates must be strictly increasing ({points[-1][0]} then {x})",
                                        lineno)
            points.append((x, y))
        try:
            members[i] = PLFunc(tuple(points))
        except ValueError as exc:
            raise FamilyFormatError(str(exc), lineno) from None
    if n is None:
        raise FamilyFormatError("empty family file")
    missing = [i for i in range(1, n + 1) if i not in members]
    if missing:
        raise FamilyFormatError(f"missing members: {', '.join(map(str, missing))}")
    return FuzzyFamily(tuple(members[i] for i in range(1, n + 1)))


def dumps(P: FuzzyFamily) -> str:
    lines = [f"n = {P.n}"]
    lines += [f"f {i}: {f}" for i, f in enumerate(P, start=1)]
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> FuzzyFamily:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(P: FuzzyFamily, path: str | Path) -> None:
    Path(path).write_text(dumps(P), encoding="utf-8")
