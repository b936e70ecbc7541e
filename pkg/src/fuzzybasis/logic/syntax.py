"""Concrete syntax: tokenizer, precedence-climbing parser and printer.

Precedence, tightest first::

    !  (prefix)
    &  *  -      left-assoc
    |  +         left-assoc
    ->           right-assoc
    <->          left-assoc

Unicode glyphs (¬ ∧ ∨ ⊕ ⊙ ⊖ → ↔ ⊥ ⊤) are accepted as synonyms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import BOT, TOP, Binary, Conn, Formula, Not, Var, fold


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<var>X(?P<idx>\d+))
  | (?P<const>bot|top|⊥|⊤|0|1)
  | (?P<op><->|->|↔|→|[!¬&∧*⊙\-⊖|∨+⊕])
  | (?P<lpar>\()
  | (?P<rpar>\))
""", re.VERBOSE)

_GLYPHS = {
    "¬": "!", "→": "->", "↔": "<->", "∧": "&", "⊙": "*", "⊖": "-", "∨": "|", "⊕": "+",
}

_LEVEL = {
    Conn.BICOND: 1,
    Conn.IMPL: 2,
    Conn.OR: 3, Conn.OPLUS: 3,
    Conn.AND: 4, Conn.ODOT: 4, Conn.OMINUS: 4,
}
_NEG_LEVEL = 5
_ATOM_LEVEL = 6
_BY_SYMBOL = {c.value: c for c in Conn}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "idx":
            kind = "var"
        if kind == "var":
            if int(m.group("idx")) == 0:
                raise FormulaSyntaxError("variable index must be at least 1", pos, text)
            tokens.append(Token("var", m.group("idx"), pos))
        elif kind == "op":
            tokens.append(Token("op", _GLYPHS.get(m.group(), m.group()), pos))
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, message: str) -> FormulaSyntaxError:
        return FormulaSyntaxError(message, self.tok.pos, self.text)

    def binop(self) -> Conn | None:
        if self.tok.kind == "op" and self.tok.text != "!":
            return _BY_SYMBOL[self.tok.text]
        return None

    def parse(self) -> Formula:
        phi = self.expr(1)
        if self.tok.kind != "end":
            raise self.fail(f"unexpected {self.tok.text!r}")
        return phi

    def expr(self, min_level: int) -> Formula:
        left = self.unary()
        while True:
            op = self.binop()
            if op is None or _LEVEL[op] < min_level:
                return left
            self.i += 1
            level = _LEVEL[op]
            right = self.expr(level if op is Conn.IMPL else level + 1)
            left = Binary(op, left, right)

    def unary(self) -> Formula:
        tok = self.tok
        if tok.kind == "op" and tok.text == "!":
            self.i += 1
            return Not(self.unary())
        if tok.kind == "var":
            self.i += 1
            return Var(int(tok.text))
        if tok.kind == "const":
            self.i += 1
            return BOT if tok.text in ("0", "bot", "⊥") else TOP
        if tok.kind == "lpar":
            self.i += 1
            phi = self.expr(1)
            if self.tok.kind != "rpar":
                raise self.fail("expected ')'")
            self.i += 1
            return phi
        if tok.kind == "end":
            raise self.fail("unexpected end of input")
        raise self.fail(f"unexpected {tok.text!r}")


def parse(text: str) -> Formula:
    return _Parser(text).parse()


def to_text(phi: Formula) -> str:
    """ASCII rendering with the fewest parentheses that still parse back
    to the same tree."""

    def unary(arg: tuple[str, int]) -> tuple[str, int]:
        text, level = arg
        return "!" + (text if level >= _NEG_LEVEL else f"({text})"), _NEG_LEVEL

    def binary(op: Conn, left: tuple[str, int], right: tuple[str, int]) -> tuple[str, int]:
        level = _LEVEL[op]
        right_assoc = op is Conn.IMPL
        (lt, ll), (rt, rl) = left, right
        if ll < level or (right_assoc and ll == level):
            lt = f"({lt})"
        if rl < level or (not right_assoc and rl == level):
            rt = f"({rt})"
        return f"{lt} {op.value} {rt}", level

    text, _ = fold(phi, lambda i: (f"X{i}", _ATOM_LEVEL),
                   lambda v: ("1" if v else "0", _ATOM_LEVEL), unary, binary)
    return text
