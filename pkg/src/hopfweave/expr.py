# Expression DSL for plumbing presentations: recursive-descent parser,
# canonical renderer, and elaboration to PlumbingTree values.
from __future__ import annotations

from dataclasses import dataclass

from .linalg import IntMatrix
from .plumbing import (
    BandSign,
    KnotMove,
    PlumbingTree,
    hopf_plumb,
    knot_plumb,
    plumb,
    unknot,
)

ATOMS = ("H+", "H-", "T+", "U", "E")


class ParseError(ValueError):
    def __init__(self, message, text, offset):
        self.offset = offset
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.line = line
        self.column = col
        super().__init__(f"{message} at offset {offset} (line {line}, column {col})")


class DimensionError(ValueError):
    """Vector or matrix dimensions do not fit the tree being built."""


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Plumb:
    left: object
    right: object
    coupling: tuple | None = None  # rows of ints; None means zero coupling


@dataclass(frozen=True)
class Stab:
    child: object
    sign: BandSign
    x: tuple | None = None


@dataclass(frozen=True)
class KnotPlumb:
    child: object
    kind: KnotMove
    x: tuple | None = None
    c: int = 1


Expression = (Atom, Plumb, Stab, KnotPlumb)


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ParseError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def match(self, literal):
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal):
        if not self.match(literal):
            self.error(f"expected {literal!r}")

    def parse_int(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            self.pos = start
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse_vector(self):
        self.expect("[")
        items = []
        self.skip_ws()
        if not self.match("]"):
            items.append(self.parse_int())
            while self.match(","):
                items.append(self.parse_int())
            self.expect("]")
        return tuple(items)

    def parse_matrix(self):
        self.expect("[")
        rows = []
        self.skip_ws()
        if not self.match("]"):
            rows.append(self.parse_vector())
            while self.match(","):
                rows.append(self.parse_vector())
            self.expect("]")
        width = {len(r) for r in rows}
        if len(width) > 1:
            self.error("ragged matrix rows")
        return tuple(rows)

    def parse_sign(self):
        if self.match("+"):
            return BandSign.POSITIVE
        if self.match("-"):
            return BandSign.NEGATIVE
        self.error("expected sign '+' or '-'")

    def parse_kind(self):
        if self.match("T+"):
            return KnotMove.TPLUS
        if self.match("E"):
            return KnotMove.E
        self.error("expected kind 'T+' or 'E'")

    def parse_expr(self):
        self.skip_ws()
        if self.match("plumb("):
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            coupling = None
            if self.match(";"):
                self.expect("X")
                self.expect("=")
                coupling = self.parse_matrix()
            self.expect(")")
            return Plumb(left, right, coupling)
        if self.match("stab("):
            child = self.parse_expr()
            self.expect(";")
            sign = self.parse_sign()
            x = None
            if self.match(","):
                self.expect("x")
                self.expect("=")
                x = self.parse_vector()
            self.expect(")")
            return Stab(child, sign, x)
        if self.match("knotplumb("):
            child = self.parse_expr()
            self.expect(";")
            kind = self.parse_kind()
            x = None
            c = 1
            if self.match(","):
                if self.match("x"):
                    self.expect("=")
                    x = self.parse_vector()
                    if not self.match(","):
                        self.expect(")")
                        return KnotPlumb(child, kind, x, c)
                self.expect("c")
                self.expect("=")
                c = self.parse_int()
            self.expect(")")
            return KnotPlumb(child, kind, x, c)
        for atom in ATOMS:
            if self.match(atom):
                return Atom(atom)
        self.error("expected expression")


def parse_expr(text: str):
    parser = _Parser(text)
    expr = parser.parse_expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("unexpected trailing input")
    return expr


def render_expr(expr) -> str:
    """Canonical text form; parse_expr(render_expr(e)) == e."""
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, Plumb):
        body = f"{render_expr(expr.left)},{render_expr(expr.right)}"
        if expr.coupling is not None:
            body += f";X={_render_matrix(expr.coupling)}"
        return f"plumb({body})"
    if isinstance(expr, Stab):
        body = f"{render_expr(expr.child)};{expr.sign.value}"
        if expr.x is not None:
            body += f",x={_render_vector(expr.x)}"
        return f"stab({body})"
    if isinstance(expr, KnotPlumb):
        body = f"{render_expr(expr.child)};{expr.kind.value}"
        if expr.x is not None:
            body += f",x={_render_vector(expr.x)}"
        if expr.c != 1:
            body += f",c={expr.c}"
        return f"knotplumb({body})"
    raise TypeError(f"not an expression: {expr!r}")


def _render_vector(vec):
    return "[" + ",".join(str(v) for v in vec) + "]"


def _render_matrix(rows):
    return "[" + ",".join(_render_vector(r) for r in rows) + "]"


def elaborate(expr) -> PlumbingTree:
    """Evaluate an expression to a plumbing tree, checking dimensions."""
    if isinstance(expr, Atom):
        if expr.name == "U":
            return unknot()
        if expr.name == "H+":
            return hopf_plumb(unknot(), BandSign.POSITIVE, ())
        if expr.name == "H-":
            return hopf_plumb(unknot(), BandSign.NEGATIVE, ())
        if expr.name == "T+":
            return knot_plumb(unknot(), KnotMove.TPLUS, ())
        if expr.name == "E":
            return knot_plumb(unknot(), KnotMove.E, ())
        raise ValueError(f"unknown atom {expr.name!r}")
    if isinstance(expr, Plumb):
        left = elaborate(expr.left)
        right = elaborate(expr.right)
        if expr.coupling is None:
            coupling = IntMatrix.zeros(left.mu, right.mu)
        else:
            rows = expr.coupling
            if len(rows) != left.mu or any(len(r) != right.mu for r in rows):
                raise DimensionError(
                    f"coupling matrix must be {left.mu}x{right.mu}"
                )
            coupling = IntMatrix.from_rows(rows, cols=right.mu)
        return plumb(left, right, coupling)
    if isinstance(expr, Stab):
        child = elaborate(expr.child)
        x = expr.x if expr.x is not None else (0,) * child.mu
        if len(x) != child.mu:
            raise DimensionError(
                f"gluing vector must have length {child.mu}, got {len(x)}"
            )
        return hopf_plumb(child, expr.sign, x)
    if isinstance(expr, KnotPlumb):
        child = elaborate(expr.child)
        x = expr.x if expr.x is not None else (0,) * child.mu
        if len(x) != child.mu:
            raise DimensionError(
                f"gluing vector must have length {child.mu}, got {len(x)}"
            )
        if expr.c not in (1, -1):
            raise DimensionError("crossing count c must be +1 or -1")
        return knot_plumb(child, expr.kind, x, expr.c)
    raise TypeError(f"not an expression: {expr!r}")
