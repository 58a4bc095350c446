"""Text formats: polynomial expressions, order specs and the input files.

Polynomial grammar::

    expr   := [+|-] term ((+|-) term)*
    term   := factor (* factor)*
    factor := INT [/ INT] | VAR [^ INT] | ( expr ) [^ INT]

Parenthesised sub-expressions are only accepted where the caller allows them
(linear-form substitution files).
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from ..core import order as orders
from ..core.fields import GF, QQ
from ..core.order import MonomialOrder
from ..core.polynomial import Polynomial
from ..core.substitution import LinearSubstitution
from ..errors import AlgebraError, BadPrime, InvalidOrder, ParseError
from ..groebner import Ideal

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        if value == "**":
            value = "^"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str], fld, allow_parens: bool):
        self.text = text
        self.names = {n: i for i, n in enumerate(names)}
        self.n = len(names)
        self.field = fld
        self.allow_parens = allow_parens
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", self.text, pos)

    def error(self, message: str, pos: int):
        raise ParseError(message, self.text, pos)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.error("empty expression", 0)
        poly = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            self.error(f"unexpected {v!r}", pos)
        return poly

    def expr(self) -> Polynomial:
        sign = 1
        _, v, _ = self.peek()
        if v in "+-" and v:
            self.take()
            sign = -1 if v == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            _, v, _ = self.peek()
            if v not in ("+", "-") or not v:
                return acc
            self.take()
            t = self.term()
            acc = acc + t if v == "+" else acc - t

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def exponent(self) -> int:
        if self.peek()[1] != "^":
            return 1
        self.take()
        kind, v, pos = self.take()
        if kind != "num":
            self.error("expected an integer exponent", pos)
        return int(v)

    def factor(self) -> Polynomial:
        kind, v, pos = self.take()
        if kind == "num":
            value = Fraction(int(v))
            if self.peek()[1] == "/":
                self.take()
                k2, v2, pos2 = self.take()
                if k2 != "num":
                    self.error("expected an integer denominator", pos2)
                if int(v2) == 0:
                    self.error("division by zero", pos2)
                value = Fraction(int(v), int(v2))
            try:
                return Polynomial.constant(self.n, value, self.field)
            except BadPrime:
                self.error(f"denominator divisible by the characteristic {self.field.characteristic}", pos)
        if kind == "name":
            if v not in self.names:
                self.error(f"unknown variable {v!r}", pos)
            base = Polynomial.variable(self.n, self.names[v], self.field)
            return base ** self.exponent()
        if v == "(":
            if not self.allow_parens:
                self.error("parentheses are only allowed in substitution files", pos)
            inner = self.expr()
            self.expect(")")
            return inner ** self.exponent()
        self.error(f"unexpected {v or 'end of input'!r}", pos)


def parse_polynomial(text: str, variables: Sequence[str], field=QQ, allow_parens: bool = False) -> Polynomial:
    return _Parser(text, variables, field, allow_parens).parse()


def parse_field(text: str):
    text = text.strip()
    if text.upper() == "QQ":
        return QQ
    m = re.fullmatch(r"(?:GF|F)\((\d+)\)", text, re.IGNORECASE)
    if m:
        try:
            return GF(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown field {text!r}; expected QQ or GF(p)")


def field_name(fld) -> str:
    return "QQ" if fld == QQ else f"GF({fld.p})"


_PART = re.compile(r"\s*(lex|degrevlex)\s*\(([^()]*)\)\s*$", re.IGNORECASE)


def _group(body: str, index: dict, text: str) -> list[int]:
    names = [s.strip() for s in body.split(">")] if body.strip() else []
    out = []
    for name in names:
        if name not in index:
            raise ParseError(f"unknown variable {name!r} in order spec", text, max(text.find(name), 0))
        out.append(index[name])
    return out


def parse_order_spec(text: str, variables: Sequence[str]) -> MonomialOrder:
    """``lex(x>y>z)``, ``degrevlex(...)``, ``block(p1; p2; ...)`` or ``matrix([[...], ...])``.

    A bare ``lex`` or ``degrevlex`` uses the variables in their listed order.
    """
    n = len(variables)
    index = {v: i for i, v in enumerate(variables)}
    src = text.strip()
    if src.lower() in ("lex", "degrevlex"):
        return orders.lex(n) if src.lower() == "lex" else orders.degrevlex(n)
    try:
        m = _PART.match(src)
        if m:
            kind, body = m.group(1).lower(), m.group(2)
            perm = _group(body, index, src)
            if sorted(perm) != list(range(n)):
                missing = [variables[i] for i in range(n) if i not in perm]
                raise ParseError(f"order must list every variable exactly once; missing {missing}", src)
            return orders.lex(n, perm) if kind == "lex" else orders.degrevlex(n, perm)
        m = re.fullmatch(r"block\s*\((.*)\)", src, re.IGNORECASE | re.S)
        if m:
            parts = []
            seen: list[int] = []
            for piece in m.group(1).split(";"):
                pm = _PART.match(piece)
                if not pm:
                    raise ParseError(f"bad block component {piece.strip()!r}", src, src.find(piece.strip()))
                group = _group(pm.group(2), index, src)
                seen.extend(group)
                parts.append((pm.group(1).lower(), group))
            if sorted(seen) != list(range(n)):
                missing = [variables[i] for i in range(n) if i not in seen]
                raise ParseError(f"block must cover every variable exactly once; missing {missing}", src)
            return orders.block(n, parts)
        m = re.fullmatch(r"matrix\s*\((.*)\)", src, re.IGNORECASE | re.S)
        if m:
            try:
                rows = json.loads(m.group(1))
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad matrix literal: {exc.msg}", src, src.find("(") + 1 + exc.pos) from exc
            if not rows or any(len(r) != n for r in rows):
                raise ParseError(f"matrix rows must have {n} entries", src)
            return orders.matrix(rows)
    except InvalidOrder as exc:
        raise ParseError(str(exc), src) from exc
    raise ParseError(f"unrecognized order spec {src!r}", src, 0)


# ---- files ------------------------------------------------------------


@dataclass
class InputDocument:
    """A parsed ``.id`` file: variables, field and one ideal's generators."""

    variables: list[str]
    field: object
    generators: list[Polynomial]
    name: str = ""
    orders: dict = field(default_factory=dict)

    def ideal(self) -> Ideal:
        return Ideal(self.generators, len(self.variables), self.field)

    def canonical(self) -> dict:
        return {
            "variables": list(self.variables),
            "field": field_name(self.field),
            "generators": [g.to_str(self.variables) for g in self.generators],
            "orders": {k: v.describe(self.variables) for k, v in sorted(self.orders.items())},
        }

    def digest(self) -> str:
        blob = json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()

    def render(self) -> str:
        lines = [f"variables: {', '.join(self.variables)}", f"field: {field_name(self.field)}"]
        if self.name:
            lines.insert(0, f"name: {self.name}")
        for k, v in self.orders.items():
            lines.append(f"order {k}: {v.describe(self.variables)}")
        lines.extend(g.to_str(self.variables) for g in self.generators)
        return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _split_header(line: str):
    m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_ ]*?)\s*:\s*(.*)", line)
    return (m.group(1).strip().lower(), m.group(2)) if m else (None, None)


def parse_input_document(text: str) -> InputDocument:
    """Parse ``.id`` text: ``variables:``/``field:`` headers, then one generator per line."""
    variables: list[str] | None = None
    fld = QQ
    name = ""
    order_specs: list[tuple[str, str]] = []
    exprs: list[tuple[int, str]] = []
    for lineno, line in _content_lines(text):
        key, value = _split_header(line)
        if key in ("variables", "vars"):
            variables = [v.strip() for v in value.replace(",", " ").split()]
        elif key == "field":
            fld = parse_field(value)
        elif key == "name":
            name = value.strip()
        elif key is not None and key.startswith("order"):
            label = key[len("order"):].strip() or "default"
            order_specs.append((label, value))
        else:
            exprs.extend((lineno, e.strip()) for e in line.split(",") if e.strip())
    if not variables:
        raise ParseError("missing 'variables:' header")
    if len(set(variables)) != len(variables):
        raise ParseError("duplicate variable names")
    gens = []
    for lineno, e in exprs:
        try:
            gens.append(parse_polynomial(e, variables, fld))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.message}", exc.text, exc.position) from exc
    doc = InputDocument(variables, fld, gens, name)
    for label, spec in order_specs:
        doc.orders[label] = parse_order_spec(spec, variables)
    return doc


def parse_substitution(text: str, variables: Sequence[str], fld=QQ) -> LinearSubstitution:
    """``.sub`` text: one linear form per variable, bare or as ``name = form``."""
    images: dict[int, Polynomial] = {}
    bare: list[Polynomial] = []
    index = {v: i for i, v in enumerate(variables)}
    for _, line in _content_lines(text):
        key, value = _split_header(line)
        if key in ("variables", "vars", "field"):
            continue
        if "=" in line:
            lhs, rhs = line.split("=", 1)
            lhs = lhs.strip()
            if lhs not in index:
                raise ParseError(f"unknown variable {lhs!r} on the left of '='", line, 0)
            images[index[lhs]] = parse_polynomial(rhs.strip(), variables, fld, allow_parens=True)
        else:
            bare.append(parse_polynomial(line, variables, fld, allow_parens=True))
    if images and bare:
        raise ParseError("mix of named and bare images in substitution file")
    if images:
        if len(images) != len(variables):
            raise ParseError("substitution must give an image for every variable")
        ordered = [images[i] for i in range(len(variables))]
    else:
        if len(bare) != len(variables):
            raise ParseError(f"expected {len(variables)} linear forms, found {len(bare)}")
        ordered = bare
    try:
        return LinearSubstitution.from_images(ordered)
    except AlgebraError as exc:
        raise ParseError(str(exc)) from exc


def read_input_document(path: str | Path) -> InputDocument:
    return parse_input_document(Path(path).read_text(encoding="utf-8"))


def read_order(spec_or_path: str, variables: Sequence[str]) -> MonomialOrder:
    path = Path(spec_or_path)
    if path.suffix == ".ord" and path.exists():
        lines = [line for _, line in _content_lines(path.read_text(encoding="utf-8"))]
        spec_or_path = " ".join(lines)
    return parse_order_spec(spec_or_path, variables)


def read_substitution(path: str | Path, variables: Sequence[str], fld=QQ) -> LinearSubstitution:
    return parse_substitution(Path(path).read_text(encoding="utf-8"), variables, fld)
