"""Line-oriented document parser with a recursive-descent expression grammar.

    document  := line*
    line      := 'chart' 'R'N '(' IDENT (',' IDENT)* ')'
               | ('form' | 'function' | 'field' | 'section') IDENT '=' expr
               | 'point' IDENT '=' '(' expr (',' expr)* ')'
               | 'structure' IDENT
               | 'cover' IDENT '{' cover-line* '}'
               | command
    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*
    unary     := ('-' | '+') unary | wedge
    wedge     := atom ('^' atom)*        # '^' INT is a power, otherwise a wedge
    atom      := INT | coordinate | 'd'coordinate | '@'coordinate | IDENT
               | '(' expr ')' | '(' expr ',' expr ')'

Juxtaposition is rejected, so "2x" is a syntax error rather than 2*x.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..algebra import Q
from ..cocycle import MODES, Box, BoxCover, LocalData1, LocalData2
from ..courant import GeneralizedSection
from ..errors import CourantKitError, ParseError
from ..exterior import Chart, DifferentialForm, VectorField, wedge
from .document import Command, CoverSpec, Document

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<at>@[A-Za-z_][A-Za-z0-9_]*)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<dots>\.\.)|(?P<op>[-+*/^(),={}]))")

DECLARATIONS = ("form", "function", "field", "section")

# expected argument kinds per command; "hform" accepts forms and functions
COMMANDS: dict[tuple[str, ...], tuple[str, ...]] = {
    ("check-nplectic",): ("form",),
    ("hamiltonian",): ("hform",),
    ("bracket",): ("object", "object"),
    ("jacobiator",): ("hform", "hform", "hform"),
    ("verify", "semibracket"): ("hform", "hform", "hform"),
    ("verify", "calculus"): ("hform", "hform", "hform"),
    ("verify", "courant-axioms"): ("section", "section", "section", "function", "function"),
    ("curvature",): ("field", "field", "field"),
    ("preserves",): ("section",),
    ("verify", "morphism", "main"): ("hform", "hform", "hform"),
    ("verify", "extension"): ("point", "point", "field", "field", "field"),
    ("verify", "cocycle2"): ("cover",),
    ("verify", "cocycle3"): ("cover",),
    ("verify", "atiyah"): ("function", "function"),
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str, line: int) -> list[Token]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    out.append(Token("end", "", len(text) + 1))
    return out


def _strip_comment(text: str) -> str:
    i = text.find("#")
    return text if i < 0 else text[:i]


class ExpressionParser:
    """Parses one expression from a token list against a chart and a name table."""

    def __init__(self, tokens: list[Token], line: int, chart: Chart, names: dict):
        self.tokens, self.pos, self.line = tokens, 0, line
        self.chart, self.names = chart, names

    # --- token helpers ------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        return ParseError(message, self.line, tok.column)

    def accept(self, text: str) -> Token | None:
        if self.tok.kind in ("op", "dots") and self.tok.text == text:
            t = self.tok
            self.pos += 1
            return t
        return None

    def expect(self, text: str) -> Token:
        t = self.accept(text)
        if t is None:
            found = self.tok.text or "end of line"
            raise self.error(f"expected {text!r}, found {found!r}")
        return t

    def expect_ident(self) -> Token:
        if self.tok.kind != "ident":
            raise self.error(f"expected a name, found {self.tok.text or 'end of line'!r}")
        t = self.tok
        self.pos += 1
        return t

    def at_end(self) -> bool:
        return self.tok.kind == "end"

    def finish(self):
        if not self.at_end():
            raise self.error(f"unexpected {self.tok.text!r} (juxtaposition is not multiplication)")

    # --- grammar ------------------------------------------------------
    def expr(self):
        value = self.term()
        while True:
            t = self.accept("+") or self.accept("-")
            if t is None:
                return value
            rhs = self.term()
            value = self._add(value, rhs if t.text == "+" else self._neg(rhs, t), t)

    def term(self):
        value = self.unary()
        while True:
            t = self.accept("*") or self.accept("/")
            if t is None:
                return value
            rhs = self.unary()
            value = self._mul(value, rhs, t) if t.text == "*" else self._div(value, rhs, t)

    def unary(self):
        t = self.accept("-")
        if t is not None:
            return self._neg(self.unary(), t)
        if self.accept("+") is not None:
            return self.unary()
        return self.wedge()

    def wedge(self):
        value, _ = self.atom()
        while True:
            t = self.accept("^")
            if t is None:
                return value
            rhs, literal = self.atom()
            if literal is not None:
                value = self._pow(value, literal, t)
            else:
                value = self._wedge(value, rhs, t)

    def atom(self):
        """Returns (value, integer literal or None)."""
        t = self.tok
        if t.kind == "num":
            self.pos += 1
            return self.chart.const(int(t.text)), int(t.text)
        if t.kind == "at":
            self.pos += 1
            name = t.text[1:]
            if name not in self.chart.coordinates:
                raise self.error(f"unknown coordinate in {t.text!r}", t)
            return self.chart.partial(name), None
        if t.kind == "ident":
            self.pos += 1
            return self._name(t), None
        if self.accept("("):
            first = self.expr()
            if self.accept(","):
                second = self.expr()
                self.expect(")")
                return self._section(first, second, t), None
            self.expect(")")
            return first, None
        raise self.error(f"expected an expression, found {t.text or 'end of line'!r}")

    def _name(self, t: Token):
        name = t.text
        if name in self.chart.coordinates:
            return self.chart.coord(name)
        if name.startswith("d") and name[1:] in self.chart.coordinates:
            return self.chart.dx(name[1:])
        if name in self.names:
            return self.names[name]
        raise self.error(f"unknown identifier {name!r}", t)

    # --- typed operations ---------------------------------------------
    def _add(self, a, b, t):
        if isinstance(a, DifferentialForm) and isinstance(b, DifferentialForm):
            if a.degree != b.degree:
                raise self.error(f"degree mismatch: cannot add a {a.degree}-form and a {b.degree}-form", t)
            return a + b
        if type(a) is type(b) and isinstance(a, (VectorField, GeneralizedSection)):
            return a + b
        raise self.error(f"cannot add {_describe(a)} and {_describe(b)}", t)

    def _neg(self, a, t):
        return -a

    def _mul(self, a, b, t):
        if _is_function(a):
            return b.scale(a) if not isinstance(b, GeneralizedSection) else b.scale(a)
        if _is_function(b):
            return a.scale(b)
        if isinstance(a, DifferentialForm) and isinstance(b, DifferentialForm):
            raise self.error("use '^' for the wedge product of forms", t)
        raise self.error(f"cannot multiply {_describe(a)} by {_describe(b)}", t)

    def _div(self, a, b, t):
        if not _is_function(b):
            raise self.error("can only divide by a function", t)
        if b.is_zero():
            raise self.error("division by zero", t)
        return a.scale(b.scalar().inverse())

    def _pow(self, a, k: int, t):
        if not _is_function(a):
            raise self.error(f"cannot raise {_describe(a)} to a power", t)
        return DifferentialForm.function(self.chart, a.scalar() ** k)

    def _wedge(self, a, b, t):
        if isinstance(a, DifferentialForm) and isinstance(b, DifferentialForm):
            return wedge(a, b)
        raise self.error(f"wedge needs two forms, got {_describe(a)} and {_describe(b)}", t)

    def _section(self, v, a, t):
        if _is_function(v) and v.is_zero():
            v = self.chart.zero_field()
        if _is_function(a) and a.is_zero():
            a = self.chart.zero_form(1)
        if not isinstance(v, VectorField):
            raise self.error(f"a section pairs a vector field with a 1-form, got {_describe(v)} first", t)
        if not isinstance(a, DifferentialForm) or a.degree != 1:
            raise self.error(f"degree mismatch: the form part of a section is a 1-form, got {_describe(a)}", t)
        return GeneralizedSection(v, a)


def _is_function(value) -> bool:
    return isinstance(value, DifferentialForm) and value.degree == 0


def _describe(value) -> str:
    if isinstance(value, GeneralizedSection):
        return "a section"
    if isinstance(value, VectorField):
        return "a vector field"
    if isinstance(value, DifferentialForm):
        return "a function" if value.degree == 0 else f"a {value.degree}-form"
    return type(value).__name__


class DocumentParser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.index = 0
        self.doc: Document | None = None

    def parse(self) -> Document:
        while self.index < len(self.lines):
            lineno = self.index + 1
            raw = _strip_comment(self.lines[self.index])
            self.index += 1
            if not raw.strip():
                continue
            self.statement(raw, lineno)
        if self.doc is None:
            raise ParseError("document declares no chart", 1, 1)
        return self.doc

    # --- statements ---------------------------------------------------
    def statement(self, raw: str, lineno: int):
        head = raw.split()[0]
        if head == "chart":
            return self.chart(raw, lineno)
        if self.doc is None:
            raise ParseError("the first statement must declare the chart", lineno, raw.index(head) + 1)
        if head in DECLARATIONS:
            return self.declaration(raw, lineno)
        if head == "point":
            return self.point(raw, lineno)
        if head == "structure":
            return self.structure(raw, lineno)
        if head == "cover":
            return self.cover(raw, lineno)
        return self.command(raw, lineno)

    def chart(self, raw: str, lineno: int):
        if self.doc is not None:
            raise ParseError("the chart is declared twice", lineno, 1)
        toks = tokenize(raw, lineno)
        p = ExpressionParser(toks, lineno, None, {})
        p.expect_ident()
        dim_tok = p.expect_ident()
        m = re.fullmatch(r"R(\d+)", dim_tok.text)
        if not m:
            raise p.error("expected R<dimension>", dim_tok)
        p.expect("(")
        names = [p.expect_ident().text]
        while p.accept(","):
            names.append(p.expect_ident().text)
        p.expect(")")
        p.finish()
        if int(m.group(1)) != len(names):
            raise ParseError(f"R{m.group(1)} declares {len(names)} coordinates", lineno, dim_tok.column)
        if len(set(names)) != len(names):
            raise ParseError("repeated coordinate name", lineno, dim_tok.column)
        for n in names:
            if n.startswith("d") and n[1:] in names:
                raise ParseError(f"coordinate {n!r} clashes with the basis form of {n[1:]!r}", lineno, 1)
        self.doc = Document(Chart.of(*names))

    def _expr_parser(self, raw: str, lineno: int) -> ExpressionParser:
        return ExpressionParser(tokenize(raw, lineno), lineno, self.doc.chart, self.doc.objects)

    def _new_name(self, p: ExpressionParser) -> str:
        t = p.expect_ident()
        chart = self.doc.chart
        if t.text in chart.coordinates or (t.text.startswith("d") and t.text[1:] in chart.coordinates):
            raise p.error(f"{t.text!r} is reserved by the chart", t)
        if self.doc.kind(t.text) is not None:
            raise p.error(f"{t.text!r} is already defined", t)
        return t.text

    def declaration(self, raw: str, lineno: int):
        p = self._expr_parser(raw, lineno)
        kw = p.expect_ident()
        name = self._new_name(p)
        p.expect("=")
        start = p.tok
        try:
            value = p.expr()
        except ParseError:
            raise
        except CourantKitError as exc:
            raise p.error(str(exc), start)
        p.finish()
        value = self._coerce(kw.text, value, p, start)
        self.doc.objects[name] = value

    def _coerce(self, kw: str, value, p: ExpressionParser, at: Token):
        chart = self.doc.chart
        if kw == "field":
            if _is_function(value) and value.is_zero():
                return chart.zero_field()
            if not isinstance(value, VectorField):
                raise p.error(f"a field declaration needs a vector field, got {_describe(value)}", at)
        elif kw == "section":
            if not isinstance(value, GeneralizedSection):
                raise p.error(f"a section declaration needs (field, 1-form), got {_describe(value)}", at)
        elif kw == "function":
            if not _is_function(value):
                raise p.error(f"degree mismatch: a function has degree 0, got {_describe(value)}", at)
        elif not isinstance(value, DifferentialForm):
            raise p.error(f"a form declaration needs a form, got {_describe(value)}", at)
        return value

    def _constant_tuple(self, p: ExpressionParser) -> tuple:
        p.expect("(")
        values = []
        while True:
            start = p.tok
            v = p.expr()
            if not _is_function(v) or not v.scalar().is_constant():
                raise p.error("coordinates of a point must be rational constants", start)
            values.append(v.scalar().constant_value())
            if not p.accept(","):
                break
        p.expect(")")
        return tuple(values)

    def point(self, raw: str, lineno: int):
        p = self._expr_parser(raw, lineno)
        p.expect_ident()
        name = self._new_name(p)
        p.expect("=")
        start = p.tok
        values = self._constant_tuple(p)
        p.finish()
        if len(values) != self.doc.chart.dimension:
            raise p.error(f"a point needs {self.doc.chart.dimension} coordinates", start)
        self.doc.points[name] = values

    def structure(self, raw: str, lineno: int):
        p = self._expr_parser(raw, lineno)
        p.expect_ident()
        t = p.expect_ident()
        p.finish()
        if self.doc.kind(t.text) != "form":
            raise p.error(f"structure must name a declared form, got {t.text!r}", t)
        self.doc.structure = t.text

    def cover(self, raw: str, lineno: int):
        p = self._expr_parser(raw, lineno)
        p.expect_ident()
        name = self._new_name(p)
        p.expect("{")
        p.finish()
        boxes, tables, omega, mode = {}, {}, None, None
        while True:
            if self.index >= len(self.lines):
                raise ParseError(f"cover {name!r} is not closed", lineno, len(raw) + 1)
            ln = self.index + 1
            body = _strip_comment(self.lines[self.index])
            self.index += 1
            if not body.strip():
                continue
            q = self._expr_parser(body, ln)
            if q.accept("}"):
                q.finish()
                break
            kw = q.expect_ident()
            if kw.text == "omega":
                q.expect("=")
                start = q.tok
                omega = q.expr()
                q.finish()
                if not isinstance(omega, DifferentialForm) or omega.degree < 2:
                    raise q.error("omega must be a form of degree >= 2", start)
            elif kw.text == "mode":
                m = q.expect_ident()
                q.finish()
                if m.text not in MODES:
                    raise q.error(f"mode must be one of {', '.join(MODES)}", m)
                mode = m.text
            elif kw.text == "box":
                label = self._labels(q, 1)[0]
                q.expect("=")
                lower = self._constant_tuple(q)
                q.expect("..")
                upper = self._constant_tuple(q)
                q.finish()
                try:
                    boxes[label] = Box(lower, upper)
                except ValueError as exc:
                    raise q.error(str(exc), kw)
            elif kw.text in ("theta", "B", "A", "h"):
                arity = {"theta": 1, "B": 1, "A": 2}.get(kw.text)
                labels = self._labels(q, arity)
                q.expect("=")
                start = q.tok
                value = q.expr()
                q.finish()
                if not isinstance(value, DifferentialForm):
                    raise q.error(f"{kw.text} must be a form", start)
                key = labels[0] if len(labels) == 1 else labels
                table = tables.setdefault(kw.text, {})
                if key in table:
                    raise q.error(f"{kw.text} {' '.join(map(str, labels))} is given twice", kw)
                table[key] = value
            else:
                raise q.error(f"unknown cover entry {kw.text!r}", kw)
        if not boxes:
            raise ParseError(f"cover {name!r} has no boxes", lineno, 1)
        self.doc.covers[name] = self._cover_spec(name, boxes, tables, omega, mode, lineno)

    def _labels(self, q: ExpressionParser, arity: int | None) -> tuple[int, ...]:
        labels = []
        while q.tok.kind == "num":
            labels.append(int(q.tok.text))
            q.pos += 1
        if not labels or (arity is not None and len(labels) != arity):
            want = f"{arity} box label(s)" if arity else "box labels"
            raise q.error(f"expected {want}")
        if list(labels) != sorted(set(labels)):
            raise q.error("box labels must be strictly increasing")
        return tuple(labels)

    def _cover_spec(self, name, boxes, tables, omega, mode, lineno) -> CoverSpec:
        cover = BoxCover(self.doc.chart, boxes)
        if "theta" in tables and ("B" in tables or "A" in tables):
            raise ParseError(f"cover {name!r} mixes 1-form and 2-form data", lineno, 1)
        h = tables.get("h", {})
        if "theta" in tables or (not tables.get("B") and not tables.get("A") and all(len(k) == 2 for k in h)):
            data = LocalData1(dict(tables.get("theta", {})), dict(h))
        else:
            data = LocalData2(dict(tables.get("B", {})), dict(tables.get("A", {})), dict(h))
        return CoverSpec(cover, data, omega, mode)

    def command(self, raw: str, lineno: int):
        words = tuple(raw.split())
        col = raw.index(words[0]) + 1
        if words[0] == "suite":
            if len(words) not in (2, 3) or (len(words) == 3 and not words[2].isdigit()):
                raise ParseError("usage: suite NAME [COUNT]", lineno, col)
            self.doc.commands.append(Command(words, lineno))
            return
        for key, kinds in COMMANDS.items():
            if words[:len(key)] == key:
                args = words[len(key):]
                if len(args) != len(kinds):
                    raise ParseError(f"{' '.join(key)} takes {len(kinds)} argument(s), got {len(args)}", lineno, col)
                for arg, kind in zip(args, kinds):
                    self._check_arg(arg, kind, raw, lineno)
                self.doc.commands.append(Command(words, lineno))
                return
        raise ParseError(f"unknown command {words[0]!r}", lineno, col)

    def _check_arg(self, arg: str, kind: str, raw: str, lineno: int):
        col = raw.find(arg) + 1
        have = self.doc.kind(arg)
        if have is None:
            raise ParseError(f"unknown identifier {arg!r}", lineno, col)
        ok = (have == kind or (kind == "hform" and have in ("form", "function"))
              or (kind == "object" and have in ("form", "function", "field", "section")))
        if not ok:
            raise ParseError(f"{arg!r} is a {have}, expected a {kind.replace('hform', 'form')}", lineno, col)


def parse(text: str) -> Document:
    return DocumentParser(text).parse()


def parse_expression(text: str, chart: Chart, names: dict | None = None):
    p = ExpressionParser(tokenize(text, 1), 1, chart, names or {})
    value = p.expr()
    p.finish()
    return value
