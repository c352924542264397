"""Expression language for the inequality corpus.

Grammar (precedence low to high): `+ -` < `* /` < unary `-` < `^` with an
integer-literal exponent.  Identifiers are `x`, `pi`, and the six functions
sin, cos, tan, sinh, cosh, tanh.  Decimal literals convert exactly to
rationals (0.15 is 3/20, never a float).  A quotient of two integer
literals folds to a single rational literal, so printed expressions
round-trip to equal syntax trees.

Corpus files hold one stanza per inequality:

    inequality THM31_LO {
      domain   = (0, pi/2)
      lhs      = 3 + (1/60)*x^3*sin(x)
      relation = <
      rhs      = 2*x/sin(x) + x/tan(x)
      tags     = expected:proved
    }

`(`/`)` mark open endpoints, `[`/`]` closed ones; `inf` is allowed as the
upper endpoint.  `#` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from . import _core
from .errors import DomainError, EvalError, ParseError, PoleError
from .interval import Interval, get_ctx, pi_enclose

__all__ = [
    "Token", "tokenize", "Expr", "Lit", "PiConst", "VarX", "Neg", "Add",
    "Sub", "Mul", "Div", "PowInt", "Call", "parse_expression", "format_expr",
    "InequalitySpec", "parse_corpus", "eval_expr", "eval_endpoint",
    "FUNCTIONS",
]

FUNCTIONS = ("sin", "cos", "tan", "sinh", "cosh", "tanh")


# --- tokens -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<WS>\s+|\#[^\n]*)
  | (?P<NUMBER>\d+(?:\.\d+)?)
  | (?P<IDENT>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<PLUS>\+) | (?P<MINUS>-) | (?P<STAR>\*) | (?P<SLASH>/)
  | (?P<CARET>\^) | (?P<LPAREN>\() | (?P<RPAREN>\)) | (?P<COMMA>,)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str):
    """Maximal-munch token stream; whitespace and # comments skipped."""
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ParseError(f"illegal character {text[i]!r}", i)
        kind = m.lastgroup
        if kind != "WS":
            out.append(Token(kind, m.group(), i))
        i = m.end()
    return out


# --- AST --------------------------------------------------------------------

class Expr:
    """Base class for expression nodes (immutable, structurally comparable)."""

    __slots__ = ()


@dataclass(frozen=True)
class Lit(Expr):
    value: Fraction
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class PiConst(Expr):
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class VarX(Expr):
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Neg(Expr):
    a: Expr
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Add(Expr):
    a: Expr
    b: Expr
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Sub(Expr):
    a: Expr
    b: Expr
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Mul(Expr):
    a: Expr
    b: Expr
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Div(Expr):
    a: Expr
    b: Expr
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class PowInt(Expr):
    base: Expr
    exponent: int
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Call(Expr):
    fn: str
    arg: Expr
    pos: int = field(default=-1, compare=False)


def _number_value(text: str) -> Fraction:
    if "." in text:
        whole, frac = text.split(".")
        scale = 10 ** len(frac)
        return Fraction(int(whole) * scale + int(frac), scale)
    return Fraction(int(text))


# --- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Optional[Token]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> Optional[Token]:
        t = self.peek()
        if t is not None:
            self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        t = self.peek()
        if t is None or t.kind != kind:
            got = "end of input" if t is None else f"{t.text!r}"
            pos = len(self.text) if t is None else t.position
            raise ParseError(f"expected {kind}, got {got}", pos)
        return self.next()

    def parse(self) -> Expr:
        e = self.expression()
        t = self.peek()
        if t is not None:
            raise ParseError(f"unexpected token {t.text!r}", t.position)
        return e

    def expression(self) -> Expr:
        e = self.term()
        while True:
            t = self.peek()
            if t is None or t.kind not in ("PLUS", "MINUS"):
                return e
            self.next()
            rhs = self.term()
            e = Add(e, rhs, t.position) if t.kind == "PLUS" else Sub(e, rhs, t.position)

    def term(self) -> Expr:
        e = self.unary()
        while True:
            t = self.peek()
            if t is None or t.kind not in ("STAR", "SLASH"):
                return e
            self.next()
            rhs = self.unary()
            if t.kind == "STAR":
                e = Mul(e, rhs, t.position)
            elif isinstance(e, Lit) and isinstance(rhs, Lit) and rhs.value != 0:
                e = Lit(e.value / rhs.value, e.pos)
            else:
                e = Div(e, rhs, t.position)

    def unary(self) -> Expr:
        t = self.peek()
        if t is not None and t.kind == "MINUS":
            self.next()
            return Neg(self.unary(), t.position)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        t = self.peek()
        if t is None or t.kind != "CARET":
            return base
        self.next()
        exp = self.unary()
        if isinstance(exp, Lit) and exp.value.denominator == 1:
            return PowInt(base, int(exp.value), t.position)
        if (isinstance(exp, Neg) and isinstance(exp.a, Lit)
                and exp.a.value.denominator == 1):
            return PowInt(base, -int(exp.a.value), t.position)
        raise ParseError("exponent must be an integer literal", t.position)

    def atom(self) -> Expr:
        t = self.next()
        if t is None:
            raise ParseError("unexpected end of input", len(self.text))
        if t.kind == "NUMBER":
            return Lit(_number_value(t.text), t.position)
        if t.kind == "LPAREN":
            e = self.expression()
            self.expect("RPAREN")
            return e
        if t.kind == "IDENT":
            name = t.text
            nxt = self.peek()
            if nxt is not None and nxt.kind == "LPAREN":
                if name not in FUNCTIONS:
                    raise ParseError(f"unknown function {name}", t.position)
                self.next()
                arg = self.expression()
                self.expect("RPAREN")
                return Call(name, arg, t.position)
            if name == "x":
                return VarX(t.position)
            if name == "pi":
                return PiConst(t.position)
            raise ParseError(f"unknown identifier {name}", t.position)
        raise ParseError(f"unexpected token {t.text!r}", t.position)


def parse_expression(text: str) -> Expr:
    return _Parser(text).parse()


# --- printer ----------------------------------------------------------------

def _prec_of(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return 1
    if isinstance(e, (Mul, Div)):
        return 2
    if isinstance(e, Lit) and e.value.denominator != 1:
        return 2  # prints as p/q
    if isinstance(e, Neg):
        return 3
    if isinstance(e, PowInt):
        return 4
    return 5


def format_expr(e: Expr) -> str:
    """Source form; parses back to an equal tree."""

    def fmt(node, parent, right_side=False):
        p = _prec_of(node)
        if isinstance(node, Lit):
            v = node.value
            s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        elif isinstance(node, PiConst):
            s = "pi"
        elif isinstance(node, VarX):
            s = "x"
        elif isinstance(node, Neg):
            s = "-" + fmt(node.a, 3)
        elif isinstance(node, Add):
            s = fmt(node.a, 1) + " + " + fmt(node.b, 1, True)
        elif isinstance(node, Sub):
            s = fmt(node.a, 1) + " - " + fmt(node.b, 2)
        elif isinstance(node, Mul):
            s = fmt(node.a, 2) + "*" + fmt(node.b, 2, True)
        elif isinstance(node, Div):
            s = fmt(node.a, 2) + "/" + fmt(node.b, 3)
        elif isinstance(node, PowInt):
            ex = str(node.exponent) if node.exponent >= 0 else f"(-{-node.exponent})"
            s = fmt(node.base, 5) + "^" + ex
        elif isinstance(node, Call):
            s = f"{node.fn}({fmt(node.arg, 0)})"
        else:
            raise TypeError(f"not an expression node: {node!r}")
        if p < parent or (p == parent and right_side and p in (1, 2)):
            return "(" + s + ")"
        return s

    return fmt(e, 0)


# --- evaluation -------------------------------------------------------------

@lru_cache(maxsize=512)
def compile_expr(e: Expr):
    """Lower an AST to the tuple form used by the fixed-point engine."""
    if isinstance(e, Lit):
        return ("lit", e.pos, e.value)
    if isinstance(e, PiConst):
        return ("pi", e.pos)
    if isinstance(e, VarX):
        return ("x", e.pos)
    if isinstance(e, Neg):
        return ("neg", e.pos, compile_expr(e.a))
    if isinstance(e, Add):
        return ("add", e.pos, compile_expr(e.a), compile_expr(e.b))
    if isinstance(e, Sub):
        return ("sub", e.pos, compile_expr(e.a), compile_expr(e.b))
    if isinstance(e, Mul):
        return ("mul", e.pos, compile_expr(e.a), compile_expr(e.b))
    if isinstance(e, Div):
        return ("div", e.pos, compile_expr(e.a), compile_expr(e.b))
    if isinstance(e, PowInt):
        return ("pow", e.pos, compile_expr(e.base), e.exponent)
    if isinstance(e, Call):
        return ("call", e.pos, e.fn, compile_expr(e.arg))
    raise TypeError(f"not an expression node: {e!r}")


def eval_expr(e: Expr, x: Interval, precision: int = 192) -> Interval:
    """Certified enclosure of {e(t) : t in x} at the given dyadic precision."""
    ctx = get_ctx(precision)
    node = compile_expr(e)
    a = ctx.lo_of(x.lo)
    b = ctx.hi_of(x.hi)
    try:
        lo, hi = _core.eval_plain(ctx, node, (a, b))
    except (DomainError, PoleError) as exc:
        raise EvalError(str(exc), getattr(exc, "position", None)) from exc
    return Interval(Fraction(lo, ctx.one), Fraction(hi, ctx.one))


_ENDPOINT_NODES = (Lit, PiConst, Neg, Add, Sub, Mul, Div, PowInt)


def _check_endpoint_expr(e: Expr):
    if not isinstance(e, _ENDPOINT_NODES):
        raise ParseError(
            "domain endpoints allow only rationals, pi and arithmetic",
            getattr(e, "pos", None))
    for name in ("a", "b", "base"):
        child = getattr(e, name, None)
        if child is not None:
            _check_endpoint_expr(child)


def eval_endpoint(e: Expr) -> Interval:
    """Tight enclosure of a constant endpoint expression (exact when pi-free)."""
    _check_endpoint_expr(e)
    if isinstance(e, Lit):
        return Interval.point(e.value)
    if isinstance(e, PiConst):
        return pi_enclose(Fraction(1, 10 ** 36)).interval
    if isinstance(e, Neg):
        return -eval_endpoint(e.a)
    if isinstance(e, Add):
        return eval_endpoint(e.a) + eval_endpoint(e.b)
    if isinstance(e, Sub):
        return eval_endpoint(e.a) - eval_endpoint(e.b)
    if isinstance(e, Mul):
        return eval_endpoint(e.a) * eval_endpoint(e.b)
    if isinstance(e, Div):
        return eval_endpoint(e.a) / eval_endpoint(e.b)
    if isinstance(e, PowInt):
        return eval_endpoint(e.base) ** e.exponent
    raise TypeError(f"bad endpoint node {e!r}")


# --- corpus -----------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_.]*$")

INF = "inf"


@dataclass(frozen=True)
class InequalitySpec:
    """One corpus stanza: `lhs relation rhs` claimed on the stated domain."""

    name: str
    lo_expr: Expr
    hi_expr: Union[Expr, str]        # Expr or the marker "inf"
    lo_closed: bool
    hi_closed: bool
    lhs: Expr
    rhs: Expr
    relation: str                    # "<" or ">"
    tags: tuple = ()

    @property
    def unbounded(self) -> bool:
        return self.hi_expr == INF

    def difference(self) -> Expr:
        """The expression claimed positive on the domain."""
        if self.relation == ">":
            return Sub(self.lhs, self.rhs)
        return Sub(self.rhs, self.lhs)

    def tag_value(self, key: str):
        prefix = key + ":"
        for t in self.tags:
            if t.startswith(prefix):
                return t[len(prefix):]
        return None


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _parse_domain(text: str, stanza: str):
    s = text.strip()
    if not s or s[0] not in "([" or s[-1] not in ")]":
        raise ParseError(f"stanza {stanza}: malformed domain {text!r}")
    lo_closed = s[0] == "["
    hi_closed = s[-1] == "]"
    inner = s[1:-1]
    depth = 0
    split = -1
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            split = i
            break
    if split < 0:
        raise ParseError(f"stanza {stanza}: domain needs two endpoints")
    lo_text = inner[:split].strip()
    hi_text = inner[split + 1:].strip()
    lo_expr = parse_expression(lo_text)
    _check_endpoint_expr(lo_expr)
    if hi_text == INF:
        if hi_closed:
            raise ParseError(f"stanza {stanza}: [.., inf] cannot be closed")
        return lo_expr, INF, lo_closed, hi_closed
    hi_expr = parse_expression(hi_text)
    _check_endpoint_expr(hi_expr)
    lo_iv = eval_endpoint(lo_expr)
    hi_iv = eval_endpoint(hi_expr)
    if not lo_iv.hi < hi_iv.lo:
        raise ParseError(f"stanza {stanza}: domain endpoints out of order")
    return lo_expr, hi_expr, lo_closed, hi_closed


def parse_corpus(text: str):
    """Parse a corpus file into a list of InequalitySpec (order preserved)."""
    specs = []
    seen = set()
    lines = text.splitlines()
    i = 0
    n = len(lines)
    while i < n:
        line = _strip_comment(lines[i]).strip()
        i += 1
        if not line:
            continue
        m = re.match(r"inequality\s+(\S+)\s*\{$", line)
        if not m:
            raise ParseError(f"expected 'inequality NAME {{', got {line!r}")
        name = m.group(1)
        if not _NAME_RE.match(name):
            raise ParseError(f"bad inequality name {name!r}")
        if name in seen:
            raise ParseError(f"duplicate inequality name {name!r}")
        seen.add(name)
        fields = {}
        closed = False
        while i < n:
            line = _strip_comment(lines[i]).strip()
            i += 1
            if not line:
                continue
            if line == "}":
                closed = True
                break
            if "=" not in line:
                raise ParseError(f"stanza {name}: malformed line {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key in fields:
                raise ParseError(f"stanza {name}: duplicate key {key!r}")
            fields[key] = value
        if not closed:
            raise ParseError(f"stanza {name}: missing closing '}}'")
        for req in ("domain", "lhs", "relation", "rhs"):
            if req not in fields:
                raise ParseError(f"stanza {name}: missing {req!r}")
        if fields["relation"] not in ("<", ">"):
            raise ParseError(
                f"stanza {name}: relation must be < or >, got {fields['relation']!r}")
        lo_expr, hi_expr, lo_c, hi_c = _parse_domain(fields["domain"], name)
        tags = tuple(t.strip() for t in fields.get("tags", "").split(",") if t.strip())
        specs.append(InequalitySpec(
            name=name,
            lo_expr=lo_expr, hi_expr=hi_expr, lo_closed=lo_c, hi_closed=hi_c,
            lhs=parse_expression(fields["lhs"]),
            rhs=parse_expression(fields["rhs"]),
            relation=fields["relation"],
            tags=tags,
        ))
    return specs
