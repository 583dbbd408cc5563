"""Text syntax for objects, map terms, values and deduction trees.

Objects::

    obj  := "1" | "N" | "(" obj "*" obj ")"

Terms (``(g . f)`` applies ``f`` first)::

    term := "0" | "s" | "id[" obj "]" | "pi[" obj "]"
          | "l[" obj "," obj "]" | "r[" obj "," obj "]"
          | "(" term "." term ")" | "<" term ";" term ">" | "iter(" term ")"
          | "primrec(" term "," term ")" | "true[" obj "]" | "@" name

Proofs are s-expressions ``(rule-name param* premise*)``; a parameter is
a decimal code or an inline term prefixed with ``#``.  ``const-subst``
takes its kind (``pi`` or ``pi-one``) as first parameter.

Printing always produces the single canonical, fully parenthesised form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .codec import DecodeError, decode_term, encode_term
from .kernel import (
    NAT,
    ONE,
    STAR,
    SUCC,
    ZERO,
    Compose,
    Id,
    Iter,
    MapTerm,
    MapTypeError,
    Nat,
    Obj,
    One,
    Pair,
    Prod,
    ProjL,
    ProjR,
    Succ,
    Terminal,
    Value,
    Zero,
    format_value,
    infer_type,
    primrec,
)
from .proofs import CONST_KINDS, N_PARAMS, N_PREMISES, DeductionTree, Rule
from .stdlib import lookup, true_map


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan, expected=()):
        self.span = span
        self.expected = frozenset(expected)
        if self.expected:
            message += f" (expected {' or '.join(sorted(self.expected))})"
        super().__init__(f"{message} at {span.start}..{span.end}")


# ---------------------------------------------------------------------------
# printing


def print_obj(a: Obj) -> str:
    return str(a)


def print_term(t: MapTerm) -> str:
    match t:
        case Zero():
            return "0"
        case Succ():
            return "s"
        case Id(a):
            return f"id[{a}]"
        case Terminal(a):
            return f"pi[{a}]"
        case ProjL(a, b):
            return f"l[{a},{b}]"
        case ProjR(a, b):
            return f"r[{a},{b}]"
        case Compose(g, f):
            return f"({print_term(g)} . {print_term(f)})"
        case Pair(f, g):
            return f"<{print_term(f)}; {print_term(g)}>"
        case Iter(f):
            return f"iter({print_term(f)})"
    raise MapTypeError(f"not a map term: {t!r}", t)


def print_proof(t: DeductionTree) -> str:
    parts = [t.rule.value]
    for p in t.params:
        parts.append(p if isinstance(p, str) else str(encode_term(p)))
    for q in t.premises:
        parts.append(print_proof(q))
    return "(" + " ".join(parts) + ")"


# ---------------------------------------------------------------------------
# scanning

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_\-]*)|(?P<punct>[()<>\[\];.,*#@])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "name", "punct", "eof"
    text: str
    start: int
    end: int

    @property
    def span(self):
        return SourceSpan(self.start, self.end)


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1))
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), m.start(), m.end()))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text), len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        shown = repr(tok.text) if tok.kind != "eof" else "end of input"
        raise ParseError(f"unexpected {shown}", tok.span, expected)

    def expect(self, text: str) -> _Tok:
        if self.tok.text != text or self.tok.kind not in ("punct", "name", "num"):
            self.fail({repr(text)})
        return self.advance()

    def end(self):
        if self.tok.kind != "eof":
            self.fail({"end of input"})

    # -- objects -----------------------------------------------------------

    def obj(self) -> Obj:
        t = self.tok
        if t.kind == "num" and t.text == "1":
            self.advance()
            return ONE
        if t.kind == "name" and t.text == "N":
            self.advance()
            return NAT
        if t.text == "(" and t.kind == "punct":
            self.advance()
            a = self.obj()
            self.expect("*")
            b = self.obj()
            self.expect(")")
            return Prod(a, b)
        self.fail({"'1'", "'N'", "'('"})

    def bracket_objs(self, n: int) -> list[Obj]:
        self.expect("[")
        out = [self.obj()]
        for _ in range(n - 1):
            self.expect(",")
            out.append(self.obj())
        self.expect("]")
        return out

    # -- terms -------------------------------------------------------------

    _TERM_START = {"'0'", "'s'", "'id'", "'pi'", "'l'", "'r'", "'('", "'<'",
                   "'iter'", "'primrec'", "'true'", "'@'"}

    def term(self) -> MapTerm:
        t = self.tok
        start = t.start
        if t.kind == "num":
            if t.text == "0":
                self.advance()
                return ZERO
            self.fail(self._TERM_START)
        if t.kind == "name":
            name = t.text
            if name == "s":
                self.advance()
                return SUCC
            if name in ("id", "pi", "true"):
                self.advance()
                (a,) = self.bracket_objs(1)
                return {"id": Id, "pi": Terminal, "true": true_map}[name](a)
            if name in ("l", "r"):
                self.advance()
                a, b = self.bracket_objs(2)
                return ProjL(a, b) if name == "l" else ProjR(a, b)
            if name == "iter":
                self.advance()
                self.expect("(")
                f = self.term()
                self.expect(")")
                return self._checked(Iter(f), start)
            if name == "primrec":
                self.advance()
                self.expect("(")
                g = self.term()
                self.expect(",")
                h = self.term()
                self.expect(")")
                try:
                    return primrec(g, h)
                except MapTypeError as e:
                    raise ParseError(str(e), self._span_from(start)) from None
            self.fail(self._TERM_START)
        if t.kind == "punct":
            if t.text == "@":
                self.advance()
                n = self.tok
                if n.kind != "name":
                    self.fail({"catalog name"})
                self.advance()
                try:
                    return lookup(n.text)
                except KeyError:
                    raise ParseError(f"unknown catalog name {n.text!r}", n.span) from None
            if t.text == "(":
                self.advance()
                g = self.term()
                self.expect(".")
                f = self.term()
                self.expect(")")
                return self._checked(Compose(g, f), start)
            if t.text == "<":
                self.advance()
                f = self.term()
                self.expect(";")
                g = self.term()
                self.expect(">")
                return self._checked(Pair(f, g), start)
        self.fail(self._TERM_START)

    def _span_from(self, start: int) -> SourceSpan:
        end = self.toks[self.i - 1].end if self.i > 0 else start
        return SourceSpan(start, max(start, end))

    def _checked(self, t: MapTerm, start: int) -> MapTerm:
        try:
            infer_type(t)
        except MapTypeError as e:
            raise ParseError(str(e), self._span_from(start)) from None
        return t

    # -- values ------------------------------------------------------------

    def value(self, a: Obj | None) -> Value:
        t = self.tok
        if t.kind == "punct" and t.text == "*":
            if a is not None and a != ONE:
                self.fail({f"element of {a}"})
            self.advance()
            return STAR
        if t.kind == "num":
            if isinstance(a, One) and t.text == "0":
                self.advance()
                return STAR
            if a is None or isinstance(a, Nat):
                self.advance()
                return int(t.text)
            self.fail({f"element of {a}"})
        if t.kind == "punct" and t.text == "(":
            if a is not None and not isinstance(a, Prod):
                self.fail({f"element of {a}"})
            self.advance()
            x = self.value(a.left if a is not None else None)
            self.expect(",")
            y = self.value(a.right if a is not None else None)
            self.expect(")")
            return (x, y)
        self.fail({"'*'", "number", "'('"})

    # -- proofs ------------------------------------------------------------

    def proof(self) -> DeductionTree:
        self.expect("(")
        name = self.tok
        if name.kind != "name":
            self.fail({"rule name"})
        self.advance()
        try:
            rule = Rule(name.text)
        except ValueError:
            raise ParseError(
                f"unknown rule {name.text!r}", name.span, {repr(r.value) for r in Rule}
            ) from None
        params: list = []
        n_params = N_PARAMS.get(rule, 0)
        if rule is Rule.CONST_SUBST:
            kind = self.tok
            if kind.kind != "name" or kind.text not in CONST_KINDS:
                self.fail({repr(k) for k in CONST_KINDS})
            self.advance()
            params.append(kind.text)
            n_params = CONST_KINDS[kind.text]
        for _ in range(n_params):
            params.append(self.param())
        premises = []
        for _ in range(N_PREMISES[rule]):
            if not (self.tok.kind == "punct" and self.tok.text == "("):
                self.fail({"premise '('"})
            premises.append(self.proof())
        self.expect(")")
        return DeductionTree(rule, tuple(params), tuple(premises))

    def param(self) -> MapTerm:
        t = self.tok
        if t.kind == "num":
            self.advance()
            try:
                return decode_term(int(t.text))
            except (DecodeError, MapTypeError) as e:
                raise ParseError(f"invalid code: {e}", t.span) from None
        if t.kind == "punct" and t.text == "#":
            self.advance()
            return self.term()
        self.fail({"decimal code", "'#' term"})


def _parse(text: str, method, *args):
    p = _Parser(text)
    out = getattr(p, method)(*args)
    p.end()
    return out


def parse_obj(text: str) -> Obj:
    return _parse(text, "obj")


def parse_term(text: str) -> MapTerm:
    """Parse and type-check a term; every failure is a :class:`ParseError`."""
    return _parse(text, "term")


def parse_value(text: str, a: Obj | None = None) -> Value:
    """Parse ``*``, decimals and ``(v,w)``; with ``a`` given, check against it."""
    return _parse(text, "value", a)


def parse_proof(text: str) -> DeductionTree:
    return _parse(text, "proof")


__all__ = [
    "ParseError",
    "SourceSpan",
    "format_value",
    "parse_obj",
    "parse_proof",
    "parse_term",
    "parse_value",
    "print_obj",
    "print_proof",
    "print_term",
]
