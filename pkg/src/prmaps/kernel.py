"""Objects, map terms and direct evaluation of primitive recursive maps.

Objects are built from the terminal object ``1``, the naturals ``N`` and
binary products.  Map terms are the combinators zero, successor,
identities, terminal maps, projections, composition, induced maps into a
product and iteration.  Values are represented natively:

* the single point of ``1`` is :data:`STAR` (printed ``0``),
* a natural number is a Python ``int``,
* an element of ``A x B`` is a 2-tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple, Union


class MapTypeError(TypeError):
    """A term or value violates the typing discipline.

    ``term`` holds the offending subterm (or value) when there is one.
    """

    def __init__(self, message: str, term=None):
        super().__init__(message)
        self.term = term


class IterationLimit(RuntimeError):
    """Raised by evaluators when an iteration bound is exceeded."""


# ---------------------------------------------------------------------------
# objects


class Obj:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class One(Obj):
    def __str__(self):
        return "1"


@dataclass(frozen=True, slots=True)
class Nat(Obj):
    def __str__(self):
        return "N"


@dataclass(frozen=True, slots=True)
class Prod(Obj):
    left: Obj
    right: Obj

    def __str__(self):
        return f"({self.left} * {self.right})"


ONE = One()
NAT = Nat()


def obj_size(a: Obj) -> int:
    if isinstance(a, Prod):
        return 1 + obj_size(a.left) + obj_size(a.right)
    return 1


def obj_depth(a: Obj) -> int:
    if isinstance(a, Prod):
        return 1 + max(obj_depth(a.left), obj_depth(a.right))
    return 0


# ---------------------------------------------------------------------------
# values


class _Star:
    """The unique element of the terminal object."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "STAR"

    def __reduce__(self):
        return (_Star, ())


STAR = _Star()

Value = Union[_Star, int, tuple]


def has_type(v: Value, a: Obj) -> bool:
    if isinstance(a, One):
        return v is STAR
    if isinstance(a, Nat):
        return type(v) is int and v >= 0
    if isinstance(a, Prod):
        return (
            isinstance(v, tuple)
            and len(v) == 2
            and has_type(v[0], a.left)
            and has_type(v[1], a.right)
        )
    raise MapTypeError(f"not an object: {a!r}", a)


def format_value(v: Value) -> str:
    """Canonical text of a value; the point of ``1`` prints as ``0``."""
    if v is STAR:
        return "0"
    if isinstance(v, tuple):
        return f"({format_value(v[0])},{format_value(v[1])})"
    return str(v)


# ---------------------------------------------------------------------------
# map terms


class MapTerm:
    __slots__ = ()

    def __str__(self):
        from .surface import print_term

        return print_term(self)


@dataclass(frozen=True, slots=True, repr=False)
class Zero(MapTerm):
    def __repr__(self):
        return "Zero()"


@dataclass(frozen=True, slots=True, repr=False)
class Succ(MapTerm):
    def __repr__(self):
        return "Succ()"


@dataclass(frozen=True, slots=True)
class Id(MapTerm):
    obj: Obj


@dataclass(frozen=True, slots=True)
class Terminal(MapTerm):
    obj: Obj


@dataclass(frozen=True, slots=True)
class ProjL(MapTerm):
    left: Obj
    right: Obj


@dataclass(frozen=True, slots=True)
class ProjR(MapTerm):
    left: Obj
    right: Obj


@dataclass(frozen=True, slots=True)
class Compose(MapTerm):
    """``g . f``: apply ``f`` first, then ``g``."""

    g: MapTerm
    f: MapTerm


@dataclass(frozen=True, slots=True)
class Pair(MapTerm):
    f: MapTerm
    g: MapTerm


@dataclass(frozen=True, slots=True)
class Iter(MapTerm):
    f: MapTerm


ZERO = Zero()
SUCC = Succ()

Signature = Tuple[Obj, Obj]


@lru_cache(maxsize=1 << 16)
def infer_type(t: MapTerm) -> Signature:
    """Return ``(dom, cod)`` of a well-typed term, else raise MapTypeError."""
    match t:
        case Zero():
            return ONE, NAT
        case Succ():
            return NAT, NAT
        case Id(a):
            return a, a
        case Terminal(a):
            return a, ONE
        case ProjL(a, b):
            return Prod(a, b), a
        case ProjR(a, b):
            return Prod(a, b), b
        case Compose(g, f):
            fd, fc = infer_type(f)
            gd, gc = infer_type(g)
            if fc != gd:
                raise MapTypeError(
                    f"composition mismatch: codomain {fc} of inner map "
                    f"vs domain {gd} of outer map",
                    t,
                )
            return fd, gc
        case Pair(f, g):
            fd, fc = infer_type(f)
            gd, gc = infer_type(g)
            if fd != gd:
                raise MapTypeError(
                    f"induced map needs a common domain, got {fd} and {gd}", t
                )
            return fd, Prod(fc, gc)
        case Iter(f):
            fd, fc = infer_type(f)
            if fd != fc:
                raise MapTypeError(f"iterated map must be an endomap, got {fd} -> {fc}", t)
            return Prod(fd, NAT), fd
    raise MapTypeError(f"not a map term: {t!r}", t)


def is_well_typed(t: MapTerm) -> bool:
    try:
        infer_type(t)
    except MapTypeError:
        return False
    return True


def term_size(t: MapTerm) -> int:
    """Number of constructor nodes, object annotations included."""
    match t:
        case Zero() | Succ():
            return 1
        case Id(a) | Terminal(a):
            return 1 + obj_size(a)
        case ProjL(a, b) | ProjR(a, b):
            return 1 + obj_size(a) + obj_size(b)
        case Compose(x, y) | Pair(x, y):
            return 1 + term_size(x) + term_size(y)
        case Iter(f):
            return 1 + term_size(f)
    raise MapTypeError(f"not a map term: {t!r}", t)


def term_depth(t: MapTerm) -> int:
    match t:
        case Compose(x, y) | Pair(x, y):
            return 1 + max(term_depth(x), term_depth(y))
        case Iter(f):
            return 1 + term_depth(f)
    return 0


# ---------------------------------------------------------------------------
# evaluation


class _Budget:
    __slots__ = ("limit", "fuel")

    def __init__(self, limit, fuel):
        self.limit = limit
        self.fuel = fuel

    def spend(self, n):
        if self.limit is not None and n > self.limit:
            raise IterationLimit(f"iteration count {n} exceeds limit {self.limit}")
        if self.fuel is not None:
            self.fuel -= n
            if self.fuel < 0:
                raise IterationLimit("evaluation fuel exhausted")


def eval_map(
    t: MapTerm,
    v: Value,
    *,
    limit: Optional[int] = None,
    fuel: Optional[int] = None,
) -> Value:
    """Apply the map denoted by ``t`` to ``v``.

    ``limit`` bounds every single iteration count and ``fuel`` the total
    number of iteration steps; both default to unbounded and raise
    :class:`IterationLimit` when exceeded.
    """
    dom, _ = infer_type(t)
    if not has_type(v, dom):
        raise MapTypeError(f"argument {format_value(v)} is not an element of {dom}", v)
    budget = _Budget(limit, fuel) if limit is not None or fuel is not None else None
    return _eval(t, v, budget)


def _eval(t, v, budget):
    match t:
        case Zero():
            return 0
        case Succ():
            return v + 1
        case Id():
            return v
        case Terminal():
            return STAR
        case ProjL():
            return v[0]
        case ProjR():
            return v[1]
        case Compose(g, f):
            return _eval(g, _eval(f, v, budget), budget)
        case Pair(f, g):
            return (_eval(f, v, budget), _eval(g, v, budget))
        case Iter(f):
            a, n = v
            if budget is not None:
                budget.spend(n)
            for _ in range(n):
                b = _eval(f, a, budget)
                if b == a:
                    # fixed point: the remaining iterations cannot move it
                    break
                a = b
            return a
    raise MapTypeError(f"not a map term: {t!r}", t)


# ---------------------------------------------------------------------------
# derived constructions


def product_map(u: MapTerm, v: MapTerm) -> MapTerm:
    """``u # v : A x B -> C x D`` for ``u: A -> C`` and ``v: B -> D``."""
    a, _ = infer_type(u)
    b, _ = infer_type(v)
    return Pair(Compose(u, ProjL(a, b)), Compose(v, ProjR(a, b)))


def primrec(g: MapTerm, h: MapTerm) -> MapTerm:
    """The map ``f: A x N -> B`` defined by primitive recursion.

    ``f(a, 0) = g(a)`` and ``f(a, n+1) = h((a, n), f(a, n))``, where
    ``g: A -> B`` and ``h: (A x N) x B -> B``.  The result iterates the step
    ``((a, n), b) |-> ((a, n+1), h((a, n), b))`` from ``((a, 0), g(a))`` and
    projects away the counter.
    """
    a, b = infer_type(g)
    hd, hc = infer_type(h)
    an = Prod(a, NAT)
    state = Prod(an, b)
    if hd != state or hc != b:
        raise MapTypeError(
            f"step must have type {state} -> {b} for initialisation {a} -> {b}, "
            f"got {hd} -> {hc}",
            h,
        )
    counter_step = Pair(
        Compose(ProjL(a, NAT), ProjL(an, b)),
        Compose(SUCC, Compose(ProjR(a, NAT), ProjL(an, b))),
    )
    step = Pair(counter_step, h)
    init = Pair(
        Pair(ProjL(a, NAT), Compose(ZERO, Terminal(an))),
        Compose(g, ProjL(a, NAT)),
    )
    return Compose(ProjR(an, b), Compose(Iter(step), Pair(init, ProjR(a, NAT))))
