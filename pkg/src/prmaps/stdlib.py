"""Derived maps: numerals, arithmetic and 0/1-valued predicates.

Truth values live in ``N``: a predicate is a map ``A -> N`` whose outputs
are ``0`` or ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

from .kernel import (
    NAT,
    ONE,
    SUCC,
    ZERO,
    Compose,
    Id,
    Iter,
    MapTerm,
    Obj,
    Pair,
    Prod,
    ProjL,
    ProjR,
    Signature,
    Terminal,
    infer_type,
    primrec,
)

NN = Prod(NAT, NAT)


@dataclass(frozen=True)
class NamedTerm:
    name: str
    term: MapTerm
    signature: Signature = field(init=False)
    predicate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "signature", infer_type(self.term))


def numeral(n: int) -> MapTerm:
    """``s . ... . s . 0 : 1 -> N`` with ``n`` successors."""
    if n < 0:
        raise ValueError(f"numeral of negative {n}")
    t: MapTerm = ZERO
    for _ in range(n):
        t = Compose(SUCC, t)
    return t


def const_map(a: Obj, k: int) -> MapTerm:
    return Compose(numeral(k), Terminal(a))


def true_map(a: Obj) -> MapTerm:
    return Compose(SUCC, Compose(ZERO, Terminal(a)))


def false_map(a: Obj) -> MapTerm:
    return Compose(ZERO, Terminal(a))


def _on_nat(f1: MapTerm) -> MapTerm:
    """Turn ``f: 1 x N -> B`` into ``N -> B``."""
    return Compose(f1, Pair(Terminal(NAT), Id(NAT)))


def _pre(*factors: MapTerm) -> MapTerm:
    """Right-nested composite ``f1 . (f2 . (... . fn))``."""
    t = factors[-1]
    for g in reversed(factors[:-1]):
        t = Compose(g, t)
    return t


# x + y by recursion on y
ADD = primrec(Id(NAT), Compose(SUCC, ProjR(NN, NAT)))

# x * y by recursion on y: x * (n+1) = x * n + x
MULT = primrec(
    Compose(ZERO, Terminal(NAT)),
    Compose(ADD, Pair(ProjR(NN, NAT), Compose(ProjL(NAT, NAT), ProjL(NN, NAT)))),
)

# pred(0) = 0, pred(n+1) = n
PRED = _on_nat(primrec(ZERO, Compose(ProjR(ONE, NAT), ProjL(Prod(ONE, NAT), NAT))))

# x -. y = pred^y(x)
MONUS = primrec(Id(NAT), Compose(PRED, ProjR(NN, NAT)))

# sign(n) = const1^n(0); the constant step makes this cheap to evaluate
SIGN = Compose(Iter(const_map(NAT, 1)), Pair(const_map(NAT, 0), Id(NAT)))

IS_ZERO = Compose(MONUS, Pair(const_map(NAT, 1), SIGN))

# 1 -. sign((x -. y) + (y -. x))
EQ_NAT = _pre(
    IS_ZERO,
    ADD,
    Pair(MONUS, Compose(MONUS, Pair(ProjR(NAT, NAT), ProjL(NAT, NAT)))),
)

LEQ = Compose(IS_ZERO, MONUS)


@lru_cache(maxsize=None)
def stdlib_catalog() -> tuple[NamedTerm, ...]:
    return (
        NamedTerm("add", ADD),
        NamedTerm("mult", MULT),
        NamedTerm("pred", PRED),
        NamedTerm("monus", MONUS),
        NamedTerm("sign", SIGN, predicate=True),
        NamedTerm("is_zero", IS_ZERO, predicate=True),
        NamedTerm("eq_nat", EQ_NAT, predicate=True),
        NamedTerm("leq", LEQ, predicate=True),
        NamedTerm("true_N", true_map(NAT), predicate=True),
        NamedTerm("false_N", false_map(NAT), predicate=True),
        NamedTerm("const_0", const_map(NAT, 0), predicate=True),
        NamedTerm("const_1", const_map(NAT, 1), predicate=True),
        NamedTerm("const_2", const_map(NAT, 2)),
    )


_CONST = re.compile(r"const_(\d+)")


def lookup(name: str) -> MapTerm:
    """Catalog entry by name; ``const_<k>`` works for every ``k``."""
    for entry in stdlib_catalog():
        if entry.name == name:
            return entry.term
    m = _CONST.fullmatch(name)
    if m:
        return const_map(NAT, int(m.group(1)))
    raise KeyError(name)
