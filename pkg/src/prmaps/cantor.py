"""Cantor pairing and the retractive counts ``ct_A : N -> A``."""

from __future__ import annotations

from math import isqrt

from .kernel import STAR, MapTypeError, Nat, Obj, One, Prod, Value, format_value


def cantor_pair(x: int, y: int) -> int:
    s = x + y
    return s * (s + 1) // 2 + y


def cantor_unpair(n: int) -> tuple[int, int]:
    if n < 0:
        raise ValueError(f"cantor_unpair of negative {n}")
    w = (isqrt(8 * n + 1) - 1) // 2
    y = n - w * (w + 1) // 2
    return w - y, y


def ct(a: Obj, k: int) -> Value:
    """The ``k``-th element of ``a``; surjective, and bijective unless ``1`` occurs."""
    if isinstance(a, One):
        return STAR
    if isinstance(a, Nat):
        return k
    if isinstance(a, Prod):
        x, y = cantor_unpair(k)
        return (ct(a.left, x), ct(a.right, y))
    raise MapTypeError(f"not an object: {a!r}", a)


def idx(a: Obj, v: Value) -> int:
    """A section of :func:`ct`: ``ct(a, idx(a, v)) == v``."""
    if isinstance(a, One):
        if v is not STAR:
            raise MapTypeError(f"{format_value(v)} is not the point of 1", v)
        return 0
    if isinstance(a, Nat):
        if type(v) is not int or v < 0:
            raise MapTypeError(f"{v!r} is not a natural number", v)
        return v
    if isinstance(a, Prod):
        if not (isinstance(v, tuple) and len(v) == 2):
            raise MapTypeError(f"{v!r} is not an element of {a}", v)
        return cantor_pair(idx(a.left, v[0]), idx(a.right, v[1]))
    raise MapTypeError(f"not an object: {a!r}", a)
