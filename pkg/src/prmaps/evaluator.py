"""The evaluation map ``ev`` on Goedel codes.

``ev`` runs a code by peeling one constructor layer at a time; it never
rebuilds a :class:`~prmaps.kernel.MapTerm`.  Agreement with
:func:`~prmaps.kernel.eval_map` is checked separately by
:func:`objectivity_check`.
"""

from __future__ import annotations

from typing import Optional

from .codec import (
    COMPOSE_TAG,
    ID_TAG,
    ITER_TAG,
    PAIR_TAG,
    PROJL_TAG,
    PROJR_TAG,
    SUCC_TAG,
    TERMINAL_TAG,
    ZERO_TAG,
    Code,
    code_signature,
    encode_term,
    peel,
)
from .kernel import (
    STAR,
    MapTerm,
    MapTypeError,
    Value,
    _Budget,
    eval_map,
    format_value,
    has_type,
)


def ev(
    c: Code,
    v: Value,
    *,
    limit: Optional[int] = None,
    fuel: Optional[int] = None,
) -> Value:
    """Evaluate the map with code ``c`` at ``v``.

    Raises DecodeError / MapTypeError for invalid codes and ill-typed
    arguments.  ``limit`` and ``fuel`` behave as in ``eval_map``.
    """
    dom, _ = code_signature(c)
    if not has_type(v, dom):
        raise MapTypeError(f"argument {format_value(v)} is not an element of {dom}", v)
    budget = _Budget(limit, fuel) if limit is not None or fuel is not None else None
    return _ev(c, v, budget)


def _ev(c, v, budget):
    layer = peel(c)
    tag = layer[0]
    if tag == COMPOSE_TAG:
        return _ev(layer[1], _ev(layer[2], v, budget), budget)
    if tag == PAIR_TAG:
        return (_ev(layer[1], v, budget), _ev(layer[2], v, budget))
    if tag == ITER_TAG:
        u = layer[1]
        a, n = v
        if budget is not None:
            budget.spend(n)
        # loop form of ev(u$, (a, n+1)) = ev(u, ev(u$, (a, n)))
        for _ in range(n):
            b = _ev(u, a, budget)
            if b == a:
                break
            a = b
        return a
    if tag == ZERO_TAG:
        return 0
    if tag == SUCC_TAG:
        return v + 1
    if tag == ID_TAG:
        return v
    if tag == TERMINAL_TAG:
        return STAR
    if tag == PROJL_TAG:
        return v[0]
    if tag == PROJR_TAG:
        return v[1]
    raise AssertionError(f"unreachable tag {tag}")


def objectivity_check(t: MapTerm, v: Value, **bounds) -> bool:
    """``ev(code(t), v) == eval_map(t, v)``."""
    return ev(encode_term(t), v, **bounds) == eval_map(t, v, **bounds)
