"""Goedel numbering of objects and map terms.

An object code is ``0`` for ``1``, ``1`` for ``N`` and
``2 + cantor_pair(a, b)`` for ``A x B``.  A term code is
``tag + 9 * payload``:

=====  ==========  ==========================================
tag    constructor payload
=====  ==========  ==========================================
0      Zero        0
1      Succ        0
2      Id          object code
3      Terminal    object code
4      ProjL       cantor_pair(object code, object code)
5      ProjR       cantor_pair(object code, object code)
6      Compose     seq_pair(code of g, code of f)
7      Pair        seq_pair(code of f, code of g)
8      Iter        code of f
=====  ==========  ==========================================

Subterm codes are joined with :func:`seq_pair`, a length-prefixed bit
concatenation.  Its output has about as many bits as both inputs together,
so code length stays linear in term size; Cantor pairing would double the
bit length at every nesting level.

Only codes of well-typed terms are valid: :func:`decode_term` raises
:class:`DecodeError` for malformed numbers and :class:`MapTypeError` for
well-formed but ill-typed ones.
"""

from __future__ import annotations

from functools import lru_cache

from .cantor import cantor_pair, cantor_unpair
from .kernel import (
    NAT,
    ONE,
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
    Signature,
    Succ,
    Terminal,
    Zero,
)

Code = int

NTAGS = 9
ZERO_TAG, SUCC_TAG, ID_TAG, TERMINAL_TAG, PROJL_TAG, PROJR_TAG = range(6)
COMPOSE_TAG, PAIR_TAG, ITER_TAG = 6, 7, 8


class DecodeError(ValueError):
    """A natural number that is not a (structurally valid) code."""


def seq_pair(x: int, y: int) -> int:
    """Injective ``N x N -> N`` with ``bits(x) + bits(y) + O(log bits(x))`` bits.

    Low to high: ``z`` one-bits and a zero, then ``m = bits(x) + 1`` in
    ``z + 1`` bits, then ``x``, then ``y``.
    """
    L = x.bit_length()
    m = L + 1
    z = m.bit_length() - 1
    return ((((y << L) | x) << (z + 1) | m) << (z + 1)) | ((1 << z) - 1)


def seq_unpair(p: int) -> tuple[int, int]:
    """Inverse of :func:`seq_pair`; DecodeError outside its image."""
    z = (~p & (p + 1)).bit_length() - 1  # trailing one-bits
    p >>= z + 1
    m = p & ((1 << (z + 1)) - 1)
    if m.bit_length() != z + 1:
        raise DecodeError("malformed length prefix")
    L = m - 1
    p >>= z + 1
    x = p & ((1 << L) - 1)
    if x.bit_length() != L:
        raise DecodeError("malformed length prefix")
    return x, p >> L


@lru_cache(maxsize=1 << 14)
def encode_obj(a: Obj) -> int:
    if isinstance(a, One):
        return 0
    if isinstance(a, Nat):
        return 1
    if isinstance(a, Prod):
        return 2 + cantor_pair(encode_obj(a.left), encode_obj(a.right))
    raise MapTypeError(f"not an object: {a!r}", a)


@lru_cache(maxsize=1 << 14)
def decode_obj(n: int) -> Obj:
    if type(n) is not int or n < 0:
        raise DecodeError(f"object code must be a natural number, got {n!r}")
    if n == 0:
        return ONE
    if n == 1:
        return NAT
    x, y = cantor_unpair(n - 2)
    return Prod(decode_obj(x), decode_obj(y))


@lru_cache(maxsize=1 << 16)
def encode_term(t: MapTerm) -> Code:
    match t:
        case Zero():
            return ZERO_TAG
        case Succ():
            return SUCC_TAG
        case Id(a):
            return ID_TAG + NTAGS * encode_obj(a)
        case Terminal(a):
            return TERMINAL_TAG + NTAGS * encode_obj(a)
        case ProjL(a, b):
            return PROJL_TAG + NTAGS * cantor_pair(encode_obj(a), encode_obj(b))
        case ProjR(a, b):
            return PROJR_TAG + NTAGS * cantor_pair(encode_obj(a), encode_obj(b))
        case Compose(g, f):
            return COMPOSE_TAG + NTAGS * seq_pair(encode_term(g), encode_term(f))
        case Pair(f, g):
            return PAIR_TAG + NTAGS * seq_pair(encode_term(f), encode_term(g))
        case Iter(f):
            return ITER_TAG + NTAGS * encode_term(f)
    raise MapTypeError(f"not a map term: {t!r}", t)


@lru_cache(maxsize=1 << 16)
def peel(c: Code) -> tuple:
    """Split off the top constructor: ``(tag, *fields)``.

    Object fields come back decoded, subterm fields stay codes.  Only the top
    layer is checked.
    """
    if type(c) is not int or c < 0:
        raise DecodeError(f"code must be a natural number, got {c!r}")
    payload, tag = divmod(c, NTAGS)
    if tag in (ZERO_TAG, SUCC_TAG):
        if payload != 0:
            raise DecodeError(f"{c}: constant tag {tag} with non-zero payload {payload}")
        return (tag,)
    if tag in (ID_TAG, TERMINAL_TAG):
        return (tag, decode_obj(payload))
    if tag in (PROJL_TAG, PROJR_TAG):
        x, y = cantor_unpair(payload)
        return (tag, decode_obj(x), decode_obj(y))
    if tag in (COMPOSE_TAG, PAIR_TAG):
        try:
            x, y = seq_unpair(payload)
        except DecodeError as e:
            raise DecodeError(f"{c}: {e}") from None
        return (tag, x, y)
    return (tag, payload)


@lru_cache(maxsize=1 << 16)
def code_signature(c: Code) -> Signature:
    """``(dom, cod)`` of a valid code, computed on the code itself."""
    layer = peel(c)
    tag = layer[0]
    if tag == ZERO_TAG:
        return ONE, NAT
    if tag == SUCC_TAG:
        return NAT, NAT
    if tag == ID_TAG:
        return layer[1], layer[1]
    if tag == TERMINAL_TAG:
        return layer[1], ONE
    if tag == PROJL_TAG:
        return Prod(layer[1], layer[2]), layer[1]
    if tag == PROJR_TAG:
        return Prod(layer[1], layer[2]), layer[2]
    if tag == COMPOSE_TAG:
        gd, gc = code_signature(layer[1])
        fd, fc = code_signature(layer[2])
        if fc != gd:
            raise MapTypeError(
                f"{c}: composite of [{fd},{fc}] followed by [{gd},{gc}]", c
            )
        return fd, gc
    if tag == PAIR_TAG:
        fd, fc = code_signature(layer[1])
        gd, gc = code_signature(layer[2])
        if fd != gd:
            raise MapTypeError(f"{c}: induced map of [{fd},{fc}] and [{gd},{gc}]", c)
        return fd, Prod(fc, gc)
    fd, fc = code_signature(layer[1])
    if fd != fc:
        raise MapTypeError(f"{c}: iterate of non-endomap [{fd},{fc}]", c)
    return Prod(fd, NAT), fd


def decode_term(c: Code) -> MapTerm:
    code_signature(c)
    return _build(c)


@lru_cache(maxsize=1 << 16)
def _build(c: Code) -> MapTerm:
    layer = peel(c)
    tag = layer[0]
    if tag == ZERO_TAG:
        return ZERO
    if tag == SUCC_TAG:
        return SUCC
    if tag == ID_TAG:
        return Id(layer[1])
    if tag == TERMINAL_TAG:
        return Terminal(layer[1])
    if tag == PROJL_TAG:
        return ProjL(layer[1], layer[2])
    if tag == PROJR_TAG:
        return ProjR(layer[1], layer[2])
    if tag == COMPOSE_TAG:
        return Compose(_build(layer[1]), _build(layer[2]))
    if tag == PAIR_TAG:
        return Pair(_build(layer[1]), _build(layer[2]))
    return Iter(_build(layer[1]))


def is_code(c: Code) -> bool:
    try:
        code_signature(c)
    except (DecodeError, MapTypeError):
        return False
    return True


def in_homset(c: Code, a: Obj, b: Obj) -> bool:
    """Whether ``c`` is the code of a map ``a -> b``."""
    try:
        return code_signature(c) == (a, b)
    except (DecodeError, MapTypeError):
        return False
