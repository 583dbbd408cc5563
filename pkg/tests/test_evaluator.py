import random

import pytest

from prmaps.codec import encode_term
from prmaps.evaluator import ev, objectivity_check
from prmaps.kernel import (
    NAT, ONE, STAR, SUCC, Compose, Id, Iter, IterationLimit, MapTypeError,
    Pair, Prod, ProjL, Terminal, eval_map, infer_type,
)
from prmaps.sampling import random_map, random_value


def test_examples():
    assert ev(encode_term(SUCC), 3) == 4
    a = Prod(ONE, Prod(NAT, NAT))
    assert ev(encode_term(Terminal(a)), (STAR, (1, 2))) is STAR
    assert ev(encode_term(Iter(SUCC)), (3, 2)) == 5


def test_composition_law():
    g = Pair(SUCC, Id(NAT))
    f = Compose(SUCC, SUCC)
    for x in range(10):
        assert ev(encode_term(Compose(g, f)), x) == ev(encode_term(g), ev(encode_term(f), x))


def test_iteration_law():
    u = encode_term(Compose(SUCC, SUCC))
    it = encode_term(Iter(Compose(SUCC, SUCC)))
    for a in range(4):
        for n in range(6):
            assert ev(it, (a, n + 1)) == ev(u, ev(it, (a, n)))


def test_argument_checked():
    with pytest.raises(MapTypeError):
        ev(encode_term(ProjL(NAT, NAT)), 3)


def test_bounds():
    with pytest.raises(IterationLimit):
        ev(encode_term(Iter(SUCC)), (0, 50), limit=49)
    with pytest.raises(IterationLimit):
        ev(encode_term(Iter(SUCC)), (0, 50), fuel=10)


@pytest.mark.parametrize("seed", range(10))
def test_objectivity_random(seed):
    rng = random.Random(seed)
    for _ in range(30):
        t = random_map(rng, rng.randint(0, 5))
        v = random_value(rng, infer_type(t)[0], 8)
        try:
            eval_map(t, v, limit=30, fuel=20000)
        except IterationLimit:
            continue
        assert objectivity_check(t, v)
