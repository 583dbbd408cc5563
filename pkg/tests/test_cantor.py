import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import all_objects, diagonal_index, diagonal_pairs
from prmaps.cantor import cantor_pair, cantor_unpair, ct, idx
from prmaps.kernel import NAT, ONE, STAR, MapTypeError, Prod, has_type
from prmaps.sampling import random_obj, random_value


def test_known_values():
    assert cantor_pair(1, 1) == diagonal_index(1, 1) == 4
    assert cantor_unpair(5) == (0, 2)


def test_first_diagonals_match_walk():
    head = list(itertools.islice(diagonal_pairs(), 2000))
    assert [cantor_unpair(n) for n in range(2000)] == head
    assert [cantor_pair(x, y) for x, y in head] == list(range(2000))


@given(st.integers(0, 10**30), st.integers(0, 10**30))
def test_pair_then_unpair(x, y):
    assert cantor_unpair(cantor_pair(x, y)) == (x, y)


@given(st.integers(0, 10**60))
def test_unpair_then_pair(n):
    assert cantor_pair(*cantor_unpair(n)) == n


def test_ct_basic():
    assert ct(ONE, 0) is STAR
    assert ct(NAT, 7) == 7
    assert ct(Prod(NAT, NAT), 4) == (1, 1)


@pytest.mark.parametrize("a", [a for s in range(1, 6) for a in all_objects(s)], ids=str)
def test_ct_lands_in_object(a):
    for k in range(50):
        assert has_type(ct(a, k), a)


def test_idx_retracts_ct():
    rng = random.Random(3)
    for _ in range(30):
        a = random_obj(rng, 4)
        for _ in range(40):
            v = random_value(rng, a, 40)
            assert ct(a, idx(a, v)) == v


def test_ct_injective_on_free_objects():
    a = Prod(NAT, Prod(NAT, NAT))
    seen = {ct(a, k) for k in range(3000)}
    assert len(seen) == 3000


def test_idx_rejects_foreign_value():
    with pytest.raises(MapTypeError):
        idx(NAT, STAR)
    with pytest.raises(MapTypeError):
        idx(Prod(NAT, NAT), 3)
