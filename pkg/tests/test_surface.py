import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_objects
from prmaps.kernel import NAT, ONE, STAR, SUCC, ZERO, Compose, Id, Iter, Pair, Prod, ProjL
from prmaps.proofs import Rule, check_tree, enumerate_trees
from prmaps.sampling import random_instance, random_map
from prmaps.stdlib import ADD, true_map
from prmaps.surface import (
    ParseError, SourceSpan, parse_obj, parse_proof, parse_term, parse_value,
    print_obj, print_proof, print_term,
)


@pytest.mark.parametrize(
    "text,term",
    [
        ("0", ZERO),
        ("s", SUCC),
        ("id[(N * 1)]", Id(Prod(NAT, ONE))),
        ("(s . 0)", Compose(SUCC, ZERO)),
        ("<s; id[N]>", Pair(SUCC, Id(NAT))),
        ("iter(s)", Iter(SUCC)),
        ("l[N,N]", ProjL(NAT, NAT)),
        ("@add", ADD),
        ("true[N]", true_map(NAT)),
        ("  ( s .\n 0 ) ", Compose(SUCC, ZERO)),
    ],
)
def test_parse_examples(text, term):
    assert parse_term(text) == term


def test_parse_primrec():
    t = parse_term("primrec(id[N], (s . r[(N * N),N]))")
    assert t == ADD


@pytest.mark.parametrize(
    "text,start",
    [
        ("(s . id[1])", 0),
        ("<s; 0>", 0),
        ("iter(pi[N])", 0),
        ("(s . )", 5),
        ("id[(N * )]", 8),
        ("@nothing", 1),
        ("s s", 2),
        ("", 0),
        ("$", 0),
    ],
)
def test_parse_errors_have_spans(text, start):
    with pytest.raises(ParseError) as info:
        parse_term(text)
    assert isinstance(info.value.span, SourceSpan)
    assert info.value.span.start == start


def test_values():
    assert parse_value("*") is STAR
    assert parse_value("0", ONE) is STAR
    assert parse_value("(3,(0,4))", Prod(NAT, Prod(ONE, NAT))) == (3, (STAR, 4))
    with pytest.raises(ParseError):
        parse_value("(1,2)", NAT)
    with pytest.raises(ParseError):
        parse_value("*", NAT)


def test_objects_roundtrip():
    for s in range(1, 8):
        for a in all_objects(s):
            assert parse_obj(print_obj(a)) == a


def test_terms_roundtrip():
    rng = random.Random(5)
    for _ in range(500):
        t = random_map(rng, rng.randint(0, 6))
        text = print_term(t)
        assert parse_term(text) == t
        assert print_term(parse_term(text)) == text


def test_proofs_roundtrip():
    rng = random.Random(8)
    for rule in Rule:
        for _ in range(5):
            p = random_instance(rng, rule)
            assert parse_proof(print_proof(p)) == p
    for k in range(0, 3000, 37):
        p = enumerate_trees(k)
        assert parse_proof(print_proof(p)) == p


def test_proof_with_inline_terms():
    p = parse_proof("(trans (refl #s) (symm (refl 1)))")
    assert str(check_tree(p)) == "s = s : N -> N"
    p = parse_proof("(const-subst pi-one)")
    assert str(check_tree(p)) == "pi[1] = id[1] : 1 -> 1"


@pytest.mark.parametrize(
    "text",
    ["(refl)", "(refl 1 2)", "(trans (refl 1))", "(bogus 1)", "(const-subst pi)", "(refl 9)", "(refl #)"],
)
def test_proof_arity_and_code_errors(text):
    with pytest.raises(ParseError):
        parse_proof(text)


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="0sidpiterlr[]()<>;.,*N1@#_ abc", max_size=30))
def test_parser_is_total(text):
    for parse in (parse_term, parse_obj, parse_value, parse_proof):
        try:
            parse(text)
        except ParseError:
            pass
