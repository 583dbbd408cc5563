"""Acceptance gate: one test per criterion, summarised at the end of the run."""

import random
import subprocess
import sys
import time

import pytest

from oracles import all_objects, brute_force_trees, diagonal_pairs
from prmaps.cantor import cantor_pair, cantor_unpair, ct, idx
from prmaps.codec import decode_term, encode_term, is_code
from prmaps.decision import (
    Counterexample, Exhausted, Proved, Predicate, in_decision_domain, nabla,
    verdict_audit,
)
from prmaps.evaluator import ev, objectivity_check
from prmaps.kernel import (
    NAT, ONE, SUCC, Compose, Id, IterationLimit, Pair, Prod, eval_map,
    infer_type, obj_depth, term_depth,
)
from prmaps.proofs import (
    DeductionTree, Rule, check_tree, enumerate_trees, soundness_check,
)
from prmaps.sampling import random_instance, random_map, random_obj, random_value
from prmaps.stdlib import (
    ADD, EQ_NAT, LEQ, MONUS, MULT, PRED, SIGN, false_map, stdlib_catalog, true_map,
)
from prmaps.surface import ParseError, parse_proof, parse_term, print_proof, print_term

pytestmark = pytest.mark.slow

# time limits in seconds
LIMIT_OBJECTIVITY = 60
LIMIT_SOUNDNESS = 120
LIMIT_ENUMERATION = 120
LIMIT_DECISION = 300

# iteration counts of the objectivity suite, and its per-evaluation step budget
MAX_COUNT = 16
STEP_FUEL = 100_000

# largest fuel of the decision corpus and the cap for predicates whose
# evaluation cost grows with the argument (see the per-predicate table)
MAX_FUEL = 10_000
FUEL_GRID = (0, 1, 2, 3, 5, 10, 50, 100, 120, 250, 1000, 3000, 3055, 3062, 5000, MAX_FUEL)

# reflexivity indices of true_A, computed by a linear scan of the enumeration
REFL_INDEX = {NAT: 3061, ONE: 3054}


def test_criterion_1_objectivity():
    rng = random.Random(1)
    start = time.perf_counter()
    done = 0
    while done < 1000:
        t = random_map(rng, rng.randint(0, 6))
        if term_depth(t) > 6:
            continue
        v = random_value(rng, infer_type(t)[0], MAX_COUNT)
        try:
            eval_map(t, v, limit=MAX_COUNT, fuel=STEP_FUEL)
        except IterationLimit:
            continue
        assert objectivity_check(t, v, limit=MAX_COUNT, fuel=STEP_FUEL), print_term(t)
        done += 1
    assert time.perf_counter() - start < LIMIT_OBJECTIVITY


def test_criterion_2_rule_soundness():
    start = time.perf_counter()
    for rule in Rule:
        rng = random.Random(rule.value)
        for _ in range(100):
            tree = random_instance(rng, rule)
            assert tree.rule is rule
            assert soundness_check(tree, 25, limit=64, fuel=200_000), print_proof(tree)
    assert time.perf_counter() - start < LIMIT_SOUNDNESS


def test_criterion_3_enumeration_integrity():
    start = time.perf_counter()
    trees = [enumerate_trees(k) for k in range(2000)]
    for t in trees:
        check_tree(t)
    assert len({print_proof(t) for t in trees}) == 2000
    head = brute_force_trees(6)
    assert len(head) >= 2000
    assert trees == head[:2000]
    assert [enumerate_trees(k) for k in range(len(head))] == head
    assert time.perf_counter() - start < LIMIT_ENUMERATION


def test_criterion_4_codec_roundtrips():
    rng = random.Random(4)
    for _ in range(10_000):
        t = random_map(rng, rng.randint(0, 6))
        assert decode_term(encode_term(t)) == t
    valid = [c for c in range(10_000) if is_code(c)]
    assert len(valid) == 4661
    for c in valid:
        assert encode_term(decode_term(c)) == c


def _objects_to_depth_4(rng):
    objs = [a for s in range(1, 8) for a in all_objects(s) if obj_depth(a) <= 2]
    while len(objs) < 100:
        a = random_obj(rng, 4)
        if obj_depth(a) >= 3:
            objs.append(a)
    return objs


def test_criterion_5_cantor_laws():
    rng = random.Random(5)
    for a in _objects_to_depth_4(rng):
        for _ in range(500):
            v = random_value(rng, a, 10_000)
            assert ct(a, idx(a, v)) == v
    walk = diagonal_pairs()
    for n in range(10_000):
        assert cantor_unpair(n) == next(walk)
    for _ in range(10_000):
        x, y = rng.randint(0, 10**4), rng.randint(0, 10**4)
        assert cantor_unpair(cantor_pair(x, y)) == (x, y)
        n = rng.randint(0, 10**6)
        assert cantor_pair(*cantor_unpair(n)) == n


def _corpus():
    """(name, predicate, largest fuel tried)."""
    out = [(e.name, e.term, MAX_FUEL) for e in stdlib_catalog() if e.predicate]
    out += [
        ("true_1", true_map(ONE), MAX_FUEL),
        ("sign_succ", Compose(SIGN, SUCC), MAX_FUEL),
        # evaluating these at the k-th point costs about k^2 steps
        ("x_eq_x", Compose(EQ_NAT, Pair(Id(NAT), Id(NAT))), 120),
        ("x_leq_succ_x", Compose(LEQ, Pair(Id(NAT), SUCC)), 120),
    ]
    return out


def test_criterion_6_decision_corpus():
    start = time.perf_counter()
    false_n = Predicate.from_term(false_map(NAT))
    v = nabla(false_n, 1)
    assert isinstance(v, Counterexample) and v.k == 0 and verdict_audit(false_n, v)

    for a, k_star in REFL_INDEX.items():
        chi = Predicate.from_term(true_map(a))
        refl = DeductionTree(Rule.REFL, (true_map(a),))
        assert enumerate_trees(k_star) == refl
        v = nabla(chi, k_star + 1)
        assert v == Proved(k_star, refl)
        assert verdict_audit(chi, v, samples=50)

    undecided = Predicate.from_term(Compose(SIGN, SUCC))
    assert nabla(undecided, MAX_FUEL) == Exhausted(MAX_FUEL)

    table = []
    for name, term, cap in _corpus():
        chi = Predicate.from_term(term)
        fuels = [f for f in FUEL_GRID if f <= cap]
        verdicts = [nabla(chi, f) for f in fuels]
        first_decided = None
        for f, v in zip(fuels, verdicts):
            assert verdict_audit(chi, v), (name, f, v)
            if isinstance(v, Exhausted):
                assert first_decided is None, (name, f)
                assert v.fuel == f
                continue
            if first_decided is None:
                first_decided = v
                # minimality
                assert not any(in_decision_domain(chi, j) for j in range(v.k)), name
                if isinstance(v, Proved):
                    assert all(chi(ct(chi.domain, i)) == 1 for i in range(200))
            # monotonicity in fuel
            assert v == first_decided, (name, f)
        table.append(f"{name}: {verdicts[-1]}")
    print("\n".join(table))
    assert time.perf_counter() - start < LIMIT_DECISION


def test_criterion_7_primrec_contract():
    rng = random.Random(7)
    add, mult, monus = (encode_term(t) for t in (ADD, MULT, MONUS))
    for _ in range(500):
        x, y = rng.randint(0, 64), rng.randint(0, 64)
        for code, term, want in ((add, ADD, x + y), (mult, MULT, x * y), (monus, MONUS, max(x - y, 0))):
            assert eval_map(term, (x, y)) == want
            assert ev(code, (x, y)) == want
        # defining equations: f(x, 0) = g(x), f(x, y+1) = h((x, y), f(x, y))
        assert eval_map(ADD, (x, 0)) == x
        assert eval_map(ADD, (x, y + 1)) == eval_map(ADD, (x, y)) + 1
        assert eval_map(MULT, (x, 0)) == 0
        assert eval_map(MULT, (x, y + 1)) == eval_map(ADD, (eval_map(MULT, (x, y)), x))
        assert eval_map(MONUS, (x, 0)) == x
        assert eval_map(MONUS, (x, y + 1)) == eval_map(PRED, eval_map(MONUS, (x, y)))


CLI_RUNS = [
    ["eval", "iter(s)", "(3,2)"],
    ["encode", "<id[N]; (0 . pi[N])>"],
    ["decode", "17"],
    ["enumerate", "--count", "40", "--verify"],
    ["decide", "(0 . pi[N])", "--fuel", "1"],
    ["decide", "((s . 0) . pi[N])", "--fuel", "300"],
    ["ct", "((N * 1) * N)", "1234"],
    ["decode", "9"],
]


def test_criterion_8_surface_and_cli():
    rng = random.Random(8)
    for _ in range(1000):
        t = random_map(rng, rng.randint(0, 6))
        assert parse_term(print_term(t)) == t
    for rule in Rule:
        for _ in range(20):
            p = random_instance(rng, rule)
            assert parse_proof(print_proof(p)) == p
    for k in range(2000):
        p = enumerate_trees(k)
        assert parse_proof(print_proof(p)) == p
    alphabet = "0s1N()<>[];.,*#@ idpiterlr"
    for _ in range(2000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 20)))
        try:
            parse_term(text)
        except ParseError as e:
            assert 0 <= e.span.start <= e.span.end <= len(text)
    for argv in CLI_RUNS:
        cmd = [sys.executable, "-m", "prmaps", *argv]
        a = subprocess.run(cmd, capture_output=True)
        b = subprocess.run(cmd, capture_output=True)
        assert (a.returncode, a.stdout, a.stderr) == (b.returncode, b.stdout, b.stderr)
