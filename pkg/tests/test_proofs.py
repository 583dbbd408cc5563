import random
import threading

import pytest

from oracles import brute_force_trees
from prmaps import proofs
from prmaps import tactics as tc
from prmaps.codec import encode_term
from prmaps.kernel import (
    NAT, ONE, SUCC, ZERO, Compose, Id, MapTypeError, Pair, Prod, ProjL,
    ProjR, Terminal, infer_type,
)
from prmaps.proofs import (
    DeductionTree, Equation, ProofError, Rule, TreeEnumerator, check_tree,
    enumerate_trees, find_proof, pro_pr, soundness_check, tree_key, tree_size,
)
from prmaps.sampling import random_instance
from prmaps.stdlib import const_map, false_map, true_map

T = DeductionTree
NN = Prod(NAT, NAT)


@pytest.fixture(scope="module")
def brute_head():
    return brute_force_trees(6)


def test_godement_with_identities():
    eq = check_tree(tc.godement_l(Id(NAT), Id(NAT)))
    assert eq.terms == (Compose(ProjL(NAT, NAT), Pair(Id(NAT), Id(NAT))), Id(NAT))
    assert (eq.dom, eq.cod) == (NAT, NAT)


def test_trans_of_refls():
    p = tc.trans(tc.refl(SUCC), tc.refl(SUCC))
    assert check_tree(p) == Equation.from_terms(SUCC, SUCC)


def test_freyd_for_add_step():
    u, v = Id(NAT), SUCC
    tree = tc.freyd_for(None, u, v)
    eq = check_tree(tree)
    assert eq.terms[0] == tc.initialised_iterate(u, v)
    assert soundness_check(tree, 30)


@pytest.mark.parametrize(
    "tree",
    [
        T(Rule.REFL, ()),
        T(Rule.REFL, (Compose(SUCC, ProjL(NAT, NAT)), SUCC)),
        T(Rule.TRANS, premises=(tc.refl(SUCC), tc.refl(Id(NAT)))),
        T(Rule.GODEMENT_L, (SUCC, ZERO)),
        T(Rule.CONST_SUBST, ("nope", SUCC)),
        T(Rule.ITER_STEP, (ZERO,)),
        T(Rule.REFL, (Compose(SUCC, Id(ONE)),)),
        T(Rule.COMPAT_COMP_L, (ZERO,), (tc.refl(SUCC),)),
        T(Rule.FREYD_UNIQ, (SUCC, SUCC, SUCC), (tc.refl(SUCC), tc.refl(SUCC))),
        T(Rule.SYMM, ("not a term",), ()),
    ],
)
def test_invalid_trees(tree):
    with pytest.raises(ProofError) as info:
        check_tree(tree)
    assert info.value.node is not None


def test_freyd_rejects_forged_params():
    good = tc.freyd_for(None, Id(NAT), SUCC)
    forged = T(Rule.FREYD_UNIQ, (Id(NAT), Id(NAT), good.params[2]), good.premises)
    with pytest.raises(ProofError):
        check_tree(forged)


def test_equation_checks_homset():
    with pytest.raises(MapTypeError):
        Equation(encode_term(SUCC), encode_term(ZERO), NAT, NAT)
    with pytest.raises(MapTypeError):
        Equation(9, 9, NAT, NAT)


def test_first_tree():
    assert enumerate_trees(0) == T(Rule.REFL, (ZERO,))
    with pytest.raises(ValueError):
        enumerate_trees(-1)


def test_enumeration_matches_brute_force(brute_head):
    assert len(brute_head) == 2993
    for k, t in enumerate(brute_head):
        assert enumerate_trees(k) == t, k


def test_enumeration_is_sorted_and_checked():
    trees = [enumerate_trees(k) for k in range(3000)]
    keys = [(tree_size(t), tree_key(t)) for t in trees]
    assert keys == sorted(keys)
    assert len(set(trees)) == len(trees)
    for t in trees[::7]:
        check_tree(t)


def test_fresh_enumerators_are_deterministic_across_threads():
    shared = TreeEnumerator()
    results = {}

    def work(i):
        ks = list(range(i, 1500, 4))
        results[i] = [shared.node(k).tree for k in reversed(ks)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for i, got in results.items():
        ks = list(range(i, 1500, 4))
        assert got == [enumerate_trees(k) for k in reversed(ks)]


def test_pro_pr():
    chi = encode_term(const_map(NAT, 1))
    hits = [k for k in range(300) if pro_pr(k, chi)]
    assert hits
    k = hits[0]
    lhs, rhs = check_tree(enumerate_trees(k)).terms
    assert (lhs, rhs) == (const_map(NAT, 1), true_map(NAT))
    assert not pro_pr(0, encode_term(false_map(NAT)))
    with pytest.raises(MapTypeError):
        pro_pr(0, encode_term(Id(NN)))


def test_find_proof():
    goal = Equation.from_terms(ZERO, ZERO)
    assert find_proof(goal, 0) is None
    assert find_proof(goal, 1) == (0, enumerate_trees(0))
    goal = Equation.from_terms(Compose(Id(NAT), SUCC), SUCC)
    k, tree = find_proof(goal, 500)
    assert check_tree(tree) == goal
    assert all(check_tree(enumerate_trees(j)) != goal for j in range(k))
    with pytest.raises(TypeError):
        find_proof((SUCC, SUCC), 10)


@pytest.mark.parametrize("rule", list(Rule), ids=lambda r: r.value)
def test_random_instances_are_valid_and_sound(rule):
    rng = random.Random(rule.value)
    for _ in range(15):
        tree = random_instance(rng, rule)
        assert tree.rule is rule
        assert soundness_check(tree, 10, limit=64, fuel=200_000)


def test_soundness_check_catches_a_faulty_rule(monkeypatch):
    real = proofs._axiom_root

    def faulty(node):
        if node.rule is Rule.GODEMENT_L:
            u, v = node.params
            _, b = infer_type(u)
            _, c = infer_type(v)
            return Compose(ProjR(b, c), Pair(u, v)), u
        return real(node)

    monkeypatch.setattr(proofs, "_axiom_root", faulty)
    bad = tc.godement_l(SUCC, Id(NAT))
    assert check_tree(bad)
    assert not soundness_check(bad, 5)
    # a faulty rule that happens to agree on these arguments goes unnoticed
    assert soundness_check(tc.godement_l(SUCC, SUCC), 5)


def test_size_counts():
    en = proofs.enumerator()
    assert [en.count_up_to(s) for s in range(1, 7)] == [0, 9, 50, 218, 817, 2993]
    assert tree_size(T(Rule.CONST_SUBST, ("pi-one",))) == 2
    assert tree_size(tc.refl(Terminal(NAT))) == 3
    assert isinstance(enumerate_trees(5).premises, tuple)
