"""Random objects, well-typed terms, values and deduction trees.

All generators take a :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random

from . import tactics as tc
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
    One,
    Pair,
    Prod,
    ProjL,
    ProjR,
    STAR,
    Terminal,
    Value,
    infer_type,
    obj_depth,
)
from .proofs import DeductionTree, Rule, anchor_map, root_terms, step_map


def random_obj(rng: random.Random, depth: int = 2) -> Obj:
    if depth <= 0 or rng.random() < 0.45:
        return NAT if rng.random() < 0.75 else ONE
    return Prod(random_obj(rng, depth - 1), random_obj(rng, depth - 1))


def random_value(rng: random.Random, a: Obj, max_nat: int = 16) -> Value:
    if isinstance(a, One):
        return STAR
    if isinstance(a, Prod):
        return (random_value(rng, a.left, max_nat), random_value(rng, a.right, max_nat))
    return rng.randint(0, max_nat)


def _fallback(a: Obj, b: Obj) -> MapTerm:
    """A small map ``a -> b`` built without composition depth limits."""
    if a == b:
        return Id(a)
    if isinstance(b, One):
        return Terminal(a)
    if isinstance(b, Prod):
        return Pair(_fallback(a, b.left), _fallback(a, b.right))
    if isinstance(a, Prod):
        if a.left == b:
            return ProjL(a.left, a.right)
        if a.right == b:
            return ProjR(a.left, a.right)
    if isinstance(a, One):
        return ZERO
    return Compose(ZERO, Terminal(a))


def random_term(rng: random.Random, a: Obj, b: Obj, depth: int) -> MapTerm:
    """A random well-typed map ``a -> b`` of nesting depth about ``depth``."""
    atoms = []
    if a == b:
        atoms.append(Id(a))
    if isinstance(b, One):
        atoms.append(Terminal(a))
    if isinstance(a, One) and b == NAT:
        atoms.append(ZERO)
    if a == NAT and b == NAT:
        atoms.append(SUCC)
    if isinstance(a, Prod):
        if a.left == b:
            atoms.append(ProjL(a.left, a.right))
        if a.right == b:
            atoms.append(ProjR(a.left, a.right))
    if depth <= 0:
        return rng.choice(atoms) if atoms else _fallback(a, b)
    kinds = ["compose", "compose"]
    if atoms:
        kinds.append("atom")
    if isinstance(b, Prod):
        kinds += ["pair", "pair"]
    if isinstance(a, Prod) and a.right == NAT and a.left == b:
        kinds += ["iter", "iter"]
    kind = rng.choice(kinds)
    if kind == "atom":
        return rng.choice(atoms)
    if kind == "pair":
        return Pair(
            random_term(rng, a, b.left, depth - 1),
            random_term(rng, a, b.right, depth - 1),
        )
    if kind == "iter":
        return Iter(random_term(rng, b, b, depth - 1))
    mid = random_obj(rng, max(1, min(2, obj_depth(a) + 1)))
    return Compose(
        random_term(rng, mid, b, depth - 1),
        random_term(rng, a, mid, depth - 1),
    )


def random_map(rng: random.Random, depth: int) -> MapTerm:
    """A random well-typed term with randomly chosen signature."""
    return random_term(rng, random_obj(rng), random_obj(rng), depth)


# ---------------------------------------------------------------------------
# deduction trees


def _rewrites(t: MapTerm):
    """Axiom instances (possibly reversed) whose root has left side ``t``."""
    out = [tc.refl(t), tc.symm(tc.id_left(t)), tc.symm(tc.id_right(t))]
    dom, cod = infer_type(t)
    if isinstance(cod, Prod):
        out.append(tc.symm(tc.surj(t)))
    if t == Terminal(ONE):
        out.append(tc.pi_one())
    if t == Id(ONE):
        out.append(tc.symm(tc.pi_one()))
    if isinstance(t, Compose):
        g, f = t.g, t.f
        if isinstance(g, Compose):
            out.append(tc.assoc(g.g, g.f, f))
        if isinstance(f, Compose):
            out.append(tc.symm(tc.assoc(g, f.g, f.f)))
        if isinstance(g, Id):
            out.append(tc.id_left(f))
        if isinstance(f, Id):
            out.append(tc.id_right(g))
        if isinstance(g, Terminal):
            out.append(tc.pi_subst(f))
        if isinstance(f, Pair):
            if isinstance(g, ProjL):
                out.append(tc.godement_l(f.f, f.g))
            if isinstance(g, ProjR):
                out.append(tc.godement_r(f.f, f.g))
        if isinstance(g, Pair):
            out.append(tc.distrib(g.f, g.g, f))
        if isinstance(g, Iter):
            a = infer_type(g.f)[0]
            if f == anchor_map(a):
                out.append(tc.iter_anchor(g.f))
            if f == step_map(a):
                out.append(tc.iter_step(g.f))
        if isinstance(f, Iter) and g == f.f:
            out.append(tc.symm(tc.iter_step(g)))
    if isinstance(t, Pair):
        f, g = t.f, t.g
        if (
            isinstance(f, Compose)
            and isinstance(g, Compose)
            and isinstance(f.g, ProjL)
            and isinstance(g.g, ProjR)
            and f.f == g.f
        ):
            out.append(tc.surj(f.f))
        if isinstance(f, Compose) and isinstance(g, Compose) and f.f == g.f:
            out.append(tc.symm(tc.distrib(f.g, g.g, f.f)))
    return out


def random_step(rng: random.Random, t: MapTerm, depth: int = 1) -> DeductionTree:
    """A random valid tree whose root has left side ``t``.

    Rewrites at the top or, via congruence, inside a subterm.
    """
    choices = _rewrites(t)
    if depth > 0:
        if isinstance(t, Compose):
            choices.append(tc.cong_left(t.g, random_step(rng, t.f, depth - 1)))
            choices.append(tc.cong_right(random_step(rng, t.g, depth - 1), t.f))
        if isinstance(t, Pair):
            choices.append(tc.cong_pair_l(random_step(rng, t.f, depth - 1), t.g))
            choices.append(tc.cong_pair_r(t.f, random_step(rng, t.g, depth - 1)))
        if isinstance(t, Iter):
            choices.append(tc.cong_iter(random_step(rng, t.f, depth - 1)))
    # prefer a genuine rewrite over refl and the id/surj expansions
    real = choices[3:]
    if real and rng.random() < 0.8:
        return rng.choice(real)
    return rng.choice(choices)


def random_chain(rng: random.Random, t: MapTerm, steps: int = 2, depth: int = 1) -> DeductionTree:
    proof = random_step(rng, t, depth)
    for _ in range(steps - 1):
        proof = tc.trans(proof, random_step(rng, root_terms(proof)[1], depth))
    return proof


def _axiom_instance(rng, rule: Rule, depth: int) -> DeductionTree:
    R = Rule
    if rule is R.REFL:
        return tc.refl(random_map(rng, depth))
    if rule is R.ID_LEFT:
        return tc.id_left(random_map(rng, depth))
    if rule is R.ID_RIGHT:
        return tc.id_right(random_map(rng, depth))
    if rule is R.ASSOC_COMP:
        a, b, c, d = (random_obj(rng) for _ in range(4))
        return tc.assoc(
            random_term(rng, c, d, depth),
            random_term(rng, b, c, depth),
            random_term(rng, a, b, depth),
        )
    if rule is R.CONST_SUBST:
        if rng.random() < 0.1:
            return tc.pi_one()
        return tc.pi_subst(random_map(rng, depth))
    if rule in (R.GODEMENT_L, R.GODEMENT_R):
        a = random_obj(rng)
        u = random_term(rng, a, random_obj(rng), depth)
        v = random_term(rng, a, random_obj(rng), depth)
        return (tc.godement_l if rule is R.GODEMENT_L else tc.godement_r)(u, v)
    if rule is R.SURJ_PAIRING:
        cod = Prod(random_obj(rng, 1), random_obj(rng, 1))
        return tc.surj(random_term(rng, random_obj(rng), cod, depth))
    if rule is R.DISTRIB_PAIR:
        x, a = random_obj(rng), random_obj(rng)
        return tc.distrib(
            random_term(rng, a, random_obj(rng), depth),
            random_term(rng, a, random_obj(rng), depth),
            random_term(rng, x, a, depth),
        )
    if rule in (R.ITER_ANCHOR, R.ITER_STEP):
        a = random_obj(rng)
        u = random_term(rng, a, a, depth)
        return (tc.iter_anchor if rule is R.ITER_ANCHOR else tc.iter_step)(u)
    raise ValueError(f"{rule} is not an axiom")


_AXIOMS = [
    Rule.REFL, Rule.ASSOC_COMP, Rule.ID_LEFT, Rule.ID_RIGHT, Rule.CONST_SUBST,
    Rule.GODEMENT_L, Rule.GODEMENT_R, Rule.SURJ_PAIRING, Rule.DISTRIB_PAIR,
    Rule.ITER_ANCHOR, Rule.ITER_STEP,
]


def random_instance(rng: random.Random, rule: Rule, depth: int = 2) -> DeductionTree:
    """A random valid tree whose bottom rule is ``rule``."""
    R = Rule
    if rule in _AXIOMS:
        return _axiom_instance(rng, rule, depth)
    if rule is R.SYMM:
        return tc.symm(_axiom_instance(rng, rng.choice(_AXIOMS), depth))
    if rule is R.TRANS:
        p = random_step(rng, random_map(rng, depth))
        q = random_step(rng, root_terms(p)[1])
        return tc.trans(p, q)
    if rule is R.COMPAT_COMP_L:
        p = random_chain(rng, random_map(rng, depth))
        _, b = infer_type(root_terms(p)[0])
        return tc.cong_left(random_term(rng, b, random_obj(rng), depth), p)
    if rule is R.COMPAT_COMP_R:
        p = random_chain(rng, random_map(rng, depth))
        a, _ = infer_type(root_terms(p)[0])
        return tc.cong_right(p, random_term(rng, random_obj(rng), a, depth))
    if rule is R.COMPAT_PAIR_L:
        p = random_chain(rng, random_map(rng, depth))
        a, _ = infer_type(root_terms(p)[0])
        return tc.cong_pair_l(p, random_term(rng, a, random_obj(rng), depth))
    if rule is R.COMPAT_PAIR_R:
        p = random_chain(rng, random_map(rng, depth))
        a, _ = infer_type(root_terms(p)[0])
        return tc.cong_pair_r(random_term(rng, a, random_obj(rng), depth), p)
    if rule is R.COMPAT_ITER:
        a = random_obj(rng)
        return tc.cong_iter(random_chain(rng, random_term(rng, a, a, depth)))
    if rule is R.FREYD_UNIQ:
        a, b = random_obj(rng, 1), random_obj(rng, 1)
        u = random_term(rng, a, b, depth)
        v = random_term(rng, b, b, depth)
        w_eq = None
        if rng.random() < 0.5:
            w0 = tc.initialised_iterate(u, v)
            w_eq = random_chain(rng, w0, steps=1)
            # random_chain rewrites w0 -> w; Freyd needs w = w0
            w_eq = tc.symm(w_eq)
        return tc.freyd_for(w_eq, u, v)
    raise ValueError(f"unknown rule {rule!r}")
