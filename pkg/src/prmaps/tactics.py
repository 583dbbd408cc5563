"""Helpers for building deduction trees by hand.

Each helper returns a :class:`~prmaps.proofs.DeductionTree`; chaining with
:func:`trans` checks that consecutive roots meet.  The derived lemmas at the
bottom produce the two premises of Freyd's uniqueness rule for the
initialised iterate ``v$ . (u # id_N)``.
"""

from __future__ import annotations

from .kernel import NAT, SUCC, ZERO, Compose, Id, Iter, MapTerm, Pair, ProjL, ProjR, Terminal, infer_type, product_map
from .proofs import DeductionTree, ProofError, Rule, anchor_map, root_terms, step_map

T = DeductionTree


def root(p: DeductionTree) -> tuple[MapTerm, MapTerm]:
    return root_terms(p)


def refl(u):
    return T(Rule.REFL, (u,))


def symm(p):
    return T(Rule.SYMM, premises=(p,))


def trans(*ps: DeductionTree) -> DeductionTree:
    """Left-nested chain ``p1 ; p2 ; ...``; a single proof is returned as is."""
    if not ps:
        raise ValueError("trans needs at least one proof")
    acc = ps[0]
    for p in ps[1:]:
        if root(acc)[1] != root(p)[0]:
            raise ProofError(f"chain breaks: {root(acc)[1]} vs {root(p)[0]}", p)
        acc = T(Rule.TRANS, premises=(acc, p))
    return acc


def assoc(w, v, u):
    return T(Rule.ASSOC_COMP, (w, v, u))


def id_left(u):
    return T(Rule.ID_LEFT, (u,))


def id_right(u):
    return T(Rule.ID_RIGHT, (u,))


def pi_subst(u):
    return T(Rule.CONST_SUBST, ("pi", u))


def pi_one():
    return T(Rule.CONST_SUBST, ("pi-one",))


def godement_l(u, v):
    return T(Rule.GODEMENT_L, (u, v))


def godement_r(u, v):
    return T(Rule.GODEMENT_R, (u, v))


def surj(w):
    return T(Rule.SURJ_PAIRING, (w,))


def distrib(u, v, w):
    return T(Rule.DISTRIB_PAIR, (u, v, w))


def iter_anchor(u):
    return T(Rule.ITER_ANCHOR, (u,))


def iter_step(u):
    return T(Rule.ITER_STEP, (u,))


def cong_left(v, p):
    """``v . a = v . b`` from ``p: a = b``."""
    return T(Rule.COMPAT_COMP_L, (v,), (p,))


def cong_right(p, u):
    """``a . u = b . u`` from ``p: a = b``."""
    return T(Rule.COMPAT_COMP_R, (u,), (p,))


def cong_pair_l(p, v):
    return T(Rule.COMPAT_PAIR_L, (v,), (p,))


def cong_pair_r(u, p):
    return T(Rule.COMPAT_PAIR_R, (u,), (p,))


def cong_iter(p):
    return T(Rule.COMPAT_ITER, premises=(p,))


def freyd(p1, p2):
    """Apply Freyd's uniqueness rule, reading ``u``, ``v``, ``w`` off the premises."""
    (w_anc, u), (_, v_w) = root(p1), root(p2)
    if not (isinstance(w_anc, Compose) and isinstance(v_w, Compose)):
        raise ProofError("premises do not have the shape of freyd-uniq", None)
    return T(Rule.FREYD_UNIQ, (u, v_w.g, w_anc.g), (p1, p2))


def pair_cong(p, q):
    """``<a; b> = <a'; b'>`` from ``p: a = a'`` and ``q: b = b'``."""
    a2 = root(p)[1]
    b = root(q)[0]
    return trans(cong_pair_l(p, b), cong_pair_r(a2, q))


# ---------------------------------------------------------------------------
# lemmas about u # id_N


def anchor_naturality(u: MapTerm) -> DeductionTree:
    """``(u # id_N) . <id_A; 0 . Pi_A> = <id_B; 0 . Pi_B> . u``."""
    a, b = infer_type(u)
    l, r = ProjL(a, NAT), ProjR(a, NAT)
    anc_a, anc_b = anchor_map(a), anchor_map(b)
    zero_a = Compose(ZERO, Terminal(a))
    # (u . l) . anc = u
    left = trans(
        assoc(u, l, anc_a),
        cong_left(u, godement_l(Id(a), zero_a)),
        id_right(u),
    )
    # (id . r) . anc = 0 . Pi_A
    right = trans(
        assoc(Id(NAT), r, anc_a),
        id_left(Compose(r, anc_a)),
        godement_r(Id(a), zero_a),
    )
    lhs_side = trans(
        distrib(Compose(u, l), Compose(Id(NAT), r), anc_a),
        pair_cong(left, right),
    )
    # anc_B . u = <u; 0 . Pi_A>
    rhs_side = trans(
        distrib(Id(b), Compose(ZERO, Terminal(b)), u),
        pair_cong(
            id_left(u),
            trans(assoc(ZERO, Terminal(b), u), cong_left(ZERO, pi_subst(u))),
        ),
    )
    return trans(lhs_side, symm(rhs_side))


def step_interchange(u: MapTerm) -> DeductionTree:
    """``(u # id_N) . (id_A # s) = (id_B # s) . (u # id_N)``."""
    a, b = infer_type(u)
    la, ra = ProjL(a, NAT), ProjR(a, NAT)
    lb, rb = ProjL(b, NAT), ProjR(b, NAT)
    p = product_map(u, Id(NAT))
    q = step_map(a)
    q2 = step_map(b)
    id_l, s_r = Compose(Id(a), la), Compose(SUCC, ra)
    # p . q = <u . l; s . r>
    pq = trans(
        distrib(Compose(u, la), Compose(Id(NAT), ra), q),
        pair_cong(
            trans(
                assoc(u, la, q),
                cong_left(u, godement_l(id_l, s_r)),
                cong_left(u, id_left(la)),
            ),
            trans(
                assoc(Id(NAT), ra, q),
                id_left(Compose(ra, q)),
                godement_r(id_l, s_r),
            ),
        ),
    )
    u_l, id_r = Compose(u, la), Compose(Id(NAT), ra)
    # q2 . p = <u . l; s . r>
    q2p = trans(
        distrib(Compose(Id(b), lb), Compose(SUCC, rb), p),
        pair_cong(
            trans(
                assoc(Id(b), lb, p),
                id_left(Compose(lb, p)),
                godement_l(u_l, id_r),
            ),
            trans(
                assoc(SUCC, rb, p),
                cong_left(SUCC, godement_r(u_l, id_r)),
                cong_left(SUCC, id_left(ra)),
            ),
        ),
    )
    return trans(pq, symm(q2p))


def initialised_iterate(u: MapTerm, v: MapTerm) -> MapTerm:
    """``v$ . (u # id_N) : A x N -> B``."""
    return Compose(Iter(v), product_map(u, Id(NAT)))


def iterate_equations(u: MapTerm, v: MapTerm) -> tuple[DeductionTree, DeductionTree]:
    """Proofs of ``w . <id; 0 . Pi> = u`` and ``w . (id # s) = v . w``.

    Here ``w`` is :func:`initialised_iterate` of ``u`` and ``v``.
    """
    a, b = infer_type(u)
    p = product_map(u, Id(NAT))
    it = Iter(v)
    anc_a, anc_b = anchor_map(a), anchor_map(b)
    anchor_eq = trans(
        assoc(it, p, anc_a),
        cong_left(it, anchor_naturality(u)),
        symm(assoc(it, anc_b, u)),
        cong_right(iter_anchor(v), u),
        id_left(u),
    )
    step_eq = trans(
        assoc(it, p, step_map(a)),
        cong_left(it, step_interchange(u)),
        symm(assoc(it, step_map(b), p)),
        cong_right(iter_step(v), p),
        assoc(v, it, p),
    )
    return anchor_eq, step_eq


def freyd_for(w_eq: DeductionTree | None, u: MapTerm, v: MapTerm) -> DeductionTree:
    """Freyd's rule for a map provably equal to the initialised iterate.

    ``w_eq`` proves ``w = v$ . (u # id_N)``; ``None`` takes ``w`` to be the
    initialised iterate itself.
    """
    p1, p2 = iterate_equations(u, v)
    if w_eq is None:
        return freyd(p1, p2)
    w, w0 = root(w_eq)
    a, _ = infer_type(u)
    p1w = trans(cong_right(w_eq, anchor_map(a)), p1)
    p2w = trans(
        cong_right(w_eq, step_map(a)),
        p2,
        cong_left(v, symm(w_eq)),
    )
    return freyd(p1w, p2w)
