"""Internal equational theory: equations, deduction trees and their enumeration.

A :class:`DeductionTree` is a rule node with parameters (map terms, stored
as terms and printed as codes) and premise trees.  :func:`check_tree`
validates a tree and returns the equation at its root.  Trees are counted
by :func:`enumerate_trees` in order of size, ties broken by
:func:`tree_key`.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .cantor import ct
from .codec import DecodeError, Code, code_signature, decode_term, encode_term
from .evaluator import ev
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
    Obj,
    Pair,
    Prod,
    ProjL,
    ProjR,
    Terminal,
    infer_type,
    obj_size,
    product_map,
    term_size,
)
from .stdlib import true_map


class ProofError(Exception):
    """A deduction tree fails a side condition."""

    def __init__(self, message: str, node: "DeductionTree | None" = None):
        super().__init__(message)
        self.node = node


class Rule(Enum):
    REFL = "refl"
    ASSOC_COMP = "assoc-comp"
    ID_LEFT = "id-left"
    ID_RIGHT = "id-right"
    CONST_SUBST = "const-subst"
    GODEMENT_L = "godement-l"
    GODEMENT_R = "godement-r"
    SURJ_PAIRING = "surj-pairing"
    DISTRIB_PAIR = "distrib-pair"
    ITER_ANCHOR = "iter-anchor"
    ITER_STEP = "iter-step"
    SYMM = "symm"
    TRANS = "trans"
    COMPAT_COMP_L = "compat-comp-l"
    COMPAT_COMP_R = "compat-comp-r"
    COMPAT_PAIR_L = "compat-pair-l"
    COMPAT_PAIR_R = "compat-pair-r"
    COMPAT_ITER = "compat-iter"
    FREYD_UNIQ = "freyd-uniq"


RULE_ORDER = {r: i for i, r in enumerate(Rule)}

# parameter and premise counts; const-subst params depend on its kind
N_PARAMS = {
    Rule.REFL: 1,
    Rule.ASSOC_COMP: 3,
    Rule.ID_LEFT: 1,
    Rule.ID_RIGHT: 1,
    Rule.GODEMENT_L: 2,
    Rule.GODEMENT_R: 2,
    Rule.SURJ_PAIRING: 1,
    Rule.DISTRIB_PAIR: 3,
    Rule.ITER_ANCHOR: 1,
    Rule.ITER_STEP: 1,
    Rule.SYMM: 0,
    Rule.TRANS: 0,
    Rule.COMPAT_COMP_L: 1,
    Rule.COMPAT_COMP_R: 1,
    Rule.COMPAT_PAIR_L: 1,
    Rule.COMPAT_PAIR_R: 1,
    Rule.COMPAT_ITER: 0,
    Rule.FREYD_UNIQ: 3,
}
N_PREMISES = {r: 0 for r in Rule}
N_PREMISES.update(
    {
        Rule.SYMM: 1,
        Rule.TRANS: 2,
        Rule.COMPAT_COMP_L: 1,
        Rule.COMPAT_COMP_R: 1,
        Rule.COMPAT_PAIR_L: 1,
        Rule.COMPAT_PAIR_R: 1,
        Rule.COMPAT_ITER: 1,
        Rule.FREYD_UNIQ: 2,
    }
)

# const-subst kinds: "pi" (u)  Pi_B . u = Pi_A;  "pi-one" ()  Pi_1 = id_1
CONST_KINDS = {"pi": 1, "pi-one": 0}
KIND_ORDER = {k: i for i, k in enumerate(CONST_KINDS)}


@dataclass(frozen=True)
class DeductionTree:
    rule: Rule
    params: tuple = ()
    premises: tuple = ()

    def __str__(self):
        from .surface import print_proof

        return print_proof(self)


@dataclass(frozen=True)
class Equation:
    """``lhs = rhs`` between two codes of the same hom-set ``[dom, cod]``."""

    lhs: Code
    rhs: Code
    dom: Obj
    cod: Obj

    def __post_init__(self):
        for side in (self.lhs, self.rhs):
            try:
                sig = code_signature(side)
            except DecodeError as e:
                raise MapTypeError(str(e), side) from None
            if sig != (self.dom, self.cod):
                raise MapTypeError(
                    f"code {side} is not in [{self.dom}, {self.cod}]", side
                )

    @classmethod
    def from_terms(cls, lhs: MapTerm, rhs: MapTerm) -> "Equation":
        dom, cod = infer_type(lhs)
        return cls(encode_term(lhs), encode_term(rhs), dom, cod)

    @property
    def terms(self) -> tuple[MapTerm, MapTerm]:
        return decode_term(self.lhs), decode_term(self.rhs)

    def __str__(self):
        from .surface import print_term

        lhs, rhs = self.terms
        return f"{print_term(lhs)} = {print_term(rhs)} : {self.dom} -> {self.cod}"


# ---------------------------------------------------------------------------
# root equations of the rules


def anchor_map(a: Obj) -> MapTerm:
    """``<id_A; 0 . Pi_A> : A -> A x N``, the start of an iteration."""
    return Pair(Id(a), Compose(ZERO, Terminal(a)))


def step_map(a: Obj) -> MapTerm:
    """``id_A # s : A x N -> A x N``."""
    return product_map(Id(a), SUCC)


def _typed(t: MapTerm, node):
    try:
        return infer_type(t)
    except MapTypeError as e:
        raise ProofError(f"{node.rule.value}: {e}", node) from None


def _endo(u: MapTerm, node) -> Obj:
    a, b = _typed(u, node)
    if a != b:
        raise ProofError(f"{node.rule.value}: {u} is not an endomap", node)
    return a


def _axiom_root(node: DeductionTree) -> tuple[MapTerm, MapTerm]:
    r, p = node.rule, node.params
    if r is Rule.REFL:
        (u,) = p
        _typed(u, node)
        return u, u
    if r is Rule.ASSOC_COMP:
        w, v, u = p
        return Compose(Compose(w, v), u), Compose(w, Compose(v, u))
    if r is Rule.ID_LEFT:
        (u,) = p
        _, b = _typed(u, node)
        return Compose(Id(b), u), u
    if r is Rule.ID_RIGHT:
        (u,) = p
        a, _ = _typed(u, node)
        return Compose(u, Id(a)), u
    if r is Rule.CONST_SUBST:
        kind = p[0]
        if kind == "pi":
            u = p[1]
            a, b = _typed(u, node)
            return Compose(Terminal(b), u), Terminal(a)
        return Terminal(ONE), Id(ONE)
    if r is Rule.GODEMENT_L or r is Rule.GODEMENT_R:
        u, v = p
        _, b = _typed(u, node)
        _, c = _typed(v, node)
        if r is Rule.GODEMENT_L:
            return Compose(ProjL(b, c), Pair(u, v)), u
        return Compose(ProjR(b, c), Pair(u, v)), v
    if r is Rule.SURJ_PAIRING:
        (w,) = p
        _, bc = _typed(w, node)
        if not isinstance(bc, Prod):
            raise ProofError(f"surj-pairing: {w} does not map into a product", node)
        b, c = bc.left, bc.right
        return Pair(Compose(ProjL(b, c), w), Compose(ProjR(b, c), w)), w
    if r is Rule.DISTRIB_PAIR:
        u, v, w = p
        return Compose(Pair(u, v), w), Pair(Compose(u, w), Compose(v, w))
    if r is Rule.ITER_ANCHOR:
        (u,) = p
        a = _endo(u, node)
        return Compose(Iter(u), anchor_map(a)), Id(a)
    if r is Rule.ITER_STEP:
        (u,) = p
        a = _endo(u, node)
        return Compose(Iter(u), step_map(a)), Compose(u, Iter(u))
    raise ProofError(f"{r.value} is not an axiom", node)


def _shape(node: DeductionTree):
    r = node.rule
    if not isinstance(r, Rule):
        raise ProofError(f"unknown rule {r!r}", node)
    if r is Rule.CONST_SUBST:
        if not node.params or node.params[0] not in CONST_KINDS:
            raise ProofError("const-subst needs a kind: pi or pi-one", node)
        want = 1 + CONST_KINDS[node.params[0]]
        terms = node.params[1:]
    else:
        want = N_PARAMS[r]
        terms = node.params
    if len(node.params) != want:
        raise ProofError(f"{r.value} takes {want} parameters, got {len(node.params)}", node)
    if len(node.premises) != N_PREMISES[r]:
        raise ProofError(
            f"{r.value} takes {N_PREMISES[r]} premises, got {len(node.premises)}", node
        )
    for t in terms:
        if not isinstance(t, MapTerm):
            raise ProofError(f"{r.value}: parameter {t!r} is not a map term", node)
    for q in node.premises:
        if not isinstance(q, DeductionTree):
            raise ProofError(f"{r.value}: premise {q!r} is not a deduction tree", node)


def root_terms(node: DeductionTree) -> tuple[MapTerm, MapTerm]:
    """Validate ``node`` and return its root equation as a pair of terms."""
    _shape(node)
    return _conclude(node, [root_terms(q) for q in node.premises])


def _conclude(node: DeductionTree, prem: list) -> tuple[MapTerm, MapTerm]:
    """Root of ``node`` given the (already checked) roots of its premises."""
    r = node.rule
    if N_PREMISES[r] == 0:
        lhs, rhs = _axiom_root(node)
        return _same_homset(lhs, rhs, node)
    if r is Rule.SYMM:
        u, v = prem[0]
        return v, u
    if r is Rule.TRANS:
        (u, v), (v2, w) = prem
        if v != v2:
            raise ProofError(
                f"trans: middle terms differ: {v} vs {v2}", node
            )
        return u, w
    if r is Rule.COMPAT_COMP_L:
        (v,) = node.params
        u, u2 = prem[0]
        return _same_homset(Compose(v, u), Compose(v, u2), node)
    if r is Rule.COMPAT_COMP_R:
        (u,) = node.params
        v, v2 = prem[0]
        return _same_homset(Compose(v, u), Compose(v2, u), node)
    if r is Rule.COMPAT_PAIR_L:
        (v,) = node.params
        u, u2 = prem[0]
        return _same_homset(Pair(u, v), Pair(u2, v), node)
    if r is Rule.COMPAT_PAIR_R:
        (u,) = node.params
        v, v2 = prem[0]
        return _same_homset(Pair(u, v), Pair(u, v2), node)
    if r is Rule.COMPAT_ITER:
        u, u2 = prem[0]
        _endo(u, node)
        return Iter(u), Iter(u2)
    # freyd-uniq
    u, v, w = node.params
    wd, b = _typed(w, node)
    if not (isinstance(wd, Prod) and wd.right == NAT):
        raise ProofError(f"freyd-uniq: {w} must have domain A x N", node)
    a = wd.left
    if _typed(u, node) != (a, b):
        raise ProofError(f"freyd-uniq: {u} must map {a} -> {b}", node)
    if _typed(v, node) != (b, b):
        raise ProofError(f"freyd-uniq: {v} must map {b} -> {b}", node)
    if prem[0] != (Compose(w, anchor_map(a)), u):
        raise ProofError("freyd-uniq: first premise is not w . <id; 0 . Pi> = u", node)
    if prem[1] != (Compose(w, step_map(a)), Compose(v, w)):
        raise ProofError("freyd-uniq: second premise is not w . (id # s) = v . w", node)
    return w, Compose(Iter(v), product_map(u, Id(NAT)))


def _same_homset(lhs, rhs, node):
    if _typed(lhs, node) != _typed(rhs, node):
        raise ProofError(f"{node.rule.value}: sides lie in different hom-sets", node)
    return lhs, rhs


def check_tree(t: DeductionTree) -> Equation:
    """Return the root equation of ``t`` or raise :class:`ProofError`."""
    lhs, rhs = root_terms(t)
    return Equation.from_terms(lhs, rhs)


# ---------------------------------------------------------------------------
# size and order


def tree_size(t: DeductionTree) -> int:
    n = 1
    for p in t.params:
        n += 1 if isinstance(p, str) else term_size(p)
    for q in t.premises:
        n += tree_size(q)
    return n


def tree_key(t: DeductionTree) -> tuple:
    """Lexicographic tie-break among trees of equal size."""
    parts = [RULE_ORDER[t.rule]]
    for p in t.params:
        parts.append(KIND_ORDER[p] if isinstance(p, str) else encode_term(p))
    for q in t.premises:
        parts.append(tree_key(q))
    return tuple(parts)


def order_key(t: DeductionTree) -> tuple:
    return (tree_size(t), tree_key(t))


# ---------------------------------------------------------------------------
# enumeration


class _Node(NamedTuple):
    tree: DeductionTree
    lhs: MapTerm
    rhs: MapTerm
    dom: Obj
    cod: Obj
    size: int

    @property
    def root(self):
        return self.lhs, self.rhs


def _bucket():
    return defaultdict(list)


class TreeEnumerator:
    """Generates all valid deduction trees one size class at a time.

    Within a size class trees are sorted by :func:`tree_key`; the class is
    appended to the running list once complete.  All state is guarded by a
    lock, so concurrent callers see one consistent enumeration.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self.nodes: list[_Node] = []
        self.size_starts: list[int] = [0, 0]  # number of trees of size <= s
        self._built = 1
        self._objs: list[list[Obj]] = [[], [ONE, NAT]]
        # terms[s] = [(term, dom, cod)]
        self._terms: list[list] = [[]]
        self._by_dom: list[dict] = [_bucket()]
        self._by_cod: list[dict] = [_bucket()]
        self._endos: list[list] = [[]]
        self._trees: list[list[_Node]] = [[], []]
        self._by_lhs: list[dict] = [_bucket(), _bucket()]
        self._by_cod_tree: list[dict] = [_bucket(), _bucket()]
        self._by_dom_tree: list[dict] = [_bucket(), _bucket()]
        self._endo_trees: list[list] = [[], []]
        self._anchored: list[list] = [[], []]

    # -- objects and terms ---------------------------------------------

    def _objects(self, s: int) -> list[Obj]:
        while len(self._objs) <= s:
            n = len(self._objs)
            out = []
            for sa in range(1, n - 1):
                for a in self._objs[sa]:
                    for b in self._objs[n - 1 - sa]:
                        out.append(Prod(a, b))
            self._objs.append(out)
        return self._objs[s]

    def _grow_terms(self, s: int):
        while len(self._terms) <= s:
            n = len(self._terms)
            out = []
            if n == 1:
                out += [(ZERO, ONE, NAT), (SUCC, NAT, NAT)]
            for a in self._objects(n - 1):
                out.append((Id(a), a, a))
            for a in self._objects(n - 1):
                out.append((Terminal(a), a, ONE))
            for sa in range(1, n - 1):
                for a in self._objects(sa):
                    for b in self._objects(n - 1 - sa):
                        out.append((ProjL(a, b), Prod(a, b), a))
                        out.append((ProjR(a, b), Prod(a, b), b))
            for sg in range(1, n - 1):
                sf = n - 1 - sg
                for f, fd, fc in self._terms[sf]:
                    for g, _, gc in self._by_dom[sg].get(fc, ()):
                        out.append((Compose(g, f), fd, gc))
            for sf in range(1, n - 1):
                sg = n - 1 - sf
                for f, fd, fc in self._terms[sf]:
                    for g, _, gc in self._by_dom[sg].get(fd, ()):
                        out.append((Pair(f, g), fd, Prod(fc, gc)))
            if n >= 2:
                for f, a, _ in self._endos[n - 1]:
                    out.append((Iter(f), Prod(a, NAT), a))
            by_dom, by_cod, endos = _bucket(), _bucket(), []
            for entry in out:
                by_dom[entry[1]].append(entry)
                by_cod[entry[2]].append(entry)
                if entry[1] == entry[2]:
                    endos.append(entry)
            self._terms.append(out)
            self._by_dom.append(by_dom)
            self._by_cod.append(by_cod)
            self._endos.append(endos)

    def terms_of_size(self, s: int) -> list:
        self._grow_terms(s)
        return self._terms[s]

    # -- trees ------------------------------------------------------------

    def _candidates(self, s: int):
        """Yield ``(tree, premise roots)`` for every candidate of size ``s``.

        Every valid tree of that size is yielded exactly once; candidates
        failing a side condition are filtered by the caller.
        """
        T = self.terms_of_size
        self._grow_terms(s)
        R = Rule
        ts = T(s - 1)
        for u, _, _ in ts:
            yield DeductionTree(R.REFL, (u,)), ()
            yield DeductionTree(R.ID_LEFT, (u,)), ()
            yield DeductionTree(R.ID_RIGHT, (u,)), ()
        for w, _, c in ts:
            if isinstance(c, Prod):
                yield DeductionTree(R.SURJ_PAIRING, (w,)), ()
        for u, _, _ in self._endos[s - 1] if s >= 2 else ():
            yield DeductionTree(R.ITER_ANCHOR, (u,)), ()
            yield DeductionTree(R.ITER_STEP, (u,)), ()
        if s == 2:
            yield DeductionTree(R.CONST_SUBST, ("pi-one",)), ()
        if s >= 3:
            for u, _, _ in T(s - 2):
                yield DeductionTree(R.CONST_SUBST, ("pi", u)), ()
        # three-parameter axioms
        for su in range(1, s - 2):
            for sv in range(1, s - 1 - su):
                sw = s - 1 - su - sv
                if sw < 1:
                    continue
                T(sw)
                for u, _, b in T(su):
                    for v, _, c in self._by_dom[sv].get(b, ()):
                        for w, _, _ in self._by_dom[sw].get(c, ()):
                            yield DeductionTree(R.ASSOC_COMP, (w, v, u)), ()
                # distrib-pair (u, v, w): w: X -> A, u, v: A -> _
                for w, _, a in T(sw):
                    for u, _, _ in self._by_dom[su].get(a, ()):
                        for v, _, _ in self._by_dom[sv].get(a, ()):
                            yield DeductionTree(R.DISTRIB_PAIR, (u, v, w)), ()
        for su in range(1, s - 1):
            sv = s - 1 - su
            for u, a, _ in T(su):
                for v, _, _ in self._by_dom[sv].get(a, ()):
                    yield DeductionTree(R.GODEMENT_L, (u, v)), ()
                    yield DeductionTree(R.GODEMENT_R, (u, v)), ()
        # rules with premises
        for p in self._trees[s - 1]:
            yield DeductionTree(R.SYMM, premises=(p.tree,)), [p.root]
            if p.dom == p.cod:
                yield DeductionTree(R.COMPAT_ITER, premises=(p.tree,)), [p.root]
        for s1 in range(2, s - 2):
            s2 = s - 1 - s1
            for p in self._trees[s1]:
                for q in self._by_lhs[s2].get(p.rhs, ()):
                    yield DeductionTree(R.TRANS, premises=(p.tree, q.tree)), [p.root, q.root]
        for sp in range(2, s - 1):
            st = s - 1 - sp
            T(st)
            for p in self._trees[sp]:
                for v, _, _ in self._by_dom[st].get(p.cod, ()):
                    yield DeductionTree(R.COMPAT_COMP_L, (v,), (p.tree,)), [p.root]
                for u, _, _ in self._by_cod[st].get(p.dom, ()):
                    yield DeductionTree(R.COMPAT_COMP_R, (u,), (p.tree,)), [p.root]
                for v, _, _ in self._by_dom[st].get(p.dom, ()):
                    yield DeductionTree(R.COMPAT_PAIR_L, (v,), (p.tree,)), [p.root]
                    yield DeductionTree(R.COMPAT_PAIR_R, (v,), (p.tree,)), [p.root]
        yield from self._freyd_candidates(s)

    def _freyd_candidates(self, s: int):
        for s1 in range(2, s - 1):
            for p1 in self._anchored[s1]:
                w = p1.lhs.g
                u = p1.rhs
                a = p1.dom
                su, sw = term_size(u), term_size(w)
                rest = s - 1 - s1 - su - sw
                if rest < 3:
                    continue
                lhs2 = Compose(w, step_map(a))
                for s2 in range(2, rest):
                    sv = rest - s2
                    for p2 in self._by_lhs[s2].get(lhs2, ()):
                        r = p2.rhs
                        if (
                            isinstance(r, Compose)
                            and r.f == w
                            and term_size(r.g) == sv
                        ):
                            yield DeductionTree(
                                Rule.FREYD_UNIQ, (u, r.g, w), (p1.tree, p2.tree)
                            ), [p1.root, p2.root]

    def _build_next(self):
        s = self._built + 1
        nodes = []
        for t, prem in self._candidates(s):
            try:
                lhs, rhs = _conclude(t, prem)
            except ProofError:
                continue
            dom, cod = infer_type(lhs)
            nodes.append(_Node(t, lhs, rhs, dom, cod, s))
        nodes.sort(key=lambda n: tree_key(n.tree))
        by_lhs, anchored = _bucket(), []
        for n in nodes:
            by_lhs[n.lhs].append(n)
            l = n.lhs
            if (
                isinstance(l, Compose)
                and isinstance(l.f, Pair)
                and l.f == anchor_map(n.dom)
            ):
                anchored.append(n)
        self._trees.append(nodes)
        self._by_lhs.append(by_lhs)
        self._anchored.append(anchored)
        self.nodes.extend(nodes)
        self.size_starts.append(len(self.nodes))
        self._built = s

    def node(self, k: int) -> _Node:
        with self._lock:
            while len(self.nodes) <= k:
                self._build_next()
            return self.nodes[k]

    def ensure_size(self, s: int):
        with self._lock:
            while self._built < s:
                self._build_next()

    def count_up_to(self, s: int) -> int:
        """Number of valid trees of size ``<= s``."""
        self.ensure_size(s)
        return self.size_starts[max(s, 0)]


_ENUMERATOR = TreeEnumerator()


def enumerator() -> TreeEnumerator:
    return _ENUMERATOR


def enumerate_trees(k: int) -> DeductionTree:
    """The ``k``-th valid deduction tree."""
    if k < 0:
        raise ValueError(f"negative tree index {k}")
    return _ENUMERATOR.node(k).tree


# ---------------------------------------------------------------------------
# provability and soundness


def _predicate_domain(chi: Code) -> Obj:
    try:
        a, b = code_signature(chi)
    except (DecodeError, MapTypeError) as e:
        raise MapTypeError(f"not a predicate code: {e}", chi) from None
    if b != NAT:
        raise MapTypeError(f"predicate code {chi} has codomain {b}, expected N", chi)
    return a


def pro_pr(k: int, chi: Code) -> bool:
    """Whether the ``k``-th tree proves ``chi = true_A``."""
    a = _predicate_domain(chi)
    node = _ENUMERATOR.node(k)
    return node.rhs == true_map(a) and node.lhs == decode_term(chi)


def find_proof(goal: Equation, fuel: int) -> Optional[tuple[int, DeductionTree]]:
    """Least ``k < fuel`` whose tree proves ``goal``, if any."""
    if not isinstance(goal, Equation):
        raise TypeError(f"goal must be an Equation, got {goal!r}")
    lhs, rhs = goal.terms
    for k in range(fuel):
        node = _ENUMERATOR.node(k)
        if node.lhs == lhs and node.rhs == rhs:
            return k, node.tree
    return None


def soundness_check(t: DeductionTree, samples: int, **bounds) -> bool:
    """Evaluate both sides of the root of ``t`` at the first ``samples`` points."""
    eq = check_tree(t)
    for i in range(samples):
        x = ct(eq.dom, i)
        if ev(eq.lhs, x, **bounds) != ev(eq.rhs, x, **bounds):
            return False
    return True
