"""Fuel-bounded decision of 0/1-valued predicates.

For a predicate ``chi: A -> N`` the decision domain holds every ``k`` that
either indexes a counterexample ``ct(A, k)`` or indexes a deduction tree
proving ``chi = true_A``.  :func:`nabla` returns the verdict at the least
such ``k`` below the fuel bound.

A non-empty decision domain without a witness cannot occur here:
membership is a total computable test, so the scan finds the least member
whenever one lies below the fuel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .cantor import ct
from .codec import Code, DecodeError, code_signature, encode_term
from .evaluator import ev
from .kernel import NAT, MapTypeError, Obj, Value, format_value
from .proofs import DeductionTree, ProofError, check_tree, enumerate_trees, pro_pr
from .stdlib import true_map


@dataclass(frozen=True)
class Predicate:
    code: Code
    domain: Obj
    check_samples: int = 8

    def __post_init__(self):
        try:
            sig = code_signature(self.code)
        except DecodeError as e:
            raise MapTypeError(f"not a predicate code: {e}", self.code) from None
        if sig != (self.domain, NAT):
            raise MapTypeError(
                f"predicate code must lie in [{self.domain}, N], got [{sig[0]}, {sig[1]}]",
                self.code,
            )
        for i in range(self.check_samples):
            out = ev(self.code, ct(self.domain, i))
            if out not in (0, 1):
                raise ValueError(
                    f"predicate takes value {out} at {format_value(ct(self.domain, i))}"
                )

    @classmethod
    def from_term(cls, t, **kw) -> "Predicate":
        from .kernel import infer_type

        dom, _ = infer_type(t)
        return cls(encode_term(t), dom, **kw)

    def __call__(self, v: Value) -> int:
        return ev(self.code, v)


@dataclass(frozen=True)
class Counterexample:
    k: int
    witness: Value

    def __str__(self):
        return f"Counterexample k={self.k} value={format_value(self.witness)}"


@dataclass(frozen=True)
class Proved:
    k: int
    tree: DeductionTree

    def __str__(self):
        return f"Proved k={self.k} tree={self.tree}"


@dataclass(frozen=True)
class Exhausted:
    fuel: int

    def __str__(self):
        return f"Exhausted fuel={self.fuel}"


Verdict = Union[Counterexample, Proved, Exhausted]


def in_decision_domain(chi: Predicate, k: int) -> bool:
    return ev(chi.code, ct(chi.domain, k)) == 0 or pro_pr(k, chi.code)


def nabla(chi: Predicate, fuel: int) -> Verdict:
    """Least ``k < fuel`` in the decision domain, counterexample branch first."""
    if fuel < 0:
        raise ValueError(f"negative fuel {fuel}")
    for k in range(fuel):
        w = ct(chi.domain, k)
        if ev(chi.code, w) == 0:
            return Counterexample(k, w)
        if pro_pr(k, chi.code):
            return Proved(k, enumerate_trees(k))
    return Exhausted(fuel)


def verdict_audit(chi: Predicate, v: Verdict, samples: int = 25) -> bool:
    """Re-verify what a verdict claims about ``chi``.

    A counterexample must be the point ``ct(A, k)`` and falsify ``chi``.  A
    proof must check, prove ``chi = true_A`` and leave ``chi`` true on the
    first ``samples`` points.  Exhaustion claims that no ``k`` below the
    fuel lies in the decision domain, which is recomputed.
    """
    if isinstance(v, Counterexample):
        return v.witness == ct(chi.domain, v.k) and ev(chi.code, v.witness) == 0
    if isinstance(v, Proved):
        try:
            eq = check_tree(v.tree)
        except ProofError:
            return False
        if (eq.lhs, eq.rhs) != (chi.code, encode_term(true_map(chi.domain))):
            return False
        if enumerate_trees(v.k) != v.tree:
            return False
        return all(ev(chi.code, ct(chi.domain, i)) == 1 for i in range(samples))
    if isinstance(v, Exhausted):
        return not any(in_decision_domain(chi, k) for k in range(v.fuel))
    return False
