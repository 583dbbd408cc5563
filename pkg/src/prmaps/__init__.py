"""Primitive recursive map calculus: terms, codes, proofs and bounded decision."""

from .cantor import cantor_pair, cantor_unpair, ct, idx
from .codec import (
    Code,
    DecodeError,
    code_signature,
    decode_obj,
    decode_term,
    encode_obj,
    encode_term,
    in_homset,
)
from .decision import (
    Counterexample,
    Exhausted,
    Predicate,
    Proved,
    in_decision_domain,
    nabla,
    verdict_audit,
)
from .evaluator import ev, objectivity_check
from .kernel import (
    NAT,
    ONE,
    STAR,
    SUCC,
    ZERO,
    Compose,
    Id,
    Iter,
    IterationLimit,
    MapTerm,
    MapTypeError,
    Nat,
    Obj,
    One,
    Pair,
    Prod,
    ProjL,
    ProjR,
    Succ,
    Terminal,
    Zero,
    eval_map,
    has_type,
    infer_type,
    primrec,
    product_map,
)
from .proofs import (
    DeductionTree,
    Equation,
    ProofError,
    Rule,
    check_tree,
    enumerate_trees,
    find_proof,
    pro_pr,
    soundness_check,
)
from .stdlib import NamedTerm, const_map, false_map, numeral, stdlib_catalog, true_map
from .surface import (
    ParseError,
    SourceSpan,
    parse_obj,
    parse_proof,
    parse_term,
    parse_value,
    print_proof,
    print_term,
)

__version__ = "0.1.0"
