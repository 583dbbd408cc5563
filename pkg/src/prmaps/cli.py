"""Command line interface: ``prmaps <command> ...``.

Output is line oriented and deterministic.  Any parse, type or proof error
prints one diagnostic line on stderr and exits with status 1.
"""

from __future__ import annotations

import argparse
import sys

from .cantor import ct, idx
from .codec import DecodeError, decode_term, encode_term
from .decision import Exhausted, Predicate, nabla, verdict_audit
from .kernel import IterationLimit, MapTypeError, eval_map, format_value, infer_type
from .proofs import ProofError, check_tree, enumerator, soundness_check
from .surface import ParseError, parse_obj, parse_proof, parse_term, parse_value, print_term


def _code(text: str) -> int:
    text = text.strip()
    try:
        return int(text, 16) if text.lower().startswith("0x") else int(text, 10)
    except ValueError:
        raise DecodeError(f"not a decimal or 0x-hex code: {text!r}") from None


def cmd_eval(args, out):
    t = parse_term(args.term)
    dom, _ = infer_type(t)
    v = parse_value(args.value, dom)
    out.write(format_value(eval_map(t, v)) + "\n")


def cmd_encode(args, out):
    out.write(f"{encode_term(parse_term(args.term))}\n")


def cmd_decode(args, out):
    out.write(print_term(decode_term(_code(args.code))) + "\n")


def cmd_check(args, out):
    with open(args.proof_file, encoding="utf-8") as fh:
        tree = parse_proof(fh.read())
    out.write(f"{check_tree(tree)}\n")


def cmd_enumerate(args, out):
    en = enumerator()
    for k in range(args.count):
        node = en.node(k)
        line = f"{k} {node.size} {check_tree(node.tree)}"
        if args.verify:
            ok = soundness_check(node.tree, args.samples)
            line += " sound" if ok else " UNSOUND"
        out.write(line + "\n")


def cmd_decide(args, out):
    chi = Predicate.from_term(parse_term(args.predicate))
    verdict = nabla(chi, args.fuel)
    out.write(f"{verdict}\n")
    audit = verdict_audit(chi, verdict, args.samples)
    out.write(f"audit={'ok' if audit else 'FAILED'}\n")
    if not audit:
        return 1
    return 2 if isinstance(verdict, Exhausted) else 0


def cmd_ct(args, out):
    out.write(format_value(ct(parse_obj(args.obj), args.k)) + "\n")


def cmd_idx(args, out):
    a = parse_obj(args.obj)
    out.write(f"{idx(a, parse_value(args.value, a))}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="prmaps", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a term at a value")
    p.add_argument("term")
    p.add_argument("value")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("encode", help="print the code of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="print the term with a given code")
    p.add_argument("code")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("check", help="check a proof file and print its root equation")
    p.add_argument("proof_file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list the first deduction trees")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="run the soundness check per tree")
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decide", help="run the bounded decision procedure on a predicate")
    p.add_argument("predicate")
    p.add_argument("--fuel", type=int, required=True)
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("ct", help="k-th element of an object")
    p.add_argument("obj")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_ct)

    p = sub.add_parser("idx", help="index of a value in the count of an object")
    p.add_argument("obj")
    p.add_argument("value")
    p.set_defaults(func=cmd_idx)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args, out)
    except (ParseError, DecodeError, MapTypeError, ProofError, IterationLimit, OSError, ValueError) as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
