"""Run the bounded decision procedure on a few predicates and audit each verdict."""

from prmaps import Predicate, nabla, parse_term, verdict_audit

CASES = [
    ("(0 . pi[N])", 5),
    ("((s . 0) . pi[N])", 1000),
    ("true[N]", 4000),
    ("(@sign . s)", 5000),
    ("(@eq_nat . <id[N]; id[N]>)", 60),
    ("@leq", 10),
]

for text, fuel in CASES:
    chi = Predicate.from_term(parse_term(text))
    verdict = nabla(chi, fuel)
    print(f"{text:32} fuel={fuel:<5} {verdict}  audit={verdict_audit(chi, verdict)}")
