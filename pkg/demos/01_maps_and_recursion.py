"""Build maps from the basic constructors and run them.

Addition comes out of primitive recursion; iteration of a constant step
shows why sign is cheap to evaluate.
"""

from prmaps import NAT, SUCC, Compose, Iter, eval_map, infer_type, print_term
from prmaps.stdlib import ADD, MONUS, MULT, SIGN, const_map

print("iter(s) at (3,2):", eval_map(Iter(SUCC), (3, 2)))

for name, t in [("add", ADD), ("mult", MULT), ("monus", MONUS)]:
    dom, cod = infer_type(t)
    print(f"{name}: {dom} -> {cod}, {len(print_term(t))} chars")
    print("   at (7,5):", eval_map(t, (7, 5)))

# the step reaches a fixed point after one round, so huge counts are free
print("sign(10**15):", eval_map(SIGN, 10**15))
print("const_1 iterated:", eval_map(Iter(const_map(NAT, 1)), (0, 10**15)))

double_succ = Compose(SUCC, SUCC)
print("iter(s . s) at (1,10):", eval_map(Iter(double_succ), (1, 10)))
