"""Check deduction trees, derive Freyd's rule for an iterate, and peek at the enumeration."""

from prmaps import NAT, SUCC, Id, check_tree, enumerate_trees, parse_proof, print_proof, soundness_check
from prmaps import tactics as tc
from prmaps.proofs import enumerator, tree_size

p = parse_proof("(trans (refl #s) (symm (refl #s)))")
print("parsed:", check_tree(p))

g = tc.godement_l(Id(NAT), SUCC)
print("godement:", check_tree(g))

# uniqueness of the iterate: id . w0 satisfies the recursion equations of w0
w0 = tc.initialised_iterate(Id(NAT), SUCC)
freyd = tc.freyd_for(tc.id_left(w0), Id(NAT), SUCC)
print("freyd root:", check_tree(freyd))
print("freyd tree size:", tree_size(freyd), "sound on 30 points:", soundness_check(freyd, 30))

print("first trees:")
for k in range(8):
    print(f"  {k}: {print_proof(enumerate_trees(k))}")
en = enumerator()
print("trees of size <= 6:", en.count_up_to(6))
