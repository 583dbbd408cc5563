"""Goedel codes of maps and the Cantor count of objects."""

from prmaps import NAT, Prod, cantor_pair, ct, decode_term, encode_term, ev, idx, parse_term, print_term
from prmaps.codec import is_code
from prmaps.stdlib import ADD

t = parse_term("<id[N]; (0 . pi[N])>")
c = encode_term(t)
print(print_term(t), "has code", c)
print("decodes back to", print_term(decode_term(c)))
print("code of add has", encode_term(ADD).bit_length(), "bits")
print("ev(code of add, (20,22)) =", ev(encode_term(ADD), (20, 22)))

print("first valid codes:", [c for c in range(40) if is_code(c)])
print("17 is", print_term(decode_term(17)))

a = Prod(NAT, Prod(NAT, NAT))
print(f"first points of {a}:", [ct(a, k) for k in range(6)])
print("cantor_pair(1, 1) =", cantor_pair(1, 1))
print("idx of (2,(0,1)):", idx(a, (2, (0, 1))))
