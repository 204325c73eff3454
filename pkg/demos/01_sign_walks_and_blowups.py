"""
Sign walks and blow-up counts
=============================

Walk the Weyl group of A2 and G2 over the sign vectors of the Toda
variables, count the blow-ups along reduced words, and assemble the
alternating-sum polynomial p(q).
"""

from flagcoh import (
    all_minus,
    blowup_count,
    blowup_poly,
    blowup_table,
    cartan_matrix,
    enumerate_group,
    factor_q_minus_form,
    format_signs,
    longest_blowups,
    reflect_signs,
    sign_vector,
)

# A simple reflection s_i flips the j-th sign exactly when the Cartan entry
# C[j][i] is odd and the i-th sign is minus.  Reproduce the A2 walk:
c = cartan_matrix("A2")
eps = sign_vector("--")
print("A2 sign walk from --:")
for i in (1, 2, 1):
    nxt = reflect_signs(i, eps, c)
    print(f"  s_{i}: {format_signs(eps)} -> {format_signs(nxt)}")
    eps = nxt

# Counting the letters hit while their sign is minus gives the blow-up
# count; it does not depend on which reduced word you walk.
print("blow-ups along s1 s2 s1:", blowup_count((1, 2, 1), "--", c))
print("blow-ups along s2 s1 s2:", blowup_count((2, 1, 2), "--", c))

# Tables for a whole group come from one breadth-first sweep.
for name in ("A2", "G2"):
    group = enumerate_group(name)
    table = blowup_table(group, all_minus(group.rank))
    print(f"\n{name}: count multiset {table.value_multiset()}")
    for w, value in zip(group.elements, table.counts):
        word = "".join(map(str, w.word)) or "e"
        print(f"  {word:>7s}  length {w.length}  blow-ups {value}")

# The alternating sum over the group collapses to a product of q-power
# factors; its degree is the total blow-up count at the longest element.
for name in ("A2", "A3", "B3", "G2"):
    group = enumerate_group(name)
    p = blowup_poly(group, all_minus(group.rank))
    print(f"\np(q) for {name}: {p}")
    print(f"  factors as q^d - 1 over d = {factor_q_minus_form(p)}")
    print(f"  degree {p.degree} = blow-ups at the longest element "
          f"({longest_blowups(name)})")

# Every sign vector with a plus anywhere gives the zero polynomial.
print("\nA2 with eps = -+:", blowup_poly("A2", "-+"))
