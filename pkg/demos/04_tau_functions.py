"""
Nilpotent tau-functions and singularity multiplicities
======================================================

The tau-functions of the nilpotent flows are Wronskians of complete
homogeneous functions (with an extra flow parameter s for the D family).
Their minimal total degrees at the common zero add up to the multiplicity
of the divisor singularity, which equals the total blow-up count.
"""

from flagcoh import (
    complete_homogeneous,
    longest_blowups,
    min_degree,
    nilpotent_tau_family,
    schur_wronskian,
    singularity_multiplicity,
    tau_min_degrees,
)

# h_k with only t_1 and t_5 active, as used by the G2 formulas:
h6 = complete_homogeneous(6, {1, 5})
print("h_6 on (t1, t5):", h6)

# Wronskian Schur polynomials via the index-shift rule dh_n/dt1 = h_{n-1}:
print("S_(1,2) =", schur_wronskian((1, 2)))

# The full G2 family: both tau's vanish to order 2.
fam = nilpotent_tau_family("G2")
for k, entry in enumerate(fam.entries, start=1):
    print(f"tau_{k} ({entry.kind}): {entry.poly}")
    print(f"   minimal degree {min_degree(entry.poly)}")

# Families across the classical types; B stores tau_l squared and D also
# stores the product tau_{l-1} tau_l, so the bookkeeping halves/subtracts.
print("\nper-tau minimal degrees and multiplicities:")
for name in ("A2", "A3", "A4", "B3", "B4", "C3", "C4", "D4", "D5", "G2"):
    degrees = tau_min_degrees(name)
    d = singularity_multiplicity(name)
    print(f"  {name}: degrees {degrees}  multiplicity {d}"
          f"  (blow-ups at longest: {longest_blowups(name)})")
