"""
Counting blow-ups along an exact Toda flow
==========================================

For the A family the flow with prescribed spectrum is solved exactly by
the companion matrix: each tau is an explicit exponential sum, and its
real zeros are the blow-up times.  The zero total over all tau's equals
the maximal blow-up count of the sign walk - an integer identity checked
here over random spectra.
"""

import random

from flagcoh import (
    SpectralData,
    count_zeros,
    default_window,
    longest_blowups,
    tau_signal,
    total_blowups,
)

# Rank one: the longest-element coset is sinh-like (one zero), the
# identity coset cosh-like (none).
spec = SpectralData.make([-1.0, 1.0])
print("rank 1, longest coset zeros:", count_zeros(tau_signal(spec, 1), 10.0))
print("rank 1, identity coset zeros:",
      count_zeros(tau_signal(spec, 1, coset="identity"), 10.0))

# Rank 3 with a symmetric spectrum: four crossings in total.
spec = SpectralData.make([-3.0, -1.0, 1.0, 3.0])
window = default_window(spec)
per = [count_zeros(tau_signal(spec, j), window) for j in (1, 2, 3)]
print(f"\nrank 3, spectrum {spec.eigenvalues}")
print(f"  zeros per tau: {per}, total {sum(per)}"
      f"  (expected {longest_blowups('A3')})")

# The total is spectrum-independent as long as the spectrum is generic;
# the split among the tau's is not.
rng = random.Random(1)
print("\nrandom spectra, rank 3:")
for _ in range(5):
    while True:
        lam = sorted(rng.uniform(-5, 5) for _ in range(4))
        if min(b - a for a, b in zip(lam, lam[1:])) > 0.3:
            break
    spec = SpectralData.make(lam)
    print(f"  {tuple(round(x, 3) for x in spec.eigenvalues)}"
          f" -> total {total_blowups(spec)}")
