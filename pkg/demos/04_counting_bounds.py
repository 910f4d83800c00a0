"""Exact sizes of the answer spaces and the resulting bounds."""

# %%
from math import comb

from intfam import theorem_bounds
from intfam.counting import count_monotone_sequences, count_valid_pairs, pair_crossover, default_alpha

print(count_monotone_sequences(100, 4), "==", comb(103, 4))

# %%
r = theorem_bounds(100, default_alpha(100))
print("t_monotone", r.t_monotone, "ratio", r.monotone_ratio, "=", float(r.monotone_ratio))
print("invariants hold:", r.invariants_hold())

# %%
# Valid answer pairs versus e^(-1/10) k^2.
for k in (3, 9, 30, 100):
    print(k, count_valid_pairs(k))
print(pair_crossover(500))
