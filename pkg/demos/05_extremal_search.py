"""Largest intersecting families with covering number k, by exhaustive search."""

# %%
from intfam import max_family_size

r = max_family_size(2, 5)
print("k=2:", r.best_size, "exhaustive" if r.exhaustive else "partial", r.nodes, "nodes")

# %%
r = max_family_size(3, 5)
print("k=3, n<=5:", r.best_size)
for e in r.witness.edges:
    print("  ", r.witness.labeled(e))
