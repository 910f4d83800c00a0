"""Degree bounds inside a family with covering number k."""

# %%
from intfam import check_degree_bound, complete_family, greedy_chain, greedy_extension

F = complete_family(4)

# %%
# No set of u vertices sits in more than k^(k-u) edges.
rep = check_degree_bound(F, 4)
print("checked", rep.checked, "sets, violations:", len(rep.violations))
for U, d, bound in rep.tight[:5]:
    print("  tight:", [F.label(v) for v in U], d, "=", bound)

# %%
# Growing a set one vertex at a time: each step keeps at least a 1/k
# fraction of the edges through the current set.
v, d = greedy_extension(F, F, (0,))
print("add", F.label(v), "-> degree", d)

chain = greedy_chain(F, F, (0,), 4)
print("start degree", chain.start_degree)
for step in chain.steps:
    print("  +", F.label(step.vertex), "degree", step.degree_within)
