"""Naming an edge by k answers from [k].

A guesser proposes edges disjoint from what is known so far; the answer
picks a position in that edge. The same game replayed with the answers
recovers the edge, so the family injects into the answer space.
"""

# %%
from intfam import complete_family, decode, encode, verify_injectivity

F = complete_family(3)
e = (1, 2, 3)
code = encode(F, e, "basic")
print("basic code for", F.labeled(e), "->", code.answers)
assert decode(F, code, "basic") == e

# %%
# Monotone variant: fix a vertex x outside e; the first t answers come
# out non-decreasing, which shrinks the space of possible codes.
mono = encode(F, e, "monotone", x=0, t=1)
print("monotone:", mono.answers)

# %%
# Paired variant: a large first answer in a pair forces a not-small
# second one.
paired = encode(F, (2, 3, 4), "paired", t=2)
print("paired:", paired.answers)

# %%
for strategy, kw in (("basic", {}), ("monotone", {"x": 0, "t": 1}), ("paired", {"t": 2})):
    rep = verify_injectivity(F, strategy, **kw)
    print(f"{strategy:9s} {rep.family_size} edges into {rep.sequence_space_size} codes, ok={rep.ok}")
