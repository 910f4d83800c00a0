"""Families with covering number k, and how to certify it."""

# %%
# The complete family: every k-subset of a (2k-1)-set. Any two members
# meet, and hitting all of them takes k vertices.
from intfam import complete_family, covering_number, validate_family
from intfam.families import dumps, loads, projective_plane, random_subfamily

F = complete_family(3)
print(len(F), "edges on", F.n, "vertices")
print(validate_family(F))

# %%
cert = covering_number(F)
print("cover", [F.label(v) for v in cert.cover], "size", cert.size,
      "minimum" if cert.is_minimum else "upper bound only",
      f"({cert.nodes_explored} nodes)")

# %%
# Dropping edges can only lower the covering number. Seeded sampling is
# reproducible across runs and machines.
sub, sub_cert = random_subfamily(complete_family(4), 20, seed=7)
print(len(sub), "edges kept, tau =", sub_cert.size)

# %%
# A sparser source of tau = k: the lines of the Fano plane.
fano = projective_plane(2)
print(len(fano), "lines, tau =", covering_number(fano).size)

# %%
# Round trip through the plain-text format.
text = dumps(fano)
print(text)
assert dumps(loads(text)) == text
