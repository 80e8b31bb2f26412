"""A tour of the group constructors and structure helpers.

Run as a script; every section prints what it builds. Nothing here touches
the transform yet, this is the raw material the other demos feed on.
"""

from coset_radon import groups

# --- named families ---------------------------------------------------------
# The name grammar covers cyclic, dihedral, dicyclic, symmetric, alternating
# and direct products of those, e.g. "C2xC4" or "D4xC3".

for name in ("C12", "D4", "Dic3", "S4", "A4", "C2xC6"):
    g = groups.from_name(name)
    print(f"{name:8s} order {g.order:3d}  abelian={groups.is_abelian(g)}")

# --- invariant factors ------------------------------------------------------
# Every finite abelian group is a product of cyclic groups with each order
# dividing the next; that divisibility chain is the isomorphism invariant.

print()
for name in ("C6", "C2xC6", "C2xC2xC2", "C4xC6"):
    g = groups.from_name(name)
    print(f"{name:10s} invariant factors {groups.invariant_factors(g)}")

# C2xC3 and C6 share the chain [6]: they are the same group twice
assert groups.invariant_factors(groups.from_name("C2xC3")) == [6]

# --- raw Cayley tables ------------------------------------------------------
# A group can also arrive as a bare multiplication table. Validation checks
# the latin property, a two-sided identity, inverses, and associativity,
# and relabels so the identity sits at id 0.

klein = [
    [0, 1, 2, 3],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 1, 0],
]
g = groups.from_cayley_table(klein)
print(f"\nfrom table: order {g.order}, factors {groups.invariant_factors(g)}")

# --- semidirect products ----------------------------------------------------
# The action table lists, for each element of the acting group, the
# automorphism it induces on the normal factor. Multiplication by 2 has
# order 3 on C_7, so C_7 x| C_3 exists and is nonabelian of order 21.

c7, c3 = groups.make_cyclic(7), groups.make_cyclic(3)
action = [[(pow(2, k, 7) * x) % 7 for x in range(7)] for k in range(3)]
frob21 = groups.make_semidirect(c7, c3, action)
print(f"\nC7 x| C3: order {frob21.order}, abelian={groups.is_abelian(frob21)}")

# --- subgroups, cosets, quotients -------------------------------------------

d4 = groups.make_dihedral(4)
rotations = groups.cyclic_subgroup(d4, 1)
print(f"\nD4 rotation subgroup: {rotations.elements}")
print(f"left cosets: {groups.left_cosets(d4, rotations)}")
q = groups.quotient(d4, rotations)
print(f"quotient order: {q.order}")
