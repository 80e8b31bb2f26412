"""Injectivity verdicts for the coset-sum transform, family by family.

A function on a finite group is summed over every geodesic: every left
coset of a nontrivial cyclic subgroup. Prime-order subgroups carry all the
information, so the prime variant is the default system. The question is
always the same: do the sums pin the function down?
"""

import math

from coset_radon import groups, radon, verify

# --- the abelian law ----------------------------------------------------------
# On abelian groups the answer is structural: injective exactly when the
# group is NOT cyclic. One invariant factor means cyclic means blind spots.

print("abelian groups up to order 20:")
for g in verify.abelian_groups_upto(20):
    v = radon.is_injective(g)
    tag = "injective   " if v.injective else "noninjective"
    print(f"  {g.recipe:12s} {tag}  (cyclic={groups.is_cyclic(g)})")
    assert v.injective == (not groups.is_cyclic(g))

# --- the catalog ---------------------------------------------------------------
# Dihedral groups become injective at n = 2 already: D_2 is the Klein
# four-group. Dicyclic groups never do; their unique order-2 element
# starves the system of rows.

print("\nnamed families:")
for name in ("D3", "D8", "S3", "S4", "A4", "A5", "Dic2", "Dic6"):
    v = radon.is_injective(groups.from_name(name))
    print(f"  {name:6s} rows {v.rows:4d}  rank {v.rank:3d}/{v.order:3d}  "
          f"injective={v.injective}")

# --- the product rule ----------------------------------------------------------
# Noninjectivity survives a direct product only when both factors are
# noninjective AND their orders are coprime. One shared prime rescues it.

print("\nproduct rule:")
for n1, n2 in ((4, 3), (4, 6), (2, 2), (9, 8)):
    g1, g2 = groups.make_cyclic(n1), groups.make_cyclic(n2)
    v = radon.is_injective(groups.make_direct_product(g1, g2))
    shared = math.gcd(n1, n2) > 1
    print(f"  C{n1} x C{n2}: injective={v.injective}  "
          f"(shared prime: {shared})")

# --- Frobenius complements ------------------------------------------------------
# For the prime variant, "noninjective" and "is a Frobenius complement"
# are the same property; the verdict carries the flag.

q8 = radon.is_injective(groups.from_name("Dic2"))
print(f"\nQ8: frobenius complement = {q8.frobenius_complement}")

# --- certificates ----------------------------------------------------------------
# A full-rank verdict is certified by a single full rank mod p (which can
# only undercount). A deficit is confirmed by exact integer elimination,
# and the kernel basis is re-applied to the matrix before being returned.

for name in ("D4", "C6"):
    v = radon.is_injective(groups.from_name(name))
    print(f"{name}: method = {v.method}")
