"""Blind spots made explicit: kernel bases, closed-form witnesses, and the
counting bound that predicts rank deficits before any elimination runs.
"""

from fractions import Fraction

from coset_radon import groups, radon

# --- exact kernel bases -------------------------------------------------------

g = groups.make_cyclic(6)
sys = radon.build_system(g, "prime")
ker = radon.kernel(sys)
print(f"C6 kernel, dim {ker.dim}:")
for vec in ker.vectors:
    print("  ", [str(v) for v in vec])

# any function shifted by a kernel vector produces identical sums
f = [Fraction(k * k, 3) for k in range(6)]
shifted = [a + b for a, b in zip(f, ker.vectors[0])]
assert radon.apply(sys, f) == radon.apply(sys, shifted)
print("two different functions, same transform: confirmed")

# --- closed-form cyclic witnesses ----------------------------------------------
# On a cyclic group the blind spot has a product formula over the prime
# power factors q = p^k of |G|: delta_0 - delta_{q/p} in each coordinate.
# kernel_witness_cyclic evaluates it and re-checks annihilation.

for n in (4, 6, 12, 30):
    w = radon.kernel_witness_cyclic(groups.make_cyclic(n))
    support = sum(1 for v in w if v)
    print(f"C{n}: witness support {support} of {n}")

# --- gluing witnesses across coprime factors -------------------------------------

g1, g2 = groups.make_cyclic(9), groups.make_cyclic(4)
w1 = radon.kernel_witness_cyclic(g1)
w2 = radon.kernel_witness_cyclic(g2)
witness, product = radon.kernel_witness_product(w1, w2, g1, g2)
print(f"\nproduct witness on {product.recipe}: "
      f"{sum(1 for v in witness if v)} nonzero entries")

# the same gluing works from any factor kernel, cyclic or not
q8 = groups.make_dicyclic(2)
w_q8 = radon.kernel(radon.build_system(q8, "prime")).vectors[0]
w_c3 = radon.kernel_witness_cyclic(groups.make_cyclic(3))
witness, product = radon.kernel_witness_product(w_q8, w_c3, q8, groups.make_cyclic(3))
print(f"Q8 x C3 witness verified on order {product.order}")

# --- the counting bound ------------------------------------------------------------
# Summing 1/|H| over the prime-order cyclic subgroups against
# 1 + (|S|-1)/|G| bounds the row span. Dicyclic groups walk right through
# the regimes: strict up to Dic_14, equality at Dic_15, reversed at Dic_30.
# The kernel exists in all three; only the certificate changes.

print("\ncounting bound on dicyclic groups:")
for n in (2, 8, 14, 15, 30):
    chk = radon.dimension_bound_check(groups.make_dicyclic(n))
    rel = "<" if chk.lhs < chk.rhs else ("=" if chk.lhs == chk.rhs else ">")
    v = radon.is_injective(groups.make_dicyclic(n))
    print(f"  Dic{n:<3d} {chk.lhs} {rel} {chk.rhs}   kernel dim {v.kernel_dim}")
