import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from coset_radon import groups, radon
from coset_radon.errors import (
    DimensionError,
    InvalidOrderError,
    InvalidVariantError,
    NoGeodesicsError,
    NotCoprimeError,
    NotCyclicError,
    UnsupportedGroupError,
)

# rank and kernel dimensions frozen from an independent floating-point SVD
# run, then re-derived here by exact elimination
PRIME_VERDICTS = {
    "C6": (5, 4, 2),
    "C9": (3, 3, 6),
    "C12": (10, 8, 4),
    "C2xC2": (6, 4, 0),
    "C3xC3": (12, 9, 0),
    "C2xC4": (12, 8, 0),
    "D4": (20, 8, 0),
    "D5": (27, 10, 0),
    "Dic2": (4, 4, 4),
    "Dic3": (10, 8, 4),
    "S4": (140, 24, 0),
}

MAXIMAL_VERDICTS = {
    "C12": (1, 1, 11),
    "C4xC2": (12, 8, 0),
    "C6xC6": (72, 36, 0),
}


def test_apply_hand_computed():
    g = groups.make_cyclic(4)
    sys = radon.build_system(g, "prime")
    # single subgroup {0, 2}: cosets {0,2} and {1,3}
    assert len(sys.rows) == 2
    assert radon.apply(sys, (1, 2, 3, 4)) == (4, 6)


def test_apply_rejects_wrong_length():
    sys = radon.build_system(groups.make_cyclic(4), "prime")
    with pytest.raises(DimensionError):
        radon.apply(sys, (1, 2, 3))


def test_build_system_rejects_unknown_variant():
    with pytest.raises(InvalidVariantError):
        radon.build_system(groups.make_cyclic(4), "both")


def test_matrix_entries_are_incidence():
    sys = radon.build_system(groups.make_dihedral(4), "prime")
    for geo, row in zip(sys.rows, sys.matrix):
        assert sum(row) == len(geo.coset)
        assert all(v in (0, 1) for v in row)
        assert all(row[x] == 1 for x in geo.coset)


@pytest.mark.parametrize("name,expected", sorted(PRIME_VERDICTS.items()))
def test_prime_verdicts_frozen(name, expected):
    rows, rank, kdim = expected
    v = radon.is_injective(groups.from_name(name))
    assert (v.rows, v.rank, v.kernel_dim) == (rows, rank, kdim)
    assert v.injective == (kdim == 0)
    assert v.frobenius_complement == (kdim > 0)
    assert v.rank + v.kernel_dim == v.order


@pytest.mark.parametrize("name,expected", sorted(MAXIMAL_VERDICTS.items()))
def test_maximal_verdicts_frozen(name, expected):
    rows, rank, kdim = expected
    v = radon.is_injective(groups.from_name(name), variant="maximal")
    assert (v.rows, v.rank, v.kernel_dim) == (rows, rank, kdim)
    assert v.frobenius_complement is None


def test_method_reflects_certificate_path():
    assert radon.is_injective(groups.from_name("D4")).method == "modular-full-rank"
    assert radon.is_injective(groups.from_name("C6")).method == "exact-elimination"


def test_unconfirmed_mode_flags_method():
    v = radon.is_injective(groups.make_cyclic(6), exact_confirm=False)
    assert v.method == "modular-unconfirmed"
    # a random prime far above the matrix entries still finds the true rank
    assert (v.rank, v.kernel_dim) == (4, 2)


def test_kernel_is_certificate():
    g = groups.make_cyclic(6)
    sys = radon.build_system(g, "prime")
    ker = radon.kernel(sys)
    assert ker.dim == 2
    assert ker.vectors == (
        (1, 0, -1, -1, 0, 1),
        (0, 1, 1, 0, -1, -1),
    )
    for vec in ker.vectors:
        assert not any(radon.apply(sys, vec))


def test_kernel_of_injective_system_is_empty():
    sys = radon.build_system(groups.from_name("C3xC3"), "prime")
    assert radon.kernel(sys).dim == 0


def test_cyclic_witnesses_through_order_36():
    for n in range(2, 37):
        g = groups.make_cyclic(n)
        w = radon.kernel_witness_cyclic(g)
        assert len(w) == n
        assert any(w)
        assert not any(radon.apply(radon.build_system(g, "prime"), w))


def test_cyclic_witness_rejects_noncyclic_and_trivial():
    with pytest.raises(NotCyclicError):
        radon.kernel_witness_cyclic(groups.make_dihedral(3))
    with pytest.raises(NoGeodesicsError):
        radon.kernel_witness_cyclic(groups.make_trivial())


@pytest.mark.parametrize("n1,n2", [(4, 3), (9, 4), (2, 9), (8, 15)])
def test_product_witnesses(n1, n2):
    g1 = groups.make_cyclic(n1)
    g2 = groups.make_cyclic(n2)
    w1 = radon.kernel_witness_cyclic(g1)
    w2 = radon.kernel_witness_cyclic(g2)
    witness, product = radon.kernel_witness_product(w1, w2, g1, g2)
    assert product.order == n1 * n2
    assert any(witness)
    sys = radon.build_system(product, "prime")
    assert not any(radon.apply(sys, witness))


def test_product_witness_needs_coprime_orders():
    g1 = groups.make_cyclic(2)
    g2 = groups.make_cyclic(4)
    w1 = radon.kernel_witness_cyclic(g1)
    w2 = radon.kernel_witness_cyclic(g2)
    with pytest.raises(NotCoprimeError):
        radon.kernel_witness_product(w1, w2, g1, g2)


def test_group_sum_recovered_from_transform():
    g = groups.make_dihedral(4)
    sys = radon.build_system(g, "prime")
    rng = random.Random(7)
    f = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(g.order)]
    values = radon.apply(sys, f)
    assert radon.group_sum_from_radon(sys, values) == sum(f)


def test_group_sum_rejects_flow_systems():
    from coset_radon.flows import constant_flow, flow_radon_system

    sys = flow_radon_system(constant_flow(4))
    with pytest.raises(InvalidVariantError):
        radon.group_sum_from_radon(sys, [0] * len(sys.rows))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_reconstruction_on_elementary_squares(p):
    g = groups.make_direct_product(groups.make_cyclic(p), groups.make_cyclic(p))
    sys = radon.build_system(g, "prime")
    rng = random.Random(100 + p)
    f = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(p * p))
    values = radon.apply(sys, f)
    assert radon.reconstruct_all(sys, values) == f


def test_reconstruction_rejects_other_groups():
    sys = radon.build_system(groups.make_cyclic(6), "prime")
    with pytest.raises(UnsupportedGroupError):
        radon.reconstruct_cpxcp(sys, radon.apply(sys, [0] * 6), 0)
    # order 4 with an element of order 4 is not elementary abelian
    sys4 = radon.build_system(groups.make_cyclic(4), "prime")
    with pytest.raises(UnsupportedGroupError):
        radon.reconstruct_cpxcp(sys4, radon.apply(sys4, [0] * 4), 0)


def test_reconstruction_needs_prime_variant():
    g = groups.make_direct_product(groups.make_cyclic(2), groups.make_cyclic(2))
    sys = radon.build_system(g, "maximal")
    with pytest.raises(InvalidVariantError):
        radon.reconstruct_cpxcp(sys, [0] * len(sys.rows), 0)


def test_bound_strict_for_small_dicyclic():
    for n in range(2, 15):
        chk = radon.dimension_bound_check(groups.make_dicyclic(n))
        assert chk.bound_holds, n
        assert chk.lhs < chk.rhs


def test_bound_equality_at_dicyclic_15():
    chk = radon.dimension_bound_check(groups.make_dicyclic(15))
    assert chk.lhs == chk.rhs == Fraction(31, 30)
    assert not chk.bound_holds
    # the counting argument stalls here, yet the kernel is still present
    assert not radon.is_injective(groups.make_dicyclic(15)).injective


def test_bound_reversed_at_dicyclic_30():
    chk = radon.dimension_bound_check(groups.make_dicyclic(30))
    assert chk.lhs > chk.rhs
    assert not chk.bound_holds
    assert not radon.is_injective(groups.make_dicyclic(30)).injective


def test_bound_equality_klein():
    chk = radon.dimension_bound_check(
        groups.make_direct_product(groups.make_cyclic(2), groups.make_cyclic(2))
    )
    assert chk.lhs == chk.rhs == Fraction(3, 2)
    assert chk.subgroup_count == 3


def _random_functions(order, count, seed):
    rng = random.Random(seed)
    return [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(order)]
        for _ in range(count)
    ]


@pytest.mark.parametrize("name,n", [("C12", 4), ("C12", 6), ("C12", 12), ("D4", 4), ("Dic3", 4)])
def test_composite_consistency(name, n):
    g = groups.from_name(name)
    fns = _random_functions(g.order, 5, seed=n * 1000 + g.order)
    assert radon.composite_consistency(g, n, fns)


def test_composite_consistency_vacuous_without_homomorphisms():
    g = groups.make_cyclic(9)
    assert radon.composite_consistency(g, 4, _random_functions(9, 2, seed=1))


def test_composite_consistency_rejects_prime_length():
    g = groups.make_cyclic(12)
    with pytest.raises(InvalidOrderError):
        radon.composite_consistency(g, 3, [])
    with pytest.raises(InvalidOrderError):
        radon.composite_consistency(g, 5, [])


def test_rank_and_kernel_sum_to_order():
    for name in ("C6", "C9", "D4", "Dic2", "C2xC4", "C6xC6"):
        g = groups.from_name(name)
        for variant in ("prime", "maximal"):
            sys = radon.build_system(g, variant)
            r, kdim, _ = radon.decide_system(sys)
            assert r + kdim == g.order, (name, variant)


@given(
    st.lists(st.integers(min_value=-20, max_value=20), min_size=6, max_size=6),
    st.integers(min_value=-5, max_value=5),
)
@settings(max_examples=40, deadline=None)
def test_kernel_shifts_are_invisible(f, c):
    g = groups.make_cyclic(6)
    sys = radon.build_system(g, "prime")
    ker = radon.kernel(sys)
    shifted = [a + c * b for a, b in zip(f, ker.vectors[0])]
    assert radon.apply(sys, f) == radon.apply(sys, shifted)


@given(st.integers(min_value=2, max_value=20))
@settings(max_examples=19, deadline=None)
def test_cyclic_noninjectivity_is_uniform(n):
    v = radon.is_injective(groups.make_cyclic(n))
    assert not v.injective
    assert v.frobenius_complement
