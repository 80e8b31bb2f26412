import pytest
from hypothesis import given, settings, strategies as st

from coset_radon import groups
from coset_radon.errors import (
    AssociativityError,
    GroupSpecError,
    GroupValidationError,
    InvalidOrderError,
    MissingIdentityError,
    NotAbelianError,
    NotAutomorphismError,
    NotNormalError,
    NotSubgroupError,
    SizeLimitError,
)


def test_cyclic_orders():
    g = groups.make_cyclic(6)
    assert g.order == 6
    assert g.elt_order == (1, 6, 3, 2, 3, 6)


def test_cyclic_rejects_nonpositive():
    with pytest.raises(InvalidOrderError):
        groups.make_cyclic(0)


def test_trivial_group():
    g = groups.make_trivial()
    assert g.order == 1
    assert g.mul == ((0,),)


def test_dihedral_structure():
    d4 = groups.make_dihedral(4)
    assert d4.order == 8
    # reflections are the ids n..2n-1 and square to the identity
    for k in range(4, 8):
        assert d4.mul[k][k] == 0
    assert not groups.is_abelian(d4)
    assert groups.is_abelian(groups.make_dihedral(2))


def test_dihedral_degenerate_cases():
    assert groups.make_dihedral(1).order == 2
    d2 = groups.make_dihedral(2)
    assert sorted(d2.elt_order) == [1, 2, 2, 2]


def test_dicyclic_presentation_relations():
    """a^{2n} = e, b^2 = a^n, and ab = ba^{-1} in the id encoding."""
    for n in (2, 3, 5):
        g = groups.make_dicyclic(n)
        a, b = 1, 2 * n
        assert g.power(a, 2 * n) == 0
        assert g.mul[b][b] == g.power(a, n)
        assert g.mul[a][b] == g.mul[b][g.inverse(a)]


def test_dicyclic_order_profile():
    q8 = groups.make_dicyclic(2)
    assert sorted(q8.elt_order) == [1, 2, 4, 4, 4, 4, 4, 4]
    # outside the cyclic half every element has order four
    dic6 = groups.make_dicyclic(6)
    assert all(dic6.order_of(x) == 4 for x in range(12, 24))


def test_symmetric_and_alternating():
    s4 = groups.make_symmetric(4)
    a4 = groups.make_alternating(4)
    assert s4.order == 24
    assert a4.order == 12
    assert groups.make_alternating(2).order == 1
    assert groups.make_alternating(3).order == 3


def test_symmetric_cap_applies_before_building(monkeypatch):
    monkeypatch.setenv("COSET_RADON_MAX_ORDER", "100")
    with pytest.raises(SizeLimitError):
        groups.make_symmetric(5)


def test_direct_product_orders_multiply():
    g = groups.make_direct_product(groups.make_cyclic(3), groups.make_cyclic(4))
    assert g.order == 12
    assert groups.is_cyclic(g)  # coprime factors


def test_from_cayley_table_relabels_identity():
    # identity sits at position 1 in this C2 copy
    t = [[1, 0], [0, 1]]
    g = groups.from_cayley_table(t)
    assert g.mul[0][0] == 0
    assert g.order == 2


def test_from_cayley_table_rejects_magma():
    # repeated rows break the latin property before anything else is checked
    with pytest.raises(GroupValidationError):
        groups.from_cayley_table([[1, 0], [1, 0]])


def test_from_cayley_table_rejects_identityless_latin_square():
    # subtraction mod 3: latin, 0 is a right identity but nothing is two-sided
    t = [[(i - j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(MissingIdentityError):
        groups.from_cayley_table(t)


def test_nonassociative_loop_rejected():
    # a loop: identity 0, every element self-inverse, rows and columns
    # permutations, yet (1*1)*2 = 2 while 1*(1*2) = 4
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    # self-check that the counterexample is genuine before asserting the raise
    def mul(a, b):
        return t[a][b]

    assert all(t[a][a] == 0 for a in range(5))
    assert mul(mul(1, 1), 2) != mul(1, mul(1, 2))
    with pytest.raises(AssociativityError):
        groups.from_cayley_table(t)


def test_semidirect_validates_action():
    c7 = groups.make_cyclic(7)
    c3 = groups.make_cyclic(3)
    action = [[(pow(2, k, 7) * x) % 7 for x in range(7)] for k in range(3)]
    g = groups.make_semidirect(c7, c3, action)
    assert g.order == 21
    assert not groups.is_abelian(g)

    bad = [list(range(7)) for _ in range(3)]
    bad[1] = [0, 2, 1, 3, 4, 5, 6]  # swaps 1 and 2: not an automorphism of C7
    with pytest.raises(NotAutomorphismError):
        groups.make_semidirect(c7, c3, bad)


def test_subgroup_helpers():
    g = groups.make_cyclic(12)
    sub = groups.cyclic_subgroup(g, 4)
    assert sub.elements == (0, 4, 8)
    cosets = groups.left_cosets(g, sub)
    assert len(cosets) == 4
    assert all(len(c) == 3 for c in cosets)
    with pytest.raises(NotSubgroupError):
        groups.subgroup_from_elements(g, [0, 1, 2])


def test_quotient_of_dihedral_by_rotations():
    d4 = groups.make_dihedral(4)
    rot = groups.subgroup_from_elements(d4, [0, 1, 2, 3])
    q = groups.quotient(d4, rot)
    assert q.order == 2


def test_quotient_requires_normality():
    d4 = groups.make_dihedral(4)
    refl = groups.subgroup_from_elements(d4, [0, 4])
    assert groups.is_normal(d4, refl) is not None
    with pytest.raises(NotNormalError):
        groups.quotient(d4, refl)


def test_invariant_factors():
    g = groups.make_direct_product(groups.make_cyclic(2), groups.make_cyclic(4))
    assert groups.invariant_factors(g) == [2, 4]
    g2 = groups.make_direct_product(groups.make_cyclic(6), groups.make_cyclic(6))
    assert groups.invariant_factors(g2) == [6, 6]
    assert groups.invariant_factors(groups.make_cyclic(6)) == [6]
    with pytest.raises(NotAbelianError):
        groups.invariant_factors(groups.make_dihedral(3))


def test_invariant_factors_divisibility_chain():
    cases = [
        [2, 2, 3],  # C2 x C2 x C3 -> [2, 6]
        [4, 6],  # -> [2, 12]
        [8, 2, 2],
    ]
    for factors in cases:
        g = groups.make_cyclic(factors[0])
        for m in factors[1:]:
            g = groups.make_direct_product(g, groups.make_cyclic(m))
        out = groups.invariant_factors(g)
        assert all(out[i + 1] % out[i] == 0 for i in range(len(out) - 1))
        prod = 1
        for d in out:
            prod *= d
        assert prod == g.order


def test_from_name_grammar():
    assert groups.from_name("C6").order == 6
    assert groups.from_name("C2xC3").order == 6
    assert groups.is_cyclic(groups.from_name("C2xC3"))
    assert groups.from_name("Dic2").order == 8
    assert groups.from_name("S4").order == 24
    assert groups.from_name("D3xC2").order == 12
    for bad in ("", "C", "x", "C2x", "Q8", "c6"):
        with pytest.raises(GroupSpecError):
            groups.from_name(bad)


def test_order_cap_env_override(monkeypatch):
    monkeypatch.setenv("COSET_RADON_MAX_ORDER", "10")
    with pytest.raises(SizeLimitError):
        groups.make_cyclic(11)
    monkeypatch.delenv("COSET_RADON_MAX_ORDER")
    assert groups.make_cyclic(11).order == 11


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=30))
def test_cyclic_inverse_and_power_laws(n):
    g = groups.make_cyclic(n)
    for x in range(n):
        assert g.mul[x][g.inverse(x)] == 0
        assert g.power(x, n) == 0
        assert g.power(x, -1) == g.inverse(x)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=2, max_value=8))
def test_product_element_orders_are_lcms(na, nb):
    a = groups.make_cyclic(na)
    b = groups.make_cyclic(nb)
    g = groups.make_direct_product(a, b)
    for i1 in range(na):
        for i2 in range(nb):
            o1, o2 = a.elt_order[i1], b.elt_order[i2]
            lcm = o1 * o2 // __import__("math").gcd(o1, o2)
            assert g.elt_order[i1 * nb + i2] == lcm


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=3, max_value=10))
def test_dihedral_conjugation_inverts_rotations(n):
    g = groups.make_dihedral(n)
    s = n  # a reflection
    for k in range(n):
        assert g.conjugate(s, k) == g.inverse(k)
