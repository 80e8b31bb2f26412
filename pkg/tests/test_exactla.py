from fractions import Fraction

from hypothesis import given, settings, strategies as st
import pytest

from coset_radon import exactla


def test_int_echelon_known_rank():
    rows = [
        [1, 2, 3],
        [2, 4, 6],
        [0, 1, 1],
    ]
    pivots, basis = exactla.int_echelon(rows, 3)
    assert pivots == [0, 1]
    assert len(basis) == 2
    # basis rows are gcd-reduced with positive leading entry
    for row in basis:
        lead = next(v for v in row if v)
        assert lead > 0


def test_int_echelon_rejects_ragged_rows():
    with pytest.raises(ValueError):
        exactla.int_echelon([[1, 2], [1]], 2)


def test_rank_exact_stop_rank_short_circuits():
    rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
    assert exactla.rank_exact(rows, 3) == 3
    assert exactla.rank_exact(rows, 3, stop_rank=2) == 2


def test_rank_exact_survives_big_intermediate_entries():
    # Hilbert-like integer rows force heavy cross-multiplication
    rows = [[(i + j + 1) ** 3 for j in range(6)] for i in range(6)]
    # cubes of an arithmetic progression span a 4-dimensional space
    assert exactla.rank_exact(rows, 6) == 4


def test_rational_nullspace_annihilates():
    rows = [
        [1, 1, 1, 1],
        [1, 2, 3, 4],
    ]
    basis = exactla.rational_nullspace(rows, 4)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


def test_rational_nullspace_full_rank_is_empty():
    rows = [[2, 0], [0, 5]]
    assert exactla.rational_nullspace(rows, 2) == []


def test_rational_nullspace_is_rref():
    rows = [[1, 1, 1, 1, 1, 1]]
    basis = exactla.rational_nullspace(rows, 6)
    assert len(basis) == 5
    # leading ones in strictly increasing columns, zeros above each pivot
    leads = []
    for vec in basis:
        lead = next(j for j, v in enumerate(vec) if v)
        assert vec[lead] == 1
        leads.append(lead)
    assert leads == sorted(leads)
    for i, vec in enumerate(basis):
        for other in basis[:i]:
            assert other[leads[i]] == 0


def test_field_rref_fraction_matrix():
    rows = [
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(1, 4), Fraction(1, 6)],
    ]
    rref, pivots = exactla.field_rref(rows)
    assert pivots == [0]
    assert rref[0][0] == 1
    assert rref[0][1] == Fraction(2, 3)


def test_field_nullspace_matches_rational_path():
    rows = [[1, 2, 0], [0, 0, 1]]
    frac_rows = [[Fraction(v) for v in r] for r in rows]
    out = exactla.field_nullspace(frac_rows, 3, Fraction(0), Fraction(1))
    assert len(out) == 1
    assert out[0] == [Fraction(-2), Fraction(1), Fraction(0)]


def test_prime_helpers():
    assert [n for n in range(20) if exactla.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert exactla.next_prime(13) == 17
    assert exactla.next_prime(1) == 2
    assert exactla.check_primes(100, count=3) == [101, 103, 107]


def test_prime_divisors():
    assert exactla.prime_divisors(1) == []
    assert exactla.prime_divisors(2) == [2]
    assert exactla.prime_divisors(360) == [2, 3, 5]
    assert exactla.prime_divisors(97) == [97]


def test_rank_mod_agrees_on_generic_matrix():
    rows = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    for p in (101, 103):
        assert exactla.rank_mod(rows, 3, p) == 3
    assert exactla.rank_exact(rows, 3) == 3


def test_rank_mod_can_undercount():
    # the determinant is exactly 101, so that prime lies about the rank
    rows = [[101, 0], [0, 1]]
    assert exactla.rank_exact(rows, 2) == 2
    assert exactla.rank_mod(rows, 2, 101) == 1
    assert exactla.rank_mod(rows, 2, 103) == 2


def test_rank_mod_empty_matrix():
    assert exactla.rank_mod([], 4, 101) == 0


@given(
    st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=4, max_size=4),
        min_size=1,
        max_size=6,
    )
)
@settings(max_examples=60, deadline=None)
def test_modular_rank_never_exceeds_exact(rows):
    exact = exactla.rank_exact(rows, 4)
    for p in exactla.check_primes(64, count=2):
        assert exactla.rank_mod(rows, 4, p) <= exact


@given(
    st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=3, max_size=3),
        min_size=1,
        max_size=5,
    )
)
@settings(max_examples=60, deadline=None)
def test_rank_plus_nullity(rows):
    rank = exactla.rank_exact(rows, 3)
    kernel = exactla.rational_nullspace(rows, 3)
    assert rank + len(kernel) == 3
    for vec in kernel:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0
