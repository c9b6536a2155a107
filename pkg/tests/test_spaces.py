"""Filtration levels, Hecke matrices, algebra and commutant dimensions."""

import pytest

from heckemod2.gf2 import GF2Matrix, rank
from heckemod2.series import F2Series, PrecisionError, delta, delta_pow, hecke
from heckemod2.spaces import (AlgebraSpan, DeltaCoords, NotInSpan,
                              algebra_dimension, check_divisibility,
                              commutant_dimension, expand_in_delta_basis,
                              hecke_matrix, kernel, nilpotency_index)

# -- delta-basis expansion ----------------------------------------------------


def test_expand_examples():
    assert expand_in_delta_basis(delta(9), 1).coords == 1
    f = delta(31) + delta_pow(3, 31)
    assert expand_in_delta_basis(f, 2).coords == 0b11
    assert expand_in_delta_basis(f, 5).coords == 0b11  # higher level, same coords


def test_expand_rejects_even_leading_exponent():
    f = F2Series.from_exponents([2, 5], 20)
    with pytest.raises(NotInSpan, match="even leading exponent"):
        expand_in_delta_basis(f, 8)


def test_expand_rejects_exponent_beyond_level():
    with pytest.raises(NotInSpan, match="exceeds"):
        expand_in_delta_basis(delta_pow(7, 21), 2)


def test_expand_requires_precision():
    with pytest.raises(PrecisionError):
        expand_in_delta_basis(delta(5), 4)


def test_expand_roundtrip():
    for coords in (0b1, 0b1011, 0b11111, 0b10000001):
        f = DeltaCoords(coords, 8).to_series(63)
        assert expand_in_delta_basis(f, 8).coords == coords


def test_leading_and_dominant_exponent():
    el = DeltaCoords(0b1010, 5)
    assert el.support_exponents() == (3, 7)
    assert el.leading_exponent() == 3
    assert el.dominant_exponent() == 7
    assert DeltaCoords(0, 3).leading_exponent() is None


# -- Hecke matrices --------------------------------------------------------------


def test_hecke_matrix_examples():
    m = hecke_matrix(3, 2)
    assert m.rows == (0b10, 0)  # delta^3 -> delta, delta -> 0
    assert hecke_matrix(5, 2).is_zero
    m53 = hecke_matrix(5, 3)
    assert m53.apply(0b100) == 0b001  # delta^5 -> delta
    assert m53.apply(0b011) == 0


def test_hecke_matrix_rejects_bad_prime():
    with pytest.raises(ValueError):
        hecke_matrix(2, 4)
    with pytest.raises(ValueError):
        hecke_matrix(9, 4)


def test_matrix_action_matches_series_action():
    for p in (3, 5, 7, 13):
        n = 12
        m = hecke_matrix(p, n)
        for coords in (0b1, 0b100000000001, 0b101010101010):
            f = DeltaCoords(coords, n).to_series(p * (2 * n - 1))
            via_series = expand_in_delta_basis(hecke(p, f), n).coords
            assert m.apply(coords) == via_series


def test_strict_triangularity():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
              61, 67, 71, 73, 79, 83, 89, 97):
        m = hecke_matrix(p, 24)
        for i in range(24):
            assert m.rows[i] & ((1 << (i + 1)) - 1) == 0  # only higher columns


def test_levels_nest():
    big = hecke_matrix(7, 32)
    for n in (1, 2, 5, 12, 31):
        small = hecke_matrix(7, n)
        mask = (1 << n) - 1
        assert all(small.rows[i] == big.rows[i] & mask for i in range(n))


# -- algebra dimension -------------------------------------------------------------


def test_algebra_dimension_examples():
    assert algebra_dimension(1, (3, 5)) == 1
    assert algebra_dimension(2, (3, 5)) == 2
    assert algebra_dimension(40, (3, 5)) == 40


def test_algebra_closure_explicit_level_2():
    # at level 2 the algebra is spanned by I and the T_3 nilpotent block
    span = AlgebraSpan(2, (3, 5))
    assert span.dimension == 2
    assert span.contains(GF2Matrix.identity(2))
    assert span.contains(hecke_matrix(3, 2))
    assert span.contains(hecke_matrix(5, 2))  # zero matrix
    assert not span.contains(GF2Matrix([0b01, 0b00], 2))


def test_extra_generators_add_nothing():
    for n in (5, 17, 33):
        span = AlgebraSpan(n, (3, 5))
        assert span.dimension == n
        for p in (7, 11, 13, 17, 19, 23, 29, 31):
            assert span.contains(hecke_matrix(p, n))


def test_other_generator_pairs():
    for n in (4, 9, 16):
        for p in (3, 11, 19):
            for q in (5, 13, 29, 37):
                assert algebra_dimension(n, (p, q)) == n


def test_algebra_requires_generators():
    with pytest.raises(ValueError):
        algebra_dimension(4, ())


# -- commutant ----------------------------------------------------------------------


def test_commutant_examples():
    assert commutant_dimension(1) == 1
    assert commutant_dimension(2) == 2


def test_commutant_level_2_brute_force():
    t3, t5 = hecke_matrix(3, 2), hecke_matrix(5, 2)
    count = 0
    for bits in range(16):
        x = GF2Matrix([bits & 3, bits >> 2], 2)
        if x.mul(t3) == t3.mul(x) and x.mul(t5) == t5.mul(x):
            count += 1
    assert count == 1 << commutant_dimension(2)


def test_commutant_matches_algebra_dimension():
    for n in range(1, 13):
        assert commutant_dimension(n) == algebra_dimension(n, (3, 5)) == n


# -- nilpotency ----------------------------------------------------------------------


def test_nilpotency_examples():
    assert nilpotency_index(GF2Matrix.zero(3)) == 1
    assert nilpotency_index(hecke_matrix(3, 2)) == 2
    for n in (4, 16, 64):
        assert nilpotency_index(hecke_matrix(3, n)) <= n


def test_nilpotency_rejects_identity():
    with pytest.raises(ValueError):
        nilpotency_index(GF2Matrix.identity(4))


# -- divisibility -----------------------------------------------------------------------


def test_divisibility_unit():
    assert check_divisibility({(0, 0)}, 3, 3)


def test_divisibility_by_x_from_level_1():
    assert check_divisibility({(1, 0)}, 1, 2)


def test_divisibility_minimal_levels_from_level_3():
    # minimal levels computed by raising big_n until the rank test passes
    minima = {}
    for label, u in (("x", {(1, 0)}), ("y", {(0, 1)}),
                     ("x+y", {(1, 0), (0, 1)}),
                     ("x+y+xy", {(1, 0), (0, 1), (1, 1)})):
        minima[label] = next(m for m in range(3, 65)
                             if check_divisibility(u, 3, m))
    assert minima == {"x": 5, "y": 9, "x+y": 5, "x+y+xy": 5}


def test_divisibility_rejects_zero_polynomial():
    with pytest.raises(ValueError):
        check_divisibility(set(), 2, 4)


# -- kernels ---------------------------------------------------------------------------


def test_kernel_of_t5_at_level_2_is_everything():
    assert len(kernel(hecke_matrix(5, 2))) == 2


def test_delta5_not_in_kernel_of_t5():
    m = hecke_matrix(5, 3)
    assert m.apply(0b100) != 0


def test_kernel_equality_within_residue_class():
    for n in (6, 16):
        t3_rows = hecke_matrix(3, n).rows
        for p in (11, 19, 43):
            rows = hecke_matrix(p, n).rows
            assert rank(rows) == rank(t3_rows) == rank(list(rows) + list(t3_rows))
        t5_rows = hecke_matrix(5, n).rows
        for p in (13, 29, 37):
            rows = hecke_matrix(p, n).rows
            assert rank(rows) == rank(t5_rows) == rank(list(rows) + list(t5_rows))
