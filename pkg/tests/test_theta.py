"""Theta families: tables, identities, composition laws, Hecke action."""

import random
from math import isqrt

import pytest

from heckemod2.series import F2Series, delta, delta_pow, hecke
from heckemod2.theta import (CompositionLaw, NoRepresentation, ThetaIndex,
                             representable_mask, t_of_prime, theta_coords,
                             theta_series, verify_composition_group,
                             verify_hecke_on_theta,
                             verify_kernel_characterization,
                             verify_span_equality, verify_theta_identities)

THETA_TABLE_C2 = {
    (0, 1): (1,), (1, 1): (),
    (0, 2): (1,), (1, 2): (3,), (2, 2): (),
    (0, 3): (1,), (1, 3): (3, 11), (2, 3): (9,), (3, 3): (11,), (4, 3): (),
}
THETA_TABLE_C4 = {
    (0, 1): (1,), (1, 1): (),
    (0, 2): (1,), (1, 2): (5,), (2, 2): (),
    (0, 3): (1,), (1, 3): (5, 13, 21), (2, 3): (17,), (3, 3): (13, 21),
    (4, 3): (),
}


def theta_oracle(t, n, c, precision):
    """Parity of lattice-point counts, by unstructured enumeration."""
    modulus = 1 << n
    counts = {}
    for a in range(1, isqrt(precision) + 1, 2):
        for b in range(-precision, precision + 1):
            e = a * a + c * b * b
            if e <= precision and (b - t * a) % modulus == 0:
                counts[e] = counts.get(e, 0) ^ 1
    return F2Series.from_exponents([e for e, v in counts.items() if v], precision)


def test_theta_matches_oracle():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(0, 4)
        t = rng.randrange(1 << n)
        c = rng.choice((2, 4))
        assert theta_series(t, n, c, 150) == theta_oracle(t, n, c, 150)


def test_theta_tables_match_published_values():
    for (t, n), want in THETA_TABLE_C2.items():
        assert theta_coords(t, n, 2, 16).support_exponents() == want, (t, n)
    for (t, n), want in THETA_TABLE_C4.items():
        assert theta_coords(t, n, 4, 16).support_exponents() == want, (t, n)


def test_theta_zero_index_is_delta():
    for n in range(1, 7):
        for c in (2, 4):
            assert theta_series(0, n, c, 2000) == delta(2000)


def test_theta_identities():
    for n in range(1, 5):
        for c in (2, 4):
            assert verify_theta_identities(n, c, 1024), (n, c)


def test_theta_special_values():
    # index 2^(n-2) collapses to a single delta power
    for n in range(2, 6):
        e2 = 1 + (1 << (2 * n - 3))
        assert theta_series(1 << (n - 2), n, 2, 4096) == delta_pow(e2, 4096)
        e4 = 1 + (1 << (2 * n - 2))
        assert theta_series(1 << (n - 2), n, 4, 4096) == delta_pow(e4, 4096)


def test_theta_index_normalization():
    idx = ThetaIndex(6, 3, 2)
    assert idx.canonical() == ThetaIndex(2, 3, 2)
    assert ThetaIndex(0, 1, 2).canonical().t == 0
    with pytest.raises(ValueError):
        ThetaIndex(8, 3, 2)
    with pytest.raises(ValueError):
        ThetaIndex(0, 1, 3)


# -- composition law -----------------------------------------------------------


def test_compose_examples():
    law = CompositionLaw(2, 2)
    assert law.compose(1, 1) == 2  # 2/(1-2) = -2 = 2 mod 4
    for t in range(4):
        assert law.compose(0, t) == t
        assert law.compose(t, law.inverse(t)) == 0


def test_compose_associativity_brute_force():
    for n in (1, 2, 3, 4):
        for c in (2, 4):
            law = CompositionLaw(n, c)
            m = law.modulus
            for x in range(m):
                for y in range(m):
                    for z in range(m):
                        assert law.compose(law.compose(x, y), z) == \
                            law.compose(x, law.compose(y, z))


def test_generator_has_full_order():
    for n in range(1, 7):
        for c in (2, 4):
            law = CompositionLaw(n, c)
            seen, cur = set(), 0
            for _ in range(law.modulus):
                cur = law.compose(cur, 1)
                seen.add(cur)
            assert cur == 0 and len(seen) == law.modulus


def test_verify_composition_group():
    for n in range(1, 9):
        for c in (2, 4):
            assert verify_composition_group(n, c), (n, c)


# -- translation parameters --------------------------------------------------------


def test_t_of_prime_examples():
    assert t_of_prime(3, 2, 2) == 1            # 3 = 1 + 2
    assert t_of_prime(17, 3, 2) == 2           # 17 = 9 + 8, t = 2/3 = 6 = -2 mod 8
    assert t_of_prime(5, 2, 4) == 1            # 5 = 1 + 4
    assert t_of_prime(17, 2, 4) == 2           # 17 = 1 + 4*4, t = 2/1 mod 4


def test_t_of_prime_17_representations():
    # 17 = 3^2 + 2*2^2 is the only a^2+2b^2 shape; 17 = 1 + 4*2^2 for c=4
    assert t_of_prime(17, 3, 2) in (2, 6)  # canonical is min(6, 2)
    assert t_of_prime(17, 3, 4) == 2       # t = 2/1 mod 8


def test_t_of_prime_wrong_class_raises():
    with pytest.raises(NoRepresentation):
        t_of_prime(5, 2, 2)   # 5 = 5 mod 8
    with pytest.raises(NoRepresentation):
        t_of_prime(3, 2, 4)   # 3 = 3 mod 8
    with pytest.raises(ValueError):
        t_of_prime(9, 2, 2)


# -- Hecke action -------------------------------------------------------------------


def test_hecke_theta_worked_example():
    # T_3 theta_{1,2} = theta_{1*1} + theta_{1*(-1)} = theta_2 + theta_0 = delta
    lhs = hecke(3, theta_series(1, 2, 2, 3 * 400))
    assert lhs == delta(400)
    law = CompositionLaw(2, 2)
    assert law.compose(1, 1) == 2 and law.compose(1, 3) == 0


def test_inert_primes_kill_family():
    for c, primes in ((2, (5, 7, 13, 23)), (4, (3, 7, 11, 19))):
        for p in primes:
            for n in (1, 2, 3):
                for t in range(1 << (n - 1)):
                    assert hecke(p, theta_series(t, n, c, p * 128)).is_zero


def test_verify_hecke_on_theta_split_primes():
    for p, c in ((3, 2), (11, 2), (17, 2), (17, 4), (5, 4), (13, 4)):
        for n in (1, 2, 3):
            assert verify_hecke_on_theta(p, n, c, 128), (p, n, c)


def test_special_relation():
    for n in (1, 2, 3):
        for p in (3, 11, 17):
            tp = t_of_prime(p, n, 2)
            lhs = theta_series(((1 << (n - 1)) - tp) % (1 << n), n, 2, 256)
            rhs = hecke(p, delta_pow(1 + (1 << (2 * n - 1)), p * 256))
            assert lhs == rhs, (n, p, 2)
        for p in (5, 13, 17):
            tp = t_of_prime(p, n, 4)
            lhs = theta_series(((1 << (n - 1)) - tp) % (1 << n), n, 4, 256)
            rhs = hecke(p, delta_pow(1 + (1 << (2 * n)), p * 256))
            assert lhs == rhs, (n, p, 4)


# -- spans and kernels -----------------------------------------------------------------


def test_span_equalities(mtable):
    for n in (1, 2, 3, 4):
        assert verify_span_equality(n, 2, mtable), n
    for n in (1, 2, 3):
        assert verify_span_equality(n, 4, mtable), n


def test_span_example_level_2(mtable):
    # theta family at n=2 spans {delta, delta^3} = span{m(0,0), m(1,0)}
    coords = {theta_coords(t, 2, 2, 8).coords for t in range(3)}
    assert coords == {0b0, 0b1, 0b10}


def test_representable_mask_small():
    mask2 = representable_mask(2, 40)
    want2 = {a * a + 2 * b * b for a in range(7) for b in range(5)
             if a * a + 2 * b * b <= 40}
    assert {e for e in range(41) if (mask2 >> e) & 1} == want2
    mask4 = representable_mask(4, 40)
    want4 = {a * a + b * b for a in range(7) for b in range(7)
             if a * a + b * b <= 40}
    assert {e for e in range(41) if (mask4 >> e) & 1} == want4


def test_kernel_characterization(mtable):
    for c in (2, 4):
        assert verify_kernel_characterization(4, c, 1024, mtable)
        assert verify_kernel_characterization(8, c, 1024, mtable)


def test_theta_support_representable():
    # condition 3: the q-support of any kernel element is representable
    for t in range(4):
        supp = theta_series(t, 3, 2, 800).support()
        mask = representable_mask(2, 800)
        assert all((mask >> e) & 1 for e in supp)
