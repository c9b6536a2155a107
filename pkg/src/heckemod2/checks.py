"""Named verification checks behind the CLI `verify` command and the
acceptance test suite.

Each check re-derives one theorem-level statement at finite truncation and
returns a CheckResult; the frozen tables here are the published example
values the computations must reproduce.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .gf2 import GF2Matrix, LinearSolver, rank
from .mbasis import MBasis
from .primes import odd_prime_factors, odd_primes
from .series import F2Series, delta_pow, hecke
from .spaces import (AlgebraSpan, DeltaCoords, check_divisibility,
                     commutant_dimension, hecke_matrix, nilpotency_index)
from .theta import (CompositionLaw, t_of_prime, theta_coords, theta_series,
                    verify_composition_group, verify_hecke_on_theta,
                    verify_kernel_characterization, verify_span_equality,
                    verify_theta_identities)

# m(a,b) for a+b <= 3, as delta-basis exponent supports
M_TABLE_SMALL = {
    (0, 0): (1,), (1, 0): (3,), (0, 1): (5,),
    (2, 0): (9,), (1, 1): (7,), (0, 2): (17,),
    (3, 0): (11,), (2, 1): (13,), (1, 2): (11, 19), (0, 3): (13, 21),
}

# published prefixes of T_p as series in x = T_3, y = T_5, complete through
# the listed total degree
TP_PRINTED = {
    7: ({(1, 1), (3, 1), (5, 1), (3, 3), (1, 7), (7, 3), (1, 9), (11, 1),
         (9, 3), (7, 5), (13, 1), (5, 9), (3, 11)}, 14),
    11: ({(1, 0), (3, 0), (1, 2), (5, 0), (3, 2), (1, 4), (3, 4), (1, 6),
          (7, 2), (9, 2), (7, 4), (3, 8), (1, 10), (11, 2)}, 13),
    13: ({(0, 1), (2, 1), (0, 3), (4, 1), (0, 5), (6, 1), (4, 3), (2, 5),
          (6, 3), (2, 7), (0, 9), (10, 1), (8, 3), (6, 5), (0, 11)}, 11),
    17: ({(2, 0), (0, 2), (2, 2), (6, 0), (4, 2), (0, 6), (6, 2), (4, 4),
          (2, 6), (10, 0), (10, 2), (6, 6), (4, 8), (2, 10)}, 12),
}

# theta tables for n <= 3, as delta-basis exponent supports, keyed by
# (t, n); empty support means the zero series
THETA_TABLE = {
    2: {(0, 1): (1,), (1, 1): (),
        (0, 2): (1,), (1, 2): (3,), (2, 2): (),
        (0, 3): (1,), (1, 3): (3, 11), (2, 3): (9,), (3, 3): (11,), (4, 3): ()},
    4: {(0, 1): (1,), (1, 1): (),
        (0, 2): (1,), (1, 2): (5,), (2, 2): (),
        (0, 3): (1,), (1, 3): (5, 13, 21), (2, 3): (17,), (3, 3): (13, 21),
        (4, 3): ()},
}

SPECIAL_RELATION_PRIMES = {2: (3, 11, 17), 4: (5, 13, 17)}


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""
    seconds: float = field(default=0.0, repr=False)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.details}]" if self.details else ""
        return f"{status}  {self.name}{extra}  ({self.seconds:.1f}s)"


def _timed(fn):
    def wrapper(*args, **kwargs) -> CheckResult:
        t0 = time.time()
        result = fn(*args, **kwargs)
        result.seconds = time.time() - t0
        return result

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


_shared_table: MBasis | None = None


def shared_table() -> MBasis:
    global _shared_table
    if _shared_table is None:
        _shared_table = MBasis(start_level=64)
    return _shared_table


# -- m-basis ---------------------------------------------------------------

@_timed
def check_m_table(table: MBasis | None = None) -> CheckResult:
    """m(a,b) for a+b <= 3 matches the published table, and the explicit
    power families hold for r <= 3."""
    table = table or shared_table()
    bad = []
    for (a, b), want in M_TABLE_SMALL.items():
        got = table.element(a, b).support_exponents()
        if got != want:
            bad.append(f"m({a},{b})={got}!={want}")
    for r in range(4):
        tests = [
            ((2 ** r, 0), (1 + 2 ** (2 * r + 1),)),
            ((2 ** r - 1, 0), ((1 + 2 ** (2 * r + 1)) // 3,)),
            ((0, 2 ** r), (1 + 2 ** (2 * r + 2),)),
        ]
        for (a, b), want in tests:
            got = table.element(a, b).support_exponents()
            if got != want:
                bad.append(f"m({a},{b})={got}!={want}")
    return CheckResult(
        "m-table", not bad,
        "; ".join(bad) if bad else
        f"{len(M_TABLE_SMALL)} tabulated entries + power families r<=3",
    )


@_timed
def check_structure_suite(table: MBasis | None = None) -> CheckResult:
    """Shift action and uniqueness of the m-basis up to degree 6, duality
    roundtrip on random elements, leading-exponent pairing witnesses, and
    divisibility of the module."""
    table = table or shared_table()
    bad = []

    # shift action verified on q-expansions, not by construction
    table.ensure_degree(6)
    cmp_prec = table.precision // 5
    for d in range(7):
        for a in range(d + 1):
            b = d - a
            if max(table.dominant_exponent(a, b), 1) > cmp_prec:
                bad.append(f"precision too small to compare m({a},{b})")
                continue
            s3 = hecke(3, table.series(a, b, 3 * cmp_prec))
            want3 = (table.series(a - 1, b, cmp_prec) if a else
                     F2Series(0, cmp_prec))
            if s3 != want3:
                bad.append(f"T3 shift fails at ({a},{b})")
            s5 = hecke(5, table.series(a, b, 5 * cmp_prec))
            want5 = (table.series(a, b - 1, cmp_prec) if b else
                     F2Series(0, cmp_prec))
            if s5 != want5:
                bad.append(f"T5 shift fails at ({a},{b})")

    # uniqueness: the stacked system has trivial kernel
    for n in (8, 16, table.level):
        t3, t5 = hecke_matrix(3, n), hecke_matrix(5, n)
        solver = LinearSolver(list(t3.rows) + list(t5.rows) + [1], n)
        if solver.kernel_dimension != 0:
            bad.append(f"stacked kernel nontrivial at level {n}")

    # duality roundtrip on 100 random elements of the level-16 space
    rng = random.Random(0x5eed)
    for _ in range(100):
        coords = rng.randrange(1, 1 << 16)
        f = DeltaCoords(coords, 16)
        back = table.recompose(table.coefficients(f))
        if back.coords != coords:
            bad.append(f"duality roundtrip fails for coords {coords:#x}")
            break

    # pairing witness: factor the leading exponent, apply those T_p, land
    # on q^1 coefficient 1 -- for every nonzero element of the level-8 space
    mats = {p: hecke_matrix(p, 8) for p in (3, 5, 7, 11, 13)}
    for coords in range(1, 1 << 8):
        m = 2 * ((coords & -coords).bit_length() - 1) + 1
        v = coords
        for p in odd_prime_factors(m):
            v = mats[p].apply(v)
        if v & 1 != 1:
            bad.append(f"pairing witness fails for coords {coords:#x}")
            break

    # same statement on all 65535 nonzero elements of the level-16 space,
    # reading only the q^1 functional of each witness operator
    mats16 = {p: hecke_matrix(p, 16) for p in (3, 5, 7, 11, 13, 17, 19, 23,
                                               29, 31)}
    functionals = {}
    for low in range(16):
        m = 2 * low + 1
        op_rows = GF2Matrix.identity(16)
        for p in odd_prime_factors(m):
            op_rows = mats16[p].mul(op_rows)
        functionals[low] = op_rows.rows[0]
    for coords in range(1, 1 << 16):
        row = functionals[(coords & -coords).bit_length() - 1]
        if (row & coords).bit_count() & 1 != 1:
            bad.append(f"pairing witness fails for coords {coords:#x} (level 16)")
            break

    # divisibility: preimages of the level-3 space under u(T_3, T_5)
    found = []
    for label, u in (("x", {(1, 0)}), ("y", {(0, 1)}),
                     ("x+y", {(1, 0), (0, 1)}),
                     ("x+y+xy", {(1, 0), (0, 1), (1, 1)})):
        minimal = next(
            (m for m in range(3, 65) if check_divisibility(u, 3, m)), None)
        if minimal is None:
            bad.append(f"divisibility by {label} not attained below level 65")
        else:
            found.append(f"{label}:N={minimal}")
    return CheckResult(
        "m-basis-structure", not bad,
        "; ".join(bad) if bad else
        "shift+uniqueness deg<=6; 100 roundtrips; witnesses on all of "
        "levels 8 and 16; " + " ".join(found),
    )


@_timed
def check_dominant_exponents(table: MBasis | None = None) -> CheckResult:
    """The largest delta exponent of m(a,b) is an odd integer whose code
    is (a,b), for a+b <= 6."""
    table = table or shared_table()
    table.ensure_degree(6)
    bad = []
    for d in range(7):
        for a in range(d + 1):
            b = d - a
            k = table.dominant_exponent(a, b)
            if table.code_of(k) != (a, b):
                bad.append(f"code({k}) != ({a},{b})")
            if table.nilpotence_order(table.element(a, b)) != a + b + 1:
                bad.append(f"nilpotence of m({a},{b}) != {a + b + 1}")
    return CheckResult(
        "dominant-exponents", not bad,
        "; ".join(bad) if bad else "codes and nilpotence orders, a+b<=6")


# -- Hecke algebra ----------------------------------------------------------

@_timed
def check_algebra_dimension(max_level: int = 64) -> CheckResult:
    """The unital algebra generated by T_3 and T_5 on the level-n space has
    dimension exactly n, and every T_p with p <= 31 already lies in it."""
    extra = [p for p in odd_primes(31) if p not in (3, 5)]
    bad = []
    for n in range(1, max_level + 1):
        span = AlgebraSpan(n, (3, 5))
        if span.dimension != n:
            bad.append(f"dim at level {n} = {span.dimension}")
            continue
        for p in extra:
            if not span.contains(hecke_matrix(p, n)):
                bad.append(f"T_{p} outside the T_3,T_5 algebra at level {n}")
    return CheckResult(
        "hecke-algebra-dimension", not bad,
        "; ".join(bad) if bad else
        f"dim = n for n<={max_level}; generators up to 31 add nothing")


@_timed
def check_commutant(max_level: int = 32) -> CheckResult:
    """The commutant of {T_3, T_5} in the full matrix algebra has dimension
    n: nothing commutes with the Hecke action beyond the algebra itself."""
    bad = [n for n in range(1, max_level + 1) if commutant_dimension(n) != n]
    return CheckResult(
        "commutant", not bad,
        f"failures at n={bad}" if bad else f"dimension n for n<={max_level}")


@_timed
def check_triangularity(max_prime: int = 97, max_level: int = 64) -> CheckResult:
    """Every Hecke matrix with p <= 97, n <= 64 is strictly triangular in
    the exponent-ordered basis (asserted during construction, re-verified
    here), levels nest, and the matrices are nilpotent."""
    bad = []
    for p in odd_primes(max_prime):
        big = hecke_matrix(p, max_level)
        for n in range(1, max_level + 1):
            m = hecke_matrix(p, n)
            mask = (1 << n) - 1
            for i in range(n):
                if m.rows[i] & ((1 << (i + 1)) - 1):
                    bad.append(f"T_{p} level {n} not strictly triangular")
                    break
                if m.rows[i] != big.rows[i] & mask:
                    bad.append(f"T_{p} level {n} not nested in level {max_level}")
                    break
    for n in range(1, max_level + 1):
        for p in (3, 5, 7):
            s = nilpotency_index(hecke_matrix(p, n))
            if s > n:
                bad.append(f"T_{p} nilpotency index {s} > {n}")
    return CheckResult(
        "triangularity-nilpotency", not bad,
        "; ".join(bad[:4]) if bad else
        f"all odd p<={max_prime} at every level n<={max_level}; nilpotent")


@_timed
def check_hecke_commutativity() -> CheckResult:
    """T_p T_q = T_q T_p on odd delta powers, compared as q-expansions."""
    primes = odd_primes(13)
    bad = []
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            for k in range(1, 20, 2):
                f = delta_pow(k, p * q * 64)
                if hecke(p, hecke(q, f)) != hecke(q, hecke(p, f)):
                    bad.append(f"p={p} q={q} k={k}")
    return CheckResult(
        "hecke-commutativity", not bad,
        "; ".join(bad) if bad else "p,q<=13 on delta^k, k<=19")


def _prime_power_indices(e: int) -> set[int]:
    """Exponents j with T_p^e = sum T_{p^j} over GF(2), from the recurrence
    T_p T_{p^r} = T_{p^(r+1)} + T_{p^(r-1)} (the weight factor is odd)."""
    coeffs = {0: 1}
    for _ in range(e):
        nxt: dict[int, int] = {}
        for j in coeffs:
            nxt[j + 1] = nxt.get(j + 1, 0) ^ 1
            if j >= 1:
                nxt[j - 1] = nxt.get(j - 1, 0) ^ 1
        coeffs = {j: c for j, c in nxt.items() if c}
    return set(coeffs)


def _pairing_prediction(m: int, f: F2Series) -> int:
    """Predicted q^1 coefficient of prod_p T_p^{e_p} f for m = prod p^e_p,
    expanding each repeated factor through the Hecke relation."""
    factor_sets = [[]]
    mm = m
    p = 3
    while mm > 1:
        e = 0
        while mm % p == 0:
            e += 1
            mm //= p
        if e:
            factor_sets = [
                prev + [p ** j] for prev in factor_sets
                for j in _prime_power_indices(e)
            ]
        p += 2
    acc = 0
    for choice in factor_sets:
        idx = 1
        for v in choice:
            idx *= v
        acc ^= f.coeff(idx)
    return acc


@_timed
def check_pairing_formula() -> CheckResult:
    """The q^1 coefficient of T_{p_1}...T_{p_r} f: equals the coefficient
    of q^{p_1...p_r} in f when the primes are distinct, and in general the
    XOR predicted by expanding repeated factors through the Hecke relation
    (T_p^2 = T_{p^2} + 1, so e.g. T_3^2 delta = 0 while a_9(delta) = 1)."""
    bad = []
    for m in range(1, 106, 2):
        factors = odd_prime_factors(m)
        squarefree = len(set(factors)) == len(factors)
        for k in range(1, 16, 2):
            f = delta_pow(k, 105)
            g = f
            for p in factors:
                g = hecke(p, g)
            if squarefree and g.coeff(1) != f.coeff(m):
                bad.append(f"m={m} k={k} (squarefree)")
            if g.coeff(1) != _pairing_prediction(m, f):
                bad.append(f"m={m} k={k} (general)")
    return CheckResult(
        "iterated-hecke-pairing", not bad,
        "; ".join(bad) if bad else
        "squarefree products <= 105 verbatim; all odd m <= 105 via the "
        "Hecke relation; delta^k with k<=15")


@_timed
def check_generation_pairs(max_level: int = 32) -> CheckResult:
    """Any pair T_p, T_p' with p = 3 mod 8 and p' = 5 mod 8 generates the
    full algebra (checked for p, p' <= 37, levels up to 32)."""
    ps = [p for p in odd_primes(37) if p % 8 == 3]
    qs = [p for p in odd_primes(37) if p % 8 == 5]
    bad = []
    for n in range(1, max_level + 1):
        for p in ps:
            for q in qs:
                span = AlgebraSpan(n, (p, q))
                if span.dimension != n:
                    bad.append(f"(T_{p},T_{q}) at level {n}")
    return CheckResult(
        "generation-by-pairs", not bad,
        "; ".join(bad) if bad else
        f"{len(ps)}x{len(qs)} pairs, levels <= {max_level}")


@_timed
def check_kernel_equality(max_level: int = 32) -> CheckResult:
    """T_p has the same kernel as T_3 when p = 3 mod 8, and as T_5 when
    p = 5 mod 8 (row-space comparison, levels up to 32)."""
    bad = []
    for n in range(1, max_level + 1):
        for base, cls in ((3, 3), (5, 5)):
            ref = hecke_matrix(base, n).rows
            r_ref = rank(ref)
            for p in odd_primes(100):
                if p % 8 != cls or p == base:
                    continue
                rows = hecke_matrix(p, n).rows
                if not (rank(rows) == r_ref == rank(list(rows) + list(ref))):
                    bad.append(f"ker T_{p} != ker T_{base} at level {n}")
    return CheckResult(
        "kernel-equality", not bad,
        "; ".join(bad) if bad else f"p<=100 in both classes, n<={max_level}")


@_timed
def check_module_cyclicity(max_level: int = 32) -> CheckResult:
    """The level-n space is a cyclic (equivalently free, by the dimension
    count) module over its Hecke algebra exactly when n is 1, 2 or a power
    of two: the quotient by the maximal-ideal image, computed as
    n - rank(T_3 and T_5 columns), has dimension 1 precisely there.

    At n = 4 this is forced by the tabulated values alone: the shift
    action on m(1,1) = delta^7 reaches delta^5, delta^3 and delta."""
    bad = []
    for n in range(1, max_level + 1):
        cols = list(hecke_matrix(3, n).columns()) + list(hecke_matrix(5, n).columns())
        quotient = n - rank(cols)
        cyclic_expected = n & (n - 1) == 0
        if (quotient == 1) != cyclic_expected:
            bad.append(f"level {n}: quotient dim {quotient}")
    return CheckResult(
        "module-cyclicity", not bad,
        "; ".join(bad) if bad else
        f"cyclic exactly at powers of two, checked n<={max_level}")


# -- T_p expansions -----------------------------------------------------------

@_timed
def check_tp_tables(table: MBasis | None = None) -> CheckResult:
    """The expansions of T_7, T_11, T_13, T_17 in x = T_3, y = T_5 match
    the published series coefficient-for-coefficient through the printed
    total degrees."""
    table = table or shared_table()
    bad = []
    for p, (printed, depth) in sorted(TP_PRINTED.items()):
        got = {ij for ij in table.tp_expansion(p, depth)}
        if got != printed:
            bad.append(f"T_{p}: +{sorted(got - printed)} -{sorted(printed - got)}")
    if table.tp_expansion(3, 6) != {(1, 0)} or table.tp_expansion(5, 6) != {(0, 1)}:
        bad.append("T_3 or T_5 is not the corresponding coordinate")
    return CheckResult(
        "tp-expansion-tables", not bad,
        "; ".join(bad) if bad else
        "T_7/T_11/T_13/T_17 through degrees 14/13/11/12")


@_timed
def check_frobenian(bound: int = 1000, degree: int = 8,
                    table: MBasis | None = None) -> CheckResult:
    """For every odd prime below the bound: the parity class of every
    monomial of T_p is determined by p mod 8, and the five explicit
    coefficient criteria hold (congruences and representation searches)."""
    table = table or shared_table()
    bad = []
    for p in odd_primes(bound - 1):
        if not table.parity_pattern_ok(p, degree):
            bad.append(f"parity pattern fails for {p}")
        report = table.frobenian_criteria(p)
        if not report.all_ok:
            bad.append(f"coefficient criteria fail for {p}: {report}")
    return CheckResult(
        "frobenian-criteria", not bad,
        "; ".join(bad[:4]) if bad else
        f"all odd p < {bound}, degree <= {degree}")


@_timed
def check_aij_consistency(table: MBasis | None = None) -> CheckResult:
    """a_ij(p) computed as the q^p coefficient of m(i,j) agrees with the
    shift coefficients read from the m-expansion of T_p m(5,5)."""
    table = table or shared_table()
    table.ensure(5, 5)
    level = 256
    coords = table.element(5, 5).coords
    bad = []
    for p in odd_primes(50):
        image = hecke_matrix(p, level).apply(coords)
        support = (table.coefficients(DeltaCoords(image, level))
                   if image else frozenset())
        via_shift = {(5 - i, 5 - j) for i, j in support if i <= 5 and j <= 5}
        via_shift = {(i, j) for i, j in via_shift if i + j <= 5}
        direct = {ij for ij in table.tp_expansion(p, 5)}
        if via_shift != direct:
            bad.append(f"p={p}")
    return CheckResult(
        "tp-coefficient-consistency", not bad,
        "; ".join(bad) if bad else "two routes agree for p<=50, i+j<=5")


@_timed
def check_injectivity_witnesses(table: MBasis | None = None) -> CheckResult:
    """Witness construction: for sample series u in x, y the returned odd k
    satisfies u(T_3, T_5) delta^k = delta (verified internally)."""
    table = table or shared_table()
    cases = [
        ({(0, 0): 1}, 1), ({(1, 0): 1}, 3), ({(2, 0): 1, (0, 2): 1}, 9),
    ]
    bad = []
    for lam, want in cases:
        got = table.injectivity_witness(set(lam))
        if got != want:
            bad.append(f"{sorted(lam)} -> {got} != {want}")
    extra = [{(1, 2), (3, 0)}, {(1, 1), (2, 2)}, {(0, 3), (4, 1), (2, 3)}]
    for lam in extra:
        table.injectivity_witness(lam)  # raises on failure
    return CheckResult(
        "injectivity-witnesses", not bad,
        "; ".join(bad) if bad else f"{len(cases) + len(extra)} series")


# -- theta families ------------------------------------------------------------

@_timed
def check_theta_tables(precision: int = 4096) -> CheckResult:
    """Theta tables for n <= 3 match the published values, and the identity
    families hold for n <= 6 at the working precision."""
    bad = []
    for c, tbl in THETA_TABLE.items():
        for (t, n), want in tbl.items():
            got = theta_coords(t, n, c, 16).support_exponents()
            if got != want:
                bad.append(f"theta(t={t},n={n},c={c}) = {got} != {want}")
    for n in range(1, 7):
        for c in (2, 4):
            if not verify_theta_identities(n, c, precision):
                bad.append(f"identities fail at n={n}, c={c}")
    return CheckResult(
        "theta-tables-identities", not bad,
        "; ".join(bad) if bad else
        f"tables n<=3 both forms; identities n<=6 at precision {precision}")


@_timed
def check_span_equalities(table: MBasis | None = None) -> CheckResult:
    """Theta families span the same subspaces as the boundary rows of the
    m-basis: m(a,0) for the form x^2+2y^2, m(0,b) for x^2+4y^2."""
    table = table or shared_table()
    bad = []
    for n in range(1, 5):
        if not verify_span_equality(n, 2, table):
            bad.append(f"c=2 n={n}")
    for n in range(1, 4):
        if not verify_span_equality(n, 4, table):
            bad.append(f"c=4 n={n}")
    return CheckResult(
        "theta-span-equalities", not bad,
        "; ".join(bad) if bad else "c=2 for n<=4, c=4 for n<=3")


@_timed
def check_hecke_on_theta(precision: int = 256) -> CheckResult:
    """The Hecke action permutes theta indices through the composition law
    (split primes) or kills the family (inert primes), for all p <= 100 and
    n <= 4; plus the closed-form special relations."""
    bad = []
    for p in odd_primes(100):
        for c in (2, 4):
            for n in range(1, 5):
                if not verify_hecke_on_theta(p, n, c, precision):
                    bad.append(f"p={p} n={n} c={c}")
    for c, primes in SPECIAL_RELATION_PRIMES.items():
        for n in (1, 2, 3):
            exponent = 1 + (1 << (2 * n - 1)) if c == 2 else 1 + (1 << (2 * n))
            for p in primes:
                tp = t_of_prime(p, n, c)
                lhs = theta_series(((1 << (n - 1)) - tp) % (1 << n), n, c,
                                   2 * precision)
                rhs = hecke(p, delta_pow(exponent, p * 2 * precision))
                if lhs != rhs:
                    bad.append(f"special relation p={p} n={n} c={c}")
    return CheckResult(
        "hecke-on-theta", not bad,
        "; ".join(bad) if bad else
        f"p<=100, n<=4, both forms, precision {precision}; special relations n<=3")


@_timed
def check_composition_compatibility(precision: int = 128) -> CheckResult:
    """Two Hecke operators acting on a theta series compose through the
    law: T_p T_q theta equals the four-term index sum."""
    bad = []
    for c, primes in ((2, (3, 11, 17)), (4, (5, 13, 17))):
        for n in (1, 2, 3):
            law = CompositionLaw(n, c)
            m = law.modulus
            for p in primes:
                for q in primes:
                    tp, tq = t_of_prime(p, n, c), t_of_prime(q, n, c)
                    for t in range(m // 2 + 1):
                        lhs = hecke(p, hecke(q, theta_series(t, n, c,
                                                             p * q * precision)))
                        bits = 0
                        for sp in (tp, law.inverse(tp)):
                            for sq in (tq, law.inverse(tq)):
                                idx = law.compose(law.compose(t, sp), sq)
                                bits ^= theta_series(idx, n, c, precision).bits
                        if lhs != F2Series(bits, precision):
                            bad.append(f"p={p} q={q} t={t} n={n} c={c}")
    return CheckResult(
        "hecke-composition-compatibility", not bad,
        "; ".join(bad) if bad else "double action matches four-term sums, n<=3")


@_timed
def check_composition_groups(max_n: int = 10) -> CheckResult:
    """(Z/2^n, *) is an abelian group, cyclic of order 2^n, for both laws."""
    bad = [
        f"n={n} c={c}"
        for n in range(1, max_n + 1) for c in (2, 4)
        if not verify_composition_group(n, c)
    ]
    return CheckResult(
        "composition-groups", not bad,
        "; ".join(bad) if bad else f"abelian + cyclic of order 2^n, n<={max_n}")


@_timed
def check_kernel_characterization(table: MBasis | None = None) -> CheckResult:
    """Kernel vectors of T_5 (resp. T_3) have representable q-support and
    lie in the theta (resp. theta') span."""
    table = table or shared_table()
    bad = []
    for c in (2, 4):
        for n_level in (2, 4, 8):
            if not verify_kernel_characterization(n_level, c, 2048, table):
                bad.append(f"c={c} level {n_level}")
    return CheckResult(
        "theta-kernel-characterization", not bad,
        "; ".join(bad) if bad else "levels 2, 4, 8 for both forms")


SUITES: dict[str, list] = {
    "algebra": [check_triangularity, check_hecke_commutativity,
                check_pairing_formula, check_algebra_dimension,
                check_commutant, check_generation_pairs,
                check_kernel_equality, check_module_cyclicity],
    "mbasis": [check_m_table, check_structure_suite,
               check_dominant_exponents, check_injectivity_witnesses],
    "tp": [check_tp_tables, check_frobenian, check_aij_consistency],
    "theta": [check_theta_tables, check_span_equalities,
              check_hecke_on_theta, check_composition_compatibility,
              check_composition_groups, check_kernel_characterization],
}
SUITES["all"] = [fn for suite in ("algebra", "mbasis", "tp", "theta")
                 for fn in SUITES[suite]]


def run_suite(name: str, precision: int | None = None) -> list[CheckResult]:
    """Run a named suite; `precision` overrides the working precision of
    the series-comparison checks that take one."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    overrides = {}
    if precision is not None:
        overrides = {
            check_theta_tables: {"precision": precision},
            check_hecke_on_theta: {"precision": max(precision // 16, 64)},
            check_composition_compatibility: {"precision": max(precision // 32, 64)},
        }
    return [fn(**overrides.get(fn, {})) for fn in SUITES[name]]
