"""Bitset linear algebra cross-checked against textbook elimination."""

import random

from heckemod2.gf2 import GF2Matrix, LinearSolver, Span, nullspace, rank


def naive_solve(rows, width, rhs_bits):
    cur = [[rows[i], (rhs_bits >> i) & 1] for i in range(len(rows))]
    used = [False] * len(cur)
    pivots = []
    for col in range(width):
        pr = next((r for r in range(len(cur))
                   if not used[r] and (cur[r][0] >> col) & 1), None)
        if pr is None:
            continue
        used[pr] = True
        for r in range(len(cur)):
            if r != pr and (cur[r][0] >> col) & 1:
                cur[r][0] ^= cur[pr][0]
                cur[r][1] ^= cur[pr][1]
        pivots.append((col, pr))
    if any(row == 0 and rhs for row, rhs in cur):
        return None
    x = 0
    for col, pr in pivots:
        if cur[pr][1]:
            x |= 1 << col
    return x


def test_solver_against_naive_elimination():
    rng = random.Random(1)
    for _ in range(1500):
        width = rng.randint(1, 14)
        nrows = rng.randint(1, 24)
        rows = [rng.getrandbits(width) for _ in range(nrows)]
        rhs = rng.getrandbits(nrows)
        solver = LinearSolver(rows, width)
        got = solver.solve(rhs)
        want = naive_solve(rows, width, rhs)
        assert (got is None) == (want is None)
        if got is not None:
            for i, r in enumerate(rows):
                assert ((r & got).bit_count() & 1) == ((rhs >> i) & 1)


def test_nullspace_and_kernel_dimension():
    rng = random.Random(2)
    for _ in range(800):
        width = rng.randint(1, 10)
        rows = [rng.getrandbits(width) for _ in range(rng.randint(1, 16))]
        basis = nullspace(rows, width)
        for v in basis:
            assert all(((r & v).bit_count() & 1) == 0 for r in rows)
        count = sum(
            1 for v in range(1 << width)
            if all(((r & v).bit_count() & 1) == 0 for r in rows)
        )
        assert count == 1 << len(basis)
        assert LinearSolver(rows, width).kernel_dimension == len(basis)


def test_span_membership():
    span = Span([0b011, 0b110])
    assert span.dimension == 2
    assert span.contains(0b101)
    assert not span.contains(0b001)
    assert not span.add(0b101)
    assert span.add(0b001)
    assert span.dimension == 3


def test_rank_matches_exhaustive_span():
    rng = random.Random(3)
    for _ in range(300):
        width = rng.randint(1, 8)
        vecs = [rng.getrandbits(width) for _ in range(rng.randint(0, 10))]
        reachable = {0}
        for v in vecs:
            reachable |= {x ^ v for x in reachable}
        assert 1 << rank(vecs) == len(reachable)


def test_matrix_operations():
    m = GF2Matrix([0b10, 0b00], 2)  # sends e1 -> e0
    assert m.apply(0b10) == 0b01
    assert m.apply(0b01) == 0
    assert m.mul(m).is_zero
    ident = GF2Matrix.identity(3)
    assert ident.mul(ident) == ident
    assert ident.columns() == [1, 2, 4]
    rebuilt = GF2Matrix.from_columns(m.columns(), 2)
    assert rebuilt == m
    assert m.add(m).is_zero
    assert m.to_vector() == 0b10


def test_matrix_mul_against_entrywise():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 6)
        a = GF2Matrix([rng.getrandbits(n) for _ in range(n)], n)
        b = GF2Matrix([rng.getrandbits(n) for _ in range(n)], n)
        c = a.mul(b)
        for i in range(n):
            for j in range(n):
                want = 0
                for k in range(n):
                    want ^= a.entry(i, k) & b.entry(k, j)
                assert c.entry(i, j) == want
