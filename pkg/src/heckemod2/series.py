"""Truncated power series over GF(2), bit-packed into Python ints.

A series is known up to an inclusive exponent bound (its *precision*);
coefficients beyond the bound are undefined and never stored.  The
coefficient of q^e is bit e of an int, so addition is XOR and
multiplication is a carry-free shift-and-XOR convolution.  Everything
here is pure and immutable.
"""

from __future__ import annotations

from .primes import is_odd_prime


class PrecisionError(ValueError):
    """A coefficient beyond a series' declared precision was requested."""


def _mask(precision: int) -> int:
    return (1 << (precision + 1)) - 1


class F2Series:
    """A GF(2) power series truncated at an inclusive exponent bound.

    Equality compares coefficients up to the smaller of the two
    precisions, which is the only range where equality is decidable.
    """

    __slots__ = ("_bits", "_prec")

    def __init__(self, bits: int, precision: int):
        if precision < 0:
            raise ValueError("precision must be >= 0")
        self._bits = bits & _mask(precision)
        self._prec = precision

    @classmethod
    def from_exponents(cls, exponents, precision: int) -> "F2Series":
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError("exponents must be >= 0")
            if e <= precision:
                bits ^= 1 << e
        return cls(bits, precision)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def precision(self) -> int:
        return self._prec

    def coeff(self, e: int) -> int:
        """Coefficient of q^e; reading beyond the precision is an error."""
        if e < 0 or e > self._prec:
            raise PrecisionError(f"coefficient {e} outside known range 0..{self._prec}")
        return (self._bits >> e) & 1

    def support(self) -> tuple[int, ...]:
        """Exponents with coefficient 1, ascending."""
        out = []
        x = self._bits
        while x:
            lsb = x & -x
            out.append(lsb.bit_length() - 1)
            x ^= lsb
        return tuple(out)

    def truncate(self, precision: int) -> "F2Series":
        if precision > self._prec:
            raise PrecisionError(f"cannot extend precision {self._prec} to {precision}")
        return F2Series(self._bits, precision)

    def leading_exponent(self) -> int | None:
        """Smallest exponent with coefficient 1, or None if zero."""
        if self._bits == 0:
            return None
        return (self._bits & -self._bits).bit_length() - 1

    @property
    def is_zero(self) -> bool:
        return self._bits == 0

    def __add__(self, other: "F2Series") -> "F2Series":
        n = min(self._prec, other._prec)
        return F2Series(self._bits ^ other._bits, n)

    def __mul__(self, other: "F2Series") -> "F2Series":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, F2Series):
            return NotImplemented
        n = min(self._prec, other._prec)
        return (self._bits & _mask(n)) == (other._bits & _mask(n))

    __hash__ = None  # equality is precision-relative

    def __repr__(self) -> str:
        supp = self.support()
        if not supp:
            return f"F2Series(0; O(q^{self._prec + 1}))"
        shown = " + ".join(f"q^{e}" for e in supp[:6])
        if len(supp) > 6:
            shown += " + ..."
        return f"F2Series({shown}; O(q^{self._prec + 1}))"


def delta(precision: int) -> F2Series:
    """The generating series of odd squares: coefficient of q^k is 1 iff
    k = (2m+1)^2 for some m >= 0."""
    bits = 0
    m = 0
    while (e := (2 * m + 1) ** 2) <= precision:
        bits |= 1 << e
        m += 1
    return F2Series(bits, precision)


def mul(f: F2Series, g: F2Series) -> F2Series:
    """Carry-free GF(2) convolution, truncated to the smaller precision."""
    n = min(f.precision, g.precision)
    a = f.bits & _mask(n)
    b = g.bits & _mask(n)
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        lsb = a & -a
        acc ^= b << (lsb.bit_length() - 1)
        a ^= lsb
    return F2Series(acc, n)


def square(f: F2Series) -> F2Series:
    """Frobenius: coefficient of q^{2k} equals the coefficient of q^k in f.

    Agrees with mul(f, f) because cross terms in the convolution occur in
    pairs and cancel over GF(2).
    """
    out = 0
    x = f.bits & _mask(f.precision // 2)
    while x:
        lsb = x & -x
        out |= 1 << (2 * (lsb.bit_length() - 1))
        x ^= lsb
    return F2Series(out, f.precision)


def delta_pow(k: int, precision: int) -> F2Series:
    """The k-th power of delta(precision), k odd >= 1, by square-and-multiply.

    Even or nonpositive k is rejected: the ambient space is spanned by the
    odd powers only.
    """
    if k <= 0 or k % 2 == 0:
        raise ValueError(f"delta power must be odd and positive, got {k}")
    d = delta(precision)
    acc = d
    for bit in bin(k)[3:]:
        acc = square(acc)
        if bit == "1":
            acc = mul(acc, d)
    return acc


def _odd_delta_power_bits(count: int, precision: int) -> list[int]:
    """Bit-packed delta^(2i+1) for i = 0..count-1, all at the same precision."""
    d = delta(precision)
    d2 = square(d)
    out = [d.bits]
    cur = d
    for _ in range(count - 1):
        cur = mul(cur, d2)
        out.append(cur.bits)
    return out


def _hecke_bits(p: int, bits: int, precision: int) -> tuple[int, int]:
    """Raw Hecke action on a bit-packed series; returns (bits, new precision)."""
    np_ = precision // p
    out = 0
    for m in range(1, np_ + 1):
        bit = (bits >> (p * m)) & 1
        if m % p == 0:
            bit ^= (bits >> (m // p)) & 1
        if bit:
            out |= 1 << m
    return out, np_


def hecke(p: int, f: F2Series) -> F2Series:
    """Hecke operator T_p for odd prime p, acting on q-expansions mod 2.

    The coefficient of q^n in the result is a_{pn}(f) + a_{n/p}(f), where
    the second term is 0 unless p divides n (level 1, even weight: the
    factor p^{k-1} is odd, hence 1 mod 2).  The result is known up to
    floor(precision / p).
    """
    if not is_odd_prime(p):
        raise ValueError(f"Hecke operators here require an odd prime, got {p}")
    bits, prec = _hecke_bits(p, f.bits, f.precision)
    return F2Series(bits, prec)
