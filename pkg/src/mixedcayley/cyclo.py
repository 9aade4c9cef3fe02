"""Exact arithmetic in the cyclotomic field Q(w_N).

A CycloNum holds exact rational coefficients over the power basis
1, w, ..., w^{N-1}, where w = exp(2*pi*i/N).  Canonical forms are
polynomial remainders modulo the N-th cyclotomic polynomial, so equality,
integer membership and Eisenstein membership are coefficient inspections;
no floating point ever enters a verdict.  Mixed-order operands are lifted
to the lcm of their orders by scaling exponents.

Coefficients may be Python ints or Fractions; both are exact rationals
and interoperate freely.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm, tau

from .atoms import g_units_mod3

Rational = int | Fraction

# Above this order, canonical reduction falls back to direct polynomial
# remainders instead of a precomputed power table (memory trade-off; 1500
# covers the lcm of any two orders up to 36).
_TABLE_LIMIT = 1500


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    if m < 1:
        raise ValueError(f"totient needs a positive integer, got {m}")
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are trimmed so
    the zero polynomial has an empty tuple.
    """

    coeffs: tuple[Rational, ...]

    @staticmethod
    def of(coeffs) -> Poly:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly.of(x + y for x, y in zip(a, b))

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly(())
        out: list[Rational] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                if d != 0:
                    out[i + j] += c * d
        return Poly.of(out)

    def __divmod__(self, divisor: Poly) -> tuple[Poly, Poly]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: list[Rational] = [0] * max(len(self.coeffs) - len(divisor.coeffs) + 1, 0)
        r = list(self.coeffs)
        dlead = divisor.coeffs[-1]
        dn = len(divisor.coeffs)
        while len(r) >= dn and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < dn:
                break
            t = r[-1] / Fraction(dlead) if dlead != 1 else r[-1]
            shift = len(r) - dn
            q[shift] = t
            for i, d in enumerate(divisor.coeffs):
                r[shift + i] -= t * d
        return Poly.of(q), Poly.of(r)

    def __floordiv__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Poly) -> Poly:
        return divmod(self, divisor)[1]

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _normalize_int(c: Rational) -> Rational:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Poly:
    """The m-th cyclotomic polynomial: x^m - 1 divided by all lower ones."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    poly = Poly.of([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly, rem = divmod(poly, cyclotomic_poly(d))
            if not rem.is_zero():
                raise ArithmeticError(f"cyclotomic division left a remainder at m={m}")
    return Poly(tuple(_normalize_int(c) for c in poly.coeffs))


@lru_cache(maxsize=None)
def _canonical_rows(order: int) -> tuple[tuple[int, ...], ...]:
    """Row j = integer coefficients of x^j reduced modulo Phi_order."""
    phi = totient(order)
    mod = cyclotomic_poly(order).coeffs  # monic, degree phi
    rows: list[tuple[int, ...]] = []
    for j in range(phi):
        rows.append(tuple(1 if i == j else 0 for i in range(phi)))
    for j in range(phi, order):
        prev = rows[j - 1]
        shifted = [0] + list(prev[:-1])
        lead = prev[-1]
        if lead:
            for i in range(phi):
                shifted[i] -= lead * mod[i]
        rows.append(tuple(shifted))
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class CycloNum:
    """An exact element of Q(w_N): value = sum_j coeffs[j] * w_N^j."""

    order: int
    coeffs: tuple[Rational, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {self.order}")
        if len(self.coeffs) != self.order:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, expected {self.order}"
            )

    @staticmethod
    def zero(order: int = 1) -> CycloNum:
        return CycloNum(order, (0,) * order)

    @staticmethod
    def from_rational(value: Rational, order: int = 1) -> CycloNum:
        return CycloNum(order, (value,) + (0,) * (order - 1))

    def lift(self, order: int) -> CycloNum:
        """Re-express in a larger field; the target order must be a multiple."""
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        out: list[Rational] = [0] * order
        for j, c in enumerate(self.coeffs):
            if c != 0:
                out[j * step] = c
        return CycloNum(order, tuple(out))

    def _common(self, other: CycloNum) -> tuple[CycloNum, CycloNum]:
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __add__(self, other) -> CycloNum:
        if not isinstance(other, CycloNum):
            other = CycloNum.from_rational(other)
        a, b = self._common(other)
        return CycloNum(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> CycloNum:
        return self + (-other)

    def __rsub__(self, other) -> CycloNum:
        return (-self) + other

    def __mul__(self, other) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.order, tuple(c * other for c in self.coeffs))
        a, b = self._common(other)
        n = a.order
        out: list[Rational] = [0] * n
        for i, c in enumerate(a.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(b.coeffs):
                if d != 0:
                    out[(i + j) % n] += c * d
        return CycloNum(n, tuple(out))

    __rmul__ = __mul__

    def conj(self) -> CycloNum:
        """Complex conjugate: exponent j maps to N - j."""
        n = self.order
        out: list[Rational] = [0] * n
        for j, c in enumerate(self.coeffs):
            if c != 0:
                out[(n - j) % n] += c
        return CycloNum(n, tuple(out))

    def reduce(self) -> CycloNum:
        """Canonical form: remainder modulo Phi_N, support below totient(N)."""
        n = self.order
        phi = totient(n)
        if all(c == 0 for c in self.coeffs[phi:]):
            return self
        if n <= _TABLE_LIMIT:
            rows = _canonical_rows(n)
            out: list[Rational] = [0] * phi
            for j, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                row = rows[j]
                for k in range(phi):
                    if row[k]:
                        out[k] += c * row[k]
        else:
            rem = Poly.of(self.coeffs) % cyclotomic_poly(n)
            out = list(rem.coeffs) + [0] * (phi - len(rem.coeffs))
        return CycloNum(n, tuple(out) + (0,) * (n - phi))

    def canonical_coeffs(self) -> tuple[Rational, ...]:
        """The first totient(N) coefficients of the reduced form."""
        return self.reduce().coeffs[: totient(self.order)]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.canonical_coeffs())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._common(other)
        return a.canonical_coeffs() == b.canonical_coeffs()

    def to_complex(self) -> complex:
        n = self.order
        return sum(
            (complex(c) * cmath.exp(1j * tau * j / n) for j, c in enumerate(self.coeffs) if c != 0),
            complex(0),
        )

    def __repr__(self) -> str:
        terms = [
            f"{c}*w^{j}" if j else f"{c}"
            for j, c in enumerate(self.reduce().coeffs)
            if c != 0
        ]
        body = " + ".join(terms) if terms else "0"
        return f"CycloNum(order={self.order}, {body})"


def root(order: int, j: int) -> CycloNum:
    """The root of unity w_order^j."""
    if order < 1:
        raise ValueError(f"root order must be >= 1, got {order}")
    out = [0] * order
    out[j % order] = 1
    return CycloNum(order, tuple(out))


def reduce_root_counts(order: int, counts) -> CycloNum:
    """Reduced sum of roots of unity with integer multiplicities.

    ``counts[j]`` is the (possibly negative) multiplicity of w_order^j.
    This is the hot path for character sums: all-integer arithmetic,
    reduced straight through the canonical power table.
    """
    phi = totient(order)
    if order <= _TABLE_LIMIT:
        rows = _canonical_rows(order)
        out = [0] * phi
        for j, c in enumerate(counts):
            if c == 0:
                continue
            row = rows[j]
            for k in range(phi):
                if row[k]:
                    out[k] += c * row[k]
        return CycloNum(order, tuple(out) + (0,) * (order - phi))
    return CycloNum(order, tuple(counts)).reduce()


def as_integer(z: CycloNum) -> int | None:
    """The rational integer equal to z, or None if z is not one."""
    c = z.canonical_coeffs()
    if any(v != 0 for v in c[1:]):
        return None
    c0 = c[0]
    if isinstance(c0, Fraction):
        if c0.denominator != 1:
            return None
        return int(c0)
    return c0


def as_rational(z: CycloNum) -> Fraction | None:
    """The rational number equal to z, or None (distinguishes 1/2 from w)."""
    c = z.canonical_coeffs()
    if any(v != 0 for v in c[1:]):
        return None
    return Fraction(c[0])


def as_eisenstein(z: CycloNum) -> tuple[int, int] | None:
    """Integers (a, b) with z = a + b*w_3, or None if no such pair exists.

    Solves the two-unknown exact linear system over the canonical basis
    after lifting z into a field containing w_3.
    """
    n = lcm(z.order, 3)
    zl = z.lift(n)
    c = zl.canonical_coeffs()
    r3 = root(n, n // 3).canonical_coeffs()
    pivot = next((k for k in range(1, len(r3)) if r3[k] != 0), None)
    if pivot is None:
        raise ArithmeticError("w_3 reduced to a rational number; broken reduction")
    b = Fraction(c[pivot], r3[pivot])
    a = Fraction(c[0]) - b * r3[0]
    for k in range(len(c)):
        expected = b * r3[k] + (a if k == 0 else 0)
        if c[k] != expected:
            return None
    if a.denominator != 1 or b.denominator != 1:
        return None
    return int(a), int(b)


def poly_to_cyclo(p: Poly, order: int) -> tuple[CycloNum, ...]:
    """View a rational polynomial as one with constant CycloNum coefficients."""
    return tuple(CycloNum.from_rational(c, order) for c in p.coeffs)


def cyclo_poly_mul(p, q) -> tuple[CycloNum, ...]:
    """Product of two polynomials with CycloNum coefficients."""
    if not p or not q:
        return ()
    order = lcm(p[0].order, q[0].order)
    out = [CycloNum.zero(order) for _ in range(len(p) + len(q) - 1)]
    for i, c in enumerate(p):
        for j, d in enumerate(q):
            out[i + j] = out[i + j] + c * d
    return tuple(out)


def _poly_from_root_exponents(exponents, order: int) -> tuple[CycloNum, ...]:
    """Expand prod (x - w_order^e) for e in exponents; constant term first."""
    coeffs: list[CycloNum] = [CycloNum.from_rational(1, order)]
    for e in exponents:
        r = root(order, e)
        nxt = [CycloNum.zero(order) for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * r
        coeffs = nxt
    return tuple(c.reduce() for c in coeffs)


def phi3_factors(m: int, order: int) -> tuple[tuple[CycloNum, ...], tuple[CycloNum, ...]]:
    """Split Phi_m over Q(w_3) into its two conjugate monic factors.

    The first factor has the primitive m-th roots with multiplier 1 mod 3
    as its zeros, the second those with multiplier 2 mod 3.  Both are
    returned as coefficient tuples (constant term first) over Q(w_order);
    the order must be a multiple of m.
    """
    if m % 3 != 0:
        raise ValueError(f"factor split needs 3 | m, got m={m}")
    if order % m != 0:
        raise ValueError(f"order {order} does not contain the {m}-th roots")
    step = order // m
    f1 = _poly_from_root_exponents(
        [a * step for a in sorted(g_units_mod3(m, 1))], order
    )
    f2 = _poly_from_root_exponents(
        [a * step for a in sorted(g_units_mod3(m, 2))], order
    )
    return f1, f2
