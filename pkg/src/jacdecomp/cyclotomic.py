"""Exact arithmetic in the cyclotomic field Q(zeta_e).

A value is stored in reduced power-basis form: phi(e) rational coordinates
over 1, z, ..., z^(phi(e)-1), where z = zeta_e and reduction is by the e-th
cyclotomic polynomial.  Canonical form is unique, so equality of values is
equality of coordinate tuples.  Everything here is exact; no floats.

One analysis session fixes a single conductor (the exponent of the acting
group) and embeds every character value there, which keeps all arithmetic in
one field and avoids compositum bookkeeping.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class CyclotomicError(Exception):
    """Base error for cyclotomic arithmetic."""


class ZeroConductor(CyclotomicError):
    """The conductor must be a positive integer."""


class ConductorMismatch(CyclotomicError):
    """Operands live in different cyclotomic fields."""


class NotCoprime(CyclotomicError):
    """A Galois automorphism index must be coprime to the conductor."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def euler_phi(n: int) -> int:
    if n < 1:
        raise ZeroConductor(f"conductor must be positive, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_poly_div(num: Sequence[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dn] = c
        for j, dj in enumerate(den):
            num[i - dn + j] -= c * dj
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, low degree first; monic of degree phi(e)."""
    if e < 1:
        raise ZeroConductor(f"conductor must be positive, got {e}")
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in _divisors(e):
        if d < e:
            poly = _int_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce_coeffs(coeffs: list[Fraction], e: int) -> tuple[Fraction, ...]:
    """Remainder of a coefficient list modulo Phi_e, padded to length phi(e)."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(len(phi)):
                rem[i - deg + j] -= c * phi[j]
    rem = rem[:deg]
    rem.extend([Fraction(0)] * (deg - len(rem)))
    return tuple(rem)


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class Cyclotomic:
    """An element of Q(zeta_e) in reduced power-basis form (immutable)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[Fraction]):
        if conductor < 1:
            raise ZeroConductor(f"conductor must be positive, got {conductor}")
        coeffs = tuple(coeffs)
        if len(coeffs) != euler_phi(conductor):
            raise ValueError(
                f"need phi({conductor}) = {euler_phi(conductor)} coordinates, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, e: int) -> "Cyclotomic":
        return cls(e, [Fraction(0)] * euler_phi(e))

    @classmethod
    def one(cls, e: int) -> "Cyclotomic":
        return cls.from_rational(1, e)

    @classmethod
    def from_rational(cls, x: Scalar, e: int) -> "Cyclotomic":
        coeffs = [Fraction(0)] * euler_phi(e)
        coeffs[0] = _as_fraction(x)
        return cls(e, coeffs)

    @classmethod
    def root(cls, e: int, k: int = 1) -> "Cyclotomic":
        """zeta_e^k as an element of Q(zeta_e)."""
        return cls.from_terms({k: 1}, e)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar], e: int) -> "Cyclotomic":
        """Sum of a_k * zeta_e^k over the given exponents (any integers)."""
        if e < 1:
            raise ZeroConductor(f"conductor must be positive, got {e}")
        raw = [Fraction(0)] * e
        for k, a in terms.items():
            raw[k % e] += _as_fraction(a)
        return cls(e, _reduce_coeffs(raw, e))

    # -- ring / field structure -------------------------------------------

    def _check(self, other: "Cyclotomic") -> None:
        if self.conductor != other.conductor:
            raise ConductorMismatch(
                f"conductors differ: {self.conductor} vs {other.conductor}"
            )

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_rational(other, self.conductor)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.conductor, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        return Cyclotomic(self.conductor, _reduce_coeffs(prod, self.conductor))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.one(self.conductor)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via extended gcd against Phi_e."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        # extended Euclid in Q[x]: u*self + v*phi = gcd
        r0, r1 = phi, list(self.coeffs)
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        lead = next(c for c in reversed(r0) if c)
        if sum(1 for c in r0 if c) != 1 or r0[0] == 0:
            # gcd must be a nonzero constant: Phi_e is irreducible over Q
            raise ArithmeticError("gcd with Phi_e is not constant")
        inv_coeffs = [c / lead for c in u0]
        return Cyclotomic(self.conductor, _reduce_coeffs(inv_coeffs, self.conductor))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    # -- Galois action ------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply sigma_k : zeta -> zeta^k; requires gcd(k, e) = 1."""
        e = self.conductor
        if math.gcd(k, e) != 1:
            raise NotCoprime(f"sigma_{k} is not an automorphism of Q(zeta_{e})")
        terms: dict[int, Fraction] = {}
        for i, a in enumerate(self.coeffs):
            if a:
                terms[(i * k) % e] = terms.get((i * k) % e, Fraction(0)) + a
        return Cyclotomic.from_terms(terms, e)

    def conjugate(self) -> "Cyclotomic":
        return self.galois(-1)

    # -- predicates / conversions -------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not a rational value: {self}")
        return self.coeffs[0]

    def as_integer(self) -> int:
        q = self.as_rational()
        if q.denominator != 1:
            raise ValueError(f"not an integer value: {self}")
        return q.numerator

    # -- comparisons / rendering ---------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Cyclotomic) else other
        if not isinstance(o, Cyclotomic):
            return NotImplemented
        return self.conductor == o.conductor and self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {self})"

    def __str__(self):
        return self.render()

    def render(self, symbol: str = "z") -> str:
        """Human form 'a0 + a1*z + ...' with zero terms dropped."""
        parts: list[str] = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            if i == 0:
                term = str(a)
            else:
                mon = symbol if i == 1 else f"{symbol}^{i}"
                if a == 1:
                    term = mon
                elif a == -1:
                    term = f"-{mon}"
                else:
                    term = f"{a}*{mon}"
            parts.append(term)
        if not parts:
            return "0"
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def render_annotated(self, symbol: str = "z") -> str:
        if self.is_rational():
            return self.render(symbol)
        return f"{self.render(symbol)}  ({symbol} = zeta_{self.conductor})"


# -- small polynomial helpers over Fraction (low degree first) ---------------

def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = _poly_trim(list(b))
    if len(b) == 1 and not b[0]:
        raise ZeroDivisionError("polynomial division by zero")
    deg_b = len(b) - 1
    if len(a) - 1 < deg_b:
        return [Fraction(0)], _poly_trim(a)
    quot = [Fraction(0)] * (len(a) - deg_b)
    for i in range(len(a) - 1, deg_b - 1, -1):
        c = a[i] / b[-1]
        if c:
            quot[i - deg_b] = c
            for j, bj in enumerate(b):
                a[i - deg_b + j] -= c * bj
    return _poly_trim(quot), _poly_trim(a)
