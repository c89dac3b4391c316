"""Exact arithmetic in the rational function field Q(q).

Elements are stored as ``q**val * num / den`` with ``num`` and ``den`` integer
polynomials (python-flint ``fmpz_poly``) that are coprime over Z, have nonzero
constant terms, and ``den`` has a positive leading coefficient.  That triple is
a canonical form, so equality is structural.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

from flint import fmpq, fmpz_poly

__all__ = [
    "PoleError",
    "QRational",
    "q",
    "Q",
    "ONE",
    "ZERO",
    "as_qrational",
    "qnum",
    "qfactorial",
    "qbinomial",
    "qgamma_ratio",
    "qgamma_numeric",
    "eval_at",
]

_ONE_POLY = fmpz_poly([1])
_ZERO_POLY = fmpz_poly([])


class PoleError(ArithmeticError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _low_order(p: fmpz_poly) -> int:
    i = 0
    while p[i] == 0:
        i += 1
    return i


class QRational:
    """An element of Q(q) in canonical reduced form. Immutable."""

    __slots__ = ("num", "den", "val", "_hash")

    def __init__(self, value: Union[int, Fraction, "QRational"] = 0):
        if isinstance(value, QRational):
            self.num, self.den, self.val = value.num, value.den, value.val
        elif isinstance(value, int):
            self.num, self.den, self.val = fmpz_poly([value]) if value else _ZERO_POLY, _ONE_POLY, 0
        elif isinstance(value, Rational):
            f = Fraction(value)
            if f == 0:
                self.num, self.den, self.val = _ZERO_POLY, _ONE_POLY, 0
            else:
                self.num, self.den, self.val = fmpz_poly([f.numerator]), fmpz_poly([f.denominator]), 0
        else:
            raise TypeError(f"cannot build QRational from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, num: fmpz_poly, den: fmpz_poly, val: int) -> "QRational":
        obj = object.__new__(cls)
        obj.num, obj.den, obj.val, obj._hash = num, den, val, None
        return obj

    @classmethod
    def from_polys(cls, num: fmpz_poly, den: fmpz_poly = _ONE_POLY, val: int = 0) -> "QRational":
        """Build ``q**val * num / den`` and reduce it to canonical form."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return ZERO
        s = _low_order(num)
        if s:
            num = num.right_shift(s)
            val += s
        s = _low_order(den)
        if s:
            den = den.right_shift(s)
            val -= s
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        return cls._raw(num, den, val)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QRational":
        if coeff == 0:
            return ZERO
        return cls._raw(fmpz_poly([coeff]), _ONE_POLY, power)

    @classmethod
    def laurent(cls, coeffs, offset: int = 0) -> "QRational":
        """``sum(c * q**(offset + i))`` for integer ``coeffs``."""
        return cls.from_polys(fmpz_poly([int(c) for c in coeffs]), _ONE_POLY, offset)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.val == 0 and self.num.degree() <= 0 and self.den.degree() <= 0

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __neg__(self) -> "QRational":
        if self.num.is_zero():
            return self
        return QRational._raw(-self.num, self.den, self.val)

    def __pos__(self) -> "QRational":
        return self

    def __add__(self, other) -> "QRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        v = min(self.val, other.val)
        a = self.num.left_shift(self.val - v) if self.val != v else self.num
        c = other.num.left_shift(other.val - v) if other.val != v else other.num
        b, d = self.den, other.den
        if b.is_one() and d.is_one():
            return QRational.from_polys(a + c, _ONE_POLY, v)
        if b == d:
            return QRational.from_polys(a + c, b, v)
        g = b.gcd(d)
        if g.is_one():
            return QRational.from_polys(a * d + c * b, b * d, v)
        bg, dg = b / g, d / g
        return QRational.from_polys(a * dg + c * bg, b * dg, v)

    __radd__ = __add__

    def __sub__(self, other) -> "QRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        v = self.val + other.val
        if self.den.is_one() and other.den.is_one():
            return QRational._raw(self.num * other.num, _ONE_POLY, v)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = a.gcd(d)
        if not g1.is_one():
            a, d = a / g1, d / g1
        g2 = c.gcd(b)
        if not g2.is_one():
            c, b = c / g2, b / g2
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QRational._raw(num, den, v)

    __rmul__ = __mul__

    def inverse(self) -> "QRational":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return QRational._raw(num, den, -self.val)

    def __truediv__(self, other) -> "QRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "QRational":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        if self.num.is_zero():
            return ZERO
        return QRational._raw(self.num ** n, self.den ** n, self.val * n)

    # -- comparison / hashing ---------------------------------------------
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.val == other.val and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((self.val, tuple(int(c) for c in self.num.coeffs()),
                                   tuple(int(c) for c in self.den.coeffs())))
        return self._hash

    # -- substitutions ----------------------------------------------------
    def subs_power(self, k: int) -> "QRational":
        """Substitute ``q -> q**k`` (``k`` a nonzero integer)."""
        if k == 0:
            raise ValueError("q -> q**0 is not a field automorphism")
        if self.num.is_zero() or k == 1:
            return self
        x = self
        if k < 0:
            x = x.invert_q()
            k = -k
        return QRational.from_polys(x.num.inflate(k), x.den.inflate(k), x.val * k)

    def invert_q(self) -> "QRational":
        """Substitute ``q -> 1/q``."""
        if self.num.is_zero():
            return self
        dn, dd = self.num.degree(), self.den.degree()
        rn = fmpz_poly(list(reversed(self.num.coeffs())))
        rd = fmpz_poly(list(reversed(self.den.coeffs())))
        return QRational.from_polys(rn, rd, -self.val - dn + dd)

    # -- evaluation -------------------------------------------------------
    def subs(self, q0) -> Fraction:
        """Exact value at a rational point ``q0``; raises PoleError at a pole."""
        x = fmpq(Fraction(q0).numerator, Fraction(q0).denominator)
        d = self.den(x)
        if d == 0 or (x == 0 and self.val < 0):
            raise PoleError(f"pole at q = {q0}")
        if self.num.is_zero():
            return Fraction(0)
        v = self.num(x) / d * x ** self.val
        return Fraction(int(v.p), int(v.q))

    def at_one(self) -> Fraction:
        """Classical limit q -> 1, defined after canonical reduction."""
        return self.subs(1)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if self.num.is_zero():
            return Fraction(0)
        return Fraction(int(self.num[0]), int(self.den[0]))

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "num": {"offset": self.val, "coeffs": [int(c) for c in self.num.coeffs()]},
            "den": {"offset": 0, "coeffs": [int(c) for c in self.den.coeffs()]},
        }

    @classmethod
    def from_json(cls, data: dict) -> "QRational":
        n, d = data["num"], data["den"]
        return cls.from_polys(
            fmpz_poly([int(c) for c in n["coeffs"]]),
            fmpz_poly([int(c) for c in d["coeffs"]]),
            int(n.get("offset", 0)) - int(d.get("offset", 0)),
        )

    def __str__(self) -> str:
        if self.num.is_zero():
            return "0"
        num, den = self.num, self.den
        if self.val > 0:
            num = num.left_shift(self.val)
        elif self.val < 0:
            den = den.left_shift(-self.val)
        ns = _poly_str(num)
        if den.is_one():
            return ns
        return f"({ns})/({_poly_str(den)})"

    def __repr__(self) -> str:
        return f"QRational({self})"


def _poly_str(p: fmpz_poly) -> str:
    parts = []
    coeffs = [int(c) for c in p.coeffs()]
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "q" if i == 1 else f"q^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _coerce(x):
    if isinstance(x, QRational):
        return x
    if isinstance(x, int):
        return _small_int(x) if -64 <= x <= 64 else QRational(x)
    if isinstance(x, Rational):
        return QRational(x)
    return NotImplemented


def as_qrational(x) -> QRational:
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return c


ZERO = QRational._raw(_ZERO_POLY, _ONE_POLY, 0)
ONE = QRational._raw(_ONE_POLY, _ONE_POLY, 0)
q = QRational.monomial(1)
Q = QRational.monomial(2)

_SMALL = {i: QRational(i) for i in range(-64, 65)}


def _small_int(i: int) -> QRational:
    return _SMALL[i]


def _as_int_exponent(u, power: int) -> int:
    e = Fraction(u) * power
    if e.denominator != 1:
        raise ValueError(f"q-number [{u}] with base q^{power} leaves Q(q)")
    return int(e)


@lru_cache(maxsize=None)
def _qnum_cached(e: int, power: int) -> QRational:
    # (q^e - 1)/(q^power - 1)
    if e == 0:
        return ZERO
    num = QRational.monomial(e) - ONE
    den = QRational.monomial(power) - ONE
    return num / den


def qnum(u, power: int = 1) -> QRational:
    """The q-number ``[u]`` in base ``q**power``: ``(q**(power*u) - 1)/(q**power - 1)``.

    ``u`` may be a Fraction as long as ``power * u`` is an integer, which is how
    half-integer arguments in base ``Q = q**2`` are expressed.
    """
    if power == 0:
        raise ValueError("base q**0 is degenerate")
    return _qnum_cached(_as_int_exponent(u, power), power)


@lru_cache(maxsize=None)
def qfactorial(k: int, power: int = 1) -> QRational:
    """``[k]! = [k][k-1]...[1]`` in base ``q**power``."""
    if k < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for i in range(2, k + 1):
        out = out * qnum(i, power)
    return out


def qbinomial(n: int, k: int, power: int = 1) -> QRational:
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    return qfactorial(n, power) / (qfactorial(n - k, power) * qfactorial(k, power))


def qgamma_ratio(two_t: int, j: int, base: str = "q") -> QRational:
    """``Gamma_b(t + j) / Gamma_b(t) = prod_{s<j} [t + s]_b`` with ``t = two_t / 2``.

    ``base`` is ``"q"`` or ``"Q"`` (``Q = q**2``); base ``q`` needs an integer ``t``.
    """
    if j < 0:
        raise ValueError("qgamma_ratio needs j >= 0")
    if base not in ("q", "Q"):
        raise ValueError(f"unknown base {base!r}")
    power = 1 if base == "q" else 2
    t = Fraction(two_t, 2)
    out = ONE
    for s in range(j):
        out = out * qnum(t + s, power)
    return out


def qgamma_numeric(t: float, q0: float, rtol: float = 1e-15, max_terms: int = 100000) -> float:
    """Jackson's q-Gamma function for ``0 < q0 < 1`` from its infinite product."""
    if not 0.0 < q0 < 1.0:
        raise ValueError("qgamma_numeric needs 0 < q0 < 1")
    if t <= 0 and float(t).is_integer():
        raise PoleError(f"Gamma_q has a pole at t = {t}")
    log_acc = 0.0
    sign = 1.0
    for k in range(max_terms):
        a = 1.0 - q0 ** (k + 1)
        b = 1.0 - q0 ** (t + k)
        if b == 0.0:
            raise PoleError(f"Gamma_q has a pole at t = {t}")
        r = a / b
        if r < 0:
            sign = -sign
        log_acc += math.log(abs(r))
        if abs(r - 1.0) < rtol * 1e-2:
            break
    else:
        raise ArithmeticError("q-Gamma product did not converge")
    value = sign * math.exp(log_acc + (1.0 - t) * math.log(1.0 - q0))
    if not math.isfinite(value):
        raise ArithmeticError("q-Gamma value overflowed")
    return value


def eval_at(x: QRational, q0: float) -> float:
    """Evaluate an exact element at a real ``q0``; the rational value of ``q0`` is used
    exactly and only the final quotient is rounded."""
    if isinstance(x, (int, Fraction)):
        return float(x)
    value = float(x.subs(Fraction(q0)))
    if not math.isfinite(value):
        raise ArithmeticError(f"non-finite value at q = {q0}")
    return value
