"""Clifford-valued polynomials in m commuting variables.

A polynomial is a dict ``(exponents, blade_mask) -> coefficient``.  The public
:class:`CliffordPolynomial` carries coefficients in Q(q).  The classical operators
are also available on raw dicts with any coefficient ring (ints, Fractions or
QRationals), which the decompositions and the independent q-Dirac route use.

Fischer decompositions are computed once per scalar monomial and extended to
Clifford coefficients by right multiplication; every classical operator used
here commutes with right multiplication by a constant.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from flint import fmpz_mat

from .clifford import CliffordElement, bar_sign, blade_sign, blade_str, gen, parse_blade
from .qfield import ONE, ZERO, QRational, as_qrational

Exps = Tuple[int, ...]
Key = Tuple[Exps, int]
Raw = Dict[Key, object]


# ---------------------------------------------------------------------------
# raw dict helpers (coefficient-ring agnostic)

def _acc(out: dict, key, c) -> None:
    v = out.get(key)
    if v is None:
        out[key] = c
    else:
        v = v + c
        if v:
            out[key] = v
        else:
            del out[key]


def raw_clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


def raw_add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        _acc(out, k, v * scale if scale != 1 else v)
    return out


def raw_scale(a: dict, c) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def raw_mul_x(terms: dict, m: int) -> dict:
    """Left multiplication by the vector variable ``sum_j e_j x_j``."""
    out: dict = {}
    for (a, mask), c in terms.items():
        for j in range(m):
            g = 1 << j
            b = a[:j] + (a[j] + 1,) + a[j + 1:]
            _acc(out, (b, g ^ mask), c if blade_sign(g, mask) > 0 else -c)
    return out


def raw_mul_r2(terms: dict, m: int) -> dict:
    out: dict = {}
    for (a, mask), c in terms.items():
        for j in range(m):
            b = a[:j] + (a[j] + 2,) + a[j + 1:]
            _acc(out, (b, mask), c)
    return out


def raw_dirac(terms: dict, m: int) -> dict:
    """Classical Dirac operator ``-sum_j e_j d/dx_j`` acting from the left."""
    out: dict = {}
    for (a, mask), c in terms.items():
        for j in range(m):
            e = a[j]
            if e == 0:
                continue
            g = 1 << j
            b = a[:j] + (e - 1,) + a[j + 1:]
            v = c * e
            _acc(out, (b, g ^ mask), -v if blade_sign(g, mask) > 0 else v)
    return out


def raw_partial(terms: dict, j: int) -> dict:
    out: dict = {}
    for (a, mask), c in terms.items():
        e = a[j]
        if e:
            _acc(out, (a[:j] + (e - 1,) + a[j + 1:], mask), c * e)
    return out


def raw_euler(terms: dict) -> dict:
    return {k: v * sum(k[0]) for k, v in terms.items() if sum(k[0])}


def raw_gamma(terms: dict, m: int) -> dict:
    """``Gamma = x d - E`` with ``x`` the vector variable and ``d`` the Dirac operator."""
    out = raw_mul_x(raw_dirac(terms, m), m)
    for k, v in terms.items():
        d = sum(k[0])
        if d:
            _acc(out, k, -(v * d))
    return out


def raw_laplace(terms: dict, m: int) -> dict:
    out: dict = {}
    for (a, mask), c in terms.items():
        for j in range(m):
            e = a[j]
            if e >= 2:
                _acc(out, (a[:j] + (e - 2,) + a[j + 1:], mask), c * (e * (e - 1)))
    return out


def raw_right_blade(terms: dict, mask_b: int) -> dict:
    out: dict = {}
    for (a, mask), c in terms.items():
        _acc(out, (a, mask ^ mask_b), c if blade_sign(mask, mask_b) > 0 else -c)
    return out


def raw_left_blade(terms: dict, mask_b: int) -> dict:
    out: dict = {}
    for (a, mask), c in terms.items():
        _acc(out, (a, mask_b ^ mask), c if blade_sign(mask_b, mask) > 0 else -c)
    return out


def raw_product(p: dict, r: dict) -> dict:
    out: dict = {}
    for (a, ma), ca in p.items():
        for (b, mb), cb in r.items():
            e = tuple(x + y for x, y in zip(a, b))
            c = ca * cb
            _acc(out, (e, ma ^ mb), c if blade_sign(ma, mb) > 0 else -c)
    return out


def raw_bar(terms: dict) -> dict:
    return {k: (v if bar_sign(k[1]) > 0 else -v) for k, v in terms.items()}


def raw_mul_x_power(terms: dict, m: int, i: int) -> dict:
    """Left multiplication by ``x**i`` using ``x**2 = -r**2``."""
    out = terms
    for _ in range(i // 2):
        out = raw_mul_r2(out, m)
    if (i // 2) % 2:
        out = {k: -v for k, v in out.items()}
    if i % 2:
        out = raw_mul_x(out, m)
    return out


def raw_divmod_r2(terms: dict, m: int) -> Tuple[dict, dict]:
    """Division with remainder by ``r**2``, leading term ``x_1**2``.

    The remainder has no term divisible by ``x_1**2``; quotient and remainder
    are linear in the input with integer structure constants.
    """
    buckets: Dict[int, dict] = {}
    for k, v in terms.items():
        buckets.setdefault(k[0][0], {})[k] = v
    quot: dict = {}
    rem: dict = {}
    top = max(buckets, default=-1)
    for a1 in range(top, -1, -1):
        bucket = buckets.get(a1)
        if not bucket:
            continue
        if a1 < 2:
            for k, v in bucket.items():
                _acc(rem, k, v)
            continue
        low = buckets.setdefault(a1 - 2, {})
        for (a, mask), c in bucket.items():
            if not c:
                continue
            qa = (a1 - 2,) + a[1:]
            _acc(quot, (qa, mask), c)
            for j in range(1, m):
                b = qa[:j] + (qa[j] + 2,) + qa[j + 1:]
                _acc(low, (b, mask), -c)
    return quot, rem


def raw_degree_split(terms: dict) -> Dict[int, dict]:
    out: Dict[int, dict] = {}
    for k, v in terms.items():
        out.setdefault(sum(k[0]), {})[k] = v
    return out


# ---------------------------------------------------------------------------
# monomials and sphere moments

@lru_cache(maxsize=None)
def monomials(m: int, d: int) -> Tuple[Exps, ...]:
    """All exponent vectors of total degree ``d`` in ``m`` variables, in a fixed order."""
    out = []
    for combo in combinations_with_replacement(range(m), d):
        e = [0] * m
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


def dim_homogeneous(m: int, d: int) -> int:
    return comb(d + m - 1, m - 1) if d >= 0 else 0


def dim_monogenic(m: int, k: int) -> int:
    """Real dimension of the degree-``k`` Clifford-valued monogenics."""
    if m == 1:
        return 2 if k == 0 else 0
    return (1 << m) * comb(k + m - 2, m - 2)


def dim_harmonic(m: int, k: int) -> int:
    return dim_homogeneous(m, k) - dim_homogeneous(m, k - 2)


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@lru_cache(maxsize=None)
def sphere_moment(alpha: Exps) -> Fraction:
    """Integral of ``xi**alpha`` over the unit sphere, in units of its area."""
    if any(a % 2 for a in alpha):
        return Fraction(0)
    m = len(alpha)
    n = 1
    for a in alpha:
        n *= _double_factorial(a - 1)
    d = 1
    for j in range(sum(alpha) // 2):
        d *= m + 2 * j
    return Fraction(n, d)


# ---------------------------------------------------------------------------
# public polynomial type

class CliffordPolynomial:
    """A Clifford-valued polynomial with coefficients in Q(q)."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Optional[dict] = None):
        self.m = m
        out = {}
        for k, v in (terms or {}).items():
            v = as_qrational(v)
            if v:
                out[k] = v
        self.terms: Dict[Key, QRational] = out

    @classmethod
    def _wrap(cls, m: int, terms: dict) -> "CliffordPolynomial":
        obj = object.__new__(cls)
        obj.m = m
        obj.terms = terms
        return obj

    @classmethod
    def from_raw(cls, m: int, terms: dict) -> "CliffordPolynomial":
        return cls(m, terms)

    # constructors
    @classmethod
    def zero(cls, m: int) -> "CliffordPolynomial":
        return cls._wrap(m, {})

    @classmethod
    def const(cls, m: int, c=1, mask: int = 0) -> "CliffordPolynomial":
        return cls(m, {((0,) * m, mask): c})

    @classmethod
    def monomial(cls, m: int, alpha, mask: int = 0, c=1) -> "CliffordPolynomial":
        alpha = tuple(alpha)
        if len(alpha) != m:
            raise ValueError("exponent vector length must equal m")
        return cls(m, {(alpha, mask): c})

    @classmethod
    def var(cls, m: int, j: int) -> "CliffordPolynomial":
        """The coordinate ``x_j`` (1-based)."""
        e = [0] * m
        e[j - 1] = 1
        return cls.monomial(m, e)

    @classmethod
    def vector_variable(cls, m: int) -> "CliffordPolynomial":
        return cls._wrap(m, raw_mul_x({((0,) * m, 0): ONE}, m))

    @classmethod
    def r2(cls, m: int) -> "CliffordPolynomial":
        return cls._wrap(m, raw_mul_r2({((0,) * m, 0): ONE}, m))

    @classmethod
    def from_element(cls, a: CliffordElement) -> "CliffordPolynomial":
        return cls(a.m, {((0,) * a.m, k): v for k, v in a.terms.items()})

    # arithmetic
    def _lift(self, other) -> "CliffordPolynomial":
        if isinstance(other, CliffordPolynomial):
            if other.m != self.m:
                raise ValueError(f"dimension mismatch: m={self.m} vs m={other.m}")
            return other
        if isinstance(other, CliffordElement):
            return CliffordPolynomial.from_element(other)
        return CliffordPolynomial.const(self.m, other)

    def __add__(self, other):
        other = self._lift(other)
        return CliffordPolynomial._wrap(self.m, raw_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return CliffordPolynomial._wrap(self.m, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        return CliffordPolynomial._wrap(self.m, raw_add(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (CliffordPolynomial, CliffordElement)):
            other = self._lift(other)
            return CliffordPolynomial._wrap(self.m, raw_product(self.terms, other.terms))
        c = as_qrational(other)
        return CliffordPolynomial._wrap(self.m, raw_scale(self.terms, c))

    def __rmul__(self, other):
        if isinstance(other, CliffordElement):
            return CliffordPolynomial.from_element(other) * self
        c = as_qrational(other)
        return CliffordPolynomial._wrap(self.m, raw_scale(self.terms, c))

    def __truediv__(self, other):
        c = as_qrational(other)
        return self * c.inverse()

    def __pow__(self, n: int):
        out = CliffordPolynomial.const(self.m, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QRational, Fraction, CliffordElement)):
            other = self._lift(other)
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # structure
    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(k[1] == 0 for k in self.terms)

    def degree(self) -> int:
        return max((sum(k[0]) for k in self.terms), default=-1)

    def degrees(self) -> List[int]:
        return sorted({sum(k[0]) for k in self.terms})

    def homogeneous(self, d: int) -> "CliffordPolynomial":
        return CliffordPolynomial._wrap(self.m, {k: v for k, v in self.terms.items() if sum(k[0]) == d})

    def homogeneous_components(self) -> Dict[int, "CliffordPolynomial"]:
        return {d: CliffordPolynomial._wrap(self.m, t) for d, t in sorted(raw_degree_split(self.terms).items())}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def blade_component(self, mask: int) -> "CliffordPolynomial":
        """Scalar polynomial multiplying ``e_mask``."""
        return CliffordPolynomial._wrap(self.m, {(k[0], 0): v for k, v in self.terms.items() if k[1] == mask})

    def grade(self, g: int) -> "CliffordPolynomial":
        return CliffordPolynomial._wrap(self.m, {k: v for k, v in self.terms.items() if bin(k[1]).count("1") == g})

    def map_coeffs(self, fn) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {k: fn(v) for k, v in self.terms.items()})

    def scale_argument(self, c) -> "CliffordPolynomial":
        """``P(c x)`` for a constant ``c`` in Q(q)."""
        c = as_qrational(c)
        out = {}
        for k, v in self.terms.items():
            w = v * c ** sum(k[0])
            if w:
                out[k] = w
        return CliffordPolynomial._wrap(self.m, out)

    def at_q(self, q0) -> Dict[Key, Fraction]:
        """Exact coefficients at a rational value of q."""
        out = {}
        for k, v in self.terms.items():
            w = v.subs(q0)
            if w:
                out[k] = w
        return out

    def to_json(self) -> list:
        return [
            {"exponents": list(k[0]), "blade": blade_str(k[1]), "coeff": v.to_json()}
            for k, v in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, m: int, data: list) -> "CliffordPolynomial":
        return cls(m, {(tuple(t["exponents"]), parse_blade(t["blade"])): QRational.from_json(t["coeff"]) for t in data})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, mask), v in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0][0]), kv[0])):
            mono = "*".join(f"x{j + 1}^{e}" if e > 1 else f"x{j + 1}" for j, e in enumerate(a) if e)
            s = str(v)
            factors = [f"({s})" if (" " in s or "/" in s) else s]
            if mono:
                factors.append(mono)
            if mask:
                factors.append(blade_str(mask))
            if len(factors) > 1 and factors[0] in ("1", "-1"):
                sign = factors.pop(0)[:-1]
                factors[0] = sign + factors[0]
            parts.append("*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# classical operators on CliffordPolynomial

def mul_vector_variable(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_mul_x(P.terms, P.m))


def mul_r2(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_mul_r2(P.terms, P.m))


def dirac(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_dirac(P.terms, P.m))


def euler(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_euler(P.terms))


def gamma_op(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_gamma(P.terms, P.m))


def laplace(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_laplace(P.terms, P.m))


def partial(P: CliffordPolynomial, j: int) -> CliffordPolynomial:
    """Classical partial derivative in ``x_j`` (1-based)."""
    return CliffordPolynomial._wrap(P.m, raw_partial(P.terms, j - 1))


def bar(P: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, raw_bar(P.terms))


def scalar_part(P: CliffordPolynomial) -> CliffordPolynomial:
    return P.blade_component(0)


class DivisionError(ArithmeticError):
    """A polynomial that should have been divisible by r**2 was not."""


def divide_r2(P: CliffordPolynomial) -> CliffordPolynomial:
    quot, rem = raw_divmod_r2(P.terms, P.m)
    if rem:
        raise DivisionError("polynomial is not divisible by r^2")
    return CliffordPolynomial._wrap(P.m, quot)


def radial_polynomial(m: int, coeffs) -> CliffordPolynomial:
    """``sum_n coeffs[n] * r**(2n)`` as a scalar polynomial."""
    out = CliffordPolynomial.zero(m)
    power = CliffordPolynomial.const(m, 1)
    for c in coeffs:
        c = as_qrational(c)
        if c:
            out = out + power * c
        power = mul_r2(power)
    return out


# ---------------------------------------------------------------------------
# sphere integration

def raw_sphere_integral(terms: dict) -> Dict[int, object]:
    out: Dict[int, object] = {}
    for (a, mask), c in terms.items():
        mom = sphere_moment(a)
        if mom:
            _acc(out, mask, c * mom)
    return out


@dataclass(frozen=True)
class SphereValue:
    """``coeff * omega**omega_power`` where omega is the area of the unit sphere."""

    coeff: QRational
    omega_power: int = 1

    def __add__(self, other: "SphereValue") -> "SphereValue":
        if self.coeff and other.coeff and self.omega_power != other.omega_power:
            raise ValueError("cannot add values with different omega powers")
        p = self.omega_power if self.coeff else other.omega_power
        return SphereValue(self.coeff + other.coeff, p)


def sphere_integral(P: CliffordPolynomial) -> CliffordElement:
    """Integral over the unit sphere; coefficients are in units of the sphere area."""
    return CliffordElement(P.m, raw_sphere_integral(P.terms))


def sphere_pairing(f: CliffordPolynomial, g: CliffordPolynomial) -> QRational:
    """``int_S [bar(f) g]_0``, in units of the sphere area."""
    return _blade_diagonal_pairing(f.terms, g.terms)


def _blade_diagonal_pairing(f: dict, g: dict, weight=None):
    # [bar(e_A) e_A]_0 = +1 for every blade, so the form is blade diagonal
    by_mask: Dict[int, list] = {}
    for (a, mask), c in g.items():
        by_mask.setdefault(mask, []).append((a, c))
    total = ZERO
    for (a, mask), c in f.items():
        for b, d in by_mask.get(mask, ()):
            e = tuple(x + y for x, y in zip(a, b))
            mom = sphere_moment(e)
            if mom:
                w = mom if weight is None else mom * weight(sum(e))
                total = total + c * d * w
    return total


# ---------------------------------------------------------------------------
# Fischer decompositions of scalar monomials (rational coefficients)

@lru_cache(maxsize=None)
def _harmonic_parts(m: int, alpha: Exps) -> Tuple[dict, ...]:
    """Harmonic components ``h_{d-2l}`` with ``x**alpha = sum_l r**(2l) h_{d-2l}``.

    Uses ``Lap(r**(2l) h_k) = 2l(2l+2k+m-2) r**(2l-2) h_k`` and recursion on the
    Laplacian of the monomial.
    """
    d = sum(alpha)
    key = (alpha, 0)
    p = {key: Fraction(1)}
    if d < 2:
        return (p,)
    lap = raw_laplace(p, m)
    # decompose the Laplacian by linearity over cached monomials
    sub: List[dict] = [dict() for _ in range((d - 2) // 2 + 1)]
    for (b, _), c in lap.items():
        for l, h in enumerate(_harmonic_parts(m, b)):
            for k2, v in h.items():
                _acc(sub[l], k2, v * c)
    parts: List[dict] = [None] * (d // 2 + 1)  # type: ignore[list-item]
    rest = dict(p)
    for l in range(1, d // 2 + 1):
        scale = Fraction(1, 2 * l * (2 * d - 2 * l + m - 2))
        h = {k2: v * scale for k2, v in sub[l - 1].items()}
        parts[l] = h
        shifted = h
        for _ in range(l):
            shifted = raw_mul_r2(shifted, m)
        rest = raw_add(rest, shifted, -1)
    parts[0] = rest
    return tuple(parts)


@lru_cache(maxsize=None)
def monomial_blocks(m: int, alpha: Exps) -> Tuple[Tuple[int, int, dict], ...]:
    """Monogenic Fischer blocks of a scalar monomial: tuples ``(i, k, M_k)`` with
    ``x**alpha = sum x_vec**i M_k``, coefficients rational."""
    out = []
    for l, h in enumerate(_harmonic_parts(m, alpha)):
        k = sum(alpha) - 2 * l
        sign = -1 if l % 2 else 1
        if not h:
            continue
        if k >= 1:
            dh = raw_dirac(h, m)
            scale = Fraction(1, m + 2 * k - 2)
            mk1 = {kk: v * scale for kk, v in dh.items()}
        else:
            mk1 = {}
        mk = raw_add(h, raw_mul_x(mk1, m), -1)
        if mk:
            out.append((2 * l, k, {kk: v * sign for kk, v in mk.items()}))
        if mk1:
            out.append((2 * l + 1, k - 1, {kk: v * sign for kk, v in mk1.items()}))
    return tuple(sorted(out, key=lambda t: t[0]))


def harmonic_decompose(P: CliffordPolynomial) -> List[Tuple[int, CliffordPolynomial]]:
    """``P = sum_i x_vec**(2i) H_{k-2i}`` for homogeneous ``P``; returns ``(i, H)`` pairs."""
    degs = P.degrees()
    if len(degs) > 1:
        raise ValueError("harmonic_decompose needs a homogeneous polynomial")
    acc: Dict[int, dict] = {}
    for (a, mask), c in P.terms.items():
        for l, h in enumerate(_harmonic_parts(P.m, a)):
            sign = -1 if l % 2 else 1
            t = acc.setdefault(l, {})
            for (b, _), v in h.items():
                _acc(t, (b, mask), c * (v * sign))
    return [(l, CliffordPolynomial(P.m, t)) for l, t in sorted(acc.items()) if t]


def raw_fischer_blocks(terms: dict, m: int) -> Dict[Tuple[int, int], dict]:
    """Monogenic Fischer blocks ``(i, k) -> M_k`` of an arbitrary polynomial."""
    acc: Dict[Tuple[int, int], dict] = {}
    for (a, mask), c in terms.items():
        for i, k, mk in monomial_blocks(m, a):
            t = acc.setdefault((i, k), {})
            for (b, bm), v in mk.items():
                w = c * v
                _acc(t, (b, bm ^ mask), w if blade_sign(bm, mask) > 0 else -w)
    return {ik: t for ik, t in acc.items() if t}


def monogenic_decompose(P: CliffordPolynomial) -> List[Tuple[int, CliffordPolynomial]]:
    """``P = sum_i x_vec**i M_{k-i}`` for homogeneous ``P``; returns ``(i, M)`` pairs."""
    if len(P.degrees()) > 1:
        raise ValueError("monogenic_decompose needs a homogeneous polynomial")
    blocks = raw_fischer_blocks(P.terms, P.m)
    return [(i, CliffordPolynomial(P.m, t)) for (i, _), t in sorted(blocks.items())]


def fischer_blocks(P: CliffordPolynomial) -> Dict[Tuple[int, int], CliffordPolynomial]:
    return {ik: CliffordPolynomial(P.m, t) for ik, t in sorted(raw_fischer_blocks(P.terms, P.m).items())}


def recompose(m: int, blocks) -> CliffordPolynomial:
    """Inverse of :func:`fischer_blocks`: ``sum x_vec**i M``."""
    items = blocks.items() if isinstance(blocks, dict) else ((ik, M) for ik, M in blocks)
    out: dict = {}
    for ik, M in items:
        i = ik[0] if isinstance(ik, tuple) else ik
        terms = M.terms if isinstance(M, CliffordPolynomial) else M
        for k, v in raw_mul_x_power(terms, m, i).items():
            _acc(out, k, v)
    return CliffordPolynomial(m, out)


# ---------------------------------------------------------------------------
# bases of monogenics and harmonics

@dataclass
class MonogenicBasis:
    m: int
    k: int
    elements: List[CliffordPolynomial]
    gram: List[QRational] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "elements": [e.to_json() for e in self.elements],
            "gram": [g.to_json() for g in self.gram],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MonogenicBasis":
        m = data["m"]
        return cls(
            m,
            data["k"],
            [CliffordPolynomial.from_json(m, e) for e in data["elements"]],
            [QRational.from_json(g) for g in data["gram"]],
        )


def _nullspace(columns: List[Key], image, m: int) -> List[List[int]]:
    """Integer basis of the kernel of a linear map given on basis keys."""
    images = [image({col: 1}) for col in columns]
    rows_index: Dict[Key, int] = {}
    for img in images:
        for key in img:
            rows_index.setdefault(key, len(rows_index))
    n_rows, n_cols = len(rows_index), len(columns)
    if n_rows == 0:
        return [[int(i == j) for i in range(n_cols)] for j in range(n_cols)]
    entries = [0] * (n_rows * n_cols)
    for j, img in enumerate(images):
        for key, v in img.items():
            entries[rows_index[key] * n_cols + j] = int(v)
    X, nullity = fmpz_mat(n_rows, n_cols, entries).nullspace()
    vectors = []
    for c in range(nullity):
        vec = [int(X[i, c]) for i in range(n_cols)]
        vectors.append(vec)
    return vectors


def _orthogonalize(vectors: List[dict], pairing) -> Tuple[List[dict], List[Fraction]]:
    """Gram-Schmidt without normalization, exact over Q."""
    basis: List[dict] = []
    norms: List[Fraction] = []
    for v in vectors:
        w = dict(v)
        for b, n in zip(basis, norms):
            c = pairing(b, v) / n
            if c:
                w = raw_add(w, b, -c)
        n = pairing(w, w)
        if n == 0:
            raise ArithmeticError("degenerate sphere pairing during orthogonalization")
        basis.append(w)
        norms.append(n)
    return basis, norms


def _fraction_pairing(f: dict, g: dict) -> Fraction:
    by_mask: Dict[int, list] = {}
    for (a, mask), c in g.items():
        by_mask.setdefault(mask, []).append((a, c))
    total = Fraction(0)
    for (a, mask), c in f.items():
        for b, d in by_mask.get(mask, ()):
            mom = sphere_moment(tuple(x + y for x, y in zip(a, b)))
            if mom:
                total += c * d * mom
    return total


def _clear_denominators(v: dict) -> dict:
    from math import lcm

    den = 1
    for c in v.values():
        den = lcm(den, Fraction(c).denominator)
    return {k: Fraction(c) * den for k, c in v.items()}


_CACHE_ENV = "QCLIFFORD_CACHE_DIR"


def _cache_path(kind: str, m: int, k: int, cache_dir) -> Optional[Path]:
    base = cache_dir if cache_dir is not None else os.environ.get(_CACHE_ENV)
    if not base:
        return None
    return Path(base) / f"{kind}_m{m}_k{k}.json"


@lru_cache(maxsize=None)
def _monogenic_basis_raw(m: int, k: int) -> Tuple[Tuple[dict, ...], Tuple[Fraction, ...]]:
    if m == 1 and k > 0:
        return (), ()
    columns = [(a, mask) for a in monomials(m, k) for mask in range(1 << m)]
    kernel = _nullspace(columns, lambda t: raw_dirac(t, m), m)
    vectors = [{columns[i]: Fraction(c) for i, c in enumerate(vec) if c} for vec in kernel]
    basis, norms = _orthogonalize(vectors, _fraction_pairing)
    return tuple(basis), tuple(norms)


def monogenic_basis(m: int, k: int, cache_dir=None) -> MonogenicBasis:
    """Sphere-orthogonal basis of degree-``k`` Clifford-valued monogenics.

    The basis is orthogonal but not normalized; ``gram`` lists the squared
    sphere norms in units of the sphere area.
    """
    path = _cache_path("monogenic", m, k, cache_dir)
    if path is not None and path.exists():
        return MonogenicBasis.from_json(json.loads(path.read_text()))
    basis, norms = _monogenic_basis_raw(m, k)
    out = MonogenicBasis(
        m, k, [CliffordPolynomial(m, b) for b in basis], [as_qrational(n) for n in norms]
    )
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(out.to_json(), sort_keys=True))
    return out


@lru_cache(maxsize=None)
def _harmonic_basis_raw(m: int, k: int) -> Tuple[Tuple[dict, ...], Tuple[Fraction, ...]]:
    columns = [(a, 0) for a in monomials(m, k)]
    kernel = _nullspace(columns, lambda t: raw_laplace(t, m), m)
    vectors = [{columns[i]: Fraction(c) for i, c in enumerate(vec) if c} for vec in kernel]
    basis, norms = _orthogonalize(vectors, _fraction_pairing)
    return tuple(basis), tuple(norms)


def harmonic_basis(m: int, k: int) -> MonogenicBasis:
    """Sphere-orthogonal basis of scalar degree-``k`` spherical harmonics."""
    basis, norms = _harmonic_basis_raw(m, k)
    return MonogenicBasis(m, k, [CliffordPolynomial(m, b) for b in basis], [as_qrational(n) for n in norms])


def basis_elements(m: int, d: int) -> Iterable[CliffordPolynomial]:
    """Every monomial-blade basis element of degree ``d``."""
    for a in monomials(m, d):
        for mask in range(1 << m):
            yield CliffordPolynomial._wrap(m, {(a, mask): ONE})


__all__ = [
    "CliffordPolynomial",
    "MonogenicBasis",
    "SphereValue",
    "DivisionError",
    "mul_vector_variable",
    "mul_r2",
    "dirac",
    "euler",
    "gamma_op",
    "laplace",
    "partial",
    "bar",
    "scalar_part",
    "divide_r2",
    "radial_polynomial",
    "sphere_integral",
    "sphere_pairing",
    "sphere_moment",
    "harmonic_decompose",
    "monogenic_decompose",
    "fischer_blocks",
    "recompose",
    "monogenic_basis",
    "harmonic_basis",
    "monomials",
    "basis_elements",
    "dim_monogenic",
    "dim_harmonic",
    "gen",
]
