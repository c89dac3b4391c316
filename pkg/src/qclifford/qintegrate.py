"""Jackson q-integration: exact on polynomials, symbolic for Gaussian weights,
numeric as an independent check.

Gaussian-weighted integrals are exact multiples of two formal units:

* ``g1 = q Gamma_Q(1/2) / (q+1)``, the radial integral of ``e_Q(-t^2)`` on ``[0, lambda_Q]``;
* ``g2 = Q / (q+1)``, the radial integral of ``t e_Q(-t^2)``, which lies in Q(q) and
  is kept formal only so that both parities are handled alike.

``G(nu) = int_0^lambda_Q t^(nu-1) e_Q(-t^2) d_qt`` reduces to one of them through
``G(nu+2) = Q [nu/2]_Q G(nu)``.  Sphere integrals carry the unit ``omega`` (the
area of the unit sphere) and ball integrals over a formal radius carry powers of
``R``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional, Tuple

from .clifford import blade_str
from .polyspace import (
    CliffordPolynomial,
    bar,
    mul_vector_variable,
    radial_polynomial,
    raw_sphere_integral,
    sphere_integral,
)
from .qfield import ONE, ZERO, Q, QRational, as_qrational, q, qfactorial, qgamma_numeric, qnum
from .qoperators import Q_DIRAC, Q_LAPLACE, q_power_gamma_op
from .report import SuiteReport
from .univariate import QPoly1D

ANCHORS = (None, "g1", "g2")


# ---------------------------------------------------------------------------
# values

@dataclass(frozen=True)
class ExtendedScalar:
    """``sum coeff * e_mask * R**rpow`` times ``omega**omega`` times an anchor unit.

    ``terms`` maps ``(blade_mask, rpow)`` to a Q(q) coefficient.  All nonzero
    values carry a single unit; adding values with different units is an error.
    """

    terms: Mapping[Tuple[int, int], QRational] = field(default_factory=dict)
    omega: int = 0
    anchor: Optional[str] = None

    def __post_init__(self):
        if self.anchor not in ANCHORS:
            raise ValueError(f"unknown anchor {self.anchor!r}")
        if self.omega not in (0, 1):
            raise ValueError("omega power must be 0 or 1")
        clean = {k: as_qrational(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def scalar(cls, c, omega: int = 0, anchor: Optional[str] = None, rpow: int = 0) -> "ExtendedScalar":
        return cls({(0, rpow): as_qrational(c)}, omega, anchor)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def unit(self) -> Tuple[int, Optional[str]]:
        return self.omega, self.anchor

    def _merge_unit(self, other: "ExtendedScalar") -> Tuple[int, Optional[str]]:
        if not self.terms:
            return other.unit()
        if not other.terms:
            return self.unit()
        if self.unit() != other.unit():
            raise ValueError(f"cannot add values with units {self.unit()} and {other.unit()}")
        return self.unit()

    def __add__(self, other: "ExtendedScalar") -> "ExtendedScalar":
        if other == 0:
            return self
        omega, anchor = self._merge_unit(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return ExtendedScalar(out, omega, anchor)

    __radd__ = __add__

    def __neg__(self) -> "ExtendedScalar":
        return ExtendedScalar({k: -v for k, v in self.terms.items()}, self.omega, self.anchor)

    def __sub__(self, other: "ExtendedScalar") -> "ExtendedScalar":
        return self + (-other)

    def __mul__(self, c) -> "ExtendedScalar":
        c = as_qrational(c)
        return ExtendedScalar({k: v * c for k, v in self.terms.items()}, self.omega, self.anchor)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "ExtendedScalar":
        return self * as_qrational(c).inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, ExtendedScalar):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.unit() == other.unit() and self.terms == other.terms

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.unit()))

    def coeff(self, mask: int = 0, rpow: int = 0) -> QRational:
        return self.terms.get((mask, rpow), ZERO)

    def scalar_part(self) -> "ExtendedScalar":
        return ExtendedScalar({k: v for k, v in self.terms.items() if k[0] == 0}, self.omega, self.anchor)

    def ratio(self, other: "ExtendedScalar") -> QRational:
        """``self / other`` when both are proportional with the same unit."""
        if not other.terms:
            raise ZeroDivisionError("ratio to zero")
        if not self.terms:
            return ZERO
        if self.unit() != other.unit() or self.terms.keys() != other.terms.keys():
            raise ValueError("values are not proportional")
        it = iter(other.terms)
        k0 = next(it)
        r = self.terms[k0] / other.terms[k0]
        for k in other.terms:
            if self.terms[k] != other.terms[k] * r:
                raise ValueError("values are not proportional")
        return r

    def times_omega(self) -> "ExtendedScalar":
        if self.omega:
            raise ValueError("omega power would exceed 1")
        return ExtendedScalar(dict(self.terms), 1, self.anchor)

    def scale_radius(self, c) -> "ExtendedScalar":
        """Substitute ``R -> c R``."""
        c = as_qrational(c)
        return ExtendedScalar({(b, n): v * c ** n for (b, n), v in self.terms.items()}, self.omega, self.anchor)

    def at_radius(self, R) -> "ExtendedScalar":
        R = as_qrational(R)
        out: Dict[Tuple[int, int], QRational] = {}
        for (b, n), v in self.terms.items():
            out[(b, 0)] = out.get((b, 0), ZERO) + v * R ** n
        return ExtendedScalar(out, self.omega, self.anchor)

    def resolve_g2(self) -> "ExtendedScalar":
        """Replace the formal unit ``g2`` by its value ``Q/(q+1)``."""
        if self.anchor != "g2":
            return self
        return ExtendedScalar(dict(self.terms), self.omega, None) * (Q / (q + 1))

    def evaluate(self, q0: float, m: Optional[int] = None, R: Optional[float] = None, mask: int = 0) -> float:
        """Numeric value of one blade component."""
        total = 0.0
        for (b, n), v in self.terms.items():
            if b != mask:
                continue
            if n and R is None:
                raise ValueError("a numeric radius is needed")
            total += float(v.subs(Fraction(q0))) * (R ** n if n else 1.0)
        if self.omega:
            if m is None:
                raise ValueError("the dimension is needed to evaluate omega")
            total *= sphere_area(m)
        if self.anchor:
            total *= anchor_value(self.anchor, q0)
        return total

    def to_json(self) -> dict:
        return {
            "omega": self.omega,
            "anchor": self.anchor,
            "terms": [
                {"blade": blade_str(b), "R_power": n, "coeff": str(v)}
                for (b, n), v in sorted(self.terms.items())
            ],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        unit = "*".join(u for u in (("omega" if self.omega else ""), self.anchor or "") if u)
        parts = []
        for (b, n), v in sorted(self.terms.items()):
            f = [f"({v})"]
            if b:
                f.append(blade_str(b))
            if n:
                f.append(f"R^{n}")
            parts.append("*".join(f))
        body = " + ".join(parts)
        return f"[{body}]*{unit}" if unit else body

    __repr__ = __str__


def sphere_area(m: int) -> float:
    return 2 * math.pi ** (m / 2) / math.gamma(m / 2)


def anchor_value(anchor: str, q0: float) -> float:
    Q0 = q0 * q0
    if anchor == "g1":
        return q0 * qgamma_numeric(0.5, Q0) / (q0 + 1)
    if anchor == "g2":
        return Q0 / (q0 + 1)
    raise ValueError(anchor)


# ---------------------------------------------------------------------------
# one-dimensional integration

def jackson_poly(f: QPoly1D, a, b) -> QRational:
    """Exact ``int_a^b f(t) d_qt`` for a polynomial ``f``."""
    a, b = as_qrational(a), as_qrational(b)
    total = ZERO
    for n, c in enumerate(f.coeffs):
        if c:
            total = total + c * (b ** (n + 1) - a ** (n + 1)) / qnum(n + 1)
    return total


def jackson_numeric(
    f: Callable[[float], float],
    a: float,
    b: float,
    q0: float,
    tol: float = 1e-14,
    max_terms: int = 1_000_000,
) -> float:
    """``int_a^b f d_qt = int_0^b - int_0^a`` by summing the lattice series."""
    if not 0.0 < q0 < 1.0:
        raise ValueError("jackson_numeric needs 0 < q0 < 1")
    return _jackson_from_zero(f, b, q0, tol, max_terms) - _jackson_from_zero(f, a, q0, tol, max_terms)


def _jackson_from_zero(f, a: float, q0: float, tol: float, max_terms: int) -> float:
    if a == 0.0:
        return 0.0
    f0 = abs(f(0.0)) if _defined_at_zero(f) else 0.0
    total = 0.0
    scale = 1.0
    for k in range(max_terms):
        v = f(a * scale)
        total += v * scale
        tail = abs(a) * scale * q0 * max(abs(v), f0)
        if k > 4 and tail <= tol * max(1.0, abs(total) * (1 - q0)):
            return (1 - q0) * a * total
        scale *= q0
    raise ArithmeticError("Jackson series did not converge within the iteration cap")


def _defined_at_zero(f) -> bool:
    try:
        v = f(0.0)
    except (ZeroDivisionError, ValueError, OverflowError):
        return False
    return math.isfinite(v)


def e_q_numeric(x: float, q0: float, method: str = "product", max_terms: int = 200) -> float:
    """``e_q(x) = sum q^(j(j-1)/2) x^j / [j]_q!`` for ``0 < q0 < 1``.

    The product form is ``prod_k (1 + (1 - q) q^k x)``; the series is summed until
    a term drops below ``1e-16`` of the partial sum, with a cap on the number of terms.
    """
    if method == "product":
        out = 1.0
        k = 0
        while True:
            fac = (1 - q0) * q0 ** k * x
            out *= 1 + fac
            if abs(fac) < 1e-18 or out == 0.0:
                return out
            k += 1
            if k > 100000:
                raise ArithmeticError("product did not converge")
    if method == "series":
        total, term = 1.0, 1.0
        for j in range(1, max_terms + 1):
            # term_j = term_{j-1} * q^(j-1) x / [j]_q
            term *= q0 ** (j - 1) * x * (1 - q0) / (1 - q0 ** j)
            total += term
            if abs(term) < 1e-16 * max(abs(total), 1e-300) and j > 2:
                return total
        return total
    raise ValueError(f"unknown method {method!r}")


def E_q_numeric(x: float, q0: float, max_terms: int = 200) -> float:
    total, term = 1.0, 1.0
    for j in range(1, max_terms + 1):
        term *= x * (1 - q0) / (1 - q0 ** j)
        total += term
        if abs(term) < 1e-16 * max(abs(total), 1e-300) and j > 2:
            break
    return total


def lambda_Q(q0: float) -> float:
    return math.sqrt(1.0 / (1.0 - q0 * q0))


# ---------------------------------------------------------------------------
# Gaussian radial integrals

def gaussian_radial(nu: int) -> ExtendedScalar:
    """Exact ``int_0^lambda_Q t^(nu-1) e_Q(-t^2) d_qt``."""
    if nu < 1:
        raise ValueError("gaussian_radial needs nu >= 1")
    anchor = "g1" if nu % 2 else "g2"
    c = ONE
    v = 1 if nu % 2 else 2
    while v < nu:
        c = c * Q * qnum(Fraction(v, 2), 2)
        v += 2
    return ExtendedScalar.scalar(c, 0, anchor)


def gaussian_radial_numeric(nu: int, q0: float, method: str = "product") -> float:
    lam = lambda_Q(q0)
    Q0 = q0 * q0
    return jackson_numeric(lambda t: t ** (nu - 1) * e_q_numeric(-t * t, Q0, method), 0.0, lam, q0)


def gaussian_radial_closed_form(nu: int, q0: float) -> float:
    """``Q^(nu/2) Gamma_Q(nu/2) / (q+1)`` through the numeric q-Gamma product."""
    Q0 = q0 * q0
    return Q0 ** (nu / 2) * qgamma_numeric(nu / 2, Q0) / (q0 + 1)


# ---------------------------------------------------------------------------
# ball integrals

def ball_integral_poly(P: CliffordPolynomial) -> ExtendedScalar:
    """``int_{B(R)} P d_qV`` over a ball of formal radius ``R`` (powers of R tracked)."""
    m = P.m
    out: Dict[Tuple[int, int], QRational] = {}
    for d, comp in P.homogeneous_components().items():
        s = raw_sphere_integral(comp.terms)
        w = qnum(m + d).inverse()
        for mask, c in s.items():
            out[(mask, m + d)] = out.get((mask, m + d), ZERO) + c * w
    return ExtendedScalar(out, 1, None)


def ball_integral_gaussian(P: CliffordPolynomial, s: int = 0) -> ExtendedScalar:
    """``int_{B(lambda_Q)} P e_Q(Q^s x^2) d_qV`` for ``s <= 1``.

    For ``s <= 1`` the lattice points added by the rescaling are zeros of ``e_Q``,
    which gives ``q^(-s nu) G(nu)`` for the radial factor; larger ``s`` would
    introduce values of ``e_Q`` away from its zeros.
    """
    if s > 1:
        raise ValueError("Gaussian ball integrals are exact only for e_Q(Q^s x^2) with s <= 1")
    m = P.m
    total = ExtendedScalar()
    for d, comp in P.homogeneous_components().items():
        sph = raw_sphere_integral(comp.terms)
        if not sph:
            continue
        g = gaussian_radial(m + d) * QRational.monomial(-s * (m + d))
        c = g.terms[(0, 0)]
        total = total + ExtendedScalar({(mask, 0): v * c for mask, v in sph.items()}, 1, g.anchor)
    return total


@dataclass(frozen=True)
class GaussPoly:
    """``poly * e_Q(Q^s x^2)``."""

    poly: CliffordPolynomial
    s: int = 0

    def q_dirac(self) -> "GaussPoly":
        # D(p e_Q(Q^s x^2)) = e_Q(Q^(s+1) x^2) [(q+1) Q^s x p + D p]
        p = self.poly
        new = mul_vector_variable(p) * ((q + 1) * QRational.monomial(2 * self.s)) + Q_DIRAC.apply(p)
        return GaussPoly(new, self.s + 1)

    def q_laplace(self) -> "GaussPoly":
        g = self.q_dirac().q_dirac()
        return GaussPoly(-g.poly, g.s)

    def scale_q(self) -> "GaussPoly":
        """``f(q x)``."""
        return GaussPoly(self.poly.scale_argument(q), self.s + 1)

    def left_mul(self, f: CliffordPolynomial) -> "GaussPoly":
        return GaussPoly(f * self.poly, self.s)

    def bar(self) -> "GaussPoly":
        return GaussPoly(bar(self.poly), self.s)

    def integrate(self) -> ExtendedScalar:
        return ball_integral_gaussian(self.poly, self.s)

    def series(self, order: int) -> CliffordPolynomial:
        """Truncation of ``poly * e_Q(Q^s x^2)`` to total degree ``<= order``."""
        return _truncate(self.poly * gaussian_series(self.poly.m, self.s, order), order)


def gaussian_series(m: int, s: int, order: int) -> CliffordPolynomial:
    """``e_Q(Q^s x^2)`` truncated to degree ``<= order`` (``x^2 = -r^2``)."""
    coeffs = []
    for j in range(order // 2 + 1):
        # q^(j(j-1)) Q^(s j) (-1)^j r^(2j) / [j]_Q!
        c = QRational.monomial(j * (j - 1) + 2 * s * j) / qfactorial(j, 2)
        coeffs.append(-c if j % 2 else c)
    return radial_polynomial(m, coeffs)


def _truncate(P: CliffordPolynomial, order: int) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(P.m, {k: v for k, v in P.terms.items() if sum(k[0]) <= order})


# ---------------------------------------------------------------------------
# Cauchy formula and corollaries

def q_cauchy_sides(f: CliffordPolynomial, g: CliffordPolynomial) -> Tuple[ExtendedScalar, ExtendedScalar]:
    """Both sides of the q-Cauchy formula on a ball of formal radius ``R``.

    Left: ``int_B [bar(q^Gamma D f) g(qx) - bar(f) D g] d_qV``.
    Right: ``R^(m-1) int_S bar(f(R xi)) xi g(R xi) d xi``, i.e. the boundary integral
    with the unit-sphere measure pulled back and the powers of ``R`` kept explicit.
    """
    m = f.m
    qG = q_power_gamma_op(1)
    left_integrand = bar(qG.apply(Q_DIRAC.apply(f))) * g.scale_argument(q) - bar(f) * Q_DIRAC.apply(g)
    lhs = ball_integral_poly(left_integrand)
    out: Dict[Tuple[int, int], QRational] = {}
    fb = bar(f).homogeneous_components()
    gc = g.homogeneous_components()
    for a, fa in fb.items():
        xf = fa * CliffordPolynomial.vector_variable(m)
        for b, gb in gc.items():
            s = raw_sphere_integral((xf * gb).terms)
            for mask, c in s.items():
                key = (mask, m - 1 + a + b)
                out[key] = out.get(key, ZERO) + c
    return lhs, ExtendedScalar(out, 1, None)


def q_cauchy_check(f: CliffordPolynomial, g: CliffordPolynomial) -> Optional[dict]:
    lhs, rhs = q_cauchy_sides(f, g)
    if lhs != rhs:
        return {"f": str(f), "g": str(g), "lhs": str(lhs), "rhs": str(rhs)}
    return None


def scaling_law_check(P: CliffordPolynomial, c) -> Optional[dict]:
    """``int_{B(R)} f(c x) = c^(-m) int_{B(cR)} f``."""
    c = as_qrational(c)
    lhs = ball_integral_poly(P.scale_argument(c))
    rhs = ball_integral_poly(P).scale_radius(c) * c ** (-P.m)
    return None if lhs == rhs else {"P": str(P), "c": str(c), "lhs": str(lhs), "rhs": str(rhs)}


def gamma_sphere_symmetry_check(f: CliffordPolynomial, g: CliffordPolynomial) -> Optional[dict]:
    """``int_S bar(q^Gamma f) g = int_S bar(f) q^Gamma g``."""
    qG = q_power_gamma_op(1)
    lhs = sphere_integral(bar(qG.apply(f)) * g)
    rhs = sphere_integral(bar(f) * qG.apply(g))
    return None if lhs == rhs else {"f": str(f), "g": str(g), "lhs": str(lhs), "rhs": str(rhs)}


def laplace_symmetry_check(f: CliffordPolynomial, p: CliffordPolynomial) -> Optional[dict]:
    """``int f(qx) Lap_q g = int (Lap_q f) g(qx)`` over ``B(lambda_Q)`` with
    ``g = p e_Q(Q^-1 x^2)``, so that ``g`` and ``D g`` vanish on the boundary sphere."""
    g = GaussPoly(p, -1)
    lhs = g.q_laplace().left_mul(f.scale_argument(q)).integrate()
    rhs = g.scale_q().left_mul(Q_LAPLACE.apply(f)).integrate()
    return None if lhs == rhs else {"f": str(f), "p": str(p), "lhs": str(lhs), "rhs": str(rhs)}


def gaussian_leibniz_check(p: CliffordPolynomial, s: int, order: int) -> Optional[dict]:
    """The closed form of ``D(p e_Q(Q^s x^2))`` against the truncated series."""
    g = GaussPoly(p, s)
    direct = _truncate(Q_DIRAC.apply(g.series(order + 1)), order)
    closed = g.q_dirac().series(order)
    return None if direct == closed else {"p": str(p), "s": s, "difference": str(direct - closed)}


# ---------------------------------------------------------------------------
# change of variables

def changevar_i_check(f: QPoly1D, k: int, a, b) -> Optional[dict]:
    """``int_{a^k}^{b^k} f(t) d_{q^k}(t^k) = [k]_q int_a^b f(t) t^(k-1) d_qt`` for polynomial ``f``.

    In the variable ``u = t^k`` the term ``t^n`` is ``u^(n/k)``, whose integral in base
    ``q^k`` is ``(b^(n+k) - a^(n+k)) / [n/k + 1]_{q^k}``.
    """
    a, b = as_qrational(a), as_qrational(b)
    lhs = ZERO
    for n, c in enumerate(f.coeffs):
        if c:
            lhs = lhs + c * (b ** (n + k) - a ** (n + k)) / qnum(Fraction(n + k, k), k)
    rhs = qnum(k) * jackson_poly(f * QPoly1D.monomial(k - 1), a, b)
    return None if lhs == rhs else {"k": k, "f": str(f), "lhs": str(lhs), "rhs": str(rhs)}


def changevar_ii_check(f: QPoly1D, c, a, b) -> Optional[dict]:
    c = as_qrational(c)
    lhs = jackson_poly(f.scale_argument(c), a, b)
    rhs = jackson_poly(f, c * as_qrational(a), c * as_qrational(b)) / c
    return None if lhs == rhs else {"c": str(c), "f": str(f), "lhs": str(lhs), "rhs": str(rhs)}


def changevar_iii_check(f: QPoly1D, k: int, a) -> Optional[dict]:
    a = as_qrational(a)
    lhs = jackson_poly(f, 0, a * QRational.monomial(-k))
    extra = ZERO
    for i in range(1, k + 1):
        qi = QRational.monomial(-i)
        extra = extra + f(a * qi) * qi
    rhs = jackson_poly(f, 0, a) + (1 - q) * a * extra
    return None if lhs == rhs else {"k": k, "f": str(f), "lhs": str(lhs), "rhs": str(rhs)}


def changevar_numeric(k: int, q0: float, fn: Callable[[float], float], a: float, b: float) -> Tuple[float, float]:
    """Both sides of change of variables (i) by direct lattice summation."""
    lhs = jackson_numeric(lambda u: fn(u ** (1.0 / k)), a ** k, b ** k, q0 ** k)
    rhs = (1 - q0 ** k) / (1 - q0) * jackson_numeric(lambda t: fn(t) * t ** (k - 1), a, b, q0)
    return lhs, rhs


def changevar_iii_numeric(k: int, q0: float, fn: Callable[[float], float], a: float) -> Tuple[float, float]:
    lhs = jackson_numeric(fn, 0.0, a * q0 ** (-k), q0)
    rhs = jackson_numeric(fn, 0.0, a, q0) + (1 - q0) * a * sum(fn(a * q0 ** (-i)) * q0 ** (-i) for i in range(1, k + 1))
    return lhs, rhs


def ftc_check(f: QPoly1D, a, b) -> Optional[dict]:
    lhs = jackson_poly(f.jackson_derivative(), a, b)
    rhs = f(b) - f(a)
    return None if lhs == rhs else {"f": str(f), "lhs": str(lhs), "rhs": str(rhs)}


# ---------------------------------------------------------------------------
# zeros of the q-exponential

def nulpexp_check(q0: float, ks: Iterable[int] = (0, 1, 2, 3), tol: float = 1e-8) -> SuiteReport:
    """Numeric confirmation that ``e_q(q^-k / (q-1)) = 0``."""
    report = SuiteReport("exponential-zeros", {"q0": q0})
    for k in ks:
        x = q0 ** (-k) / (q0 - 1)

        def check(x=x, k=k):
            series = e_q_numeric(x, q0, "series")
            prod = e_q_numeric(x, q0, "product")
            # scale: the largest term of the series
            big, term = 1.0, 1.0
            for j in range(1, 200):
                term *= q0 ** (j - 1) * x * (1 - q0) / (1 - q0 ** j)
                big = max(big, abs(term))
            if abs(series) > tol * big or abs(prod) > tol:
                return {"k": k, "series": series, "product": prod, "scale": big}
            return None

        report.check(f"e_q(q^-{k}/(q-1)) = 0", "zeros of the q-exponential", check)

    def inverse():
        t = 0.3
        v = E_q_numeric(t, q0, 60) * e_q_numeric(-t, q0, "series", 60)
        return None if abs(v - 1) < 1e-10 else {"product": v}

    report.check("E_q(t) e_q(-t) = 1", "inverse q-exponentials", inverse)
    return report


# ---------------------------------------------------------------------------
# suites

def random_qrational(rng) -> QRational:
    return QRational.laurent([rng.randint(-3, 3) for _ in range(2)], rng.randint(-1, 1))


def random_poly1d(rng, degree: int) -> QPoly1D:
    return QPoly1D([random_qrational(rng) for _ in range(degree + 1)])


def random_clifford_polynomial(rng, m: int, max_degree: int, terms: int = 4, blades: bool = True) -> CliffordPolynomial:
    from .polyspace import monomials

    out = CliffordPolynomial.zero(m)
    for _ in range(terms):
        d = rng.randint(0, max_degree)
        alpha = rng.choice(monomials(m, d))
        mask = rng.randrange(1 << m) if blades else 0
        out = out + CliffordPolynomial.monomial(m, alpha, mask, random_qrational(rng))
    return out


def cauchy_suite(m: int, max_degree: int = 3, samples: int = 6, seed: int = 0) -> SuiteReport:
    """q-Cauchy formula and its corollaries over a ball of formal radius."""
    import random

    from .polyspace import monogenic_basis

    report = SuiteReport("cauchy", {"m": m, "max_degree": max_degree, "samples": samples})
    rng = random.Random(1000 * seed + m)
    pairs = [(random_clifford_polynomial(rng, m, max_degree), random_clifford_polynomial(rng, m, max_degree))
             for _ in range(samples)]
    one = CliffordPolynomial.const(m, 1)

    def over(fn, items):
        def run():
            for args in items:
                cex = fn(*args)
                if cex:
                    return cex
            return None
        return run

    report.check("q-Cauchy formula", "q-Cauchy formula", over(q_cauchy_check, pairs))
    report.check("int D g = -R^(m-2) int_dB x g", "q-Cauchy formula for f = 1",
                 over(lambda f, g: q_cauchy_check(one, g), pairs))

    def monogenic_zero():
        for k in range(1, max_degree + 1):
            for M in monogenic_basis(m, k).elements:
                lhs, rhs = q_cauchy_sides(one, M)
                if lhs or rhs:
                    return {"M": str(M), "lhs": str(lhs), "rhs": str(rhs)}
        return None

    report.check("both sides vanish for monogenic g and f = 1", "q-Cauchy formula for f = 1", monogenic_zero)
    report.check("int_S bar(q^Gamma f) g = int_S bar(f) q^Gamma g", "q^Gamma is symmetric on the sphere",
                 over(gamma_sphere_symmetry_check, pairs))
    report.check("int_B(R) f(cx) = c^-m int_B(cR) f", "dilation of the ball integral",
                 over(lambda f, g: scaling_law_check(f * g, q + 2) or scaling_law_check(f, q ** 2), pairs))
    small = [(f.homogeneous(0) + f.homogeneous(1) + f.homogeneous(2), g.homogeneous(0) + g.homogeneous(1))
             for f, g in pairs[:3]]
    report.check("int f(qx) Lap_q g = int (Lap_q f) g(qx) for g vanishing with D g on the boundary",
                 "symmetry of the q-Laplace operator", over(laplace_symmetry_check, small))
    report.check("D(p e_Q(Q^s x^2)) = e_Q(Q^(s+1) x^2)[(q+1) Q^s x p + D p]", "q-Dirac of Gaussian-weighted polynomials",
                 over(lambda f, g: gaussian_leibniz_check(g, -1, max_degree + 3)
                      or gaussian_leibniz_check(f, 0, max_degree + 3), pairs[:3]))

    def gaussian_ball():
        P = one * 1
        if ball_integral_gaussian(P) != gaussian_radial(m).times_omega():
            return {"P": "1"}
        odd = CliffordPolynomial.var(m, 1) * CliffordPolynomial.r2(m)
        if ball_integral_gaussian(odd):
            return {"P": str(odd)}
        return None

    report.check("int_B(lambda_Q) e_Q(x^2) = omega G(m); odd degrees vanish", "Gaussian ball integral", gaussian_ball)
    return report


def changevar_suite(q0s: Iterable[float] = (0.3, 0.6, 0.9), max_nu: int = 8, seed: int = 0) -> SuiteReport:
    """One-dimensional Jackson integration: FTC, change of variables, Gaussian integrals."""
    import random

    q0s = tuple(q0s)
    report = SuiteReport("changevar", {"q0s": list(q0s), "max_nu": max_nu})
    rng = random.Random(seed)
    polys = [random_poly1d(rng, d) for d in range(6)]
    ends = [(ZERO, ONE), (q, QRational(3)), (q + 1, q ** -1)]

    def over(fn, items):
        def run():
            for args in items:
                cex = fn(*args)
                if cex:
                    return cex
            return None
        return run

    report.check("int_a^b D_q f = f(b) - f(a)", "fundamental theorem of Jackson calculus",
                 over(ftc_check, [(f, a, b) for f in polys for a, b in ends]))

    def additivity():
        for f in polys:
            a, b, c = q, QRational(2), q + 3
            if jackson_poly(f, a, c) != jackson_poly(f, a, b) + jackson_poly(f, b, c):
                return {"f": str(f)}
            if jackson_poly(f, a, b) != jackson_poly(f, 0, b) - jackson_poly(f, 0, a):
                return {"f": str(f)}
        return None

    report.check("interval additivity", "Jackson integral", additivity)
    report.check("change of variables t -> t^k", "change of variables (i)",
                 over(changevar_i_check, [(f, k, a, b) for f in polys for k in (2, 3) for a, b in ends]))
    report.check("change of variables t -> c t", "change of variables (ii)",
                 over(changevar_ii_check, [(f, c, a, b) for f in polys for c in (QRational(2), q, q ** 3 + 1)
                                           for a, b in ends]))
    report.check("extension of the lattice by k points", "change of variables (iii)",
                 over(changevar_iii_check, [(f, k, a) for f in polys for k in (2, 3) for a in (ONE, q + 2)]))

    def numeric_changevar():
        fns = [lambda t: t * t, lambda t: 1 + t ** 3, lambda t: math.exp(-t)]
        for q0 in q0s:
            for k in (2, 3):
                for fn in fns:
                    lhs, rhs = changevar_numeric(k, q0, fn, 0.0, 1.0)
                    if abs(lhs - rhs) > 1e-10 * max(1.0, abs(lhs)):
                        return {"q0": q0, "k": k, "lhs": lhs, "rhs": rhs}
                    lhs, rhs = changevar_iii_numeric(k, q0, fn, 1.0)
                    if abs(lhs - rhs) > 1e-12 * max(1.0, abs(lhs)):
                        return {"q0": q0, "k": k, "lhs": lhs, "rhs": rhs, "part": "iii"}
        return None

    report.check("change of variables by lattice summation", "change of variables", numeric_changevar)

    def exact_vs_numeric():
        for q0 in (0.3, 0.7):
            for f in polys:
                for a, b in ((0.0, 1.0), (0.5, 2.0)):
                    ex = float(jackson_poly(f, Fraction(a), Fraction(b)).subs(Fraction(q0)))
                    num = jackson_numeric(lambda t: f.evaluate(q0, t), a, b, q0)
                    if abs(ex - num) > 1e-9 * max(1.0, abs(ex)):
                        return {"q0": q0, "f": str(f), "exact": ex, "numeric": num}
        return None

    report.check("exact Jackson integrals match lattice summation", "Jackson integral", exact_vs_numeric)

    def gaussian():
        for q0 in q0s:
            for nu in range(1, max_nu + 1):
                ex = gaussian_radial(nu).evaluate(q0)
                closed = gaussian_radial_closed_form(nu, q0)
                for method in ("product", "series"):
                    num = gaussian_radial_numeric(nu, q0, method)
                    if abs(num - ex) > 1e-9 * max(1.0, abs(ex)) or abs(closed - ex) > 1e-9 * max(1.0, abs(ex)):
                        return {"q0": q0, "nu": nu, "method": method, "exact": ex, "numeric": num, "closed_form": closed}
        return None

    report.check("int_0^lambda_Q t^(nu-1) e_Q(-t^2) = Q^(nu/2) Gamma_Q(nu/2)/(q+1)", "Gaussian radial integrals",
                 gaussian)

    def exponential_series():
        from .qpolynomials import q_exponential

        n = 30
        E = q_exponential("E", n)
        e = q_exponential("e", n)
        if E.jackson_derivative() != E.truncate(n - 1):
            return {"identity": "D_q E_q = E_q"}
        prod = (E * e.scale_argument(-1)).truncate(n)
        if prod != QPoly1D([ONE]):
            return {"identity": "E_q(t) e_q(-t) = 1", "product": str(prod)}
        return None

    report.check("D_q E_q = E_q and E_q(t) e_q(-t) = 1 to order 30", "q-exponentials", exponential_series)
    for q0 in q0s:
        if q0 <= 0.6:
            report.extend(nulpexp_check(q0))
    return report


__all__ = [
    "ExtendedScalar",
    "GaussPoly",
    "jackson_poly",
    "jackson_numeric",
    "e_q_numeric",
    "E_q_numeric",
    "lambda_Q",
    "gaussian_radial",
    "gaussian_radial_numeric",
    "gaussian_radial_closed_form",
    "gaussian_series",
    "ball_integral_poly",
    "ball_integral_gaussian",
    "q_cauchy_sides",
    "q_cauchy_check",
    "scaling_law_check",
    "gamma_sphere_symmetry_check",
    "laplace_symmetry_check",
    "gaussian_leibniz_check",
    "changevar_i_check",
    "changevar_ii_check",
    "changevar_iii_check",
    "changevar_numeric",
    "changevar_iii_numeric",
    "ftc_check",
    "nulpexp_check",
    "cauchy_suite",
    "changevar_suite",
    "random_clifford_polynomial",
    "random_poly1d",
    "random_qrational",
    "sphere_area",
    "anchor_value",
]
