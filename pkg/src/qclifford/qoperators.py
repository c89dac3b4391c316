"""q-deformed operators on Clifford-valued polynomials and an exact identity checker.

Every operator here preserves the monogenic Fischer blocks ``x**i M_k`` up to a
shift in ``i``: on a block it acts as ``x**i M_k -> sum_j c_j x**j M_k`` with
``c_j`` in Q(q) depending only on ``(i, k, m)``.  Operators are small immutable
expression trees whose block actions are computed and cached on demand.
Polynomials are handled by decomposing into blocks, acting, and recomposing.

An independent construction of the q-Dirac operator that never decomposes is
available as :func:`q_dirac_alt`.
"""
from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .clifford import blade_sign, blade_str
from .polyspace import (
    CliffordPolynomial,
    DivisionError,
    _acc,
    dim_monogenic,
    divide_r2,
    monomial_blocks,
    monomials,
    mul_vector_variable,
    radial_polynomial,
    raw_divmod_r2,
    raw_gamma,
    raw_mul_x,
    raw_mul_x_power,
    raw_right_blade,
)
from .qfield import ONE, ZERO, QRational, as_qrational, q, qnum
from .report import PASS, FAIL, RelationResult, SuiteReport
from .univariate import QPoly1D

Action = Dict[int, QRational]


def euler_eigenvalue(i: int, k: int) -> int:
    return i + k


def gamma_eigenvalue(i: int, k: int, m: int) -> int:
    """Eigenvalue of the Gamma operator on ``x**i M_k``."""
    return -k if i % 2 == 0 else m - 1 + k


def block_exists(k: int, m: int) -> bool:
    return dim_monogenic(m, k) > 0


def blocks_of_degree(d: int, m: int) -> List[Tuple[int, int]]:
    return [(d - k, k) for k in range(d + 1) if block_exists(k, m)]


# ---------------------------------------------------------------------------
# operator expression trees

_BLOCK_CACHE: Dict[tuple, Action] = {}
_IMAGE_CACHE: Dict[tuple, dict] = {}


class QOperator:
    """Base class: a linear operator given by its action on Fischer blocks."""

    key: tuple = ()

    def _block_action(self, i: int, k: int, m: int) -> Action:
        raise NotImplementedError

    def block_action(self, i: int, k: int, m: int) -> Action:
        ck = (self.key, i, k, m)
        hit = _BLOCK_CACHE.get(ck)
        if hit is None:
            hit = {j: c for j, c in self._block_action(i, k, m).items() if c}
            _BLOCK_CACHE[ck] = hit
        return hit

    # algebra
    def __mul__(self, other) -> "QOperator":
        if isinstance(other, QOperator):
            return Compose.of(self, other)
        return LinComb.of([(as_qrational(other), self)])

    def __rmul__(self, other) -> "QOperator":
        return LinComb.of([(as_qrational(other), self)])

    def __truediv__(self, other) -> "QOperator":
        return LinComb.of([(as_qrational(other).inverse(), self)])

    def __add__(self, other) -> "QOperator":
        if not isinstance(other, QOperator):
            other = scalar(other)
        return LinComb.of([(ONE, self), (ONE, other)])

    __radd__ = __add__

    def __neg__(self) -> "QOperator":
        return LinComb.of([(-ONE, self)])

    def __sub__(self, other) -> "QOperator":
        if not isinstance(other, QOperator):
            other = scalar(other)
        return LinComb.of([(ONE, self), (-ONE, other)])

    def __rsub__(self, other) -> "QOperator":
        return scalar(other) - self

    def __pow__(self, n: int) -> "QOperator":
        out: QOperator = IDENTITY
        for _ in range(n):
            out = out * self
        return out

    # application to polynomials
    def _monomial_image(self, m: int, alpha: tuple) -> dict:
        ck = (self.key, m, alpha)
        hit = _IMAGE_CACHE.get(ck)
        if hit is not None:
            return hit
        out: dict = {}
        for i, k, mk in monomial_blocks(m, alpha):
            for j, c in self.block_action(i, k, m).items():
                for key, v in raw_mul_x_power(mk, m, j).items():
                    _acc(out, key, c * v)
        _IMAGE_CACHE[ck] = out
        return out

    def apply(self, P: CliffordPolynomial) -> CliffordPolynomial:
        m = P.m
        out: dict = {}
        for (alpha, mask), c in P.terms.items():
            image = self._monomial_image(m, alpha)
            for (b, bm), v in image.items():
                w = c * v
                _acc(out, (b, bm ^ mask), w if blade_sign(bm, mask) > 0 else -w)
        return CliffordPolynomial._wrap(m, out)

    def __call__(self, P: CliffordPolynomial) -> CliffordPolynomial:
        return self.apply(P)

    def __repr__(self) -> str:
        return f"QOperator{self.key!r}"


class Spectral(QOperator):
    """Diagonal operator ``fn(euler, gamma, m)`` on each block."""

    def __init__(self, key: tuple, fn: Callable[[int, int, int], QRational]):
        self.key = ("spectral",) + tuple(key)
        self.fn = fn

    def _block_action(self, i, k, m):
        return {i: as_qrational(self.fn(i + k, gamma_eigenvalue(i, k, m), m))}


class _MulX(QOperator):
    key = ("mul_x",)

    def _block_action(self, i, k, m):
        return {i + 1: ONE}


class _QDirac(QOperator):
    key = ("q_dirac",)

    def _block_action(self, i, k, m):
        if i % 2 == 0:
            return {i - 1: qnum(i)} if i else {}
        return {i - 1: qnum(i - 1 + 2 * k + m)}


class _Dirac(QOperator):
    """Classical Dirac operator, for q = 1 comparisons."""

    key = ("dirac",)

    def _block_action(self, i, k, m):
        if i % 2 == 0:
            return {i - 1: as_qrational(i)} if i else {}
        return {i - 1: as_qrational(i - 1 + 2 * k + m)}


class Compose(QOperator):
    """``ops[0] o ops[1] o ...`` (rightmost acts first)."""

    def __init__(self, ops: Sequence[QOperator]):
        self.ops = tuple(ops)
        self.key = ("compose",) + tuple(o.key for o in self.ops)

    @staticmethod
    def of(a: QOperator, b: QOperator) -> QOperator:
        if a is IDENTITY:
            return b
        if b is IDENTITY:
            return a
        left = a.ops if isinstance(a, Compose) else (a,)
        right = b.ops if isinstance(b, Compose) else (b,)
        return Compose(left + right)

    def _block_action(self, i, k, m):
        state: Action = {i: ONE}
        for op in reversed(self.ops):
            nxt: Action = {}
            for j, c in state.items():
                if j < 0:
                    continue
                for j2, c2 in op.block_action(j, k, m).items():
                    nxt[j2] = nxt.get(j2, ZERO) + c * c2
            state = {j: c for j, c in nxt.items() if c}
            if not state:
                break
        return state


class LinComb(QOperator):
    def __init__(self, terms: Sequence[Tuple[QRational, QOperator]]):
        self.terms = tuple(terms)
        self.key = ("lincomb",) + tuple((c, o.key) for c, o in self.terms)

    @staticmethod
    def of(terms) -> QOperator:
        flat: List[Tuple[QRational, QOperator]] = []
        for c, op in terms:
            if isinstance(op, LinComb):
                flat.extend((c * c2, o2) for c2, o2 in op.terms)
            else:
                flat.append((c, op))
        flat = [(c, o) for c, o in flat if c]
        if len(flat) == 1 and flat[0][0] == ONE:
            return flat[0][1]
        return LinComb(flat)

    def _block_action(self, i, k, m):
        out: Action = {}
        for c, op in self.terms:
            for j, v in op.block_action(i, k, m).items():
                out[j] = out.get(j, ZERO) + c * v
        return out


def spectral(key, fn) -> Spectral:
    return Spectral(key if isinstance(key, tuple) else (key,), fn)


def scalar(c) -> QOperator:
    c = as_qrational(c)
    return Spectral(("scalar", c), lambda d, g, m: c)


IDENTITY: QOperator = Spectral(("identity",), lambda d, g, m: ONE)
MUL_X: QOperator = _MulX()
Q_DIRAC: QOperator = _QDirac()
DIRAC: QOperator = _Dirac()
R2: QOperator = -(MUL_X * MUL_X)
Q_LAPLACE: QOperator = -(Q_DIRAC * Q_DIRAC)
LAPLACE: QOperator = -(DIRAC * DIRAC)
EULER: QOperator = Spectral(("euler",), lambda d, g, m: QRational(d))
GAMMA: QOperator = Spectral(("gamma",), lambda d, g, m: QRational(g))


def q_power_euler_op(s: int = 1) -> QOperator:
    return Spectral(("q^E", s), lambda d, g, m: QRational.monomial(s * d))


def q_power_gamma_op(s: int = 1) -> QOperator:
    return Spectral(("q^G", s), lambda d, g, m: QRational.monomial(s * g))


def qnum_op(a_euler: int = 0, a_gamma: int = 0, a_m: int = 0, const: int = 0) -> QOperator:
    """``[a_euler * E + a_gamma * Gamma + a_m * m + const]_q``."""
    return Spectral(
        ("qnum", a_euler, a_gamma, a_m, const),
        lambda d, g, m: qnum(a_euler * d + a_gamma * g + a_m * m + const),
    )


Q_LAPLACE_BELTRAMI: QOperator = Spectral(("q_lb",), lambda d, g, m: qnum(g) * qnum(m - 2 - g))
LAPLACE_BELTRAMI: QOperator = Spectral(("lb",), lambda d, g, m: QRational(g * (m - 2 - g)))
BIG_E: QOperator = ((q + 1) / 4) * (Q_DIRAC * MUL_X + (q ** 2) * (MUL_X * Q_DIRAC))


# ---------------------------------------------------------------------------
# polynomial-level entry points

def q_power_euler(P: CliffordPolynomial, s: int = 1) -> CliffordPolynomial:
    out = {}
    for key, c in P.terms.items():
        out[key] = c * QRational.monomial(s * sum(key[0]))
    return CliffordPolynomial._wrap(P.m, out)


def q_power_gamma(P: CliffordPolynomial, s: int = 1, method: str = "blocks") -> CliffordPolynomial:
    """``q**(s Gamma) P``; ``method="spectral"`` interpolates powers of Gamma instead of
    decomposing."""
    if method == "blocks":
        return q_power_gamma_op(s).apply(P)
    if method == "spectral":
        return _spectral_gamma_function(P, lambda g: QRational.monomial(s * g), ("q^G", s))
    raise ValueError(f"unknown method {method!r}")


def q_dirac(P: CliffordPolynomial) -> CliffordPolynomial:
    return Q_DIRAC.apply(P)


def q_laplace(P: CliffordPolynomial) -> CliffordPolynomial:
    return Q_LAPLACE.apply(P)


def q_laplace_beltrami(P: CliffordPolynomial) -> CliffordPolynomial:
    return Q_LAPLACE_BELTRAMI.apply(P)


def big_E(P: CliffordPolynomial) -> CliffordPolynomial:
    return BIG_E.apply(P)


def q_partial(P: CliffordPolynomial, i: int) -> CliffordPolynomial:
    """q-partial derivative ``D_i`` (1-based) of a scalar polynomial."""
    if not P.is_scalar():
        raise ValueError("q_partial is defined on scalar polynomials")
    g = q_dirac(P)
    return -g.blade_component(1 << (i - 1))


# ---------------------------------------------------------------------------
# independent construction: x/x^2 ([E]_q + q^E [Gamma]_q)

@lru_cache(maxsize=None)
def gamma_spectrum(m: int, d: int) -> Tuple[int, ...]:
    """Distinct Gamma eigenvalues on homogeneous polynomials of degree ``d``."""
    vals = set()
    for k in range(d + 1):
        if not block_exists(k, m):
            continue
        if (d - k) % 2 == 0:
            vals.add(-k)
        if k <= d - 1 and (d - 1 - k) % 2 == 0:
            vals.add(m - 1 + k)
    return tuple(sorted(vals))


@lru_cache(maxsize=None)
def _lagrange_basis(points: Tuple[int, ...]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Monomial coefficients of each Lagrange basis polynomial on ``points``."""
    out = []
    for a in points:
        poly = [Fraction(1)]
        denom = Fraction(1)
        for b in points:
            if b == a:
                continue
            nxt = [Fraction(0)] * (len(poly) + 1)
            for j, c in enumerate(poly):
                nxt[j + 1] += c
                nxt[j] -= c * b
            poly = nxt
            denom *= a - b
        out.append(tuple(c / denom for c in poly))
    return tuple(out)


def interpolation_coefficients(points: Sequence[int], values: Sequence[QRational]) -> List[QRational]:
    """Coefficients ``c_j`` with ``sum_j c_j x**j = values[i]`` at ``x = points[i]``."""
    basis = _lagrange_basis(tuple(points))
    out = [ZERO] * len(points)
    for y, poly in zip(values, basis):
        for j, c in enumerate(poly):
            if c:
                out[j] = out[j] + y * c
    return out


def _gamma_powers(terms: dict, m: int, n: int) -> List[dict]:
    out = [terms]
    for _ in range(n - 1):
        out.append(raw_gamma(out[-1], m))
    return out


def _spectral_gamma_function(P: CliffordPolynomial, fn, tag) -> CliffordPolynomial:
    m = P.m
    out: dict = {}
    for d, comp in P.homogeneous_components().items():
        pts = gamma_spectrum(m, d)
        coeffs = interpolation_coefficients(pts, [fn(g) for g in pts])
        for c, power in zip(coeffs, _gamma_powers(comp.terms, m, len(pts))):
            if c:
                for key, v in power.items():
                    _acc(out, key, c * v)
    return CliffordPolynomial(m, out)


_ALT_CACHE: Dict[tuple, dict] = {}


def _alt_basis_image(m: int, alpha: tuple, mask: int) -> dict:
    ck = (m, alpha, mask)
    hit = _ALT_CACHE.get(ck)
    if hit is not None:
        return hit
    d = sum(alpha)
    if d == 0:
        _ALT_CACHE[ck] = {}
        return {}
    pts = gamma_spectrum(m, d)
    # [E]_q + q^E [Gamma]_q on degree d, as a polynomial in Gamma
    coeffs = interpolation_coefficients(pts, [qnum(g) for g in pts])
    qd = QRational.monomial(d)
    coeffs = [c * qd for c in coeffs]
    coeffs[0] = coeffs[0] + qnum(d)
    quot: dict = {}
    rem: dict = {}
    for c, power in zip(coeffs, _gamma_powers({(alpha, mask): 1}, m, len(pts))):
        if not c:
            continue
        qj, rj = raw_divmod_r2(raw_mul_x(power, m), m)
        for key, v in qj.items():
            _acc(quot, key, -(c * v))
        for key, v in rj.items():
            _acc(rem, key, c * v)
    if rem:
        raise DivisionError(
            f"x*([E]_q + q^E[Gamma]_q) applied to x^{alpha} e_{blade_str(mask)} is not divisible by r^2"
        )
    _ALT_CACHE[ck] = quot
    return quot


def q_dirac_alt(P: CliffordPolynomial) -> CliffordPolynomial:
    """q-Dirac operator as ``(x / x**2) ([E]_q + q**E [Gamma]_q)``.

    ``q**Gamma`` is realized by interpolating on the Gamma spectrum and applying
    powers of the classical Gamma operator; the division by ``x**2 = -r**2`` is
    exact polynomial division.  Nothing here uses a Fischer decomposition.
    """
    m = P.m
    out: dict = {}
    for (alpha, mask), c in P.terms.items():
        for key, v in _alt_basis_image(m, alpha, mask).items():
            _acc(out, key, c * v)
    return CliffordPolynomial(m, out)


# ---------------------------------------------------------------------------
# identity checking

Side = Union[QOperator, Callable[[CliffordPolynomial], CliffordPolynomial]]


def _fmt_action(a: Action) -> Dict[str, str]:
    return {f"x^{j}": str(c) for j, c in sorted(a.items())}


def check_identity(
    lhs: Side,
    rhs: Side,
    m: int,
    max_degree: int,
    mode: str = "blocks",
    scalar_only: bool = False,
) -> Optional[dict]:
    """Compare two operators on every polynomial of degree ``<= max_degree``.

    ``mode="blocks"`` compares the exact actions on every Fischer block
    ``x**i M_k``; since those blocks span all polynomials and the decomposition
    is unique, this is equivalent to comparing on every monomial-blade basis
    element.  ``mode="polynomial"`` materializes both sides on each basis element
    in a fixed order.  Callables force polynomial mode.  Returns ``None`` on
    success or the first counterexample.
    """
    if not (isinstance(lhs, QOperator) and isinstance(rhs, QOperator)):
        mode = "polynomial"
    if mode == "blocks":
        for d in range(max_degree + 1):
            for i, k in blocks_of_degree(d, m):
                a, b = lhs.block_action(i, k, m), rhs.block_action(i, k, m)
                if a != b:
                    return {"m": m, "block": {"i": i, "k": k}, "lhs": _fmt_action(a), "rhs": _fmt_action(b)}
        return None
    if mode != "polynomial":
        raise ValueError(f"unknown mode {mode!r}")
    masks = [0] if scalar_only else range(1 << m)
    for d in range(max_degree + 1):
        for alpha in monomials(m, d):
            for mask in masks:
                P = CliffordPolynomial._wrap(m, {(alpha, mask): ONE})
                a, b = lhs(P), rhs(P)
                if a != b:
                    return {
                        "m": m,
                        "input": str(P),
                        "lhs": str(a),
                        "rhs": str(b),
                        "difference": str(a - b),
                    }
    return None


def commutator(a: QOperator, b: QOperator, c=1) -> QOperator:
    """``[a, b]_c = ab - c ba``."""
    return a * b - as_qrational(c) * (b * a)


def anticommutator(a: QOperator, b: QOperator, c=1) -> QOperator:
    """``{a, b}_c = ab + c ba``."""
    return a * b + as_qrational(c) * (b * a)


def _relations_sl2q():
    half_lap = Q_LAPLACE / 2
    half_r2 = R2 / 2
    c = qnum(4) * qnum(2) / 4
    return [
        ("[Lap_q/2, r^2/2]_{q^4} = E", "sl2q relation 1", commutator(half_lap, half_r2, q ** 4), BIG_E),
        ("[Lap_q/2, E]_{q^2} = [4][2]/4 Lap_q/2", "sl2q relation 2", commutator(half_lap, BIG_E, q ** 2), c * half_lap),
        ("[E, r^2/2]_{q^2} = [4][2]/4 r^2/2", "sl2q relation 3", commutator(BIG_E, half_r2, q ** 2), c * half_r2),
    ]


def _relations_suq11():
    L1 = (q / qnum(2)) * Q_LAPLACE
    Lm1 = (q / qnum(2)) * R2
    L0 = (4 * q / (qnum(4) * qnum(2))) * BIG_E
    qi = q.inverse()
    return [
        (
            "q^-2 L1 L-1 - q^2 L-1 L1 = q [4]/[2] L0",
            "su(1|1)_q relation 1",
            (qi ** 2) * (L1 * Lm1) - (q ** 2) * (Lm1 * L1),
            (q * qnum(4) / qnum(2)) * L0,
        ),
        ("q^-1 L1 L0 - q L0 L1 = L1", "su(1|1)_q relation 2", qi * (L1 * L0) - q * (L0 * L1), L1),
        ("q^-1 L0 L-1 - q L-1 L0 = L-1", "su(1|1)_q relation 3", qi * (L0 * Lm1) - q * (Lm1 * L0), Lm1),
        (
            "q^-2 L1 L-1 - q^2 L-1 L1 = q^-1 [4]/[2] L0",
            "su(1|1)_q relation 1, coefficient fixed by the block actions",
            (qi ** 2) * (L1 * Lm1) - (q ** 2) * (Lm1 * L1),
            (qi * qnum(4) / qnum(2)) * L0,
        ),
    ]


def _relations_osp12q():
    x, D = MUL_X, Q_DIRAC
    c = (q + 1) ** 2 / 4
    w = (q ** 2) * (1 - q ** 2)
    return [
        ("{x, x} = -2 r^2", "osp(1|2)_q anticommutator 1", anticommutator(x, x), -2 * R2),
        ("{D, x}_{q^2} = (q+1)/2 E", "osp(1|2)_q anticommutator 2", anticommutator(D, x, q ** 2), ((q + 1) / 2) * BIG_E),
        ("{D, D} = -2 Lap_q", "osp(1|2)_q anticommutator 3", anticommutator(D, D), -2 * Q_LAPLACE),
        ("[x, r^2] = 0", "osp(1|2)_q commutator 1", commutator(x, R2), scalar(0)),
        ("[D, r^2]_{q^2} = -(q+1) x", "osp(1|2)_q commutator 2", commutator(D, R2, q ** 2), -(q + 1) * x),
        ("[Lap_q, x]_{q^2} = -(q+1) D", "osp(1|2)_q commutator 3", commutator(Q_LAPLACE, x, q ** 2), -(q + 1) * D),
        ("[D, Lap_q] = 0", "osp(1|2)_q commutator 4", commutator(D, Q_LAPLACE), scalar(0)),
        (
            "[E, x]_{q^2} = (q+1)^2/4 x - q^2(1-q^2) r^2 D",
            "osp(1|2)_q commutator 5",
            commutator(BIG_E, x, q ** 2),
            c * x - w * (R2 * D),
        ),
        (
            "[D, E]_{q^2} = (q+1)^2/4 D - q^2(1-q^2) x Lap_q",
            "osp(1|2)_q commutator 6",
            commutator(D, BIG_E, q ** 2),
            c * D - w * (x * Q_LAPLACE),
        ),
        (
            "{D, x}_{q^2} = 4/(q+1) E",
            "osp(1|2)_q anticommutator 2, coefficient fixed by the definition of E",
            anticommutator(D, x, q ** 2),
            (4 / (q + 1)) * BIG_E,
        ),
        (
            "[E, x]_{q^2} = (q+1)^2/4 x - (q+1)/4 q^2(1-q^2) r^2 D",
            "osp(1|2)_q commutator 5, coefficient fixed by the block actions",
            commutator(BIG_E, x, q ** 2),
            c * x - ((q + 1) / 4) * w * (R2 * D),
        ),
        (
            "[D, E]_{q^2} = (q+1)^2/4 D - (q+1)/4 q^2(1-q^2) x Lap_q",
            "osp(1|2)_q commutator 6, coefficient fixed by the block actions",
            commutator(D, BIG_E, q ** 2),
            c * D - ((q + 1) / 4) * w * (x * Q_LAPLACE),
        ),
    ]


ALGEBRA_SUITES = {"sl2q": _relations_sl2q, "osp12q": _relations_osp12q, "suq11": _relations_suq11}


def algebra_suite(name: str, m: int, max_degree: int, mode: str = "blocks") -> SuiteReport:
    if name not in ALGEBRA_SUITES:
        raise ValueError(f"unknown algebra suite {name!r}; choose from {sorted(ALGEBRA_SUITES)}")
    report = SuiteReport(name, {"m": m, "max_degree": max_degree})
    for label, anchor, lhs, rhs in ALGEBRA_SUITES[name]():
        report.check(label, anchor, lambda: check_identity(lhs, rhs, m, max_degree, mode))
    return report


def axiom_suite(m: int, max_degree: int, alt: bool = True) -> SuiteReport:
    """The four defining properties of the q-Dirac operator, plus agreement with the
    independent construction."""
    report = SuiteReport("axioms", {"m": m, "max_degree": max_degree})
    x, D = MUL_X, Q_DIRAC
    report.check(
        "D x = [m]_q", "axiom A1",
        lambda: _check_value(q_dirac(CliffordPolynomial.vector_variable(m)), CliffordPolynomial.const(m, qnum(m))),
    )
    report.check(
        "D x^2 = q^2 x^2 D + (q+1) x", "axiom A2",
        lambda: check_identity(D * x * x, (q ** 2) * (x * x * D) + (q + 1) * x, m, max_degree, "polynomial"),
    )
    report.check("(D)^2 is scalar", "axiom A3", lambda: _check_square_scalar(m, max_degree))
    report.check("D M_k = 0", "axiom A4", lambda: _check_monogenic_null(m, max_degree))
    if alt:
        report.check(
            "D agrees with (x/x^2)([E]_q + q^E[Gamma]_q)", "uniqueness of the q-Dirac operator",
            lambda: check_identity(q_dirac, q_dirac_alt, m, max_degree, "polynomial"),
        )
    return report


def _check_value(a: CliffordPolynomial, b: CliffordPolynomial) -> Optional[dict]:
    return None if a == b else {"lhs": str(a), "rhs": str(b)}


def _check_square_scalar(m: int, max_degree: int) -> Optional[dict]:
    # bivector part of D^2 on every scalar monomial
    for d in range(max_degree + 1):
        for alpha in monomials(m, d):
            P = CliffordPolynomial.monomial(m, alpha)
            sq = q_dirac(q_dirac(P))
            if not sq.is_scalar():
                return {"input": str(P), "non_scalar_part": str(sq - sq.blade_component(0))}
    return None


def _check_monogenic_null(m: int, max_degree: int) -> Optional[dict]:
    from .polyspace import monogenic_basis

    for k in range(max_degree + 1):
        for M in monogenic_basis(m, k).elements:
            out = q_dirac(M)
            if out:
                return {"k": k, "input": str(M), "image": str(out)}
    return None


def structure_suite(m: int, max_degree: int, max_k: int = 3) -> SuiteReport:
    """Block actions, commutation lemmas and the Laplace decompositions."""
    from .polyspace import harmonic_basis, monogenic_basis

    report = SuiteReport("structure", {"m": m, "max_degree": max_degree, "max_k": max_k})
    x, D = MUL_X, Q_DIRAC
    qE = q_power_euler_op(1)

    def pxxm():
        for k in range(max_k + 1):
            for M in monogenic_basis(m, k).elements:
                lhs = q_dirac(mul_vector_variable(M))
                if lhs != M * qnum(m + 2 * k):
                    return {"k": k, "input": str(M)}
        return None

    def fischer_actions():
        # D on x^i M_k computed on materialized polynomials against the closed form
        for k in range(max_k + 1):
            for M in monogenic_basis(m, k).elements[:2]:
                P = M
                for i in range(max_degree - k + 1):
                    if i % 2 == 0:
                        expected = (raw_times(m, i - 1, M) * qnum(i)) if i else CliffordPolynomial.zero(m)
                    else:
                        expected = raw_times(m, i - 1, M) * qnum(i - 1 + 2 * k + m)
                    got = q_dirac_alt(P)
                    if got != expected:
                        return {"i": i, "k": k, "input": str(M)}
                    P = mul_vector_variable(P)
        return None

    report.check("D x M_k = [m+2k]_q M_k", "q-Dirac on x M_k", pxxm)
    report.check("D x^i M_k block action", "uniqueness theorem block actions", fischer_actions)
    report.check(
        "D x = [E - Gamma + m]_q", "q-Dirac times x",
        lambda: check_identity(D * x, qnum_op(1, -1, 1), m, max_degree, "polynomial"),
    )
    report.check(
        "r^2 Lap_q = [E]_q[m-2+E]_q + q^E [Gamma]_q [m-2-Gamma]_q", "Laplace decomposition",
        lambda: check_identity(
            R2 * Q_LAPLACE,
            qnum_op(1) * qnum_op(1, 0, 1, -2) + qE * Q_LAPLACE_BELTRAMI,
            m, max_degree, "polynomial",
        ),
    )
    report.check(
        "D x + q^2 x D maps scalars to scalars", "scalar operator lemma",
        lambda: _check_scalar_preserving(D * x + (q ** 2) * (x * D), m, max_degree),
    )
    report.check("radial Leibniz rule", "radial Leibniz rule", lambda: _leibniz_sweep(m, max_degree))
    report.check("Lap_q (f H_k) radial form", "q-Laplace on radial times harmonic",
                 lambda: _lapl_hk_sweep(m, max_degree, max_k))
    report.extend(scalar_laplace_check(m, max_degree))
    return report


def raw_times(m: int, i: int, M: CliffordPolynomial) -> CliffordPolynomial:
    return CliffordPolynomial._wrap(m, raw_mul_x_power(M.terms, m, i))


def _check_scalar_preserving(op: QOperator, m: int, max_degree: int) -> Optional[dict]:
    for d in range(max_degree + 1):
        for alpha in monomials(m, d):
            P = CliffordPolynomial.monomial(m, alpha)
            out = op.apply(P)
            if not out.is_scalar():
                return {"input": str(P), "image": str(out)}
    return None


# ---------------------------------------------------------------------------
# radial Leibniz rule and radial form of the q-Laplacian

def radial_to_polynomial(m: int, f: QPoly1D) -> CliffordPolynomial:
    """A polynomial in ``r`` with only even powers, as a polynomial in ``x``."""
    return radial_polynomial(m, f.deflate(2).coeffs)


def leibniz_radial_check(f: QPoly1D, P: CliffordPolynomial) -> Optional[dict]:
    """``D(f P) = ((f(qr) - f(r)) / ((q-1) x)) P + f(qr) D P`` for even ``f``."""
    m = P.m
    fr = radial_to_polynomial(m, f)
    lhs = q_dirac(fr * P)
    # (f(qr) - f(r))/(q - 1) as a radial polynomial, then divide by x via x/(-r^2)
    diff = (f.scale_argument(q) - f) / (q - 1)
    num = mul_vector_variable(radial_to_polynomial(m, diff))
    first = -divide_r2(num)
    rhs = first * P + radial_to_polynomial(m, f.scale_argument(q)) * q_dirac(P)
    if lhs != rhs:
        return {"f": str(f), "P": str(P), "lhs": str(lhs), "rhs": str(rhs)}
    return None


def _sample_radial(n: int, seed: int) -> QPoly1D:
    import random

    rng = random.Random(seed)
    coeffs = []
    for j in range(n + 1):
        coeffs += [QRational.laurent([rng.randint(-3, 3) for _ in range(2)], rng.randint(-1, 1)), ZERO]
    return QPoly1D(coeffs[:-1])


def _leibniz_sweep(m: int, max_degree: int) -> Optional[dict]:
    from .polyspace import basis_elements

    for n in range(0, max_degree // 2 + 1):
        f = _sample_radial(n, 17 * n + m)
        for d in range(max_degree - 2 * n + 1):
            for P in basis_elements(m, d):
                cex = leibniz_radial_check(f, P)
                if cex:
                    return cex
    return None


def radial_laplace_form(f: QPoly1D, mu: int) -> QPoly1D:
    """``q**(mu-1) (d_r)**2 f + [mu-1]_q (1/r) d_r f`` with Jackson derivatives."""
    d1 = f.jackson_derivative()
    return d1.jackson_derivative() * QRational.monomial(mu - 1) + d1.shift(-1) * qnum(mu - 1)


def lapl_hk_check(f: QPoly1D, H: CliffordPolynomial, k: int) -> Optional[dict]:
    m = H.m
    lhs = q_laplace(radial_to_polynomial(m, f) * H)
    rhs = H * radial_to_polynomial(m, radial_laplace_form(f, m + 2 * k))
    if lhs != rhs:
        return {"f": str(f), "H": str(H), "lhs": str(lhs), "rhs": str(rhs)}
    return None


def _lapl_hk_sweep(m: int, max_degree: int, max_k: int) -> Optional[dict]:
    from .polyspace import harmonic_basis

    for k in range(max_k + 1):
        for H in harmonic_basis(m, k).elements:
            for n in range(0, max(0, (max_degree - k) // 2) + 1):
                cex = lapl_hk_check(_sample_radial(n, 31 * n + k), H, k)
                if cex:
                    return cex
    return None


# ---------------------------------------------------------------------------
# scalar forms of the q-Laplace and q-Laplace-Beltrami operators

def _rational_sqrt(x: Fraction) -> Fraction:
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        raise ValueError(f"negative radicand {x}")
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        raise ValueError(f"{x} is not a rational square")
    return Fraction(n, d)


def _qnum_half(u: Fraction) -> QRational:
    # [u]_q with u an integer; the resolved spectral values here are integers
    if u.denominator != 1:
        raise ValueError(f"spectral value {u} is not an integer")
    return qnum(int(u))


def _classical_eigenvalue(image: CliffordPolynomial, P: CliffordPolynomial) -> Fraction:
    """``lambda`` with ``image = lambda P``, exact; raises if not an eigenvector."""
    if not image:
        return Fraction(0)
    key, c = next(iter(P.terms.items()))
    lam = image.terms.get(key, ZERO) / c
    if image != P * lam:
        raise ArithmeticError("not an eigenvector")
    return lam.to_fraction()


def scalar_laplace_check(m: int, max_degree: int) -> SuiteReport:
    """Resolve the square roots in the scalar forms blockwise and compare with the
    block actions of the q-Laplace and q-Laplace-Beltrami operators on ``r^(2l) H_k``."""
    from .polyspace import harmonic_basis, laplace, mul_r2, euler, gamma_op

    report = SuiteReport("scalar-laplace", {"m": m, "max_degree": max_degree})
    half = Fraction(m, 2) - 1

    def lb_form():
        for k in range(max_degree + 1):
            for H in harmonic_basis(m, k).elements[:3]:
                # classical Laplace-Beltrami Gamma(m-2-Gamma) from polynomials
                g = gamma_op(H)
                lb = gamma_op(g) * (-1) + g * (m - 2)
                lam = _classical_eigenvalue(lb, H)
                s = _rational_sqrt(half ** 2 - lam)
                value = _qnum_half(half - s) * _qnum_half(half + s)
                if q_laplace_beltrami(H) != H * value:
                    return {"k": k, "H": str(H), "resolved_root": str(s)}
        return None

    def lapl_form():
        for k in range(max_degree + 1):
            for H in harmonic_basis(m, k).elements[:2]:
                P = H
                for l in range(0, (max_degree - k) // 2 + 1):
                    d = 2 * l + k
                    r2lap = mul_r2(laplace(P))
                    lam = _classical_eigenvalue(r2lap, P)
                    s = _rational_sqrt((d + half) ** 2 - lam)
                    value = _qnum_half(d + half + s) * _qnum_half(d + half - s)
                    # Lap_q P = value / r^2 P, i.e. r^2 Lap_q P = value P
                    if mul_r2(q_laplace(P)) != P * value:
                        return {"k": k, "l": l, "H": str(H), "resolved_root": str(s)}
                    # the second scalar form through the angular root
                    lbg = gamma_op(H)
                    lam_lb = _classical_eigenvalue(gamma_op(lbg) * (-1) + lbg * (m - 2), H)
                    s2 = _rational_sqrt(half ** 2 - lam_lb)
                    value2 = _qnum_half(d + half + s2) * _qnum_half(d + half - s2)
                    if value2 != value:
                        return {"k": k, "l": l, "first_form": str(value), "second_form": str(value2)}
                    P = mul_r2(P)
        return None

    def classical_limit():
        for k in range(max_degree + 1):
            for H in harmonic_basis(m, k).elements[:2]:
                P = H
                for l in range(0, (max_degree - k) // 2 + 1):
                    lhs = mul_r2(laplace(P))
                    E = euler(P)
                    g = gamma_op(P)
                    rhs = euler(E) + E * (m - 2) + g * (m - 2) - gamma_op(g)
                    if lhs != rhs:
                        return {"k": k, "l": l, "H": str(H)}
                    P = mul_r2(P)
        return None

    report.check("Lap_LB^q = [m/2-1-root]_q [m/2-1+root]_q", "scalar form of the q-Laplace-Beltrami operator", lb_form)
    report.check("Lap_q = r^-2 [E+m/2-1+root]_q [E+m/2-1-root]_q", "scalar form of the q-Laplace operator", lapl_form)
    report.check("r^2 Lap = E(m-2+E) + Gamma(m-2-Gamma)", "classical Laplace decomposition", classical_limit)
    return report


__all__ = [
    "QOperator",
    "Spectral",
    "Compose",
    "LinComb",
    "spectral",
    "scalar",
    "IDENTITY",
    "MUL_X",
    "Q_DIRAC",
    "DIRAC",
    "R2",
    "Q_LAPLACE",
    "LAPLACE",
    "EULER",
    "GAMMA",
    "Q_LAPLACE_BELTRAMI",
    "LAPLACE_BELTRAMI",
    "BIG_E",
    "q_power_euler_op",
    "q_power_gamma_op",
    "qnum_op",
    "q_power_euler",
    "q_power_gamma",
    "q_dirac",
    "q_dirac_alt",
    "q_partial",
    "q_laplace",
    "q_laplace_beltrami",
    "big_E",
    "check_identity",
    "commutator",
    "anticommutator",
    "algebra_suite",
    "axiom_suite",
    "structure_suite",
    "scalar_laplace_check",
    "leibniz_radial_check",
    "lapl_hk_check",
    "radial_laplace_form",
    "radial_to_polynomial",
    "gamma_spectrum",
    "interpolation_coefficients",
    "euler_eigenvalue",
    "gamma_eigenvalue",
    "blocks_of_degree",
]
