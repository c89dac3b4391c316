from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qclifford.polyspace import CliffordPolynomial, monogenic_basis
from qclifford.qfield import ONE, Q, eval_at, q, qnum
from qclifford.qintegrate import (
    ExtendedScalar,
    GaussPoly,
    ball_integral_gaussian,
    ball_integral_poly,
    changevar_i_check,
    changevar_ii_check,
    changevar_iii_check,
    e_q_numeric,
    E_q_numeric,
    ftc_check,
    gaussian_leibniz_check,
    gaussian_radial,
    gaussian_radial_closed_form,
    gaussian_radial_numeric,
    jackson_numeric,
    jackson_poly,
    nulpexp_check,
    q_cauchy_check,
    q_cauchy_sides,
    random_clifford_polynomial,
    random_poly1d,
    scaling_law_check,
)
from qclifford.univariate import QPoly1D


def test_jackson_monomials():
    for k in range(6):
        assert jackson_poly(QPoly1D.monomial(k), 0, 1) == qnum(k + 1).inverse()


@pytest.mark.parametrize("q0", [0.3, 0.6, 0.9])
def test_jackson_poly_matches_lattice_sum(q0):
    f = QPoly1D([1, -2, 0, 3])
    exact = eval_at(jackson_poly(f, 0, Fraction(3, 2)), q0)
    numeric = jackson_numeric(lambda t: 1 - 2 * t + 3 * t ** 3, 0.0, 1.5, q0)
    assert numeric == pytest.approx(exact, rel=1e-12)


def test_jackson_tends_to_riemann():
    assert jackson_numeric(math.exp, 0.0, 1.0, 0.9999, tol=1e-15, max_terms=10 ** 6) == pytest.approx(math.e - 1, rel=1e-3)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_ftc_and_change_of_variables(seed):
    rng = random.Random(seed)
    f = random_poly1d(rng, 4)
    assert ftc_check(f, Fraction(1, 3), 2) is None
    for k in (2, 3):
        assert changevar_i_check(f, k, 0, Fraction(5, 4)) is None
        assert changevar_iii_check(f, k, Fraction(3, 2)) is None
    assert changevar_ii_check(f, Fraction(2, 3), 0, 1) is None


def test_gaussian_recursion():
    for nu in range(1, 9):
        assert gaussian_radial(nu + 2) == gaussian_radial(nu) * (Q * qnum(Fraction(nu, 2), 2))
    assert gaussian_radial(2).anchor == "g2" and gaussian_radial(3).anchor == "g1"


@pytest.mark.parametrize("q0", [0.3, 0.6, 0.9])
@pytest.mark.parametrize("nu", [1, 2, 3, 6])
def test_gaussian_integral_numeric(q0, nu):
    series = gaussian_radial_numeric(nu, q0, "series") if q0 < 0.9 else None
    product = gaussian_radial_numeric(nu, q0, "product")
    closed = gaussian_radial_closed_form(nu, q0)
    assert product == pytest.approx(closed, rel=1e-9)
    assert gaussian_radial(nu).evaluate(q0) == pytest.approx(closed, rel=1e-9)
    if series is not None:
        assert series == pytest.approx(product, rel=1e-9)


def test_exponentials_are_inverse():
    for t in (0.2, 0.7, 1.3):
        assert E_q_numeric(t, 0.5) * e_q_numeric(-t, 0.5) == pytest.approx(1.0, rel=1e-12)
    assert nulpexp_check(0.6).ok


def test_extended_scalar_arithmetic():
    a = ExtendedScalar.scalar(qnum(2), 1, "g1")
    b = ExtendedScalar.scalar(q, 1, "g1")
    assert (a + b) - b == a
    assert (a * q).ratio(a) == q
    assert a - a == 0
    with pytest.raises(ValueError):
        a + ExtendedScalar.scalar(ONE, 1, "g2")


def test_ball_integral_of_constant():
    v = ball_integral_poly(CliffordPolynomial.const(3, 1))
    assert v.coeff(0, 3) == qnum(3).inverse()
    assert v.omega == 1


def test_ball_integral_scaling():
    rng = random.Random(3)
    P = random_clifford_polynomial(rng, 2, 3)
    assert scaling_law_check(P, q) is None


@pytest.mark.parametrize("m", [2, 3])
def test_q_cauchy_formula(m):
    rng = random.Random(m)
    for _ in range(3):
        f = random_clifford_polynomial(rng, m, 3)
        g = random_clifford_polynomial(rng, m, 3)
        assert q_cauchy_check(f, g) is None


def test_q_cauchy_fails_for_classical_dirac(monkeypatch):
    # mutation check: swap in the undeformed Dirac operator and the identity breaks
    from qclifford import qintegrate
    from qclifford.qoperators import DIRAC

    rng = random.Random(5)
    f = random_clifford_polynomial(rng, 2, 3)
    g = random_clifford_polynomial(rng, 2, 3)
    monkeypatch.setattr(qintegrate, "Q_DIRAC", DIRAC)
    lhs, rhs = q_cauchy_sides(f, g)
    assert lhs != rhs


def test_monogenic_boundary_term_vanishes_for_f_one():
    for M in monogenic_basis(3, 2).elements[:3]:
        lhs, rhs = q_cauchy_sides(CliffordPolynomial.const(3, 1), M)
        assert lhs == rhs


def test_gaussian_leibniz_rule_by_series():
    P = CliffordPolynomial.monomial(2, (1, 1), 1, 1) + CliffordPolynomial.const(2, 2)
    for s in (-1, 0, 1):
        assert gaussian_leibniz_check(P, s, 8) is None


def test_gaussian_ball_integral_parity():
    x = CliffordPolynomial.vector_variable(3)
    assert ball_integral_gaussian(x).is_zero()
    assert ball_integral_gaussian(CliffordPolynomial.const(3, 1)) == gaussian_radial(3).times_omega()
    with pytest.raises(ValueError):
        ball_integral_gaussian(x, s=2)


def test_gauss_poly_scale_shifts_weight():
    g = GaussPoly(CliffordPolynomial.const(2, 1), 0)
    assert g.scale_q().s == 1
    assert g.q_dirac().poly == CliffordPolynomial.vector_variable(2) * (q + 1)
