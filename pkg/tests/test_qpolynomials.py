from __future__ import annotations

from fractions import Fraction

import pytest
import sympy

from qclifford.polyspace import monogenic_basis
from qclifford.qfield import ONE, Q, q, qnum
from qclifford.qpolynomials import (
    ch_by_recursion,
    ch_norm_ratio_recursive,
    ch_norm_ratio_stated,
    ch_operator,
    free_particle_residual,
    hermite_eigenvalue,
    hermite_inner_product,
    hermite_norm_stated,
    hermite_operator,
    laguerre_inner_product,
    laguerre_inversion_check,
    laguerre_operator,
    q_clifford_hermite,
    q_exponential,
    q_hermite,
    q_hermite_recursive,
    q_laguerre,
)
from qclifford.univariate import QPoly1D


def at_one(poly: QPoly1D):
    return [c.at_one() for c in poly.coeffs]


def test_q_hermite_low_degrees():
    assert q_hermite(0) == QPoly1D([1])
    assert q_hermite(1) == QPoly1D([0, q + 1])
    assert q_hermite(2) == QPoly1D([-(q ** 2) * (q + 1), 0, (q + 1) ** 2])


@pytest.mark.parametrize("k", range(9))
def test_q_hermite_closed_form_equals_recursion(k):
    assert q_hermite(k) == q_hermite_recursive(k)


@pytest.mark.parametrize("k", range(9))
def test_q_hermite_eigen_equation(k):
    H = q_hermite(k)
    assert hermite_operator(H) == H.scale_argument(q) * (-(q + 1) * hermite_eigenvalue(k))


def test_hermite_mutation_breaks_equation():
    H = q_hermite(4) + QPoly1D.monomial(2)
    assert hermite_operator(H) != H.scale_argument(q) * (-(q + 1) * hermite_eigenvalue(4))


@pytest.mark.parametrize("k", range(6))
def test_q_hermite_classical_limit_against_sympy(k):
    t = sympy.symbols("t")
    expected = sympy.Poly(sympy.hermite(k, t), t).all_coeffs()[::-1]
    assert at_one(q_hermite(k)) == [Fraction(int(c)) for c in expected]


def test_q_hermite_orthogonality_small():
    for k in range(4):
        for l in range(k):
            assert hermite_inner_product(q_hermite(k), q_hermite(l)).is_zero()
        assert hermite_inner_product(q_hermite(k), q_hermite(k)) == hermite_norm_stated(k)


def test_q_exponentials_inverse_as_series():
    E, e = q_exponential("E", 12), q_exponential("e", 12)
    prod = (E * e.scale_argument(-1)).truncate(12)
    assert prod == QPoly1D([ONE])


@pytest.mark.parametrize("two_alpha", [-1, 0, 1, 2, 3])
def test_q_laguerre_difference_equation(two_alpha):
    for t in range(5):
        L = q_laguerre(t, two_alpha).poly
        # [-t]_Q = -Q^-t [t]_Q
        assert laguerre_operator(L, two_alpha) == L.scale_argument(Q) * (-qnum(t, 2) / Q ** t)


@pytest.mark.parametrize("two_alpha", [-1, 0, 1])
def test_q_laguerre_orthogonality(two_alpha):
    Ls = [q_laguerre(t, two_alpha).poly for t in range(4)]
    for a in range(4):
        for b in range(a):
            assert laguerre_inner_product(Ls[a], Ls[b], two_alpha).is_zero()
        assert not laguerre_inner_product(Ls[a], Ls[a], two_alpha).is_zero()


@pytest.mark.parametrize("two_alpha", [0, 2, 4])
def test_q_laguerre_classical_limit(two_alpha):
    u = sympy.symbols("u")
    for t in range(5):
        expected = sympy.Poly(sympy.assoc_laguerre(t, two_alpha // 2, u), u).all_coeffs()[::-1]
        assert at_one(q_laguerre(t, two_alpha).poly) == [Fraction(str(c)) for c in expected]


def test_laguerre_base_inversion():
    for t in range(4):
        assert laguerre_inversion_check(t, 1, 2) is None
        assert laguerre_inversion_check(t, 2, 1) is None


def test_laguerre_rejects_bad_alpha():
    with pytest.raises(ValueError):
        q_laguerre(2, -2)
    with pytest.raises(ValueError):
        q_laguerre(2, 1, power=1)


@pytest.mark.parametrize("m,k", [(2, 0), (2, 1), (3, 1)])
def test_clifford_hermite_closed_form_and_equation(m, k):
    M = monogenic_basis(m, k).elements[0]
    for j in range(5):
        H = q_clifford_hermite(j, m, k)
        assert H.x_powers() == ch_by_recursion(j, m, k).x_powers()
        f = H.apply(M)
        assert ch_operator(f) == f.scale_argument(q) * (-(q + 1) * H.eigenvalue())


def test_clifford_hermite_odd_norm_exponent():
    # the norm recursion gives Q^((j+1)(j+beta+1)); the offset-2 variant is off by Q^(j+1)
    for m in (2, 3):
        for j in range(3):
            good = ch_norm_ratio_stated(2 * j + 1, m, 1, odd_offset=1)
            assert ch_norm_ratio_recursive(2 * j + 1, m, 1) == good
            assert ch_norm_ratio_stated(2 * j + 1, m, 1, odd_offset=2) == good * Q ** (j + 1)


def test_free_particle_residual_is_one_monomial():
    for n in range(1, 6):
        r = free_particle_residual(3, 1, n)
        assert [i for i, c in enumerate(r.coeffs) if c] == [2 * n]
