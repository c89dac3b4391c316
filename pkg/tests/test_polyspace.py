from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qclifford.polyspace import (
    CliffordPolynomial,
    dim_harmonic,
    dim_monogenic,
    dirac,
    divide_r2,
    euler,
    fischer_blocks,
    gamma_op,
    harmonic_basis,
    harmonic_decompose,
    laplace,
    monogenic_basis,
    mul_vector_variable,
    recompose,
    sphere_moment,
)


def random_poly(m, d, seed, blades=True):
    import random

    rng = random.Random(seed)
    P = CliffordPolynomial.zero(m)
    for _ in range(4):
        alpha = [0] * m
        for _ in range(d):
            alpha[rng.randrange(m)] += 1
        mask = rng.randrange(1 << m) if blades else 0
        P = P + CliffordPolynomial.monomial(m, tuple(alpha), mask, rng.randint(-4, 4))
    return P


def test_vector_variable_squares_to_minus_r2():
    for m in (1, 2, 3, 4):
        x = CliffordPolynomial.vector_variable(m)
        assert x * x == -CliffordPolynomial.r2(m)


def test_dirac_of_x_is_m():
    for m in (1, 2, 3):
        assert dirac(CliffordPolynomial.vector_variable(m)) == CliffordPolynomial.const(m, m)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.integers(0, 10 ** 6))
def test_dirac_squares_to_minus_laplace(m, d, seed):
    P = random_poly(m, d, seed)
    assert dirac(dirac(P)) == -laplace(P)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 3), st.integers(0, 5), st.integers(0, 10 ** 6))
def test_gamma_is_x_dirac_minus_euler(m, d, seed):
    P = random_poly(m, d, seed)
    assert gamma_op(P) == mul_vector_variable(dirac(P)) - euler(P)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(0, 6), st.integers(0, 10 ** 6))
def test_fischer_blocks_recompose_and_are_monogenic(m, d, seed):
    P = random_poly(m, d, seed)
    blocks = fischer_blocks(P)
    assert recompose(m, blocks) == P
    for (i, k), M in blocks.items():
        assert dirac(M).is_zero()
        assert M.is_homogeneous() and M.degree() == k


def test_harmonic_decomposition_recomposes():
    P = random_poly(3, 4, 7, blades=False)
    total = CliffordPolynomial.zero(3)
    x2 = CliffordPolynomial.vector_variable(3) ** 2
    for i, H in harmonic_decompose(P):
        assert laplace(H).is_zero()
        total = total + x2 ** i * H
    assert total == P


@pytest.mark.parametrize("m,k", [(2, 0), (2, 3), (3, 0), (3, 1), (3, 2), (4, 1)])
def test_monogenic_basis_dimension_and_orthogonality(m, k):
    from qclifford.polyspace import sphere_pairing

    B = monogenic_basis(m, k)
    assert len(B) == dim_monogenic(m, k)
    for M in B.elements:
        assert dirac(M).is_zero()
    for a in range(len(B)):
        for b in range(a + 1, len(B)):
            assert sphere_pairing(B.elements[a], B.elements[b]).is_zero()


@pytest.mark.parametrize("m,k", [(2, 3), (3, 2), (4, 2)])
def test_harmonic_basis_dimension(m, k):
    B = harmonic_basis(m, k)
    assert len(B) == dim_harmonic(m, k)
    assert all(laplace(H).is_zero() for H in B.elements)


def test_monogenic_basis_cache_round_trip(tmp_path):
    a = monogenic_basis(3, 1, cache_dir=tmp_path)
    b = monogenic_basis(3, 1, cache_dir=tmp_path)
    assert any(tmp_path.iterdir())
    assert a.elements == b.elements and a.gram == b.gram


def _sympy_sphere_average(alpha):
    th, ph = sympy.symbols("theta phi")
    x = sympy.sin(th) * sympy.cos(ph)
    y = sympy.sin(th) * sympy.sin(ph)
    z = sympy.cos(th)
    f = x ** alpha[0] * y ** alpha[1] * z ** alpha[2] * sympy.sin(th)
    val = sympy.integrate(sympy.integrate(f, (ph, 0, 2 * sympy.pi)), (th, 0, sympy.pi))
    return Fraction(str(sympy.nsimplify(val / (4 * sympy.pi))))


@pytest.mark.parametrize("alpha", [(2, 0, 0), (2, 2, 0), (4, 0, 0), (2, 2, 2), (1, 1, 0), (4, 2, 0)])
def test_sphere_moments_against_sympy(alpha):
    assert sphere_moment(alpha) == _sympy_sphere_average(alpha)


def test_divide_r2():
    P = random_poly(3, 3, 1)
    assert divide_r2(P * CliffordPolynomial.r2(3)) == P


def test_json_round_trip():
    P = random_poly(3, 3, 2)
    assert CliffordPolynomial.from_json(3, P.to_json()) == P
