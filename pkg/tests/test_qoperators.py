from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qclifford.polyspace import CliffordPolynomial, dirac, euler, gamma_op, laplace, monogenic_basis, mul_vector_variable
from qclifford.qfield import q, qnum
from qclifford.qoperators import (
    BIG_E,
    MUL_X,
    Q_DIRAC,
    Q_LAPLACE,
    R2,
    algebra_suite,
    axiom_suite,
    check_identity,
    commutator,
    q_dirac,
    q_dirac_alt,
    q_laplace,
    q_power_euler,
    scalar_laplace_check,
    structure_suite,
)


def random_poly(m, d, seed):
    rng = random.Random(seed)
    P = CliffordPolynomial.zero(m)
    for _ in range(4):
        alpha = [0] * m
        for _ in range(d):
            alpha[rng.randrange(m)] += 1
        P = P + CliffordPolynomial.monomial(m, tuple(alpha), rng.randrange(1 << m), rng.randint(-4, 4))
    return P


def at_one(P):
    return P.map_coeffs(lambda c: c.at_one())


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.integers(0, 10 ** 6))
def test_q_dirac_matches_alternative_construction(m, d, seed):
    P = random_poly(m, d, seed)
    assert q_dirac(P) == q_dirac_alt(P)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 5), st.integers(0, 10 ** 6))
def test_classical_limit_of_q_dirac(m, d, seed):
    P = random_poly(m, d, seed)
    assert at_one(q_dirac(P)) == dirac(P)
    assert at_one(q_laplace(P)) == laplace(P)


def test_q_dirac_on_monogenic_times_x():
    for k in range(3):
        for M in monogenic_basis(3, k).elements:
            assert q_dirac(M).is_zero()
            assert q_dirac(mul_vector_variable(M)) == M * qnum(3 + 2 * k)


def test_q_power_euler_scales_homogeneous_parts():
    P = CliffordPolynomial.monomial(2, (2, 1), 0, 1) + CliffordPolynomial.monomial(2, (1, 0), 3, 1)
    expected = CliffordPolynomial.monomial(2, (2, 1), 0, q ** 3) + CliffordPolynomial.monomial(2, (1, 0), 3, q)
    assert q_power_euler(P) == expected


@pytest.mark.parametrize("m", [1, 2, 3])
def test_axioms_hold(m):
    assert axiom_suite(m, 4).ok


@pytest.mark.parametrize("m", [2, 3])
def test_structure_suite(m):
    rep = structure_suite(m, 4, 2)
    assert rep.ok, rep.failures()
    assert scalar_laplace_check(m, 4).ok


@pytest.mark.parametrize("m", [1, 2, 3])
def test_block_and_polynomial_modes_agree(m):
    for name in ("sl2q", "osp12q", "suq11"):
        a = [r.status for r in algebra_suite(name, m, 3, "blocks").relations]
        b = [r.status for r in algebra_suite(name, m, 3, "polynomial").relations]
        assert a == b


def test_sl2q_relations_hold():
    for m in (1, 2, 3):
        assert algebra_suite("sl2q", m, 5).ok


def test_check_identity_detects_wrong_coefficient():
    c = qnum(4) * qnum(2) / 4
    good = check_identity(commutator(Q_LAPLACE / 2, BIG_E, q ** 2), c * (Q_LAPLACE / 2), 2, 4)
    bad = check_identity(commutator(Q_LAPLACE / 2, BIG_E, q ** 2), (c * q) * (Q_LAPLACE / 2), 2, 4)
    assert good is None
    assert bad is not None and "block" in bad


def test_check_identity_polynomial_mode_reports_input():
    cex = check_identity(Q_DIRAC * MUL_X, MUL_X * Q_DIRAC, 2, 2, "polynomial")
    assert cex is not None and "input" in cex


def test_anticommutator_coefficient_fixed_by_block_actions():
    # the (q+1)/2 coefficient fails, 4/(q+1) holds
    lhs = Q_DIRAC * MUL_X + (q ** 2) * (MUL_X * Q_DIRAC)
    assert check_identity(lhs, (4 / (q + 1)) * BIG_E, 3, 5) is None
    assert check_identity(lhs, ((q + 1) / 2) * BIG_E, 3, 5) is not None


def test_big_E_at_q_one():
    P = random_poly(3, 3, 11)
    assert at_one(BIG_E.apply(P)) == euler(P) + P * qnum(3, 1).at_one() / 2


def test_gamma_classical_relation():
    P = random_poly(2, 3, 5)
    assert at_one(R2.apply(q_laplace(P))) == at_one(R2.apply(laplace(P)))
    assert gamma_op(P) == mul_vector_variable(dirac(P)) - euler(P)
