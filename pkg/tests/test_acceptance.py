"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""
from __future__ import annotations

import time

from qclifford.qintegrate import cauchy_suite, changevar_suite
from qclifford.qoperators import algebra_suite, axiom_suite, structure_suite
from qclifford.qpolynomials import (
    ch_laguerre_bridge,
    classical_limit_suite,
    q_clifford_hermite,
    q_hermite_suite,
    q_laguerre_suite,
    qch_orthogonality,
    qch_suite,
    schrodinger_suite,
    suq11_realization,
)


def _assert(ok, reports):
    assert ok, "\n".join(f"{rep.suite}: {r.name} [{r.anchor}] {r.counterexample}" for rep in reports for r in rep.failures())


def test_q_dirac_axioms(record_criterion):
    t0 = time.perf_counter()
    reports = [axiom_suite(m, 6) for m in (1, 2, 3, 4)]
    elapsed = time.perf_counter() - t0
    ok = record_criterion(1, f"q-Dirac axioms and independent construction, m=1..4, degree<=6, {elapsed:.1f}s", reports)
    _assert(ok, reports)
    assert elapsed < 120


def test_structure_results(record_criterion):
    reports = [structure_suite(m, 6, 3) for m in (1, 2, 3, 4)]
    _assert(record_criterion(2, "block actions, commutation lemmas, Laplace decompositions", reports), reports)


def test_quantum_algebra_relations(record_criterion):
    # Three osp(1|2)_q coefficients and one su(1|1)_q coefficient in the relation
    # tables disagree with the block actions; those relations stay red by design.
    reports = [algebra_suite(name, m, 5) for name in ("sl2q", "suq11", "osp12q") for m in (1, 2, 3)]
    _assert(record_criterion(3, "sl2(R)_q, su(1|1)_q and osp(1|2)_q relations, m=1..3, degree<=5", reports), reports)


def test_jackson_integration(record_criterion):
    reports = [changevar_suite((0.3, 0.6, 0.9))] + [cauchy_suite(m, 3) for m in (2, 3)]
    _assert(record_criterion(4, "FTC, change of variables, Gaussian integrals, q-Cauchy formula", reports), reports)


def test_q_hermite(record_criterion):
    reports = [q_hermite_suite(8, 30)]
    _assert(record_criterion(5, "q-Hermite family, Rodrigues to order 30, orthogonality, k<=8", reports), reports)


def test_q_clifford_hermite(record_criterion):
    t0 = time.perf_counter()
    q_clifford_hermite.cache_clear()
    reports = []
    for m in (2, 3):
        reports += [qch_suite(m, 6, 2), qch_orthogonality(m, 6, 2)]
    elapsed = time.perf_counter() - t0
    ok = record_criterion(6, f"q-Clifford-Hermite family and orthogonality, j<=6, k<=2, m=2,3, {elapsed:.1f}s", reports)
    _assert(ok, reports)
    assert elapsed < 600


def test_q_laguerre(record_criterion):
    reports = [q_laguerre_suite(5, a) for a in (-1, 0, 1, 2, 3)]
    reports += [ch_laguerre_bridge(m, 5, 2) for m in (2, 3)]
    _assert(record_criterion(7, "Q-Laguerre equations, orthogonality, base inversion, bridges", reports), reports)


def test_suq11_realization(record_criterion):
    reports = [suq11_realization(m, k, 5) for m in (2, 3) for k in range(3)]
    _assert(record_criterion(8, "su_q(1|1) ladder actions and brackets, j<=5, k<=2, m=2,3", reports), reports)


def test_schrodinger(record_criterion):
    reports = [schrodinger_suite(m, k, 5) for m in (2, 3) for k in range(3)]
    _assert(record_criterion(9, "radial q-Schroedinger equivalence and free particle residual", reports), reports)


def test_classical_limit(record_criterion):
    reports = [classical_limit_suite(5, (1, 2, 3))]
    _assert(record_criterion(10, "q=1 limit against classical Hermite, Laguerre, Dirac, Laplace", reports), reports)
