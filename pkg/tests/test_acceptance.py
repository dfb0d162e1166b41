"""Acceptance criteria, one test per criterion.

The terminal summary prints a PASS/FAIL line for each criterion number.
Everything is exact over Q(theta) except criterion 9, which is numeric.
"""
import itertools
from fractions import Fraction

import pytest

from superjack.checks import monomial_mpoly
from superjack.coeffs import ONE, THETA, ZERO
from superjack.deformed import bound_check, is_block_symmetric, phi, quasi_invariance_check, super_jack
from superjack.forms import gram_matrix, hermite_gram, reproducing_check
from superjack.mpoly import MPoly
from superjack.operators import (
    deformed_integral_apply,
    dunkl_apply,
    exp_half_L,
    harmonic_integral_apply,
    quantum_integral_apply,
    super_hermite,
    symmetric_integral_apply,
    trig_integral_apply,
    trig_eigenvalue,
)
from superjack.partitions import (
    Dominance,
    b_lambda,
    dominance_compare,
    enumerate_partitions,
    in_fat_hook,
    pochhammer_gen,
)
from superjack.symfunc import (
    MONOMIAL,
    SymFunc,
    eps_X,
    jack,
    kaneko_C,
    power,
    scalar_product,
    spec_formula,
)

THREE_LAYOUTS = [(1, 1), (2, 1), (1, 2)]
FOUR_LAYOUTS = THREE_LAYOUTS + [(2, 2)]


def upto(d, hook=None):
    return [lam for k in range(d + 1) for lam in enumerate_partitions(k, hook)]


def monomials(N, max_degree):
    return [e for e in itertools.product(range(max_degree + 1), repeat=N) if sum(e) <= max_degree]


@pytest.mark.criterion(1, "Jack sanity for |lambda| <= 5")
def test_criterion_1_jack_sanity():
    for k in range(6):
        parts = enumerate_partitions(k)
        for lam in parts:
            P = jack(lam)
            mono = P.to(MONOMIAL)
            assert mono.coeff(lam) == ONE
            assert all(dominance_compare(mu, lam) in (Dominance.LESS, Dominance.EQUAL) for mu in mono.terms)
            assert scalar_product(P, P) * b_lambda(lam) == ONE
            assert eps_X(P) == spec_formula(lam)
        for lam, mu in itertools.combinations(parts, 2):
            assert scalar_product(jack(lam), jack(mu)) == ZERO


@pytest.mark.criterion(2, "Kaneko sum rule for k <= 4")
def test_criterion_2_kaneko_sum_rule():
    for k in range(5):
        total = SymFunc.zero()
        for lam in enumerate_partitions(k):
            total = total + kaneko_C(lam)
        assert total == power(SymFunc.powersum((1,)), k)


@pytest.mark.criterion(3, "kernel theorem for |lambda| <= 4")
def test_criterion_3_kernel():
    for n, m in THREE_LAYOUTS:
        for lam in upto(4):
            assert phi(jack(lam), n, m).poly.is_zero() == (not in_fat_hook(lam, n, m))


@pytest.mark.criterion(4, "quasi-invariance of phi images of degree <= 4")
def test_criterion_4_membership():
    # quasi-invariance is linear, so the power-sum images span every case
    for n, m in FOUR_LAYOUTS:
        for lam in upto(4):
            q = phi(SymFunc.powersum(lam), n, m).poly
            assert is_block_symmetric(q)
            for i in range(1, n + 1):
                for j in range(1, m + 1):
                    assert quasi_invariance_check(q, i, j)


@pytest.mark.criterion(5, "operator algebra")
def test_criterion_5_operator_algebra():
    # Dunkl operators commute on every monomial of degree <= 4
    for N in (1, 2, 3):
        for e in monomials(N, 4):
            p = MPoly(N, 0, {e: 1})
            for i, j in itertools.combinations(range(1, N + 1), 2):
                assert dunkl_apply(i, N, dunkl_apply(j, N, p)) == dunkl_apply(j, N, dunkl_apply(i, N, p))
    # with m = 0 the deformed integrals are Res p_r(D)
    for N in (1, 2, 3):
        for mu in upto(4):
            p = monomial_mpoly(mu, N)
            if p.is_zero():
                continue
            for r in (1, 2, 3):
                assert deformed_integral_apply(r, p) == symmetric_integral_apply(SymFunc.powersum((r,)), N, p)
    # the deformed integrals commute on super-Jack polynomials
    for n, m in THREE_LAYOUTS:
        for lam in upto(4, (n, m)):
            sp = super_jack(lam, n, m).poly
            for r, s in itertools.combinations((1, 2, 3), 2):
                assert deformed_integral_apply(r, deformed_integral_apply(s, sp)) == \
                    deformed_integral_apply(s, deformed_integral_apply(r, sp))


@pytest.mark.criterion(6, "Gram matrices are diagonal with the closed-form norms")
def test_criterion_6_gram():
    for n, m in FOUR_LAYOUTS:
        for d in range(5):
            rep = gram_matrix(n, m, d)
            assert rep.is_diagonal
            for i, lam in enumerate(rep.labels):
                assert rep.matrix[i][i] == pochhammer_gen(n * THETA - m, lam) / b_lambda(lam)
    worked = 2 * (THETA - 1) / (1 + THETA)
    direct = quantum_integral_apply(jack((2,)), super_jack((2,), 1, 1).poly).constant_term()
    assert direct == worked
    assert pochhammer_gen(THETA - 1, (2,)) / b_lambda((2,)) == worked


@pytest.mark.criterion(7, "reproducing kernel for |mu| <= 3")
def test_criterion_7_reproducing():
    for n, m in [(1, 1), (2, 1)]:
        for mu in upto(3, (n, m)):
            assert reproducing_check(mu, n, m)


@pytest.mark.criterion(8, "intertwining of trigonometric and harmonic integrals")
def test_criterion_8_intertwining():
    for n, m in [(1, 1), (2, 1)]:
        for lam in upto(4, (n, m)):
            sp = super_jack(lam, n, m).poly
            sh = super_hermite(lam, n, m)
            assert sh == exp_half_L(sp, -1)
            for r in (1, 2, 3):
                ev = trig_eigenvalue(lam, r, n, m)
                assert trig_integral_apply(r, sp) == sp.scale(ev)
                # exp(-L/2) T = S exp(-L/2) on SP_lam
                conj = harmonic_integral_apply(r, sh)
                assert exp_half_L(trig_integral_apply(r, sp), -1) == conj
                assert harmonic_integral_apply(r, sh, mode="commutator") == conj
                assert conj == sh.scale(ev)
    for n, m in FOUR_LAYOUTS:
        for d in range(5):
            assert hermite_gram(n, m, d).matrix == gram_matrix(n, m, d).matrix


@pytest.mark.criterion(9, "numeric growth bound at theta in {2, 3}")
@pytest.mark.parametrize("theta", [2, 3])
def test_criterion_9_growth_bound(theta):
    rep = bound_check(1, 1, Fraction(theta), 4, count=50, radius=2.0, seed=0, slack=1e-9)
    assert rep.checked == 50 * len(upto(4, (1, 1)))
    assert rep.passed, rep.failures[:3]


@pytest.mark.criterion(10, "integral representation not reproduced (out of scope); consequences covered by 6 and 8")
def test_criterion_10_out_of_scope():
    # nothing to reproduce: the criterion excludes the integral representation and its
    # constant, and asks only that their algebraic consequences be covered elsewhere
    import superjack

    assert not any("integral_representation" in name for name in superjack.__all__)
    assert hermite_gram(1, 1, 2).matrix == gram_matrix(1, 1, 2).matrix
