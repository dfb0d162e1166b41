"""The invariant suite behind ``superjack verify-all``.

Every check is exact except the growth bound, which evaluates numerically
at admissible rational theta.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .coeffs import ONE, THETA, ThetaFunction, ThetaGuard, as_theta
from .deformed import (
    bound_check,
    eval_ones_check,
    in_deformed_ring,
    phi,
    super_jack,
)
from .forms import gram_matrix, hermite_generating_check, hermite_gram, reproducing_check
from .mpoly import MPoly
from .operators import (
    deformed_integral_apply,
    deformed_laplacian_apply,
    dunkl_apply,
    exp_half_L,
    harmonic_integral_apply,
    symmetric_integral_apply,
    trig_eigenvalue,
    trig_integral_apply,
)
from .partitions import (
    Dominance,
    arm_leg,
    b_lambda,
    conjugate,
    dominance_compare,
    east_south,
    enumerate_partitions,
    in_fat_hook,
    pochhammer_gen,
    rectangle_overlap,
)
from .symfunc import (
    MONOMIAL,
    POWERSUM,
    SymFunc,
    eps_X,
    jack,
    kaneko_C,
    power,
    scalar_product,
    spec_formula,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed, "seconds": round(self.seconds, 3)}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class SuiteReport:
    n: int
    m: int
    degree: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "degree": self.degree,
            "checks": [r.to_json() for r in self.results],
            "summary": {"total": len(self.results),
                        "failed": sum(not r.passed for r in self.results)},
            "pass": self.passed,
        }


# -- helpers shared with the test suite --------------------------------------

def monomial_mpoly(mu, N: int) -> MPoly:
    """m_mu in N plain variables, by listing the distinct rearrangements."""
    if len(mu) > N:
        return MPoly.zero(N, 0)
    padded = tuple(mu) + (0,) * (N - len(mu))
    return MPoly(N, 0, {e: 1 for e in set(itertools.permutations(padded))})


def symfunc_to_mpoly(f: SymFunc, N: int) -> MPoly:
    """Restriction of f to N variables through the monomial basis."""
    out = MPoly.zero(N, 0)
    for mu, c in f.to(MONOMIAL).terms.items():
        out = out + monomial_mpoly(mu, N).scale(c)
    return out


def random_theta(rng: random.Random) -> ThetaFunction:
    num = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
    den = [rng.randint(-3, 3) for _ in range(rng.randint(1, 2))]
    if not any(den):
        den = [1]
    return ThetaFunction.from_coeffs(num, den)


def random_mpoly(rng: random.Random, N: int, degree: int, terms: int = 4) -> MPoly:
    items = {}
    for _ in range(terms):
        d = rng.randint(0, degree)
        e = [0] * N
        for _ in range(d):
            e[rng.randrange(N)] += 1
        items[tuple(e)] = ThetaFunction.from_coeffs([rng.randint(-3, 3), rng.randint(0, 2)])
    return MPoly(N, 0, items)


def partitions_upto(d: int, hook=None):
    for k in range(d + 1):
        yield from enumerate_partitions(k, hook)


# -- the checks ----------------------------------------------------------------

def _field_axioms(n, m, d, rng):
    for _ in range(20):
        a, b, c = (random_theta(rng) for _ in range(3))
        if (a + b) + c != a + (b + c) or (a * b) * c != a * (b * c):
            return False
        if a * (b + c) != a * b + a * c:
            return False
        if a and a * a.inverse() != ONE:
            return False
    return True


def _partition_combinatorics(n, m, d, rng):
    for lam in partitions_upto(d):
        lc = conjugate(lam)
        if conjugate(lc) != lam or lc.weight != lam.weight:
            return False
        for i, j in lam.boxes():
            if arm_leg(lam, (i, j)).arm != arm_leg(lc, (j, i)).leg:
                return False
        for mu in enumerate_partitions(lam.weight):
            less = dominance_compare(mu, lam) is Dominance.LESS
            if less != (dominance_compare(lc, conjugate(mu)) is Dominance.LESS):
                return False
    return True


def _hook_decomposition(n, m, d, rng):
    for lam in partitions_upto(d, (n, m)):
        prof = east_south(lam, n, m)
        if lam.weight != sum(prof.east) + sum(prof.south) + rectangle_overlap(lam, n, m):
            return False
    return True


def _pochhammer_vanishing(n, m, d, rng):
    a = THETA * n - m
    return all((not pochhammer_gen(a, lam)) == (not in_fat_hook(lam, n, m))
               for lam in partitions_upto(d))


def _jack_triangular(n, m, d, rng):
    for lam in partitions_upto(d):
        mono = jack(lam).to(MONOMIAL)
        if mono.coeff(lam) != ONE:
            return False
        if any(dominance_compare(mu, lam) not in (Dominance.LESS, Dominance.EQUAL) for mu in mono.terms):
            return False
    return True


def _jack_orthogonal(n, m, d, rng):
    for k in range(d + 1):
        parts = enumerate_partitions(k)
        for lam, mu in itertools.combinations(parts, 2):
            if scalar_product(jack(lam), jack(mu)):
                return False
        for lam in parts:
            if scalar_product(jack(lam), jack(lam)) * b_lambda(lam) != ONE:
                return False
    return True


def _specialization(n, m, d, rng):
    return all(eps_X(jack(lam)) == spec_formula(lam) for lam in partitions_upto(d))


def _kaneko_sum(n, m, d, rng):
    for k in range(min(d, 4) + 1):
        total = SymFunc.zero(POWERSUM)
        for lam in enumerate_partitions(k):
            total = total + kaneko_C(lam)
        if total != power(SymFunc.powersum((1,)), k):
            return False
    return True


def _kernel(n, m, d, rng):
    return all(super_jack(lam, n, m).is_zero() == (not in_fat_hook(lam, n, m))
               for lam in partitions_upto(d))


def _membership(n, m, d, rng):
    for lam in partitions_upto(d):
        for f in (SymFunc.powersum(lam), jack(lam)):
            if not in_deformed_ring(phi(f, n, m).poly):
                return False
    return True


def _eval_ones(n, m, d, rng):
    return all(eval_ones_check(lam, n, m) for lam in partitions_upto(d, (n, m)))


def _m0_reduction(n, m, d, rng):
    N = max(n, 1)
    return all(super_jack(lam, N, 0).poly == symfunc_to_mpoly(jack(lam), N)
               for lam in partitions_upto(d))


def _dunkl_commute(n, m, d, rng):
    for N in (2, 3):
        for _ in range(3):
            p = random_mpoly(rng, N, min(d, 4))
            for i, j in itertools.combinations(range(1, N + 1), 2):
                if dunkl_apply(i, N, dunkl_apply(j, N, p)) != dunkl_apply(j, N, dunkl_apply(i, N, p)):
                    return False
    return True


def _m0_consistency(n, m, d, rng):
    N = max(n, 1)
    for lam in partitions_upto(d):
        p = phi(SymFunc.powersum(lam), N, 0).poly
        for r in (1, 2, 3):
            if deformed_integral_apply(r, p) != symmetric_integral_apply(SymFunc.powersum((r,)), N, p):
                return False
    return True


def _laplacian_closed_form(n, m, d, rng):
    for lam in partitions_upto(d, (n, m)):
        sp = super_jack(lam, n, m).poly
        if deformed_integral_apply(2, sp) != deformed_laplacian_apply(sp):
            return False
    return True


def _integrals_commute(n, m, d, rng):
    for lam in partitions_upto(d, (n, m)):
        sp = super_jack(lam, n, m).poly
        for r, s in itertools.combinations((1, 2, 3), 2):
            a = deformed_integral_apply(r, deformed_integral_apply(s, sp))
            b = deformed_integral_apply(s, deformed_integral_apply(r, sp))
            if a != b:
                return False
    return True


def _trig_eigen(n, m, d, rng):
    for lam in partitions_upto(d, (n, m)):
        for r in (1, 2, 3):
            trig_eigenvalue(lam, r, n, m)
        if trig_eigenvalue(lam, 1, n, m) != as_theta(lam.weight):
            return False
    return True


def _intertwining(n, m, d, rng):
    for lam in partitions_upto(d, (n, m)):
        sp = super_jack(lam, n, m).poly
        sh = exp_half_L(sp, -1)
        for r in (1, 2, 3):
            ev = trig_eigenvalue(lam, r, n, m)
            lhs = exp_half_L(trig_integral_apply(r, sp), -1)
            conj = harmonic_integral_apply(r, sh)
            comm = harmonic_integral_apply(r, sh, mode="commutator")
            if not (lhs == conj == comm == sh.scale(ev)):
                return False
    return True


def _exp_inverse(n, m, d, rng):
    for lam in partitions_upto(d):
        p = phi(SymFunc.powersum(lam), n, m).poly
        if exp_half_L(exp_half_L(p, -1), 1) != p:
            return False
    return True


def _gram(n, m, d, rng):
    return all(gram_matrix(n, m, k).passed for k in range(d + 1))


def _reproducing(n, m, d, rng):
    return all(reproducing_check(mu, n, m) for mu in partitions_upto(min(d, 3), (n, m)))


def _hermite_generating(n, m, d, rng):
    return hermite_generating_check(n, m, min(d, 3))


def _hermite_gram(n, m, d, rng):
    for k in range(d + 1):
        h, g = hermite_gram(n, m, k), gram_matrix(n, m, k)
        if h.matrix != g.matrix or not h.passed:
            return False
    return True


def bound_regime(n: int, m: int, theta) -> bool:
    """The growth bound trades l(mu) for |mu| in an exponent, which needs sqrt(theta) n + m/sqrt(theta) >= 1."""
    t = Fraction(theta)
    return t > 0 and t * n * n + 2 * n * m + Fraction(m * m) / t >= 1


def _growth_bound(n, m, d, rng):
    guard = ThetaGuard.fat_hook(n, m)
    thetas = [t for t in (Fraction(2), Fraction(3), Fraction(1, 2))
              if guard.violation(t) is None and bound_regime(n, m, t)]
    return all(bound_check(n, m, t, d).passed for t in thetas)


CHECKS: list[tuple[str, Callable]] = [
    ("coeffs.field-axioms", _field_axioms),
    ("partitions.combinatorics", _partition_combinatorics),
    ("partitions.hook-decomposition", _hook_decomposition),
    ("partitions.pochhammer-vanishing", _pochhammer_vanishing),
    ("symfunc.triangularity", _jack_triangular),
    ("symfunc.orthogonality-and-norms", _jack_orthogonal),
    ("symfunc.specialization", _specialization),
    ("symfunc.kaneko-sum-rule", _kaneko_sum),
    ("deformed.kernel", _kernel),
    ("deformed.membership", _membership),
    ("deformed.eval-ones", _eval_ones),
    ("deformed.m0-reduction", _m0_reduction),
    ("deformed.growth-bound", _growth_bound),
    ("operators.dunkl-commutativity", _dunkl_commute),
    ("operators.m0-consistency", _m0_consistency),
    ("operators.laplacian-closed-form", _laplacian_closed_form),
    ("operators.integrals-commute", _integrals_commute),
    ("operators.trig-eigenfunctions", _trig_eigen),
    ("operators.intertwining", _intertwining),
    ("operators.exp-inverse", _exp_inverse),
    ("forms.gram", _gram),
    ("forms.reproducing-kernel", _reproducing),
    ("forms.hermite-generating", _hermite_generating),
    ("forms.hermite-gram", _hermite_gram),
]


def verify_all(n: int, m: int, degree: int, seed: int = 0) -> SuiteReport:
    report = SuiteReport(n, m, degree)
    rng = random.Random(seed)
    for name, fn in CHECKS:
        start = time.perf_counter()
        detail = ""
        try:
            ok = bool(fn(n, m, degree, rng))
        except (ArithmeticError, ValueError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.results.append(CheckResult(name, ok, time.perf_counter() - start, detail))
    return report
