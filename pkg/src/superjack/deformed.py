"""The algebra Lambda_{n,m} and super-Jack polynomials.

Symmetric functions are mapped into polynomials in x_1..x_n, y_1..y_m by
sending p_r to the deformed power sum sum_i x_i^r - (1/theta) sum_j y_j^r.
"""
from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .coeffs import ONE, THETA, ThetaFunction, ThetaGuard, as_theta
from .mpoly import MPoly
from .partitions import Partition, b_lambda, enumerate_partitions, hook_product, in_fat_hook
from .symfunc import POWERSUM, SymFunc, convert, jack, spec_formula


@dataclass(frozen=True, eq=False)
class SuperElement:
    """A polynomial in Lambda_{n,m}, optionally with a power-sum preimage.

    ``kernel`` marks the zero image of a Jack function outside the fat hook.
    """

    poly: MPoly
    representative: SymFunc | None = None
    kernel: bool = False

    @property
    def n(self) -> int:
        return self.poly.n

    @property
    def m(self) -> int:
        return self.poly.m

    def is_zero(self) -> bool:
        return self.poly.is_zero()


@lru_cache(maxsize=None)
def deformed_power_sum(r: int, n: int, m: int) -> MPoly:
    """p_{r,theta} = sum_i x_i^r - theta^{-1} sum_j y_j^r; p_0 maps to n - m/theta."""
    if r == 0:
        return MPoly.constant(n, m, n - as_theta(m) / THETA)
    terms = {}
    for k in range(n + m):
        e = [0] * (n + m)
        e[k] = r
        terms[tuple(e)] = ONE if k < n else -ONE / THETA
    return MPoly(n, m, terms)


@lru_cache(maxsize=None)
def _phi_powersum(lam: Partition, n: int, m: int) -> MPoly:
    if not lam:
        return MPoly.constant(n, m, 1)
    return _phi_powersum(Partition(lam[1:]), n, m) * deformed_power_sum(lam[0], n, m)


def phi(f: SymFunc, n: int, m: int) -> SuperElement:
    """Image of ``f`` under p_r -> p_{r,theta}(x, y)."""
    f = convert(f, POWERSUM)
    out = MPoly.zero(n, m)
    for lam, c in f.terms.items():
        out = out + _phi_powersum(lam, n, m).scale(c)
    return SuperElement(out, f)


_sp_memo: dict[tuple[Partition, int, int], SuperElement] = {}
_sp_lock = threading.Lock()


def super_jack(lam: Sequence[int], n: int, m: int) -> SuperElement:
    """SP_lam = phi_{n,m}(P_lam).

    For lam outside H_{n,m} the image vanishes; the result then carries
    ``kernel=True`` instead of raising.
    """
    key = (Partition(lam), n, m)
    hit = _sp_memo.get(key)
    if hit is not None:
        return hit
    img = phi(jack(key[0]), n, m)
    value = SuperElement(img.poly, img.representative, kernel=not in_fat_hook(key[0], n, m))
    with _sp_lock:
        return _sp_memo.setdefault(key, value)


def kaneko_factor(lam: Sequence[int]) -> ThetaFunction:
    lam = Partition(lam)
    return as_theta(math.factorial(lam.weight)) / hook_product(lam)


def super_C(lam: Sequence[int], n: int, m: int) -> SuperElement:
    """Renormalized super-Jack |lam|!/prod_s(a + 1 + theta l) * SP_lam."""
    sp = super_jack(lam, n, m)
    c = kaneko_factor(lam)
    return SuperElement(sp.poly.scale(c), sp.representative * c, sp.kernel)


def quasi_invariance_check(p: MPoly, i: int, j: int) -> bool:
    """True iff (d/dx_i + theta d/dy_j) p vanishes on x_i = y_j (1-based i, j)."""
    if not (1 <= i <= p.n and 1 <= j <= p.m):
        raise ValueError(f"need 1 <= i <= {p.n} and 1 <= j <= {p.m}, got ({i}, {j})")
    xi, yj = i - 1, p.n + j - 1
    q = p.diff(xi) + p.diff(yj).scale(THETA)
    return q.identify(yj, xi).is_zero()


def is_block_symmetric(p: MPoly) -> bool:
    n, m = p.n, p.m
    for k in range(n - 1):
        if p.swap(k, k + 1) != p:
            return False
    for k in range(n, n + m - 1):
        if p.swap(k, k + 1) != p:
            return False
    return True


def in_deformed_ring(p: MPoly) -> bool:
    """Block symmetry plus quasi-invariance on every hyperplane x_i = y_j."""
    if not is_block_symmetric(p):
        return False
    return all(quasi_invariance_check(p, i, j)
               for i in range(1, p.n + 1) for j in range(1, p.m + 1))


def evaluate(p: MPoly, point: Sequence, theta_value=None):
    """Evaluate ``p`` at ``point``.

    Exact mode (``theta_value`` is None) substitutes Q(theta) values and
    returns a ThetaFunction.  Numeric mode specializes theta, rejecting the
    excluded parameter values for (n, m), and returns a complex number.
    """
    if theta_value is None:
        return p.evaluate_exact(point)
    return p.evaluate_numeric([complex(v) for v in point], Fraction(theta_value),
                              ThetaGuard.fat_hook(p.n, p.m))


def eval_ones_check(lam: Sequence[int], n: int, m: int) -> bool:
    """SP_lam(1^{n+m}) against the specialization formula at X = n - m/theta."""
    lam = Partition(lam)
    if not in_fat_hook(lam, n, m):
        raise ValueError(f"{tuple(lam)} is not in H_{{{n},{m}}}")
    lhs = evaluate(super_jack(lam, n, m).poly, [1] * (n + m))
    rhs = spec_formula(lam, n - as_theta(m) / THETA)
    return lhs == rhs


def analyticity_bound(lam: Sequence[int], n: int, m: int, theta_value, point: Sequence[complex]) -> float:
    """Right-hand side (1/sqrt(b_lam)) (||(x,y)||_inf (sqrt(theta) n + m/sqrt(theta)))^{|lam|}."""
    lam = Partition(lam)
    t = float(Fraction(theta_value))
    b = float(b_lambda(lam).specialize(theta_value))
    sup = max((abs(complex(v)) for v in point), default=0.0)
    return (sup * (math.sqrt(t) * n + m / math.sqrt(t))) ** lam.weight / math.sqrt(b)


def random_points(count: int, size: int, radius: float, seed: int) -> list[list[complex]]:
    """Complex points whose coordinates have modulus at most ``radius``."""
    import numpy as np

    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.random((count, size)))
    phase = rng.random((count, size)) * 2 * math.pi
    return [[cmath.rect(float(a), float(b)) for a, b in zip(rr, pp)] for rr, pp in zip(r, phase)]


@dataclass
class BoundReport:
    theta: Fraction
    n: int
    m: int
    worst_ratio: float
    checked: int
    failures: list[tuple[Partition, list[complex], float, float]]

    @property
    def passed(self) -> bool:
        return not self.failures


def bound_check(n: int, m: int, theta_value, max_degree: int, *, count: int = 50,
                radius: float = 2.0, seed: int = 0, slack: float = 1e-9) -> BoundReport:
    """Numerically test the super-Jack growth bound on random complex points."""
    theta_value = Fraction(theta_value)
    ThetaGuard.fat_hook(n, m).check(theta_value)
    pts = random_points(count, n + m, radius, seed)
    failures = []
    worst = 0.0
    checked = 0
    for d in range(max_degree + 1):
        for lam in enumerate_partitions(d, (n, m)):
            sp = super_jack(lam, n, m).poly
            for pt in pts:
                lhs = abs(evaluate(sp, pt, theta_value))
                rhs = analyticity_bound(lam, n, m, theta_value, pt)
                checked += 1
                if rhs > 0:
                    worst = max(worst, lhs / rhs)
                if lhs > rhs * (1 + slack):
                    failures.append((lam, pt, lhs, rhs))
    return BoundReport(theta_value, n, m, worst, checked, failures)
