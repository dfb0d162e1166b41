"""Actions of Dunkl operators and (deformed) Calogero-Moser-Sutherland integrals.

Operators are never built symbolically; every function here applies an
operator to an :class:`MPoly`.  Variable indices in the public functions are
1-based over the combined layout (x_1..x_n, y_1..y_m), so index n + j is y_j.
Divisions by x_i - x_j are exact; a non-zero remainder raises
:class:`NotDivisibleError`, which means the input was not in the subalgebra
the operator preserves.
"""
from __future__ import annotations

import math
from typing import Callable, Sequence

from .coeffs import ONE, THETA, ThetaFunction
from .deformed import SuperElement, super_jack
from .mpoly import MPoly
from .partitions import Partition
from .symfunc import POWERSUM, SymFunc, convert


class NotDivisibleError(ArithmeticError):
    pass


class NotEigenfunctionError(ArithmeticError):
    pass


class AsymmetricInputError(ValueError):
    pass


# -- exact division ------------------------------------------------------------

def _divide_linear(p: MPoly, a: int, b: int) -> MPoly:
    """p / (v_a - v_b) for 0-based variable positions a != b."""
    buckets: dict[int, dict[tuple, ThetaFunction]] = {}
    for e, c in p.terms.items():
        buckets.setdefault(e[a], {})[e] = c
    quotient: dict[tuple, ThetaFunction] = {}
    top = max(buckets, default=0)
    for deg in range(top, 0, -1):
        level = buckets.get(deg)
        if not level:
            continue
        lower = buckets.setdefault(deg - 1, {})
        for e, c in level.items():
            if not c:
                continue
            f = list(e)
            f[a] -= 1
            f = tuple(f)
            quotient[f] = quotient.get(f, 0) + c
            g = list(f)
            g[b] += 1
            g = tuple(g)
            s = lower.get(g)
            lower[g] = c if s is None else s + c
    rest = buckets.get(0, {})
    if any(rest.values()):
        raise NotDivisibleError(f"{p} is not divisible by the difference of variables {a + 1} and {b + 1}")
    return MPoly(p.n, p.m, quotient)


def divided_difference(p: MPoly, i: int, j: int) -> MPoly:
    """Exact quotient p / (x_i - x_j), 1-based indices."""
    if i == j or not (1 <= i <= p.nvars and 1 <= j <= p.nvars):
        raise ValueError(f"invalid variable pair ({i}, {j}) for {p.nvars} variables")
    return _divide_linear(p, i - 1, j - 1)


# -- Dunkl operators (undeformed, N variables) ------------------------------

def _check_plain(p: MPoly, N: int):
    if p.m != 0 or p.n != N:
        raise ValueError(f"expected a polynomial in {N} x-variables, got layout ({p.n},{p.m})")


def dunkl_apply(i: int, N: int, p: MPoly) -> MPoly:
    """D_i p = dp/dx_i + theta sum_{j != i} (p - s_ij p)/(x_i - x_j)."""
    _check_plain(p, N)
    a = i - 1
    out = p.diff(a)
    acc = MPoly.zero(N, 0)
    for b in range(N):
        if b == a:
            continue
        diff = p - p.swap(a, b)
        if not diff.is_zero():
            acc = acc + _divide_linear(diff, a, b)
    return out + acc.scale(THETA)


def _is_symmetric(p: MPoly) -> bool:
    return all(p.swap(k, k + 1) == p for k in range(p.nvars - 1))


def symmetric_integral_apply(f: SymFunc, N: int, p: MPoly) -> MPoly:
    """Res f(D_1, ..., D_N) applied to a symmetric polynomial p."""
    _check_plain(p, N)
    if not _is_symmetric(p):
        raise AsymmetricInputError("symmetric quantum integrals act on symmetric polynomials only")
    f = convert(f, POWERSUM)
    out = MPoly.zero(N, 0)
    for lam, c in f.terms.items():
        q = p
        for r in lam:
            total = MPoly.zero(N, 0)
            for i in range(1, N + 1):
                t = q
                for _ in range(r):
                    t = dunkl_apply(i, N, t)
                total = total + t
            q = total
        out = out + q.scale(c)
    return out


# -- deformed recursion ------------------------------------------------------

_MINUS_THETA = -THETA


def _parity(k: int, n: int) -> int:
    return 0 if k < n else 1


def _first_rational(q: MPoly, k: int) -> MPoly:
    d = q.diff(k)
    return d if k < q.n else d.scale(_MINUS_THETA)


def _first_trig(q: MPoly, k: int) -> MPoly:
    d = q.euler(k)
    return d if k < q.n else d.scale(_MINUS_THETA)


def _kernel_rational(diff: MPoly, k: int, l: int) -> MPoly:
    return _divide_linear(diff, k, l)


def _kernel_trig(diff: MPoly, k: int, l: int) -> MPoly:
    q = _divide_linear(diff, k, l)
    s = MPoly.var(diff.n, diff.m, k) + MPoly.var(diff.n, diff.m, l)
    return (s * q).scale(ThetaFunction(1) / 2)


def _partials(p: MPoly, r: int,
              first: Callable[[MPoly, int], MPoly],
              kernel: Callable[[MPoly, int, int], MPoly]) -> list[MPoly]:
    """All of d_1^{(r)} p, ..., d_{n+m}^{(r)} p, computed level by level."""
    if r < 1:
        raise ValueError("order r must be at least 1")
    N, n = p.nvars, p.n
    weight = [_MINUS_THETA if _parity(l, n) == 0 else ONE for l in range(N)]
    level = [first(p, k) for k in range(N)]
    for _ in range(2, r + 1):
        new = [first(level[k], k) for k in range(N)]
        for k in range(N):
            for l in range(k + 1, N):
                diff = level[k] - level[l]
                if diff.is_zero():
                    continue
                q = kernel(diff, k, l)
                new[k] = new[k] - q.scale(weight[l])
                new[l] = new[l] - q.scale(weight[k])
        level = new
    return level


def _integral(p: MPoly, r: int, first, kernel) -> MPoly:
    if r == 0:
        return p
    level = _partials(p, r, first, kernel)
    out = MPoly.zero(p.n, p.m)
    inv = -ONE / THETA
    for k, t in enumerate(level):
        out = out + (t if k < p.n else t.scale(inv))
    return out


def _poly(p) -> MPoly:
    return p.poly if isinstance(p, SuperElement) else p


def deformed_partial_apply(i: int, r: int, p: MPoly) -> MPoly:
    """d_i^{(r)} p for the deformed rational system (1-based i)."""
    p = _poly(p)
    if not 1 <= i <= p.nvars:
        raise ValueError(f"index {i} out of range for {p.nvars} variables")
    return _partials(p, r, _first_rational, _kernel_rational)[i - 1]


def deformed_integral_apply(r: int, p: MPoly) -> MPoly:
    """L^{(r)}_{n,m} p = sum_i (-theta)^{-p(i)} d_i^{(r)} p."""
    return _integral(_poly(p), r, _first_rational, _kernel_rational)


def deformed_laplacian_apply(p: MPoly) -> MPoly:
    """L_{n,m} p from its closed second-order form (no recursion)."""
    p = _poly(p)
    N, n = p.nvars, p.n
    mt = _MINUS_THETA
    out = MPoly.zero(p.n, p.m)
    firsts = []
    for k in range(N):
        d = p.diff(k)
        out = out + (d.diff(k) if k < n else d.diff(k).scale(mt))
        firsts.append(d if k < n else d.scale(mt))
    for k in range(N):
        for l in range(k + 1, N):
            diff = firsts[k] - firsts[l]
            if diff.is_zero():
                continue
            expo = 1 - _parity(k, n) - _parity(l, n)
            out = out - _divide_linear(diff, k, l).scale(2 * mt ** expo)
    return out


def quantum_integral_apply(f: SymFunc, p, n: int | None = None, m: int | None = None) -> MPoly:
    """Apply L_{phi(f)}: each power sum p_r in f acts as L^{(r)}_{n,m}."""
    p = _poly(p)
    if n is not None and (n, m) != (p.n, p.m):
        raise ValueError(f"polynomial layout ({p.n},{p.m}) does not match ({n},{m})")
    f = convert(f, POWERSUM)
    out = MPoly.zero(p.n, p.m)
    cache: dict[tuple[int, ...], MPoly] = {(): p}

    def apply_seq(parts: tuple[int, ...]) -> MPoly:
        hit = cache.get(parts)
        if hit is None:
            hit = deformed_integral_apply(parts[-1], apply_seq(parts[:-1]))
            cache[parts] = hit
        return hit

    for lam, c in f.terms.items():
        # apply smallest parts first so prefixes are shared across terms
        out = out + apply_seq(tuple(sorted(lam))).scale(c)
    return out


def trig_integral_apply(r: int, p) -> MPoly:
    """The trigonometric integral built from x_i d/dx_i and (x_i + x_j)/(x_i - x_j)."""
    return _integral(_poly(p), r, _first_trig, _kernel_trig)


def trig_eigenvalue(lam: Sequence[int], r: int, n: int, m: int) -> ThetaFunction:
    """Eigenvalue of the r-th trigonometric integral on SP_lam."""
    sp = super_jack(lam, n, m).poly
    if sp.is_zero():
        raise ValueError(f"SP_{tuple(lam)} vanishes for (n, m) = ({n}, {m})")
    image = trig_integral_apply(r, sp)
    lead, c = sp.leading_term()
    value = image.coeff(lead) / c
    if image != sp.scale(value):
        raise NotEigenfunctionError(f"SP_{tuple(lam)} is not an eigenfunction of the order-{r} integral")
    return value


# -- nilpotent exponential and super-Hermite polynomials -----------------------

def laplacian_powers(p: MPoly) -> list[MPoly]:
    """[p, L p, L^2 p, ...] until the image vanishes."""
    p = _poly(p)
    out = [p]
    while True:
        q = deformed_integral_apply(2, out[-1])
        if q.is_zero():
            return out
        out.append(q)


def exp_half_L(p, sign: int = -1) -> MPoly:
    """exp(sign * L_{n,m} / 2) p as a finite sum; sign is +1 or -1."""
    if sign not in (1, -1, "+", "-"):
        raise ValueError("sign must be +1 or -1")
    s = 1 if sign in (1, "+") else -1
    powers = laplacian_powers(p)
    out = MPoly.zero(powers[0].n, powers[0].m)
    for k, q in enumerate(powers):
        out = out + q.scale(ThetaFunction(s ** k) / (2 ** k * math.factorial(k)))
    return out


def super_hermite(lam: Sequence[int], n: int, m: int) -> MPoly:
    """SH_lam = exp(-L_{n,m}/2) SP_lam."""
    return exp_half_L(super_jack(Partition(lam), n, m).poly, -1)


def harmonic_integral_apply(r: int, p, mode: str = "conjugation") -> MPoly:
    """The r-th rational harmonic integral.

    ``conjugation`` evaluates exp(-L/2) T^{(r)} exp(L/2) p with T^{(r)} the
    trigonometric integral.  ``commutator`` sums the nested commutators
    [..[T^{(r)}, L], .., L] / (2^k k!) for k = 0..r directly.
    """
    p = _poly(p)
    if mode == "conjugation":
        return exp_half_L(trig_integral_apply(r, exp_half_L(p, 1)), -1)
    if mode != "commutator":
        raise ValueError(f"unknown mode {mode!r}")
    powers = laplacian_powers(p)
    zero = MPoly.zero(p.n, p.m)

    def L_pow(q: MPoly, j: int) -> MPoly:
        for _ in range(j):
            if q.is_zero():
                break
            q = deformed_integral_apply(2, q)
        return q

    trig_of = [trig_integral_apply(r, q) for q in powers]
    out = zero
    for k in range(r + 1):
        term = zero
        for j in range(k + 1):
            if k - j >= len(powers):
                continue
            t = L_pow(trig_of[k - j], j)
            term = term + t.scale((-1) ** j * math.comb(k, j))
        out = out + term.scale(ThetaFunction(1) / (2 ** k * math.factorial(k)))
    return out
