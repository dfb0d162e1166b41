"""The bilinear form (p, q) = (L_p q)(0) on Lambda_{n,m} and its consequences.

Arguments of the form are power-sum representatives: ``f`` stands for the
element phi_{n,m}(f) of Lambda_{n,m}, and L_{phi(f)} is realized by letting
each p_r act as the r-th deformed rational integral.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .coeffs import ONE, THETA, ZERO, ThetaFunction, as_theta
from .deformed import phi, super_C, super_jack
from .mpoly import MPoly
from .operators import exp_half_L, quantum_integral_apply, super_hermite
from .partitions import Partition, b_lambda, enumerate_partitions, in_fat_hook, pochhammer_gen
from .symfunc import SymFunc, jack, kaneko_C


def bilinear_form(f: SymFunc, g: SymFunc, n: int, m: int) -> ThetaFunction:
    """(phi(f), phi(g))_{n,m}: apply L_{phi(f)} to phi(g) and take the constant term."""
    target = phi(g, n, m)
    return quantum_integral_apply(f, target.poly).constant_term()


def expected_norm(lam: Sequence[int], n: int, m: int) -> ThetaFunction:
    """(theta n - m)^{(theta)}_lam / b_lam, the closed form of (SP_lam, SP_lam)."""
    lam = Partition(lam)
    return pochhammer_gen(THETA * n - m, lam) / b_lambda(lam)


@dataclass
class GramReport:
    n: int
    m: int
    degree: int
    labels: list[Partition]
    matrix: list[list[ThetaFunction]]
    expected_diagonal: list[ThetaFunction]
    kind: str = "super-jack"
    note: str = ""

    @property
    def is_diagonal(self) -> bool:
        return all(not self.matrix[i][j]
                   for i in range(len(self.labels)) for j in range(len(self.labels)) if i != j)

    @property
    def is_symmetric(self) -> bool:
        k = len(self.labels)
        return all(self.matrix[i][j] == self.matrix[j][i] for i in range(k) for j in range(k))

    @property
    def diagonal_matches(self) -> bool:
        return all(self.matrix[i][i] == e for i, e in enumerate(self.expected_diagonal))

    @property
    def passed(self) -> bool:
        return self.is_diagonal and self.is_symmetric and self.diagonal_matches

    def to_json(self, render=str) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "degree": self.degree,
            "kind": self.kind,
            "labels": [list(lam) for lam in self.labels],
            "matrix": [[render(c) for c in row] for row in self.matrix],
            "expected_diagonal": [render(c) for c in self.expected_diagonal],
            "pass": self.passed,
        }
        if self.note:
            out["note"] = self.note
        return out


def gram_matrix(n: int, m: int, d: int) -> GramReport:
    """Gram matrix of the super-Jack polynomials of degree d under (.,.)_{n,m}."""
    labels = enumerate_partitions(d, (n, m))
    reps = [jack(lam) for lam in labels]
    k = len(labels)
    matrix = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            matrix[i][j] = bilinear_form(reps[i], reps[j], n, m)
    expected = [expected_norm(lam, n, m) for lam in labels]
    return GramReport(n, m, d, labels, matrix, expected)


def representative_independence_check(f: SymFunc, kernel_lam: Sequence[int], g: SymFunc,
                                      n: int, m: int) -> bool:
    """Adding P_kernel_lam (outside H_{n,m}) to f must not change (f, g)."""
    kernel_lam = Partition(kernel_lam)
    if in_fat_hook(kernel_lam, n, m):
        raise ValueError(f"{tuple(kernel_lam)} lies in H_{{{n},{m}}}, so P of it is not in the kernel")
    shifted = f + jack(kernel_lam)
    return bilinear_form(shifted, g, n, m) == bilinear_form(f, g, n, m)


@dataclass
class KernelComponent:
    """Degree-d part of the reproducing kernel, sum_lam w_lam SC_lam(x,y) SC_lam(z,w)."""

    n: int
    m: int
    d: int
    entries: list[tuple[Partition, ThetaFunction]] = field(default_factory=list)

    def pair(self, f: SymFunc) -> MPoly:
        """(phi(f)(x,y), SF_d(x,y; z,w)) in the x,y variables, as a polynomial in (z,w)."""
        out = MPoly.zero(self.n, self.m)
        for lam, w in self.entries:
            c = bilinear_form(f, kaneko_C(lam), self.n, self.m)
            if c:
                out = out + super_C(lam, self.n, self.m).poly.scale(w * c)
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "degree": self.d,
                "entries": [{"partition": list(lam), "weight": str(w)} for lam, w in self.entries]}


def sf_component(n: int, m: int, d: int) -> KernelComponent:
    """Weights 1/(|lam|! SC_lam(1^{n+m})) for lam in H_{n,m} of weight d."""
    entries = []
    ones = [1] * (n + m)
    for lam in enumerate_partitions(d, (n, m)):
        at_ones = super_C(lam, n, m).poly.evaluate_exact(ones)
        entries.append((lam, ONE / (as_theta(math.factorial(d)) * at_ones)))
    return KernelComponent(n, m, d, entries)


def reproducing_check(mu: Sequence[int], n: int, m: int) -> bool:
    """Pairing SC_mu with the degree-|mu| kernel component returns SC_mu(z, w)."""
    mu = Partition(mu)
    if not in_fat_hook(mu, n, m):
        raise ValueError(f"{tuple(mu)} is not in H_{{{n},{m}}}")
    comp = sf_component(n, m, mu.weight)
    return comp.pair(kaneko_C(mu)) == super_C(mu, n, m).poly


def hermite_generating_pairing(f: SymFunc, n: int, m: int, dmax: int) -> MPoly:
    """(G(x,y; z,w), phi(f)(z,w)) with G truncated at degree dmax in (z, w).

    G = sum_lam b_lam / (theta n - m)_lam * SH_lam(x,y) SP_lam(z,w); the
    pairing in (z, w) uses the bilinear form itself, not its closed form.
    """
    out = MPoly.zero(n, m)
    for d in range(dmax + 1):
        for lam in enumerate_partitions(d, (n, m)):
            c = bilinear_form(jack(lam), f, n, m)
            if c:
                w = b_lambda(lam) / pochhammer_gen(THETA * n - m, lam)
                out = out + super_hermite(lam, n, m).scale(w * c)
    return out


def hermite_generating_check(n: int, m: int, dmax: int,
                             extra: Sequence[SymFunc] = ()) -> bool:
    """exp(-L/2) p equals the generating-function pairing for p = SP_lam, |lam| <= dmax.

    ``extra`` adds arbitrary power-sum representatives of degree <= dmax.
    """
    cases = [jack(lam) for d in range(dmax + 1) for lam in enumerate_partitions(d, (n, m))]
    cases.extend(extra)
    for f in cases:
        lhs = exp_half_L(phi(f, n, m).poly, -1)
        if lhs != hermite_generating_pairing(f, n, m, dmax):
            return False
    return True


def hermite_gram(n: int, m: int, d: int) -> GramReport:
    """Gram matrix of super-Hermite polynomials, transported through the isometry.

    Entries are {SH_mu, SH_lam} = (exp(L/2) SH_mu, exp(L/2) SH_lam); each
    exp(L/2) SH_lam is checked to return SP_lam exactly before the form is
    evaluated on its representative P_lam.
    """
    labels = enumerate_partitions(d, (n, m))
    for lam in labels:
        back = exp_half_L(super_hermite(lam, n, m), 1)
        if back != super_jack(lam, n, m).poly:
            raise ArithmeticError(f"exp(L/2) does not invert exp(-L/2) on SH_{tuple(lam)}")
    base = gram_matrix(n, m, d)
    base.kind = "super-hermite"
    base.note = ("values of the integral form obtained through the isometry "
                 "exp(-L/2): (.,.) -> {.,.}, not by integration")
    return base
