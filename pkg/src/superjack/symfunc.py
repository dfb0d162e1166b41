"""The algebra of symmetric functions over Q(theta).

Elements are sparse maps from partitions to coefficients in either the
monomial or the power-sum basis.  Jack symmetric functions are built by
Gram-Schmidt against the theta-deformed power-sum pairing.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Protocol, Sequence

from .coeffs import ONE, THETA, ZERO, ThetaFunction, as_theta
from .partitions import (
    Partition,
    conjugate,
    dominated_by,
    enumerate_partitions,
    hook_product,
    sort_key,
    z_lambda,
)

MONOMIAL = "monomial"
POWERSUM = "powersum"
_BASES = (MONOMIAL, POWERSUM)


class SymFunc:
    """A finitely supported symmetric function in a fixed basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Sequence[int], object] | None = None):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean: dict[Partition, ThetaFunction] = {}
        for lam, c in (terms or {}).items():
            c = as_theta(c)
            if c:
                clean[Partition(lam)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, lam: Sequence[int], coeff=1) -> "SymFunc":
        return cls(MONOMIAL, {Partition(lam): coeff})

    @classmethod
    def powersum(cls, lam: Sequence[int], coeff=1) -> "SymFunc":
        return cls(POWERSUM, {Partition(lam): coeff})

    @classmethod
    def zero(cls, basis: str = POWERSUM) -> "SymFunc":
        return cls(basis)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {lam.weight for lam in self.terms}

    def homogeneous_component(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if lam.weight == d})

    def to(self, basis: str) -> "SymFunc":
        return convert(self, basis)

    def coeff(self, lam: Sequence[int]) -> ThetaFunction:
        return self.terms.get(Partition(lam), ZERO)

    def map_coeffs(self, f) -> "SymFunc":
        return SymFunc(self.basis, {lam: f(c) for lam, c in self.terms.items()})

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = convert(other, self.basis)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymFunc(self.basis, out)

    def __neg__(self) -> "SymFunc":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other) -> "SymFunc":
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = as_theta(other)
        return self.map_coeffs(lambda x: x * c)

    def __rmul__(self, other) -> "SymFunc":
        c = as_theta(other)
        return self.map_coeffs(lambda x: c * x)

    def __truediv__(self, other) -> "SymFunc":
        c = as_theta(other)
        return self.map_coeffs(lambda x: x / c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return convert(other, self.basis).terms == self.terms

    __hash__ = None

    def sorted_terms(self) -> list[tuple[Partition, ThetaFunction]]:
        return sorted(self.terms.items(), key=lambda kv: sort_key(kv[0]))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": str(c)} for lam, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        return cls(data["basis"], {
            Partition(t["partition"]): ThetaFunction.parse(t["coeff"]) for t in data["terms"]
        })

    def __repr__(self):
        body = " + ".join(f"({c})*{'m' if self.basis == MONOMIAL else 'p'}[{lam}]"
                          for lam, c in self.sorted_terms())
        return f"SymFunc<{self.basis}>({body or '0'})"


# -- basis change ----------------------------------------------------------

def _times_power(mu: Partition, r: int) -> dict[Partition, int]:
    """m_mu * p_r in the monomial basis (integer coefficients)."""
    out: dict[Partition, int] = {}
    for v in set(mu) | {0}:
        parts = list(mu)
        if v:
            parts.remove(v)
        parts.append(v + r)
        nu = Partition(sorted(parts, reverse=True))
        out[nu] = nu.count(v + r)
    return out


@lru_cache(maxsize=None)
def _powersum_in_monomials(lam: Partition) -> dict[Partition, int]:
    if not lam:
        return {Partition(): 1}
    head = _powersum_in_monomials(Partition(lam[1:]))
    out: dict[Partition, int] = {}
    for mu, c in head.items():
        for nu, k in _times_power(mu, lam[0]).items():
            out[nu] = out.get(nu, 0) + c * k
    return out


@lru_cache(maxsize=None)
def _monomial_in_powersums(lam: Partition) -> dict[Partition, Fraction]:
    # p_lam = sum_{mu >= lam} R[lam, mu] m_mu, triangular with R[lam, lam] = prod m_i!
    row = _powersum_in_monomials(lam)
    out: dict[Partition, Fraction] = {lam: Fraction(1)}
    for mu, c in row.items():
        if mu == lam:
            continue
        for nu, d in _monomial_in_powersums(mu).items():
            out[nu] = out.get(nu, Fraction(0)) - c * d
    diag = row[lam]
    return {nu: c / diag for nu, c in out.items() if c}


def convert(f: SymFunc, basis: str) -> SymFunc:
    """Re-express ``f`` in ``basis``; monomial/power-sum transitions are cached per partition."""
    if basis not in _BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if f.basis == basis:
        return f
    table = _powersum_in_monomials if basis == MONOMIAL else _monomial_in_powersums
    out: dict[Partition, ThetaFunction] = {}
    for lam, c in f.terms.items():
        for mu, k in table(lam).items():
            out[mu] = out.get(mu, ZERO) + c * k
    return SymFunc(basis, out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product in the power-sum basis."""
    f, g = convert(f, POWERSUM), convert(g, POWERSUM)
    out: dict[Partition, ThetaFunction] = {}
    for lam, a in f.terms.items():
        for mu, b in g.terms.items():
            nu = Partition(sorted(lam + mu, reverse=True))
            out[nu] = out.get(nu, ZERO) + a * b
    return SymFunc(POWERSUM, out)


def power(f: SymFunc, k: int) -> SymFunc:
    out = SymFunc.powersum(())
    for _ in range(k):
        out = multiply(out, f)
    return out


@lru_cache(maxsize=None)
def _pairing_weight(lam: Partition) -> ThetaFunction:
    return as_theta(z_lambda(lam)) / THETA ** len(lam)


def scalar_product(f: SymFunc, g: SymFunc) -> ThetaFunction:
    """<p_lam, p_mu> = theta^{-l(lam)} z_lam delta_{lam,mu}, extended bilinearly."""
    f, g = convert(f, POWERSUM), convert(g, POWERSUM)
    if len(g.terms) < len(f.terms):
        f, g = g, f
    out = ZERO
    for lam, a in f.terms.items():
        b = g.terms.get(lam)
        if b is not None:
            out += a * b * _pairing_weight(lam)
    return out


# -- Jack symmetric functions --------------------------------------------------

class JackStore(Protocol):
    """Optional persistent backing for :func:`jack` (e.g. an on-disk cache)."""

    def load_jack(self, lam: Partition) -> SymFunc | None: ...

    def store_jack(self, lam: Partition, value: SymFunc) -> None: ...


_jack_memo: dict[Partition, SymFunc] = {}
_jack_lock = threading.Lock()
_jack_store: JackStore | None = None


def set_jack_store(store: JackStore | None) -> None:
    global _jack_store
    _jack_store = store


def clear_jack_cache() -> None:
    with _jack_lock:
        _jack_memo.clear()


def jack(lam: Sequence[int]) -> SymFunc:
    """Monic Jack symmetric function P_lam in the power-sum basis.

    Built as m_lam minus its projections onto P_mu for every mu strictly
    below lam in dominance order.
    """
    lam = Partition(lam)
    hit = _jack_memo.get(lam)
    if hit is not None:
        return hit
    value = None
    if _jack_store is not None:
        value = _jack_store.load_jack(lam)
    if value is None:
        value = _gram_schmidt(lam)
        if _jack_store is not None:
            _jack_store.store_jack(lam, value)
    with _jack_lock:
        return _jack_memo.setdefault(lam, value)


def _gram_schmidt(lam: Partition) -> SymFunc:
    m_lam = SymFunc.monomial(lam).to(POWERSUM)
    out = m_lam
    for mu in enumerate_partitions(lam.weight):
        if not dominated_by(mu, lam):
            continue
        p_mu = jack(mu)
        coeff = scalar_product(m_lam, p_mu) / scalar_product(p_mu, p_mu)
        out = out - p_mu * coeff
    return out


def kaneko_C(lam: Sequence[int]) -> SymFunc:
    """Kaneko normalization |lam|! / prod_s (a + 1 + theta l) * P_lam."""
    lam = Partition(lam)
    return jack(lam) * (as_theta(math.factorial(lam.weight)) / hook_product(lam))


# -- specialization p_r -> X ---------------------------------------------------

XPoly = list  # dense coefficients in X (ascending), each a ThetaFunction


def _xpoly_trim(p: XPoly) -> XPoly:
    while p and not p[-1]:
        p.pop()
    return p


def xpoly_mul(a: XPoly, b: XPoly) -> XPoly:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _xpoly_trim(out)


def xpoly_eval(p: XPoly, x) -> ThetaFunction:
    out = ZERO
    x = as_theta(x)
    for c in reversed(p):
        out = out * x + c
    return out


def eps_X(f: SymFunc, X=None):
    """The homomorphism p_r -> X.

    With ``X=None`` returns the result as a polynomial in a free symbol X,
    i.e. a list of Q(theta) coefficients in ascending powers.  Otherwise X
    is substituted and a ThetaFunction is returned.
    """
    f = convert(f, POWERSUM)
    if X is not None:
        X = as_theta(X)
        out = ZERO
        for lam, c in f.terms.items():
            out += c * X ** len(lam)
        return out
    top = max((len(lam) for lam in f.terms), default=-1)
    coeffs = [ZERO] * (top + 1)
    for lam, c in f.terms.items():
        coeffs[len(lam)] += c
    return _xpoly_trim(coeffs)


def spec_formula(lam: Sequence[int], X=None):
    """prod_s (theta X + a'(s) - theta l'(s)) / (a(s) + theta l(s) + theta).

    Same return conventions as :func:`eps_X`.
    """
    lam = Partition(lam)
    conj = conjugate(lam)
    num: XPoly = [ONE]
    den = ONE
    for i, j in lam.boxes():
        a, l, ca, cl = lam[i - 1] - j, conj[j - 1] - i, j - 1, i - 1
        num = xpoly_mul(num, [as_theta(ca) - THETA * cl, THETA])
        den *= a + THETA * l + THETA
    num = [c / den for c in num]
    if X is None:
        return num
    return xpoly_eval(num, X)


def from_terms(basis: str, items: Iterable[tuple[Sequence[int], object]]) -> SymFunc:
    out: dict[Partition, ThetaFunction] = {}
    for lam, c in items:
        lam = Partition(lam)
        out[lam] = out.get(lam, ZERO) + as_theta(c)
    return SymFunc(basis, out)
