"""Sparse polynomials in x_1..x_n, y_1..y_m with coefficients in Q(theta).

Variables share one exponent vector, x-block first: position n + j holds
y_j.  Methods taking a variable index use 0-based positions in that vector.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .coeffs import ZERO, ThetaFunction, as_theta

Exps = tuple[int, ...]


class MPoly:
    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[Sequence[int], object] | None = None):
        self.n, self.m = n, m
        clean: dict[Exps, ThetaFunction] = {}
        size = n + m
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != size:
                raise ValueError(f"exponent vector {e} has length {len(e)}, expected {size}")
            c = as_theta(c)
            if c:
                clean[e] = clean.get(e, ZERO) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, n: int, m: int, terms: dict[Exps, ThetaFunction]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.n, obj.m, obj.terms = n, m, terms
        return obj

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int, m: int) -> "MPoly":
        return cls._raw(n, m, {})

    @classmethod
    def constant(cls, n: int, m: int, c) -> "MPoly":
        c = as_theta(c)
        return cls._raw(n, m, {(0,) * (n + m): c} if c else {})

    @classmethod
    def var(cls, n: int, m: int, k: int) -> "MPoly":
        e = [0] * (n + m)
        e[k] = 1
        return cls._raw(n, m, {tuple(e): as_theta(1)})

    @classmethod
    def x(cls, n: int, m: int, i: int) -> "MPoly":
        """x_i, 1-based."""
        return cls.var(n, m, i - 1)

    @classmethod
    def y(cls, n: int, m: int, j: int) -> "MPoly":
        """y_j, 1-based."""
        return cls.var(n, m, n + j - 1)

    # -- structure ---------------------------------------------------------
    @property
    def nvars(self) -> int:
        return self.n + self.m

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_term(self) -> ThetaFunction:
        return self.terms.get((0,) * self.nvars, ZERO)

    def coeff(self, exps: Sequence[int]) -> ThetaFunction:
        return self.terms.get(tuple(exps), ZERO)

    def homogeneous_component(self, d: int) -> "MPoly":
        return MPoly._raw(self.n, self.m, {e: c for e, c in self.terms.items() if sum(e) == d})

    def sorted_terms(self) -> list[tuple[Exps, ThetaFunction]]:
        """Terms by descending total degree, then descending lexicographic exponents."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-a for a in kv[0])))

    def leading_term(self) -> tuple[Exps, ThetaFunction]:
        return self.sorted_terms()[0]

    def _check(self, other: "MPoly"):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError(f"variable layouts differ: ({self.n},{self.m}) vs ({other.n},{other.m})")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.n, self.m, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(self.n, self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.n, self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.n, self.m, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = as_theta(c)
        if not c:
            return MPoly.zero(self.n, self.m)
        return MPoly._raw(self.n, self.m, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Exps, ThetaFunction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return MPoly._raw(self.n, self.m, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "MPoly":
        out = MPoly.constant(self.n, self.m, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms
        if isinstance(other, (int, ThetaFunction)):
            return self == MPoly.constant(self.n, self.m, other)
        return NotImplemented

    __hash__ = None

    # -- calculus and substitutions ---------------------------------------
    def diff(self, k: int) -> "MPoly":
        """Partial derivative in the variable at 0-based position ``k``."""
        out = {}
        for e, c in self.terms.items():
            a = e[k]
            if a:
                f = list(e)
                f[k] = a - 1
                out[tuple(f)] = c * a
        return MPoly._raw(self.n, self.m, out)

    def euler(self, k: int) -> "MPoly":
        """x_k d/dx_k, 0-based."""
        return MPoly._raw(self.n, self.m, {e: c * e[k] for e, c in self.terms.items() if e[k]})

    def swap(self, i: int, j: int) -> "MPoly":
        """Exchange the variables at 0-based positions i and j."""
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = c
        return MPoly._raw(self.n, self.m, out)

    def identify(self, src: int, dst: int) -> "MPoly":
        """Substitute variable ``src`` := variable ``dst`` (0-based)."""
        out: dict[Exps, ThetaFunction] = {}
        for e, c in self.terms.items():
            f = list(e)
            f[dst] += f[src]
            f[src] = 0
            f = tuple(f)
            out[f] = out.get(f, ZERO) + c
        return MPoly._raw(self.n, self.m, {e: c for e, c in out.items() if c})

    def map_coeffs(self, f) -> "MPoly":
        return MPoly(self.n, self.m, {e: f(c) for e, c in self.terms.items()})

    # -- evaluation --------------------------------------------------------
    def evaluate_exact(self, point: Sequence) -> ThetaFunction:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        vals = [as_theta(v) for v in point]
        out = ZERO
        for e, c in self.terms.items():
            t = c
            for v, a in zip(vals, e):
                if a:
                    t = t * v ** a
            out += t
        return out

    def evaluate_numeric(self, point: Sequence[complex], theta_value, guard=None) -> complex:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        out = 0j
        for e, c in self.terms.items():
            t = complex(float(c.specialize(theta_value, guard)))
            for v, a in zip(point, e):
                if a:
                    t *= v ** a
            out += t
        return out

    # -- text --------------------------------------------------------------
    def var_names(self) -> list[str]:
        xs = ["x"] if self.n == 1 else [f"x{i}" for i in range(1, self.n + 1)]
        ys = ["y"] if self.m == 1 else [f"y{j}" for j in range(1, self.m + 1)]
        return xs + ys

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.var_names()
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if a == 1 else f"{v}**{a}" for v, a in zip(names, e) if a)
            if not mono:
                parts.append(f"({c})")
            else:
                parts.append(mono if c == 1 else f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MPoly(n={self.n}, m={self.m}, {self})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "terms": [{"exps": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MPoly":
        return cls(data["n"], data["m"], {
            tuple(t["exps"]): ThetaFunction.parse(t["coeff"]) for t in data["terms"]
        })


def from_items(n: int, m: int, items: Iterable[tuple[Sequence[int], object]]) -> MPoly:
    out: dict = {}
    for e, c in items:
        e = tuple(e)
        out[e] = out.get(e, ZERO) + as_theta(c)
    return MPoly(n, m, out)
