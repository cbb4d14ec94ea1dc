"""Exact integer polynomials.

``Polynomial`` is sparse in the variables x_1, x_2, ...; ``QPoly`` is dense in
a single variable q.  Both are immutable and hashable, with Python ints as
coefficients, so all arithmetic is exact.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

Exponents = tuple[int, ...]


def _trim(exps: Sequence[int]) -> Exponents:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


class Polynomial:
    """Sparse polynomial in x_1, x_2, ... with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[Exponents, int] = defaultdict(int)
        for exps, coeff in (terms or {}).items():
            clean[_trim(exps)] += coeff
        self._terms = {e: c for e, c in clean.items() if c != 0}

    @classmethod
    def one(cls) -> Polynomial:
        return cls({(): 1})

    @classmethod
    def variable(cls, i: int) -> Polynomial:
        """x_i, 1-based."""
        if i < 1:
            raise ValueError("variables are x_1, x_2, ...")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial_of_rows(cls, rows: Iterable[int]) -> Polynomial:
        """Product of x_i over ``rows`` (with multiplicity)."""
        exps: list[int] = []
        for i in rows:
            if i > len(exps):
                exps.extend([0] * (i - len(exps)))
            exps[i - 1] += 1
        return cls({tuple(exps): 1})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial({(): other})
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: Polynomial) -> Polynomial:
        out = defaultdict(int, self._terms)
        for e, c in other._terms.items():
            out[e] += c
        return Polynomial(out)

    def __mul__(self, other: Polynomial) -> Polynomial:
        out: dict[Exponents, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                n = max(len(e1), len(e2))
                e = tuple(
                    (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0) for i in range(n)
                )
                out[e] += c1 * c2
        return Polynomial(out)

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for exps, coeff in self._terms.items():
            term = coeff
            for v, k in zip(values, exps):
                term *= v**k
            if len(exps) > len(values):
                raise ValueError("not enough values for the variables in use")
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in decreasing lex order of exponent vectors."""
        return sorted(self._terms.items(), reverse=True)

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exponents": list(e)} for e, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(exps) if k
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts)


def principal_specialization(f: Polynomial) -> QPoly:
    """Substitute x_i -> q^(i-1)."""
    out: dict[int, int] = defaultdict(int)
    for exps, coeff in f.terms.items():
        out[sum(i * k for i, k in enumerate(exps))] += coeff
    return QPoly.from_degrees(out)


class QPoly:
    """Dense univariate polynomial in q; ``coeffs[d]`` is the coefficient of q^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_degrees(cls, degrees: Mapping[int, int]) -> QPoly:
        if not degrees:
            return cls()
        if min(degrees) < 0:
            raise ValueError("negative q-degree")
        c = [0] * (max(degrees) + 1)
        for d, v in degrees.items():
            c[d] += v
        return cls(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls.from_degrees({degree: coeff})

    @classmethod
    def one(cls) -> QPoly:
        return cls((1,))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly((other,))
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: QPoly) -> QPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPoly(x + y for x, y in zip(a, b))

    def __mul__(self, other: QPoly) -> QPoly:
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPoly(out)

    def shift(self, k: int) -> QPoly:
        """Multiply by q^k."""
        return QPoly((0,) * k + self.coeffs)

    def __call__(self, q: int) -> int:
        return sum(c * q**d for d, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def qsum(polys: Iterable[QPoly]) -> QPoly:
    total = QPoly()
    for p in polys:
        total = total + p
    return total


def polysum(polys: Iterable[Polynomial]) -> Polynomial:
    out: dict[Exponents, int] = defaultdict(int)
    for p in polys:
        for e, c in p.terms.items():
            out[e] += c
    return Polynomial(out)
