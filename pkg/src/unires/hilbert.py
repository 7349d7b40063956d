"""Truncated bigraded series, Hilbert series of A/I and C, Euler characteristics.

Bidegrees follow the grading where the entries of phi have degree (1, 0),
the entries of psi degree (0, 1) and the multiplier a degree (-e, g).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .complexes import f_terms_closed, g_complex
from .partitions import partitions_of_size_at_most, size, weyl_dim
from .terms import GradedComplex


@dataclass(frozen=True)
class Truncation:
    d1_min: int
    d1_max: int
    d2_max: int
    total_max: int | None = None

    def __contains__(self, deg) -> bool:
        d1, d2 = deg
        if not (0 <= d2 <= self.d2_max and self.d1_min <= d1 <= self.d1_max):
            return False
        return self.total_max is None or d1 + d2 <= self.total_max

    def degrees(self) -> list[tuple[int, int]]:
        return [
            (d1, d2)
            for d2 in range(self.d2_max + 1)
            for d1 in range(self.d1_min, self.d1_max + 1)
            if (d1, d2) in self
        ]

    @classmethod
    def total(cls, D: int) -> "Truncation":
        """Polynomial side: d1, d2 >= 0 and d1 + d2 <= D."""
        return cls(0, D, D, D)

    @classmethod
    def laurent(cls, e: int, g: int, D2: int, D1: int | None = None) -> "Truncation":
        """Series over B or C: d2 <= D2, and d1 no lower than powers of a can reach."""
        return cls(-e * (-(-D2 // g)), D2 if D1 is None else D1, D2)


@dataclass
class BiSeries:
    """Exact integer coefficients on a truncation window; zeros are not stored."""

    trunc: Truncation
    coeffs: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v and k in self.trunc}

    @classmethod
    def monomials(cls, trunc: Truncation, items: Iterable[tuple[tuple[int, int], int]]) -> "BiSeries":
        acc: dict[tuple[int, int], int] = {}
        for deg, c in items:
            if deg in trunc:
                acc[deg] = acc.get(deg, 0) + c
        return cls(trunc, acc)

    def __getitem__(self, deg) -> int:
        return self.coeffs.get(tuple(deg), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiSeries) and self.trunc == other.trunc and self.coeffs == other.coeffs

    def _same(self, other: "BiSeries") -> None:
        if self.trunc != other.trunc:
            raise ValueError("series have different truncations")

    def __add__(self, other: "BiSeries") -> "BiSeries":
        self._same(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiSeries(self.trunc, out)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.trunc, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        self._same(other)
        return self.mul(other, self.trunc)

    def mul(self, other: "BiSeries", trunc: Truncation) -> "BiSeries":
        """Product truncated to ``trunc``.

        Exact as long as both factors hold every coefficient that can
        contribute inside ``trunc``; for windows with d1, d2 >= 0 and a
        total-degree cap this is automatic.
        """
        out: dict[tuple[int, int], int] = {}
        for (a1, a2), x in self.coeffs.items():
            for (b1, b2), y in other.coeffs.items():
                deg = (a1 + b1, a2 + b2)
                if deg in trunc:
                    out[deg] = out.get(deg, 0) + x * y
        return BiSeries(trunc, out)

    def restrict(self, trunc: Truncation) -> "BiSeries":
        return BiSeries(trunc, dict(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> dict[str, str]:
        return {f"[{d1},{d2}]": str(self.coeffs[(d1, d2)]) for d1, d2 in sorted(self.coeffs, key=lambda k: (k[1], k[0]))}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def grid(self) -> str:
        """Aligned table: one row per d2, one column per d1."""
        t = self.trunc
        cols = range(t.d1_min, t.d1_max + 1)
        cells = {
            (d1, d2): (str(self[(d1, d2)]) if (d1, d2) in t else ".") for d2 in range(t.d2_max + 1) for d1 in cols
        }
        width = max([len(c) for c in cells.values()] + [len(str(c)) for c in cols] + [2])
        lines = ["d2\\d1".rjust(6) + " " + " ".join(str(c).rjust(width) for c in cols)]
        for d2 in range(t.d2_max + 1):
            lines.append(str(d2).rjust(6) + " " + " ".join(cells[(d1, d2)].rjust(width) for d1 in cols))
        return "\n".join(lines)


def _check_dims(e: int, g: int) -> None:
    if e < 1 or g < 2:
        raise ValueError(f"need e >= 1 and g >= 2, got e={e}, g={g}")


def _prop1_summand(lam, mu, e: int, g: int) -> int:
    f = e + g
    f_weight = tuple(mu) + (0,) + tuple(-x for x in reversed(lam))
    return weyl_dim(lam, e) * weyl_dim(f_weight, f) * weyl_dim(mu, g)


def _ai_coeffs(e: int, g: int, trunc: Truncation) -> BiSeries:
    # Multiplicity-free decomposition of A/I: lam with <= e parts, mu with <= g-1 parts.
    items = []
    mus = list(partitions_of_size_at_most(trunc.d2_max, g - 1))
    for lam in partitions_of_size_at_most(max(trunc.d1_max, 0), e):
        for mu in mus:
            deg = (size(lam), size(mu))
            if deg in trunc:
                items.append((deg, _prop1_summand(lam, mu, e, g)))
    return BiSeries.monomials(trunc, items)


def hilbert_AI(e: int, g: int, D: int) -> BiSeries:
    """Bigraded Hilbert series of A/I, truncated to total degree <= D."""
    _check_dims(e, g)
    return _ai_coeffs(e, g, Truncation.total(D))


def hilbert_C(e: int, g: int, D2: int, D1: int | None = None) -> BiSeries:
    """Bigraded Hilbert series of the universal ring C, summed directly over (lam, mu, t).

    The t-th power of the multiplier shifts a summand by ``t * (-e, g)``.
    """
    _check_dims(e, g)
    trunc = Truncation.laurent(e, g, D2, D1)
    items = []
    for t in range(D2 // g + 1):
        for lam in partitions_of_size_at_most(trunc.d1_max + e * t, e):
            for mu in partitions_of_size_at_most(D2 - g * t, g - 1):
                deg = (size(lam) - e * t, size(mu) + g * t)
                if deg in trunc:
                    items.append((deg, _prop1_summand(lam, mu, e, g)))
    return BiSeries.monomials(trunc, items)


def a_series(e: int, g: int, trunc: Truncation) -> BiSeries:
    """Sum over t >= 0 of a^t, i.e. the Hilbert series of K[a]."""
    return BiSeries.monomials(trunc, (((-e * t, g * t), 1) for t in range(trunc.d2_max // g + 1)))


def _lift(e: int, g: int, trunc: Truncation) -> Truncation:
    # polynomial window holding every coefficient that reaches `trunc` after multiplying by powers of a
    return Truncation(0, max(trunc.d1_max, 0) + e * (trunc.d2_max // g), trunc.d2_max)


def hilbert_C_via_freeness(e: int, g: int, D2: int, D1: int | None = None) -> BiSeries:
    """``H_{A/I}`` times the a-series: the Hilbert series of C if C is free over K[a]."""
    _check_dims(e, g)
    trunc = Truncation.laurent(e, g, D2, D1)
    big = _lift(e, g, trunc)
    return _ai_coeffs(e, g, big).mul(a_series(e, g, Truncation(trunc.d1_min, 0, trunc.d2_max)), trunc)


def hilbert_A(e: int, g: int, trunc: Truncation) -> BiSeries:
    """Hilbert series of A = K[phi, psi] with ef variables of degree (1,0) and fg of degree (0,1)."""
    f = e + g
    nx, ny = e * f, f * g
    items = [
        ((d1, d2), comb(d1 + nx - 1, nx - 1) * comb(d2 + ny - 1, ny - 1))
        for d1, d2 in trunc.degrees()
        if d1 >= 0
    ]
    return BiSeries.monomials(trunc, items)


def _term_numerator(c: GradedComplex, trunc: Truncation) -> BiSeries:
    return BiSeries.monomials(
        trunc, (((-t.twist[0], -t.twist[1]), (-1) ** t.hom_degree * t.rank) for t in c)
    )


def euler_char(c: GradedComplex, D: int) -> BiSeries:
    """Alternating sum of the Hilbert series of the terms of ``c``.

    Over A (or Abar, treated with the same variables) the window is
    total degree <= D; over B it is the Laurent window with d2 <= D.
    """
    e, g = c.e, c.g
    if c.base_ring == "B":
        trunc = Truncation.laurent(e, g, D)
        big = _lift(e, g, trunc)
        chi_a = _term_numerator(c, big).mul(hilbert_A(e, g, big), big)
        return chi_a.mul(a_series(e, g, Truncation(trunc.d1_min, 0, trunc.d2_max)), trunc)
    trunc = Truncation.total(D)
    return _term_numerator(c, trunc) * hilbert_A(e, g, trunc)


@dataclass
class EulerReport:
    e: int
    g: int
    D: int
    failures: list[tuple[str, tuple[int, int], int, int]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"euler e={self.e} g={self.g} D={self.D}: {self.checked} bidegrees, {'pass' if self.passed else 'FAIL'}"]
        for side, deg, chi, h in self.failures:
            out.append(f"  {side} {list(deg)}: chi={chi} hilbert={h}")
        return out


def check_euler(e: int, g: int, D: int) -> EulerReport:
    """Compare chi(F) with H_{A/I} and chi(G) with H_C in every bidegree of the window."""
    rep = EulerReport(e, g, D)
    pairs = [
        ("A", euler_char(f_terms_closed(e, g), D), hilbert_AI(e, g, D)),
        ("B", euler_char(g_complex(e, g), D), hilbert_C(e, g, D)),
    ]
    for side, chi, h in pairs:
        for deg in chi.trunc.degrees():
            rep.checked += 1
            if chi[deg] != h[deg]:
                rep.failures.append((side, deg, chi[deg], h[deg]))
    return rep
