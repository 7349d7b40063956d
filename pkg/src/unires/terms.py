"""Term-level data model for equivariant free complexes.

A :class:`FreeTerm` is one summand ``S_a E (x) wedge^N F (x) S_p G* (x) R(d1, d2)``
of a free complex over one of the polynomial rings ``A``, ``Abar`` or ``B``.
Terms are keyed by the generating pair ``(nu, k)`` they come from.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from math import comb
from typing import Iterable, Iterator

from .partitions import Weight, size, strip, weyl_dim

BASE_RINGS = ("A", "Abar", "B")


class StructuralViolation(Exception):
    """A computed object broke an invariant that the construction guarantees."""


@dataclass(frozen=True)
class FreeTerm:
    nu: Weight
    k: int
    e_weight: Weight
    n_ext: int
    g_weight: Weight
    twist: tuple[int, int]
    hom_degree: int
    rank: int

    @property
    def key(self) -> tuple[Weight, int]:
        return (self.nu, self.k)

    @property
    def labels(self) -> tuple[Weight, int, Weight]:
        return (strip(self.e_weight), self.n_ext, self.g_weight)

    def signature(self) -> tuple:
        """Everything except the generating key; used for multiset comparison."""
        return (self.hom_degree, strip(self.e_weight), self.n_ext, self.g_weight, self.twist, self.rank)

    def sort_key(self) -> tuple:
        return (self.hom_degree, size(self.nu), self.nu, self.k)

    def label_text(self, with_e: bool = True) -> str:
        parts = []
        if with_e:
            parts.append(",".join(map(str, self.e_weight)))
        parts.append(str(self.n_ext))
        parts.append(",".join(map(str, self.g_weight)))
        return "(" + ";".join(parts) + ")"

    def twist_text(self, ring: str = "A") -> str:
        ring = {"Abar": "Ā"}.get(ring, ring)
        if self.twist == (0, 0):
            return ring
        return f"{ring}({self.twist[0]},{self.twist[1]})"

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "k": self.k,
            "e_weight": list(self.e_weight),
            "n_ext": self.n_ext,
            "g_weight": list(self.g_weight),
            "twist": list(self.twist),
            "hom_degree": self.hom_degree,
            "rank": str(self.rank),
        }

    @classmethod
    def from_json(cls, d: dict) -> "FreeTerm":
        return cls(
            nu=tuple(d["nu"]),
            k=int(d["k"]),
            e_weight=tuple(d["e_weight"]),
            n_ext=int(d["n_ext"]),
            g_weight=tuple(d["g_weight"]),
            twist=(int(d["twist"][0]), int(d["twist"][1])),
            hom_degree=int(d["hom_degree"]),
            rank=int(d["rank"]),
        )


def make_term(nu, k, e_weight, n_ext, g_weight, twist, hom_degree, e: int, f: int, g: int) -> FreeTerm:
    """Build a term, computing its rank from the three Schur-module dimensions."""
    e_weight = tuple(e_weight)
    g_weight = tuple(g_weight)
    if not 0 <= n_ext <= f:
        raise StructuralViolation(f"exterior power {n_ext} outside [0, {f}]")
    rank = weyl_dim(e_weight, e) * comb(f, n_ext) * weyl_dim(g_weight, g)
    return FreeTerm(tuple(nu), k, e_weight, n_ext, g_weight, tuple(twist), hom_degree, rank)


@dataclass
class GradedComplex:
    e: int
    g: int
    base_ring: str = "A"
    terms: dict[int, list[FreeTerm]] = field(default_factory=dict)

    def __post_init__(self):
        if self.base_ring not in BASE_RINGS:
            raise ValueError(f"unknown base ring {self.base_ring!r}")

    @property
    def f(self) -> int:
        return self.e + self.g

    def add(self, term: FreeTerm) -> None:
        self.terms.setdefault(term.hom_degree, []).append(term)

    @classmethod
    def from_terms(cls, e: int, g: int, terms: Iterable[FreeTerm], base_ring: str = "A") -> "GradedComplex":
        c = cls(e, g, base_ring)
        for t in sorted(terms, key=FreeTerm.sort_key):
            c.add(t)
        return c

    def __iter__(self) -> Iterator[FreeTerm]:
        for d in sorted(self.terms):
            yield from sorted(self.terms[d], key=FreeTerm.sort_key)

    def __len__(self) -> int:
        return sum(len(v) for v in self.terms.values())

    def degrees(self) -> list[int]:
        return sorted(d for d, ts in self.terms.items() if ts)

    def length(self) -> int:
        ds = self.degrees()
        return ds[-1] if ds else -1

    def counts(self) -> list[int]:
        """Number of terms in each degree 0..length."""
        return [len(self.terms.get(d, [])) for d in range(self.length() + 1)]

    def total_ranks(self) -> dict[int, int]:
        return {d: sum(t.rank for t in self.terms[d]) for d in self.degrees()}

    def by_key(self) -> dict[tuple[Weight, int], FreeTerm]:
        return {t.key: t for t in self}

    def signature(self) -> Counter:
        return Counter(t.signature() for t in self)

    def same_terms(self, other: "GradedComplex") -> bool:
        return (self.e, self.g) == (other.e, other.g) and self.signature() == other.signature()

    def with_ring(self, base_ring: str) -> "GradedComplex":
        return GradedComplex.from_terms(self.e, self.g, list(self), base_ring)

    def filter(self, pred) -> "GradedComplex":
        return GradedComplex.from_terms(self.e, self.g, [t for t in self if pred(t)], self.base_ring)

    def shifted(self, d: int) -> "GradedComplex":
        return GradedComplex.from_terms(
            self.e, self.g, [replace(t, hom_degree=t.hom_degree + d) for t in self], self.base_ring
        )

    # rendering

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "g": self.g,
            "f": self.f,
            "base_ring": self.base_ring,
            "terms": [t.to_json() for t in self],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, d: dict) -> "GradedComplex":
        return cls.from_terms(d["e"], d["g"], [FreeTerm.from_json(t) for t in d["terms"]], d["base_ring"])

    def text_lines(self) -> list[str]:
        """One tab-delimited line per term: degree, labels with twist, rank."""
        with_e = self.base_ring != "Abar"
        return [
            f"{t.hom_degree}\t{t.label_text(with_e)}⊗{t.twist_text(self.base_ring)}\t{t.rank}" for t in self
        ]
