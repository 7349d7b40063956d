"""Bott's algorithm on a Grassmannian, and the cohomological term oracle.

The oracle computes the terms of the resolution directly from the
cohomology of the Cauchy summands of the exterior algebra on
``xi = E (x) Q* + R (x) G*`` over ``Grass(e+1, F)``, without using the
closed-form parametrisation by pairs ``(nu, k)``.  The closed form lives in
:mod:`unires.complexes`; the two are compared in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .partitions import (
    Weight,
    conjugate,
    enumerate_in_box,
    is_dominant,
    is_exterior_weight,
    nu_prime,
    pad,
    size,
    weyl_dim,
)
from .terms import GradedComplex, StructuralViolation, make_term


@dataclass(frozen=True)
class Cohomology:
    """The single nonzero cohomology group ``H^degree = S_weight``."""

    degree: int
    weight: Weight


# None stands for the vanishing outcome.
BottOutcome = Optional[Cohomology]


def bott(q_part: Sequence[int], r_part: Sequence[int], n: int, r: int) -> BottOutcome:
    """Cohomology of ``S_q Q (x) S_r R`` on the Grassmannian of r-planes in K^n.

    Adds ``rho = (n, ..., 1)`` to the concatenated weight.  A repeated entry
    means all cohomology vanishes (returns None).  Otherwise the sorting
    permutation's inversion count is the cohomological degree and the
    sorted sequence minus rho is the resulting GL_n weight.
    """
    q_part, r_part = tuple(q_part), tuple(r_part)
    if len(q_part) != n - r or len(r_part) != r:
        raise ValueError(f"weight lengths {len(q_part)}, {len(r_part)} do not match n={n}, r={r}")
    if not (is_dominant(q_part) and is_dominant(r_part)):
        raise ValueError("each part of the weight must be non-increasing")
    shifted = [w + n - i for i, w in enumerate(q_part + r_part)]
    if len(set(shifted)) < n:
        return None
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    return Cohomology(inversions, tuple(x - (n - i) for i, x in enumerate(ordered)))


def p_and_N(nu: Sequence[int], k: int, g: int) -> tuple[Weight, int]:
    """The G*-weight ``p(nu;k)`` and exterior exponent ``N(nu;k)``.

    With ``i`` the number of parts of nu that are >= k, ``p`` inserts k
    after the first i parts and raises the remaining parts by one.
    """
    nu = tuple(nu)
    if len(nu) != g - 1:
        raise ValueError(f"nu must have {g - 1} entries, got {nu}")
    i = nu_prime(nu, k)
    p = nu[:i] + (k,) + tuple(x + 1 for x in nu[i:])
    return p, g - 1 - i + k


@dataclass(frozen=True)
class CauchySummand:
    """``S_lam' E (x) S_lam Q* (x) S_mu R (x) S_mu' G*`` inside the exterior algebra of xi."""

    lam: Weight
    mu: Weight

    @property
    def exterior_degree(self) -> int:
        return size(self.lam) + size(self.mu)

    def fiber_dim(self, e: int, g: int) -> int:
        lam_c = conjugate(self.lam)
        mu_c = conjugate(self.mu)
        return (
            weyl_dim(lam_c, e)
            * weyl_dim(self.lam, g - 1)
            * weyl_dim(self.mu, e + 1)
            * weyl_dim(mu_c, g)
        )


def cauchy_summands(e: int, g: int) -> Iterator[CauchySummand]:
    """Nonvanishing summands: lam inside e^(g-1), mu inside g^(e+1)."""
    for lam in enumerate_in_box(g - 1, e):
        for mu in enumerate_in_box(e + 1, g):
            yield CauchySummand(lam, mu)


def _check_dims(e: int, g: int) -> None:
    if e < 1 or g < 2:
        raise ValueError(f"need e >= 1 and g >= 2, got e={e}, g={g}")


def f_terms_via_bott(e: int, g: int) -> GradedComplex:
    """Terms of the resolution of A/I computed from cohomology of Cauchy summands.

    Each summand ``(lam, mu)`` with cohomology ``H^j = wedge^s F`` gives a
    term in homological degree ``|lam| + |mu| - j`` twisted by
    ``(-|lam|, -|mu|)``.  The G*-label is ``mu'`` and is cross-checked
    against ``p(lam; k)``; any disagreement raises StructuralViolation.
    """
    _check_dims(e, g)
    f = e + g
    out = GradedComplex(e, g, "A")
    for s in cauchy_summands(e, g):
        lam, mu = s.lam, s.mu
        coh = bott(tuple(-x for x in reversed(lam)), mu, f, e + 1)
        if coh is None:
            continue
        n_ext = is_exterior_weight(coh.weight)
        if n_ext is None:
            raise StructuralViolation(f"summand {lam}, {mu} gives {coh.weight}, not an exterior power of F")
        hom = s.exterior_degree - coh.degree
        k = hom - size(lam)
        g_weight = pad(conjugate(mu), g)
        p, N = p_and_N(lam, k, g)
        if p != g_weight or N != n_ext:
            raise StructuralViolation(
                f"summand {lam}, {mu}: oracle label ({n_ext}; {g_weight}) != closed form ({N}; {p})"
            )
        out.add(
            make_term(
                lam, k, pad(conjugate(lam), e), n_ext, g_weight, (-size(lam), -size(mu)), hom, e, f, g
            )
        )
    return GradedComplex.from_terms(e, g, list(out), "A")


def t_terms_via_bott(nu: Sequence[int], e: int, g: int) -> GradedComplex:
    """Terms of the resolution of M(nu) from Bott's algorithm on Grass(g-1, G).

    For ``0 <= i <= f`` the weight ``(-i, -nu_{g-1}, ..., -nu_1)`` is run
    through Bott; ``H^s`` places ``wedge^i F (x) S_p G*`` in position ``i - s``.
    """
    _check_dims(e, g)
    f = e + g
    nu = tuple(nu)
    if len(nu) != g - 1:
        raise ValueError(f"nu must have {g - 1} entries, got {nu}")
    r_part = tuple(-x for x in reversed(nu))
    terms = []
    for i in range(f + 1):
        coh = bott((-i,), r_part, g, g - 1)
        if coh is None:
            continue
        g_weight = tuple(-x for x in reversed(coh.weight))
        pos = i - coh.degree
        terms.append(make_term(nu, pos, (), i, g_weight, (0, -i), pos, e, f, g))
    return GradedComplex.from_terms(e, g, terms, "Abar")
