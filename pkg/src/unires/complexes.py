"""Closed-form generators for the resolution F, the complexes t_nu, G and
the Eagon-Northcott family, plus duality, strands and differential support.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .bott import p_and_N
from .partitions import (
    Weight,
    complement_in_box,
    conjugate,
    enumerate_in_box,
    is_dominant,
    nu_prime,
    pad,
    size,
)
from .terms import FreeTerm, GradedComplex, StructuralViolation, make_term


def _check_dims(e: int, g: int) -> None:
    if e < 1 or g < 2:
        raise ValueError(f"need e >= 1 and g >= 2, got e={e}, g={g}")


def f_term(nu: Sequence[int], k: int, e: int, g: int) -> FreeTerm | None:
    """``T_{nu;k}`` twisted by ``(-|nu|, -|nu| - N)`` in degree ``|nu| + k``; None if zero."""
    f = e + g
    p, N = p_and_N(nu, k, g)
    if not 0 <= N <= f:
        return None
    m = size(nu)
    return make_term(nu, k, pad(conjugate(nu), e), N, p, (-m, -m - N), m + k, e, f, g)


def f_terms_closed(e: int, g: int) -> GradedComplex:
    """Minimal free resolution of A/I over A, one term per nu in e^(g-1), 0 <= k <= e+1."""
    _check_dims(e, g)
    terms = []
    for nu in enumerate_in_box(g - 1, e):
        for k in range(e + 2):
            t = f_term(nu, k, e, g)
            if t is not None:
                terms.append(t)
    return GradedComplex.from_terms(e, g, terms, "A")


def g_complex(e: int, g: int) -> GradedComplex:
    """Resolution of the universal ring C over B: the same terms as F."""
    return f_terms_closed(e, g).with_ring("B")


def t_term(nu: Sequence[int], k: int, e: int, g: int) -> FreeTerm | None:
    f = e + g
    p, N = p_and_N(nu, k, g)
    if not 0 <= N <= f:
        return None
    return make_term(nu, k, (), N, p, (0, -N), k, e, f, g)


def t_terms_closed(nu: Sequence[int], e: int, g: int) -> GradedComplex:
    """The complex t_nu over Abar with ``wedge^N(nu;k) F (x) S_p(nu;k) G*`` in position k.

    Positions outside ``[-(g-1), f]`` cannot carry a nonzero term since
    ``k <= N(nu;k) <= k + g - 1``; every k in that window is tried.
    """
    _check_dims(e, g)
    nu = tuple(nu)
    if len(nu) != g - 1 or not is_dominant(nu):
        raise ValueError(f"nu must be a dominant weight with {g - 1} entries, got {nu}")
    terms = [t for k in range(-(g - 1), e + g + 1) if (t := t_term(nu, k, e, g)) is not None]
    return GradedComplex.from_terms(e, g, terms, "Abar")


def eagon_northcott_terms(i: int, e: int, g: int) -> GradedComplex:
    """The Eagon-Northcott complex C^i, realised as t_nu for nu = (i, ..., i)."""
    if not -1 <= i <= e + 1:
        raise ValueError(f"Eagon-Northcott index must lie in [-1, {e + 1}], got {i}")
    return t_terms_closed((i,) * (g - 1), e, g)


def positions_in_range(e: int, g: int) -> bool:
    """For every dominant nu in [-1, e+1]^(g-1), t_nu lives in positions 0..e+1."""
    for nu in weights_in_box(g - 1, -1, e + 1):
        for t in t_terms_closed(nu, e, g):
            if not 0 <= t.k <= e + 1:
                return False
    return True


def weights_in_box(n: int, lo: int, hi: int) -> list[Weight]:
    """Dominant weights of length n with entries in [lo, hi]."""
    return [tuple(x + lo for x in p) for p in enumerate_in_box(n, hi - lo)]


def dual_check_t(nu: Sequence[int], e: int, g: int) -> bool:
    """Check that t_nu and t_mu are dual with the shift e+1, mu the box complement.

    For every k + l = e + 1 the exterior exponents add to f and the G*-weights
    satisfy ``p(nu;k)_i + p(mu;l)_{g+1-i} = e + 1``; zero terms must pair
    with zero terms.
    """
    f = e + g
    nu = tuple(nu)
    mu = complement_in_box(nu, e)
    for k in range(-(g - 1) - 1, f + 2):
        l = e + 1 - k
        p, N = p_and_N(nu, k, g)
        q, M = p_and_N(mu, l, g)
        if N + M != f:
            return False
        if any(p[i] + q[g - 1 - i] != e + 1 for i in range(g)):
            return False
        if (t_term(nu, k, e, g) is None) != (t_term(mu, l, e, g) is None):
            return False
    return True


def self_duality_check(e: int, g: int) -> bool:
    """The pairing (nu, k) <-> (complement nu, e+1-k) is a rank-preserving
    bijection between degree d and degree eg+1-d, with dual labels."""
    c = f_terms_closed(e, g)
    f = e + g
    top = e * g + 1
    by_key = c.by_key()
    seen = set()
    for (nu, k), t in by_key.items():
        partner = by_key.get((complement_in_box(nu, e), e + 1 - k))
        if partner is None or partner.key in seen:
            return False
        seen.add(partner.key)
        if partner.hom_degree != top - t.hom_degree or partner.rank != t.rank:
            return False
        if partner.n_ext != f - t.n_ext:
            return False
        if complement_in_box(partner.e_weight, g - 1) != t.e_weight:
            return False
        if complement_in_box(partner.g_weight, e + 1) != t.g_weight:
            return False
    return len(seen) == len(by_key)


def strand(e: int, g: int) -> GradedComplex:
    """The wedge^0 F strand of F: the terms with k = 0."""
    return f_terms_closed(e, g).filter(lambda t: t.n_ext == 0)


@dataclass(frozen=True)
class DiffArrow:
    source: tuple[Weight, int]
    target: tuple[Weight, int]
    kind: str
    map_degree: tuple[int, int]


def _arrow(src: FreeTerm, tgt: FreeTerm, kind: str, deg: tuple[int, int]) -> DiffArrow:
    if src.hom_degree - tgt.hom_degree != 1:
        raise StructuralViolation(f"{kind} arrow {src.key} -> {tgt.key} does not drop degree by one")
    shift = (tgt.twist[0] - src.twist[0], tgt.twist[1] - src.twist[1])
    if shift != deg:
        raise StructuralViolation(f"{kind} arrow {src.key} -> {tgt.key}: twist shift {shift} != {deg}")
    return DiffArrow(src.key, tgt.key, kind, deg)


def diff_support(c: GradedComplex) -> list[DiffArrow]:
    """Support of the phi-, psi- and psiphi-components of the differential of F.

    Only arrows between terms present in ``c`` are emitted.  Scalars are
    not modelled.
    """
    g = c.g
    terms = c.by_key()
    arrows: list[DiffArrow] = []
    for (nu, k), src in terms.items():
        # psi: along the row t_nu
        if k >= 1 and (tgt := terms.get((nu, k - 1))) is not None:
            _, n_prev = p_and_N(nu, k - 1, g)
            arrows.append(_arrow(src, tgt, "psi", (0, src.n_ext - n_prev)))
        # phi: replace nu_j by k-1, landing in position nu_j of the new row
        j = nu_prime(nu, k)
        if k >= 1 and j >= 1:
            nu_j = nu[j - 1]
            rho = nu[: j - 1] + (k - 1,) + nu[j:]
            if (tgt := terms.get((rho, nu_j))) is not None:
                arrows.append(_arrow(src, tgt, "phi", (nu_j - k + 1, 0)))
        # psiphi: remove a corner box of nu
        for jj in range(len(nu)):
            lowered = nu[:jj] + (nu[jj] - 1,) + nu[jj + 1 :]
            if nu[jj] == k or not is_dominant(lowered) or lowered[jj] < 0:
                continue
            if (tgt := terms.get((lowered, k))) is not None:
                arrows.append(_arrow(src, tgt, "psiphi", (1, 1)))
    arrows.sort(key=lambda a: (a.kind, size(a.source[0]), a.source, a.target))
    return arrows


def uncovered_pairs(c: GradedComplex, arrows: list[DiffArrow]) -> list[tuple[tuple, tuple]]:
    """Degree-compatible pairs of terms that no documented component connects.

    A pair is degree-compatible when the target sits one homological degree
    lower and its twist is componentwise >= the source twist, not equal.
    These are reported, not asserted to carry a zero map.
    """
    covered = {(a.source, a.target) for a in arrows}
    out = []
    for src in c:
        for tgt in c.terms.get(src.hom_degree - 1, []):
            d = (tgt.twist[0] - src.twist[0], tgt.twist[1] - src.twist[1])
            if d[0] >= 0 and d[1] >= 0 and d != (0, 0) and (src.key, tgt.key) not in covered:
                out.append((src.key, tgt.key))
    return out


def arrows_to_dot(arrows: list[DiffArrow], c: GradedComplex) -> str:
    def node(key):
        nu, k = key
        return '"T_' + ",".join(map(str, nu)) + f'_{k}"'

    lines = ["digraph F {"]
    for t in c:
        lines.append(f'  {node(t.key)} [label="{t.label_text()} deg {t.hom_degree}"];')
    for a in arrows:
        lines.append(f'  {node(a.source)} -> {node(a.target)} [kind={a.kind}, label="{a.kind} {a.map_degree}"];')
    lines.append("}")
    return "\n".join(lines)


def arrows_to_json(arrows: list[DiffArrow]) -> list[dict]:
    return [
        {
            "source": {"nu": list(a.source[0]), "k": a.source[1]},
            "target": {"nu": list(a.target[0]), "k": a.target[1]},
            "kind": a.kind,
            "map_degree": list(a.map_degree),
        }
        for a in arrows
    ]


@dataclass
class StructuralReport:
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def structural_checks(c: GradedComplex) -> StructuralReport:
    """Length eg+1, rank-one top and bottom terms, pairwise distinct labels."""
    e, g, f = c.e, c.g, c.f
    rep = StructuralReport()
    top = e * g + 1
    if c.length() != top:
        rep.failures.append(f"length {c.length()} != eg+1 = {top}")
    top_terms = c.terms.get(top, [])
    expected = (pad((g - 1,) * e, e), f, (e + 1,) * g)
    if len(top_terms) != 1:
        rep.failures.append(f"degree {top} has {len(top_terms)} terms, expected 1")
    else:
        t = top_terms[0]
        if t.rank != 1:
            rep.failures.append(f"top term has rank {t.rank}")
        if (t.e_weight, t.n_ext, t.g_weight) != expected:
            rep.failures.append(f"top term labels {(t.e_weight, t.n_ext, t.g_weight)} != {expected}")
    bottom = c.terms.get(0, [])
    if len(bottom) != 1 or bottom[0].rank != 1 or bottom[0].twist != (0, 0):
        rep.failures.append("degree 0 is not a single untwisted rank-one term")
    labels = [t.labels for t in c]
    if len(set(labels)) != len(labels):
        rep.failures.append("some representation occurs more than once")
    return rep
