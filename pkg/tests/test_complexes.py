import json
from math import comb

import pytest

from unires.bott import f_terms_via_bott, p_and_N
from unires.complexes import (
    arrows_to_dot,
    arrows_to_json,
    diff_support,
    dual_check_t,
    eagon_northcott_terms,
    f_terms_closed,
    g_complex,
    positions_in_range,
    self_duality_check,
    strand,
    structural_checks,
    t_terms_closed,
    uncovered_pairs,
    weights_in_box,
)
from unires.partitions import complement_in_box, conjugate, enumerate_in_box, pad, size, weyl_dim
from unires.terms import GradedComplex, StructuralViolation, make_term

SMALL = [(e, g) for e in range(1, 7) for g in range(2, 9 - e)]


def _find(c, e_weight, n_ext, g_weight):
    return [t for t in c if (t.e_weight, t.n_ext, t.g_weight) == (e_weight, n_ext, g_weight)]


def test_e2_g2_terms():
    c = f_terms_closed(2, 2)
    assert len(c) == 12
    assert c.counts() == [1, 2, 3, 3, 2, 1]
    (t,) = _find(c, (1, 1), 1, (2, 1))
    assert (t.hom_degree, t.twist) == (3, (-2, -3))


def test_e2_g3_terms():
    c = f_terms_closed(2, 3)
    assert len(c.terms[4]) == 5
    (t,) = _find(c, (2, 2), 0, (2, 2, 0))
    assert (t.hom_degree, t.twist) == (4, (-4, -4))


def test_e1_g2_top():
    c = f_terms_closed(1, 2)
    assert c.length() == 3
    (t,) = c.terms[3]
    assert t.rank == 1


@pytest.mark.parametrize("e, g", SMALL)
def test_closed_matches_oracle(e, g):
    assert f_terms_closed(e, g).same_terms(f_terms_via_bott(e, g))


@pytest.mark.parametrize("e, g", SMALL)
def test_term_invariants(e, g):
    c = f_terms_closed(e, g)
    f = e + g
    assert len(c) == comb(e + g - 1, g - 1) * (e + 2)
    for t in c:
        nu, k = t.key
        p, N = p_and_N(nu, k, g)
        assert t.rank == weyl_dim(t.e_weight, e) * comb(f, t.n_ext) * weyl_dim(t.g_weight, g)
        assert t.twist == (-size(nu), -size(nu) - N)
        assert t.hom_degree == size(nu) + k
        assert t.e_weight == pad(conjugate(nu), e)
        assert size(t.g_weight) == -t.twist[1]
    # complement bijection on degrees
    top = e * g + 1
    for d in range(top + 1):
        assert len(c.terms.get(d, [])) == len(c.terms.get(top - d, []))


def test_nothing_outside_k_range():
    for e in range(1, 5):
        for g in range(2, 5):
            assert positions_in_range(e, g)
            for nu in enumerate_in_box(g - 1, e):
                ks = [t.k for t in t_terms_closed(nu, e, g)]
                assert ks == list(range(e + 2))


def test_t_nu_example():
    c = t_terms_closed((2,), 2, 2)
    assert [(t.k, t.n_ext) for t in c] == [(0, 0), (1, 1), (2, 2), (3, 4)]
    assert c.base_ring == "Abar"


def _textbook_en(i, e, g):
    """Eagon-Northcott C^i from its textbook description, untwisted by det G*.

    Positions 0..i: wedge^k F (x) Sym_{i-k} G; positions k > i:
    wedge^{g+k-1} F (x) D_{k-i-1} G* (x) wedge^g G*.  Weights are returned
    as G*-weights after tensoring with (wedge^g G*)^i.
    """
    out = []
    for k in range(e + 2):
        if k <= i:
            out.append((k, (i,) * (g - 1) + (k,)))
        else:
            # D_{k-i-1} G* has weight (k-i-1, 0, ...); the det power adds i+1
            out.append((g + k - 1, (k,) + (i + 1,) * (g - 1)))
    return out


@pytest.mark.parametrize("e, g", [(1, 2), (2, 2), (2, 3), (3, 2), (3, 4)])
def test_eagon_northcott_against_textbook(e, g):
    for i in range(-1, e + 2):
        c = eagon_northcott_terms(i, e, g)
        assert [(t.n_ext, t.g_weight) for t in c] == _textbook_en(i, e, g)
        assert [t.k for t in c] == list(range(e + 2))


def test_eagon_northcott_ranks():
    c = eagon_northcott_terms(0, 2, 2)
    assert [t.n_ext for t in c] == [0, 2, 3, 4]
    assert [t.rank for t in c] == [1, 6, 8, 3]


def test_eagon_northcott_sym_i_presentation():
    for i in range(1, 4):
        (t0,) = eagon_northcott_terms(i, 3, 3).terms[0]
        assert (t0.n_ext, t0.g_weight) == (0, (i, i, 0))


def test_eagon_northcott_range():
    with pytest.raises(ValueError):
        eagon_northcott_terms(-2, 2, 2)
    with pytest.raises(ValueError):
        eagon_northcott_terms(4, 2, 2)


def test_en_extremes_are_dual():
    e, g = 2, 3
    assert complement_in_box((-1,) * (g - 1), e) == (e + 1,) * (g - 1)
    assert dual_check_t((-1,) * (g - 1), e, g)
    lo = eagon_northcott_terms(-1, e, g)
    hi = eagon_northcott_terms(e + 1, e, g)
    assert sorted(t.rank for t in lo) == sorted(t.rank for t in hi)
    assert [t.n_ext for t in lo] == [e + g - t.n_ext for t in reversed(list(hi))]


def test_dual_check_examples():
    assert complement_in_box((1, 0), 2) == (2, 1)
    assert dual_check_t((1, 0), 2, 3)
    assert dual_check_t((0, 0), 2, 3)


def test_dual_check_sweep():
    for e in range(1, 5):
        for g in range(2, 5):
            for nu in weights_in_box(g - 1, -1, e + 1):
                assert dual_check_t(nu, e, g)


@pytest.mark.parametrize("e, g", SMALL)
def test_self_duality(e, g):
    assert self_duality_check(e, g)


def test_self_duality_degree_one_pairs_with_four():
    c = f_terms_closed(2, 2)
    assert sorted(t.rank for t in c.terms[1]) == sorted(t.rank for t in c.terms[4]) == [4, 6]


def test_strand_examples():
    s = strand(2, 2)
    assert [(t.hom_degree, t.g_weight) for t in s] == [(0, (0, 0)), (1, (1, 0)), (2, (2, 0))]
    s = strand(2, 3)
    assert s.degrees() == [0, 1, 2, 3, 4]
    assert len(s) == 6
    above_zero = sorted(t.label_text() for t in s if t.hom_degree > 0)
    assert above_zero == sorted(
        ["(1,0;0;1,0,0)", "(2,0;0;1,1,0)", "(1,1;0;2,0,0)", "(2,1;0;2,1,0)", "(2,2;0;2,2,0)"]
    )


@pytest.mark.parametrize("e, g", [(1, 2), (2, 2), (2, 3), (3, 3), (2, 4)])
def test_strand_is_cauchy_part(e, g):
    # wedge^n (E (x) G*) = sum over |nu| = n of S_nu' E (x) S_nu G*; keep nu with < g parts
    expected = sorted(
        (size(nu), pad(conjugate(nu), e), nu)
        for nu in enumerate_in_box(g, e)
        if nu[-1] == 0
    )
    got = sorted((t.hom_degree, t.e_weight, t.g_weight) for t in strand(e, g))
    assert got == expected
    assert all(t.k == 0 for t in strand(e, g))
    full = {}
    for nu in enumerate_in_box(g, e):
        full[size(nu)] = full.get(size(nu), 0) + weyl_dim(conjugate(nu), e) * weyl_dim(nu, g)
    assert full == {n: comb(e * g, n) for n in range(e * g + 1)}


def _arrow_set(c):
    return {(a.source, a.target, a.kind, a.map_degree) for a in diff_support(c)}


def test_diff_support_examples():
    arrows = _arrow_set(f_terms_closed(2, 2))
    assert (((2,), 1), ((0,), 2), "phi", (2, 0)) in arrows
    assert (((2,), 0), ((1,), 0), "psiphi", (1, 1)) in arrows
    assert (((1,), 0), ((0,), 0), "psiphi", (1, 1)) in arrows
    assert (((2,), 3), ((2,), 2), "psi", (0, 2)) in arrows


def test_diff_support_vertical_arrows_e2_g3():
    arrows = _arrow_set(f_terms_closed(2, 3))
    for src, tgt in [((2, 2), (2, 1)), ((2, 1), (1, 1)), ((2, 1), (2, 0)), ((1, 1), (1, 0)), ((2, 0), (1, 0)), ((1, 0), (0, 0))]:
        assert ((src, 0), (tgt, 0), "psiphi", (1, 1)) in arrows


@pytest.mark.parametrize("e, g", SMALL)
def test_diff_support_invariants(e, g):
    c = f_terms_closed(e, g)
    terms = c.by_key()
    for a in diff_support(c):
        s, t = terms[a.source], terms[a.target]
        assert s.hom_degree - t.hom_degree == 1
        assert (t.twist[0] - s.twist[0], t.twist[1] - s.twist[1]) == a.map_degree
        assert min(a.map_degree) >= 0 and a.map_degree != (0, 0)
        nu, k = a.source
        if a.kind == "psi":
            assert a.target == (nu, k - 1)
            assert a.map_degree == (0, s.n_ext - t.n_ext)
        elif a.kind == "psiphi":
            assert a.map_degree == (1, 1) and s.n_ext == t.n_ext
        else:
            assert a.map_degree[1] == 0 and t.g_weight == s.g_weight


def test_psi_rows_are_complete():
    c = f_terms_closed(3, 3)
    psi = [a for a in diff_support(c) if a.kind == "psi"]
    assert len(psi) == comb(5, 2) * 4


def test_uncovered_pairs_reported():
    c = f_terms_closed(2, 2)
    extra = uncovered_pairs(c, diff_support(c))
    assert (((2,), 0), ((0,), 1)) in extra
    assert uncovered_pairs(f_terms_closed(1, 2), diff_support(f_terms_closed(1, 2))) == []


def test_diff_support_rejects_bad_complex():
    e, g, f = 2, 2, 4
    bad = GradedComplex.from_terms(
        e, g,
        [
            make_term((0,), 0, (0, 0), 0, (0, 0), (0, 0), 0, e, f, g),
            make_term((0,), 1, (0, 0), 2, (1, 1), (0, -5), 1, e, f, g),
        ],
    )
    with pytest.raises(StructuralViolation):
        diff_support(bad)


def test_dot_and_json():
    c = f_terms_closed(2, 2)
    arrows = diff_support(c)
    dot = arrows_to_dot(arrows, c)
    assert dot.startswith("digraph")
    assert '"T_2_1" -> "T_0_2" [kind=phi' in dot
    assert dot.count("->") == len(arrows)
    js = arrows_to_json(arrows)
    assert {"source", "target", "kind", "map_degree"} == set(js[0])


@pytest.mark.parametrize("e, g, top_twist", [(2, 2, (-2, -6)), (2, 3, (-4, -9)), (3, 3, (-6, -12))])
def test_structural(e, g, top_twist):
    c = f_terms_closed(e, g)
    rep = structural_checks(c)
    assert rep.passed, rep.failures
    assert c.length() == e * g + 1
    (top,) = c.terms[e * g + 1]
    assert top.twist == top_twist


def test_structural_reports_failures():
    c = f_terms_closed(2, 2)
    broken = c.filter(lambda t: t.hom_degree != 5)
    rep = structural_checks(broken)
    assert not rep.passed
    assert any("length" in f for f in rep.failures)


def test_g_complex():
    c = g_complex(2, 2)
    assert c.base_ring == "B"
    assert len(c) == 12
    assert c.same_terms(f_terms_closed(2, 2))
    assert json.loads(c.dumps())["base_ring"] == "B"


def test_json_schema_and_roundtrip():
    c = f_terms_closed(2, 3)
    d = json.loads(c.dumps())
    assert (d["e"], d["g"], d["f"], d["base_ring"]) == (2, 3, 5, "A")
    assert set(d["terms"][0]) == {"nu", "k", "e_weight", "n_ext", "g_weight", "twist", "hom_degree", "rank"}
    assert isinstance(d["terms"][0]["rank"], str)
    order = [(t["hom_degree"], sum(t["nu"]), t["nu"], t["k"]) for t in d["terms"]]
    assert order == sorted(order)
    assert GradedComplex.from_json(d).same_terms(c)
    assert f_terms_closed(2, 3).dumps() == c.dumps()


def test_dims_validated():
    for fn in (f_terms_closed, g_complex, strand):
        with pytest.raises(ValueError):
            fn(0, 2)
        with pytest.raises(ValueError):
            fn(2, 1)
