from fractions import Fraction

import pytest

from sl2weyl.basis_enum import BasisSet, lex_basis, revlex_basis, truncated_basis
from sl2weyl.dpalgebra import RATIONALS, DPoly, parse_dpoly, prime_field
from sl2weyl.quotient_oracle import (
    ConfigurationError,
    MustVerifyFirstError,
    OracleSession,
    build_slice,
    quotient_dim,
    reduce_element,
    slice_monomials,
    slice_rank,
    truncated_quotient,
    verify_basis,
)
from sl2weyl.weyl_ideal import defining_generators, forgotten_family, schur_family

RINGS = (RATIONALS, prime_field(2), prime_field(3), prime_field(5))


# -- slices --------------------------------------------------------------------


def test_slice_monomials_sorted_and_complete():
    monos = slice_monomials(3, 2, 2)
    assert monos == ((1, 0, 1), (0, 2, 0))
    assert slice_monomials(3, 1, 5) == ()
    assert slice_monomials(0, 0, 0) == ((),)


def test_build_slice_m1_single_row():
    gens = defining_generators(1, RATIONALS, 3, 3)
    sl = build_slice(1, RATIONALS, 2, 0, gens)
    assert sl.monomials == ((2,),)
    assert sl.ideal_rows == ((1,),)
    assert len(sl.monomials) - slice_rank(sl) == 0


def test_build_slice_empty():
    gens = defining_generators(2, RATIONALS, 4, 4)
    sl = build_slice(2, RATIONALS, 1, 3, gens)
    assert sl.monomials == () and sl.ideal_rows == ()


def test_build_slice_m3_quotient_dim_one():
    gens = defining_generators(3, RATIONALS, 5, 10)
    sl = build_slice(3, RATIONALS, 2, 2, gens)
    assert set(sl.monomials) == {(1, 0, 1), (0, 2, 0)}
    assert len(sl.monomials) - slice_rank(sl) == 1


def test_build_slice_requires_covering_bounds():
    gens = defining_generators(3, RATIONALS, 4, 4)
    with pytest.raises(ConfigurationError):
        build_slice(3, RATIONALS, 5, 2, gens)
    with pytest.raises(ConfigurationError):
        build_slice(3, RATIONALS, 3, 6, gens)


def test_cascade_rank_equals_literal_rank():
    for m in (1, 2, 3):
        for ring in (RATIONALS, prime_field(2), prime_field(3)):
            bound = m + 2
            gens = defining_generators(m, ring, bound, bound * max(m - 1, 1))
            sess = OracleSession(m, ring, bound, gens=gens)
            for d in range(bound + 1):
                for w in range(d * max(m - 1, 0) + 1):
                    if not slice_monomials(m, d, w):
                        continue
                    lit = slice_rank(build_slice(m, ring, d, w, gens))
                    assert lit == sess.space(d, w).rank, (m, ring.char, d, w)


# -- dimensions ------------------------------------------------------------------


def test_quotient_dim_examples():
    assert quotient_dim(0, RATIONALS, 2).total == 1
    for m in range(1, 5):
        for ring in RINGS:
            rep = quotient_dim(m, ring, m + 2)
            assert rep.total == 2**m
            assert all(q == 0 for (d, _), q in rep.dims.items() if d > m)


def test_quotient_dim_requires_bound():
    with pytest.raises(ValueError):
        quotient_dim(4, RATIONALS, 3)


def test_three_presentations_agree_over_qq():
    # defining family, schur family, forgotten family: same graded dimensions
    for m in (1, 2, 3, 4):
        base = OracleSession(m, RATIONALS, m + 2).dims()
        for family in (schur_family, forgotten_family):
            gens = family(m, RATIONALS)
            # derived families are capped at degree m+1; extend coverage by
            # declaring their box (their multiples still span every slice)
            gens.degree_bound = m + 2
            gens.weight_bound = (m + 2) * max(m - 1, 0)
            alt = OracleSession(m, RATIONALS, m + 2, gens=gens).dims()
            assert alt.dims == base.dims, (m, gens.family)


def test_schur_presentation_agrees_mod_p_within_its_degrees():
    # in positive characteristic the degree-capped schur family only covers
    # slices up to its own cap (multiples cannot climb degrees: e.g. over F_2,
    # x0 * x0^(3) = C(4,3) x0^(4) = 0), so compare there exactly
    for m in (1, 2, 3):
        for p in (2, 3):
            ring = prime_field(p)
            base = OracleSession(m, ring, m + 1).dims()
            gens = schur_family(m, ring)
            alt = OracleSession(m, ring, m + 1, gens=gens).dims()
            assert alt.dims == base.dims, (m, p)


# -- basis verification -------------------------------------------------------------


def test_verify_lex_and_revlex_small():
    for m in range(1, 5):
        for ring in RINGS:
            rep = verify_basis(m, ring, lex_basis(m), m + 2)
            assert rep.passed and rep.total_candidates == 2**m
        rep = verify_basis(m, RATIONALS, revlex_basis(m), m + 2)
        assert rep.passed


def test_verify_slice_counts_agree_between_bases():
    for m in range(1, 5):
        sess = OracleSession(m, RATIONALS, m + 2)
        r1 = sess.verify_basis(lex_basis(m))
        r2 = sess.verify_basis(revlex_basis(m))
        c1 = {(s.degree, s.weight): s.candidate_count for s in r1.slices}
        c2 = {(s.degree, s.weight): s.candidate_count for s in r2.slices}
        assert c1 == c2


def test_verify_corrupted_candidate_fails_once():
    bs = lex_basis(3)
    # dropping one monomial: spanning fails in exactly that monomial's slice
    victim = (0, 2, 0)
    bad = BasisSet(3, "corrupt", bs.monomials - {victim})
    rep = verify_basis(3, RATIONALS, bad, 5)
    failing = [s for s in rep.slices if not s.passed]
    assert len(failing) == 1
    assert (failing[0].degree, failing[0].weight) == (2, 2)
    assert not failing[0].spanning and failing[0].independent
    # adding a junk monomial: independence fails there instead
    worse = BasisSet(3, "corrupt2", bs.monomials | {(1, 0, 1)})
    rep2 = verify_basis(3, RATIONALS, worse, 5)
    failing2 = [s for s in rep2.slices if not s.passed]
    assert len(failing2) == 1 and not failing2[0].independent


def test_greedy_pivot_complement_is_the_lex_basis():
    # the monomials NOT appearing as pivot leads, slice by slice, are exactly
    # the reduced monomials (pivots are taken greedily in descending DPLEX)

    for m in range(1, 6):
        sess = OracleSession(m, RATIONALS, m + 2)
        free = set()
        for d in range(m + 3):
            for w in range(d * max(m - 1, 0) + 1):
                monos = slice_monomials(m, d, w)
                if not monos:
                    continue
                ech = sess.space(d, w)
                pivot_cols = set(ech.pivots)
                free.update(
                    monos[i] for i in range(len(monos)) if i not in pivot_cols
                )
        assert free == lex_basis(m).monomials, m


# -- truncation ----------------------------------------------------------------------


def test_truncated_quotient_small():
    for m in range(2, 6):
        for n in range(1, m):
            rep = truncated_quotient(m, n, RATIONALS, m + 2)
            assert rep.passed, (m, n)
            assert rep.dims.total == len(truncated_basis(m, n))
        assert truncated_quotient(m, 1, RATIONALS, m + 2).dims.total == m + 1


def test_truncated_quotient_full_when_n_at_least_m():
    for m in (2, 3, 4):
        full = quotient_dim(m, RATIONALS, m + 2)
        trunc = truncated_quotient(m, m, RATIONALS, m + 2)
        assert trunc.dims.dims == full.dims
        assert trunc.passed


def test_truncation_by_plain_variables_is_a_char_zero_statement():
    # over F_2 the ideal (x_1) misses x_1^(2) (x_1 * x_1 = 2 x_1^(2) = 0), so
    # the plain-variable truncation genuinely exceeds the basis size there;
    # the truncation theorem lives in characteristic zero
    rep = truncated_quotient(4, 1, prime_field(2), 6)
    assert rep.dims.total == 6 > 5 == len(truncated_basis(4, 1))


def test_truncated_rejects_bad_level():
    with pytest.raises(ValueError):
        truncated_quotient(3, 0, RATIONALS, 5)


# -- reduction -------------------------------------------------------------------------


def test_reduce_element_examples():
    f = parse_dpoly("x0*x2", 3, RATIONALS)
    coords = reduce_element(f, 3, RATIONALS, lex_basis(3))
    assert coords == {(0, 2, 0): -1}

    b = parse_dpoly("x1^(2)", 3, RATIONALS)
    assert reduce_element(b, 3, RATIONALS, lex_basis(3)) == {(0, 2, 0): 1}

    g = parse_dpoly("x0*x2 + x1^(2)", 3, RATIONALS)
    assert reduce_element(g, 3, RATIONALS, lex_basis(3)) == {}


def test_reduce_element_linear():
    ring = RATIONALS
    sess = OracleSession(3, ring, 5)
    bs = lex_basis(3)
    assert sess.verify_basis(bs).passed
    f = parse_dpoly("x0*x2 + 2*x0*x1", 3, ring)
    g = parse_dpoly("x1^(2) - x0^(2)", 3, ring)
    cf = sess.reduce_element(f, bs)
    cg = sess.reduce_element(g, bs)
    combo = sess.reduce_element(f + g.scale(3), bs)
    expect = dict(cf)
    for k, v in cg.items():
        expect[k] = expect.get(k, 0) + 3 * v
    expect = {k: v for k, v in expect.items() if v}
    assert combo == expect


def test_reduce_element_idempotent_on_residues():
    ring = RATIONALS
    sess = OracleSession(3, ring, 5)
    bs = lex_basis(3)
    sess.verify_basis(bs)
    f = parse_dpoly("x0*x1*x2 + x1^(3)", 3, ring)
    coords = sess.reduce_element(f, bs)
    residue = DPoly.zero(ring, 3)
    for mono, c in coords.items():
        residue = residue + DPoly.monomial(ring, 3, mono, c)
    again = sess.reduce_element(residue, bs)
    assert {k: Fraction(v) for k, v in again.items()} == {
        k: Fraction(v) for k, v in coords.items()
    }


def test_reduce_element_gm_members_vanish():
    sess = OracleSession(3, RATIONALS, 5)
    bs = lex_basis(3)
    sess.verify_basis(bs)
    for e in schur_family(3, RATIONALS).entries:
        if e.degree <= 5:
            assert sess.reduce_element(e.poly, bs) == {}, e.provenance


def test_reduce_element_mod_p():
    ring = prime_field(2)
    sess = OracleSession(3, ring, 5)
    bs = lex_basis(3)
    assert sess.verify_basis(bs).passed
    f = parse_dpoly("x0*x2", 3, ring)
    assert sess.reduce_element(f, bs) == {(0, 2, 0): 1}  # -1 = 1 mod 2


def test_reduce_requires_verification():
    sess = OracleSession(3, RATIONALS, 5)
    with pytest.raises(MustVerifyFirstError):
        sess.reduce_element(parse_dpoly("x0", 3, RATIONALS), lex_basis(3))


# -- report plumbing ---------------------------------------------------------------


def test_verification_report_totals():
    rep = verify_basis(3, RATIONALS, lex_basis(3), 5)
    assert rep.total_quotient_dim == 8 == rep.total_candidates
    assert rep.m == 3 and rep.char == 0 and rep.provenance == "lex"
    assert rep.elapsed_seconds >= 0.0


def test_thread_env_var_gives_same_answer(monkeypatch):
    import sl2weyl.quotient_oracle as qo

    base = quotient_dim(3, RATIONALS, 5)
    monkeypatch.setenv(qo.THREADS_ENV, "4")
    threaded = quotient_dim(3, RATIONALS, 5)
    assert threaded.dims == base.dims and threaded.total == base.total
