import random
from fractions import Fraction

import pytest

from multisec import construct
from multisec.construct import (
    CURVE_VARS,
    SOURCE_VARS,
    DegenerateFiber,
    MixedTermNonzero,
    MonomialCover,
    NotDescendable,
    ProjectiveCurveMap,
    SampleZero,
    WeightedTorusAction,
    check_weighted_equivariance,
    corrected_j,
    corrected_jprime,
    dedupe_consecutive_entries,
    derive_jprime_and_compare,
    dual_point_on_fiber,
    dual_weight_action,
    involution_conjugate,
    load_curve_fixture,
    monomial_norm,
    normalized_map_degree,
    paired_quadric_descend,
    printed_j,
    printed_jprime_entries,
    projective_equal,
    pushforward_splitting_type,
    quadratic_pullback_table,
    standard_weight_action,
)
from multisec.exactalg import SparseMultiPoly, parse_poly


def S(text):
    return parse_poly(text, SOURCE_VARS)


def curve_map(*entries):
    labels = construct.TARGET_LABELS[:len(entries)]
    return ProjectiveCurveMap(SOURCE_VARS, tuple(S(e) for e in entries), labels)


# -- fixtures ----------------------------------------------------------------

def test_fixture_provenance_notes_present():
    for name in ("j_printed", "j_corrected", "jprime_printed", "jprime_corrected"):
        assert load_curve_fixture(name).notes


def test_printed_jprime_has_seven_entries():
    entries = printed_jprime_entries()
    assert len(entries) == 7
    assert entries[3] == entries[4] == S("S0*S1^4")


def test_printed_jprime_deduplicates_to_corrected():
    assert dedupe_consecutive_entries(printed_jprime_entries()) == corrected_jprime().entries


def test_seven_entries_do_not_fit_six_labels():
    with pytest.raises(ValueError):
        ProjectiveCurveMap(SOURCE_VARS, printed_jprime_entries(),
                           construct.TARGET_LABELS)


def test_corrected_j_entries():
    assert [e.canonical_str() for e in corrected_j().entries] == [
        "S0^5", "S0^3*S1^2", "S0*S1^4", "S0^4*S1", "S0^2*S1^3", "S1^5"]


# -- equivariance -------------------------------------------------------------

def test_corrected_j_equivariant_offset_zero():
    report = check_weighted_equivariance(corrected_j(), standard_weight_action())
    assert report.ok and report.offset == 0


def test_printed_j_flagged_not_homogeneous():
    report = check_weighted_equivariance(printed_j(), standard_weight_action())
    assert report.status == "not-homogeneous"
    assert not report.ok
    degrees = [d["degree"] for d in report.entry_details]
    assert degrees == [5, 5, 4, 5, 5, 5]


def test_corrected_jprime_equivariant_offset_five():
    report = check_weighted_equivariance(corrected_jprime(), dual_weight_action())
    assert report.ok and report.offset == 5


def test_identity_pair_fails_zero_weights():
    m = curve_map("S0", "S1")
    report = check_weighted_equivariance(m, WeightedTorusAction(6, (0, 0)))
    assert not report.ok
    assert report.status == "weight-mismatch"


def test_equivariance_invariant_under_entry_scaling():
    j = corrected_j()
    scaled_entries = list(j.entries)
    scaled_entries[2] = scaled_entries[2] * Fraction(3, 7)
    scaled = ProjectiveCurveMap(SOURCE_VARS, tuple(scaled_entries), j.target_labels)
    a = check_weighted_equivariance(j, standard_weight_action())
    b = check_weighted_equivariance(scaled, standard_weight_action())
    assert (a.status, a.offset) == (b.status, b.offset)


def test_mixed_weight_entry_detected():
    m = curve_map("S0^5 + S1^5", "S0^4*S1")
    report = check_weighted_equivariance(m, WeightedTorusAction(6, (0, 1)))
    assert report.status == "weight-mismatch"


# -- involution ---------------------------------------------------------------

def test_involution_on_coordinates():
    m = curve_map("S0", "S1")
    assert [e.canonical_str() for e in involution_conjugate(m).entries] == ["S0", "-S1"]


def test_involution_sign_pattern_on_corrected_j():
    j = corrected_j()
    conj = involution_conjugate(j)
    # odd S1-degree sits exactly on the X- slots
    for i, (a, b) in enumerate(zip(j.entries, conj.entries)):
        expected = a * (-1 if i >= 3 else 1)
        assert b == expected


def test_involution_is_an_involution():
    j = corrected_j()
    assert involution_conjugate(involution_conjugate(j)) == j


def test_involution_signs_from_weights():
    assert standard_weight_action().involution_signs() == (1, 1, 1, -1, -1, -1)


# -- paired quadrics ----------------------------------------------------------

def test_paired_quadrics_descend_on_corrected_j():
    family = paired_quadric_descend(corrected_j())
    assert len(family.coefficients) == 12
    for q in family.coefficients.values():
        assert q.is_homogeneous() and q.total_degree() == 5
    # squared first entry S0^5 descends to T0^5
    assert family.coefficient("X+0", "X+0") == parse_poly("T0^5", CURVE_VARS)


def test_paired_quadrics_match_table_after_swap():
    family = paired_quadric_descend(corrected_j())
    table = quadratic_pullback_table(corrected_jprime())
    for (a, b), quintic in table.rows:
        sign = 1 if a.startswith("X+") else -1
        factor = 1 if a == b else 2
        swapped = quintic.apply_variable_permutation((1, 0))
        assert family.coefficient(a, b) == (sign * factor) * swapped, (a, b)


def test_non_equivariant_perturbation_raises_mixed_term():
    j = corrected_j()
    entries = list(j.entries)
    entries[5] = entries[5] + S("S0^5")
    broken = ProjectiveCurveMap(SOURCE_VARS, tuple(entries), j.target_labels)
    with pytest.raises(MixedTermNonzero):
        paired_quadric_descend(broken)


def test_paired_quadrics_require_degree_five():
    with pytest.raises(ValueError):
        paired_quadric_descend(printed_j())


# -- norms ---------------------------------------------------------------------

def T(text):
    return parse_poly(text, CURVE_VARS)


def test_norm_degree_three_of_linear_form():
    assert monomial_norm(T("T0 + T1"), 3) == parse_poly("U0 + U1", construct.BASE_VARS)


def test_norm_degree_two_of_linear_form():
    assert monomial_norm(T("T0 + T1"), 2) == parse_poly("-U0 + U1", construct.BASE_VARS)


def test_norm_of_monomial():
    # the product over the deck scalings multiplies T0^d by
    # zeta^(d(d-1)/2), which is -1 exactly when d is even
    for d in (1, 3):
        assert monomial_norm(T("T0"), d) == parse_poly("U0", construct.BASE_VARS)
    for d in (2, 4):
        assert monomial_norm(T("T0"), d) == parse_poly("-U0", construct.BASE_VARS)
    for d in (1, 2, 3, 4):
        assert monomial_norm(T("T1"), d) == parse_poly("U1", construct.BASE_VARS)


def test_norm_requires_homogeneous_input():
    with pytest.raises(ValueError):
        monomial_norm(T("T0 + 1"), 2)


def random_homogeneous(rng, degree):
    terms = {}
    for a in range(degree + 1):
        if rng.random() < 0.6:
            terms[(a, degree - a)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    if not terms:
        terms[(degree, 0)] = Fraction(1)
    return SparseMultiPoly(CURVE_VARS, terms)


def test_norm_multiplicative_and_degree_preserving():
    rng = random.Random(4117)
    for _ in range(100):
        d = rng.randint(1, 4)
        p = random_homogeneous(rng, rng.randint(1, 4))
        q = random_homogeneous(rng, rng.randint(1, 4))
        np_, nq = monomial_norm(p, d), monomial_norm(q, d)
        npq = monomial_norm(p * q, d)
        assert npq == np_ * nq
        assert np_.total_degree() == p.total_degree()
        assert nq.total_degree() == q.total_degree()


# -- dual points and the derived map -------------------------------------------

def test_dual_point_matches_partner_of_missing_fiber_point():
    j = corrected_j()
    jp = corrected_jprime()
    signs = standard_weight_action().involution_signs()
    fiber = MonomialCover(6).fiber(Fraction(3))
    for missing in range(6):
        points = [fiber[i] for i in range(6) if i != missing]
        dual = dual_point_on_fiber(j, points, dual_signs=signs)
        partner = (missing + 3) % 6
        assert projective_equal(dual, jp.evaluate(fiber[partner]))


def test_dual_point_repeated_point_degenerate():
    j = corrected_j()
    fiber = MonomialCover(6).fiber(Fraction(2))
    points = [fiber[0], fiber[0], fiber[1], fiber[2], fiber[4]]
    with pytest.raises(DegenerateFiber):
        dual_point_on_fiber(j, points)


def test_five_distinct_fiber_points_have_rank_five():
    # linearly general position on a degree-5 normal curve
    from multisec.exactalg import ExactMatrix, exact_matrix_nullspace, exact_matrix_rank

    j = corrected_j()
    fiber = MonomialCover(6).fiber(Fraction(2))
    rows = [list(j.evaluate(fiber[i])) for i in range(5)]
    matrix = ExactMatrix(rows)
    assert exact_matrix_rank(matrix) == 5
    assert len(exact_matrix_nullspace(matrix)) == 1


def test_derive_jprime_matches_corrected_closed_form():
    comparison = derive_jprime_and_compare(corrected_j(), corrected_jprime(),
                                           samples=(1, 2))
    assert comparison.all_match
    assert len(comparison.checks) == 12


def test_derive_jprime_matches_deduplicated_printed_form():
    deduped = ProjectiveCurveMap(SOURCE_VARS,
                                 dedupe_consecutive_entries(printed_jprime_entries()),
                                 construct.TARGET_LABELS)
    comparison = derive_jprime_and_compare(corrected_j(), deduped, samples=(2,))
    assert comparison.all_match


def test_derive_jprime_detects_shuffled_candidate():
    jp = corrected_jprime()
    shuffled = ProjectiveCurveMap(
        SOURCE_VARS, jp.entries[1:] + jp.entries[:1], jp.target_labels)
    comparison = derive_jprime_and_compare(corrected_j(), shuffled, samples=(2,))
    assert not comparison.all_match
    assert comparison.mismatches()


def test_derive_jprime_rejects_zero_sample():
    with pytest.raises(SampleZero):
        derive_jprime_and_compare(corrected_j(), corrected_jprime(), samples=(0, 1))


def test_derive_jprime_rejects_duplicate_samples():
    with pytest.raises(ValueError):
        derive_jprime_and_compare(corrected_j(), corrected_jprime(), samples=(2, 2))


def test_projective_equal_basics():
    assert projective_equal((1, 2), (2, 4))
    assert not projective_equal((1, 2), (2, 5))
    assert not projective_equal((0, 0), (0, 1))
    assert projective_equal((0, 3), (0, 1))


# -- the pullback table ---------------------------------------------------------

EXPECTED_TABLE = [
    (("X+0", "X+0"), "T1^5"),
    (("X+0", "X+1"), "T0*T1^4"),
    (("X+0", "X+2"), "T0^2*T1^3"),
    (("X+1", "X+1"), "T0^2*T1^3"),
    (("X+1", "X+2"), "T0^3*T1^2"),
    (("X+2", "X+2"), "T0^4*T1"),
    (("X-0", "X-0"), "T0*T1^4"),
    (("X-0", "X-1"), "T0^2*T1^3"),
    (("X-0", "X-2"), "T0^3*T1^2"),
    (("X-1", "X-1"), "T0^3*T1^2"),
    (("X-1", "X-2"), "T0^4*T1"),
    (("X-2", "X-2"), "T0^5"),
]


def test_pullback_table_rows_and_rank():
    table = quadratic_pullback_table(corrected_jprime())
    assert [(pair, q.canonical_str()) for pair, q in table.rows] == EXPECTED_TABLE
    assert table.rank == 6


def test_pullback_table_not_descendable():
    # adjacent entries of the same parity block with odd product exponents
    broken = curve_map("S0^5", "S0^4*S1", "S0^3*S1^2",
                       "S0^2*S1^3", "S0*S1^4", "S1^5")
    with pytest.raises(NotDescendable):
        quadratic_pullback_table(broken)


# -- degrees and splitting -------------------------------------------------------

def test_normalized_map_degree_of_fixtures():
    assert normalized_map_degree(corrected_j()) == 5
    assert normalized_map_degree(corrected_jprime()) == 5


def test_normalized_map_degree_removes_common_factor():
    assert normalized_map_degree(curve_map("S0^2", "S0*S1")) == 1


def test_pushforward_splitting_examples():
    assert pushforward_splitting_type(3, 5) == (1, 1, 1)
    assert pushforward_splitting_type(1, 5) == (5,)
    assert pushforward_splitting_type(2, 5) == (2, 2)


def test_pushforward_splitting_section_count():
    for d in range(1, 7):
        for m in range(0, 13):
            twists = pushforward_splitting_type(d, m)
            assert sum(t + 1 for t in twists) == m + 1, (d, m)


def test_monomial_cover_composition_and_fiber():
    fg = MonomialCover(2).compose(MonomialCover(3))
    assert fg.degree == 6
    fiber = fg.fiber(Fraction(2))
    assert len(fiber) == 6
    with pytest.raises(SampleZero):
        fg.fiber(0)
