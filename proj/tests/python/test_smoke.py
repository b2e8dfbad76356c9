"""End-to-end checks that the Python module exposes the core library
faithfully: exact Fraction round trips, deterministic simulation, and the
main constructions."""

import math
from fractions import Fraction

import pytest

import aklab


def test_version_string():
    assert isinstance(aklab.__version__, str)
    assert aklab.__version__.count(".") == 2


def test_measure_matches_closed_form_exactly():
    p = Fraction(1, 3)
    fam = aklab.frt(9, 2, 1)
    m = fam.measure(p)
    assert isinstance(m, Fraction)
    assert m == aklab.closed_form_measure(2, 1, p)


def test_floats_are_rejected():
    fam = aklab.frt(5, 2, 1)
    with pytest.raises(TypeError):
        fam.measure(0.3)


def test_probability_domain_errors_propagate():
    with pytest.raises(ValueError):
        aklab.closed_form_measure(2, 1, Fraction(3, 2))
    with pytest.raises(ValueError):
        aklab.f_line_measure(6, 1, Fraction(1, 1))


def test_walk_counts_are_exact_ints():
    for l in range(6):
        for s in range(6):
            expect = math.comb(l + 2 * s, s) - (
                math.comb(l + 2 * s, s - 1) if s else 0
            )
            assert aklab.restricted_walk_count(l, s) == expect
    big = aklab.restricted_walk_count(5, 30)
    assert big == math.comb(65, 30) - math.comb(65, 29)
    assert isinstance(big, int)


def test_subset_and_dual():
    a = aklab.Subset([2, 4, 6], 7)
    assert a.size() == 3
    assert a.contains(4) and not a.contains(5)
    assert aklab.dual_t(a, 2).elements() == [1, 2, 3, 5, 7]


def test_family_text_round_trip():
    text = "n 4\n.\n1 3\n"
    fam = aklab.parse_family_text(text)
    assert len(fam) == 2
    assert aklab.parse_family_text(aklab.format_family(fam)) == fam


def test_minimal_sets_returns_element_lists():
    fam = aklab.SetFamily([[1], [1, 2], [2, 3]], 4)
    mins = aklab.minimal_sets(aklab.up_closure(fam))
    assert sorted(mins) == [[1], [2, 3]]


def test_search_smoke():
    p = Fraction(1, 4)
    cert = aklab.max_single(4, 2, p)
    assert cert.exhaustive
    assert cert.value == aklab.ak_reference(4, 2, p).best_value
    assert cert.argmax[0].measure(p) == cert.value
    restricted = aklab.max_single(4, 2, p, shifted_only=True)
    assert restricted.restricted_to_shifted
    assert restricted.value == cert.value


def test_classification_fields():
    a, b = aklab.extremal_pair(8, 2, 1, 1)
    cls = aklab.classify_pair(a, b, 2, 1)
    assert (cls.u, cls.v) == (2, 2)
    assert (cls.s, cls.s_prime) == (1, 1)
    assert isinstance(cls.case, aklab.PairCase)


def test_threshold_sign_enum():
    assert aklab.threshold_sign(2, 1, Fraction(1, 2)) == aklab.Sign.positive
    assert aklab.threshold_sign(2, 1, Fraction(2, 5)) == aklab.Sign.zero
    assert aklab.threshold_sign(2, 1, Fraction(1, 5)) == aklab.Sign.negative


def test_simulation_is_deterministic_across_jobs():
    one = aklab.simulate_hits(Fraction(1, 3), 1, 50, 20000, 7, 1)
    four = aklab.simulate_hits(Fraction(1, 3), 1, 50, 20000, 7, 4)
    assert one.estimate == four.estimate
    assert one.trials == 20000


def test_g_relations_shape():
    rep = aklab.g_relations(100, 2, Fraction(1, 40))
    assert rep.s_max == 16
    assert len(rep.claim_i) == 16
    assert rep.start_points[0].label == "g(0,0)"
    assert rep.start_points[0].limit == Fraction(1, 4)
    assert all(c.holds for c in rep.claim_i)


def test_budget_exact_and_interval():
    exact = aklab.weakstability_budget(Fraction(3, 4), Fraction(1, 4))
    assert exact.exact == 2
    assert exact.lo == exact.hi == 2
    bracket = aklab.weakstability_budget(Fraction(1, 3), Fraction(1, 4))
    assert bracket.exact is None
    assert bracket.lo < bracket.hi


def test_x_identity():
    a, b = aklab.near_extremal(10, 2, 1)
    rep = aklab.x_quantities(a, b, 2, 1, 1, Fraction(1, 5))
    assert rep.x_delta == rep.x_f + 2 * rep.x_star - rep.x
