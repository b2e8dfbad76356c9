#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aklab/analytics.hpp"
#include "aklab/constructions.hpp"
#include "aklab/family.hpp"
#include "aklab/rational.hpp"
#include "aklab/search.hpp"
#include "aklab/subset.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

using namespace aklab;

TEST_CASE("closed-form measure spot values") {
    CHECK(closed_form_measure(2, 1, Rational(1, 3)) == Rational(1, 9));
    CHECK(closed_form_measure(1, 0, Rational(2, 7)) == Rational(2, 7));
    CHECK(closed_form_measure(3, 0, Rational(1, 2)) == Rational(1, 8));
    CHECK(closed_form_measure(2, 1, Rational(1, 3)) ==
          frt(8, 2, 1).measure(Rational(1, 3)));
    CHECK_THROWS_AS(closed_form_measure(0, 1, Rational(1, 3)),
                    std::domain_error);
    CHECK_THROWS_AS(closed_form_measure(2, 1, Rational(1)), std::domain_error);
}

TEST_CASE("threshold sign matches the measure difference") {
    CHECK(threshold_sign(2, 0, Rational(1, 3)) == Sign::zero);
    CHECK(threshold_sign(2, 0, Rational(1, 4)) == Sign::negative);
    CHECK(threshold_sign(2, 0, Rational(2, 5)) == Sign::positive);
    CHECK(std::string(sign_name(Sign::zero)) == "Zero");
    CHECK(std::string(sign_name(Sign::negative)) == "Negative");
    CHECK(std::string(sign_name(Sign::positive)) == "Positive");

    for (int t = 1; t <= 6; ++t) {
        for (int r = 0; r <= 3; ++r) {
            for (int num = 1; num <= 6; ++num) {
                Rational p(num, 7);
                p.canonicalize();
                Rational diff = closed_form_measure(t, r + 1, p) -
                                closed_form_measure(t, r, p);
                Sign expect = diff > 0   ? Sign::positive
                              : diff < 0 ? Sign::negative
                                         : Sign::zero;
                CHECK(threshold_sign(t, r, p) == expect);
            }
        }
    }
}

TEST_CASE("measure unimodality across the frame index") {
    // At t = 1 every threshold sits at p = 1/2 and the chain is flat.
    for (int j = 0; j <= 5; ++j)
        CHECK(closed_form_measure(1, j, Rational(1, 2)) == Rational(1, 2));

    // For t >= 2 the p-range with parameter r has interior points, and
    // there the sequence mu(F^t_j) rises strictly to j = r and falls
    // strictly after it.
    for (int t = 2; t <= 30; ++t) {
        for (int r = 0; r <= 4; ++r) {
            Rational lo(r, t + 2 * r - 1 > 0 ? t + 2 * r - 1 : 1);
            Rational hi(r + 1, t + 2 * r + 1);
            Rational p = (lo + hi) / 2;
            p.canonicalize();
            if (p <= 0 || p >= 1) continue;
            for (int j = 0; j < r; ++j)
                CHECK(closed_form_measure(t, j, p) <
                      closed_form_measure(t, j + 1, p));
            for (int j = r; j <= r + 3; ++j)
                CHECK(closed_form_measure(t, j, p) >
                      closed_form_measure(t, j + 1, p));
        }
    }
}

TEST_CASE("frame difference measures in closed form") {
    for (int t = 1; t <= 4; ++t) {
        for (int r = 0; r <= 3; ++r) {
            int n = t + 2 * r + 2;
            if (n > 14) continue;
            for (const char* ps : {"1/5", "1/3", "1/2"}) {
                Rational p = parse_rational(ps);
                Rational q = Rational(1) - p;
                SetFamily big = frt(n, t, r + 1);
                SetFamily small = frt(n, t, r);
                Rational gain = family_difference(big, small).measure(p);
                Rational loss = family_difference(small, big).measure(p);
                Rational pw = 1, qw = 1;
                for (int k = 0; k < t + r + 1; ++k) pw *= p;
                for (int k = 0; k < r + 1; ++k) qw *= q;
                CHECK(gain == Rational(binomial(t + 2 * r, r + 1)) * pw * qw);
                CHECK(loss ==
                      Rational(binomial(t + 2 * r, r)) * (pw / p) * (qw * q));
            }
        }
    }
}

TEST_CASE("h evaluation") {
    CHECK(h_eval(2, 1, Rational(1, 3)) == Rational(59, 24));
    // j = 0 leaves only the odds-correction plus one.
    Rational p(1, 4), q(3, 4);
    CHECK(h_eval(0, 0, p) == p / q + 1);
    CHECK_THROWS_AS(h_eval(-1, 0, p), std::domain_error);
    CHECK_THROWS_AS(h_eval(0, -1, p), std::domain_error);
}

TEST_CASE("g evaluation near its asymptotic value") {
    // At the diagonal point s = s' = r = 1 the limit is 1.
    Rational g = g_eval(10000, 1, 1, 1, Rational(3, 20000));
    Rational err = g - 1;
    if (err < 0) err = -err;
    CHECK(err <= Rational(1, 100));
}

TEST_CASE("g relations report structure") {
    GRelationsReport rep = g_relations(100, 2, Rational(1, 40));
    CHECK(rep.s_max == 16);
    REQUIRE(rep.start_points.size() == 9);

    struct Expect {
        const char* label;
        int s, s_prime;
        Rational limit;
    };
    const Expect table[] = {
        {"g(0,0)", 0, 0, Rational(1, 4)},  {"g(4,4)", 4, 4, Rational(9, 16)},
        {"g(1,0)", 1, 0, Rational(1, 2)},  {"g(4,3)", 4, 3, Rational(3, 4)},
        {"g(4,2)", 4, 2, Rational(3, 4)},  {"g(4,1)", 4, 1, Rational(1, 2)},
        {"g(3,1)", 3, 1, Rational(2, 3)},  {"g(3,0)", 3, 0, Rational(1, 3)},
        {"g(2,0)", 2, 0, Rational(1, 2)},
    };
    for (std::size_t k = 0; k < 9; ++k) {
        CHECK(rep.start_points[k].label == table[k].label);
        CHECK(rep.start_points[k].s == table[k].s);
        CHECK(rep.start_points[k].s_prime == table[k].s_prime);
        CHECK(rep.start_points[k].limit == table[k].limit);
        CHECK(rep.start_points[k].value ==
              g_eval(100, 2, table[k].s, table[k].s_prime, Rational(1, 40)));
    }

    // Descent comparisons cover s >= s' >= 1 with s + s' <= 2(r+2).
    CHECK(rep.claim_i.size() == 16);
    for (const GComparison& c : rep.claim_i) CHECK(c.holds == (c.lhs > c.rhs));
    for (const GComparison& c : rep.claim_ii) CHECK(c.holds == (c.lhs <= c.rhs));
    for (const GComparison& c : rep.claim_iii) CHECK(c.holds == (c.lhs <= c.rhs));
}

TEST_CASE("g entries with negative subscripts read as zero") {
    GRelationsReport rep = g_relations(50, 1, Rational(1, 30));
    REQUIRE(rep.start_points.size() == 9);
    int zeros = 0;
    for (const GStartPoint& sp : rep.start_points) {
        if (sp.s_prime < 0 || sp.s < 0) {
            CHECK(sp.value == Rational(0));
            ++zeros;
        }
    }
    CHECK(zeros == 4);  // (r-2,r-2), (r-1,r-2), (r+1,r-2), (r,r-2) at r = 1

    // At r = 0 the three entries whose limit formula divides by r drop out.
    GRelationsReport base = g_relations(60, 0, Rational(1, 80));
    REQUIRE(base.start_points.size() == 6);
    CHECK(base.start_points[0].label == "g(2,2)");
    for (const GStartPoint& sp : base.start_points)
        if (sp.s_prime < 0) CHECK(sp.value == Rational(0));
}

TEST_CASE("ratio report rows and first-order accuracy") {
    std::vector<RatioReport> rows = ratio_report(1000, 1, Rational(3, 2000));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].label == "pair_rp1_r");
    CHECK(rows[1].label == "pair_r_rm1");
    CHECK(rows[2].label == "frt_rp1_over_r");
    CHECK(rows[3].label == "frt_rm1_over_r");

    double tpq = 1000 * (3.0 / 2000) * (1 - 3.0 / 2000);
    CHECK(rows[0].prediction == doctest::Approx(tpq / 2).epsilon(1e-12));
    CHECK(rows[1].prediction == doctest::Approx(1 / tpq).epsilon(1e-12));

    // pair rows multiply two frame measures against the square of a third.
    Rational t_lo = closed_form_measure(999, 2, Rational(3, 2000));
    Rational t_hi = closed_form_measure(1001, 1, Rational(3, 2000));
    Rational base = closed_form_measure(1000, 1, Rational(3, 2000));
    CHECK(rows[0].exact == t_lo * t_hi / (base * base));
    CHECK(rows[2].exact ==
          closed_form_measure(1000, 2, Rational(3, 2000)) / base);

    for (const RatioReport& row : rows)
        CHECK(std::fabs(row.exact.get_d() - row.prediction) < 0.01);

    std::vector<RatioReport> base_rows = ratio_report(100, 0, Rational(1, 200));
    REQUIRE(base_rows.size() == 2);
    CHECK(base_rows[0].label == "pair_rp1_r");
    CHECK(base_rows[1].label == "frt_rp1_over_r");
    CHECK_THROWS_AS(ratio_report(1, 1, Rational(1, 3)), std::domain_error);
}

TEST_CASE("claim booleans at the published points") {
    CHECK(claim21_first(4, 2));       // 10/49 > 1/5
    CHECK(!claim21_first(3, 2));      // 3/16 < 2/9
    CHECK(!claim21_first(10, 0));     // degenerate p = 0 never satisfies it
    CHECK(claim21_second(2, 0));
    for (int r = 1; r <= 6; ++r)
        for (int t : {2, 50, 200})
            CHECK(claim21_first(t, r) == (t > r * r - r + 1));
}

// A family whose boundary-walk threshold is exactly I: everything
// dominating D^t_s(I), maximalized through two best responses.
static std::pair<SetFamily, SetFamily> threshold_pair(int n, int t, int s,
                                                      int I) {
    Subset d = d_walk(n, t, s, I);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
        if (shifts_to(d, Subset(m, n))) masks.push_back(m);
    SetFamily b = best_response(SetFamily(masks, n), t);
    SetFamily a = best_response(b, t);
    return {a, b};
}

TEST_CASE("walk-count bounds bracket explicit family measures") {
    for (int n : {10, 12}) {
        for (auto [t, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
            for (int I = 1; I <= 2; ++I) {
                if (I + 1 > d_walk_i_max(n, t, s)) continue;
                auto [a, b] = threshold_pair(n, t, s, I);
                CHECK(a.is_shifted());
                CHECK(a.is_up_closed());
                CHECK(a.is_t_intersecting(t));
                // The response pair preserved the threshold.
                CHECK(a.contains(d_walk(n, t, s, I).bits));
                if (I + 1 <= d_walk_i_max(n, t, s))
                    CHECK(!a.contains(d_walk(n, t, s, I + 1).bits));

                Rational p(1, 5);
                BoundReport rep = bound_report(n, t, s, I, p);
                SetFamily frame = frt(n, t, s);
                CHECK(rep.eq19_lower <=
                      family_difference(frame, a).measure(p));
                CHECK(family_difference(b, frame).measure(p) <=
                      rep.eq20_upper);
            }
        }
    }
}

TEST_CASE("bound report grows like its stated rate in I") {
    // The gap between the un-intersected lower bound and the line upper
    // bound widens with the threshold.
    Rational p(1, 5);
    BoundReport lo = bound_report(14, 6, 1, 1, p);
    BoundReport hi = bound_report(14, 6, 1, 3, p);
    CHECK(hi.eq19_lower / hi.eq20_upper > lo.eq19_lower / lo.eq20_upper);
    CHECK(lo.claim21_first == claim21_first(6, 1));
    CHECK(lo.claim21_second == claim21_second(6, 1));
}

TEST_CASE("x quantities on exact and perturbed pairs") {
    // Exactly the extremal pair: no excess, no deficiency.
    auto [ea, eb] = extremal_pair(9, 2, 2, 1);
    XReport ex = x_quantities(ea, eb, 2, 2, 1, Rational(1, 3));
    CHECK(ex.x == ex.x_f);
    CHECK(ex.x_delta == Rational(0));
    CHECK(ex.x_star == Rational(0));
    CHECK(ex.weight_a == Rational(1, 3));  // p^{t-u} with u = 1
    CHECK(ex.weight_b == Rational(3));     // p^{t-v} with v = 3

    // Dropping one member set moves exactly that set into the difference.
    SetFamily frame = frt(8, 2, 1);
    std::uint32_t dropped = frame.masks().back();
    std::vector<std::uint32_t> rest(frame.masks().begin(),
                                    frame.masks().end() - 1);
    SetFamily a(rest, 8);
    XReport one = x_quantities(a, frame, 2, 1, 1, Rational(1, 3));
    CHECK(one.x_star == Rational(0));
    CHECK(one.x_delta ==
          SetFamily({dropped}, 8).measure(Rational(1, 3)));

    CHECK_THROWS_AS(x_quantities(ea, eb, 2, 5, 4, Rational(1, 3)),
                    std::domain_error);
}

TEST_CASE("x identity holds for arbitrary families") {
    std::uint64_t state = 99;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 6 + int(next() % 5);
        std::vector<std::uint32_t> ma, mb;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            if (next() % 3 == 0) ma.push_back(m);
            if (next() % 3 == 0) mb.push_back(m);
        }
        int s_prime = int(next() % 2);
        int s = s_prime + int(next() % 2);
        int t = 1 + (s - s_prime) + int(next() % 2);
        if (t + s + s_prime > n - 1) continue;
        Rational p(1 + int(next() % 4), 6);
        p.canonicalize();
        XReport rep =
            x_quantities(SetFamily(ma, n), SetFamily(mb, n), t, s, s_prime, p);
        CHECK(rep.x_delta == rep.x_f + 2 * rep.x_star - rep.x);
    }
}

TEST_CASE("weak stability budget exact and bracketed") {
    BudgetValue two = weakstability_budget(Rational(3, 4), Rational(1, 4));
    REQUIRE(two.exact.has_value());
    CHECK(*two.exact == Rational(2));
    CHECK(two.lo == Rational(2));
    CHECK(two.hi == Rational(2));

    BudgetValue irr = weakstability_budget(Rational(1, 3), Rational(1, 4));
    CHECK(!irr.exact.has_value());
    CHECK(irr.lo < irr.hi);
    // Bracket is tight and encloses the true root: with budget b,
    // sqrt(1-delta) = 1 - b (1-2 eps1)/2 must sit between the bounds.
    Rational scale = (Rational(1) - Rational(2) * Rational(1, 4)) / 2;
    Rational root_hi = Rational(1) - irr.lo * scale;
    Rational root_lo = Rational(1) - irr.hi * scale;
    CHECK(root_lo * root_lo <= Rational(2, 3));
    CHECK(root_hi * root_hi >= Rational(2, 3));
    Rational width = irr.hi - irr.lo;
    Rational cap(BigInt(1), BigInt(1) << 100);
    CHECK(width < cap);

    CHECK_THROWS_AS(weakstability_budget(Rational(0), Rational(1, 4)),
                    std::domain_error);
    CHECK_THROWS_AS(weakstability_budget(Rational(1, 2), Rational(1, 2)),
                    std::domain_error);
}
