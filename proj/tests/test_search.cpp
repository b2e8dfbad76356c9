#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aklab/constructions.hpp"
#include "aklab/family.hpp"
#include "aklab/rational.hpp"
#include "aklab/search.hpp"

#include <vector>

using namespace aklab;

TEST_CASE("best response is maximal and fixes the frames") {
    CHECK(best_response(frt(4, 2, 0), 2) == frt(4, 2, 0));
    CHECK(best_response(frt(4, 2, 1), 2) == frt(4, 2, 1));
    CHECK(best_response(frt(6, 2, 1), 2) == frt(6, 2, 1));

    // The response contains every set meeting all members, nothing more.
    SetFamily a({Subset::from_elements({1, 2}, 4).bits,
                 Subset::from_elements({1, 3}, 4).bits},
                4);
    SetFamily b = best_response(a, 1);
    for (std::uint32_t m = 0; m < 16u; ++m) {
        bool meets_all = true;
        for (std::uint32_t am : a.masks())
            if (Subset(m & am, 4).size() < 1) meets_all = false;
        CHECK(b.contains(m) == meets_all);
    }
}

TEST_CASE("maximum single family matches hand values") {
    SearchCertificate c = max_single(2, 1, Rational(1, 4));
    CHECK(c.value == Rational(1, 4));
    CHECK(c.nodes_explored == 7);
    CHECK(c.exhaustive);
    REQUIRE(c.argmax.size() == 1);
    CHECK(c.argmax[0] ==
          SetFamily({Subset::from_elements({1}, 2).bits,
                     Subset::from_elements({1, 2}, 2).bits},
                    2));
    CHECK(c.argmax[0].measure(Rational(1, 4)) == c.value);

    SearchCertificate d = max_single(4, 2, Rational(1, 3));
    CHECK(d.value == Rational(1, 9));
    CHECK(d.nodes_explored == 43);
    CHECK(d.argmax[0].is_t_intersecting(2));
    CHECK(d.argmax[0].is_up_closed());
    CHECK(d.argmax[0].measure(Rational(1, 3)) == d.value);
}

TEST_CASE("shifted-only search reaches the same maximum faster") {
    SearchOptions o;
    o.shifted_only = true;
    SearchCertificate c = max_single(4, 2, Rational(1, 3), o);
    CHECK(c.value == Rational(1, 9));
    CHECK(c.nodes_explored == 13);
    CHECK(c.restricted_to_shifted);
    CHECK(c.argmax[0].is_shifted());
}

TEST_CASE("maximum cross pair squares the single maximum here") {
    SearchCertificate c = max_cross(4, 2, Rational(1, 4));
    CHECK(c.value == Rational(1, 256));
    CHECK(c.nodes_explored == 103);
    REQUIRE(c.argmax.size() == 2);
    CHECK(cross_t_intersecting(c.argmax[0], c.argmax[1], 2));
    CHECK(c.argmax[0].measure(Rational(1, 4)) *
              c.argmax[1].measure(Rational(1, 4)) ==
          c.value);
}

TEST_CASE("reference table scans the frame families") {
    AkReference ref = ak_reference(4, 2, Rational(1, 3));
    REQUIRE(ref.per_r.size() == 2);
    CHECK(ref.per_r[0].first == 0);
    CHECK(ref.per_r[0].second == Rational(1, 9));
    CHECK(ref.per_r[1].first == 1);
    CHECK(ref.per_r[1].second == Rational(1, 9));
    CHECK(ref.best_rs == std::vector<int>{0, 1});  // threshold tie at p = 1/3
    CHECK(ref.best_value == Rational(1, 9));

    AkReference low = ak_reference(4, 2, Rational(1, 4));
    CHECK(low.best_rs == std::vector<int>{0});
    CHECK(low.best_value == Rational(1, 16));
}

TEST_CASE("search guards its exponential blowup") {
    CHECK_THROWS_AS(max_single(8, 2, Rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(max_single(7, 2, Rational(1, 3)), std::domain_error);
    SearchOptions force_only;
    force_only.force = true;
    CHECK_THROWS_AS(max_single(7, 2, Rational(1, 3), force_only),
                    std::domain_error);  // force still needs shifted-only
    CHECK_THROWS_AS(max_cross(8, 1, Rational(1, 3)), std::domain_error);
}
