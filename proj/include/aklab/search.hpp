#pragma once

#include "aklab/family.hpp"
#include "aklab/rational.hpp"

#include <cstdint>
#include <vector>

namespace aklab {

// Exhaustive branch-and-bound over up-closed families. The default bound
// n <= 6 keeps the space at Dedekind-number scale; n = 7 is reachable only
// with force and shifted_only together. Callers wanting a lower ceiling
// (e.g. from an environment policy) enforce it before calling.
struct SearchOptions {
    bool shifted_only = false;
    bool force = false;
};

struct SearchCertificate {
    std::vector<SetFamily> argmax;  // one family (single) or A, B (cross)
    Rational value;                 // optimal measure, or product for cross
    std::uint64_t nodes_explored = 0;
    bool exhaustive = false;
    bool restricted_to_shifted = false;
};

// Largest family cross t-intersecting with every member of a: all subsets
// of [n] meeting each member in at least t elements. Up-closed.
SetFamily best_response(const SetFamily& a, int t);

// Maximize mu_p over t-intersecting up-closed families on [n]. Every two
// members (a member with itself included) meet in at least t elements, so
// members have size >= t. Ties broken toward the canonical-least family.
SearchCertificate max_single(int n, int t, const Rational& p,
                             const SearchOptions& options = {});

// Maximize mu_p(A) * mu_p(B) over cross t-intersecting up-closed pairs.
// A is enumerated; B = best_response(A) is optimal given A. Ties broken
// toward the canonical-least A.
SearchCertificate max_cross(int n, int t, const Rational& p,
                            const SearchOptions& options = {});

// Exact mu_p(F_r^t) for every feasible r, with the argmax set.
struct AkReference {
    std::vector<std::pair<int, Rational>> per_r;
    std::vector<int> best_rs;
    Rational best_value;
};

AkReference ak_reference(int n, int t, const Rational& p);

}
