#pragma once

#include "aklab/family.hpp"
#include "aklab/rational.hpp"
#include "aklab/subset.hpp"

#include <cstdint>
#include <vector>

namespace aklab {

// A subset F of [n] is read as a lattice walk of n steps: step i goes up
// when i ∈ F and right otherwise. After k steps the walk sits at height
// d_k = 2|F ∩ [k]| - k, so "the walk meets the line y = x + l" means
// d_k = l for some k, which happens exactly at k = l + 2j where the walk
// is at the point (j, j + l).
struct WalkProfile {
    int max_line;                 // largest l >= 0 the walk reaches
    std::vector<int> line_hits;   // line_hits[l] = #{k : d_k = l}, l = 0..n
    std::vector<int> first_hit;   // first_hit[l] = smallest such k, -1 if none
};

WalkProfile walk_profile(const Subset& s);

// Largest l such that the walk of s meets y = x + l.
int max_line(const Subset& s);

// min over members of max_line; the height of the family. Throws
// std::domain_error on an empty family.
int family_lambda(const SetFamily& family);

// Number of walks from the origin to (s, l + s) avoiding the line
// y = x + l + 1, by reflection: C(l + 2s, s) - C(l + 2s, s - 1), with
// C(., -1) = 0.
BigInt restricted_walk_count(int l, int s);

// μ_p of { F ⊆ [n] : the walk of F meets y = x + l }, computed by a DP on
// walk height with exact weights.
Rational f_line_measure(int n, int l, const Rational& p);

// Monte Carlo estimate of the probability that an n-step walk with up
// probability p meets y = x + l. Deterministic for a fixed seed regardless
// of the number of worker threads.
struct SimResult {
    double estimate;
    double std_error;
    std::uint64_t trials;
};

SimResult simulate_hits(const Rational& p, int l, int steps,
                        std::uint64_t trials, std::uint64_t seed, int jobs);

}
