#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aklab {

// Subsets of a ground set [n] = {1, ..., n} are stored as bitmasks: element
// i occupies bit i-1. n is capped at 24 so families over the full power set
// stay addressable.
inline constexpr int max_ground_size = 24;

inline void check_ground_size(int n) {
    if (n < 1 || n > max_ground_size) {
        throw std::invalid_argument("ground set size must be in [1, 24]");
    }
}

struct Subset {
    std::uint32_t bits = 0;
    int n = 0;

    Subset() = default;
    Subset(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {
        check_ground_size(n_);
        if (n_ < 32 && (bits_ >> n_) != 0) {
            throw std::invalid_argument("subset has elements outside the ground set");
        }
    }

    static Subset from_elements(const std::vector<int>& elements, int n);

    int size() const { return std::popcount(bits); }
    bool contains(int element) const {
        return element >= 1 && element <= n && ((bits >> (element - 1)) & 1u);
    }

    // k-th smallest element, 1-based; throws if k is out of range.
    int kth_smallest(int k) const;

    std::vector<int> elements() const;

    // |S ∩ [m]| for 0 <= m <= n.
    int prefix_count(int m) const {
        return std::popcount(bits & ((1u << m) - 1u));
    }

    bool operator==(const Subset& other) const = default;
};

// True when every prefix of [n] holds at least as many elements of b as of
// a, and |a| <= |b|. Equivalently the i-th smallest element of a is >= the
// i-th smallest element of b for all i <= |a|, so a can be turned into a
// subset of b by repeatedly replacing an element with a smaller one.
bool shifts_to(const Subset& a, const Subset& b);

// The t-dual of a: the first t-1 elements of a are replaced by the initial
// segment [a_t - 1] where a_t is the t-th smallest element of a, and the
// complement of a is adjoined. Requires |a| >= t >= 1. The result meets a
// in exactly t-1 elements, and every b with |a ∩ b| = t-1 satisfies
// shifts_to(b, dual).
Subset dual_t(const Subset& a, int t);

// {lo, lo+1, ..., hi} as a mask over [n]; empty when lo > hi.
std::uint32_t range_mask(int lo, int hi);

// {lo, lo+2, lo+4, ...} ∩ [lo, hi] as a mask.
std::uint32_t range_mask_step2(int lo, int hi);

// Orders masks by their sorted element sequences, proper prefixes first:
// {1} < {1,2} < {1,3} < {2}. This is the order used for file output and
// tie-breaking.
bool lex_less(std::uint32_t a, std::uint32_t b);

}
