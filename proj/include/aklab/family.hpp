#pragma once

#include "aklab/rational.hpp"
#include "aklab/subset.hpp"

#include <atomic>
#include <cstdint>
#include <vector>

namespace aklab {

// A family of subsets of [n], stored as a sorted, duplicate-free vector of
// masks. Predicate results that cost a full scan (shifted, up-closed,
// t-intersecting) are cached; caches are invalidated only by construction,
// since families are immutable after being built.
class SetFamily {
  public:
    SetFamily() = default;
    SetFamily(std::vector<std::uint32_t> masks, int n);

    SetFamily(const SetFamily& other);
    SetFamily& operator=(const SetFamily& other);

    int n() const { return n_; }
    std::size_t size() const { return masks_.size(); }
    bool empty() const { return masks_.empty(); }
    const std::vector<std::uint32_t>& masks() const { return masks_; }
    bool contains(std::uint32_t mask) const;

    // Σ_{F} p^|F| (1-p)^(n-|F|), grouped by cardinality so the number of
    // big-number multiplications is O(n), not O(|family|).
    Rational measure(const Rational& p) const;

    // Every pair of members meets in at least t elements.
    bool is_t_intersecting(int t) const;

    // Closed under supersets within [n].
    bool is_up_closed() const;

    // Closed under the exchange j -> i for every i < j: replacing any
    // element j of a member by any absent smaller i stays in the family.
    bool is_shifted() const;

    bool operator==(const SetFamily& other) const {
        return n_ == other.n_ && masks_ == other.masks_;
    }

  private:
    std::vector<std::uint32_t> masks_;
    int n_ = 0;

    // Tri-state caches: 0 unknown, 1 false, 2 true.
    mutable std::atomic<int> up_closed_cache_{0};
    mutable std::atomic<int> shifted_cache_{0};
    // Encodes (t << 2) | (result << 1) | 1 once a t-intersection query ran.
    mutable std::atomic<std::int64_t> t_cache_{0};
};

// Every member of a meets every member of b in at least t elements.
bool cross_t_intersecting(const SetFamily& a, const SetFamily& b, int t);

// The (i, j)-shift: each member containing j but not i is replaced by
// (F \ {j}) ∪ {i} unless that set is already present. Requires i < j.
SetFamily shift_ij(const SetFamily& family, int i, int j);

// Applies (i, j)-shifts in lexicographic (i, j) order until no shift
// changes the family. The result is shifted and has the same size and the
// same cardinality profile.
SetFamily shift_fixpoint(const SetFamily& family);

// Smallest up-closed family containing the input.
SetFamily up_closure(const SetFamily& family);

// Members of a exactly; set operations respect the common ground set.
SetFamily family_union(const SetFamily& a, const SetFamily& b);
SetFamily family_intersection(const SetFamily& a, const SetFamily& b);
SetFamily family_difference(const SetFamily& a, const SetFamily& b);
SetFamily family_sym_diff(const SetFamily& a, const SetFamily& b);

// All 2^n subsets of [n].
SetFamily powerset(int n);

// Inclusion-minimal members.
std::vector<std::uint32_t> minimal_sets(const SetFamily& family);

// Compares whole families member-by-member in lex_less order; the family
// that first presents a smaller member wins, with a prefix family smaller.
bool canonical_less(const SetFamily& a, const SetFamily& b);

}
