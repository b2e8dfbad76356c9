#include "aklab/constructions.hpp"

#include "aklab/walks.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aklab {

SetFamily frt(int n, int t, int r) {
    check_ground_size(n);
    if (t < 1 || r < 0 || t + 2 * r > n) {
        throw std::domain_error("frt needs t >= 1, r >= 0, t + 2r <= n");
    }
    std::uint32_t window = range_mask(1, t + 2 * r);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (std::popcount(m & window) >= t + r) masks.push_back(m);
    }
    return SetFamily(std::move(masks), n);
}

SetFamily f_line_family(int n, int l) {
    check_ground_size(n);
    if (l < 0) throw std::domain_error("line index must be nonnegative");
    std::vector<std::uint32_t> masks;
    if (l <= n) {
        for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
            if (max_line(Subset(m, n)) >= l) masks.push_back(m);
        }
    }
    return SetFamily(std::move(masks), n);
}

LinePartition line_partition(int n, int l) {
    check_ground_size(n);
    if (l < 0) throw std::domain_error("line index must be nonnegative");
    LinePartition out;
    std::vector<std::uint32_t> tilde, dot, ddot;
    int slots = (l <= n) ? (n - l) / 2 + 1 : 0;
    std::vector<std::vector<std::uint32_t>> dot_i(static_cast<std::size_t>(slots));
    std::vector<std::vector<std::uint32_t>> ddot_i(static_cast<std::size_t>(slots));
    if (l <= n) {
        for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
            WalkProfile profile = walk_profile(Subset(m, n));
            if (profile.max_line > l) {
                tilde.push_back(m);
            } else if (profile.max_line == l) {
                std::size_t index =
                    static_cast<std::size_t>((profile.first_hit[static_cast<std::size_t>(l)] - l) / 2);
                if (profile.line_hits[static_cast<std::size_t>(l)] == 1) {
                    dot.push_back(m);
                    dot_i[index].push_back(m);
                } else {
                    ddot.push_back(m);
                    ddot_i[index].push_back(m);
                }
            }
        }
    }
    out.tilde = SetFamily(std::move(tilde), n);
    out.dot = SetFamily(std::move(dot), n);
    out.ddot = SetFamily(std::move(ddot), n);
    for (int i = 0; i < slots; ++i) {
        out.dot_by_index.emplace_back(std::move(dot_i[static_cast<std::size_t>(i)]), n);
        out.ddot_by_index.emplace_back(std::move(ddot_i[static_cast<std::size_t>(i)]), n);
    }
    return out;
}

int d_walk_i_max(int n, int t, int s) { return n - t - 2 * s - 1; }

Subset d_walk(int n, int t, int s, int i, DWalkVariant variant) {
    check_ground_size(n);
    if (s < 0) throw std::domain_error("d_walk needs s >= 0");
    if (i < 1 || i > d_walk_i_max(n, t, s)) {
        throw std::domain_error("d_walk index out of range");
    }
    std::uint32_t bits;
    if (variant == DWalkVariant::plain) {
        if (t < 1) throw std::domain_error("plain d_walk needs t >= 1");
        bits = range_mask(1, t - 1) | range_mask(t + s, t + 2 * s) |
               range_mask_step2(t + 2 * s + i + 2, n);
    } else {
        if (t < 2) throw std::domain_error("tilde d_walk needs line >= 2");
        bits = range_mask(1, t - 2) | range_mask(t + s - 1, t + 2 * s) |
               range_mask_step2(t + 2 * s + i + 2, n);
    }
    return Subset(bits, n);
}

std::pair<SetFamily, SetFamily> near_extremal(int n, int t, int r) {
    check_ground_size(n);
    if (t < 1 || r < 0 || t + 2 * r + 1 > n) {
        throw std::domain_error("near_extremal needs t + 2r + 1 <= n");
    }
    int w = t + 2 * r;
    std::uint32_t window = range_mask(1, w);
    std::uint32_t tail = range_mask(w + 1, n);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (std::popcount(m & window) < t + r) continue;
        bool bare = (m & ~window) == 0 && std::popcount(m) == t + r;
        if (!bare) masks.push_back(m);
    }
    for (std::uint32_t g = 0; g < (std::uint32_t{1} << w); ++g) {
        if (std::popcount(g) == t + r - 1) masks.push_back(g | tail);
    }
    SetFamily a(std::move(masks), n);
    return {a, a};
}

std::pair<SetFamily, SetFamily> extremal_pair(int n, int t, int s, int s_prime) {
    check_ground_size(n);
    if (t < 1 || s_prime < 0 || s < s_prime) {
        throw std::domain_error("extremal_pair needs t >= 1, s >= s' >= 0");
    }
    int u = t - (s - s_prime);
    int v = t + (s - s_prime);
    if (u < 1) throw std::domain_error("extremal_pair needs s - s' <= t - 1");
    if (t + s + s_prime > n) {
        throw std::domain_error("extremal_pair window exceeds the ground set");
    }
    return {frt(n, u, s), frt(n, v, s_prime)};
}

std::vector<std::pair<int, int>> r_ex(int r) {
    if (r < 0) throw std::domain_error("r must be nonnegative");
    if (r == 0) return {{0, 0}, {1, 1}, {1, 0}};
    return {{r - 1, r - 1}, {r, r}, {r + 1, r + 1}, {r, r - 1}, {r + 1, r}};
}

namespace {

struct SidePartition {
    std::vector<std::uint32_t> dot;
    std::vector<std::uint32_t> ddot;
};

SidePartition split_by_line(const SetFamily& family, int l) {
    SidePartition out;
    for (std::uint32_t m : family.masks()) {
        int top = max_line(Subset(m, family.n()));
        if (top > l) continue;
        WalkProfile profile = walk_profile(Subset(m, family.n()));
        if (profile.line_hits[static_cast<std::size_t>(l)] == 1) {
            out.dot.push_back(m);
        } else {
            out.ddot.push_back(m);
        }
    }
    return out;
}

// The unique s with all of dot and ddot on line l at the point (s, l+s),
// when it exists: every such member carries exactly l+s elements in the
// window [l+2s].
std::optional<int> line_coordinate(const SidePartition& part, int l, int n) {
    if (part.dot.empty()) return std::nullopt;
    Subset probe(part.dot.front(), n);
    WalkProfile profile = walk_profile(probe);
    int s = (profile.first_hit[static_cast<std::size_t>(l)] - l) / 2;
    if (l + 2 * s > n) return std::nullopt;
    for (const std::vector<std::uint32_t>* group : {&part.dot, &part.ddot}) {
        for (std::uint32_t m : *group) {
            if (Subset(m, n).prefix_count(l + 2 * s) != l + s) return std::nullopt;
        }
    }
    return s;
}

// Largest index whose boundary walk is a member; none when the first walk
// is already absent. Membership is monotone decreasing in the index for
// shifted up-closed families, so the first gap ends the run.
std::optional<int> max_member_index(const SetFamily& family, int t, int s,
                                    DWalkVariant variant) {
    int best = 0;
    for (int i = 1; i <= d_walk_i_max(family.n(), t, s); ++i) {
        if (!family.contains(d_walk(family.n(), t, s, i, variant).bits)) break;
        best = i;
    }
    if (best == 0) return std::nullopt;
    return best;
}

}

PairClassification classify_pair(const SetFamily& a, const SetFamily& b,
                                 int t, int r) {
    if (t < 1 || r < 0) {
        throw std::domain_error("classify_pair needs t >= 1, r >= 0");
    }
    if (a.n() != b.n()) throw std::domain_error("ground sets differ");
    if (a.empty() || b.empty() || !a.is_shifted() || !b.is_shifted() ||
        !a.is_up_closed() || !b.is_up_closed() ||
        !cross_t_intersecting(a, b, t)) {
        throw std::domain_error("classify_pair needs a t-nice pair");
    }
    const SetFamily* first = &a;
    const SetFamily* second = &b;
    PairClassification out;
    out.u = family_lambda(a);
    out.v = family_lambda(b);
    if (out.u > out.v) {
        std::swap(out.u, out.v);
        std::swap(first, second);
        out.swapped = true;
    }
    if (out.u + out.v != 2 * t) return out;
    SidePartition part_a = split_by_line(*first, out.u);
    SidePartition part_b = split_by_line(*second, out.v);
    if (part_a.dot.empty() || part_b.dot.empty()) return out;
    out.s = line_coordinate(part_a, out.u, first->n());
    out.s_prime = line_coordinate(part_b, out.v, second->n());
    out.case_ = PairCase::NE;
    if (!out.s || !out.s_prime ||
        2 * (*out.s - *out.s_prime) != out.v - out.u) {
        return out;
    }
    for (const std::pair<int, int>& pair : r_ex(r)) {
        if (pair.first == *out.s && pair.second == *out.s_prime) {
            out.in_r_ex = true;
            break;
        }
    }
    if (out.in_r_ex && *out.s == *out.s_prime) {
        out.case_ = PairCase::DE;
        out.I = max_member_index(*first, out.u, *out.s, DWalkVariant::plain);
        out.J = max_member_index(*second, out.v, *out.s_prime, DWalkVariant::plain);
    } else if (out.in_r_ex && *out.s == *out.s_prime + 1) {
        out.case_ = PairCase::NDE;
        out.I = max_member_index(*first, out.u, *out.s, DWalkVariant::plain);
        out.J = max_member_index(*second, out.v, *out.s_prime, DWalkVariant::tilde_);
    }
    return out;
}

const char* pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::NE: return "NE";
        case PairCase::DE: return "DE";
        case PairCase::NDE: return "NDE";
        case PairCase::degenerate: return "degenerate";
    }
    return "degenerate";
}

}
