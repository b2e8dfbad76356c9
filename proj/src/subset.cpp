#include "aklab/subset.hpp"

#include <algorithm>

namespace aklab {

Subset Subset::from_elements(const std::vector<int>& elements, int n) {
    check_ground_size(n);
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > n) {
            throw std::invalid_argument("element out of range");
        }
        bits |= 1u << (e - 1);
    }
    return Subset(bits, n);
}

int Subset::kth_smallest(int k) const {
    if (k < 1 || k > size()) {
        throw std::out_of_range("no k-th smallest element");
    }
    std::uint32_t rest = bits;
    for (int seen = 1;; ++seen) {
        int e = std::countr_zero(rest) + 1;
        if (seen == k) return e;
        rest &= rest - 1;
    }
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t rest = bits; rest; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

bool shifts_to(const Subset& a, const Subset& b) {
    if (a.n != b.n) throw std::invalid_argument("ground sets differ");
    if (a.size() > b.size()) return false;
    // (a)_i >= (b)_i for all i <= |a| is equivalent to every prefix of [n]
    // holding at least as many elements of b as of a.
    for (int m = 1; m <= a.n; ++m) {
        if (a.prefix_count(m) > b.prefix_count(m)) return false;
    }
    return true;
}

Subset dual_t(const Subset& a, int t) {
    if (t < 1 || a.size() < t) {
        throw std::domain_error("dual needs |A| >= t >= 1");
    }
    std::uint32_t head = (1u << (a.kth_smallest(t) - 1)) - 1u;
    std::uint32_t complement = ~a.bits & ((1u << a.n) - 1u);
    return Subset(head | complement, a.n);
}

std::uint32_t range_mask(int lo, int hi) {
    if (lo > hi) return 0;
    return (1u << hi) - (1u << (lo - 1));
}

std::uint32_t range_mask_step2(int lo, int hi) {
    std::uint32_t out = 0;
    for (int e = lo; e <= hi; e += 2) out |= 1u << (e - 1);
    return out;
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    // Compare sorted element sequences, proper prefixes first. Below the
    // lowest differing bit the sets agree; exactly one holds that bit.
    std::uint32_t low = (a ^ b) & ~((a ^ b) - 1u);
    std::uint32_t above = ~(low - 1u);
    if (a & low) {
        // a owns the smaller differing element; it precedes b unless b has
        // nothing from that element on, i.e. b is a proper prefix of a.
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

}
