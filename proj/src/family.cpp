#include "aklab/family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aklab {

SetFamily::SetFamily(std::vector<std::uint32_t> masks, int n)
    : masks_(std::move(masks)), n_(n) {
    check_ground_size(n);
    std::uint32_t limit = (n == 0) ? 0u : ((1u << n) - 1u);
    for (std::uint32_t m : masks_) {
        if (m & ~limit) {
            throw std::invalid_argument("member has elements outside the ground set");
        }
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
}

SetFamily::SetFamily(const SetFamily& other)
    : masks_(other.masks_),
      n_(other.n_),
      up_closed_cache_(other.up_closed_cache_.load()),
      shifted_cache_(other.shifted_cache_.load()),
      t_cache_(other.t_cache_.load()) {}

SetFamily& SetFamily::operator=(const SetFamily& other) {
    if (this != &other) {
        masks_ = other.masks_;
        n_ = other.n_;
        up_closed_cache_.store(other.up_closed_cache_.load());
        shifted_cache_.store(other.shifted_cache_.load());
        t_cache_.store(other.t_cache_.load());
    }
    return *this;
}

bool SetFamily::contains(std::uint32_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

Rational SetFamily::measure(const Rational& p) const {
    std::vector<long> count(static_cast<std::size_t>(n_) + 1, 0);
    for (std::uint32_t m : masks_) {
        ++count[static_cast<std::size_t>(std::popcount(m))];
    }
    const BigInt a = p.get_num();
    const BigInt b = p.get_den();
    const BigInt c = b - a;
    // Σ_k count[k] a^k c^(n-k), all over b^n.
    BigInt num = 0;
    BigInt a_pow = 1;
    std::vector<BigInt> c_pow(static_cast<std::size_t>(n_) + 1);
    c_pow[0] = 1;
    for (int k = 1; k <= n_; ++k) c_pow[static_cast<std::size_t>(k)] = c_pow[static_cast<std::size_t>(k - 1)] * c;
    for (int k = 0; k <= n_; ++k) {
        if (count[static_cast<std::size_t>(k)] != 0) {
            num += count[static_cast<std::size_t>(k)] * a_pow * c_pow[static_cast<std::size_t>(n_ - k)];
        }
        a_pow *= a;
    }
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n_));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

bool SetFamily::is_t_intersecting(int t) const {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    std::int64_t cached = t_cache_.load();
    if ((cached & 1) && (cached >> 2) == t) return (cached >> 1) & 1;
    bool result = true;
    for (std::size_t i = 0; i < masks_.size() && result; ++i) {
        for (std::size_t j = i; j < masks_.size(); ++j) {
            if (std::popcount(masks_[i] & masks_[j]) < t) {
                result = false;
                break;
            }
        }
    }
    t_cache_.store((static_cast<std::int64_t>(t) << 2) | (static_cast<std::int64_t>(result) << 1) | 1);
    return result;
}

bool SetFamily::is_up_closed() const {
    int cached = up_closed_cache_.load();
    if (cached) return cached == 2;
    std::uint32_t full = (n_ == 0) ? 0u : ((1u << n_) - 1u);
    bool result = true;
    for (std::uint32_t m : masks_) {
        std::uint32_t absent = full & ~m;
        for (std::uint32_t rest = absent; rest && result; rest &= rest - 1) {
            std::uint32_t bit = rest & ~(rest - 1u);
            if (!contains(m | bit)) result = false;
        }
        if (!result) break;
    }
    up_closed_cache_.store(result ? 2 : 1);
    return result;
}

bool SetFamily::is_shifted() const {
    int cached = shifted_cache_.load();
    if (cached) return cached == 2;
    bool result = true;
    for (std::uint32_t m : masks_) {
        for (std::uint32_t rest = m; rest && result; rest &= rest - 1) {
            std::uint32_t jbit = rest & ~(rest - 1u);
            // Candidate replacements: absent elements below j.
            std::uint32_t lower = (jbit - 1u) & ~m;
            for (std::uint32_t low = lower; low; low &= low - 1) {
                std::uint32_t ibit = low & ~(low - 1u);
                if (!contains((m & ~jbit) | ibit)) {
                    result = false;
                    break;
                }
            }
        }
        if (!result) break;
    }
    shifted_cache_.store(result ? 2 : 1);
    return result;
}

bool cross_t_intersecting(const SetFamily& a, const SetFamily& b, int t) {
    if (a.n() != b.n()) throw std::invalid_argument("ground sets differ");
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    for (std::uint32_t ma : a.masks()) {
        for (std::uint32_t mb : b.masks()) {
            if (std::popcount(ma & mb) < t) return false;
        }
    }
    return true;
}

SetFamily shift_ij(const SetFamily& family, int i, int j) {
    if (i < 1 || j <= i || j > family.n()) {
        throw std::invalid_argument("shift needs 1 <= i < j <= n");
    }
    std::uint32_t ibit = 1u << (i - 1);
    std::uint32_t jbit = 1u << (j - 1);
    std::vector<std::uint32_t> out;
    out.reserve(family.size());
    for (std::uint32_t m : family.masks()) {
        std::uint32_t shifted = m;
        if ((m & jbit) && !(m & ibit)) {
            std::uint32_t candidate = (m & ~jbit) | ibit;
            if (!family.contains(candidate)) shifted = candidate;
        }
        out.push_back(shifted);
    }
    return SetFamily(std::move(out), family.n());
}

SetFamily shift_fixpoint(const SetFamily& family) {
    SetFamily current = family;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < current.n() && !changed; ++i) {
            for (int j = i + 1; j <= current.n(); ++j) {
                SetFamily next = shift_ij(current, i, j);
                if (!(next == current)) {
                    current = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
    }
    return current;
}

SetFamily up_closure(const SetFamily& family) {
    int n = family.n();
    std::vector<char> in(std::size_t{1} << n, 0);
    for (std::uint32_t m : family.masks()) in[m] = 1;
    // Scan masks in increasing order; every superset differs by added bits,
    // so marking one-bit extensions transitively covers all of them.
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (!in[m]) continue;
        for (int e = 0; e < n; ++e) in[m | (1u << e)] = 1;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (in[m]) out.push_back(m);
    }
    return SetFamily(std::move(out), n);
}

namespace {

void require_same_ground(const SetFamily& a, const SetFamily& b) {
    if (a.n() != b.n()) throw std::invalid_argument("ground sets differ");
}

}

SetFamily family_union(const SetFamily& a, const SetFamily& b) {
    require_same_ground(a, b);
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.masks().begin(), a.masks().end(), b.masks().begin(),
                   b.masks().end(), std::back_inserter(out));
    return SetFamily(std::move(out), a.n());
}

SetFamily family_intersection(const SetFamily& a, const SetFamily& b) {
    require_same_ground(a, b);
    std::vector<std::uint32_t> out;
    std::set_intersection(a.masks().begin(), a.masks().end(), b.masks().begin(),
                          b.masks().end(), std::back_inserter(out));
    return SetFamily(std::move(out), a.n());
}

SetFamily family_difference(const SetFamily& a, const SetFamily& b) {
    require_same_ground(a, b);
    std::vector<std::uint32_t> out;
    std::set_difference(a.masks().begin(), a.masks().end(), b.masks().begin(),
                        b.masks().end(), std::back_inserter(out));
    return SetFamily(std::move(out), a.n());
}

SetFamily family_sym_diff(const SetFamily& a, const SetFamily& b) {
    require_same_ground(a, b);
    std::vector<std::uint32_t> out;
    std::set_symmetric_difference(a.masks().begin(), a.masks().end(),
                                  b.masks().begin(), b.masks().end(),
                                  std::back_inserter(out));
    return SetFamily(std::move(out), a.n());
}

SetFamily powerset(int n) {
    check_ground_size(n);
    std::vector<std::uint32_t> out(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out[m] = m;
    return SetFamily(std::move(out), n);
}

std::vector<std::uint32_t> minimal_sets(const SetFamily& family) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m : family.masks()) {
        bool minimal = true;
        for (std::uint32_t other : family.masks()) {
            if (other != m && (other & ~m) == 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
    }
    return out;
}

bool canonical_less(const SetFamily& a, const SetFamily& b) {
    std::vector<std::uint32_t> sa = a.masks();
    std::vector<std::uint32_t> sb = b.masks();
    std::sort(sa.begin(), sa.end(), lex_less);
    std::sort(sb.begin(), sb.end(), lex_less);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(),
                                        sb.end(), lex_less);
}

}
