#include "aklab/search.hpp"

#include "aklab/analytics.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace aklab {

SetFamily best_response(const SetFamily& a, int t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    int n = a.n();
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        bool ok = true;
        for (std::uint32_t s : a.masks()) {
            if (std::popcount(m & s) < t) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(m);
    }
    return SetFamily(std::move(out), n);
}

AkReference ak_reference(int n, int t, const Rational& p) {
    check_ground_size(n);
    if (t < 1 || t > n) throw std::domain_error("ak_reference needs 1 <= t <= n");
    if (p <= 0 || p >= 1) throw std::domain_error("ak_reference needs 0 < p < 1");
    AkReference out;
    for (int r = 0; t + 2 * r <= n; ++r) {
        out.per_r.emplace_back(r, closed_form_measure(t, r, p));
    }
    out.best_value = out.per_r.front().second;
    for (const auto& entry : out.per_r) {
        if (entry.second > out.best_value) out.best_value = entry.second;
    }
    for (const auto& entry : out.per_r) {
        if (entry.second == out.best_value) out.best_rs.push_back(entry.first);
    }
    return out;
}

namespace {

// Depth-first decisions over all candidate member sets in
// decreasing-cardinality, then lexicographic order. Deciding large sets
// first keeps the structural constraints one-directional: excluding a set
// can only force later (smaller or less compressed) sets out, so a set
// still alive when reached is safe to include.
class UpSetSearch {
  public:
    UpSetSearch(int n, int t, const Rational& p, bool shifted, bool cross)
        : n_(n), t_(t), shifted_(shifted), cross_(cross),
          full_((std::uint32_t{1} << n) - 1u) {
        const BigInt a = p.get_num();
        const BigInt b = p.get_den();
        const BigInt c = b - a;
        w_.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            BigInt a_pow, c_pow;
            mpz_pow_ui(a_pow.get_mpz_t(), a.get_mpz_t(),
                       static_cast<unsigned long>(k));
            mpz_pow_ui(c_pow.get_mpz_t(), c.get_mpz_t(),
                       static_cast<unsigned long>(n - k));
            w_[static_cast<std::size_t>(k)] = a_pow * c_pow;
        }
        mpz_pow_ui(den_.get_mpz_t(), b.get_mpz_t(),
                   static_cast<unsigned long>(n));

        std::size_t total = std::size_t{1} << n;
        state_.assign(total, 1);
        for (std::uint32_t m = 0; m < total; ++m) {
            if (std::popcount(m) >= t) {
                order_.push_back(m);
                state_[m] = 0;
            }
        }
        std::sort(order_.begin(), order_.end(),
                  [](std::uint32_t x, std::uint32_t y) {
                      int px = std::popcount(x);
                      int py = std::popcount(y);
                      if (px != py) return px > py;
                      return lex_less(x, y);
                  });

        if (cross_) {
            br_alive_.assign(total, 1);
            br_w_ = 0;
            for (std::uint32_t m = 0; m < total; ++m) br_w_ += weight(m);
            alive_w_ = 0;
            for (std::uint32_t m : order_) alive_w_ += weight(m);
        } else {
            // A t-intersecting family holds at most one of each
            // complementary pair; the sum of per-pair maxima bounds any
            // completion from the alive pool.
            pair_bound_ = 0;
            for (std::uint32_t m = 0; m < total; ++m) {
                std::uint32_t comp = full_ ^ m;
                if (m > comp) continue;
                bool m_alive = state_[m] == 0;
                bool c_alive = state_[comp] == 0;
                if (m_alive && c_alive) {
                    pair_bound_ += std::max(weight(m), weight(comp));
                } else if (m_alive) {
                    pair_bound_ += weight(m);
                } else if (c_alive) {
                    pair_bound_ += weight(comp);
                }
            }
        }
    }

    void seed(const Rational& scaled_best) {
        Rational tmp = scaled_best * Rational(den_);
        if (cross_) tmp *= Rational(den_);
        if (tmp.get_den() != 1) {
            throw std::logic_error("seed value does not live on the weight grid");
        }
        best_ = tmp.get_num();
    }

    void run() { recurse(0); }

    Rational value() const {
        Rational out(best_, den_);
        if (cross_) out /= Rational(den_);
        out.canonicalize();
        return out;
    }

    SetFamily argmax() const {
        if (!have_argmax_) {
            throw std::logic_error("search finished without reaching its seed value");
        }
        return SetFamily(best_chosen_, n_);
    }

    std::uint64_t nodes() const { return nodes_; }

  private:
    const BigInt& weight(std::uint32_t m) const {
        return w_[static_cast<std::size_t>(std::popcount(m))];
    }

    void pair_remove(std::uint32_t m) {
        std::uint32_t comp = full_ ^ m;
        if (state_[comp] == 0) {
            pair_bound_ -= std::max(weight(m), weight(comp));
            pair_bound_ += weight(comp);
        } else {
            pair_bound_ -= weight(m);
        }
    }

    void pair_restore(std::uint32_t m) {
        std::uint32_t comp = full_ ^ m;
        if (state_[comp] == 0) {
            pair_bound_ += std::max(weight(m), weight(comp));
            pair_bound_ -= weight(comp);
        } else {
            pair_bound_ += weight(m);
        }
    }

    void mark_dead(std::uint32_t m) {
        if (cross_) {
            alive_w_ -= weight(m);
        } else {
            pair_remove(m);
        }
        state_[m] = 1;
        kill_trail_.push_back(m);
    }

    // Excluding a set forces out every subset (up-closure) and, in shifted
    // mode, every set that compresses onto a forced-out set.
    void kill(std::uint32_t m) {
        pending_.clear();
        pending_.push_back(m);
        while (!pending_.empty()) {
            std::uint32_t x = pending_.back();
            pending_.pop_back();
            if (state_[x] != 0) continue;
            mark_dead(x);
            for (std::uint32_t rest = x; rest; rest &= rest - 1) {
                std::uint32_t sub = x ^ (rest & ~(rest - 1u));
                if (state_[sub] == 0) pending_.push_back(sub);
            }
            if (shifted_) {
                for (std::uint32_t ibits = x; ibits; ibits &= ibits - 1) {
                    std::uint32_t ibit = ibits & ~(ibits - 1u);
                    std::uint32_t j_candidates = full_ & ~x & ~(ibit | (ibit - 1u));
                    for (std::uint32_t jbits = j_candidates; jbits;
                         jbits &= jbits - 1) {
                        std::uint32_t jbit = jbits & ~(jbits - 1u);
                        std::uint32_t pre = (x ^ ibit) | jbit;
                        if (state_[pre] == 0) pending_.push_back(pre);
                    }
                }
            }
        }
    }

    void undo_kills(std::size_t target) {
        while (kill_trail_.size() > target) {
            std::uint32_t m = kill_trail_.back();
            kill_trail_.pop_back();
            state_[m] = 0;
            if (cross_) {
                alive_w_ += weight(m);
            } else {
                pair_restore(m);
            }
        }
    }

    void include(std::uint32_t s) {
        chosen_stack_.push_back(s);
        chosen_w_ += weight(s);
        if (cross_) {
            alive_w_ -= weight(s);
            state_[s] = 2;
            std::size_t total = std::size_t{1} << n_;
            for (std::uint32_t m = 0; m < total; ++m) {
                if (br_alive_[m] && std::popcount(m & s) < t_) {
                    br_alive_[m] = 0;
                    br_w_ -= weight(m);
                    br_trail_.push_back(m);
                }
            }
        } else {
            pair_remove(s);
            state_[s] = 2;
            for (std::uint32_t m : order_) {
                if (state_[m] == 0 && std::popcount(m & s) < t_) kill(m);
            }
        }
    }

    void undo_include(std::uint32_t s, std::size_t kills, std::size_t brs) {
        undo_kills(kills);
        if (cross_) {
            while (br_trail_.size() > brs) {
                std::uint32_t m = br_trail_.back();
                br_trail_.pop_back();
                br_alive_[m] = 1;
                br_w_ += weight(m);
            }
            state_[s] = 0;
            alive_w_ += weight(s);
        } else {
            state_[s] = 0;
            pair_restore(s);
        }
        chosen_w_ -= weight(s);
        chosen_stack_.pop_back();
    }

    void leaf() {
        if (cross_) {
            value_tmp_ = chosen_w_;
            value_tmp_ *= br_w_;
        } else {
            value_tmp_ = chosen_w_;
        }
        int rel = cmp(value_tmp_, best_);
        if (rel < 0) return;
        if (rel > 0) {
            best_ = value_tmp_;
            best_chosen_ = chosen_stack_;
            have_argmax_ = true;
            return;
        }
        if (!have_argmax_) {
            best_chosen_ = chosen_stack_;
            have_argmax_ = true;
            return;
        }
        SetFamily candidate(chosen_stack_, n_);
        SetFamily incumbent(best_chosen_, n_);
        if (canonical_less(candidate, incumbent)) best_chosen_ = chosen_stack_;
    }

    void recurse(std::size_t idx) {
        ++nodes_;
        bound_tmp_ = chosen_w_;
        if (cross_) {
            bound_tmp_ += alive_w_;
            bound_tmp_ *= br_w_;
        } else {
            bound_tmp_ += pair_bound_;
        }
        if (bound_tmp_ < best_) return;
        while (idx < order_.size() && state_[order_[idx]] != 0) ++idx;
        if (idx == order_.size()) {
            leaf();
            return;
        }
        std::uint32_t s = order_[idx];
        std::size_t kills = kill_trail_.size();
        std::size_t brs = br_trail_.size();
        include(s);
        recurse(idx + 1);
        undo_include(s, kills, brs);
        kill(s);
        recurse(idx + 1);
        undo_kills(kills);
    }

    int n_;
    int t_;
    bool shifted_;
    bool cross_;
    std::uint32_t full_;
    std::vector<BigInt> w_;
    BigInt den_;
    std::vector<std::uint32_t> order_;
    std::vector<char> state_;
    std::vector<char> br_alive_;
    BigInt chosen_w_;
    BigInt pair_bound_;
    BigInt alive_w_;
    BigInt br_w_;
    BigInt best_;
    BigInt bound_tmp_;
    BigInt value_tmp_;
    std::vector<std::uint32_t> chosen_stack_;
    std::vector<std::uint32_t> best_chosen_;
    std::vector<std::uint32_t> kill_trail_;
    std::vector<std::uint32_t> br_trail_;
    std::vector<std::uint32_t> pending_;
    bool have_argmax_ = false;
    std::uint64_t nodes_ = 0;
};

void check_search_size(int n, const SearchOptions& options) {
    if (n <= 6) return;
    if (n == 7 && options.force && options.shifted_only) return;
    if (n == 7) {
        throw std::domain_error(
            "n = 7 needs both force and shifted_only; larger n is unsupported");
    }
    throw std::domain_error("exhaustive search is limited to n <= 7");
}

void check_search_args(int n, int t, const Rational& p) {
    check_ground_size(n);
    if (t < 1 || t > n) throw std::domain_error("search needs 1 <= t <= n");
    if (p <= 0 || p >= 1) throw std::domain_error("search needs 0 < p < 1");
}

}

SearchCertificate max_single(int n, int t, const Rational& p,
                             const SearchOptions& options) {
    check_search_args(n, t, p);
    check_search_size(n, options);
    AkReference ak = ak_reference(n, t, p);
    UpSetSearch search(n, t, p, options.shifted_only, false);
    search.seed(ak.best_value);
    search.run();
    SearchCertificate cert;
    cert.argmax.push_back(search.argmax());
    cert.value = search.value();
    cert.nodes_explored = search.nodes();
    cert.exhaustive = true;
    cert.restricted_to_shifted = options.shifted_only;
    return cert;
}

SearchCertificate max_cross(int n, int t, const Rational& p,
                            const SearchOptions& options) {
    check_search_args(n, t, p);
    check_search_size(n, options);
    AkReference ak = ak_reference(n, t, p);
    UpSetSearch search(n, t, p, options.shifted_only, true);
    search.seed(ak.best_value * ak.best_value);
    search.run();
    SearchCertificate cert;
    SetFamily a = search.argmax();
    cert.argmax.push_back(a);
    cert.argmax.push_back(best_response(a, t));
    cert.value = search.value();
    cert.nodes_explored = search.nodes();
    cert.exhaustive = true;
    cert.restricted_to_shifted = options.shifted_only;
    return cert;
}

}
