#include "aklab/walks.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace aklab {

WalkProfile walk_profile(const Subset& s) {
    WalkProfile out;
    out.line_hits.assign(static_cast<std::size_t>(s.n) + 1, 0);
    out.first_hit.assign(static_cast<std::size_t>(s.n) + 1, -1);
    out.max_line = 0;
    int d = 0;
    out.line_hits[0] = 1;
    out.first_hit[0] = 0;
    for (int k = 1; k <= s.n; ++k) {
        d += s.contains(k) ? 1 : -1;
        if (d >= 0) {
            ++out.line_hits[static_cast<std::size_t>(d)];
            if (out.first_hit[static_cast<std::size_t>(d)] < 0) {
                out.first_hit[static_cast<std::size_t>(d)] = k;
            }
            if (d > out.max_line) out.max_line = d;
        }
    }
    return out;
}

int max_line(const Subset& s) {
    int d = 0;
    int best = 0;
    for (int k = 1; k <= s.n; ++k) {
        d += s.contains(k) ? 1 : -1;
        if (d > best) best = d;
    }
    return best;
}

int family_lambda(const SetFamily& family) {
    if (family.empty()) {
        throw std::domain_error("lambda of the empty family is unbounded");
    }
    int best = family.n() + 1;
    for (std::uint32_t m : family.masks()) {
        int l = max_line(Subset(m, family.n()));
        if (l < best) best = l;
    }
    return best;
}

BigInt restricted_walk_count(int l, int s) {
    if (l < 0 || s < 0) {
        throw std::domain_error("restricted_walk_count needs l, s >= 0");
    }
    return binomial(l + 2 * s, s) - binomial(l + 2 * s, s - 1);
}

Rational f_line_measure(int n, int l, const Rational& p) {
    if (n < 0 || l < 0) {
        throw std::domain_error("f_line_measure needs n, l >= 0");
    }
    if (p <= 0 || p >= 1) {
        throw std::domain_error("f_line_measure needs 0 < p < 1");
    }
    if (l == 0) return Rational(1);
    if (l > n) return Rational(0);
    const BigInt a = p.get_num();
    const BigInt b = p.get_den();
    const BigInt c = b - a;
    std::vector<BigInt> b_pow(static_cast<std::size_t>(n) + 1);
    b_pow[0] = 1;
    for (int k = 1; k <= n; ++k) b_pow[static_cast<std::size_t>(k)] = b_pow[static_cast<std::size_t>(k - 1)] * b;
    // alive[d + n] holds the total weight a^ups c^rights of k-step walks at
    // height d that never reached l. A walk absorbed at step k contributes
    // its weight times b^(n-k), the weight of all possible continuations.
    std::vector<BigInt> alive(static_cast<std::size_t>(2 * n + 1));
    std::vector<BigInt> next(static_cast<std::size_t>(2 * n + 1));
    alive[static_cast<std::size_t>(n)] = 1;
    BigInt absorbed = 0;
    for (int k = 1; k <= n; ++k) {
        for (int d = -k; d <= std::min(k, l); ++d) {
            std::size_t idx = static_cast<std::size_t>(d + n);
            BigInt w = 0;
            if (d - 1 >= -n) w += alive[idx - 1] * a;
            if (d + 1 <= n) w += alive[idx + 1] * c;
            if (d == l) {
                absorbed += w * b_pow[static_cast<std::size_t>(n - k)];
                next[idx] = 0;
            } else {
                next[idx] = w;
            }
        }
        std::size_t lo = static_cast<std::size_t>(n - k);
        std::size_t hi = static_cast<std::size_t>(n + std::min(k, l));
        for (std::size_t i = lo; i <= hi; ++i) {
            alive[i] = next[i];
            next[i] = 0;
        }
    }
    Rational out(absorbed, b_pow[static_cast<std::size_t>(n)]);
    out.canonicalize();
    return out;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream: trial i draws mix64 of a per-trial state advanced
// by the golden-ratio increment, so trial results depend only on (seed, i).
struct TrialRng {
    std::uint64_t state;
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state(mix64(seed + 0x9e3779b97f4a7c15ULL * (trial + 1))) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64(state);
    }
};

std::uint64_t run_block(std::uint64_t p_threshold, int l, int steps,
                        std::uint64_t seed, std::uint64_t first,
                        std::uint64_t count) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (l == 0) {
            ++hits;
            continue;
        }
        TrialRng rng(seed, first + i);
        int d = 0;
        for (int k = 1; k <= steps; ++k) {
            d += (rng.next() < p_threshold) ? 1 : -1;
            if (d == l) {
                ++hits;
                break;
            }
            if (d + (steps - k) < l) break;
        }
    }
    return hits;
}

}

SimResult simulate_hits(const Rational& p, int l, int steps,
                        std::uint64_t trials, std::uint64_t seed, int jobs) {
    if (trials == 0) throw std::domain_error("simulate_hits needs trials >= 1");
    if (l < 0 || steps < 0) {
        throw std::domain_error("simulate_hits needs l, steps >= 0");
    }
    if (p <= 0 || p >= 1) {
        throw std::domain_error("simulate_hits needs 0 < p < 1");
    }
    if (jobs < 1) jobs = 1;
    // floor(p * 2^64) fits in 64 bits since p < 1; the rounding biases each
    // draw by less than 2^-64.
    BigInt scaled = (p.get_num() << 64) / p.get_den();
    std::uint64_t p_threshold = 0;
    mpz_export(&p_threshold, nullptr, -1, sizeof(p_threshold), 0, 0,
               scaled.get_mpz_t());
    std::uint64_t total_hits = 0;
    if (jobs == 1 || trials < 1024) {
        total_hits = run_block(p_threshold, l, steps, seed, 0, trials);
    } else {
        std::vector<std::uint64_t> partial(static_cast<std::size_t>(jobs), 0);
        std::vector<std::thread> workers;
        std::uint64_t per = trials / static_cast<std::uint64_t>(jobs);
        std::uint64_t extra = trials % static_cast<std::uint64_t>(jobs);
        std::uint64_t first = 0;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t count = per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            workers.emplace_back([&partial, w, p_threshold, l, steps, seed,
                                  first, count] {
                partial[static_cast<std::size_t>(w)] =
                    run_block(p_threshold, l, steps, seed, first, count);
            });
            first += count;
        }
        for (std::thread& worker : workers) worker.join();
        for (std::uint64_t h : partial) total_hits += h;
    }
    SimResult out;
    out.trials = trials;
    out.estimate = static_cast<double>(total_hits) / static_cast<double>(trials);
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                              static_cast<double>(trials));
    return out;
}

}
