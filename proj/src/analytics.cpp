#include "aklab/analytics.hpp"

#include "aklab/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace aklab {

namespace {

void require_probability(const Rational& p) {
    if (p <= 0 || p >= 1) throw std::domain_error("p must satisfy 0 < p < 1");
}

}

Rational closed_form_measure(int t, int r, const Rational& p) {
    if (t < 1 || r < 0) {
        throw std::domain_error("closed_form_measure needs t >= 1, r >= 0");
    }
    require_probability(p);
    Rational q = Rational(1) - p;
    Rational sum = 0;
    for (int i = 0; i <= r; ++i) {
        sum += Rational(binomial(t + 2 * r, i)) *
               pow_rational(p, t + 2 * r - i) * pow_rational(q, i);
    }
    return sum;
}

Sign threshold_sign(int t, int r, const Rational& p) {
    Rational diff = closed_form_measure(t, r + 1, p) - closed_form_measure(t, r, p);
    int c = sgn(diff);
    if (c < 0) return Sign::negative;
    if (c > 0) return Sign::positive;
    return Sign::zero;
}

const char* sign_name(Sign s) {
    switch (s) {
        case Sign::negative: return "Negative";
        case Sign::zero: return "Zero";
        case Sign::positive: return "Positive";
    }
    return "Zero";
}

Rational h_eval(int i, int j, const Rational& p) {
    if (i < 0 || j < 0) throw std::domain_error("h_eval needs i, j >= 0");
    require_probability(p);
    Rational q = Rational(1) - p;
    return p / pow_rational(q, i + 1) + Rational(binomial(i + 2 * j, j)) * pow_rational(p, j);
}

Rational g_eval(int t, int r, int s, int s_prime, const Rational& p) {
    if (t < 1 || r < 0) throw std::domain_error("g_eval needs t >= 1, r >= 0");
    require_probability(p);
    if (s < 0 || s_prime < 0) return Rational(0);
    int u = t - (s - s_prime);
    int v = t + (s - s_prime);
    if (u < 1 || v < 1) throw std::domain_error("g_eval needs u, v >= 1");
    Rational denom = closed_form_measure(t, r, p);
    return h_eval(u, s, p) * h_eval(v, s_prime, p) * pow_rational(p, 2 * t) /
           (denom * denom);
}

namespace {

std::string g_label(int s, int s_prime) {
    return "g(" + std::to_string(s) + "," + std::to_string(s_prime) + ")";
}

}

GRelationsReport g_relations(int t, int r, const Rational& p) {
    if (t < 1 || r < 0) throw std::domain_error("g_relations needs t >= 1, r >= 0");
    require_probability(p);
    GRelationsReport report;
    // S = {s : 0 <= s < 2e(r+1)}; 2e(r+1) is irrational, so the floor is
    // the largest member.
    report.s_max = static_cast<int>(2.0L * std::exp(1.0L) * (r + 1));

    Rational denom = closed_form_measure(t, r, p);
    Rational factor = pow_rational(p, 2 * t) / (denom * denom);
    auto g = [&](int s, int s_prime) -> Rational {
        if (s < 0 || s_prime < 0) return Rational(0);
        int u = t - (s - s_prime);
        int v = t + (s - s_prime);
        if (u < 1 || v < 1) throw std::domain_error("g_relations needs u, v >= 1");
        return h_eval(u, s, p) * h_eval(v, s_prime, p) * factor;
    };

    // The descent comparisons run along anti-diagonals s + s' = const, and
    // every pair the reduction diagram displays lies on an anti-diagonal
    // through (r+2, r+2) or below, so s + s' <= 2(r+2).  Beyond that band
    // the p/q^{u+1} correction term dominates the binomial term for
    // moderate t and the orderings genuinely reverse, so they are not
    // reported here.
    for (int s = 1; s <= report.s_max; ++s) {
        for (int s_prime = 1; s_prime <= s && s + s_prime <= 2 * (r + 2);
             ++s_prime) {
            Rational lhs = g(s, s_prime);
            Rational rhs = g(s + 1, s_prime - 1);
            report.claim_i.push_back(
                {g_label(s, s_prime) + ">" + g_label(s + 1, s_prime - 1), lhs,
                 rhs, lhs > rhs});
        }
    }

    Rational diag_cap = std::max(g(r - 2, r - 2), g(r + 2, r + 2));
    for (int s = 0; s <= report.s_max; ++s) {
        if (s >= r - 1 && s <= r + 1) continue;
        Rational lhs = g(s, s);
        report.claim_ii.push_back(
            {g_label(s, s) + "<=max(" + g_label(r - 2, r - 2) + "," +
                 g_label(r + 2, r + 2) + ")",
             lhs, diag_cap, lhs <= diag_cap});
    }

    Rational off_cap = std::max(g(r - 1, r - 2), g(r + 2, r + 1));
    for (int s = 1; s <= report.s_max; ++s) {
        if (s == r || s == r + 1) continue;
        Rational lhs = g(s, s - 1);
        report.claim_iii.push_back(
            {g_label(s, s - 1) + "<=max(" + g_label(r - 1, r - 2) + "," +
                 g_label(r + 2, r + 1) + ")",
             lhs, off_cap, lhs <= off_cap});
    }

    // Chain starting points adjacent to the excluded extremal block, with
    // the large-t limit of each; entries with an undefined limit are
    // dropped at r = 0, and negative limit formulas clamp to 0 alongside
    // the g(., negative) = 0 convention.
    struct StartSpec {
        int s, s_prime;
        int limit_num, limit_den;
        bool squared;
    };
    const StartSpec specs[] = {
        {r - 2, r - 2, r - 1, r, true},
        {r + 2, r + 2, r + 1, r + 2, true},
        {r - 1, r - 2, r - 1, r, false},
        {r + 2, r + 1, r + 1, r + 2, false},
        {r + 2, r, r + 1, r + 2, false},
        {r + 2, r - 1, r, r + 2, false},
        {r + 1, r - 1, r, r + 1, false},
        {r + 1, r - 2, r - 1, r + 1, false},
        {r, r - 2, r - 1, r, false},
    };
    for (const StartSpec& spec : specs) {
        if (spec.limit_den == 0) continue;
        Rational limit(std::max(spec.limit_num, 0), spec.limit_den);
        limit.canonicalize();
        if (spec.squared) limit *= limit;
        report.start_points.push_back({g_label(spec.s, spec.s_prime), spec.s,
                                       spec.s_prime, g(spec.s, spec.s_prime),
                                       limit});
    }
    return report;
}

XReport x_quantities(const SetFamily& a, const SetFamily& b, int t, int s,
                     int s_prime, const Rational& p) {
    if (t < 1 || s < 0 || s_prime < 0) {
        throw std::domain_error("x_quantities needs t >= 1, s, s' >= 0");
    }
    require_probability(p);
    if (std::abs(s - s_prime) > t - 1) {
        throw std::domain_error("x_quantities needs |s - s'| <= t - 1");
    }
    if (a.n() != b.n()) throw std::domain_error("ground sets differ");
    int u = t - (s - s_prime);
    int v = t + (s - s_prime);
    if (t + s + s_prime > a.n()) {
        throw std::domain_error("ground set too small for the reference pair");
    }
    SetFamily ref_a = frt(a.n(), u, s);
    SetFamily ref_b = frt(b.n(), v, s_prime);
    XReport out;
    out.weight_a = pow_rational(p, t - u);
    out.weight_b = pow_rational(p, t - v);
    out.x = out.weight_a * a.measure(p) + out.weight_b * b.measure(p);
    out.x_f = out.weight_a * ref_a.measure(p) + out.weight_b * ref_b.measure(p);
    out.x_delta = out.weight_a * family_sym_diff(a, ref_a).measure(p) +
                  out.weight_b * family_sym_diff(b, ref_b).measure(p);
    out.x_star = out.weight_a * family_difference(a, ref_a).measure(p) +
                 out.weight_b * family_difference(b, ref_b).measure(p);
    return out;
}

std::vector<RatioReport> ratio_report(int t, int r, const Rational& p) {
    if (t < 2 || r < 0) throw std::domain_error("ratio_report needs t >= 2, r >= 0");
    require_probability(p);
    Rational q = Rational(1) - p;
    Rational base = closed_form_measure(t, r, p);
    double tpq = mpq_get_d(Rational(Rational(t) * p * q).get_mpq_t());
    std::vector<RatioReport> out;
    out.push_back({"pair_rp1_r",
                   closed_form_measure(t - 1, r + 1, p) *
                       closed_form_measure(t + 1, r, p) / (base * base),
                   tpq / (r + 1)});
    if (r >= 1) {
        out.push_back({"pair_r_rm1",
                       closed_form_measure(t - 1, r, p) *
                           closed_form_measure(t + 1, r - 1, p) / (base * base),
                       r / tpq});
    }
    out.push_back({"frt_rp1_over_r", closed_form_measure(t, r + 1, p) / base,
                   tpq / (r + 1)});
    if (r >= 1) {
        out.push_back({"frt_rm1_over_r", closed_form_measure(t, r - 1, p) / base,
                       r / tpq});
    }
    return out;
}

bool claim21_first(int t, int r) {
    if (t < 1 || r < 0) throw std::domain_error("claim needs t >= 1, r >= 0");
    if (r == 0) return false;  // p = r/(t+2r-1) degenerates to 0
    Rational p(r, t + 2 * r - 1);
    p.canonicalize();
    Rational rhs(r, t + 3 * r);
    rhs.canonicalize();
    return p * (Rational(1) - p) > rhs;
}

bool claim21_second(int t, int r) {
    if (t < 1 || r < 0) throw std::domain_error("claim needs t >= 1, r >= 0");
    Rational p(r + 1, t + 2 * r + 1);
    p.canonicalize();
    Rational rhs(BigInt(r + 1) * (t + 1), BigInt(t + 2 * r + 1) * (t + r + 1));
    rhs.canonicalize();
    return p * (Rational(1) - p) < rhs;
}

BoundReport bound_report(int n, int t, int s, int I, const Rational& p) {
    if (t < 1 || s < 0) throw std::domain_error("bound_report needs t >= 1, s >= 0");
    require_probability(p);
    if (I < 1 || I > n - t - 2 * s - 1) {
        throw std::domain_error("bound_report needs 1 <= I <= n - t - 2s - 1");
    }
    Rational q = Rational(1) - p;
    Rational alpha = p / q;
    BoundReport out;
    out.eq18_upper = Rational(binomial(t + 2 * s - 1, s) -
                              binomial(t + 2 * s - 1, s - 1) -
                              binomial(t + s - 1, s)) *
                     pow_rational(p, t + s) * pow_rational(q, s);
    out.eq19_lower = Rational(binomial(t + s - 1, s)) * pow_rational(p, t + s) *
                     pow_rational(q, s + I + 1) * (Rational(1) - alpha);
    out.eq20_upper = pow_rational(alpha, t + I);
    out.claim21_first = claim21_first(t, s);
    out.claim21_second = claim21_second(t, s);
    return out;
}

BudgetValue weakstability_budget(const Rational& delta, const Rational& epsilon1) {
    if (delta <= 0 || delta >= 1) {
        throw std::domain_error("budget needs 0 < delta < 1");
    }
    if (epsilon1 <= 0 || epsilon1 * 2 >= 1) {
        throw std::domain_error("budget needs 0 < epsilon1 < 1/2");
    }
    Rational x = Rational(1) - delta;
    x.canonicalize();
    Rational scale = Rational(2) / (Rational(1) - Rational(2) * epsilon1);
    BudgetValue out;
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) &&
        mpz_perfect_square_p(den.get_mpz_t())) {
        BigInt sqrt_num, sqrt_den;
        mpz_sqrt(sqrt_num.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sqrt_den.get_mpz_t(), den.get_mpz_t());
        Rational root(sqrt_num, sqrt_den);
        root.canonicalize();
        Rational value = scale * (Rational(1) - root);
        out.exact = value;
        out.lo = value;
        out.hi = value;
        return out;
    }
    // sqrt(num/den) = sqrt(num*den)/den; bracket the integer square root at
    // scale 2^128 so the enclosure width is den^-1 2^-128 before scaling.
    BigInt shifted = num * den;
    shifted <<= 256;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
    Rational low_root(root, den << 128);
    low_root.canonicalize();
    Rational high_root(root + 1, den << 128);
    high_root.canonicalize();
    out.lo = scale * (Rational(1) - high_root);
    if (out.lo < 0) out.lo = 0;
    out.hi = scale * (Rational(1) - low_root);
    return out;
}

}
