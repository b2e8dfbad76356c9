#pragma once

#include "aklab/family.hpp"
#include "aklab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aklab {

// mu_p(F_r^t) in closed form: sum_{i=0}^{r} C(t+2r, i) p^{t+2r-i} q^i.
// Independent of the ground set size for any n >= t+2r.
Rational closed_form_measure(int t, int r, const Rational& p);

// Sign of mu_p(F^t_{r+1}) - mu_p(F^t_r), computed by exact subtraction.
// Coincides with the sign of p - (r+1)/(t+2r+1).
enum class Sign { negative, zero, positive };

Sign threshold_sign(int t, int r, const Rational& p);
const char* sign_name(Sign s);

// h(i, j) = p/q^{i+1} + C(i+2j, j) p^j.
Rational h_eval(int i, int j, const Rational& p);

// g(s, s') = h(u,s) h(v,s') p^{2t} / mu_p(F_r^t)^2 with u = t-(s-s') and
// v = t+(s-s'). Zero when s or s' is negative.
Rational g_eval(int t, int r, int s, int s_prime, const Rational& p);

// Exact evaluation of the g-comparison chains over the small-s grid
// S = {s : 0 <= s < 2e(r+1)}, plus the nine chain starting points with
// their large-t limits:
//   (i)   g(s,s') > g(s+1,s'-1) for s >= s' > 0, s + s' <= 2(r+2)
//   (ii)  g(s,s) <= max{g(r-2,r-2), g(r+2,r+2)}, s in S minus {r-1,r,r+1}
//   (iii) g(s,s-1) <= max{g(r-1,r-2), g(r+2,r+1)}, s in S minus {0,r,r+1}
// Start points whose limit needs r in a denominator are dropped at r = 0.
struct GComparison {
    std::string label;
    Rational lhs;
    Rational rhs;
    bool holds;
};

struct GStartPoint {
    std::string label;
    int s;
    int s_prime;
    Rational value;
    Rational limit;
};

struct GRelationsReport {
    int s_max;  // largest s in the grid S
    std::vector<GComparison> claim_i;
    std::vector<GComparison> claim_ii;
    std::vector<GComparison> claim_iii;
    std::vector<GStartPoint> start_points;
};

GRelationsReport g_relations(int t, int r, const Rational& p);

// Normalized measures of a pair against the extremal pair (F^u_s, F^v_{s'})
// with u = t-(s-s'), v = t+(s-s'):
//   X       = p^{t-u} mu(A)            + p^{t-v} mu(B)
//   X_F     = p^{t-u} mu(F^u_s)        + p^{t-v} mu(F^v_{s'})
//   X_Delta = p^{t-u} mu(A dif F^u_s)  + p^{t-v} mu(B dif F^v_{s'})
//   X_star  = p^{t-u} mu(A \ F^u_s)    + p^{t-v} mu(B \ F^v_{s'})
// (dif = symmetric difference). Always X_Delta = X_F + 2 X_star - X.
struct XReport {
    Rational x;
    Rational x_f;
    Rational x_delta;
    Rational x_star;
    Rational weight_a;  // p^{t-u}
    Rational weight_b;  // p^{t-v}
};

XReport x_quantities(const SetFamily& a, const SetFamily& b, int t, int s,
                     int s_prime, const Rational& p);

// Exact ratios against their first-order predictions:
//   pair_rp1_r:      mu(F^{t-1}_{r+1}) mu(F^{t+1}_r) / mu(F^t_r)^2  ~ tpq/(r+1)
//   pair_r_rm1:      mu(F^{t-1}_r) mu(F^{t+1}_{r-1}) / mu(F^t_r)^2  ~ r/(tpq)
//   frt_rp1_over_r:  mu(F^t_{r+1}) / mu(F^t_r)                      ~ tpq/(r+1)
//   frt_rm1_over_r:  mu(F^t_{r-1}) / mu(F^t_r)                      ~ r/(tpq)
// Rows needing r-1 are dropped at r = 0.
struct RatioReport {
    std::string label;
    Rational exact;
    double prediction;
};

std::vector<RatioReport> ratio_report(int t, int r, const Rational& p);

// Walk-count bounds around the boundary-walk threshold I, plus the two
// endpoint inequalities evaluated at r := s:
//   eq18_upper:    (C(t+2s-1,s) - C(t+2s-1,s-1) - C(t+s-1,s)) p^{t+s} q^s
//   eq19_lower:    C(t+s-1,s) p^{t+s} q^{s+I+1} (1 - alpha)
//   eq20_upper:    alpha^{t+I}
//   claim21_first:  p(1-p) > r/(t+3r)                  at p = r/(t+2r-1)
//   claim21_second: p(1-p) < (r+1)(t+1)/((t+2r+1)(t+r+1)) at p = (r+1)/(t+2r+1)
struct BoundReport {
    Rational eq18_upper;
    Rational eq19_lower;
    Rational eq20_upper;
    bool claim21_first;
    bool claim21_second;
};

BoundReport bound_report(int n, int t, int s, int I, const Rational& p);

bool claim21_first(int t, int r);
bool claim21_second(int t, int r);

// 2 (1 - sqrt(1-delta)) / (1 - 2 epsilon1). Exact when 1-delta is a
// perfect rational square; otherwise a directed-rounding enclosure with
// exact unset, of width at most 2^-127 / (1 - 2 epsilon1): the root is
// bracketed to one part in 2^128 and scaled by the leading factor.
struct BudgetValue {
    std::optional<Rational> exact;
    Rational lo;
    Rational hi;
};

BudgetValue weakstability_budget(const Rational& delta, const Rational& epsilon1);

}
