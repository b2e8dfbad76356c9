#pragma once

#include "aklab/family.hpp"
#include "aklab/subset.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace aklab {

// F_r^t over [n]: all F with |F ∩ [t+2r]| >= t+r. Shifted, up-closed and
// t-intersecting; the extremal candidates of the product-measure problem.
SetFamily frt(int n, int t, int r);

// All subsets of [n] whose walk meets the line y = x + l.
SetFamily f_line_family(int n, int l);

// Splits f_line_family(n, l) by hit multiplicity against lines l and l+1:
//   tilde: also meets l+1 (equals f_line_family(n, l+1))
//   dot:   meets l exactly once and never l+1
//   ddot:  meets l at least twice and never l+1
// dot_by_index[i] / ddot_by_index[i] refine by the first hit being at the
// point (i, l+i); indices run 0 .. (n-l)/2.
struct LinePartition {
    SetFamily tilde;
    SetFamily dot;
    SetFamily ddot;
    std::vector<SetFamily> dot_by_index;
    std::vector<SetFamily> ddot_by_index;
};

LinePartition line_partition(int n, int l);

// Boundary walks. The plain walk is
//   D^t_s(i) = [t-1] ∪ [t+s, t+2s] ∪ [t+2s+i+2, n]_2
// and the tilde variant, used on the second family of a non-diagonal pair,
// is
//   [t-2] ∪ [t+s-1, t+2s] ∪ [t+2s+i+2, n]_2
// where [a,b]_2 = {a, a+2, ...} ∩ [a,b]. Both meet the line y = x + t
// exactly once, at (s, t+s), and never meet y = x + t + 1. The index i
// runs over 1 <= i <= i_max = n-t-2s-1; at i_max the trailing progression
// is empty.
enum class DWalkVariant { plain, tilde_ };

Subset d_walk(int n, int t, int s, int i, DWalkVariant variant = DWalkVariant::plain);
int d_walk_i_max(int n, int t, int s);

// The measure-optimal-but-perturbed pair around F_r^t: remove the bare
// (t+r)-subsets of the window [t+2r], add G ∪ [t+2r+1, n] for every
// (t+r-1)-subset G of the window. Returns (A, B) with A = B.
std::pair<SetFamily, SetFamily> near_extremal(int n, int t, int r);

// The candidate extremal pair (F^u_s, F^v_{s'}) with u = t-(s-s'),
// v = t+(s-s'). Cross t-intersecting for any s >= s' >= 0 with u >= 1.
std::pair<SetFamily, SetFamily> extremal_pair(int n, int t, int s, int s_prime);

// Subscript pairs (s, s') of the extremal pairs for a given r.
std::vector<std::pair<int, int>> r_ex(int r);

// Case analysis of a t-nice pair (shifted, up-closed, cross
// t-intersecting, both nonempty). u = lambda(A) <= v = lambda(B), swapping
// the roles if needed (recorded in `swapped`). The pair is degenerate when
// u+v != 2t or when the single-hit part of either family is empty;
// otherwise s (resp. s') is the unique index such that every member of A
// (resp. B) not meeting line u+1 (v+1) meets line u (v) at horizontal
// coordinate s (s'). Against the supplied r: DE when s = s' and (s,s') in
// R_ex, NDE when s = s'+1 and (s,s') in R_ex, else NE. For DE/NDE, I and J
// are the largest indices whose boundary walks are still members (plain
// walks for DE; plain for A and tilde for B when NDE), or none when the
// index-1 walk is already absent.
enum class PairCase { NE, DE, NDE, degenerate };

struct PairClassification {
    int u = 0;
    int v = 0;
    std::optional<int> s;
    std::optional<int> s_prime;
    std::optional<int> I;
    std::optional<int> J;
    PairCase case_ = PairCase::degenerate;
    bool in_r_ex = false;
    bool swapped = false;
};

PairClassification classify_pair(const SetFamily& a, const SetFamily& b,
                                 int t, int r);

const char* pair_case_name(PairCase c);

}
