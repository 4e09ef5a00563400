#pragma once

#include <optional>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

// ceil(a / b) for b > 0, correct for negative numerators.
long long ceil_div(long long a, long long b);

// Code parameters (n, k, r) together with the derived group quantities:
// n1 groups of size r+1 are needed to cover n coordinates, leaving a total
// shortfall of n2; mu = n1 - n2, and (when n1 > n2) n1 = lambda*mu + nu with
// 0 <= nu < mu.
struct CodeParams {
    int n = 0, k = 0, r = 0;
    int n1 = 0, n2 = 0, mu = 0;
    int lambda = 0, nu = 0;  // populated only when n1 > n2

    // Validates positivity and computes the derived fields.
    static CodeParams make(int n, int k, int r);

    // The parameter regime in which the distance bounds are meaningful:
    // 1 < r < k and rate at most r/(r+1).
    bool valid() const;
    bool n1_gt_n2() const { return n1 > n2; }
};

// Classical locality bound: d <= n - k + 1 - (ceil(k/r) - 1).
int gopalan_bound(const CodeParams& p);

// Refinement available whenever the group size r+1 does not divide n:
// d <= n - k + 1 - (ceil((k+1)/r) - 1). Throws OutOfScopeError if (r+1) | n.
int uneven_groups_bound(const CodeParams& p);

// One admissible component profile of a group cover: s parts with sizes t_i
// (summing to n1) and overlap excesses a_i (summing to n2, each >= t_i - 1).
// Stored canonically: pairs (t_i, a_i) sorted ascending.
struct ProfileAssignment {
    std::vector<int> t;
    std::vector<int> a;
};

// All canonical profiles for the given totals.
std::vector<ProfileAssignment> enumerate_profiles(int n1, int n2);

// Smallest admissible value of x*r + 1 - sum_H (a_i - t_i) over part subsets
// H with t(H) < x and some single part outside H closing the gap to x.
// This upper-bounds the footprint of x repairs on a cover with this profile.
int profile_union_bound(const std::vector<int>& t, const std::vector<int>& a, int x, int r);

// The footprint bound psi(x): the worst case of profile_union_bound over all
// admissible profiles, solved exactly by enumeration. Requires n1 <= 12
// (ScaleError otherwise) and 1 <= x <= n1.
int psi_exhaustive(int n, int r, int x);

// Closed form of psi(x) in the regime n1 > n2:
// psi(x) = x*r + max(ceil(x/(lambda+1)), ceil((x-nu)/lambda)).
// Throws OutOfScopeError when n1 <= n2.
int psi_closed(const CodeParams& p, int x);

struct EtaBound {
    int eta = 0;      // largest x in [1, n1] with psi(x) - x < k (0 if none)
    int d_upper = 0;  // n - k + 1 - eta
};

// Distance bound via psi: closed form when n1 > n2, exhaustive otherwise
// (subject to the n1 <= 12 scale guard).
EtaBound ip_bound(const CodeParams& p);

// Closed-form eta for n1 > n2, evaluated without touching psi:
// eta = min(ceil(((lambda+1)(k-1)+1) / ((lambda+1)(r-1)+1)),
//           ceil((lambda(k-1)+nu+1) / (lambda(r-1)+1))) - 1.
EtaBound explicit_bound(const CodeParams& p);

struct PrakashBound {
    std::vector<int> e;  // e[m-1] is the m-th recursion value, e[n1-1] = n
    int l = 0;           // largest m in [1, n1] with e_m - m < k (0 if none)
    int d_upper = 0;     // n - k + 1 - l
    // True when l also satisfies the two-sided reading (the qualifying set is
    // exactly [1, l]); false signals a boundary case worth inspecting.
    bool two_sided_consistent = true;
};

// Recursive bound: e_{n1} = n, e_{m-1} = e_m - ceil(2 e_m / m) + (r + 1).
PrakashBound prakash_bound(const CodeParams& p);

// Bound for codes whose repair groups are pairwise disjoint:
// d <= n - k + 1 - (ceil((k + n2)/r) - 1).
int disjoint_group_bound(const CodeParams& p);

enum class Verdict { Y, N, OOS };

struct GridCell {
    int k = 0, r = 0;
    Verdict verdict = Verdict::OOS;
};

// For each (k, r) in the inclusive ranges: Y when the closed-form eta equals
// the classical penalty ceil(k/r) - 1 (the classical bound is attainable),
// N when it is strictly larger, OOS for invalid parameters or n1 <= n2.
// Rows ordered k ascending, then r ascending.
std::vector<GridCell> attainability_grid(int n, int k_lo, int k_hi, int r_lo, int r_hi);

struct BoundsRow {
    int k = 0;
    int gopalan = 0;
    int prakash = 0;
    std::optional<int> ip;  // empty when psi is out of computable scale
    int disjoint = 0;
};

// One row per valid k in [k_lo, k_hi] with all four bounds.
std::vector<BoundsRow> comparison_table(int n, int r, int k_lo, int k_hi);

}  // namespace lrc
