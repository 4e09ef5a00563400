#include "lrc/bounds.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace lrc {
namespace {

constexpr int kMaxExhaustiveN1 = 12;

void require_valid(const CodeParams& p) {
    if (!p.valid()) {
        throw std::invalid_argument("parameters must satisfy 1 < r < k and k(r+1) <= rn");
    }
}

}  // namespace

long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div requires a positive divisor");
    if (a >= 0) return (a + b - 1) / b;
    return -((-a) / b);
}

CodeParams CodeParams::make(int n, int k, int r) {
    if (n < 1 || k < 1 || r < 1) throw std::invalid_argument("n, k, r must be positive");
    CodeParams p;
    p.n = n;
    p.k = k;
    p.r = r;
    p.n1 = static_cast<int>(ceil_div(n, r + 1));
    p.n2 = p.n1 * (r + 1) - n;
    p.mu = p.n1 - p.n2;
    if (p.n1 > p.n2) {
        p.lambda = p.n1 / p.mu;
        p.nu = p.n1 % p.mu;
    }
    return p;
}

bool CodeParams::valid() const {
    return 1 < r && r < k &&
           static_cast<long long>(k) * (r + 1) <= static_cast<long long>(r) * n;
}

int gopalan_bound(const CodeParams& p) {
    require_valid(p);
    return p.n - p.k + 1 - (static_cast<int>(ceil_div(p.k, p.r)) - 1);
}

int uneven_groups_bound(const CodeParams& p) {
    require_valid(p);
    if (p.n % (p.r + 1) == 0) {
        throw OutOfScopeError("this refinement requires that r+1 not divide n");
    }
    return p.n - p.k + 1 - (static_cast<int>(ceil_div(p.k + 1, p.r)) - 1);
}

std::vector<ProfileAssignment> enumerate_profiles(int n1, int n2) {
    if (n1 < 1 || n2 < 0) throw std::invalid_argument("profile totals out of range");
    std::vector<ProfileAssignment> out;
    std::vector<int> t, a;
    // Build pairs (t_i, a_i) in nondecreasing lexicographic order so each
    // multiset of pairs appears exactly once.
    auto rec = [&](auto&& self, int t_left, int a_left, int min_t, int min_a_at_min_t) -> void {
        if (t_left == 0) {
            if (a_left == 0) out.push_back({t, a});
            return;
        }
        for (int ti = min_t; ti <= t_left; ++ti) {
            const int a_floor = std::max(ti - 1, ti == min_t ? min_a_at_min_t : 0);
            for (int ai = a_floor; ai <= a_left; ++ai) {
                t.push_back(ti);
                a.push_back(ai);
                self(self, t_left - ti, a_left - ai, ti, ai);
                t.pop_back();
                a.pop_back();
            }
        }
    };
    rec(rec, n1, n2, 1, 0);
    return out;
}

int profile_union_bound(const std::vector<int>& t, const std::vector<int>& a, int x, int r) {
    const int s = static_cast<int>(t.size());
    if (s < 1 || a.size() != t.size()) throw std::invalid_argument("malformed profile");
    int total = 0;
    for (int v : t) total += v;
    if (x < 1 || x > total) throw std::invalid_argument("x outside the profile's reach");

    int best = INT_MAX;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
        int t_sum = 0, excess = 0, max_out = 0;
        for (int i = 0; i < s; ++i) {
            if ((mask >> i) & 1u) {
                t_sum += t[static_cast<std::size_t>(i)];
                excess += a[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(i)];
            } else {
                max_out = std::max(max_out, t[static_cast<std::size_t>(i)]);
            }
        }
        if (t_sum < x && t_sum + max_out >= x) {
            best = std::min(best, x * r + 1 - excess);
        }
    }
    return best;  // a qualifying subset always exists since x <= total
}

int psi_exhaustive(int n, int r, int x) {
    if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
    const CodeParams p = CodeParams::make(n, std::max(r + 1, 2), r);  // k irrelevant here
    if (p.n1 > kMaxExhaustiveN1) {
        throw ScaleError("exhaustive profile search supports n1 <= 12");
    }
    if (x < 1 || x > p.n1) throw std::invalid_argument("x must lie in [1, n1]");

    int best = INT_MIN;
    for (const auto& prof : enumerate_profiles(p.n1, p.n2)) {
        best = std::max(best, profile_union_bound(prof.t, prof.a, x, r));
    }
    return best;
}

int psi_closed(const CodeParams& p, int x) {
    if (!p.n1_gt_n2()) throw OutOfScopeError("closed form requires n1 > n2");
    if (x < 1 || x > p.n1) throw std::invalid_argument("x must lie in [1, n1]");
    const long long by_wide = ceil_div(x, p.lambda + 1);
    const long long by_narrow = ceil_div(x - p.nu, p.lambda);
    return x * p.r + static_cast<int>(std::max(by_wide, by_narrow));
}

EtaBound ip_bound(const CodeParams& p) {
    require_valid(p);
    EtaBound out;
    for (int x = 1; x <= p.n1; ++x) {
        const int psi = p.n1_gt_n2() ? psi_closed(p, x) : psi_exhaustive(p.n, p.r, x);
        if (psi - x < p.k) out.eta = x;
    }
    out.d_upper = p.n - p.k + 1 - out.eta;
    return out;
}

EtaBound explicit_bound(const CodeParams& p) {
    require_valid(p);
    if (!p.n1_gt_n2()) throw OutOfScopeError("closed-form bound requires n1 > n2");
    const long long lam = p.lambda, nu = p.nu, k = p.k, r = p.r;
    const long long first = ceil_div((lam + 1) * (k - 1) + 1, (lam + 1) * (r - 1) + 1);
    const long long second = ceil_div(lam * (k - 1) + nu + 1, lam * (r - 1) + 1);
    EtaBound out;
    out.eta = static_cast<int>(std::min(first, second)) - 1;
    out.d_upper = p.n - p.k + 1 - out.eta;
    return out;
}

PrakashBound prakash_bound(const CodeParams& p) {
    require_valid(p);
    PrakashBound out;
    out.e.assign(static_cast<std::size_t>(p.n1), 0);
    out.e[static_cast<std::size_t>(p.n1 - 1)] = p.n;
    for (int m = p.n1; m >= 2; --m) {
        const int em = out.e[static_cast<std::size_t>(m - 1)];
        out.e[static_cast<std::size_t>(m - 2)] =
            em - static_cast<int>(ceil_div(2LL * em, m)) + (p.r + 1);
    }
    for (int m = 1; m <= p.n1; ++m) {
        if (out.e[static_cast<std::size_t>(m - 1)] - m < p.k) out.l = m;
    }
    out.d_upper = p.n - p.k + 1 - out.l;
    // The original statement picks l by a two-sided strict inequality, which
    // presumes the qualifying set is exactly a prefix [1, l]; flag departures.
    out.two_sided_consistent = true;
    for (int m = 1; m <= p.n1; ++m) {
        const bool qualifies = out.e[static_cast<std::size_t>(m - 1)] - m < p.k;
        if (qualifies != (m <= out.l)) out.two_sided_consistent = false;
    }
    return out;
}

int disjoint_group_bound(const CodeParams& p) {
    require_valid(p);
    return p.n - p.k + 1 - (static_cast<int>(ceil_div(p.k + p.n2, p.r)) - 1);
}

std::vector<GridCell> attainability_grid(int n, int k_lo, int k_hi, int r_lo, int r_hi) {
    if (k_lo > k_hi || r_lo > r_hi) throw std::invalid_argument("empty grid range");
    std::vector<GridCell> out;
    for (int k = k_lo; k <= k_hi; ++k) {
        for (int r = r_lo; r <= r_hi; ++r) {
            GridCell cell{k, r, Verdict::OOS};
            if (k >= 1 && r >= 1) {
                const CodeParams p = CodeParams::make(n, k, r);
                if (p.valid() && p.n1_gt_n2()) {
                    const int gopalan_eta = static_cast<int>(ceil_div(k, r)) - 1;
                    cell.verdict =
                        explicit_bound(p).eta == gopalan_eta ? Verdict::Y : Verdict::N;
                }
            }
            out.push_back(cell);
        }
    }
    return out;
}

std::vector<BoundsRow> comparison_table(int n, int r, int k_lo, int k_hi) {
    std::vector<BoundsRow> out;
    for (int k = k_lo; k <= k_hi; ++k) {
        if (k < 1) continue;
        const CodeParams p = CodeParams::make(n, k, r);
        if (!p.valid()) continue;
        BoundsRow row;
        row.k = k;
        row.gopalan = gopalan_bound(p);
        row.prakash = prakash_bound(p).d_upper;
        row.disjoint = disjoint_group_bound(p);
        try {
            row.ip = ip_bound(p).d_upper;
        } catch (const ScaleError&) {
            row.ip = std::nullopt;
        }
        out.push_back(row);
    }
    return out;
}

}  // namespace lrc
