#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "lrc/bounds.hpp"

using namespace lrc;

TEST_CASE("ceiling division") {
    CHECK(ceil_div(7, 3) == 3);
    CHECK(ceil_div(6, 3) == 2);
    CHECK(ceil_div(1, 5) == 1);
    CHECK(ceil_div(0, 3) == 0);
    CHECK(ceil_div(-1, 3) == 0);
    CHECK(ceil_div(-3, 3) == -1);
    CHECK(ceil_div(-4, 3) == -1);
    CHECK_THROWS_AS(ceil_div(1, 0), std::invalid_argument);
}

TEST_CASE("derived parameters") {
    const CodeParams p = CodeParams::make(13, 8, 3);
    CHECK(p.n1 == 4);
    CHECK(p.n2 == 3);
    CHECK(p.mu == 1);
    CHECK(p.lambda == 4);
    CHECK(p.nu == 0);
    CHECK(p.valid());
    CHECK(p.n1_gt_n2());

    const CodeParams q = CodeParams::make(8, 4, 2);
    CHECK(q.n1 == 3);
    CHECK(q.n2 == 1);
    CHECK(q.mu == 2);
    CHECK(q.lambda == 1);
    CHECK(q.nu == 1);

    const CodeParams u = CodeParams::make(25, 10, 3);
    CHECK(u.n1 == 7);
    CHECK(u.n2 == 3);
    CHECK(u.mu == 4);
    CHECK(u.lambda == 1);
    CHECK(u.nu == 3);

    // Shortfall bounds and reconstruction identity, across a sweep.
    for (int n = 2; n <= 40; ++n) {
        for (int r = 1; r <= 9; ++r) {
            const CodeParams s = CodeParams::make(n, 1, r);
            CHECK(s.n2 >= 0);
            CHECK(s.n2 <= r);
            CHECK(s.n1 * (r + 1) - s.n2 == n);
            if (s.n1 > s.n2) {
                CHECK(s.lambda >= 1);
                CHECK(s.nu >= 0);
                CHECK(s.nu < s.mu);
                CHECK(s.lambda * s.mu + s.nu == s.n1);
            }
        }
    }

    CHECK_FALSE(CodeParams::make(10, 5, 12).valid());  // r >= k
    CHECK_FALSE(CodeParams::make(10, 9, 3).valid());   // rate too high
    CHECK_FALSE(CodeParams::make(10, 5, 1).valid());   // r must exceed 1
    CHECK(CodeParams::make(5, 3, 2).valid());
    CHECK_THROWS_AS(CodeParams::make(0, 1, 1), std::invalid_argument);
}

TEST_CASE("classical bound and its uneven-groups refinement") {
    CHECK(gopalan_bound(CodeParams::make(10, 5, 3)) == 5);
    CHECK(gopalan_bound(CodeParams::make(12, 6, 3)) == 6);
    CHECK(gopalan_bound(CodeParams::make(13, 8, 3)) == 4);
    CHECK_THROWS_AS(gopalan_bound(CodeParams::make(10, 9, 3)), std::invalid_argument);

    CHECK(uneven_groups_bound(CodeParams::make(10, 5, 3)) == 5);
    CHECK(uneven_groups_bound(CodeParams::make(13, 9, 3)) == 2);
    // Strict improvement when r divides k.
    CHECK(uneven_groups_bound(CodeParams::make(13, 6, 3)) == 6);
    CHECK(gopalan_bound(CodeParams::make(13, 6, 3)) == 7);
    // Defined only when r+1 does not divide n.
    CHECK_THROWS_AS(uneven_groups_bound(CodeParams::make(12, 6, 3)), OutOfScopeError);

    // Never exceeds the classical bound; strict exactly when r | k.
    for (int n = 8; n <= 30; ++n) {
        for (int r = 2; r <= 6; ++r) {
            if (n % (r + 1) == 0) continue;
            for (int k = r + 1; k <= n - 1; ++k) {
                const CodeParams p = CodeParams::make(n, k, r);
                if (!p.valid()) continue;
                CHECK(uneven_groups_bound(p) <= gopalan_bound(p));
                if (k % r == 0) CHECK(uneven_groups_bound(p) < gopalan_bound(p));
            }
        }
    }
}

TEST_CASE("profile enumeration") {
    const auto profiles = enumerate_profiles(4, 3);
    CHECK(profiles.size() == 11);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& pr : profiles) {
        int t_sum = 0, a_sum = 0;
        for (std::size_t i = 0; i < pr.t.size(); ++i) {
            t_sum += pr.t[i];
            a_sum += pr.a[i];
            CHECK(pr.t[i] >= 1);
            CHECK(pr.a[i] >= pr.t[i] - 1);
            if (i > 0) {
                // Canonical: pairs sorted ascending.
                CHECK(std::pair{pr.t[i - 1], pr.a[i - 1]} <= std::pair{pr.t[i], pr.a[i]});
            }
        }
        CHECK(t_sum == 4);
        CHECK(a_sum == 3);
        CHECK(seen.insert({pr.t, pr.a}).second);  // no duplicates
    }
    // The single-part and max-part extremes are present.
    CHECK(seen.count({{4}, {3}}) == 1);
    CHECK(seen.count({{1, 1, 1, 1}, {0, 1, 1, 1}}) == 1);
}

TEST_CASE("single-profile footprint bound") {
    CHECK(profile_union_bound({4}, {3}, 2, 3) == 7);
    // x at the full reach of a single part: the prefix is empty.
    CHECK(profile_union_bound({4}, {3}, 4, 3) == 4 * 3 + 1);
    CHECK_THROWS_AS(profile_union_bound({4}, {3}, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(profile_union_bound({4}, {3}, 0, 3), std::invalid_argument);
}

TEST_CASE("footprint bound psi: exhaustive fixtures") {
    CHECK(psi_exhaustive(13, 3, 1) == 4);
    CHECK(psi_exhaustive(13, 3, 2) == 7);
    CHECK(psi_exhaustive(13, 3, 3) == 10);
    CHECK(psi_exhaustive(13, 3, 4) == 13);
    for (int x = 1; x <= 3; ++x) CHECK(psi_exhaustive(12, 3, x) == 4 * x);
    CHECK(psi_exhaustive(8, 2, 1) == 3);
    CHECK(psi_exhaustive(8, 2, 2) == 5);
    CHECK(psi_exhaustive(8, 2, 3) == 8);

    CHECK_THROWS_AS(psi_exhaustive(13, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(psi_exhaustive(13, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(psi_exhaustive(40, 2, 1), ScaleError);  // n1 = 14
}

TEST_CASE("footprint bound psi: closed form") {
    const CodeParams p13 = CodeParams::make(13, 8, 3);
    for (int x = 1; x <= 4; ++x) CHECK(psi_closed(p13, x) == 3 * x + 1);
    CHECK(psi_closed(CodeParams::make(8, 4, 2), 2) == 5);
    const CodeParams p12 = CodeParams::make(12, 6, 3);
    for (int x = 1; x <= 3; ++x) CHECK(psi_closed(p12, x) == 4 * x);

    // Out of regime: n = 9, r = 3 gives n1 = n2 = 3.
    CHECK_THROWS_AS(psi_closed(CodeParams::make(9, 4, 3), 1), OutOfScopeError);
}

TEST_CASE("closed form agrees with exhaustive search on a compact sweep") {
    for (int r = 2; r <= 6; ++r) {
        for (int n = r + 2; n <= 18; ++n) {
            const CodeParams p = CodeParams::make(n, r + 1, r);
            if (!p.n1_gt_n2() || p.n1 > 12) continue;
            for (int x = 1; x <= p.n1; ++x) {
                CAPTURE(n);
                CAPTURE(r);
                CAPTURE(x);
                CHECK(psi_closed(p, x) == psi_exhaustive(n, r, x));
            }
            // Full reach touches every coordinate.
            CHECK(psi_closed(p, p.n1) == n);
        }
    }
}

TEST_CASE("eta-based distance bound") {
    const EtaBound b13 = ip_bound(CodeParams::make(13, 8, 3));
    CHECK(b13.eta == 3);
    CHECK(b13.d_upper == 3);
    CHECK(ip_bound(CodeParams::make(10, 5, 3)).d_upper == 5);
    CHECK(ip_bound(CodeParams::make(12, 6, 3)).d_upper ==
          gopalan_bound(CodeParams::make(12, 6, 3)));

    // Closed-form consequence for n = 13, r = 3 across all valid k.
    for (int k = 4; k <= 9; ++k) {
        const CodeParams p = CodeParams::make(13, k, 3);
        CHECK(ip_bound(p).d_upper == 13 - k + 1 - static_cast<int>(ceil_div(k - 3, 2)));
    }
}

TEST_CASE("closed-form eta equals the psi-derived eta whenever both apply") {
    for (int n = 5; n <= 24; ++n) {
        for (int r = 2; r <= 8; ++r) {
            for (int k = r + 1; k < n; ++k) {
                const CodeParams p = CodeParams::make(n, k, r);
                if (!p.valid() || !p.n1_gt_n2()) continue;
                const EtaBound via_psi = ip_bound(p);
                const EtaBound direct = explicit_bound(p);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(r);
                CHECK(direct.eta == via_psi.eta);
                CHECK(direct.d_upper == via_psi.d_upper);
            }
        }
    }
}

TEST_CASE("closed-form bound fixtures") {
    const EtaBound b = explicit_bound(CodeParams::make(8, 4, 2));
    CHECK(b.eta == 2);
    CHECK(b.d_upper == 3);
    CHECK(explicit_bound(CodeParams::make(50, 16, 8)).eta == 2);
    CHECK(explicit_bound(CodeParams::make(50, 10, 9)).eta == 1);
    CHECK_THROWS_AS(explicit_bound(CodeParams::make(9, 4, 3)), OutOfScopeError);

    // When r+1 divides n the closed form collapses onto the classical bound.
    for (int r = 2; r <= 6; ++r) {
        for (int n = 2 * (r + 1); n <= 36; n += r + 1) {
            for (int k = r + 1; k < n; ++k) {
                const CodeParams p = CodeParams::make(n, k, r);
                if (!p.valid()) continue;
                CHECK(explicit_bound(p).d_upper == gopalan_bound(p));
            }
        }
    }
}

TEST_CASE("recursive bound") {
    const PrakashBound b12 = prakash_bound(CodeParams::make(12, 6, 3));
    CHECK(b12.e == std::vector<int>{4, 8, 12});
    CHECK(b12.l == 1);
    CHECK(b12.d_upper == 6);
    CHECK(b12.two_sided_consistent);

    const PrakashBound b13 = prakash_bound(CodeParams::make(13, 8, 3));
    CHECK(b13.e == std::vector<int>{4, 7, 10, 13});
    CHECK(b13.l == 3);
    CHECK(b13.d_upper == 3);

    // The last recursion value is always n.
    for (int n = 8; n <= 40; ++n) {
        for (int r = 2; r <= 5; ++r) {
            const CodeParams p = CodeParams::make(n, r + 1, r);
            if (!p.valid()) continue;
            const PrakashBound pb = prakash_bound(p);
            CHECK(pb.e.back() == n);
        }
    }
}

TEST_CASE("bound ordering and the recursion-psi relation") {
    for (int n = 6; n <= 40; ++n) {
        for (int r = 2; r <= 8; ++r) {
            const CodeParams base = CodeParams::make(n, r + 1, r);
            if (!base.n1_gt_n2()) continue;
            // e_m dominates psi(m) throughout.
            const CodeParams any_k = CodeParams::make(n, r + 1, r);
            if (any_k.valid()) {
                const PrakashBound pb = prakash_bound(any_k);
                for (int m = 1; m <= any_k.n1; ++m) {
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(m);
                    CHECK(pb.e[static_cast<std::size_t>(m - 1)] >= psi_closed(any_k, m));
                }
            }
            for (int k = r + 1; k < n; ++k) {
                const CodeParams p = CodeParams::make(n, k, r);
                if (!p.valid()) continue;
                const int ip = ip_bound(p).d_upper;
                const int pk = prakash_bound(p).d_upper;
                const int gp = gopalan_bound(p);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(r);
                CHECK(ip <= pk);
                CHECK(pk <= gp);
            }
        }
    }
}

TEST_CASE("disjoint-group bound") {
    CHECK(disjoint_group_bound(CodeParams::make(25, 10, 3)) == 12);
    CHECK(disjoint_group_bound(CodeParams::make(13, 8, 3)) == 3);
    // With no shortfall the formula degenerates to the classical bound.
    const CodeParams p = CodeParams::make(12, 6, 3);
    CHECK(disjoint_group_bound(p) == gopalan_bound(p));
}

TEST_CASE("attainability grid") {
    const auto grid = attainability_grid(50, 10, 17, 2, 9);
    CHECK(grid.size() == 64);

    auto at = [&](int k, int r) -> Verdict {
        for (const auto& c : grid) {
            if (c.k == k && c.r == r) return c.verdict;
        }
        FAIL("cell not found");
        return Verdict::OOS;
    };

    // Spot values.
    CHECK(at(16, 8) == Verdict::N);
    CHECK(at(10, 9) == Verdict::Y);

    // Full expected pattern for this grid.
    const std::set<std::pair<int, int>> expect_n = {
        {16, 8}, {14, 7}, {12, 6}, {17, 6}, {10, 5}, {15, 5},
        {11, 3}, {12, 3}, {14, 3}, {15, 3}, {17, 3},
        {10, 2}, {12, 2}, {14, 2}, {16, 2},
    };
    for (const auto& c : grid) {
        CAPTURE(c.k);
        CAPTURE(c.r);
        const Verdict want = expect_n.count({c.k, c.r}) ? Verdict::N : Verdict::Y;
        CHECK(c.verdict == want);
        // Consistency: N exactly when the closed form beats the classical bound.
        const CodeParams p = CodeParams::make(50, c.k, c.r);
        CHECK((c.verdict == Verdict::N) ==
              (explicit_bound(p).d_upper < gopalan_bound(p)));
    }

    // Ordering: k ascending, r ascending within k.
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(std::pair{grid[i - 1].k, grid[i - 1].r} < std::pair{grid[i].k, grid[i].r});
    }

    // Out-of-scope cells: rate violations and n1 <= n2.
    const auto oos = attainability_grid(12, 10, 10, 3, 3);  // k(r+1) = 40 > 36
    CHECK(oos.at(0).verdict == Verdict::OOS);
    const auto oos2 = attainability_grid(9, 4, 4, 3, 3);  // n1 = n2 = 3
    CHECK(oos2.at(0).verdict == Verdict::OOS);
}

TEST_CASE("comparison table") {
    const auto rows = comparison_table(13, 3, 1, 12);
    CHECK(rows.size() == 6);  // k = 4..9 are the valid entries
    CHECK(rows.front().k == 4);
    CHECK(rows.back().k == 9);
    for (const auto& row : rows) {
        CHECK(row.ip.has_value());
        CHECK(*row.ip == 13 - row.k + 1 - static_cast<int>(ceil_div(row.k - 3, 2)));
        CHECK(*row.ip <= row.prakash);
        CHECK(row.prakash <= row.gopalan);
    }
    // The k = 8 row matches the worked values.
    const auto& r8 = rows[4];
    CHECK(r8.k == 8);
    CHECK(r8.gopalan == 4);
    CHECK(r8.prakash == 3);
    CHECK(*r8.ip == 3);
    CHECK(r8.disjoint == 3);

    // Determinism.
    const auto again = comparison_table(13, 3, 1, 12);
    CHECK(again.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(again[i].k == rows[i].k);
        CHECK(again[i].gopalan == rows[i].gopalan);
        CHECK(again[i].prakash == rows[i].prakash);
        CHECK(again[i].ip == rows[i].ip);
        CHECK(again[i].disjoint == rows[i].disjoint);
    }
}
