#include "lrc/codes.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace lrc {
namespace {

constexpr int kMaxSearchN = 14;     // repair-structure searches
constexpr int kMaxDistanceN = 16;   // minimum-distance search

// Incremental Gaussian elimination over an arbitrary field, with undo.
// Basis rows are kept normalized (pivot coefficient 1) and indexed by pivot.
class Eliminator {
public:
    static int leading(const std::vector<FieldElement>& v) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero()) return static_cast<int>(j);
        }
        return -1;
    }

    // Fully reduce v against the basis; the residue is zero iff v lies in
    // the span of the added vectors.
    std::vector<FieldElement> reduce(std::vector<FieldElement> v) const {
        for (;;) {
            const int lead = leading(v);
            if (lead < 0) return v;
            const auto it = std::find_if(rows_.begin(), rows_.end(),
                                         [&](const auto& pr) { return pr.first == lead; });
            if (it == rows_.end()) return v;
            const FieldElement f = v[static_cast<std::size_t>(lead)];
            for (std::size_t j = static_cast<std::size_t>(lead); j < v.size(); ++j) {
                v[j] = v[j] - f * it->second[j];
            }
        }
    }

    // v must be a nonzero residue produced by reduce().
    void add(std::vector<FieldElement> v) {
        const int lead = leading(v);
        const FieldElement inv = v[static_cast<std::size_t>(lead)].inverse();
        for (auto& e : v) e = e * inv;
        rows_.emplace_back(lead, std::move(v));
    }

    void pop() { rows_.pop_back(); }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::pair<int, std::vector<FieldElement>>> rows_;
};

std::vector<std::vector<FieldElement>> all_columns(const LinearCode& code) {
    std::vector<std::vector<FieldElement>> cols;
    cols.reserve(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) cols.push_back(code.column(i));
    return cols;
}

std::vector<int> mask_to_coords(std::uint32_t mask) {
    std::vector<int> out;
    for (int b = 0; mask >> b; ++b) {
        if ((mask >> b) & 1u) out.push_back(b + 1);
    }
    return out;
}

// Minimal repair groups for every coordinate, as coordinate bitmasks
// (bit i-1 for coordinate i), restricted to size <= cap.
std::vector<std::vector<std::uint32_t>> repair_masks(const LinearCode& code, int cap) {
    std::vector<std::vector<std::uint32_t>> per_coord(static_cast<std::size_t>(code.n()));
    for (int i = 1; i <= code.n(); ++i) {
        for (const auto& s : regenerating_sets(code, i, cap)) {
            std::uint32_t m = 0;
            for (int c : s) m |= std::uint32_t{1} << (c - 1);
            per_coord[static_cast<std::size_t>(i - 1)].push_back(m);
        }
    }
    return per_coord;
}

struct PhiSearch {
    const std::vector<std::vector<std::uint32_t>>& sets;
    int n;
    int x;
    int best = INT_MAX;
    std::unordered_set<std::uint64_t> expanded;

    void run(std::uint32_t covered, int steps) {
        const int size = std::popcount(covered);
        if (steps == x) {
            best = std::min(best, size);
            return;
        }
        // Every remaining step adds at least its fresh target.
        if (size + (x - steps) >= best) return;
        const std::uint64_t key = (static_cast<std::uint64_t>(covered) << 5) | static_cast<unsigned>(steps);
        if (!expanded.insert(key).second) return;
        for (int t = 0; t < n; ++t) {
            if ((covered >> t) & 1u) continue;
            for (const std::uint32_t s : sets[static_cast<std::size_t>(t)]) {
                run(covered | s, steps + 1);
            }
        }
    }
};

}  // namespace

LinearCode::LinearCode(FieldMatrix generator) : g_(std::move(generator)) {
    if (g_.empty() || g_[0].empty()) throw std::invalid_argument("empty generator matrix");
    k_ = static_cast<int>(g_.size());
    n_ = static_cast<int>(g_[0].size());
    if (n_ <= k_) throw std::invalid_argument("generator must have more columns than rows");
    // gfq_rank also validates shape and field consistency.
    if (gfq_rank(g_) != k_) throw std::invalid_argument("generator matrix does not have full row rank");
    for (int c = 1; c <= n_; ++c) {
        const auto col = column(c);
        if (std::all_of(col.begin(), col.end(), [](const FieldElement& e) { return e.is_zero(); })) {
            throw std::invalid_argument("generator matrix has an all-zero column");
        }
    }
}

std::vector<FieldElement> LinearCode::column(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("coordinate out of range");
    std::vector<FieldElement> col;
    col.reserve(static_cast<std::size_t>(k_));
    for (const auto& row : g_) col.push_back(row[static_cast<std::size_t>(i - 1)]);
    return col;
}

int min_distance(const LinearCode& code) {
    const int n = code.n(), k = code.k();
    if (n > kMaxDistanceN) throw ScaleError("minimum-distance search supports n <= 16");
    const auto cols = all_columns(code);

    // Largest set of columns spanning at most a (k-1)-dimensional space;
    // any k-1 columns qualify, which seeds the bound.
    int best_s = k - 1;
    Eliminator elim;

    auto dfs = [&](auto&& self, int idx, int chosen) -> void {
        if (chosen + (n - idx) <= best_s) return;
        if (idx == n) {
            best_s = std::max(best_s, chosen);
            return;
        }
        auto res = elim.reduce(cols[static_cast<std::size_t>(idx)]);
        if (Eliminator::leading(res) < 0) {
            // Dependent on the chosen columns: including it is free and can
            // only help, so the exclude branch is dominated.
            self(self, idx + 1, chosen + 1);
            return;
        }
        if (elim.rank() + 1 <= k - 1) {
            elim.add(std::move(res));
            self(self, idx + 1, chosen + 1);
            elim.pop();
        }
        self(self, idx + 1, chosen);
    };
    dfs(dfs, 0, 0);
    return n - best_s;
}

std::vector<std::vector<int>> regenerating_sets(const LinearCode& code, int i, int size_cap) {
    const int n = code.n();
    if (n > kMaxSearchN) throw ScaleError("repair-group enumeration supports n <= 14");
    if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
    if (size_cap < 2) return {};
    const auto cols = all_columns(code);
    const int max_helpers = std::min(size_cap - 1, n - 1);

    std::vector<std::uint32_t> found;
    Eliminator elim;

    auto dfs = [&](auto&& self, int next, std::uint32_t mask, int count,
                   const std::vector<FieldElement>& target) -> void {
        if (Eliminator::leading(target) < 0) {
            // Column i is now spanned; supersets can never be minimal.
            found.push_back(mask | (std::uint32_t{1} << (i - 1)));
            return;
        }
        if (count == max_helpers) return;
        for (int c = next; c < n; ++c) {
            if (c == i - 1) continue;
            auto res = elim.reduce(cols[static_cast<std::size_t>(c)]);
            if (Eliminator::leading(res) < 0) continue;  // dependent helper: never in a minimal group
            elim.add(std::move(res));
            auto reduced_target = elim.reduce(target);
            self(self, c + 1, mask | (std::uint32_t{1} << c), count + 1, reduced_target);
            elim.pop();
        }
    };
    dfs(dfs, 0, 0, 0, code.column(i));

    // Keep only inclusion-minimal sets.
    std::sort(found.begin(), found.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint32_t> minimal;
    for (const std::uint32_t m : found) {
        const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                           [&](std::uint32_t kept) { return (m & kept) == kept; });
        if (!dominated) minimal.push_back(m);
    }

    std::vector<std::vector<int>> out;
    out.reserve(minimal.size());
    for (const std::uint32_t m : minimal) out.push_back(mask_to_coords(m));
    std::sort(out.begin(), out.end());
    return out;
}

int min_regenerating_size(const LinearCode& code, int i) {
    for (int cap = 2; cap <= code.n(); ++cap) {
        const auto sets = regenerating_sets(code, i, cap);
        if (!sets.empty()) {
            std::size_t best = sets[0].size();
            for (const auto& s : sets) best = std::min(best, s.size());
            return static_cast<int>(best);
        }
    }
    throw std::invalid_argument("coordinate has no repair group");
}

int locality(const LinearCode& code) {
    int r = 0;
    for (int i = 1; i <= code.n(); ++i) {
        r = std::max(r, min_regenerating_size(code, i) - 1);
    }
    return r;
}

int phi_oracle(const LinearCode& code, int x) {
    const int n = code.n();
    if (n > kMaxSearchN) throw ScaleError("repair-footprint search supports n <= 14");
    if (x < 1) throw std::invalid_argument("the number of repairs must be positive");
    if (x > n) throw std::invalid_argument("no sequence of that many repairs with fresh targets exists");
    const int r = locality(code);
    const auto sets = repair_masks(code, r + 1);

    PhiSearch search{sets, n, x, INT_MAX, {}};
    search.run(0, 0);
    if (search.best == INT_MAX) {
        throw std::invalid_argument("no sequence of that many repairs with fresh targets exists");
    }
    return search.best;
}

RhoBound rho_bound(const LinearCode& code) {
    RhoBound out;
    for (int x = 1; x <= code.n(); ++x) {
        int phi;
        try {
            phi = phi_oracle(code, x);
        } catch (const std::invalid_argument&) {
            break;
        }
        if (phi - x < code.k()) {
            out.rho = x;
        } else {
            break;  // the footprint excess never decreases in x
        }
    }
    out.d_upper = code.n() - code.k() + 1 - out.rho;
    return out;
}

std::vector<std::vector<int>> greedy_cover_sequence(const LinearCode& code) {
    const int n = code.n();
    if (n > kMaxSearchN) throw ScaleError("cover extraction supports n <= 14");
    const int r = locality(code);
    const auto cols = all_columns(code);

    // True iff the column of 'target' (1-based) lies in the span of the
    // columns listed in 'helpers' (0-based).
    auto spanned = [&](int target, const std::vector<int>& helpers) {
        Eliminator elim;
        for (int h : helpers) {
            auto res = elim.reduce(cols[static_cast<std::size_t>(h)]);
            if (Eliminator::leading(res) >= 0) elim.add(std::move(res));
        }
        return Eliminator::leading(elim.reduce(cols[static_cast<std::size_t>(target - 1)])) < 0;
    };

    std::uint32_t covered = 0;
    const std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    std::vector<std::vector<int>> out;

    while (covered != full) {
        int target = 0;
        for (int b = 0; b < n; ++b) {
            if (!((covered >> b) & 1u)) {
                target = b + 1;
                break;
            }
        }
        // Lexicographically smallest r-element helper set that recovers the
        // target, found by enumerating r-combinations in lex order.
        std::vector<int> helpers;
        bool found = false;
        auto combos = [&](auto&& self, int next) -> void {
            if (found) return;
            if (static_cast<int>(helpers.size()) == r) {
                if (spanned(target, helpers)) found = true;
                return;
            }
            for (int c = next; c < n; ++c) {
                if (c == target - 1) continue;
                helpers.push_back(c);
                self(self, c + 1);
                if (found) return;
                helpers.pop_back();
            }
        };
        combos(combos, 0);
        if (!found) throw std::invalid_argument("a coordinate has no repair group of locality size");

        std::vector<int> group = {target};
        for (int h : helpers) group.push_back(h + 1);
        std::sort(group.begin(), group.end());
        for (int c : group) covered |= std::uint32_t{1} << (c - 1);
        out.push_back(std::move(group));
    }
    return out;
}

}  // namespace lrc
