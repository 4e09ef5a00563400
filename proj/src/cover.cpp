#include "lrc/cover.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lrc/bounds.hpp"
#include "lrc/errors.hpp"

namespace lrc {

namespace {

constexpr int kMaxMinUnionSets = 20;

int n1_of(int n, int r) { return (n + r) / (r + 1); }

// Sorts each subset and checks membership in [1, n], distinctness, and the
// size-(r+1) condition.
std::vector<std::vector<int>> normalize_sets(int n, int r,
                                             std::vector<std::vector<int>> sets) {
    if (n < 1) throw std::invalid_argument("ground-set size must be positive");
    if (r < 1) throw std::invalid_argument("locality must be positive");
    for (auto& s : sets) {
        if (static_cast<int>(s.size()) != r + 1)
            throw std::invalid_argument("cover subset has size " +
                                        std::to_string(s.size()) +
                                        ", expected r+1 = " + std::to_string(r + 1));
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > n)
                throw std::invalid_argument("subset element out of range [1, n]");
            if (i > 0 && s[i] == s[i - 1])
                throw std::invalid_argument("subset elements must be distinct");
        }
    }
    return sets;
}

// Multiplicity of every ground-set element across the collection.
std::vector<int> element_counts(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<int> cnt(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& s : sets)
        for (int e : s) ++cnt[static_cast<std::size_t>(e)];
    return cnt;
}

// Union-find over subset indices, joined whenever two subsets share an
// element.  Returns the root of each subset.
struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }
    void unite(int u, int v) { parent[static_cast<std::size_t>(find(u))] = find(v); }
};

DisjointSets link_by_shared_elements(const std::vector<std::vector<int>>& sets) {
    DisjointSets ds(sets.size());
    std::map<int, int> first_owner;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int e : sets[i]) {
            auto [it, inserted] = first_owner.try_emplace(e, static_cast<int>(i));
            if (!inserted) ds.unite(static_cast<int>(i), it->second);
        }
    }
    return ds;
}

bool intersects(const std::vector<int>& sorted_a, const std::vector<int>& sorted_b) {
    std::size_t i = 0, j = 0;
    while (i < sorted_a.size() && j < sorted_b.size()) {
        if (sorted_a[i] == sorted_b[j]) return true;
        if (sorted_a[i] < sorted_b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace

Cover validate_cover(int n, int r, std::vector<std::vector<int>> sets) {
    sets = normalize_sets(n, r, std::move(sets));
    std::sort(sets.begin(), sets.end());

    const std::vector<int> cnt = element_counts(n, sets);
    for (int e = 1; e <= n; ++e) {
        if (cnt[static_cast<std::size_t>(e)] == 0)
            throw std::invalid_argument("cover union misses element " +
                                        std::to_string(e));
    }
    // A subset is redundant exactly when each of its elements also occurs
    // in another subset.
    for (const auto& s : sets) {
        const bool redundant =
            std::all_of(s.begin(), s.end(),
                        [&](int e) { return cnt[static_cast<std::size_t>(e)] >= 2; });
        if (redundant)
            throw std::invalid_argument("cover contains a redundant subset");
    }
    return Cover{n, r, std::move(sets)};
}

bool is_connected(const std::vector<std::vector<int>>& sets) {
    if (sets.empty())
        throw std::invalid_argument("connectivity of an empty collection is undefined");
    std::vector<std::vector<int>> sorted = sets;
    for (auto& s : sorted) std::sort(s.begin(), s.end());
    DisjointSets ds = link_by_shared_elements(sorted);
    const int root = ds.find(0);
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (ds.find(static_cast<int>(i)) != root) return false;
    return true;
}

std::vector<int> connected_order(const std::vector<std::vector<int>>& sets) {
    if (!is_connected(sets))
        throw std::invalid_argument("collection is not connected");
    std::vector<std::vector<int>> sorted = sets;
    for (auto& s : sorted) std::sort(s.begin(), s.end());

    std::vector<int> order;
    std::vector<bool> used(sets.size(), false);
    std::vector<int> covered;  // sorted union of the chosen sets
    order.reserve(sets.size());

    auto take = [&](std::size_t i) {
        used[i] = true;
        order.push_back(static_cast<int>(i) + 1);
        std::vector<int> merged;
        std::set_union(covered.begin(), covered.end(), sorted[i].begin(),
                       sorted[i].end(), std::back_inserter(merged));
        covered = std::move(merged);
    };

    take(0);
    while (order.size() < sets.size()) {
        bool advanced = false;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (used[i] || !intersects(covered, sorted[i])) continue;
            take(i);
            advanced = true;
            break;
        }
        if (!advanced)
            throw std::logic_error("connected collection has no admissible order");
    }

    // Post-hoc verification of the overlap condition.
    std::vector<int> check;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& s = sorted[static_cast<std::size_t>(order[pos] - 1)];
        if (pos > 0 && !intersects(check, s))
            throw std::logic_error("computed order violates the overlap condition");
        std::vector<int> merged;
        std::set_union(check.begin(), check.end(), s.begin(), s.end(),
                       std::back_inserter(merged));
        check = std::move(merged);
    }
    return order;
}

ComponentProfile components_profile(const Cover& cover) {
    const int n1 = n1_of(cover.n, cover.r);
    if (static_cast<int>(cover.sets.size()) != n1)
        throw std::invalid_argument("component profile requires exactly " +
                                    std::to_string(n1) + " subsets, got " +
                                    std::to_string(cover.sets.size()));

    DisjointSets ds = link_by_shared_elements(cover.sets);
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < cover.sets.size(); ++i)
        groups[ds.find(static_cast<int>(i))].push_back(static_cast<int>(i) + 1);

    ComponentProfile profile;
    std::vector<std::vector<int>> ordered;
    for (auto& [root, members] : groups) ordered.push_back(std::move(members));
    std::sort(ordered.begin(), ordered.end());

    for (const auto& members : ordered) {
        std::vector<int> group_union;
        for (int idx : members) {
            const auto& s = cover.sets[static_cast<std::size_t>(idx - 1)];
            std::vector<int> merged;
            std::set_union(group_union.begin(), group_union.end(), s.begin(),
                           s.end(), std::back_inserter(merged));
            group_union = std::move(merged);
        }
        const int ti = static_cast<int>(members.size());
        const int ai = ti * (cover.r + 1) - static_cast<int>(group_union.size());
        profile.partition.push_back(members);
        profile.t.push_back(ti);
        profile.a.push_back(ai);
    }

    // Structural guarantees for any valid cover of n1 subsets.
    const int n2 = n1 * (cover.r + 1) - cover.n;
    const int t_sum = std::accumulate(profile.t.begin(), profile.t.end(), 0);
    const int a_sum = std::accumulate(profile.a.begin(), profile.a.end(), 0);
    if (profile.t.empty() || t_sum != n1 || a_sum != n2)
        throw std::logic_error("component profile violates its size constraints");
    for (std::size_t i = 0; i < profile.t.size(); ++i)
        if (profile.a[i] < profile.t[i] - 1)
            throw std::logic_error("connected component with deficient overlap");
    return profile;
}

int min_union(const Cover& cover, int x) {
    const int t = static_cast<int>(cover.sets.size());
    if (x < 1 || x > t)
        throw std::invalid_argument("subcollection size out of range");
    if (t > kMaxMinUnionSets)
        throw ScaleError("minimum-union search supports at most " +
                         std::to_string(kMaxMinUnionSets) + " subsets");

    std::vector<int> cnt(static_cast<std::size_t>(cover.n) + 1, 0);
    int union_size = 0;
    int best = cover.n + 1;

    auto add = [&](const std::vector<int>& s) {
        for (int e : s)
            if (cnt[static_cast<std::size_t>(e)]++ == 0) ++union_size;
    };
    auto remove = [&](const std::vector<int>& s) {
        for (int e : s)
            if (--cnt[static_cast<std::size_t>(e)] == 0) --union_size;
    };

    auto recurse = [&](auto&& self, int next, int chosen) -> void {
        if (chosen == x) {
            best = std::min(best, union_size);
            return;
        }
        for (int i = next; i <= t - (x - chosen); ++i) {
            add(cover.sets[static_cast<std::size_t>(i)]);
            self(self, i + 1, chosen + 1);
            remove(cover.sets[static_cast<std::size_t>(i)]);
        }
    };
    recurse(recurse, 0, 0);
    return best;
}

Cover reduce_cover(int n, int r, const std::vector<std::vector<int>>& sets) {
    std::vector<std::vector<int>> work = normalize_sets(n, r, sets);
    const int n1 = n1_of(n, r);
    if (static_cast<int>(work.size()) < n1)
        throw std::invalid_argument("reduction needs at least n1 subsets");
    work.resize(static_cast<std::size_t>(n1));

    while (true) {
        const std::vector<int> cnt = element_counts(n, work);
        int uncovered = 0;
        for (int e = 1; e <= n; ++e) {
            if (cnt[static_cast<std::size_t>(e)] == 0) {
                uncovered = e;
                break;
            }
        }
        if (uncovered == 0) break;

        // Lowest-index subset holding an element that also occurs elsewhere;
        // one such subset must exist while part of the ground set is bare.
        int overlapped = 0;
        std::size_t donor = 0;
        for (std::size_t j = 0; j < work.size() && overlapped == 0; ++j) {
            for (int e : work[j]) {
                if (cnt[static_cast<std::size_t>(e)] >= 2) {
                    donor = j;
                    overlapped = e;
                    break;
                }
            }
        }
        if (overlapped == 0)
            throw std::logic_error("no overlapped element despite a bare one");

        auto& s = work[donor];
        s.erase(std::find(s.begin(), s.end(), overlapped));
        s.insert(std::upper_bound(s.begin(), s.end(), uncovered), uncovered);
    }

    return validate_cover(n, r, std::move(work));
}

int union_bound_rhs(const ComponentProfile& profile, int x, int r) {
    return profile_union_bound(profile.t, profile.a, x, r);
}

Cover cover_from_code(const LinearCode& code) {
    const int r = locality(code);
    std::vector<std::vector<int>> groups = greedy_cover_sequence(code);

    // Drop subsets contained in the union of the rest, lowest index first.
    for (bool pruned = true; pruned;) {
        pruned = false;
        const std::vector<int> cnt = element_counts(code.n(), groups);
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const bool redundant = std::all_of(
                groups[i].begin(), groups[i].end(),
                [&](int e) { return cnt[static_cast<std::size_t>(e)] >= 2; });
            if (redundant) {
                groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(i));
                pruned = true;
                break;
            }
        }
    }

    Cover cover = validate_cover(code.n(), r, std::move(groups));
    if (static_cast<int>(cover.sets.size()) < n1_of(cover.n, cover.r))
        throw std::logic_error("extracted cover has fewer than n1 subsets");
    return cover;
}

}  // namespace lrc
