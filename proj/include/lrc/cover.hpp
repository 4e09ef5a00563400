#pragma once

#include <vector>

#include "lrc/codes.hpp"

namespace lrc {

// A collection of (r+1)-element subsets of [1, n] whose union is the whole
// ground set and in which no subset lies inside the union of the others.
// Stored canonically: each subset sorted ascending and the subset list
// sorted lexicographically, so equal covers compare equal.
struct Cover {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> sets;
};

// Connected-component summary of a cover: groups of subset indices
// (1-based, each group sorted, groups ordered by smallest member), the
// group sizes t, and the internal overlaps a where
// a_i = sum of |S_j| over the group minus the size of the group's union.
struct ComponentProfile {
    std::vector<std::vector<int>> partition;
    std::vector<int> t;
    std::vector<int> a;
};

// Checks the cover conditions and returns the canonical form.  Throws
// std::invalid_argument naming the violation: a subset of the wrong size,
// a union smaller than the ground set, or a redundant subset (one
// contained in the union of the others; duplicates are a special case).
Cover validate_cover(int n, int r, std::vector<std::vector<int>> sets);

// True when no nonempty proper subcollection has a union disjoint from the
// union of the rest; computed as connectivity of the pairwise-intersection
// graph.  A single set is connected.  Throws on an empty collection.
bool is_connected(const std::vector<std::vector<int>>& sets);

// A 1-based ordering of a connected collection in which every set after
// the first intersects the union of its predecessors.  Deterministic:
// starts from the first set and always appends the smallest-index
// candidate.  Throws std::invalid_argument if the collection is not
// connected.
std::vector<int> connected_order(const std::vector<std::vector<int>>& sets);

// Splits a cover with exactly n1 = ceil(n/(r+1)) subsets into connected
// components and reports (t_i, a_i) per component.  The structural
// constraints (sum t = n1, sum a = n2, a_i >= t_i - 1) are re-checked and
// a violation raises std::logic_error.  A wrong subset count raises
// std::invalid_argument.
ComponentProfile components_profile(const Cover& cover);

// Minimum union size over all x-element subcollections, by exhaustive
// enumeration.  Throws std::invalid_argument when x is out of range and
// ScaleError when the cover has too many subsets to enumerate.
int min_union(const Cover& cover, int x);

// Shrinks a covering collection with at least n1 subsets down to exactly
// n1: truncates to the first n1 subsets, then repeatedly moves an
// overlapped element out of the lowest-index subset that has one, covering
// the smallest uncovered element instead, until the union is the whole
// ground set.  Ties are broken by smallest element.  The result is
// validated and canonical; for every x the minimum union size over x
// subsets never decreases relative to the truncated input.
Cover reduce_cover(int n, int r, const std::vector<std::vector<int>>& sets);

// Upper bound on the union size of any x subsets of a cover with the
// given component profile: the tightest value of x*r + 1 - sum(a_i - t_i)
// over component prefixes that can just reach x.  Throws when x exceeds
// the total number of subsets.
int union_bound_rhs(const ComponentProfile& profile, int x, int r);

// Extracts a cover from a code with locality r: the deterministic greedy
// sequence of repair groups, with subsets contained in the union of the
// others pruned (smallest index first).  The result has at least n1
// subsets.  Propagates ScaleError beyond oracle scale.
Cover cover_from_code(const LinearCode& code);

}  // namespace lrc
