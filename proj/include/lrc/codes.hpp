#pragma once

#include <vector>

#include "lrc/errors.hpp"
#include "lrc/field.hpp"

namespace lrc {

// A linear code presented by a full-rank k x n generator matrix. Coordinates
// are 1-based throughout the public API.
class LinearCode {
public:
    // Validates: k >= 1, n > k, all rows the same length over one field,
    // rank exactly k, and no all-zero column (a zero column can never be
    // recovered and makes the repair notions below vacuous).
    explicit LinearCode(FieldMatrix generator);

    int n() const { return n_; }
    int k() const { return k_; }
    const FieldMatrix& generator() const { return g_; }
    const FieldSpecPtr& field() const { return g_[0][0].spec(); }
    // Column i (1-based) as a length-k vector.
    std::vector<FieldElement> column(int i) const;

private:
    FieldMatrix g_;
    int n_ = 0, k_ = 0;
};

// Exact minimum distance by exhaustive search over column subsets
// (largest subset of columns with rank < k). Throws ScaleError for n > 16.
int min_distance(const LinearCode& code);

// All inclusion-minimal repair groups for coordinate i: sets R containing i,
// of size at most size_cap, such that column i lies in the span of the other
// columns of R. Each set is sorted ascending; the collection is sorted
// lexicographically. Throws ScaleError for n > 14.
std::vector<std::vector<int>> regenerating_sets(const LinearCode& code, int i, int size_cap);

// Size of the smallest repair group for coordinate i; throws
// std::invalid_argument when the coordinate has none.
int min_regenerating_size(const LinearCode& code, int i);

// Locality: the largest over all coordinates of (smallest repair group
// size - 1), i.e. the smallest r such that every coordinate can be recovered
// from some r others.
int locality(const LinearCode& code);

// Minimum possible total footprint of x successive repairs whose targets are
// fresh (each target lies outside the union of the earlier groups), using
// repair groups of size at most locality+1. Throws std::invalid_argument when
// no such sequence of x repairs exists.
int phi_oracle(const LinearCode& code, int x);

struct RhoBound {
    int rho = 0;      // the largest x whose footprint stays within x + k - 1
    int d_upper = 0;  // n - k + 1 - rho
};

// Distance upper bound derived from the repair-footprint function above.
RhoBound rho_bound(const LinearCode& code);

// Deterministic cover of all coordinates by repair groups of size
// locality+1: repeatedly take the smallest uncovered coordinate and the
// lexicographically smallest helper set that recovers it.
std::vector<std::vector<int>> greedy_cover_sequence(const LinearCode& code);

}  // namespace lrc
