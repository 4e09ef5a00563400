#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/bounds.hpp"
#include "lrc/codes.hpp"
#include "lrc/field.hpp"

namespace lrc {

// Binary [r+1, r] MDS seed for the block layout: a generator X whose
// columns x_0..x_r are independent r at a time, a codeword c = (1, c_1..c_r)
// from its row space, and the dual word e (necessarily all-ones over GF(2))
// with sum_j e_j x_j = 0 and e . c = 0.
struct MdsSeed {
    int r = 0;
    BitMatrix X;  // r x (r+1), columns x_0..x_r
    BitVec c;     // r+1 bits, bit 0 set
    BitVec e;     // r+1 bits, full support
};

// The default seed: X = [identity | all-ones column], c = (1, 0, ..., 0, 1),
// e = all-ones.  Requires r >= 2.
MdsSeed mds_seed(int r);

// Builds a seed from an arbitrary binary [r+1, r] MDS generator and a
// row-space codeword starting with 1; e is recovered by elimination and
// re-checked against both invariants.
MdsSeed seed_from_generator(const BitMatrix& x, const BitVec& c);

// GF(2) layout underlying a constructed code with n1 > n2.  A consists of
// lambda+1 column branches of r vectors plus one shared root column, B of
// lambda branches likewise; W puts nu copies of A and mu-nu copies of B on
// a block diagonal.  Column order everywhere: root first, then branches in
// ascending order, positions ascending inside a branch.
//
// Every branch (root plus its r columns) is internally dependent through
// the seed's dual word, which is what makes each branch a repair group;
// consequently W's GF(2) rank is (r-1)*n1 + mu = n - n1, one short of full
// per tree.
struct ConstructionLayout {
    CodeParams params;
    MdsSeed seed;
    BitMatrix A;  // ((lambda+1)r) x ((lambda+1)r + 1)
    BitMatrix B;  // (lambda r) x (lambda r + 1)
    BitMatrix W;  // (n1 r) x n
};

// Assembles A, B and W for parameters with n1 > n2 (OutOfScopeError
// otherwise; the seed's r must match).  Dimension, parity, and rank
// invariants are re-verified on every build.
ConstructionLayout build_layout(const CodeParams& p, const MdsSeed& seed);

// Coordinate label: tree l in [1, mu], and either the tree's root
// (branch = pos = 0, printed "l/root") or branch i position j, printed
// "l/i/j".  The tuple order (tree, branch, pos) is the canonical
// coordinate order.
struct PointLabel {
    int tree = 0;
    int branch = 0;
    int pos = 0;

    static PointLabel root(int tree) { return {tree, 0, 0}; }
    static PointLabel at(int tree, int branch, int pos) { return {tree, branch, pos}; }
    bool is_root() const { return branch == 0; }
    std::string str() const;

    friend auto operator<=>(const PointLabel&, const PointLabel&) = default;
};

// The n evaluation points: columns of W read as elements of GF(2^m) with
// m = n1*r (row t of W is the theta^t coordinate), in canonical label
// order.  Trees 1..nu carry lambda+1 branches, the rest lambda.
struct PointSet {
    CodeParams params;
    std::vector<PointLabel> labels;
    std::vector<FieldElement> elements;

    int branch_count(int tree) const;
    // 1-based coordinate of a label; throws std::invalid_argument for
    // labels outside the set.
    int index_of(const PointLabel& label) const;
};

// A constructed code: the labeled point set plus the [n, k] code over
// GF(2^m) whose generator row i is the elementwise 2^i-th power of the
// points, so codewords are evaluations of k-term linearized polynomials.
struct ConstructedCode {
    PointSet points;
    LinearCode code;
};

// Builds the code for valid parameters with n1 > n2, over GF(2^m) with the
// deterministic default modulus, or an explicit degree-m modulus.
ConstructedCode build_lrc(const CodeParams& p);
ConstructedCode build_lrc(const CodeParams& p, const BitVec& modulus);

// Evaluates the message's linearized polynomial at every point, i.e.
// message x generator.  The message must hold exactly k elements of the
// code's field.
std::vector<FieldElement> encode(const LinearCode& code,
                                 const std::vector<FieldElement>& message);

// Recovers the value of the erased coordinate from one intact branch
// containing it, using only that branch's other values (their XOR, since
// the dual word is all-ones).  'received' lists the codeword in canonical
// order with std::nullopt at missing coordinates; the erased label's entry
// must be missing.  Roots can use any of their tree's branches; the
// lowest-index intact branch is chosen.  Throws std::invalid_argument when
// no branch containing the coordinate is intact.
FieldElement repair(const ConstructedCode& constructed,
                    const std::vector<std::optional<FieldElement>>& received,
                    const PointLabel& erased);

// Checks the layout's independence guarantee on a subset F of A's columns
// (1-based: column 1 is the root, then branch-major).  Requires a
// designated column in F such that F minus it meets every branch (root
// included) in at most r-1 columns; under that condition the columns of F
// are GF(2)-independent, which is re-verified by rank.  Also re-checks
// that every branch is internally dependent.  Returns true; throws
// std::invalid_argument when the precondition fails.
bool verify_selection_independence(const ConstructionLayout& layout,
                                   const std::vector<int>& f_columns,
                                   int designated_column);

// Per-tree subsets selected from a query set, with a designated point for
// every nonempty subset: the subsets are disjoint across trees, each meets
// every branch in at most r-1 points once its designated point is set
// aside, their union has at least k points, and the union is
// GF(2)-independent.
struct SelectionResult {
    std::vector<std::vector<PointLabel>> subsets;       // one per tree
    std::vector<std::optional<PointLabel>> designated;  // one per tree
};

// Runs the deterministic selection procedure on a query set V of exactly
// k + eta points (eta from the closed-form bound): per tree, if the root
// is present, the first position of every fully present branch is dropped
// and the root designated; otherwise the fully present branches lose their
// first positions except the lowest one, whose first position is
// designated (or the canonically smallest point when no branch is full).
// The result's invariants are re-verified, including GF(2) independence of
// the union.
SelectionResult select_independent_subsets(const PointSet& points,
                                           const std::vector<PointLabel>& v);

// Outcome of checking one parameter tuple end to end: build the code,
// measure its exact distance, and compare with n - k + 1 - eta from the
// closed form, plus the repair-footprint profile against the closed-form
// program value for every x.
struct OptimalityReport {
    CodeParams params;
    int eta_tilde = 0;
    int d_expected = 0;  // n - k + 1 - eta_tilde
    int d_oracle = 0;
    bool distance_matches = false;
    bool footprint_matches = false;
    // False when k + eta exceeds n, in which case nothing was built.
    bool applicable = true;

    bool ok() const { return applicable && distance_matches && footprint_matches; }
};

// Builds and measures the constructed code at oracle scale (n <= 14;
// ScaleError beyond, OutOfScopeError when n1 <= n2, std::invalid_argument
// for invalid parameters).
OptimalityReport verify_distance_optimality(const CodeParams& p);

}  // namespace lrc
