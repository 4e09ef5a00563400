#include "lrc/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

constexpr int kMaxOracleN = 14;

// The unique (up to scale) dependency among the r+1 columns of a full-rank
// r x (r+1) binary matrix, found by inserting columns into a reduced basis
// while tracking each basis vector's expression in the original columns.
BitVec dual_word(const BitMatrix& x) {
    const std::size_t r = x.rows();
    struct Tracked {
        BitVec vec;
        BitVec combo;
    };
    std::vector<Tracked> basis;
    for (std::size_t j = 0; j <= r; ++j) {
        BitVec v = x.column(j);
        BitVec combo(r + 1);
        combo.set(j);
        while (v.any()) {
            const int top = v.top_bit();
            auto it = std::find_if(basis.begin(), basis.end(), [&](const Tracked& b) {
                return b.vec.top_bit() == top;
            });
            if (it == basis.end()) break;
            v ^= it->vec;
            combo ^= it->combo;
        }
        if (!v.any()) return combo;  // this column closed a dependency
        basis.push_back({std::move(v), std::move(combo)});
    }
    throw std::invalid_argument("seed generator must have rank r");
}

// Writes the r bits of X's column 'xcol' into rows [block*r, block*r + r)
// of column 'col'.
void place_seed_column(BitMatrix& m, const MdsSeed& seed, int block, int col, int xcol) {
    for (int s = 0; s < seed.r; ++s) {
        if (seed.X.get(static_cast<std::size_t>(s), static_cast<std::size_t>(xcol)))
            m.set(static_cast<std::size_t>(block * seed.r + s), static_cast<std::size_t>(col));
    }
}

// The branch matrix with 'blocks' stacked copies of the seed: one root
// column x_0 repeated down every block, and per branch i a column for each
// position j holding x_j in block i and c_j * x_0 elsewhere.
BitMatrix assemble_branches(int blocks, const MdsSeed& seed) {
    const int r = seed.r;
    BitMatrix m(static_cast<std::size_t>(blocks * r),
                static_cast<std::size_t>(blocks * r + 1));
    for (int t = 0; t < blocks; ++t) place_seed_column(m, seed, t, 0, 0);
    for (int i = 1; i <= blocks; ++i) {
        for (int j = 1; j <= r; ++j) {
            const int col = (i - 1) * r + j;
            for (int t = 0; t < blocks; ++t) {
                if (t == i - 1)
                    place_seed_column(m, seed, t, col, j);
                else if (seed.c.get(static_cast<std::size_t>(j)))
                    place_seed_column(m, seed, t, col, 0);
            }
        }
    }
    return m;
}

// Every branch (root plus its r columns) must vanish under the seed's dual
// combination; this is what makes branches repair groups.
void check_branch_parity(const BitMatrix& m, const MdsSeed& seed, int blocks) {
    for (int i = 1; i <= blocks; ++i) {
        BitVec acc(m.rows());
        if (seed.e.get(0)) acc ^= m.column(0);
        for (int j = 1; j <= seed.r; ++j) {
            if (seed.e.get(static_cast<std::size_t>(j)))
                acc ^= m.column(static_cast<std::size_t>((i - 1) * seed.r + j));
        }
        if (acc.any())
            throw std::logic_error("branch fails the seed parity relation");
    }
}

int expected_rank(int blocks, int r) { return blocks * (r - 1) + 1; }

}  // namespace

MdsSeed mds_seed(int r) {
    if (r < 2) throw std::invalid_argument("seed requires r >= 2");
    BitMatrix x(static_cast<std::size_t>(r), static_cast<std::size_t>(r) + 1);
    for (int i = 0; i < r; ++i) {
        x.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
        x.set(static_cast<std::size_t>(i), static_cast<std::size_t>(r));
    }
    BitVec c(static_cast<std::size_t>(r) + 1);
    c.set(0);
    c.set(static_cast<std::size_t>(r));
    return seed_from_generator(x, c);
}

MdsSeed seed_from_generator(const BitMatrix& x, const BitVec& c) {
    const int r = static_cast<int>(x.rows());
    if (r < 2 || x.cols() != static_cast<std::size_t>(r) + 1)
        throw std::invalid_argument("seed generator must be r x (r+1) with r >= 2");
    if (c.size() != static_cast<std::size_t>(r) + 1 || !c.get(0))
        throw std::invalid_argument("seed codeword must have r+1 bits and start with 1");

    const BitVec e = dual_word(x);
    // Every r columns independent <=> the unique dependency touches all of
    // them.
    if (e.count() != static_cast<std::size_t>(r) + 1)
        throw std::invalid_argument("seed generator has r dependent columns");

    std::size_t dot = 0;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(r); ++j)
        dot ^= static_cast<std::size_t>(e.get(j) && c.get(j));
    if (dot != 0)
        throw std::invalid_argument("seed codeword is not in the row space");

    BitVec parity(static_cast<std::size_t>(r));
    for (std::size_t j = 0; j <= static_cast<std::size_t>(r); ++j)
        if (e.get(j)) parity ^= x.column(j);
    if (parity.any()) throw std::logic_error("dual word fails its defining relation");

    return MdsSeed{r, x, c, e};
}

ConstructionLayout build_layout(const CodeParams& p, const MdsSeed& seed) {
    if (!p.n1_gt_n2())
        throw OutOfScopeError("the block layout requires n1 > n2");
    if (seed.r != p.r)
        throw std::invalid_argument("seed locality does not match the parameters");

    ConstructionLayout layout{p, seed, assemble_branches(p.lambda + 1, seed),
                              assemble_branches(p.lambda, seed), BitMatrix{}};

    BitMatrix w(static_cast<std::size_t>(p.n1 * p.r), static_cast<std::size_t>(p.n));
    std::size_t row0 = 0, col0 = 0;
    for (int t = 0; t < p.mu; ++t) {
        const BitMatrix& blk = (t < p.nu) ? layout.A : layout.B;
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                if (blk.get(i, j)) w.set(row0 + i, col0 + j);
        row0 += blk.rows();
        col0 += blk.cols();
    }
    if (row0 != w.rows() || col0 != w.cols())
        throw std::logic_error("layout blocks do not tile the expected dimensions");
    layout.W = std::move(w);

    check_branch_parity(layout.A, seed, p.lambda + 1);
    check_branch_parity(layout.B, seed, p.lambda);
    if (gf2_rank(layout.A) != expected_rank(p.lambda + 1, p.r) ||
        gf2_rank(layout.B) != expected_rank(p.lambda, p.r))
        throw std::logic_error("branch matrix rank is off its expected value");
    if (gf2_rank(layout.W) != (p.r - 1) * p.n1 + p.mu)
        throw std::logic_error("layout rank is off its expected value");
    return layout;
}

std::string PointLabel::str() const {
    if (is_root()) return std::to_string(tree) + "/root";
    return std::to_string(tree) + "/" + std::to_string(branch) + "/" +
           std::to_string(pos);
}

int PointSet::branch_count(int tree) const {
    if (tree < 1 || tree > params.mu)
        throw std::invalid_argument("tree index out of range");
    return tree <= params.nu ? params.lambda + 1 : params.lambda;
}

int PointSet::index_of(const PointLabel& label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw std::invalid_argument("label " + label.str() + " is not a coordinate");
    return static_cast<int>(it - labels.begin()) + 1;
}

ConstructedCode build_lrc(const CodeParams& p) {
    return build_lrc(p, default_modulus(p.n1 * p.r));
}

ConstructedCode build_lrc(const CodeParams& p, const BitVec& modulus) {
    if (!p.valid())
        throw std::invalid_argument("parameters do not admit a code of locality r");
    if (!p.n1_gt_n2())
        throw OutOfScopeError("the construction requires n1 > n2");

    const ConstructionLayout layout = build_layout(p, mds_seed(p.r));
    const FieldSpecPtr fs = FieldSpec::binary(p.n1 * p.r, modulus);

    PointSet points{p, {}, {}};
    points.labels.reserve(static_cast<std::size_t>(p.n));
    points.elements.reserve(static_cast<std::size_t>(p.n));
    std::size_t col = 0;
    for (int l = 1; l <= p.mu; ++l) {
        const int branches = l <= p.nu ? p.lambda + 1 : p.lambda;
        points.labels.push_back(PointLabel::root(l));
        points.elements.push_back(FieldElement::from_bits(fs, layout.W.column(col++)));
        for (int i = 1; i <= branches; ++i) {
            for (int j = 1; j <= p.r; ++j) {
                points.labels.push_back(PointLabel::at(l, i, j));
                points.elements.push_back(
                    FieldElement::from_bits(fs, layout.W.column(col++)));
            }
        }
    }
    if (col != static_cast<std::size_t>(p.n))
        throw std::logic_error("point count does not match n");

    FieldMatrix g(static_cast<std::size_t>(p.k));
    g[0] = points.elements;
    for (int i = 1; i < p.k; ++i) {
        g[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(p.n));
        for (const FieldElement& prev : g[static_cast<std::size_t>(i - 1)])
            g[static_cast<std::size_t>(i)].push_back(prev.frobenius(1));
    }
    return ConstructedCode{std::move(points), LinearCode(std::move(g))};
}

std::vector<FieldElement> encode(const LinearCode& code,
                                 const std::vector<FieldElement>& message) {
    if (static_cast<int>(message.size()) != code.k())
        throw std::invalid_argument("message must have exactly k elements");
    for (const FieldElement& m : message) {
        if (!m.valid() || !m.spec()->same_as(*code.field()))
            throw std::invalid_argument("message element is not from the code's field");
    }
    std::vector<FieldElement> out(static_cast<std::size_t>(code.n()),
                                  FieldElement::zero(code.field()));
    const FieldMatrix& g = code.generator();
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = out[j] + message[i] * g[i][j];
    }
    return out;
}

FieldElement repair(const ConstructedCode& constructed,
                    const std::vector<std::optional<FieldElement>>& received,
                    const PointLabel& erased) {
    const PointSet& points = constructed.points;
    if (static_cast<int>(received.size()) != points.params.n)
        throw std::invalid_argument("received word must have n coordinates");
    const int target = points.index_of(erased);
    if (received[static_cast<std::size_t>(target - 1)].has_value())
        throw std::invalid_argument("the erased coordinate still carries a value");

    // XOR of the given coordinates, or nothing if any of them is missing.
    // The all-ones dual word makes every branch an XOR parity group.
    auto try_xor = [&](const std::vector<PointLabel>& members)
        -> std::optional<FieldElement> {
        FieldElement acc = FieldElement::zero(constructed.code.field());
        for (const PointLabel& lbl : members) {
            const auto& v = received[static_cast<std::size_t>(points.index_of(lbl) - 1)];
            if (!v.has_value()) return std::nullopt;
            acc = acc + *v;
        }
        return acc;
    };

    const int r = points.params.r;
    if (erased.is_root()) {
        for (int i = 1; i <= points.branch_count(erased.tree); ++i) {
            std::vector<PointLabel> members;
            for (int j = 1; j <= r; ++j) members.push_back(PointLabel::at(erased.tree, i, j));
            if (auto v = try_xor(members)) return *v;
        }
    } else {
        std::vector<PointLabel> members{PointLabel::root(erased.tree)};
        for (int j = 1; j <= r; ++j)
            if (j != erased.pos) members.push_back(PointLabel::at(erased.tree, erased.branch, j));
        if (auto v = try_xor(members)) return *v;
    }
    throw std::invalid_argument("no intact branch contains the erased coordinate");
}

bool verify_selection_independence(const ConstructionLayout& layout,
                                   const std::vector<int>& f_columns,
                                   int designated_column) {
    const int r = layout.params.r;
    const int branches = layout.params.lambda + 1;
    const int ncols = static_cast<int>(layout.A.cols());

    if (f_columns.empty()) throw std::invalid_argument("the subset is empty");
    std::set<int> f(f_columns.begin(), f_columns.end());
    if (f.size() != f_columns.size())
        throw std::invalid_argument("the subset repeats a column");
    if (*f.begin() < 1 || *f.rbegin() > ncols)
        throw std::invalid_argument("column index out of range");
    if (f.count(designated_column) == 0)
        throw std::invalid_argument("the designated column must belong to the subset");

    check_branch_parity(layout.A, layout.seed, branches);

    for (int i = 1; i <= branches; ++i) {
        int hits = 0;
        for (int col : f) {
            if (col == designated_column) continue;
            const bool is_root = (col == 1);
            const int branch_of = (col - 2) / r + 1;
            if (is_root || branch_of == i) ++hits;
        }
        if (hits > r - 1)
            throw std::invalid_argument(
                "subset minus its designated column meets branch " +
                std::to_string(i) + " more than r-1 times");
    }

    std::vector<BitVec> cols;
    cols.reserve(f.size());
    for (int col : f) cols.push_back(layout.A.column(static_cast<std::size_t>(col - 1)));
    if (gf2_rank(cols) != static_cast<int>(f.size()))
        throw std::logic_error("qualifying subset turned out GF(2)-dependent");
    return true;
}

SelectionResult select_independent_subsets(const PointSet& points,
                                           const std::vector<PointLabel>& v) {
    const CodeParams& p = points.params;
    const int eta = explicit_bound(p).eta;
    if (static_cast<int>(v.size()) != p.k + eta)
        throw std::invalid_argument("query set must contain exactly k + " +
                                    std::to_string(eta) + " points");

    std::vector<PointLabel> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("query set repeats a point");
    for (const PointLabel& lbl : sorted) points.index_of(lbl);  // existence

    SelectionResult result;
    result.subsets.resize(static_cast<std::size_t>(p.mu));
    result.designated.resize(static_cast<std::size_t>(p.mu));

    for (int l = 1; l <= p.mu; ++l) {
        std::vector<PointLabel> u;
        for (const PointLabel& lbl : sorted)
            if (lbl.tree == l) u.push_back(lbl);
        if (u.empty()) continue;

        auto present = [&](const PointLabel& lbl) {
            return std::binary_search(u.begin(), u.end(), lbl);
        };
        std::vector<int> full;
        for (int i = 1; i <= points.branch_count(l); ++i) {
            bool all = true;
            for (int j = 1; j <= p.r && all; ++j) all = present(PointLabel::at(l, i, j));
            if (all) full.push_back(i);
        }

        std::set<PointLabel> dropped;
        std::optional<PointLabel> designated;
        if (present(PointLabel::root(l))) {
            for (int i : full) dropped.insert(PointLabel::at(l, i, 1));
            designated = PointLabel::root(l);
        } else if (!full.empty()) {
            designated = PointLabel::at(l, full.front(), 1);
            for (std::size_t t = 1; t < full.size(); ++t)
                dropped.insert(PointLabel::at(l, full[t], 1));
        } else {
            designated = u.front();
        }

        auto& subset = result.subsets[static_cast<std::size_t>(l - 1)];
        for (const PointLabel& lbl : u)
            if (dropped.count(lbl) == 0) subset.push_back(lbl);
        result.designated[static_cast<std::size_t>(l - 1)] = designated;
    }

    // Re-verify the promised invariants.
    int total = 0;
    std::vector<BitVec> chosen;
    for (int l = 1; l <= p.mu; ++l) {
        const auto& subset = result.subsets[static_cast<std::size_t>(l - 1)];
        const auto& designated = result.designated[static_cast<std::size_t>(l - 1)];
        if (subset.empty()) {
            if (designated.has_value())
                throw std::logic_error("designated point for an empty subset");
            continue;
        }
        if (!designated.has_value() ||
            std::find(subset.begin(), subset.end(), *designated) == subset.end())
            throw std::logic_error("designated point missing from its subset");
        for (int i = 1; i <= points.branch_count(l); ++i) {
            int hits = 0;
            for (const PointLabel& lbl : subset) {
                if (lbl == *designated) continue;
                if (lbl.is_root() || lbl.branch == i) ++hits;
            }
            if (hits > p.r - 1)
                throw std::logic_error("subset crowds a branch beyond r-1 points");
        }
        for (const PointLabel& lbl : subset) {
            chosen.push_back(
                points.elements[static_cast<std::size_t>(points.index_of(lbl) - 1)].bits());
            ++total;
        }
    }
    if (total < p.k)
        throw std::logic_error("selected union has fewer than k points");
    if (gf2_rank(chosen) != total)
        throw std::logic_error("selected union is GF(2)-dependent");
    return result;
}

OptimalityReport verify_distance_optimality(const CodeParams& p) {
    if (!p.valid())
        throw std::invalid_argument("parameters do not admit a code of locality r");
    if (!p.n1_gt_n2())
        throw OutOfScopeError("optimality verification requires n1 > n2");
    if (p.n > kMaxOracleN)
        throw ScaleError("oracle verification supports n <= " +
                         std::to_string(kMaxOracleN));

    OptimalityReport report;
    report.params = p;
    report.eta_tilde = explicit_bound(p).eta;
    report.d_expected = p.n - p.k + 1 - report.eta_tilde;
    if (p.k + report.eta_tilde > p.n) {
        report.applicable = false;
        return report;
    }

    const ConstructedCode built = build_lrc(p);
    report.d_oracle = min_distance(built.code);
    report.distance_matches = (report.d_oracle == report.d_expected);
    report.footprint_matches = true;
    for (int x = 1; x <= p.n1; ++x) {
        if (phi_oracle(built.code, x) != psi_closed(p, x)) {
            report.footprint_matches = false;
            break;
        }
    }
    return report;
}

}  // namespace lrc
