#include <random>
#include <vector>

#include "doctest.h"
#include "lrc/field.hpp"

using namespace lrc;

namespace {

BitVec random_bits(std::mt19937_64& rng, std::size_t n) {
    BitVec v(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng)) v.set(i);
    }
    return v;
}

FieldElement random_element(std::mt19937_64& rng, const FieldSpecPtr& fs) {
    if (fs->kind == FieldSpec::Kind::BinaryExtension) {
        return FieldElement::from_bits(fs, random_bits(rng, static_cast<std::size_t>(fs->m)));
    }
    return FieldElement::from_residue(fs, rng() % fs->p);
}

}  // namespace

TEST_CASE("bit vectors: hex round trips and editing") {
    BitVec v = BitVec::from_hex("05", 6);
    CHECK(v.size() == 6);
    CHECK(v.get(0));
    CHECK(v.get(2));
    CHECK_FALSE(v.get(1));
    CHECK(v.hex() == "05");
    CHECK(v.count() == 2);
    CHECK(v.top_bit() == 2);

    BitVec w = BitVec::from_hex("83");
    CHECK(w.size() == 8);
    CHECK(w.top_bit() == 7);
    CHECK(w.get(0));
    CHECK(w.get(1));
    CHECK(w.hex() == "83");

    BitVec z(5);
    CHECK_FALSE(z.any());
    CHECK(z.top_bit() == -1);
    z.set(4);
    CHECK(z.hex() == "10");
    z.set(4, false);
    CHECK_FALSE(z.any());

    // Resizing truncates or zero-extends.
    CHECK(w.resized(4).hex() == "3");
    CHECK(w.resized(12).hex() == "083");

    // XOR.
    BitVec a = BitVec::from_hex("0f", 8);
    BitVec b = BitVec::from_hex("55", 8);
    CHECK((a ^ b).hex() == "5a");

    // A vector spanning several words.
    BitVec big(130);
    big.set(0);
    big.set(64);
    big.set(129);
    CHECK(big.top_bit() == 129);
    CHECK(big.count() == 3);
    CHECK(BitVec::from_hex(big.hex(), 130) == big);
}

TEST_CASE("bit vectors: malformed input is rejected") {
    CHECK_THROWS_AS(BitVec::from_hex("0", 6), std::invalid_argument);    // needs 2 digits
    CHECK_THROWS_AS(BitVec::from_hex("123", 6), std::invalid_argument);  // too many digits
    CHECK_THROWS_AS(BitVec::from_hex("4x", 6), std::invalid_argument);   // bad digit
    CHECK_THROWS_AS(BitVec::from_hex("80", 6), std::invalid_argument);   // bit 7 outside width 6
    CHECK_THROWS_AS(BitVec::from_hex(""), std::invalid_argument);
    CHECK_THROWS_AS(BitVec::from_ulong(16, 4), std::invalid_argument);

    BitVec v(4);
    CHECK_THROWS_AS(v.get(4), std::out_of_range);
    CHECK_THROWS_AS(v.set(4), std::out_of_range);
    BitVec w(5);
    CHECK_THROWS_AS(v ^= w, std::invalid_argument);
}

TEST_CASE("irreducibility over GF(2)") {
    auto poly = [](std::initializer_list<int> exps) {
        int top = 0;
        for (int e : exps) top = std::max(top, e);
        BitVec f(static_cast<std::size_t>(top) + 1);
        for (int e : exps) f.set(static_cast<std::size_t>(e));
        return f;
    };

    CHECK(is_irreducible(poly({1, 0})));           // x + 1
    CHECK(is_irreducible(poly({1})));              // x
    CHECK(is_irreducible(poly({2, 1, 0})));        // x^2 + x + 1
    CHECK_FALSE(is_irreducible(poly({2, 0})));     // (x + 1)^2
    CHECK(is_irreducible(poly({4, 3, 2, 1, 0}))); // all-ones of degree 4
    CHECK_FALSE(is_irreducible(poly({4, 2, 0}))); // (x^2 + x + 1)^2
    CHECK(is_irreducible(poly({7, 1, 0})));        // x^7 + x + 1
    CHECK(is_irreducible(poly({7, 6, 0})));        // its reciprocal
    CHECK_FALSE(is_irreducible(poly({8, 1, 0}))); // (x^2+x+1)(x^6+x^5+x^3+x^2+1)
    CHECK_FALSE(is_irreducible(poly({6, 0})));     // has 1 as a root
    CHECK_FALSE(is_irreducible(poly({0})));        // constants are not irreducible
    CHECK_FALSE(is_irreducible(BitVec(4)));        // zero polynomial
}

TEST_CASE("default modulus choices are deterministic") {
    CHECK(default_modulus(1).hex() == "3");   // x + 1
    CHECK(default_modulus(2).hex() == "7");   // x^2 + x + 1
    CHECK(default_modulus(6).hex() == "61");  // x^6 + x^5 + 1
    CHECK(default_modulus(7).hex() == "c1");  // x^7 + x^6 + 1

    for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 30, 64, 65, 99}) {
        CAPTURE(m);
        const BitVec f = default_modulus(m);
        CHECK(f.top_bit() == m);
        CHECK(f.get(0));  // nonzero constant term
        CHECK(is_irreducible(f));
        // Deterministic: a second call returns the identical polynomial.
        CHECK(default_modulus(m) == f);
    }
    CHECK_THROWS_AS(default_modulus(0), std::invalid_argument);
}

TEST_CASE("arithmetic in GF(2^6) with modulus x^6 + x^5 + 1") {
    auto fs = FieldSpec::binary(6);
    CHECK(fs->modulus.hex() == "61");

    const FieldElement one = FieldElement::one(fs);
    const FieldElement t1 = FieldElement::theta_power(fs, 1);
    const FieldElement t5 = FieldElement::theta_power(fs, 5);

    // theta^6 = theta^5 + 1 under this modulus.
    CHECK(t5 * t1 == t5 + one);
    CHECK(FieldElement::theta_power(fs, 6) == t5 + one);

    // (1 + theta^2)^2 = 1 + theta^4: squaring is additive in characteristic 2.
    const FieldElement a = FieldElement::from_hex(fs, "05");  // 1 + theta^2
    CHECK(a.hex() == "05");
    CHECK(a * a == FieldElement::from_hex(fs, "11"));  // 1 + theta^4
    CHECK(a.frobenius(1) == a * a);

    // Inverses.
    CHECK(a * a.inverse() == one);
    CHECK_THROWS_AS(FieldElement::zero(fs).inverse(), std::domain_error);
}

TEST_CASE("explicit modulus: GF(2^7) with x^7 + x + 1") {
    auto fs = FieldSpec::binary(7, BitVec::from_hex("83"));
    const FieldElement one = FieldElement::one(fs);
    // theta^7 = theta + 1 under this modulus.
    CHECK(FieldElement::theta_power(fs, 7) == FieldElement::theta_power(fs, 1) + one);

    // The default modulus for degree 7 is a different polynomial.
    auto fs_default = FieldSpec::binary(7);
    CHECK(fs_default->modulus.hex() == "c1");
    CHECK_FALSE(fs->same_as(*fs_default));

    // Elements of fields with different moduli never compare equal and
    // cannot be combined.
    CHECK(FieldElement::one(fs) != FieldElement::one(fs_default));
    CHECK_THROWS_AS(FieldElement::one(fs) + FieldElement::one(fs_default), std::invalid_argument);
}

TEST_CASE("field spec validation") {
    CHECK_THROWS_AS(FieldSpec::binary(0), std::invalid_argument);
    // x^7 + 1 has 1 as a root.
    CHECK_THROWS_AS(FieldSpec::binary(7, BitVec::from_hex("81")), std::invalid_argument);
    // Degree mismatch.
    CHECK_THROWS_AS(FieldSpec::binary(6, BitVec::from_hex("83")), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(12), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(65537), std::invalid_argument);
    CHECK(FieldSpec::prime(65521) != nullptr);  // largest prime below 2^16
    CHECK(FieldSpec::prime(2) != nullptr);
}

TEST_CASE("arithmetic in GF(13)") {
    auto fs = FieldSpec::prime(13);
    auto el = [&](std::uint64_t v) { return FieldElement::from_residue(fs, v); };

    CHECK(el(7) + el(9) == el(3));
    CHECK(el(5) * el(8) == el(1));
    CHECK(el(5).inverse() == el(8));
    CHECK(el(3) - el(7) == el(9));
    CHECK(el(12).hex() == "c");
    CHECK(FieldElement::from_hex(fs, "c") == el(12));
    CHECK_THROWS_AS(FieldElement::from_hex(fs, "d"), std::invalid_argument);
    CHECK_THROWS_AS(el(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(el(1).frobenius(1), std::logic_error);
    // Residue construction reduces.
    CHECK(el(26) == el(0));
}

TEST_CASE("field axioms hold across representative fields") {
    std::vector<FieldSpecPtr> fields = {
        FieldSpec::binary(1),  FieldSpec::binary(6),  FieldSpec::binary(9),
        FieldSpec::binary(64), FieldSpec::binary(65), FieldSpec::binary(99),
        FieldSpec::prime(13),  FieldSpec::prime(2),   FieldSpec::prime(65521),
    };
    std::mt19937_64 rng(20240817);
    for (const auto& fs : fields) {
        const FieldElement zero = FieldElement::zero(fs);
        const FieldElement one = FieldElement::one(fs);
        for (int trial = 0; trial < 40; ++trial) {
            const FieldElement a = random_element(rng, fs);
            const FieldElement b = random_element(rng, fs);
            const FieldElement c = random_element(rng, fs);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a - a == zero);
            CHECK(a * zero == zero);
            if (!a.is_zero()) CHECK(a * a.inverse() == one);
        }
    }
}

TEST_CASE("the Frobenius map squares, is additive, and has order m") {
    std::mt19937_64 rng(7);
    for (int m : {1, 6, 9, 64, 99}) {
        auto fs = FieldSpec::binary(m);
        for (int trial = 0; trial < 25; ++trial) {
            const FieldElement a = random_element(rng, fs);
            const FieldElement b = random_element(rng, fs);
            CHECK(a.frobenius(1) == a * a);
            CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
            CHECK(a.frobenius(2) == (a * a) * (a * a));
            // Applying the squaring map m times returns to the start.
            FieldElement t = a;
            for (int i = 0; i < m; ++i) t = t * t;
            CHECK(t == a);
        }
    }
}

TEST_CASE("linearized polynomial evaluation") {
    auto fs = FieldSpec::binary(6);
    std::mt19937_64 rng(99);
    LinearizedPolynomial f;
    f.coeffs = {random_element(rng, fs), random_element(rng, fs), random_element(rng, fs)};

    for (int trial = 0; trial < 50; ++trial) {
        const FieldElement w = random_element(rng, fs);
        const FieldElement expect =
            f.coeffs[0] * w + f.coeffs[1] * (w * w) + f.coeffs[2] * ((w * w) * (w * w));
        CHECK(lp_eval(f, w) == expect);

        // Such maps are additive in the argument.
        const FieldElement v = random_element(rng, fs);
        CHECK(lp_eval(f, w + v) == lp_eval(f, w) + lp_eval(f, v));
    }

    LinearizedPolynomial empty;
    CHECK(lp_eval(empty, FieldElement::one(fs)) == FieldElement::zero(fs));
}

TEST_CASE("rank over GF(2)") {
    CHECK(gf2_rank(BitMatrix::identity(5)) == 5);
    CHECK(gf2_rank(BitMatrix(3, 4)) == 0);

    // Block-diagonal point-matrix fixture: the first block repeats a row, so
    // the total rank is 5, one short of the row count.
    const std::vector<std::vector<int>> a_rows = {
        {1, 0, 1, 0, 1}, {0, 1, 1, 0, 0}, {1, 0, 1, 0, 1}, {0, 0, 0, 1, 1}};
    const std::vector<std::vector<int>> b_rows = {{1, 0, 1}, {0, 1, 1}};
    BitMatrix w(6, 8);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 5; ++c) {
            if (a_rows[r][c]) w.set(r, c);
        }
    }
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (b_rows[r][c]) w.set(4 + r, 5 + c);
        }
    }
    CHECK(gf2_rank(w) == 5);

    // Row rank equals column rank.
    std::vector<BitVec> cols;
    for (std::size_t c = 0; c < w.cols(); ++c) cols.push_back(w.column(c));
    CHECK(gf2_rank(cols) == 5);
}

TEST_CASE("rank over a general field") {
    auto f13 = FieldSpec::prime(13);
    auto el = [&](std::uint64_t v) { return FieldElement::from_residue(f13, v); };

    FieldMatrix m = {
        {el(1), el(2), el(3)},
        {el(2), el(4), el(6)},  // twice the first row
        {el(1), el(1), el(1)},
    };
    CHECK(gfq_rank(m) == 2);

    // A Vandermonde matrix on distinct points has full rank.
    FieldMatrix v(3, std::vector<FieldElement>(3));
    const std::uint64_t pts[3] = {2, 5, 7};
    for (std::size_t r = 0; r < 3; ++r) {
        FieldElement p = el(1);
        for (std::size_t c = 0; c < 3; ++c) {
            v[r][c] = p;
            p = p * el(pts[r]);
        }
    }
    CHECK(gfq_rank(v) == 3);
    CHECK(gfq_rank(FieldMatrix{}) == 0);

    // A 0/1 matrix has the same rank over GF(2) and over an extension field.
    auto f64 = FieldSpec::binary(6);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        BitMatrix bm(5, 7);
        FieldMatrix fm(5, std::vector<FieldElement>(7, FieldElement::zero(f64)));
        for (std::size_t r = 0; r < 5; ++r) {
            for (std::size_t c = 0; c < 7; ++c) {
                if (coin(rng)) {
                    bm.set(r, c);
                    fm[r][c] = FieldElement::one(f64);
                }
            }
        }
        CHECK(gf2_rank(bm) == gfq_rank(fm));
    }
}

TEST_CASE("iterated-squaring point matrices: rank equals the bit dimension of the points") {
    // For points w_1..w_s in GF(2^m), the k x s matrix with entries
    // w_j^(2^i), i = 0..k-1, has rank min(k, dim of the GF(2)-span of the
    // points). Exercised directly here; the code constructions rely on it.
    auto fs = FieldSpec::binary(6);
    auto moore_rank = [&](const std::vector<FieldElement>& pts, int k) {
        FieldMatrix m(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            for (const auto& p : pts) m[static_cast<std::size_t>(i)].push_back(p.frobenius(i));
        }
        return gfq_rank(m);
    };

    const FieldElement one = FieldElement::one(fs);
    const FieldElement t = FieldElement::theta_power(fs, 1);
    const FieldElement t2 = FieldElement::theta_power(fs, 2);

    // Points {1, theta, 1 + theta} span a 2-dimensional GF(2) space.
    std::vector<FieldElement> dep = {one, t, one + t};
    CHECK(moore_rank(dep, 1) == 1);
    CHECK(moore_rank(dep, 2) == 2);
    CHECK(moore_rank(dep, 3) == 2);

    // Points {1, theta, theta^2} are independent over GF(2).
    std::vector<FieldElement> ind = {one, t, t2};
    CHECK(moore_rank(ind, 2) == 2);
    CHECK(moore_rank(ind, 3) == 3);
    CHECK(moore_rank(ind, 4) == 3);

    // Randomized: the rank law holds for arbitrary point sets.
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FieldElement> pts;
        std::vector<BitVec> bits;
        const int s = 1 + static_cast<int>(rng() % 5);
        for (int j = 0; j < s; ++j) {
            BitVec b = random_bits(rng, 6);
            pts.push_back(FieldElement::from_bits(fs, b));
            bits.push_back(b);
        }
        const int dim = gf2_rank(bits);
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(trial);
            CHECK(moore_rank(pts, k) == std::min(k, dim));
        }
    }
}

TEST_CASE("default-constructed elements are inert") {
    FieldElement e;
    CHECK_FALSE(e.valid());
    CHECK_THROWS_AS(e.is_zero(), std::logic_error);
    CHECK_THROWS_AS(e.hex(), std::logic_error);
    FieldElement f;
    CHECK(e == f);  // two invalid elements compare equal
    CHECK_THROWS_AS(e + f, std::logic_error);
}
