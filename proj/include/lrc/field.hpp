#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// Fixed-length bit string. Bit i is the coefficient of x^i (or theta^i) when
// the vector encodes a polynomial over GF(2). Words are least-significant
// first; unused high bits of the top word are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits);

    // Low 'nbits' bits of 'value'.
    static BitVec from_ulong(std::uint64_t value, std::size_t nbits);
    // Lowercase hex, most-significant nibble first; must be exactly
    // ceil(nbits/4) digits.
    static BitVec from_hex(std::string_view hex, std::size_t nbits);
    // Hex with the length inferred from the string; trailing high zero bits
    // are kept (size = 4 * #digits).
    static BitVec from_hex(std::string_view hex);

    std::size_t size() const { return nbits_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v = true);

    BitVec& operator^=(const BitVec& o);  // sizes must match
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    bool any() const;
    std::size_t count() const;
    // Index of the highest set bit, -1 if the vector is zero.
    int top_bit() const;

    // Copy truncated or zero-extended to 'nbits'.
    BitVec resized(std::size_t nbits) const;

    // ceil(size/4) lowercase hex digits, most-significant nibble first.
    std::string hex() const;

    bool operator==(const BitVec& o) const = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::uint64_t* word_data() { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Description of a finite field: either GF(2^m) with an explicit degree-m
// irreducible modulus over GF(2), or a prime field GF(p) with p <= 2^16.
// Instances are immutable and shared by the elements built over them.
struct FieldSpec {
    enum class Kind { BinaryExtension, Prime };

    Kind kind = Kind::BinaryExtension;
    int m = 0;            // extension degree (binary case)
    BitVec modulus;       // m+1 bits, top bit set (binary case)
    std::uint32_t p = 0;  // characteristic (prime case)

    // GF(2^m) with the deterministic default modulus for m.
    static std::shared_ptr<const FieldSpec> binary(int m);
    // GF(2^m) with an explicit modulus (validated: degree m, irreducible).
    static std::shared_ptr<const FieldSpec> binary(int m, BitVec modulus);
    // GF(p), p prime, p <= 2^16.
    static std::shared_ptr<const FieldSpec> prime(std::uint32_t p);

    bool same_as(const FieldSpec& o) const;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Deterministic modulus choice for GF(2^m): the irreducible degree-m
// polynomial whose coefficient sequence (constant term first) is
// lexicographically smallest among those with a nonzero constant term.
// A small override table pins specific degrees used by serialized fixtures.
BitVec default_modulus(int m);

// Irreducibility over GF(2): true iff 'poly' (degree >= 1) has no factor of
// degree <= deg/2, tested with gcd(x^(2^i) - x, poly).
bool is_irreducible(const BitVec& poly);

// Element of a FieldSpec field. Value-semantic; operations require both
// operands to come from the same field (checked) and throw std::logic_error
// on use of a default-constructed (fieldless) element.
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(const FieldSpecPtr& fs);
    static FieldElement one(const FieldSpecPtr& fs);
    static FieldElement from_bits(const FieldSpecPtr& fs, BitVec bits);  // binary fields
    static FieldElement from_residue(const FieldSpecPtr& fs, std::uint64_t v);  // prime fields
    static FieldElement from_hex(const FieldSpecPtr& fs, std::string_view hex);
    // theta^i for binary fields (i < m); convenience for building fixtures.
    static FieldElement theta_power(const FieldSpecPtr& fs, int i);

    const FieldSpecPtr& spec() const { return spec_; }
    bool valid() const { return spec_ != nullptr; }
    bool is_zero() const;
    const BitVec& bits() const { return bits_; }
    std::uint32_t residue() const { return residue_; }

    // Lowercase hex: ceil(m/4) digits for GF(2^m) (LSB = theta^0 coefficient),
    // ceil(bits(p-1)/4) digits for GF(p).
    std::string hex() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;  // throws std::domain_error on zero

    // a^(2^iterations); binary fields only. frobenius(1) is squaring.
    FieldElement frobenius(int iterations) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldSpecPtr spec_;
    BitVec bits_;               // binary case
    std::uint32_t residue_ = 0; // prime case
};

// f(x) = sum_i coeffs[i] * x^(2^i) over a binary extension field. Such maps
// are GF(2)-linear in x; coefficient index i is the "2^i-power" term.
struct LinearizedPolynomial {
    std::vector<FieldElement> coeffs;
};

FieldElement lp_eval(const LinearizedPolynomial& f, const FieldElement& w);

// Dense matrix over GF(2), stored one BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { data_[r].set(c, v); }
    const BitVec& row(std::size_t r) const { return data_[r]; }
    BitVec column(std::size_t c) const;

    bool operator==(const BitMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

int gf2_rank(const BitMatrix& m);
int gf2_rank(std::span<const BitVec> vectors);

// Row-major matrix over an arbitrary FieldSpec field.
using FieldMatrix = std::vector<std::vector<FieldElement>>;

int gfq_rank(const FieldMatrix& m);

}  // namespace lrc
