#include "lrc/field.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace lrc {
namespace {

constexpr std::size_t kWordBits = 64;

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("invalid hex digit");
}

char hex_char(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

// acc ^= src << shift. The caller guarantees acc is wide enough to hold every
// shifted set bit of src.
void xor_shifted(BitVec& acc, const BitVec& src, std::size_t shift) {
    const auto sw = src.words();
    std::uint64_t* aw = acc.word_data();
    const std::size_t word_off = shift / kWordBits;
    const std::size_t bit_off = shift % kWordBits;
    for (std::size_t j = 0; j < sw.size(); ++j) {
        if (!sw[j]) continue;
        assert(j + word_off < acc.word_count());
        aw[j + word_off] ^= sw[j] << bit_off;
        if (bit_off != 0 && (sw[j] >> (kWordBits - bit_off)) != 0) {
            assert(j + word_off + 1 < acc.word_count());
            aw[j + word_off + 1] ^= sw[j] >> (kWordBits - bit_off);
        }
    }
}

BitVec poly_mul(const BitVec& a, const BitVec& b) {
    const int da = a.top_bit(), db = b.top_bit();
    if (da < 0 || db < 0) return BitVec(1);
    BitVec out(static_cast<std::size_t>(da + db) + 1);
    for (int i = 0; i <= da; ++i) {
        if (a.get(static_cast<std::size_t>(i))) {
            xor_shifted(out, b, static_cast<std::size_t>(i));
        }
    }
    return out;
}

// Remainder of a modulo f; f must be nonzero. The result is sized to deg(f)
// bits (or 1 bit when f is constant).
BitVec poly_mod(BitVec a, const BitVec& f) {
    const int df = f.top_bit();
    if (df < 0) throw std::invalid_argument("polynomial modulus is zero");
    for (int da = a.top_bit(); da >= df; da = a.top_bit()) {
        xor_shifted(a, f, static_cast<std::size_t>(da - df));
    }
    return a.resized(std::max<std::size_t>(static_cast<std::size_t>(df), 1));
}

// Quotient and remainder of a / f; f must be nonzero.
std::pair<BitVec, BitVec> poly_divmod(BitVec a, const BitVec& f) {
    const int df = f.top_bit();
    if (df < 0) throw std::invalid_argument("polynomial divisor is zero");
    const int da0 = a.top_bit();
    BitVec q(static_cast<std::size_t>(std::max(da0 - df + 1, 1)));
    for (int da = a.top_bit(); da >= df; da = a.top_bit()) {
        q.set(static_cast<std::size_t>(da - df));
        xor_shifted(a, f, static_cast<std::size_t>(da - df));
    }
    return {q, a.resized(std::max<std::size_t>(static_cast<std::size_t>(df), 1))};
}

BitVec poly_gcd(BitVec a, BitVec b) {
    while (b.any()) {
        BitVec r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BitVec poly_add(const BitVec& a, const BitVec& b) {
    const std::size_t n = std::max(a.size(), b.size());
    BitVec out = a.resized(n);
    out ^= b.resized(n);
    return out;
}

BitVec poly_mul_mod(const BitVec& a, const BitVec& b, const BitVec& f) {
    return poly_mod(poly_mul(a, b), f);
}

// Inverse of a modulo the irreducible polynomial f, via the extended
// Euclidean algorithm over GF(2)[x]. a must be nonzero.
BitVec poly_inverse(const BitVec& a, const BitVec& f) {
    BitVec r0 = f;
    BitVec r1 = poly_mod(a, f);
    BitVec s0(1), s1(1);
    s1.set(0);
    while (r1.any()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        BitVec s2 = poly_add(s0, poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is gcd(a, f); for an irreducible modulus and nonzero a it must be 1.
    if (r0.top_bit() != 0) throw std::domain_error("element has no inverse modulo a reducible polynomial");
    return poly_mod(s0, f);
}

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint32_t prime_inverse(std::uint32_t a, std::uint32_t p) {
    // Extended Euclid over the integers.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("element has no inverse");
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

const FieldSpec& require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.valid() || !b.valid()) throw std::logic_error("operation on a default-constructed field element");
    if (!a.spec()->same_as(*b.spec())) throw std::invalid_argument("field elements belong to different fields");
    return *a.spec();
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVec

BitVec::BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

BitVec BitVec::from_ulong(std::uint64_t value, std::size_t nbits) {
    BitVec v(nbits);
    for (std::size_t i = 0; i < nbits && i < kWordBits; ++i) {
        if ((value >> i) & 1u) v.set(i);
    }
    if (nbits < kWordBits && nbits < 64 && (value >> nbits) != 0) {
        throw std::invalid_argument("value does not fit in the requested bit width");
    }
    return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t nbits) {
    const std::size_t want = (nbits + 3) / 4;
    if (hex.size() != want) throw std::invalid_argument("hex string has the wrong number of digits for this bit width");
    BitVec v(nbits);
    const std::size_t digits = hex.size();
    for (std::size_t j = 0; j < digits; ++j) {
        const int d = hex_value(hex[j]);
        const std::size_t base = 4 * (digits - 1 - j);
        for (int b = 0; b < 4; ++b) {
            if ((d >> b) & 1) {
                const std::size_t idx = base + static_cast<std::size_t>(b);
                if (idx >= nbits) throw std::invalid_argument("hex value exceeds the requested bit width");
                v.set(idx);
            }
        }
    }
    return v;
}

BitVec BitVec::from_hex(std::string_view hex) {
    if (hex.empty()) throw std::invalid_argument("empty hex string");
    return from_hex(hex, 4 * hex.size());
}

bool BitVec::get(std::size_t i) const {
    if (i >= nbits_) throw std::out_of_range("bit index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVec::set(std::size_t i, bool v) {
    if (i >= nbits_) throw std::out_of_range("bit index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (nbits_ != o.nbits_) throw std::invalid_argument("bit vector sizes differ");
    for (std::size_t j = 0; j < words_.size(); ++j) words_[j] ^= o.words_[j];
    return *this;
}

bool BitVec::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

int BitVec::top_bit() const {
    for (std::size_t j = words_.size(); j-- > 0;) {
        if (words_[j] != 0) {
            return static_cast<int>(j * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[j]))));
        }
    }
    return -1;
}

BitVec BitVec::resized(std::size_t nbits) const {
    BitVec v(nbits);
    const std::size_t copy_words = std::min(v.words_.size(), words_.size());
    std::copy_n(words_.begin(), copy_words, v.words_.begin());
    // Clear any bits beyond the new size in the top word.
    const std::size_t rem = nbits % kWordBits;
    if (!v.words_.empty() && rem != 0) {
        v.words_.back() &= (std::uint64_t{1} << rem) - 1;
    }
    return v;
}

std::string BitVec::hex() const {
    const std::size_t digits = (nbits_ + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t j = 0; j < digits; ++j) {
        int d = 0;
        const std::size_t base = 4 * (digits - 1 - j);
        for (int b = 0; b < 4; ++b) {
            const std::size_t idx = base + static_cast<std::size_t>(b);
            if (idx < nbits_ && get(idx)) d |= 1 << b;
        }
        out[j] = hex_char(d);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FieldSpec

bool is_irreducible(const BitVec& poly) {
    const int d = poly.top_bit();
    if (d < 1) return false;
    // x reduced modulo poly.
    BitVec x(2);
    x.set(1);
    const BitVec x_mod = poly_mod(x, poly);
    BitVec cur = x_mod;
    for (int i = 1; i <= d / 2; ++i) {
        cur = poly_mul_mod(cur, cur, poly);  // cur = x^(2^i) mod poly
        const BitVec g = poly_gcd(poly_add(cur, x_mod), poly);
        if (g.top_bit() != 0) return false;  // shares a factor of degree <= d/2 (or is zero)
    }
    return true;
}

BitVec default_modulus(int m) {
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    static std::map<int, BitVec> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    BitVec result;
    if (m == 6) {
        // Pinned choice: x^6 + x^5 + 1 (also what the general rule below picks).
        BitVec f(7);
        f.set(0);
        f.set(5);
        f.set(6);
        result = f;
    } else {
        // Enumerate candidates in lexicographic order of the coefficient
        // sequence (c_1, ..., c_{m-1}), with c_0 = c_m = 1 fixed: the counter's
        // bit (m-1-i) is coefficient c_i, so incrementing the counter walks the
        // sequences in lex order. Low-weight irreducibles appear within the
        // first few thousand candidates for every practical degree.
        const std::uint64_t limit = (m - 1 >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << (m - 1));
        bool found = false;
        for (std::uint64_t rev = 0; rev < limit; ++rev) {
            BitVec f(static_cast<std::size_t>(m) + 1);
            f.set(0);
            f.set(static_cast<std::size_t>(m));
            for (int i = 1; i <= m - 1; ++i) {
                const int bit = m - 1 - i;
                if (bit < 64 && ((rev >> bit) & 1u)) f.set(static_cast<std::size_t>(i));
            }
            if (is_irreducible(f)) {
                result = f;
                found = true;
                break;
            }
            if (rev == limit - 1) break;
        }
        if (!found) throw std::logic_error("no irreducible polynomial found for this degree");
    }
    cache.emplace(m, result);
    return result;
}

std::shared_ptr<const FieldSpec> FieldSpec::binary(int m) { return binary(m, default_modulus(m)); }

std::shared_ptr<const FieldSpec> FieldSpec::binary(int m, BitVec modulus) {
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus.top_bit() != m) throw std::invalid_argument("modulus degree must equal the extension degree");
    modulus = modulus.resized(static_cast<std::size_t>(m) + 1);
    if (!is_irreducible(modulus)) throw std::invalid_argument("modulus polynomial is not irreducible");
    auto fs = std::make_shared<FieldSpec>();
    fs->kind = Kind::BinaryExtension;
    fs->m = m;
    fs->modulus = std::move(modulus);
    return fs;
}

std::shared_ptr<const FieldSpec> FieldSpec::prime(std::uint32_t p) {
    if (p > 65536) throw std::invalid_argument("prime field characteristic must be <= 2^16");
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic must be prime");
    auto fs = std::make_shared<FieldSpec>();
    fs->kind = Kind::Prime;
    fs->p = p;
    return fs;
}

bool FieldSpec::same_as(const FieldSpec& o) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Prime) return p == o.p;
    return m == o.m && modulus == o.modulus;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement FieldElement::zero(const FieldSpecPtr& fs) {
    if (!fs) throw std::invalid_argument("null field spec");
    FieldElement e;
    e.spec_ = fs;
    if (fs->kind == FieldSpec::Kind::BinaryExtension) e.bits_ = BitVec(static_cast<std::size_t>(fs->m));
    return e;
}

FieldElement FieldElement::one(const FieldSpecPtr& fs) {
    FieldElement e = zero(fs);
    if (fs->kind == FieldSpec::Kind::BinaryExtension) {
        e.bits_.set(0);
    } else {
        e.residue_ = 1 % fs->p;
    }
    return e;
}

FieldElement FieldElement::from_bits(const FieldSpecPtr& fs, BitVec bits) {
    if (!fs) throw std::invalid_argument("null field spec");
    if (fs->kind != FieldSpec::Kind::BinaryExtension) {
        throw std::invalid_argument("bit-vector construction requires a binary extension field");
    }
    if (bits.top_bit() >= fs->m) throw std::invalid_argument("bit vector does not fit in the field");
    FieldElement e;
    e.spec_ = fs;
    e.bits_ = bits.resized(static_cast<std::size_t>(fs->m));
    return e;
}

FieldElement FieldElement::from_residue(const FieldSpecPtr& fs, std::uint64_t v) {
    if (!fs) throw std::invalid_argument("null field spec");
    if (fs->kind != FieldSpec::Kind::Prime) throw std::invalid_argument("residue construction requires a prime field");
    FieldElement e;
    e.spec_ = fs;
    e.residue_ = static_cast<std::uint32_t>(v % fs->p);
    return e;
}

FieldElement FieldElement::from_hex(const FieldSpecPtr& fs, std::string_view hex) {
    if (!fs) throw std::invalid_argument("null field spec");
    if (fs->kind == FieldSpec::Kind::BinaryExtension) {
        return from_bits(fs, BitVec::from_hex(hex, static_cast<std::size_t>(fs->m)));
    }
    std::uint64_t v = 0;
    if (hex.empty() || hex.size() > 16) throw std::invalid_argument("invalid hex string");
    for (char c : hex) v = (v << 4) | static_cast<std::uint64_t>(hex_value(c));
    if (v >= fs->p) throw std::invalid_argument("hex value is not a reduced residue");
    return from_residue(fs, v);
}

FieldElement FieldElement::theta_power(const FieldSpecPtr& fs, int i) {
    if (!fs) throw std::invalid_argument("null field spec");
    if (fs->kind != FieldSpec::Kind::BinaryExtension) {
        throw std::invalid_argument("theta powers require a binary extension field");
    }
    if (i < 0) throw std::invalid_argument("negative power");
    if (i < fs->m) {
        BitVec b(static_cast<std::size_t>(fs->m));
        b.set(static_cast<std::size_t>(i));
        return from_bits(fs, b);
    }
    BitVec b(static_cast<std::size_t>(i) + 1);
    b.set(static_cast<std::size_t>(i));
    return from_bits(fs, poly_mod(b, fs->modulus).resized(static_cast<std::size_t>(fs->m)));
}

bool FieldElement::is_zero() const {
    if (!valid()) throw std::logic_error("operation on a default-constructed field element");
    return spec_->kind == FieldSpec::Kind::BinaryExtension ? !bits_.any() : residue_ == 0;
}

std::string FieldElement::hex() const {
    if (!valid()) throw std::logic_error("operation on a default-constructed field element");
    if (spec_->kind == FieldSpec::Kind::BinaryExtension) return bits_.hex();
    const int width_bits = std::max(static_cast<int>(std::bit_width(spec_->p - 1)), 1);
    const int digits = (width_bits + 3) / 4;
    std::string out(static_cast<std::size_t>(digits), '0');
    std::uint32_t v = residue_;
    for (int j = digits - 1; j >= 0; --j) {
        out[static_cast<std::size_t>(j)] = hex_char(static_cast<int>(v & 0xf));
        v >>= 4;
    }
    return out;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const FieldSpec& fs = require_same_field(*this, o);
    FieldElement e = *this;
    if (fs.kind == FieldSpec::Kind::BinaryExtension) {
        e.bits_ ^= o.bits_;
    } else {
        e.residue_ = (residue_ + o.residue_) % fs.p;
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const FieldSpec& fs = require_same_field(*this, o);
    FieldElement e = *this;
    if (fs.kind == FieldSpec::Kind::BinaryExtension) {
        e.bits_ ^= o.bits_;
    } else {
        e.residue_ = (residue_ + fs.p - o.residue_) % fs.p;
    }
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const FieldSpec& fs = require_same_field(*this, o);
    FieldElement e = *this;
    if (fs.kind == FieldSpec::Kind::BinaryExtension) {
        e.bits_ = poly_mul_mod(bits_, o.bits_, fs.modulus).resized(static_cast<std::size_t>(fs.m));
    } else {
        e.residue_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(residue_) * o.residue_) % fs.p);
    }
    return e;
}

FieldElement FieldElement::inverse() const {
    if (!valid()) throw std::logic_error("operation on a default-constructed field element");
    if (is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    FieldElement e = *this;
    if (spec_->kind == FieldSpec::Kind::BinaryExtension) {
        e.bits_ = poly_inverse(bits_, spec_->modulus).resized(static_cast<std::size_t>(spec_->m));
    } else {
        e.residue_ = prime_inverse(residue_, spec_->p);
    }
    return e;
}

FieldElement FieldElement::frobenius(int iterations) const {
    if (!valid()) throw std::logic_error("operation on a default-constructed field element");
    if (spec_->kind != FieldSpec::Kind::BinaryExtension) {
        throw std::logic_error("the Frobenius map is implemented for binary extension fields only");
    }
    if (iterations < 0) throw std::invalid_argument("negative Frobenius iteration count");
    // x -> x^(2^m) is the identity on GF(2^m).
    iterations %= spec_->m;
    FieldElement e = *this;
    for (int i = 0; i < iterations; ++i) e = e * e;
    return e;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    if (!spec_->same_as(*o.spec_)) return false;
    if (spec_->kind == FieldSpec::Kind::BinaryExtension) return bits_ == o.bits_;
    return residue_ == o.residue_;
}

// ---------------------------------------------------------------------------
// Linearized polynomials

FieldElement lp_eval(const LinearizedPolynomial& f, const FieldElement& w) {
    if (!w.valid()) throw std::logic_error("operation on a default-constructed field element");
    FieldElement acc = FieldElement::zero(w.spec());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        acc = acc + f.coeffs[i] * w.frobenius(static_cast<int>(i));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Matrices and ranks

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitVec BitMatrix::column(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

int gf2_rank(std::span<const BitVec> vectors) {
    std::map<int, BitVec> basis;  // keyed by pivot (top bit)
    for (const BitVec& v : vectors) {
        BitVec cur = v;
        for (;;) {
            const int t = cur.top_bit();
            if (t < 0) break;
            auto it = basis.find(t);
            if (it == basis.end()) {
                basis.emplace(t, std::move(cur));
                break;
            }
            cur ^= it->second;
        }
    }
    return static_cast<int>(basis.size());
}

int gf2_rank(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return gf2_rank(rows);
}

int gfq_rank(const FieldMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t cc = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cc) throw std::invalid_argument("ragged matrix");
        for (const auto& e : row) {
            if (!e.valid()) throw std::logic_error("matrix contains a default-constructed field element");
            if (!e.spec()->same_as(*m[0][0].spec())) throw std::invalid_argument("matrix mixes different fields");
        }
    }
    FieldMatrix rows = m;
    const std::size_t rc = rows.size();
    std::size_t pivot_row = 0;
    int rank = 0;
    for (std::size_t c = 0; c < cc && pivot_row < rc; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rc && rows[sel][c].is_zero()) ++sel;
        if (sel == rc) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const FieldElement inv = rows[pivot_row][c].inverse();
        for (std::size_t r = pivot_row + 1; r < rc; ++r) {
            if (rows[r][c].is_zero()) continue;
            const FieldElement factor = rows[r][c] * inv;
            for (std::size_t c2 = c; c2 < cc; ++c2) {
                rows[r][c2] = rows[r][c2] - factor * rows[pivot_row][c2];
            }
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace lrc
