#include "lrc/fixtures.hpp"

namespace lrc {

LinearCode fixture_code1() {
    const auto fs = FieldSpec::binary(7, BitVec::from_hex("83"));  // x^7 + x + 1
    auto t = [&](int i) { return FieldElement::theta_power(fs, i); };
    const std::vector<FieldElement> points = {
        t(0), t(1), t(2), t(0) + t(1) + t(2),  // group one: fourth point is the sum
        t(3), t(4), t(5), t(3) + t(4) + t(5),  // group two: same shape
        t(6), t(6),                            // group three: a duplicated point
    };
    const int k = 5;
    FieldMatrix g(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        for (const auto& p : points) g[static_cast<std::size_t>(i)].push_back(p.frobenius(i));
    }
    return LinearCode(std::move(g));
}

LinearCode fixture_code2() {
    const auto fs = FieldSpec::prime(13);
    const int rows[5][10] = {
        {1, 0, 0, 1, 0, 0, 1, 5, 5, 11},
        {0, 1, 0, 1, 0, 0, 0, 3, 7, 10},
        {0, 0, 1, 1, 0, 0, 0, 10, 10, 7},
        {0, 0, 0, 0, 1, 0, 1, 6, 3, 9},
        {0, 0, 0, 0, 0, 1, 1, 10, 9, 6},
    };
    FieldMatrix g(5, std::vector<FieldElement>(10));
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 10; ++c) {
            g[r][c] = FieldElement::from_residue(fs, static_cast<std::uint64_t>(rows[r][c]));
        }
    }
    return LinearCode(std::move(g));
}

}  // namespace lrc
