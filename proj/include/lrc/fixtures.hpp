#pragma once

#include "lrc/codes.hpp"

namespace lrc {

// [10,5] code over GF(2^7) (modulus x^7 + x + 1) with locality 3: rows are
// iterated squares of ten evaluation points arranged as two full repair
// groups of four plus one duplicated point. Minimum distance 4, which meets
// the repair-footprint upper bound.
LinearCode fixture_code1();

// [10,5] code over GF(13) with locality 3 and minimum distance 5: one pivot
// coordinate shared by all three repair groups.
LinearCode fixture_code2();

}  // namespace lrc
