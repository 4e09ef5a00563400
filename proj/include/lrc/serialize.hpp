#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lrc/bounds.hpp"
#include "lrc/codes.hpp"
#include "lrc/construct.hpp"
#include "lrc/cover.hpp"

namespace lrc {

// {field: {kind: "binary", m, modulus} | {kind: "prime", p}, n, k,
//  generator: row-major array of element hex strings}.
nlohmann::json code_to_json(const LinearCode& code);

// {n, r, sets: array of arrays of 1-based coordinates}.
nlohmann::json cover_to_json(const Cover& cover);

// {params: {n, k, r}, modulus: hex, omega: array of {label, element},
//  generator: as in code_to_json}.
nlohmann::json constructed_to_json(const ConstructedCode& constructed);

// CSV tables, one row per entry, deterministic bytes, trailing newline.
// Header `n,k,r,gopalan,prakash,ip,disjoint`; empty ip cell when the
// footprint program was out of computable scale.
std::string bounds_csv(int n, int r, const std::vector<BoundsRow>& rows);

// Header `k,r,verdict` with verdict in {Y, N, OOS}.
std::string grid_csv(const std::vector<GridCell>& cells);

// Header `n,k,r,eta_tilde,d_oracle,match`; empty oracle cell and a false
// match when a report was not applicable.
std::string sweep_csv(const std::vector<OptimalityReport>& reports);

}  // namespace lrc
