#include <string>
#include <vector>

#include "doctest.h"
#include "lrc/bounds.hpp"
#include "lrc/construct.hpp"
#include "lrc/cover.hpp"
#include "lrc/fixtures.hpp"
#include "lrc/serialize.hpp"

using namespace lrc;
using nlohmann::json;

TEST_CASE("code serialization over a prime field") {
    const json j = code_to_json(fixture_code2());
    CHECK(j["field"]["kind"] == "prime");
    CHECK(j["field"]["p"] == 13);
    CHECK_FALSE(j["field"].contains("modulus"));
    CHECK(j["n"] == 10);
    CHECK(j["k"] == 5);
    REQUIRE(j["generator"].size() == 50);
    // Example spot value: top-left entry of the printed generator.
    CHECK(j["generator"][0] == fixture_code2().generator()[0][0].hex());
}

TEST_CASE("code serialization over a binary field") {
    const ConstructedCode cc = build_lrc(CodeParams::make(8, 4, 2));
    const json j = code_to_json(cc.code);
    CHECK(j["field"]["kind"] == "binary");
    CHECK(j["field"]["m"] == 6);
    CHECK(j["field"]["modulus"] == "61");
    REQUIRE(j["generator"].size() == 32);
    const std::vector<std::string> first_row{"05", "02", "07", "08",
                                             "0d", "10", "20", "30"};
    for (int i = 0; i < 8; ++i) CHECK(j["generator"][i] == first_row[i]);
}

TEST_CASE("cover serialization") {
    const Cover cover = validate_cover(10, 3, {{1, 5, 6, 7}, {1, 2, 3, 4}, {1, 8, 9, 10}});
    const json j = cover_to_json(cover);
    CHECK(j["n"] == 10);
    CHECK(j["r"] == 3);
    // Canonical order from validation survives into the export.
    CHECK(j["sets"] == json({{1, 2, 3, 4}, {1, 5, 6, 7}, {1, 8, 9, 10}}));
}

TEST_CASE("constructed-code serialization") {
    const ConstructedCode cc = build_lrc(CodeParams::make(8, 4, 2));
    const json j = constructed_to_json(cc);
    CHECK(j["params"] == json({{"n", 8}, {"k", 4}, {"r", 2}}));
    CHECK(j["modulus"] == "61");
    REQUIRE(j["omega"].size() == 8);
    CHECK(j["omega"][0] == json({{"label", "1/root"}, {"element", "05"}}));
    CHECK(j["omega"][7] == json({{"label", "2/1/2"}, {"element", "30"}}));
    CHECK(j["generator"][0] == "05");
    CHECK(j["generator"].size() == 32);
    // Dumping twice gives identical bytes.
    CHECK(j.dump() == constructed_to_json(cc).dump());
}

TEST_CASE("bounds table CSV") {
    const auto rows = comparison_table(13, 3, 4, 9);
    const std::string csv = bounds_csv(13, 3, rows);
    REQUIRE(csv.substr(0, 36) == "n,k,r,gopalan,prakash,ip,disjoint\n13");
    const std::string expected =
        "n,k,r,gopalan,prakash,ip,disjoint\n"
        "13,4,3,9,9,9,8\n"
        "13,5,3,8,8,8,7\n"
        "13,6,3,7,6,6,6\n"
        "13,7,3,5,5,5,4\n"
        "13,8,3,4,3,3,3\n"
        "13,9,3,3,2,2,2\n";
    CHECK(csv == expected);
    CHECK(bounds_csv(13, 3, comparison_table(13, 3, 4, 9)) == csv);
}

TEST_CASE("bounds CSV with an uncomputable cell") {
    BoundsRow row;
    row.k = 4;
    row.gopalan = 9;
    row.prakash = 9;
    row.ip = std::nullopt;
    row.disjoint = 8;
    CHECK(bounds_csv(13, 3, {row}) ==
          "n,k,r,gopalan,prakash,ip,disjoint\n13,4,3,9,9,,8\n");
}

TEST_CASE("grid CSV") {
    const auto cells = attainability_grid(50, 10, 11, 2, 3);
    CHECK(grid_csv(cells) ==
          "k,r,verdict\n"
          "10,2,N\n"
          "10,3,Y\n"
          "11,2,Y\n"
          "11,3,N\n");
}

TEST_CASE("sweep CSV") {
    std::vector<OptimalityReport> reports{
        verify_distance_optimality(CodeParams::make(8, 4, 2)),
        verify_distance_optimality(CodeParams::make(10, 5, 3))};
    CHECK(sweep_csv(reports) ==
          "n,k,r,eta_tilde,d_oracle,match\n"
          "8,4,2,2,3,true\n"
          "10,5,3,1,5,true\n");
}
