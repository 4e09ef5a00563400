#include "lrc/serialize.hpp"

#include <string>

namespace lrc {

namespace {

nlohmann::json generator_hexes(const LinearCode& code) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : code.generator())
        for (const FieldElement& e : row) rows.push_back(e.hex());
    return rows;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Y: return "Y";
        case Verdict::N: return "N";
        default: return "OOS";
    }
}

}  // namespace

nlohmann::json code_to_json(const LinearCode& code) {
    const FieldSpec& fs = *code.field();
    nlohmann::json field;
    if (fs.kind == FieldSpec::Kind::BinaryExtension) {
        field = {{"kind", "binary"}, {"m", fs.m}, {"modulus", fs.modulus.hex()}};
    } else {
        field = {{"kind", "prime"}, {"p", fs.p}};
    }
    return {{"field", field},
            {"n", code.n()},
            {"k", code.k()},
            {"generator", generator_hexes(code)}};
}

nlohmann::json cover_to_json(const Cover& cover) {
    return {{"n", cover.n}, {"r", cover.r}, {"sets", cover.sets}};
}

nlohmann::json constructed_to_json(const ConstructedCode& constructed) {
    const CodeParams& p = constructed.points.params;
    nlohmann::json omega = nlohmann::json::array();
    for (std::size_t i = 0; i < constructed.points.labels.size(); ++i) {
        omega.push_back({{"label", constructed.points.labels[i].str()},
                         {"element", constructed.points.elements[i].hex()}});
    }
    return {{"params", {{"n", p.n}, {"k", p.k}, {"r", p.r}}},
            {"modulus", constructed.code.field()->modulus.hex()},
            {"omega", omega},
            {"generator", generator_hexes(constructed.code)}};
}

std::string bounds_csv(int n, int r, const std::vector<BoundsRow>& rows) {
    std::string out = "n,k,r,gopalan,prakash,ip,disjoint\n";
    for (const BoundsRow& row : rows) {
        out += std::to_string(n) + ',' + std::to_string(row.k) + ',' +
               std::to_string(r) + ',' + std::to_string(row.gopalan) + ',' +
               std::to_string(row.prakash) + ',';
        if (row.ip.has_value()) out += std::to_string(*row.ip);
        out += ',' + std::to_string(row.disjoint) + '\n';
    }
    return out;
}

std::string grid_csv(const std::vector<GridCell>& cells) {
    std::string out = "k,r,verdict\n";
    for (const GridCell& cell : cells) {
        out += std::to_string(cell.k) + ',' + std::to_string(cell.r) + ',' +
               verdict_name(cell.verdict) + '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<OptimalityReport>& reports) {
    std::string out = "n,k,r,eta_tilde,d_oracle,match\n";
    for (const OptimalityReport& rep : reports) {
        out += std::to_string(rep.params.n) + ',' + std::to_string(rep.params.k) +
               ',' + std::to_string(rep.params.r) + ',' +
               std::to_string(rep.eta_tilde) + ',';
        if (rep.applicable) out += std::to_string(rep.d_oracle);
        out += ',';
        out += (rep.ok() ? "true" : "false");
        out += '\n';
    }
    return out;
}

}  // namespace lrc
