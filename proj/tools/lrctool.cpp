// Command-line front end for the locally-repairable-code library: bound
// tables, footprint (psi) tables, attainability grids, code construction
// with JSON export, encode/repair demos, and fixture verification.
//
// Exit codes: 0 success, 1 fixture/assertion failure, 2 invalid parameters,
// 3 scale guard tripped, 4 out-of-scope parameters.

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrc/bounds.hpp"
#include "lrc/codes.hpp"
#include "lrc/construct.hpp"
#include "lrc/cover.hpp"
#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/fixtures.hpp"
#include "lrc/serialize.hpp"

namespace {

using nlohmann::json;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text, const std::string& flag) {
    const auto bad = [&] {
        throw std::invalid_argument(flag + ": expected a positive integer or a..b, got '" +
                                    text + "'");
    };
    const auto to_int = [&](const std::string& part) {
        if (part.empty() || part.size() > 9) bad();
        for (char c : part)
            if (c < '0' || c > '9') bad();
        return std::stoi(part);
    };
    Range out;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        out.lo = out.hi = to_int(text);
    } else {
        out.lo = to_int(text.substr(0, dots));
        out.hi = to_int(text.substr(dots + 2));
    }
    if (out.lo < 1 || out.hi < out.lo) bad();
    return out;
}

int parse_single(const std::string& text, const std::string& flag) {
    const Range r = parse_range(text, flag);
    if (r.lo != r.hi)
        throw std::invalid_argument(flag + ": expected a single value, got a range");
    return r.lo;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

lrc::BitVec parse_modulus(const std::string& hex, int m) {
    return lrc::BitVec::from_hex(hex, m + 1);
}

std::vector<lrc::FieldElement> seeded_message(const lrc::FieldSpecPtr& fs, int k,
                                              unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<lrc::FieldElement> msg;
    for (int i = 0; i < k; ++i) {
        lrc::BitVec bits(static_cast<std::size_t>(fs->m));
        for (int b = 0; b < fs->m; ++b)
            if (rng() & 1u) bits.set(static_cast<std::size_t>(b));
        msg.push_back(lrc::FieldElement::from_bits(fs, bits));
    }
    return msg;
}

// ---------------------------------------------------------------- bounds --

int cmd_bounds(int n, int r, Range k, const std::string& format,
               const std::string& out) {
    const auto rows = lrc::comparison_table(n, r, k.lo, k.hi);
    if (rows.empty())
        throw std::invalid_argument("no valid k in " + std::to_string(k.lo) + ".." +
                                    std::to_string(k.hi) + " for n=" + std::to_string(n) +
                                    ", r=" + std::to_string(r));
    std::string text;
    if (format == "csv") {
        text = lrc::bounds_csv(n, r, rows);
    } else if (format == "json") {
        json jrows = json::array();
        for (const auto& row : rows) {
            json j{{"k", row.k},
                   {"gopalan", row.gopalan},
                   {"prakash", row.prakash},
                   {"disjoint", row.disjoint}};
            j["ip"] = row.ip.has_value() ? json(*row.ip) : json(nullptr);
            jrows.push_back(j);
        }
        text = json{{"n", n}, {"r", r}, {"rows", jrows}}.dump(2) + "\n";
    } else {
        text = "n=" + std::to_string(n) + " r=" + std::to_string(r) + "\n";
        std::size_t next = 0;
        for (int kk = k.lo; kk <= k.hi; ++kk) {
            if (next < rows.size() && rows[next].k == kk) {
                const auto& row = rows[next++];
                text += "k=" + std::to_string(kk) + ": gopalan=" +
                        std::to_string(row.gopalan) + " prakash=" +
                        std::to_string(row.prakash) + " ip=" +
                        (row.ip.has_value() ? std::to_string(*row.ip) : "n/a") +
                        " disjoint=" + std::to_string(row.disjoint) + "\n";
            } else {
                text += "k=" + std::to_string(kk) + ": skipped (invalid parameters)\n";
            }
        }
    }
    emit(text, out);
    return 0;
}

// ------------------------------------------------------------------- psi --

int cmd_psi(int n, int r, const std::string& method, const std::string& format,
            const std::string& out) {
    if (n < 1 || r < 1 || r + 1 > n)
        throw std::invalid_argument("psi needs n > r >= 1");
    const lrc::CodeParams p = lrc::CodeParams::make(n, r + 1, r);
    const bool closed = method != "exhaustive";
    const bool exhaustive = method != "closed";

    std::vector<std::optional<int>> closed_vals(static_cast<std::size_t>(p.n1));
    std::vector<std::optional<int>> exh_vals(static_cast<std::size_t>(p.n1));
    for (int x = 1; x <= p.n1; ++x) {
        if (closed) closed_vals[static_cast<std::size_t>(x - 1)] = lrc::psi_closed(p, x);
        if (exhaustive)
            exh_vals[static_cast<std::size_t>(x - 1)] = lrc::psi_exhaustive(n, r, x);
    }

    std::string text;
    if (format == "csv") {
        text = "x,closed,exhaustive\n";
        for (int x = 1; x <= p.n1; ++x) {
            text += std::to_string(x) + ',';
            if (closed) text += std::to_string(*closed_vals[static_cast<std::size_t>(x - 1)]);
            text += ',';
            if (exhaustive) text += std::to_string(*exh_vals[static_cast<std::size_t>(x - 1)]);
            text += '\n';
        }
    } else if (format == "json") {
        json rows = json::array();
        for (int x = 1; x <= p.n1; ++x) {
            json row{{"x", x}};
            if (closed) row["closed"] = *closed_vals[static_cast<std::size_t>(x - 1)];
            if (exhaustive) row["exhaustive"] = *exh_vals[static_cast<std::size_t>(x - 1)];
            rows.push_back(row);
        }
        text = json{{"n", n}, {"r", r}, {"n1", p.n1}, {"rows", rows}}.dump(2) + "\n";
    } else {
        text = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
               " n1=" + std::to_string(p.n1) + "\n";
        for (int x = 1; x <= p.n1; ++x) {
            text += "x=" + std::to_string(x) + ":";
            if (closed)
                text += " closed=" + std::to_string(*closed_vals[static_cast<std::size_t>(x - 1)]);
            if (exhaustive)
                text += " exhaustive=" +
                        std::to_string(*exh_vals[static_cast<std::size_t>(x - 1)]);
            text += '\n';
        }
    }
    emit(text, out);
    return 0;
}

// ------------------------------------------------------------------ grid --

int cmd_grid(int n, Range k, Range r, const std::string& format,
             const std::string& out) {
    const auto cells = lrc::attainability_grid(n, k.lo, k.hi, r.lo, r.hi);
    std::string text;
    if (format == "csv") {
        text = lrc::grid_csv(cells);
    } else if (format == "json") {
        json jcells = json::array();
        for (const auto& c : cells) {
            const char* v = c.verdict == lrc::Verdict::Y   ? "Y"
                            : c.verdict == lrc::Verdict::N ? "N"
                                                           : "OOS";
            jcells.push_back({{"k", c.k}, {"r", c.r}, {"verdict", v}});
        }
        text = json{{"n", n}, {"cells", jcells}}.dump(2) + "\n";
    } else {
        text = "n=" + std::to_string(n) + "\n";
        for (const auto& c : cells) {
            const char* v = c.verdict == lrc::Verdict::Y   ? "Y"
                            : c.verdict == lrc::Verdict::N ? "N"
                                                           : "OOS";
            text += "k=" + std::to_string(c.k) + " r=" + std::to_string(c.r) + ": " +
                    v + "\n";
        }
    }
    emit(text, out);
    return 0;
}

// ------------------------------------------------------------- construct --

int cmd_construct(int n, int k, int r, const std::string& modulus_hex, bool verify,
                  const std::string& format, const std::string& out) {
    const lrc::CodeParams p = lrc::CodeParams::make(n, k, r);
    std::optional<lrc::BitVec> modulus;
    if (!modulus_hex.empty()) modulus = parse_modulus(modulus_hex, p.n1 * p.r);

    const lrc::ConstructedCode cc =
        modulus ? lrc::build_lrc(p, *modulus) : lrc::build_lrc(p);
    std::optional<lrc::OptimalityReport> report;
    if (verify) report = lrc::verify_distance_optimality(p);

    std::string text;
    if (format == "csv") {
        if (!report)
            throw std::invalid_argument(
                "csv output reports the verification sweep; pass --verify");
        text = lrc::sweep_csv({*report});
    } else if (format == "text") {
        text = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
               " r=" + std::to_string(p.r) + " (n1=" + std::to_string(p.n1) +
               " n2=" + std::to_string(p.n2) + " mu=" + std::to_string(p.mu) +
               " lambda=" + std::to_string(p.lambda) + " nu=" + std::to_string(p.nu) +
               ")\n";
        text += "field GF(2^" + std::to_string(p.n1 * p.r) + "), modulus " +
                cc.code.field()->modulus.hex() + "\n";
        for (std::size_t i = 0; i < cc.points.labels.size(); ++i)
            text += cc.points.labels[i].str() + " " + cc.points.elements[i].hex() + "\n";
        if (report) {
            text += "verify: eta=" + std::to_string(report->eta_tilde) +
                    " expected_d=" + std::to_string(report->d_expected) +
                    " oracle_d=" + std::to_string(report->d_oracle) + " distance=" +
                    (report->distance_matches ? "match" : "MISMATCH") + " footprint=" +
                    (report->footprint_matches ? "match" : "MISMATCH") + "\n";
        }
    } else {
        json j = lrc::constructed_to_json(cc);
        if (report) {
            j["verify"] = {{"eta_tilde", report->eta_tilde},
                           {"d_expected", report->d_expected},
                           {"d_oracle", report->d_oracle},
                           {"distance_match", report->distance_matches},
                           {"footprint_match", report->footprint_matches},
                           {"ok", report->ok()}};
        }
        text = j.dump(2) + "\n";
    }
    emit(text, out);
    if (report && !report->ok()) return 1;
    return 0;
}

// ---------------------------------------------------------------- encode --

int cmd_encode(int n, int k, int r, const std::string& modulus_hex, unsigned seed,
               const std::string& format, const std::string& out) {
    const lrc::CodeParams p = lrc::CodeParams::make(n, k, r);
    std::optional<lrc::BitVec> modulus;
    if (!modulus_hex.empty()) modulus = parse_modulus(modulus_hex, p.n1 * p.r);
    const lrc::ConstructedCode cc =
        modulus ? lrc::build_lrc(p, *modulus) : lrc::build_lrc(p);

    const auto message = seeded_message(cc.code.field(), p.k, seed);
    const auto word = lrc::encode(cc.code, message);

    std::string text;
    if (format == "json") {
        json jmsg = json::array();
        for (const auto& m : message) jmsg.push_back(m.hex());
        json jword = json::array();
        for (std::size_t i = 0; i < word.size(); ++i)
            jword.push_back({{"label", cc.points.labels[i].str()},
                             {"element", word[i].hex()}});
        text = json{{"params", {{"n", p.n}, {"k", p.k}, {"r", p.r}}},
                    {"modulus", cc.code.field()->modulus.hex()},
                    {"seed", seed},
                    {"message", jmsg},
                    {"codeword", jword}}
                   .dump(2) +
               "\n";
    } else if (format == "csv") {
        text = "label,element\n";
        for (std::size_t i = 0; i < word.size(); ++i)
            text += cc.points.labels[i].str() + "," + word[i].hex() + "\n";
    } else {
        text = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
               " r=" + std::to_string(p.r) + " seed=" + std::to_string(seed) +
               " modulus=" + cc.code.field()->modulus.hex() + "\n";
        text += "message:";
        for (const auto& m : message) text += " " + m.hex();
        text += "\ncodeword:\n";
        for (std::size_t i = 0; i < word.size(); ++i)
            text += "  " + cc.points.labels[i].str() + " " + word[i].hex() + "\n";
    }
    emit(text, out);
    return 0;
}

// ----------------------------------------------------------- repair-demo --

int cmd_repair_demo(int n, int k, int r, const std::string& modulus_hex,
                    unsigned seed, const std::string& format, const std::string& out) {
    const lrc::CodeParams p = lrc::CodeParams::make(n, k, r);
    std::optional<lrc::BitVec> modulus;
    if (!modulus_hex.empty()) modulus = parse_modulus(modulus_hex, p.n1 * p.r);
    const lrc::ConstructedCode cc =
        modulus ? lrc::build_lrc(p, *modulus) : lrc::build_lrc(p);

    const auto message = seeded_message(cc.code.field(), p.k, seed);
    const auto word = lrc::encode(cc.code, message);

    bool all_ok = true;
    json results = json::array();
    std::string lines;
    for (std::size_t i = 0; i < word.size(); ++i) {
        std::vector<std::optional<lrc::FieldElement>> received(word.begin(), word.end());
        received[i] = std::nullopt;
        const lrc::FieldElement restored = lrc::repair(cc, received, cc.points.labels[i]);
        const bool ok = restored == word[i];
        all_ok = all_ok && ok;
        results.push_back({{"label", cc.points.labels[i].str()},
                           {"value", word[i].hex()},
                           {"restored", restored.hex()},
                           {"ok", ok}});
        lines += "  " + cc.points.labels[i].str() + ": value=" + word[i].hex() +
                 " restored=" + restored.hex() + (ok ? " ok" : " MISMATCH") + "\n";
    }

    std::string text;
    if (format == "json") {
        text = json{{"params", {{"n", p.n}, {"k", p.k}, {"r", p.r}}},
                    {"seed", seed},
                    {"results", results},
                    {"all_ok", all_ok}}
                   .dump(2) +
               "\n";
    } else if (format == "csv") {
        text = "label,value,restored,ok\n";
        for (const auto& row : results)
            text += row["label"].get<std::string>() + "," +
                    row["value"].get<std::string>() + "," +
                    row["restored"].get<std::string>() + "," +
                    (row["ok"].get<bool>() ? "true" : "false") + "\n";
    } else {
        text = "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) +
               " r=" + std::to_string(p.r) + " seed=" + std::to_string(seed) + "\n" +
               lines;
        text += all_ok ? "repaired " + std::to_string(word.size()) + "/" +
                             std::to_string(word.size()) + " coordinates\n"
                       : "repair mismatch detected\n";
    }
    emit(text, out);
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------- verify-fixtures --

struct FixtureOutcome {
    std::string name;
    bool pass = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

FixtureOutcome run_fixture_c1() {
    FixtureOutcome f{"c1", true, ""};
    const lrc::LinearCode code = lrc::fixture_code1();
    const int d = lrc::min_distance(code);
    f.expect(d == 4, "distance " + std::to_string(d) + " != 4");
    const auto rho = lrc::rho_bound(code);
    f.expect(rho.d_upper == 4, "footprint bound " + std::to_string(rho.d_upper) + " != 4");
    const lrc::Cover cover = lrc::cover_from_code(code);
    const std::vector<std::vector<int>> want{{1, 2, 3, 4}, {1, 2, 9, 10}, {5, 6, 7, 8}};
    f.expect(cover.sets == want, "cover structure differs");
    if (f.pass) f.detail = "distance 4, footprint bound 4, cover as printed";
    return f;
}

FixtureOutcome run_fixture_c2() {
    FixtureOutcome f{"c2", true, ""};
    const lrc::LinearCode code = lrc::fixture_code2();
    const int d = lrc::min_distance(code);
    f.expect(d == 5, "distance " + std::to_string(d) + " != 5");
    const int loc = lrc::locality(code);
    f.expect(loc == 3, "locality " + std::to_string(loc) + " != 3");
    const int want[] = {4, 7, 10};
    for (int x = 1; x <= 3; ++x) {
        const int phi = lrc::phi_oracle(code, x);
        f.expect(phi == want[x - 1], "phi(" + std::to_string(x) + ") = " +
                                         std::to_string(phi) +
                                         " != " + std::to_string(want[x - 1]));
    }
    if (f.pass) f.detail = "distance 5, locality 3, footprint 4,7,10";
    return f;
}

FixtureOutcome run_fixture_psi13() {
    FixtureOutcome f{"psi13", true, ""};
    for (int x = 1; x <= 4; ++x) {
        const int psi = lrc::psi_exhaustive(13, 3, x);
        f.expect(psi == 3 * x + 1, "psi(" + std::to_string(x) + ") = " +
                                       std::to_string(psi) +
                                       " != " + std::to_string(3 * x + 1));
    }
    if (f.pass) f.detail = "psi(x) = 3x+1 for x = 1..4";
    return f;
}

FixtureOutcome run_fixture_example4() {
    FixtureOutcome f{"example4", true, ""};
    const lrc::ConstructedCode cc = lrc::build_lrc(lrc::CodeParams::make(8, 4, 2));
    const std::vector<std::string> labels{"1/root", "1/1/1", "1/1/2", "1/2/1",
                                          "1/2/2",  "2/root", "2/1/1", "2/1/2"};
    const std::vector<std::string> hexes{"05", "02", "07", "08",
                                         "0d", "10", "20", "30"};
    for (std::size_t i = 0; i < 8; ++i) {
        f.expect(cc.points.labels[i].str() == labels[i],
                 "label " + std::to_string(i + 1) + " = " + cc.points.labels[i].str());
        f.expect(cc.points.elements[i].hex() == hexes[i],
                 "element " + std::to_string(i + 1) + " = " + cc.points.elements[i].hex());
    }
    const int d = lrc::min_distance(cc.code);
    f.expect(d == 3, "distance " + std::to_string(d) + " != 3");
    const int want[] = {3, 5, 8};
    for (int x = 1; x <= 3; ++x) {
        const int phi = lrc::phi_oracle(cc.code, x);
        f.expect(phi == want[x - 1], "phi(" + std::to_string(x) + ") = " +
                                         std::to_string(phi) +
                                         " != " + std::to_string(want[x - 1]));
    }
    if (f.pass) f.detail = "points bit-exact, distance 3, footprint 3,5,8";
    return f;
}

int cmd_verify_fixtures(const std::string& only, const std::string& out) {
    std::vector<FixtureOutcome> outcomes;
    if (only.empty() || only == "c1") outcomes.push_back(run_fixture_c1());
    if (only.empty() || only == "c2") outcomes.push_back(run_fixture_c2());
    if (only.empty() || only == "psi13") outcomes.push_back(run_fixture_psi13());
    if (only.empty() || only == "example4") outcomes.push_back(run_fixture_example4());

    std::string text;
    bool all_pass = true;
    for (const auto& f : outcomes) {
        all_pass = all_pass && f.pass;
        text += std::string(f.pass ? "PASS" : "FAIL") + " " + f.name + ": " + f.detail +
                "\n";
    }
    emit(text, out);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally repairable codes: distance bounds and constructions"};
    app.require_subcommand(1);

    std::string n_str, k_str, r_str;
    std::string format = "text";
    std::string construct_format = "json";
    std::string out_path;
    std::string modulus_hex;
    std::string only;
    unsigned seed = 1;
    bool verify = false;

    const auto add_common = [&](CLI::App* sub, std::string* format_target) {
        if (format_target)
            sub->add_option("--format", *format_target, "output format")
                ->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "distance-bound comparison table");
    bounds->add_option("--n", n_str, "code length")->required();
    bounds->add_option("--r", r_str, "locality")->required();
    bounds->add_option("--k", k_str, "dimension or range a..b")->required();
    add_common(bounds, &format);

    CLI::App* psi = app.add_subcommand("psi", "repair-footprint table psi(x), x = 1..n1");
    psi->add_option("--n", n_str, "code length")->required();
    psi->add_option("--r", r_str, "locality")->required();
    std::string method = "both";
    psi->add_option("--method", method, "evaluation method")
        ->check(CLI::IsMember({"closed", "exhaustive", "both"}));
    add_common(psi, &format);

    CLI::App* grid = app.add_subcommand("grid", "classical-bound attainability grid");
    grid->add_option("--n", n_str, "code length")->required();
    grid->add_option("--k", k_str, "dimension range a..b")->required();
    grid->add_option("--r", r_str, "locality range a..b")->required();
    add_common(grid, &format);

    CLI::App* construct = app.add_subcommand("construct", "build a code and export JSON");
    construct->add_option("--n", n_str, "code length")->required();
    construct->add_option("--k", k_str, "dimension")->required();
    construct->add_option("--r", r_str, "locality")->required();
    construct->add_option("--modulus", modulus_hex, "field modulus (hex)");
    construct->add_flag("--verify", verify, "run the distance oracle (n <= 14)");
    add_common(construct, &construct_format);

    CLI::App* encode = app.add_subcommand("encode", "encode a seeded random message");
    encode->add_option("--n", n_str, "code length")->required();
    encode->add_option("--k", k_str, "dimension")->required();
    encode->add_option("--r", r_str, "locality")->required();
    encode->add_option("--modulus", modulus_hex, "field modulus (hex)");
    encode->add_option("--seed", seed, "random seed for the message");
    add_common(encode, &format);

    CLI::App* repair = app.add_subcommand("repair-demo",
                                          "erase and repair every coordinate once");
    repair->add_option("--n", n_str, "code length")->required();
    repair->add_option("--k", k_str, "dimension")->required();
    repair->add_option("--r", r_str, "locality")->required();
    repair->add_option("--modulus", modulus_hex, "field modulus (hex)");
    repair->add_option("--seed", seed, "random seed for the message");
    add_common(repair, &format);

    CLI::App* fixtures = app.add_subcommand("verify-fixtures",
                                            "check the documented example codes");
    fixtures->add_option("--only", only, "run a single fixture")
        ->check(CLI::IsMember({"c1", "c2", "psi13", "example4"}));
    add_common(fixtures, nullptr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) {
            return cmd_bounds(parse_single(n_str, "--n"), parse_single(r_str, "--r"),
                              parse_range(k_str, "--k"), format, out_path);
        }
        if (psi->parsed()) {
            return cmd_psi(parse_single(n_str, "--n"), parse_single(r_str, "--r"),
                           method, format, out_path);
        }
        if (grid->parsed()) {
            return cmd_grid(parse_single(n_str, "--n"), parse_range(k_str, "--k"),
                            parse_range(r_str, "--r"), format, out_path);
        }
        if (construct->parsed()) {
            return cmd_construct(parse_single(n_str, "--n"), parse_single(k_str, "--k"),
                                 parse_single(r_str, "--r"), modulus_hex, verify,
                                 construct_format, out_path);
        }
        if (encode->parsed()) {
            return cmd_encode(parse_single(n_str, "--n"), parse_single(k_str, "--k"),
                              parse_single(r_str, "--r"), modulus_hex, seed, format,
                              out_path);
        }
        if (repair->parsed()) {
            return cmd_repair_demo(parse_single(n_str, "--n"), parse_single(k_str, "--k"),
                                   parse_single(r_str, "--r"), modulus_hex, seed,
                                   format, out_path);
        }
        if (fixtures->parsed()) {
            return cmd_verify_fixtures(only, out_path);
        }
    } catch (const lrc::ScaleError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const lrc::OutOfScopeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
