#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fenceq/arcposet.hpp"
#include "fenceq/cluster.hpp"
#include "fenceq/enumerate.hpp"
#include "fenceq/json_io.hpp"
#include "fenceq/poset.hpp"
#include "fenceq/scan.hpp"

using namespace fenceq;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("cannot parse integer list: " + csv);
        }
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

Composition parse_composition(const std::string& csv) {
    try {
        return Composition(parse_int_list(csv));
    } catch (const InvalidComposition& e) {
        throw InputError(e.what());
    }
}

json read_json_input(const std::string& path) {
    try {
        if (path.empty() || path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

int default_workers() {
    if (const char* env = std::getenv("FENCEQ_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

struct GoldenFixture {
    std::string name;
    std::string source;  // figure or table the value is read from
    std::function<bool(std::string&)> run;
};

// The fixture list is closed: each entry names the drawing or table it
// reproduces, and nothing is added without such a source.
std::vector<GoldenFixture> golden_fixtures() {
    std::vector<GoldenFixture> out;

    auto octagon = [] {
        return PolygonTriangulation(8, {Diagonal(1, 7), Diagonal(1, 6), Diagonal(1, 5),
                                        Diagonal(2, 5), Diagonal(2, 4)});
    };
    const std::vector<Diagonal> octagon_labels = {Diagonal(1, 7), Diagonal(1, 6), Diagonal(1, 5),
                                                  Diagonal(2, 5), Diagonal(2, 4)};

    out.push_back({"octagon-signed-adjacency", "octagon triangulation drawing, labels 1..5",
                   [=](std::string& detail) {
                       auto t = octagon();
                       auto B = signed_adjacency(t);
                       const std::vector<std::vector<int>> expected = {{0, -1, 0, 0, 0},
                                                                       {1, 0, -1, 0, 0},
                                                                       {0, 1, 0, 1, 0},
                                                                       {0, 0, -1, 0, -1},
                                                                       {0, 0, 0, 1, 0}};
                       for (size_t i = 0; i < 5; ++i)
                           for (size_t j = 0; j < 5; ++j) {
                               int got = B[static_cast<size_t>(t.index_of(octagon_labels[i]))]
                                          [static_cast<size_t>(t.index_of(octagon_labels[j]))];
                               if (got != expected[i][j]) {
                                   detail = "mismatch at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")";
                                   return false;
                               }
                           }
                       return true;
                   }});

    out.push_back({"octagon-lamination-row", "octagon lamination drawing, row (-1,0,1,-1,1)",
                   [=](std::string& detail) {
                       auto t = octagon();
                       LamCurve L;
                       L.from = {7, 0};
                       L.to = {3, 0};
                       auto shear = shear_vector(t, {L});
                       const std::vector<int> expected = {-1, 0, 1, -1, 1};
                       for (size_t i = 0; i < 5; ++i) {
                           int got = shear[static_cast<size_t>(t.index_of(octagon_labels[i]))];
                           if (got != expected[i]) {
                               detail = "entry " + std::to_string(i + 1) + " = " +
                                        std::to_string(got);
                               return false;
                           }
                       }
                       return true;
                   }});

    out.push_back({"circular-exceptional-sequences", "non-unimodal circular family display",
                   [](std::string& detail) {
                       for (int a = 1; a <= 4; ++a) {
                           std::vector<BigInt> coeffs;
                           for (int i = 1; i <= a + 1; ++i) coeffs.emplace_back(i);
                           coeffs.emplace_back(a);
                           for (int i = a + 1; i >= 1; --i) coeffs.emplace_back(i);
                           IntPoly expected(std::move(coeffs));
                           IntPoly got = circular_fence(Composition({1, a, 1, a})).rank_sequence();
                           IntPoly got2 = circular_fence(Composition({a, 1, a, 1})).rank_sequence();
                           if (got != expected || got2 != expected) {
                               detail = "a=" + std::to_string(a) + " gave " + got.to_string();
                               return false;
                           }
                       }
                       return true;
                   }});

    auto ninegon = [] {
        return PolygonTriangulation(9, {Diagonal(2, 9), Diagonal(3, 9), Diagonal(3, 8),
                                        Diagonal(4, 8), Diagonal(5, 8), Diagonal(6, 8)});
    };
    auto curve = [](int f, int t) {
        LamCurve c;
        c.from = {f, 0};
        c.to = {t, 0};
        return c;
    };

    out.push_back({"ninegon-c-polynomial", "9-gon counterexample drawing, q^2+6q+7",
                   [=](std::string& detail) {
                       IntPoly c = c_polynomial(ninegon(), {{curve(1, 4)}}, Arc(1, 7));
                       if (c != IntPoly::from_int_coeffs({7, 6, 1})) {
                           detail = "got " + c.to_string();
                           return false;
                       }
                       return seq_report(c).ineq_a == false;
                   }});

    auto twelvegon = [] {
        return PolygonTriangulation(12, {Diagonal(1, 10), Diagonal(10, 12), Diagonal(2, 10),
                                         Diagonal(2, 9), Diagonal(2, 8), Diagonal(3, 8),
                                         Diagonal(3, 7), Diagonal(4, 7), Diagonal(5, 7)});
    };

    out.push_back({"twelvegon-displayed-polynomial",
                   "12-gon drawing and non-example table, right column: the displayed "
                   "value belongs to the three-curve lamination",
                   [=](std::string& detail) {
                       MultiLamination ml = {{curve(10, 6)}, {curve(11, 5)}, {curve(12, 4)}};
                       IntPoly c = c_polynomial(twelvegon(), ml, Arc(6, 11));
                       if (c != IntPoly::from_int_coeffs({2, 5, 9, 12, 11, 10, 6, 4, 2})) {
                           detail = "got " + c.to_string();
                           return false;
                       }
                       // the drawn single curve gives a different, unimodal value
                       IntPoly single = c_polynomial(twelvegon(), {{curve(11, 5)}}, Arc(6, 11));
                       if (!seq_report(single).unimodal) {
                           detail = "single curve gave " + single.to_string();
                           return false;
                       }
                       return true;
                   }});

    out.push_back({"twelvegon-repeated-curve", "non-example table, left column",
                   [=](std::string& detail) {
                       MultiLamination ml = {{curve(10, 6)}, {curve(10, 6)}, {curve(11, 5)},
                                             {curve(12, 4)}};
                       IntPoly c = c_polynomial(twelvegon(), ml, Arc(6, 11));
                       if (c != IntPoly::from_int_coeffs({2, 2, 6, 6, 12, 9, 8, 4, 6, 4, 2})) {
                           detail = "got " + c.to_string();
                           return false;
                       }
                       return !seq_report(c).unimodal;
                   }});

    return out;
}

void print_scan_report(const ScanReport& rep, ScanMode mode, bool pretty) {
    if (pretty) {
        std::cout << "mode " << to_string(mode) << ": " << rep.instances_checked
                  << " instances, " << rep.violations.size()
                  << (rep.findings_only ? " findings" : " violations") << "\n";
        std::cout << "  n  instances  " << (rep.findings_only ? "findings" : "violations") << "\n";
        for (const auto& s : rep.per_size)
            std::cout << "  " << s.n << "  " << s.instances << "  " << s.violations << "\n";
        for (const auto& v : rep.violations)
            std::cout << "  " << v.failed << " at " << v.instance << " poly "
                      << v.poly.to_string() << "\n";
    } else {
        for (const auto& s : rep.per_size) {
            json line = {{"type", "size_summary"},
                         {"mode", to_string(mode)},
                         {"n", s.n},
                         {"instances", s.instances},
                         {"violations", s.violations}};
            std::cout << line.dump() << "\n";
        }
        for (const auto& v : rep.violations) {
            json line = {{"type", rep.findings_only ? "finding" : "violation"},
                         {"mode", to_string(mode)},
                         {"n", v.n},
                         {"instance", json::parse(v.instance)},
                         {"poly", to_json(v.poly)},
                         {"failed", v.failed}};
            std::cout << line.dump() << "\n";
        }
        json total = {{"type", "scan_report"},
                      {"mode", to_string(mode)},
                      {"instances_checked", rep.instances_checked},
                      {"violation_count", rep.violations.size()},
                      {"findings_only", rep.findings_only}};
        std::cout << total.dump() << "\n";
    }
    std::cerr << "elapsed: " << rep.elapsed_seconds << "s\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank polynomials of fence posets and cluster-expansion "
                 "c-polynomials of arcs in triangulated polygons"};
    app.require_subcommand(1);

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "Rank polynomial of a fence-type poset");
    std::string alpha_csv, variant = "plain", ij_csv;
    rank_cmd->add_option("--alpha", alpha_csv, "composition, e.g. 1,2,1,2")->required();
    rank_cmd->add_option("--variant", variant,
                         "plain|circular|notched-first|notched-last|notched-both|ij");
    rank_cmd->add_option("--ij", ij_csv, "extra relation i,j for the ij variant");

    // cpoly / fpoly / arc-poset
    auto* cpoly_cmd = app.add_subcommand("cpoly", "c-polynomial of an arc under laminations");
    std::string cpoly_input;
    cpoly_cmd->add_option("--input", cpoly_input, "JSON file (default: stdin)");
    auto* fpoly_cmd = app.add_subcommand("fpoly", "F-polynomial at y=q (principal coefficients)");
    std::string fpoly_input;
    fpoly_cmd->add_option("--input", fpoly_input, "JSON file (default: stdin)");
    auto* arcposet_cmd = app.add_subcommand("arc-poset", "Fence poset of an arc");
    std::string arcposet_input;
    arcposet_cmd->add_option("--input", arcposet_input, "JSON file (default: stdin)");

    // verify-identities
    auto* verify_cmd =
        app.add_subcommand("verify-identities", "Decomposition identity check per composition");
    std::string verify_alpha;
    int verify_nmax = 0;
    verify_cmd->add_option("--alpha", verify_alpha, "single composition");
    verify_cmd->add_option("--n-max", verify_nmax, "check every valid composition up to n");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive / sampled conjecture and theorem scans");
    std::string mode_str = "single_lam", range_str = "5..7";
    std::uint64_t seed = 20240528;
    int workers = default_workers();
    std::int64_t sample_limit = -1;
    bool pretty = false;
    scan_cmd->add_option("--mode", mode_str,
                         "notched|circular|single_lam|log_concavity|identities");
    scan_cmd->add_option("--n", range_str, "size range, e.g. 5..9");
    scan_cmd->add_option("--seed", seed, "RNG seed for sampled sizes");
    scan_cmd->add_option("--sample-limit", sample_limit, "per-size instance cap");
    scan_cmd->add_option("--workers", workers, "worker threads (FENCEQ_WORKERS overrides default)");
    scan_cmd->add_flag("--pretty", pretty, "human-readable tables instead of JSON lines");

    auto* repro_cmd =
        app.add_subcommand("reproduce-paper", "Re-derive the bundled reference examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank_cmd->parsed()) {
            Composition alpha = parse_composition(alpha_csv);
            IntPoly poly;
            if (variant == "plain") {
                poly = rank_sequence_fence_fast(alpha);
            } else if (variant == "circular") {
                poly = circular_fence(alpha).rank_sequence();
            } else if (variant == "notched-first") {
                poly = notched(alpha, NotchKind::First).rank_sequence();
            } else if (variant == "notched-last") {
                poly = notched(alpha, NotchKind::Last).rank_sequence();
            } else if (variant == "notched-both") {
                poly = notched(alpha, NotchKind::Both).rank_sequence();
            } else if (variant == "ij") {
                auto ij = parse_int_list(ij_csv);
                if (ij.size() != 2) throw InputError("--ij needs two indices");
                poly = ij_fence(alpha, ij[0], ij[1]).rank_sequence();
            } else {
                throw InputError("unknown variant: " + variant);
            }
            json out = {{"poly", to_json(poly)}, {"report", to_json(seq_report(poly))}};
            std::cout << out.dump() << "\n";
        } else if (cpoly_cmd->parsed()) {
            json in = read_json_input(cpoly_input);
            PolygonTriangulation t = triangulation_from_json(in.at("triangulation"));
            MultiLamination ml = in.contains("laminations")
                                     ? multilamination_from_json(in["laminations"])
                                     : MultiLamination{};
            Arc g = arc_from_json(in.at("arc"));
            IntPoly poly = c_polynomial(t, ml, g);
            json out = {{"c_poly", to_json(poly)}, {"report", to_json(seq_report(poly))}};
            std::cout << out.dump() << "\n";
        } else if (fpoly_cmd->parsed()) {
            json in = read_json_input(fpoly_input);
            PolygonTriangulation t = triangulation_from_json(in.at("triangulation"));
            Arc g = arc_from_json(in.at("arc"));
            IntPoly poly = f_polynomial_q(t, g);
            json out = {{"f_poly", to_json(poly)}, {"report", to_json(seq_report(poly))}};
            std::cout << out.dump() << "\n";
        } else if (arcposet_cmd->parsed()) {
            json in = read_json_input(arcposet_input);
            PolygonTriangulation t = triangulation_from_json(in.at("triangulation"));
            Arc g = arc_from_json(in.at("arc"));
            ArcPosetResult res = fence_poset_of_arc(t, g);
            json out = to_json(res.poset);
            out["composition"] = res.composition.parts;
            out["crossing_count"] = res.crossing_count;
            std::cout << out.dump() << "\n";
        } else if (verify_cmd->parsed()) {
            bool all_ok = true;
            auto run_one = [&](const Composition& alpha) {
                NotchedDecompositionReport rep = check_notched_decompositions(alpha);
                json line = {{"alpha", alpha.parts},
                             {"eq1", rep.eq1},
                             {"eq2", rep.eq2},
                             {"splits",
                              {{"top", rep.split_top},
                               {"top_bar", rep.split_top_bar},
                               {"delta", rep.split_delta},
                               {"bottom", rep.split_bottom},
                               {"bottom_bar", rep.split_bottom_bar},
                               {"delta_prime", rep.split_delta_prime}}},
                             {"dual_bridge", rep.dual_bridge},
                             {"all_hold", rep.all_hold()},
                             {"rank", to_json(rep.notched_rank)}};
                std::cout << line.dump() << "\n";
                all_ok = all_ok && rep.all_hold();
            };
            if (!verify_alpha.empty()) {
                run_one(parse_composition(verify_alpha));
            } else if (verify_nmax >= 2) {
                for (int n = 2; n <= verify_nmax; ++n)
                    for (const auto& alpha : compositions_of(n, true)) {
                        try {
                            notch_pair_last(alpha);
                        } catch (const ConstructionError&) {
                            continue;
                        }
                        run_one(alpha);
                    }
            } else {
                throw InputError("verify-identities needs --alpha or --n-max");
            }
            if (!all_ok) return 1;
        } else if (scan_cmd->parsed()) {
            ScanConfig cfg;
            cfg.mode = scan_mode_from_string(mode_str);
            auto dots = range_str.find("..");
            if (dots == std::string::npos) {
                cfg.n_min = cfg.n_max = std::stoi(range_str);
            } else {
                cfg.n_min = std::stoi(range_str.substr(0, dots));
                cfg.n_max = std::stoi(range_str.substr(dots + 2));
            }
            cfg.seed = seed;
            cfg.parallelism = workers;
            if (sample_limit >= 0) cfg.sample_limit = static_cast<std::uint64_t>(sample_limit);
            ScanReport rep = run_scan(cfg);
            print_scan_report(rep, cfg.mode, pretty);
            if (!rep.findings_only && !rep.violations.empty()) return 1;
        } else if (repro_cmd->parsed()) {
            bool all_ok = true;
            for (const auto& fixture : golden_fixtures()) {
                std::string detail;
                bool ok = false;
                try {
                    ok = fixture.run(detail);
                } catch (const Error& e) {
                    detail = e.what();
                }
                std::cout << (ok ? "PASS " : "FAIL ") << fixture.name;
                if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
                std::cout << "\n";
                all_ok = all_ok && ok;
            }
            if (!all_ok) return 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
