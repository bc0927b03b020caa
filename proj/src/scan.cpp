#include "fenceq/scan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "fenceq/arcposet.hpp"
#include "fenceq/cluster.hpp"
#include "fenceq/enumerate.hpp"
#include "fenceq/json_io.hpp"
#include "fenceq/poset.hpp"

namespace fenceq {

ScanMode scan_mode_from_string(const std::string& s) {
    if (s == "notched") return ScanMode::Notched;
    if (s == "circular") return ScanMode::Circular;
    if (s == "single_lam") return ScanMode::SingleLam;
    if (s == "log_concavity") return ScanMode::LogConcavity;
    if (s == "identities") return ScanMode::Identities;
    throw InputError("unknown scan mode: " + s);
}

std::string to_string(ScanMode m) {
    switch (m) {
        case ScanMode::Notched: return "notched";
        case ScanMode::Circular: return "circular";
        case ScanMode::SingleLam: return "single_lam";
        case ScanMode::LogConcavity: return "log_concavity";
        case ScanMode::Identities: return "identities";
    }
    return "?";
}

void ScanConfig::validate() const {
    if (n_min < 4) throw InputError("scan needs n_min >= 4");
    if (n_max < n_min) throw InputError("scan needs n_max >= n_min");
    if (sample_limit && *sample_limit < 1) throw InputError("sample_limit must be >= 1");
    if (parallelism < 1) throw InputError("parallelism must be >= 1");
}

namespace {

// Runs items [0, count) across workers; results land in a vector indexed by
// item id, so reports do not depend on the worker count.
template <typename Fn>
std::vector<std::optional<ScanViolation>> parallel_map(std::uint64_t count, int workers, Fn fn) {
    std::vector<std::optional<ScanViolation>> results(count);
    if (workers <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::uint64_t> next{0};
    auto body = [&] {
        while (true) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count) break;
            results[i] = fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    return results;
}

std::string composition_instance(ScanMode mode, const Composition& alpha,
                                 const std::string& variant) {
    nlohmann::json j;
    j["mode"] = to_string(mode);
    j["alpha"] = alpha.parts;
    if (!variant.empty()) j["variant"] = variant;
    return j.dump();
}

std::string surface_instance(ScanMode mode, const PolygonTriangulation& t, const LamCurve& c,
                             const Arc& g) {
    nlohmann::json j;
    j["mode"] = to_string(mode);
    j["triangulation"] = to_json(t);
    j["lamination"] = to_json(c);
    j["arc"] = {g.a, g.b};
    return j.dump();
}

bool is_exceptional_circular(const Composition& alpha) {
    const auto& p = alpha.parts;
    if (p.size() != 4) return false;
    return (p[0] == 1 && p[2] == 1 && p[1] == p[3]) || (p[1] == 1 && p[3] == 1 && p[0] == p[2]);
}

IntPoly exceptional_sequence(int a) {
    // (1, 2, ..., a+1, a, a+1, a, ..., 2, 1)
    std::vector<BigInt> coeffs;
    for (int i = 1; i <= a + 1; ++i) coeffs.emplace_back(i);
    coeffs.emplace_back(a);
    for (int i = a + 1; i >= 1; --i) coeffs.emplace_back(i);
    return IntPoly(std::move(coeffs));
}

void scan_compositions(const ScanConfig& cfg, ScanReport& rep) {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        SizeSummary size{n, 0, 0};
        struct Item {
            Composition alpha;
            std::string variant;
        };
        std::vector<Item> items;
        if (cfg.mode == ScanMode::Circular) {
            for (const auto& alpha : compositions_of(n, false))
                if (alpha.num_parts() % 2 == 0) items.push_back({alpha, ""});
        } else {
            for (const auto& alpha : compositions_of(n, true)) {
                if (cfg.mode == ScanMode::Identities) {
                    try {
                        notch_pair_last(alpha);
                    } catch (const ConstructionError&) {
                        continue;
                    }
                    items.push_back({alpha, ""});
                } else {
                    for (const char* variant : {"first", "last", "both"}) {
                        try {
                            if (std::string(variant) != "last") notch_pair_first(alpha);
                            if (std::string(variant) != "first") notch_pair_last(alpha);
                        } catch (const ConstructionError&) {
                            continue;
                        }
                        items.push_back({alpha, variant});
                    }
                }
            }
        }
        auto check = [&](std::uint64_t idx) -> std::optional<ScanViolation> {
            const Item& item = items[idx];
            if (cfg.mode == ScanMode::Identities) {
                auto report = check_notched_decompositions(item.alpha);
                if (report.all_hold()) return std::nullopt;
                return ScanViolation{n, composition_instance(cfg.mode, item.alpha, ""),
                                     report.notched_rank, "decomposition identity"};
            }
            if (cfg.mode == ScanMode::Circular) {
                IntPoly rank = circular_fence(item.alpha).rank_sequence();
                SeqReport sr = seq_report(rank);
                std::vector<std::string> failed;
                if (!sr.symmetric) failed.push_back("symmetric");
                if (is_exceptional_circular(item.alpha)) {
                    int a = std::max(item.alpha.parts[0], item.alpha.parts[1]);
                    if (sr.unimodal) failed.push_back("expected non-unimodal exceptional");
                    if (rank != exceptional_sequence(a)) failed.push_back("exceptional sequence");
                } else if (!sr.unimodal) {
                    failed.push_back("unimodal");
                }
                // order lemma: i <= j, i+j <= m-2 forces r_i <= r_j (m = degree)
                const auto& r = rank.coeffs();
                const int m = rank.degree();
                for (int i = 0; i <= m; ++i)
                    for (int j = i; j <= m; ++j) {
                        if (i + j <= m - 2 && r[i] > r[j]) failed.push_back("order lemma low");
                        if (i + j >= m + 2 && r[i] < r[j]) failed.push_back("order lemma high");
                    }
                if (failed.empty()) return std::nullopt;
                std::string joined;
                for (const auto& f : failed) joined += (joined.empty() ? "" : ", ") + f;
                return ScanViolation{n, composition_instance(cfg.mode, item.alpha, ""), rank,
                                     joined};
            }
            // Notched mode
            NotchKind kind = item.variant == "first"  ? NotchKind::First
                             : item.variant == "last" ? NotchKind::Last
                                                      : NotchKind::Both;
            IntPoly rank = notched(item.alpha, kind).rank_sequence();
            SeqReport sr = seq_report(rank);
            if (sr.almost_interlacing) return std::nullopt;
            return ScanViolation{n, composition_instance(cfg.mode, item.alpha, item.variant), rank,
                                 "almost_interlacing"};
        };
        auto results = parallel_map(items.size(), cfg.parallelism, check);
        size.instances = items.size();
        for (auto& r : results)
            if (r) {
                ++size.violations;
                rep.violations.push_back(std::move(*r));
            }
        rep.instances_checked += size.instances;
        rep.per_size.push_back(size);
    }
}

void scan_surface(const ScanConfig& cfg, ScanReport& rep) {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        SizeSummary size{n, 0, 0};
        struct Item {
            PolygonTriangulation t;
            LamCurve curve;
            Arc arc;
        };
        std::vector<Item> items;
        const bool sampled = n >= 10;
        if (!sampled) {
            auto tris = all_triangulations(n);
            auto curves = all_single_curves(n);
            auto arcs = all_arcs(n);
            if (tris.size() != catalan(n - 2))
                throw InternalError("triangulation count mismatch at n=" + std::to_string(n));
            if (curves.size() != static_cast<size_t>(n * (n - 3) / 2) ||
                arcs.size() != static_cast<size_t>(n * (n - 3) / 2))
                throw InternalError("enumeration count mismatch at n=" + std::to_string(n));
            std::uint64_t cap = cfg.sample_limit.value_or(UINT64_MAX);
            for (const auto& t : tris) {
                for (const auto& c : curves) {
                    for (const auto& g : arcs) {
                        if (t.contains(g)) continue;
                        if (items.size() >= cap) break;
                        items.push_back({t, c, g});
                    }
                }
            }
        } else {
            std::mt19937 rng(static_cast<std::uint32_t>(cfg.seed + static_cast<std::uint64_t>(n)));
            auto curves = all_single_curves(n);
            auto arcs = all_arcs(n);
            const std::uint64_t limit = cfg.sample_limit.value_or(10000);
            std::uniform_int_distribution<size_t> curve_dist(0, curves.size() - 1);
            std::uniform_int_distribution<size_t> arc_dist(0, arcs.size() - 1);
            while (items.size() < limit) {
                PolygonTriangulation t = random_triangulation(n, rng);
                Arc g = arcs[arc_dist(rng)];
                if (t.contains(g)) continue;
                items.push_back({std::move(t), curves[curve_dist(rng)], g});
            }
        }
        auto check = [&](std::uint64_t idx) -> std::optional<ScanViolation> {
            const Item& item = items[idx];
            IntPoly c = c_polynomial(item.t, {{item.curve}}, item.arc);
            SeqReport sr = seq_report(c);  // also rejects negative coefficients
            std::vector<std::string> failed;
            if (!sr.unimodal) failed.push_back("unimodal");
            if (cfg.mode == ScanMode::LogConcavity && !sr.log_concave)
                failed.push_back("log_concave");
            if (failed.empty()) return std::nullopt;
            std::string joined;
            for (const auto& f : failed) joined += (joined.empty() ? "" : ", ") + f;
            return ScanViolation{n, surface_instance(cfg.mode, item.t, item.curve, item.arc), c,
                                 joined};
        };
        auto results = parallel_map(items.size(), cfg.parallelism, check);
        size.instances = items.size();
        for (auto& r : results)
            if (r) {
                ++size.violations;
                rep.violations.push_back(std::move(*r));
            }
        rep.instances_checked += size.instances;
        rep.per_size.push_back(size);
    }
}

}  // namespace

ScanReport run_scan(const ScanConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    ScanReport rep;
    rep.findings_only = cfg.mode == ScanMode::LogConcavity;
    switch (cfg.mode) {
        case ScanMode::Notched:
        case ScanMode::Circular:
        case ScanMode::Identities:
            scan_compositions(cfg, rep);
            break;
        case ScanMode::SingleLam:
        case ScanMode::LogConcavity:
            scan_surface(cfg, rep);
            break;
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace fenceq
