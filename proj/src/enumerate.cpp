#include "fenceq/enumerate.hpp"

#include <algorithm>

namespace fenceq {

std::vector<Composition> compositions_of(int n, bool allow_leading_zero) {
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p);
            parts.pop_back();
        }
    };
    if (n < 1) return out;
    rec(rec, n);
    if (allow_leading_zero) {
        parts.push_back(0);
        rec(rec, n);
    }
    return out;
}

std::uint64_t catalan(int k) {
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (i + 2);
    return c;
}

namespace {

// Diagonal sets triangulating the convex sub-polygon on vertices lo..hi,
// with (lo, hi) as the base edge.
std::vector<std::vector<Diagonal>> tri_sets(int lo, int hi) {
    if (hi - lo < 2) return {{}};
    std::vector<std::vector<Diagonal>> out;
    for (int apex = lo + 1; apex < hi; ++apex) {
        const auto lefts = tri_sets(lo, apex);
        const auto rights = tri_sets(apex, hi);
        for (const auto& l : lefts)
            for (const auto& r : rights) {
                std::vector<Diagonal> combined = l;
                combined.insert(combined.end(), r.begin(), r.end());
                if (apex - lo >= 2) combined.emplace_back(lo, apex);
                if (hi - apex >= 2) combined.emplace_back(apex, hi);
                out.push_back(std::move(combined));
            }
    }
    return out;
}

}  // namespace

std::vector<PolygonTriangulation> all_triangulations(int n) {
    std::vector<PolygonTriangulation> out;
    for (auto& diags : tri_sets(1, n)) out.emplace_back(n, std::move(diags));
    return out;
}

std::vector<Arc> all_arcs(int n) {
    std::vector<Arc> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b) {
            if (a == 1 && b == n) continue;
            out.emplace_back(a, b);
        }
    return out;
}

std::vector<LamCurve> all_single_curves(int n) {
    std::vector<LamCurve> out;
    for (int e = 1; e <= n; ++e)
        for (int f = e + 2; f <= n; ++f) {
            if (e == 1 && f == n) continue;
            LamCurve c;
            c.from = {e, 0};
            c.to = {f, 0};
            out.push_back(c);
        }
    return out;
}

PolygonTriangulation random_triangulation(int n, std::mt19937& rng) {
    std::vector<Diagonal> diags;
    // Catalan-weighted apex choice gives the uniform distribution.
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo < 2) return;
        const int size = hi - lo;
        std::uniform_int_distribution<std::uint64_t> dist(0, catalan(size - 1) - 1);
        std::uint64_t r = dist(rng);
        int apex = lo + 1;
        for (; apex < hi; ++apex) {
            std::uint64_t weight = catalan(apex - lo - 1) * catalan(hi - apex - 1);
            if (r < weight) break;
            r -= weight;
        }
        if (apex - lo >= 2) diags.emplace_back(lo, apex);
        if (hi - apex >= 2) diags.emplace_back(apex, hi);
        self(self, lo, apex);
        self(self, apex, hi);
    };
    rec(rec, 1, n);
    return PolygonTriangulation(n, std::move(diags));
}

}  // namespace fenceq
