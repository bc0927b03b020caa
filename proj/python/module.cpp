#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fenceq/arcposet.hpp"
#include "fenceq/cluster.hpp"
#include "fenceq/enumerate.hpp"
#include "fenceq/poset.hpp"
#include "fenceq/scan.hpp"
#include "fenceq/surface.hpp"

namespace py = pybind11;
using namespace fenceq;

namespace {

// Coefficients cross the boundary as Python ints via their decimal form, so
// arbitrary precision survives the trip.
py::list poly_to_py(const IntPoly& p) {
    py::list out;
    py::object int_ = py::module_::import("builtins").attr("int");
    for (const BigInt& c : p.coeffs()) out.append(int_(c.str()));
    return out;
}

py::dict report_to_py(const SeqReport& r) {
    py::dict d;
    d["unimodal"] = r.unimodal;
    d["symmetric"] = r.symmetric;
    d["top_interlacing"] = r.top_interlacing;
    d["bottom_interlacing"] = r.bottom_interlacing;
    d["ineq_a"] = r.ineq_a;
    d["ineq_b"] = r.ineq_b;
    d["almost_interlacing"] = r.almost_interlacing;
    d["log_concave"] = r.log_concave;
    d["two_peak"] = r.two_peak ? py::object(py::make_tuple(r.two_peak->first, r.two_peak->second))
                               : py::object(py::none());
    return d;
}

Composition comp(const std::vector<int>& parts) { return Composition(parts); }

PolygonTriangulation tri(int n, const std::vector<std::pair<int, int>>& diagonals) {
    std::vector<Diagonal> diags;
    for (auto [a, b] : diagonals) diags.emplace_back(a, b);
    return PolygonTriangulation(n, std::move(diags));
}

MultiLamination lams(const std::vector<std::vector<std::pair<int, int>>>& curves) {
    MultiLamination ml;
    for (const auto& lam : curves) {
        Lamination l;
        int slot = 0;
        for (auto [from, to] : lam) {
            LamCurve c;
            c.from = {from, slot};
            c.to = {to, slot};
            ++slot;
            l.push_back(c);
        }
        ml.push_back(std::move(l));
    }
    return ml;
}

NotchKind notch_kind(const std::string& which) {
    if (which == "first") return NotchKind::First;
    if (which == "last") return NotchKind::Last;
    if (which == "both") return NotchKind::Both;
    throw InputError("notch kind must be first|last|both");
}

}  // namespace

PYBIND11_MODULE(fenceq, m) {
    m.doc() = "Rank polynomials of fence posets and c-polynomials of arcs in "
              "triangulated polygons";

    py::register_exception<Error>(m, "FenceqError");

    m.def(
        "rank_polynomial",
        [](const std::vector<int>& alpha, const std::string& variant) {
            Composition a = comp(alpha);
            IntPoly p;
            if (variant == "plain") p = rank_sequence_fence_fast(a);
            else if (variant == "circular") p = circular_fence(a).rank_sequence();
            else if (variant == "notched-first") p = notched(a, NotchKind::First).rank_sequence();
            else if (variant == "notched-last") p = notched(a, NotchKind::Last).rank_sequence();
            else if (variant == "notched-both") p = notched(a, NotchKind::Both).rank_sequence();
            else throw InputError("unknown variant " + variant);
            return poly_to_py(p);
        },
        py::arg("alpha"), py::arg("variant") = "plain",
        "Rank polynomial coefficients (ascending) of the fence-type poset");

    m.def(
        "ij_rank_polynomial",
        [](const std::vector<int>& alpha, int i, int j) {
            return poly_to_py(ij_fence(comp(alpha), i, j).rank_sequence());
        },
        py::arg("alpha"), py::arg("i"), py::arg("j"));

    m.def(
        "seq_report",
        [](const std::vector<long long>& coeffs) {
            return report_to_py(seq_report(IntPoly::from_int_coeffs(coeffs)));
        },
        py::arg("coeffs"), "Predicate bundle over a nonnegative coefficient sequence");

    m.def(
        "signed_adjacency",
        [](int n, const std::vector<std::pair<int, int>>& diagonals) {
            PolygonTriangulation t = tri(n, diagonals);
            py::list diags;
            for (const Diagonal& d : t.diagonals()) diags.append(py::make_tuple(d.a, d.b));
            return py::make_tuple(diags, signed_adjacency(t));
        },
        py::arg("n"), py::arg("diagonals"),
        "Canonical diagonal order and the signed adjacency matrix");

    m.def(
        "shear_vector",
        [](int n, const std::vector<std::pair<int, int>>& diagonals,
           const std::vector<std::pair<int, int>>& curves) {
            PolygonTriangulation t = tri(n, diagonals);
            Lamination lam;
            int slot = 0;
            for (auto [from, to] : curves) {
                LamCurve c;
                c.from = {from, slot};
                c.to = {to, slot};
                ++slot;
                lam.push_back(c);
            }
            return shear_vector(t, lam);
        },
        py::arg("n"), py::arg("diagonals"), py::arg("curves"),
        "Shear coordinates of one lamination, canonical diagonal order; curves "
        "are (from_edge, to_edge) pairs");

    m.def(
        "c_polynomial",
        [](int n, const std::vector<std::pair<int, int>>& diagonals,
           const std::vector<std::vector<std::pair<int, int>>>& laminations,
           std::pair<int, int> arc) {
            return poly_to_py(
                c_polynomial(tri(n, diagonals), lams(laminations), Arc(arc.first, arc.second)));
        },
        py::arg("n"), py::arg("diagonals"), py::arg("laminations"), py::arg("arc"),
        "Cluster expansion of the arc at x=1, y=q; one q-row per lamination");

    m.def(
        "f_polynomial",
        [](int n, const std::vector<std::pair<int, int>>& diagonals, std::pair<int, int> arc) {
            return poly_to_py(f_polynomial_q(tri(n, diagonals), Arc(arc.first, arc.second)));
        },
        py::arg("n"), py::arg("diagonals"), py::arg("arc"),
        "F-polynomial of the arc with all coefficient variables set to q");

    m.def(
        "arc_fence_poset",
        [](int n, const std::vector<std::pair<int, int>>& diagonals, std::pair<int, int> arc) {
            ArcPosetResult res = fence_poset_of_arc(tri(n, diagonals), Arc(arc.first, arc.second));
            py::dict d;
            d["composition"] = res.composition.parts;
            d["crossing_count"] = res.crossing_count;
            py::list covers;
            for (auto [a, b] : res.poset.covers())
                covers.append(py::make_tuple(res.poset.label(a), res.poset.label(b)));
            d["covers"] = covers;
            d["elements"] = res.poset.labels();
            d["rank"] = poly_to_py(res.poset.rank_sequence());
            return d;
        },
        py::arg("n"), py::arg("diagonals"), py::arg("arc"));

    m.def(
        "verify_expansion",
        [](int n, const std::vector<std::pair<int, int>>& diagonals, std::pair<int, int> arc) {
            return verify_expansion(tri(n, diagonals), Arc(arc.first, arc.second));
        },
        py::arg("n"), py::arg("diagonals"), py::arg("arc"));

    m.def(
        "check_notched_decompositions",
        [](const std::vector<int>& alpha) {
            NotchedDecompositionReport rep = check_notched_decompositions(comp(alpha));
            py::dict d;
            d["eq1"] = rep.eq1;
            d["eq2"] = rep.eq2;
            d["split_top"] = rep.split_top;
            d["split_top_bar"] = rep.split_top_bar;
            d["split_delta"] = rep.split_delta;
            d["split_bottom"] = rep.split_bottom;
            d["split_bottom_bar"] = rep.split_bottom_bar;
            d["split_delta_prime"] = rep.split_delta_prime;
            d["dual_bridge"] = rep.dual_bridge;
            d["all_hold"] = rep.all_hold();
            d["rank"] = poly_to_py(rep.notched_rank);
            return d;
        },
        py::arg("alpha"));

    m.def(
        "classify_flip_recurrence",
        [](int n, const std::vector<std::pair<int, int>>& diagonals,
           std::pair<int, int> lamination_curve, std::pair<int, int> arc) {
            LamCurve c;
            c.from = {lamination_curve.first, 0};
            c.to = {lamination_curve.second, 0};
            auto steps = classify_flip_recurrence(tri(n, diagonals), {{c}},
                                                  Arc(arc.first, arc.second));
            py::list out;
            for (const auto& s : steps) {
                py::dict d;
                d["k"] = s.k;
                d["h"] = s.h;
                d["matched_cases"] = s.matched_cases;
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("diagonals"), py::arg("lamination_curve"), py::arg("arc"));

    m.def(
        "scan",
        [](const std::string& mode, int n_min, int n_max, py::object sample_limit,
           std::uint64_t seed, int workers) {
            ScanConfig cfg;
            cfg.mode = scan_mode_from_string(mode);
            cfg.n_min = n_min;
            cfg.n_max = n_max;
            if (!sample_limit.is_none()) cfg.sample_limit = sample_limit.cast<std::uint64_t>();
            cfg.seed = seed;
            cfg.parallelism = workers;
            ScanReport rep = run_scan(cfg);
            py::dict d;
            d["instances_checked"] = rep.instances_checked;
            d["elapsed_seconds"] = rep.elapsed_seconds;
            d["findings_only"] = rep.findings_only;
            py::list viols;
            for (const auto& v : rep.violations) {
                py::dict e;
                e["n"] = v.n;
                e["instance"] = v.instance;
                e["poly"] = poly_to_py(v.poly);
                e["failed"] = v.failed;
                viols.append(e);
            }
            d["violations"] = viols;
            py::list sizes;
            for (const auto& s : rep.per_size) {
                py::dict e;
                e["n"] = s.n;
                e["instances"] = s.instances;
                e["violations"] = s.violations;
                sizes.append(e);
            }
            d["per_size"] = sizes;
            return d;
        },
        py::arg("mode"), py::arg("n_min"), py::arg("n_max"), py::arg("sample_limit") = py::none(),
        py::arg("seed") = 20240528, py::arg("workers") = 1);

    m.def("catalan", [](int k) { return catalan(k); }, py::arg("k"));
}
