#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fenceq/poset.hpp"
#include "fenceq/surface.hpp"

namespace fenceq {

// All compositions of n with a_1 >= 0 (or >= 1) and a_i >= 1 afterwards.
std::vector<Composition> compositions_of(int n, bool allow_leading_zero);

// All triangulations of the n-gon; size is Catalan(n-2).
std::vector<PolygonTriangulation> all_triangulations(int n);

std::uint64_t catalan(int k);

// All chords between non-adjacent vertices: n(n-3)/2 of them.
std::vector<Arc> all_arcs(int n);

// All single-curve laminations: boundary edge pairs at cyclic distance >= 2.
std::vector<LamCurve> all_single_curves(int n);

// Uniform over all triangulations via Catalan-weighted recursive splitting.
PolygonTriangulation random_triangulation(int n, std::mt19937& rng);

}  // namespace fenceq
