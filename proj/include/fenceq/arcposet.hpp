#pragma once

#include "fenceq/poset.hpp"
#include "fenceq/surface.hpp"

namespace fenceq {

// Fence poset on the crossing sequence of an arc through a triangulation:
// consecutive crossings compare by which side of the oriented arc their
// shared endpoint lies on.
struct ArcPosetResult {
    Composition composition;
    FinitePoset poset;
    int crossing_count = 0;
};

ArcPosetResult fence_poset_of_arc(const PolygonTriangulation& t, const Arc& g);

// Rank polynomial of the arc's fence poset against the mutation pipeline.
bool verify_expansion(const PolygonTriangulation& t, const Arc& g);

}  // namespace fenceq
