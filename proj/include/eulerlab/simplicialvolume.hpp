#pragma once

#include <array>
#include <string>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

// Closed oriented surface glued from a 4g-gon with the standard side pairing
// a1 b1 a1^-1 b1^-1 ..., fan-triangulated from vertex 0.
struct QuotientComplex {
    struct Slot {
        int edge;
        int sign; // contribution of the triangle boundary to this edge
    };
    int genus = 0;
    int num_vertices = 0;
    int num_edges = 0;
    std::vector<std::array<Slot, 3>> triangles;
    std::vector<std::array<int, 3>> triangle_vertices; // quotient labels
    std::vector<int> polygon_vertex_class;             // size 4g
    std::vector<int> polygon_side_edge;                // size 4g

    int num_triangles() const { return static_cast<int>(triangles.size()); }
    int chi() const { return num_vertices - num_edges + num_triangles(); }
};

QuotientComplex polygon_triangulation(int genus);

// Real 2-chain supported on the triangles of a complex.
using Chain2 = std::vector<std::pair<double, int>>;

double l1_norm(const Chain2& c);

// All triangles with coefficient +1; the fundamental cycle of the complex.
Chain2 canonical_cycle(const QuotientComplex& K);

// l1-norm of the 1-boundary after edge identification; 0 certifies a cycle.
double boundary_residual(const Chain2& c, const QuotientComplex& K);

struct SurfaceBounds {
    int genus = 0;
    int punctures = 0;
    int cover_degree = 1;
    double exact = 0;
    double lower = 0;
    double upper_d = 0;
    int cover_genus = 0; // d(g-1)+1 when the covering trick applies
    std::string exact_provenance;
    std::string lower_provenance;
    std::string upper_provenance;
};

// exact = max{0, -2 chi}; for closed surfaces upper_d = 2|chi| + 2/d via a
// degree-d cover, and for g >= 2 the flat-bundle argument gives lower = 2|chi|.
SurfaceBounds surface_bounds(int genus, int punctures, int cover_degree);

} // namespace eulerlab
