#include "eulerlab/simplicialvolume.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace eulerlab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

} // namespace

QuotientComplex polygon_triangulation(int genus) {
    if (genus < 1) throw Error("polygon_triangulation needs genus >= 1");
    const int g = genus;
    const int nv = 4 * g;

    // side i runs from polygon vertex i to i+1; block 4k carries
    // a_{k+1} b_{k+1} a_{k+1}^-1 b_{k+1}^-1, so side 4k glues to side 4k+2
    // reversed and side 4k+1 to side 4k+3 reversed.
    UnionFind uf(nv);
    for (int k = 0; k < g; ++k) {
        const int s0 = 4 * k;
        uf.unite(s0, (s0 + 3) % nv);          // start of a-side ~ end of its partner
        uf.unite(s0 + 1, (s0 + 2) % nv);
        uf.unite(s0 + 1, (s0 + 4) % nv);      // b-side pairing
        uf.unite(s0 + 2, (s0 + 3) % nv);
    }
    QuotientComplex K;
    K.genus = g;
    K.polygon_vertex_class.resize(nv);
    std::map<int, int> relabel;
    for (int i = 0; i < nv; ++i) {
        const int root = uf.find(i);
        auto [it, fresh] = relabel.emplace(root, static_cast<int>(relabel.size()));
        K.polygon_vertex_class[i] = it->second;
        (void)fresh;
    }
    K.num_vertices = static_cast<int>(relabel.size());

    // quotient side edges: one per pairing block letter
    K.polygon_side_edge.resize(nv);
    int edge_count = 0;
    std::vector<int> side_match(nv, 1); // +1 when the side traverses its edge forward
    for (int k = 0; k < g; ++k) {
        const int s0 = 4 * k;
        K.polygon_side_edge[s0] = edge_count;
        K.polygon_side_edge[s0 + 2] = edge_count;
        side_match[s0] = 1;
        side_match[s0 + 2] = -1; // glued reversed
        ++edge_count;
        K.polygon_side_edge[s0 + 1] = edge_count;
        K.polygon_side_edge[s0 + 3] = edge_count;
        side_match[s0 + 1] = 1;
        side_match[s0 + 3] = -1;
        ++edge_count;
    }
    // fan diagonals (0, j) for j = 2..4g-2
    std::vector<int> diagonal_edge(nv, -1);
    for (int j = 2; j <= nv - 2; ++j) diagonal_edge[j] = edge_count++;
    K.num_edges = edge_count;

    // face (p, q) of a triangle as a signed quotient edge
    const auto edge_of = [&](int p, int q) -> QuotientComplex::Slot {
        if (q == p + 1 || (p == nv - 1 && q == 0))
            return {K.polygon_side_edge[p], side_match[p]};
        if (p == q + 1 || (q == nv - 1 && p == 0))
            return {K.polygon_side_edge[q], -side_match[q]};
        if (p == 0) return {diagonal_edge[q], 1};
        if (q == 0) return {diagonal_edge[p], -1};
        throw Error("not a triangulation face");
    };

    for (int i = 1; i <= nv - 2; ++i) {
        // triangle (0, i, i+1); boundary (i,i+1) - (0,i+1) + (0,i)
        std::array<QuotientComplex::Slot, 3> slots;
        auto s01 = edge_of(0, i);
        auto s12 = edge_of(i, i + 1);
        auto s02 = edge_of(0, i + 1);
        slots[0] = {s12.edge, s12.sign};
        slots[1] = {s02.edge, -s02.sign};
        slots[2] = {s01.edge, s01.sign};
        K.triangles.push_back(slots);
        K.triangle_vertices.push_back({K.polygon_vertex_class[0], K.polygon_vertex_class[i],
                                       K.polygon_vertex_class[i + 1 == nv ? 0 : i + 1]});
    }
    return K;
}

double l1_norm(const Chain2& c) {
    double s = 0;
    for (const auto& [coeff, tri] : c) {
        (void)tri;
        s += std::abs(coeff);
    }
    return s;
}

Chain2 canonical_cycle(const QuotientComplex& K) {
    Chain2 c;
    for (int i = 0; i < K.num_triangles(); ++i) c.emplace_back(1.0, i);
    return c;
}

double boundary_residual(const Chain2& c, const QuotientComplex& K) {
    std::vector<double> edge_coeff(K.num_edges, 0.0);
    for (const auto& [coeff, tri] : c) {
        if (tri < 0 || tri >= K.num_triangles())
            throw Error("chain references a triangle outside the complex");
        for (const auto& slot : K.triangles[tri])
            edge_coeff[slot.edge] += coeff * slot.sign;
    }
    double s = 0;
    for (double v : edge_coeff) s += std::abs(v);
    return s;
}

SurfaceBounds surface_bounds(int genus, int punctures, int cover_degree) {
    if (genus < 0 || punctures < 0) throw Error("genus and punctures must be nonnegative");
    if (cover_degree < 1) throw Error("cover degree must be >= 1");
    SurfaceBounds out;
    out.genus = genus;
    out.punctures = punctures;
    out.cover_degree = cover_degree;
    const int chi = 2 - 2 * genus - punctures;
    out.exact = std::max(0, -2 * chi);
    out.exact_provenance = "simplicial volume of a compact surface: max{0, -2*chi}";
    if (punctures == 0 && genus >= 2) {
        out.lower = 2 * std::abs(chi);
        out.lower_provenance =
            "flat circle bundle with |eu| = 2g-2 paired against ||e||_inf = 1/2";
    } else {
        out.lower = 0;
        out.lower_provenance = "trivial bound";
    }
    if (punctures == 0 && genus >= 1) {
        out.cover_genus = cover_degree * (genus - 1) + 1;
        out.upper_d = 2 * std::abs(chi) + 2.0 / cover_degree;
        out.upper_provenance =
            "degree-" + std::to_string(cover_degree) + " cover of genus " +
            std::to_string(out.cover_genus) + ", triangulated by 4g'-2 triangles, "
            "divided by the degree";
    } else {
        out.cover_genus = genus;
        out.upper_d = out.exact;
        out.upper_provenance = "exact value";
    }
    return out;
}

} // namespace eulerlab
