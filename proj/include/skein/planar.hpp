#pragma once

#include <array>
#include <utility>
#include <vector>

namespace skein {

// A planar graph whose vertices carry cyclically (counterclockwise) ordered
// points; every point is joined to exactly one partner point.
//   Crossing: 4 points, the under strand runs through points 0 and 2.
//   Arc:      2 points, a plain pass-through.
//   Slot:     4 points BL, BR, TR, TL of a twist region.
//   Box:      2m points; bottom 0..m-1 left to right, then top m-1..0.
struct PlanarGraph {
    enum class Kind { Crossing, Arc, Slot, Box };
    struct Vertex {
        Kind kind;
        int arity;
        int tag;  // slot index or box id
        int first;
    };

    std::vector<Vertex> vertices;
    std::vector<int> partner;  // -1 for a free point
    std::vector<int> owner;
    int free_loops = 0;  // components with no vertex at all

    int add_vertex(Kind kind, int arity, int tag = -1);
    int point(int v, int i) const { return vertices[static_cast<std::size_t>(v)].first + i; }
    int vertex_of(int p) const { return owner[static_cast<std::size_t>(p)]; }
    int local(int p) const { return p - vertices[static_cast<std::size_t>(owner[static_cast<std::size_t>(p)])].first; }
    int arity(int v) const { return vertices[static_cast<std::size_t>(v)].arity; }
    void link(int p, int q);
    int num_points() const { return static_cast<int>(partner.size()); }
    bool closed() const;

    // Face tracing keeps the face on the left: after arriving at point q the
    // walk leaves from the clockwise neighbour of q.
    int face_successor(int leave) const;
    std::vector<std::vector<int>> faces() const;
    int connected_components() const;
    // V - E + F == 2 * components, counting free loops as their own spheres
    bool euler_ok() const;
};

// Crossing with geometric corners BL, BR, TR, TL; positive means the strand
// from BL to TR is the over strand. Returns the corner points.
std::array<int, 4> add_corner_crossing(PlanarGraph& g, bool positive);

// Copy of g with vertex v removed and its points joined in the given local
// pairs by arcs.
PlanarGraph replace_vertex(const PlanarGraph& g, int v, const std::vector<std::pair<int, int>>& pairs);

// number of closed loops when every vertex is resolved into local pairs
// (res[v] lists pairs of local points); arcs pass through
int count_loops(const PlanarGraph& g, const std::vector<std::vector<std::pair<int, int>>>& res);

// n-blackboard cable. Crossings become n x n grids, arcs pass through, slots
// become boxes with 4n points and arity-2 boxes become 2n-point boxes.
// cable_of[p] lists, for each old point p, its n new points in ccw order.
PlanarGraph cable_graph(const PlanarGraph& g, int n, std::vector<std::vector<int>>* cable_of = nullptr);

}  // namespace skein
