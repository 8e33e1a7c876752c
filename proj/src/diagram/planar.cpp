#include "skein/planar.hpp"

#include <numeric>

#include "skein/error.hpp"

namespace skein {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace

int PlanarGraph::add_vertex(Kind kind, int arity, int tag) {
    const int v = static_cast<int>(vertices.size());
    vertices.push_back({kind, arity, tag, num_points()});
    for (int i = 0; i < arity; ++i) {
        partner.push_back(-1);
        owner.push_back(v);
    }
    return v;
}

void PlanarGraph::link(int p, int q) {
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
}

bool PlanarGraph::closed() const {
    for (int q : partner)
        if (q < 0) return false;
    return true;
}

int PlanarGraph::face_successor(int leave) const {
    const int q = partner[static_cast<std::size_t>(leave)];
    const int w = vertex_of(q);
    const int a = arity(w);
    return point(w, (local(q) + a - 1) % a);
}

std::vector<std::vector<int>> PlanarGraph::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(partner.size(), 0);
    for (int p = 0; p < num_points(); ++p) {
        if (seen[static_cast<std::size_t>(p)] || partner[static_cast<std::size_t>(p)] < 0) continue;
        std::vector<int> face;
        for (int d = p; !seen[static_cast<std::size_t>(d)]; d = face_successor(d)) {
            seen[static_cast<std::size_t>(d)] = 1;
            face.push_back(d);
        }
        out.push_back(std::move(face));
    }
    return out;
}

int PlanarGraph::connected_components() const {
    UnionFind uf(static_cast<int>(vertices.size()));
    int comps = static_cast<int>(vertices.size());
    for (int p = 0; p < num_points(); ++p) {
        const int q = partner[static_cast<std::size_t>(p)];
        if (q >= 0 && uf.unite(vertex_of(p), vertex_of(q))) --comps;
    }
    return comps;
}

bool PlanarGraph::euler_ok() const {
    if (!closed()) return false;
    const long v = static_cast<long>(vertices.size());
    const long e = num_points() / 2;
    const long f = static_cast<long>(faces().size());
    return v - e + f == 2L * connected_components();
}

std::array<int, 4> add_corner_crossing(PlanarGraph& g, bool positive) {
    const int v = g.add_vertex(PlanarGraph::Kind::Crossing, 4);
    const int p0 = g.point(v, 0);
    // under strand enters at point 0; positive: under runs BR -> TL
    if (positive) return {p0 + 3, p0, p0 + 1, p0 + 2};
    return {p0, p0 + 1, p0 + 2, p0 + 3};
}

PlanarGraph replace_vertex(const PlanarGraph& g, int v, const std::vector<std::pair<int, int>>& pairs) {
    PlanarGraph out;
    out.free_loops = g.free_loops;
    std::vector<int> map(u(g.num_points()), -1);
    for (int w = 0; w < static_cast<int>(g.vertices.size()); ++w) {
        if (w == v) continue;
        const auto& vx = g.vertices[u(w)];
        const int nw = out.add_vertex(vx.kind, vx.arity, vx.tag);
        for (int i = 0; i < vx.arity; ++i) map[u(g.point(w, i))] = out.point(nw, i);
    }
    if (static_cast<int>(pairs.size()) * 2 != g.arity(v)) throw Error("diagram.InvalidArgument", "pairing does not cover the vertex");
    for (const auto& [i, j] : pairs) {
        const int a = out.add_vertex(PlanarGraph::Kind::Arc, 2);
        map[u(g.point(v, i))] = out.point(a, 0);
        map[u(g.point(v, j))] = out.point(a, 1);
    }
    for (int p = 0; p < g.num_points(); ++p) {
        const int q = g.partner[u(p)];
        if (q > p) out.link(map[u(p)], map[u(q)]);
    }
    return out;
}

int count_loops(const PlanarGraph& g, const std::vector<std::vector<std::pair<int, int>>>& res) {
    UnionFind uf(g.num_points());
    int classes = g.num_points();
    for (int p = 0; p < g.num_points(); ++p) {
        const int q = g.partner[u(p)];
        if (q > p && uf.unite(p, q)) --classes;
    }
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (g.vertices[u(v)].kind == PlanarGraph::Kind::Arc) {
            if (uf.unite(g.point(v, 0), g.point(v, 1))) --classes;
            continue;
        }
        for (const auto& [i, j] : res[u(v)])
            if (uf.unite(g.point(v, i), g.point(v, j))) --classes;
    }
    return classes + g.free_loops;
}

PlanarGraph cable_graph(const PlanarGraph& g, int n, std::vector<std::vector<int>>* cable_of) {
    if (n < 1) throw Error("diagram.InvalidArgument", "cable multiplicity must be positive");
    PlanarGraph out;
    out.free_loops = g.free_loops * n;
    std::vector<std::vector<int>> pts(static_cast<std::size_t>(g.num_points()), std::vector<int>(static_cast<std::size_t>(n), -1));
    auto at = [&](int p, int s) -> int& { return pts[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)]; };

    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        const auto& vx = g.vertices[static_cast<std::size_t>(v)];
        switch (vx.kind) {
        case PlanarGraph::Kind::Crossing: {
            std::vector<int> grid(static_cast<std::size_t>(n * n));
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x) grid[static_cast<std::size_t>(x + n * y)] = out.add_vertex(PlanarGraph::Kind::Crossing, 4);
            auto cp = [&](int x, int y, int i) { return out.point(grid[static_cast<std::size_t>(x + n * y)], i); };
            for (int y = 0; y < n; ++y)
                for (int x = 0; x < n; ++x) {
                    if (y + 1 < n) out.link(cp(x, y, 2), cp(x, y + 1, 0));
                    if (x + 1 < n) out.link(cp(x, y, 1), cp(x + 1, y, 3));
                }
            const int e0 = g.point(v, 0), e1 = g.point(v, 1), e2 = g.point(v, 2), e3 = g.point(v, 3);
            for (int s = 0; s < n; ++s) {
                at(e0, s) = cp(s, 0, 0);
                at(e2, s) = cp(n - 1 - s, n - 1, 2);
                at(e1, s) = cp(n - 1, s, 1);
                at(e3, s) = cp(0, n - 1 - s, 3);
            }
            break;
        }
        case PlanarGraph::Kind::Arc: {
            for (int r = 0; r < n; ++r) {
                const int a = out.add_vertex(PlanarGraph::Kind::Arc, 2);
                at(g.point(v, 0), r) = out.point(a, 0);
                at(g.point(v, 1), n - 1 - r) = out.point(a, 1);
            }
            break;
        }
        case PlanarGraph::Kind::Slot:
        case PlanarGraph::Kind::Box: {
            const int b = out.add_vertex(vx.kind, vx.arity * n, vx.tag);
            for (int i = 0; i < vx.arity; ++i)
                for (int s = 0; s < n; ++s) at(g.point(v, i), s) = out.point(b, i * n + s);
            break;
        }
        }
    }
    for (int p = 0; p < g.num_points(); ++p) {
        const int q = g.partner[static_cast<std::size_t>(p)];
        if (q < p) continue;
        for (int r = 0; r < n; ++r) out.link(at(p, n - 1 - r), at(q, r));
    }
    if (cable_of) *cable_of = std::move(pts);
    return out;
}

}  // namespace skein
