#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "skein/error.hpp"
#include "skein/spin.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

int find(std::vector<int>& p, int x) {
    while (p[u(x)] != x) x = p[u(x)] = p[u(p[u(x)])];
    return x;
}

int next_dart(const KTG& g, int d) {
    const int a = d ^ 1;
    const auto& rot = g.rotation[u(g.dart_vertex(a))];
    const int pos = static_cast<int>(std::find(rot.begin(), rot.end(), a) - rot.begin());
    return rot[u((pos + 2) % 3)];
}

std::vector<std::array<int, 3>> incident_darts(const KTG& g) {
    std::vector<std::vector<int>> at(u(g.num_vertices()));
    for (int d = 0; d < 2 * static_cast<int>(g.edges.size()); ++d) {
        const int v = g.dart_vertex(d);
        if (v < 0 || v >= g.num_vertices()) throw Error("spin.InvalidKTG", "edge endpoint is not a vertex");
        at[u(v)].push_back(d);
    }
    std::vector<std::array<int, 3>> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (at[u(v)].size() != 3)
            throw Error("spin.InvalidKTG", "vertex " + std::to_string(g.vertex_ids[u(v)]) + " has " + std::to_string(at[u(v)].size()) + " edge ends");
        out.push_back({at[u(v)][0], at[u(v)][1], at[u(v)][2]});
    }
    return out;
}

void embed(KTG& g) {
    const auto inc = incident_darts(g);
    const int nv = g.num_vertices();
    if (nv > 22) throw Error("spin.InvalidKTG", "embedding search limited to 22 vertices; give rotations");
    g.rotation = inc;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
        for (int v = 0; v < nv; ++v) {
            auto r = inc[u(v)];
            if ((mask >> v) & 1) std::swap(r[1], r[2]);
            g.rotation[u(v)] = r;
        }
        if (g.planar()) return;
    }
    throw Error("spin.NonPlanar", "graph has no planar embedding");
}

// ccw points of one edge end around its vertex
std::vector<int> end_points(const PlanarGraph& pg, int box, int color, int end) {
    std::vector<int> pts;
    if (box < 0) return pts;
    for (int i = 0; i < color; ++i) pts.push_back(pg.point(box, end == 0 ? color - 1 - i : 2 * color - 1 - i));
    return pts;
}

}  // namespace

std::vector<std::vector<int>> KTG::faces() const {
    const int nd = 2 * static_cast<int>(edges.size());
    std::vector<char> seen(u(nd), 0);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < nd; ++d) {
        if (seen[u(d)]) continue;
        std::vector<int> f;
        int cur = d;
        do {
            seen[u(cur)] = 1;
            f.push_back(cur);
            cur = next_dart(*this, cur);
        } while (cur != d);
        out.push_back(std::move(f));
    }
    return out;
}

int KTG::components() const {
    std::vector<int> p(u(num_vertices()));
    std::iota(p.begin(), p.end(), 0);
    int c = num_vertices();
    for (const auto& e : edges) {
        const int a = find(p, e.v[0]), b = find(p, e.v[1]);
        if (a != b) {
            p[u(a)] = b;
            --c;
        }
    }
    return c;
}

bool KTG::planar() const {
    return num_vertices() - static_cast<int>(edges.size()) + static_cast<int>(faces().size()) == 2 * components();
}

void check_ktg(const KTG& g) {
    const auto inc = incident_darts(g);
    if (g.rotation.size() != inc.size()) throw Error("spin.InvalidKTG", "rotation missing");
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto a = inc[u(v)], b = g.rotation[u(v)];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw Error("spin.InvalidKTG", "rotation does not list the vertex's edge ends");
        const auto& r = g.rotation[u(v)];
        if (!admissible(g.color_of(r[0]), g.color_of(r[1]), g.color_of(r[2])))
            throw Error("spin.Inadmissible", "colors at vertex " + std::to_string(g.vertex_ids[u(v)]) + " are not admissible");
    }
    for (const auto& e : g.edges)
        if (e.color < 0) throw Error("spin.InvalidKTG", "negative color");
    for (int c : g.circles)
        if (c < 0) throw Error("spin.InvalidKTG", "negative color");
    if (!g.planar()) throw Error("spin.NonPlanar", "rotation system is not planar");
}

KTG parse_ktg(std::string_view text) {
    KTG g;
    std::map<int, int> vindex;
    std::map<int, int> eindex;
    std::vector<std::pair<int, std::vector<int>>> rot_lines;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) { throw Error("spin.ParseError", "line " + std::to_string(lineno) + ": " + msg); };
    std::vector<std::array<int, 5>> raw_edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::replace(line.begin(), line.end(), '[', ' ');
        std::replace(line.begin(), line.end(), ']', ' ');
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        std::vector<long> nums;
        long x = 0;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) fail("expected integers");
        if (tag == "V") {
            if (nums.size() != 1 && nums.size() != 4) fail("V takes an id and optionally three edge ids");
            const int id = static_cast<int>(nums[0]);
            if (!vindex.emplace(id, g.num_vertices()).second) fail("duplicate vertex " + std::to_string(id));
            g.vertex_ids.push_back(id);
            if (nums.size() == 4) rot_lines.push_back({id, {static_cast<int>(nums[1]), static_cast<int>(nums[2]), static_cast<int>(nums[3])}});
        } else if (tag == "E") {
            if (nums.size() != 4 && nums.size() != 5) fail("E takes id v1 v2 color [framing]");
            raw_edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]), static_cast<int>(nums[2]), static_cast<int>(nums[3]),
                                 nums.size() == 5 ? static_cast<int>(nums[4]) : 0});
        } else {
            fail("unknown record '" + tag + "'");
        }
    }
    for (const auto& r : raw_edges) {
        KTG::Edge e;
        e.id = r[0];
        if (!eindex.emplace(e.id, static_cast<int>(g.edges.size())).second) throw Error("spin.ParseError", "duplicate edge " + std::to_string(e.id));
        for (int k = 0; k < 2; ++k) {
            auto it = vindex.find(r[u(1 + k)]);
            if (it == vindex.end()) throw Error("spin.ParseError", "edge " + std::to_string(e.id) + " names an unknown vertex");
            e.v[u(k)] = it->second;
        }
        e.color = r[3];
        e.framing = r[4];
        if (e.color < 0) throw Error("spin.ParseError", "edge " + std::to_string(e.id) + " has a negative color");
        g.edges.push_back(e);
    }
    if (g.num_vertices() == 0 && g.edges.empty()) throw Error("spin.ParseError", "empty graph");
    if (rot_lines.empty()) {
        embed(g);
    } else {
        if (static_cast<int>(rot_lines.size()) != g.num_vertices()) throw Error("spin.ParseError", "rotations must be given for every vertex or none");
        g.rotation.resize(u(g.num_vertices()));
        for (const auto& [id, es] : rot_lines) {
            const int v = vindex[id];
            std::map<int, int> used;
            for (int k = 0; k < 3; ++k) {
                auto it = eindex.find(es[u(k)]);
                if (it == eindex.end()) throw Error("spin.ParseError", "vertex " + std::to_string(id) + " names an unknown edge");
                const auto& e = g.edges[u(it->second)];
                int end = e.v[0] == v ? 0 : 1;
                if (e.v[0] == v && e.v[1] == v) end = used[it->second]++;
                if (e.v[u(end)] != v) throw Error("spin.ParseError", "edge " + std::to_string(es[u(k)]) + " does not meet vertex " + std::to_string(id));
                g.rotation[u(v)][u(k)] = 2 * it->second + end;
            }
        }
    }
    check_ktg(g);
    return g;
}

std::string ktg_text(const KTG& g) {
    std::ostringstream os;
    for (int v = 0; v < g.num_vertices(); ++v) {
        os << "V " << g.vertex_ids[u(v)];
        for (int d : g.rotation[u(v)]) os << ' ' << g.edges[u(d / 2)].id;
        os << '\n';
    }
    for (const auto& e : g.edges)
        os << "E " << e.id << ' ' << g.vertex_ids[u(e.v[0])] << ' ' << g.vertex_ids[u(e.v[1])] << ' ' << e.color << ' ' << e.framing << '\n';
    return os.str();
}

KTG theta_graph(int a, int b, int c) {
    KTG g;
    g.vertex_ids = {1, 2};
    g.edges = {{1, {0, 1}, a, 0}, {2, {0, 1}, b, 0}, {3, {0, 1}, c, 0}};
    g.rotation = {{0, 2, 4}, {5, 3, 1}};
    check_ktg(g);
    return g;
}

KTG tetrahedron_graph(int a, int b, int c, int d, int e, int f) {
    KTG g;
    g.vertex_ids = {1, 2, 3, 4};
    // vertices (a,b,c), (c,e,f), (a,e,d), (b,d,f)
    g.edges = {{1, {0, 2}, a, 0}, {2, {0, 3}, b, 0}, {3, {0, 1}, c, 0}, {4, {2, 3}, d, 0}, {5, {1, 2}, e, 0}, {6, {1, 3}, f, 0}};
    embed(g);
    check_ktg(g);
    return g;
}

SkeinElement ktg_skein(const KTG& g) {
    check_ktg(g);
    SkeinElement s;
    std::vector<int> box(g.edges.size(), -1);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].color > 0) box[i] = s.add_projector(g.edges[i].color);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::array<std::vector<int>, 3> grp;
        std::array<int, 3> col{};
        for (int k = 0; k < 3; ++k) {
            const int d = g.rotation[u(v)][u(k)];
            col[u(k)] = g.color_of(d);
            grp[u(k)] = end_points(s.graph, box[u(d / 2)], col[u(k)], d % 2);
        }
        for (int k = 0; k < 3; ++k) {
            const int x = k, y = (k + 1) % 3, z = (k + 2) % 3;
            const int between = (col[u(x)] + col[u(y)] - col[u(z)]) / 2;
            for (int i = 0; i < between; ++i) s.graph.link(grp[u(x)][u(col[u(x)] - 1 - i)], grp[u(y)][u(i)]);
        }
    }
    for (int c : g.circles) {
        if (c == 0) continue;
        const int b = s.add_projector(c);
        for (int i = 0; i < c; ++i) s.graph.link(s.graph.point(b, i), s.graph.point(b, 2 * c - 1 - i));
    }
    return s;
}

RationalFunc ktg_bracket(const KTG& g) {
    RationalFunc r = bracket(ktg_skein(g));
    for (const auto& e : g.edges)
        if (e.framing != 0) {
            LaurentPoly twist = LaurentPoly::monomial(e.color % 2 ? -1 : 1, e.color * e.color + 2 * e.color);
            r *= e.framing > 0 ? RationalFunc(twist.pow(static_cast<unsigned>(e.framing)))
                               : RationalFunc(twist.pow(static_cast<unsigned>(-e.framing))).inverse();
        }
    return r;
}

KTG ktg_of_template(const TwistTemplate& t, int n) {
    if (n < 1) throw Error("spin.InvalidArgument", "color must be positive");
    const PlanarGraph& b = t.base;
    std::vector<int> slot_of(b.vertices.size(), -1);
    for (int i = 0; i < t.t(); ++i) slot_of[u(t.slot_vertex[u(i)])] = i;
    for (const auto& vx : b.vertices)
        if (vx.kind == Kind::Crossing) throw Error("spin.HypothesisViolated", "template has crossings outside its twist regions");
    KTG g;
    for (int i = 0; i < t.t(); ++i) {
        g.vertex_ids.push_back(2 * i + 1);
        g.vertex_ids.push_back(2 * i + 2);
        g.edges.push_back({i + 1, {2 * i, 2 * i + 1}, 2 * n, 0});
        g.rotation.push_back({-1, -1, 2 * i});
        g.rotation.push_back({-1, -1, 2 * i + 1});
    }
    std::vector<char> seen(u(b.num_points()), 0);
    auto opposite = [&](int p) { return b.point(b.vertex_of(p), 1 - b.local(p)); };
    // slot point j sits at vertex 2i + (j >= 2) in rotation position j % 2
    for (int i = 0; i < t.t(); ++i)
        for (int j = 0; j < 4; ++j) {
            const int p = b.point(t.slot_vertex[u(i)], j);
            if (seen[u(p)]) continue;
            seen[u(p)] = 1;
            int q = b.partner[u(p)];
            while (slot_of[u(b.vertex_of(q))] < 0) {
                seen[u(q)] = 1;
                q = opposite(q);
                seen[u(q)] = 1;
                q = b.partner[u(q)];
            }
            seen[u(q)] = 1;
            const int i2 = slot_of[u(b.vertex_of(q))], j2 = b.local(q);
            const int e = static_cast<int>(g.edges.size());
            g.edges.push_back({e + 1, {2 * i + (j >= 2), 2 * i2 + (j2 >= 2)}, n, 0});
            g.rotation[u(2 * i + (j >= 2))][u(j % 2)] = 2 * e;
            g.rotation[u(2 * i2 + (j2 >= 2))][u(j2 % 2)] = 2 * e + 1;
        }
    for (int p = 0; p < b.num_points(); ++p) {
        if (seen[u(p)]) continue;
        int q = p;
        do {
            seen[u(q)] = 1;
            q = opposite(q);
            seen[u(q)] = 1;
            q = b.partner[u(q)];
        } while (q != p);
        g.circles.push_back(n);
    }
    for (int i = 0; i < b.free_loops; ++i) g.circles.push_back(n);
    check_ktg(g);
    return g;
}

}  // namespace skein
