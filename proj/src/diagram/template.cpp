#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "pd_lex.hpp"
#include "skein/diagram.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

struct TwistLine {
    int index;
    int e1, e2;
    int sign;
};

TwistLine parse_twist_line(const std::string& line) {
    static const std::regex re(R"(^twist\s+(\d+)\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*([+-])1?\s*$)");
    std::smatch m;
    if (!std::regex_match(line, m, re)) throw Error("diagram.ParseError", "malformed twist line: " + line);
    return {std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), m[4] == "+" ? 1 : -1};
}

struct Slot {
    int vertex;
    int index;  // 1-based, 0 while unassigned
    int sign;
    int bl = 0, br = 0;  // labels at BL and BR for T tokens
};

// darts of face f running along the edge made of points a, b
int dart_in(const std::vector<int>& face, int a, int b) {
    for (int d : face)
        if (d == a || d == b) return d;
    return -1;
}

}  // namespace

TwistTemplate parse_template(std::string_view text) {
    std::vector<detail::PdToken> toks;
    std::vector<TwistLine> twists;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        line = line.substr(b, line.find_last_not_of(" \t\r") + 1 - b);
        if (line.rfind("twist", 0) == 0)
            twists.push_back(parse_twist_line(line));
        else
            for (auto& t : detail::lex_pd(line, "XPTU")) toks.push_back(std::move(t));
    }
    if (toks.empty()) throw Error("diagram.ParseError", "template has no diagram tokens");

    TwistTemplate t;
    PlanarGraph& g = t.base;
    std::map<int, std::vector<int>> where;
    std::vector<Slot> slots;
    for (const auto& tok : toks) {
        int v = -1;
        switch (tok.kind) {
        case 'U':
            ++g.free_loops;
            continue;
        case 'X':
            v = g.add_vertex(Kind::Crossing, 4);
            break;
        case 'P':
            v = g.add_vertex(Kind::Arc, 2);
            break;
        default:
            v = g.add_vertex(Kind::Slot, 4);
            slots.push_back({v, 0, 1, tok.labels[0], tok.labels[1]});
            break;
        }
        for (std::size_t j = 0; j < tok.labels.size(); ++j) where[tok.labels[j]].push_back(g.point(v, static_cast<int>(j)));
    }
    for (const auto& [label, pts] : where) {
        if (pts.size() != 2)
            throw Error("diagram.TopologyError", "edge label " + std::to_string(label) + " used " + std::to_string(pts.size()) + " times");
        g.link(pts[0], pts[1]);
    }
    if (!g.euler_ok()) throw Error("diagram.TopologyError", "template is not planar");

    std::vector<int> cut;
    for (const auto& tw : twists) {
        auto it = std::find_if(slots.begin(), slots.end(), [&](const Slot& sl) {
            return sl.index == 0 && sl.bl == tw.e1 && sl.br == tw.e2;
        });
        if (it != slots.end()) {
            it->index = tw.index;
            it->sign = tw.sign;
            continue;
        }
        if (tw.e1 == tw.e2 || !where.count(tw.e1) || !where.count(tw.e2) ||
            std::find(cut.begin(), cut.end(), tw.e1) != cut.end() || std::find(cut.begin(), cut.end(), tw.e2) != cut.end())
            throw Error("diagram.TopologyError", "twist line must name two distinct uncut edges");
        const auto& a = where.at(tw.e1);
        const auto& b = where.at(tw.e2);
        int top1 = -1, bot2 = -1;
        for (const auto& f : g.faces()) {
            top1 = dart_in(f, a[0], a[1]);
            bot2 = dart_in(f, b[0], b[1]);
            if (top1 >= 0 && bot2 >= 0) break;
        }
        if (top1 < 0 || bot2 < 0)
            throw Error("diagram.TopologyError", "edges " + std::to_string(tw.e1) + " and " + std::to_string(tw.e2) + " share no face");
        const int bot1 = g.partner[u(top1)], top2 = g.partner[u(bot2)];
        const int s = g.add_vertex(Kind::Slot, 4);
        g.link(g.point(s, 0), bot1);
        g.link(g.point(s, 3), top1);
        g.link(g.point(s, 1), bot2);
        g.link(g.point(s, 2), top2);
        slots.push_back({s, tw.index, tw.sign, 0, 0});
        cut.push_back(tw.e1);
        cut.push_back(tw.e2);
    }

    const int n = static_cast<int>(slots.size());
    std::vector<char> used(u(n + 1), 0);
    for (const auto& s : slots) {
        if (s.index == 0) continue;
        if (s.index < 1 || s.index > n || used[u(s.index)]) throw Error("diagram.ParseError", "twist indices must be distinct and within 1.." + std::to_string(n));
        used[u(s.index)] = 1;
    }
    int free_index = 1;
    for (auto& s : slots) {
        if (s.index != 0) continue;
        while (used[u(free_index)]) ++free_index;
        s.index = free_index;
        used[u(free_index)] = 1;
    }
    std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.index < y.index; });
    for (const auto& s : slots) {
        g.vertices[u(s.vertex)].tag = s.index - 1;
        t.slot_vertex.push_back(s.vertex);
        t.slot_sign.push_back(s.sign);
    }
    if (!g.euler_ok()) throw Error("diagram.TopologyError", "template is not planar after inserting slots");
    return t;
}

PlanarGraph fill_graph(const TwistTemplate& t, const std::vector<int>& k, std::vector<int>* hints) {
    if (static_cast<int>(k.size()) != t.t())
        throw Error("diagram.InvalidArgument", "expected " + std::to_string(t.t()) + " twist counts, got " + std::to_string(k.size()));
    for (int ki : k)
        if (ki < 0) throw Error("diagram.InvalidArgument", "twist counts must be nonnegative");
    const PlanarGraph& g = t.base;
    PlanarGraph out;
    out.free_loops = g.free_loops;
    std::vector<int> map(u(g.num_points()), -1);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        const auto& vx = g.vertices[u(v)];
        if (vx.kind == Kind::Slot) continue;
        const int w = out.add_vertex(vx.kind, vx.arity, vx.tag);
        for (int i = 0; i < vx.arity; ++i) map[u(g.point(v, i))] = out.point(w, i);
    }
    for (int i = 0; i < t.t(); ++i) {
        const int sv = t.slot_vertex[u(i)];
        std::array<int, 4> corner{};  // BL, BR, TR, TL of the filled region
        if (k[u(i)] == 0) {
            const int left = out.add_vertex(Kind::Arc, 2), right = out.add_vertex(Kind::Arc, 2);
            corner = {out.point(left, 0), out.point(right, 0), out.point(right, 1), out.point(left, 1)};
        } else {
            std::array<int, 4> prev{};
            for (int j = 0; j < k[u(i)]; ++j) {
                const auto c = add_corner_crossing(out, t.slot_sign[u(i)] > 0);
                if (j == 0) {
                    corner[0] = c[0];
                    corner[1] = c[1];
                } else {
                    out.link(prev[3], c[0]);
                    out.link(prev[2], c[1]);
                }
                prev = c;
            }
            corner[2] = prev[2];
            corner[3] = prev[3];
        }
        for (int j = 0; j < 4; ++j) map[u(g.point(sv, j))] = corner[u(j)];
        if (hints) {
            hints->push_back(corner[0]);
            hints->push_back(corner[1]);
        }
    }
    for (int p = 0; p < g.num_points(); ++p) {
        const int q = g.partner[u(p)];
        if (p < q) out.link(map[u(p)], map[u(q)]);
    }
    return out;
}

Diagram twist_fill(const TwistTemplate& t, const std::vector<int>& k) {
    std::vector<int> hints;
    const PlanarGraph g = fill_graph(t, k, &hints);
    return from_graph(g, hints);
}

}  // namespace skein
