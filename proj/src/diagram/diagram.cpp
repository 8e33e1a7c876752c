#include "skein/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "pd_lex.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

int opposite(const PlanarGraph& g, int p) {
    const int v = g.vertex_of(p);
    const int a = g.arity(v);
    return g.point(v, (g.local(p) + a / 2) % a);
}

// label -> the two (crossing, position) slots it occupies
std::map<int, std::vector<int>> label_slots(const std::vector<std::array<int, 4>>& quads) {
    std::map<int, std::vector<int>> m;
    for (std::size_t i = 0; i < quads.size(); ++i)
        for (int j = 0; j < 4; ++j) m[quads[i][u(j)]].push_back(static_cast<int>(4 * i) + j);
    return m;
}

PlanarGraph graph_of(const std::vector<std::array<int, 4>>& quads, int unknots) {
    PlanarGraph g;
    for (std::size_t i = 0; i < quads.size(); ++i) g.add_vertex(Kind::Crossing, 4);
    for (const auto& [label, slots] : label_slots(quads)) {
        if (slots.size() != 2)
            throw Error("diagram.TopologyError", "edge label " + std::to_string(label) + " used " + std::to_string(slots.size()) + " times");
        g.link(slots[0], slots[1]);
    }
    g.free_loops = unknots;
    return g;
}

// travel through a component entering at `start`; returns the entered points
std::vector<int> walk(const PlanarGraph& g, int start) {
    std::vector<int> entered;
    int cur = start;
    do {
        entered.push_back(cur);
        cur = g.partner[u(opposite(g, cur))];
    } while (cur != start);
    return entered;
}

// position of the entering over strand given the sign
int over_entry(int sign) { return sign > 0 ? 3 : 1; }

struct LabelIndex {
    std::vector<std::array<int, 4>> q;
    int count = 0;
    explicit LabelIndex(const Diagram& d) {
        std::unordered_map<int, int> idx;
        for (const auto& x : d.crossings) {
            std::array<int, 4> r{};
            for (int j = 0; j < 4; ++j) {
                auto [it, fresh] = idx.emplace(x[u(j)], count);
                if (fresh) ++count;
                r[u(j)] = it->second;
            }
            q.push_back(r);
        }
    }
};

int find(std::vector<int>& p, int x) {
    while (p[u(x)] != x) x = p[u(x)] = p[u(p[u(x)])];
    return x;
}

}  // namespace

PlanarGraph to_graph(const Diagram& d) { return graph_of(d.crossings, d.unknots); }

Diagram parse_pd(std::string_view text) {
    const auto toks = detail::lex_pd(text, "XU");
    if (toks.empty()) throw Error("diagram.ParseError", "empty diagram; write U for an unknot");
    Diagram d;
    for (const auto& t : toks) {
        if (t.kind == 'U')
            ++d.unknots;
        else
            d.crossings.push_back({t.labels[0], t.labels[1], t.labels[2], t.labels[3]});
    }
    const PlanarGraph g = graph_of(d.crossings, d.unknots);
    if (!g.euler_ok()) throw Error("diagram.TopologyError", "edge tracing does not close into a planar diagram");

    d.signs.assign(d.crossings.size(), 0);
    std::vector<char> entered(u(g.num_points()), 0), seen(u(g.num_points()), 0);
    int comps = 0;
    auto orient = [&](int start) {
        for (int p : walk(g, start)) {
            entered[u(p)] = 1;
            seen[u(p)] = seen[u(opposite(g, p))] = 1;
        }
        ++comps;
    };
    // components with an under pass are oriented by it
    for (int c = 0; c < d.size(); ++c)
        if (!seen[u(4 * c)]) orient(4 * c);
    // over-only components follow consecutive labels: d -> b when b = d + 1
    for (int c = 0; c < d.size(); ++c) {
        const int p1 = 4 * c + 1, p3 = 4 * c + 3;
        if (seen[u(p1)]) continue;
        const int b = d.crossings[u(c)][1], dd = d.crossings[u(c)][3];
        orient((b - dd == 1 || dd - b > 1) ? p3 : p1);
    }
    for (int c = 0; c < d.size(); ++c) {
        if (!entered[u(4 * c)] || entered[u(4 * c + 2)])
            throw Error("diagram.TopologyError", "crossing " + std::to_string(c + 1) + " does not start at an incoming under strand");
        d.signs[u(c)] = entered[u(4 * c + 3)] ? 1 : -1;
    }
    d.components = comps + d.unknots;
    return d;
}

std::string to_pd(const Diagram& d) {
    std::string s;
    for (const auto& x : d.crossings) {
        if (!s.empty()) s += ' ';
        s += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
    }
    for (int i = 0; i < d.unknots; ++i) s += s.empty() ? "U" : " U";
    return s;
}

int writhe(const Diagram& d) { return std::accumulate(d.signs.begin(), d.signs.end(), 0); }

Resolution resolve(const Diagram& d, const KauffmanState& s) {
    if (static_cast<int>(s.size()) != d.size()) throw Error("diagram.InvalidArgument", "state length differs from crossing count");
    const LabelIndex li(d);
    std::vector<int> parent(u(li.count));
    std::iota(parent.begin(), parent.end(), 0);
    int classes = li.count;
    Resolution r;
    auto unite = [&](int a, int b) {
        a = find(parent, a);
        b = find(parent, b);
        if (a != b) {
            parent[u(a)] = b;
            --classes;
        }
    };
    for (int c = 0; c < d.size(); ++c) {
        const auto& q = li.q[u(c)];
        const auto& x = d.crossings[u(c)];
        if (s[u(c)] == '0') {
            unite(q[0], q[1]);
            unite(q[2], q[3]);
            r.smoothing.push_back({{{x[0], x[1]}, {x[2], x[3]}}});
        } else if (s[u(c)] == '1') {
            unite(q[0], q[3]);
            unite(q[1], q[2]);
            r.smoothing.push_back({{{x[0], x[3]}, {x[1], x[2]}}});
        } else {
            throw Error("diagram.InvalidArgument", "state bits must be 0 or 1");
        }
    }
    r.loops = classes + d.unknots;
    return r;
}

int loop_count(const Diagram& d, std::uint64_t mask) {
    KauffmanState s(u(d.size()), '0');
    for (int c = 0; c < d.size(); ++c)
        if ((mask >> c) & 1) s[u(c)] = '1';
    return resolve(d, s).loops;
}

Diagram from_graph(const PlanarGraph& g, const std::vector<int>& enter_hints) {
    std::vector<int> rank(u(g.num_points()), -1);
    for (std::size_t i = enter_hints.size(); i-- > 0;) rank[u(enter_hints[i])] = static_cast<int>(i);
    for (const auto& v : g.vertices)
        if (v.kind != Kind::Crossing && v.kind != Kind::Arc) throw Error("diagram.InvalidArgument", "graph still contains boxes or slots");

    std::vector<int> label(u(g.num_points()), 0);
    std::vector<char> entered(u(g.num_points()), 0), seen(u(g.num_points()), 0);
    Diagram d;
    int next = 0;
    auto is_crossing = [&](int p) { return g.vertices[u(g.vertex_of(p))].kind == Kind::Crossing; };

    for (int p = 0; p < g.num_points(); ++p) {
        if (seen[u(p)] || !is_crossing(p)) continue;
        auto path = walk(g, p);
        int best = -1, best_rank = -1;
        for (int e : path)
            for (int x : {e, opposite(g, e)})
                if (rank[u(x)] >= 0 && (best_rank < 0 || rank[u(x)] < best_rank)) {
                    best_rank = rank[u(x)];
                    best = x;
                }
        int start = p;
        if (best >= 0 && std::find(path.begin(), path.end(), best) == path.end()) {
            start = opposite(g, p);
            path = walk(g, start);
        }
        for (int e : path) {
            entered[u(e)] = 1;
            seen[u(e)] = seen[u(opposite(g, e))] = 1;
        }
        // label segments from each crossing exit to the next crossing entry
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (!is_crossing(path[i])) continue;
            const int ex = opposite(g, path[i]);
            label[u(ex)] = ++next;
            std::size_t j = (i + 1) % path.size();
            while (!is_crossing(path[j])) j = (j + 1) % path.size();
            label[u(path[j])] = next;
        }
        ++d.components;
    }
    d.unknots = g.free_loops;
    for (int p = 0; p < g.num_points(); ++p) {
        if (seen[u(p)]) continue;
        for (int e : walk(g, p)) seen[u(e)] = seen[u(opposite(g, e))] = 1;
        ++d.unknots;
    }
    d.components += d.unknots;

    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        if (g.vertices[u(v)].kind != Kind::Crossing) continue;
        const int b = g.point(v, 0);
        const int s = entered[u(b)] ? 0 : 2;
        std::array<int, 4> q{};
        for (int j = 0; j < 4; ++j) q[u(j)] = label[u(b + (s + j) % 4)];
        d.crossings.push_back(q);
        d.signs.push_back(entered[u(b + (s + 3) % 4)] ? 1 : -1);
    }
    return d;
}

Diagram cable(const Diagram& d, int n) {
    std::vector<std::vector<int>> cof;
    const PlanarGraph cg = cable_graph(to_graph(d), n, &cof);
    std::vector<int> hints;
    for (int c = 0; c < d.size(); ++c)
        for (int pos : {0, over_entry(d.signs[u(c)])})
            for (int p : cof[u(4 * c + pos)]) hints.push_back(p);
    return from_graph(cg, hints);
}

Diagram mirror(const Diagram& d) {
    Diagram m = d;
    for (int c = 0; c < d.size(); ++c) {
        const auto& x = d.crossings[u(c)];
        m.crossings[u(c)] = d.signs[u(c)] > 0 ? std::array<int, 4>{x[3], x[0], x[1], x[2]} : std::array<int, 4>{x[1], x[2], x[3], x[0]};
        m.signs[u(c)] = -d.signs[u(c)];
    }
    return m;
}

Diagram connected_sum(const Diagram& a, const Diagram& b) {
    if (a.size() == 0 || b.size() == 0) {
        const Diagram& big = a.size() == 0 ? b : a;
        const Diagram& small = a.size() == 0 ? a : b;
        Diagram r = big;
        r.unknots += std::max(0, small.unknots - 1);
        r.components += std::max(0, small.unknots - 1);
        return r;
    }
    int shift = 0;
    for (const auto& x : a.crossings) shift = std::max(shift, *std::max_element(x.begin(), x.end()));
    Diagram r = a;
    for (std::size_t c = 0; c < b.crossings.size(); ++c) {
        auto x = b.crossings[c];
        for (int& l : x) l += shift;
        r.crossings.push_back(x);
        r.signs.push_back(b.signs[c]);
    }
    // swap the heads of the first edge of each summand
    auto head = [&](int label, int from, int to) {
        for (int c = from; c < to; ++c)
            for (int pos : {0, over_entry(r.signs[u(c)])})
                if (r.crossings[u(c)][u(pos)] == label) return std::pair<int, int>{c, pos};
        throw Error("diagram.TopologyError", "edge without head");
    };
    int e1 = a.crossings[0][0], e2 = b.crossings[0][0] + shift;
    for (const auto& x : a.crossings) e1 = std::min(e1, *std::min_element(x.begin(), x.end()));
    for (const auto& x : b.crossings) e2 = std::min(e2, *std::min_element(x.begin(), x.end()) + shift);
    const auto h1 = head(e1, 0, a.size());
    const auto h2 = head(e2, a.size(), r.size());
    r.crossings[u(h1.first)][u(h1.second)] = e2;
    r.crossings[u(h2.first)][u(h2.second)] = e1;
    r.unknots = a.unknots + b.unknots;
    r.components = a.components + b.components - 1;
    return r;
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw Error("diagram.InvalidArgument", "braid needs a strand");
    PlanarGraph g;
    std::vector<int> bottom(u(strands), -1), top(u(strands), -1), hints;
    auto attach = [&](int col, int lower, int upper) {
        if (top[u(col)] < 0)
            bottom[u(col)] = lower;
        else
            g.link(top[u(col)], lower);
        top[u(col)] = upper;
    };
    for (int letter : word) {
        const int i = std::abs(letter);
        if (letter == 0 || i >= strands) throw Error("diagram.InvalidArgument", "braid letter out of range");
        const auto c = add_corner_crossing(g, letter > 0);
        attach(i - 1, c[0], c[3]);
        attach(i, c[1], c[2]);
        hints.push_back(c[0]);
        hints.push_back(c[1]);
    }
    for (int col = 0; col < strands; ++col) {
        if (top[u(col)] < 0)
            ++g.free_loops;
        else
            g.link(top[u(col)], bottom[u(col)]);
    }
    return from_graph(g, hints);
}

std::vector<std::vector<int>> component_labels(const Diagram& d) {
    const PlanarGraph g = to_graph(d);
    std::vector<char> seen(u(g.num_points()), 0);
    std::vector<std::vector<int>> out;
    for (int c = 0; c < d.size(); ++c)
        for (int pos : {0, over_entry(d.signs[u(c)])}) {
            const int p = 4 * c + pos;
            if (seen[u(p)]) continue;
            std::vector<int> labels;
            for (int e : walk(g, p)) {
                seen[u(e)] = 1;
                labels.push_back(d.crossings[u(e / 4)][u((e + 2) % 4)]);
            }
            out.push_back(std::move(labels));
        }
    return out;
}

}  // namespace skein
