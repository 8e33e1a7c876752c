#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

#include "skein/bracket.hpp"
#include "skein/error.hpp"

namespace skein {

namespace {

using Kind = PlanarGraph::Kind;
using State = std::u16string;  // partner index per frontier position
using StateMap = std::unordered_map<State, LaurentPoly>;

std::size_t u(int i) { return static_cast<std::size_t>(i); }

std::atomic<int> g_threads{1};

struct LocalState {
    std::vector<int> pair;  // local partner of each local point
    LaurentPoly coeff;
};

std::vector<LocalState> resolutions(const SkeinElement& s, int v) {
    const auto& vx = s.graph.vertices[u(v)];
    switch (vx.kind) {
    case Kind::Crossing:
        return {{{1, 0, 3, 2}, LaurentPoly::A(1)}, {{3, 2, 1, 0}, LaurentPoly::A(-1)}};
    case Kind::Arc:
        return {{{1, 0}, LaurentPoly(1)}};
    case Kind::Box: {
        if (vx.tag < 0 || vx.tag >= static_cast<int>(s.boxes.size()) || !s.boxes[u(vx.tag)])
            throw Error("bracket.InvalidSkein", "box without content");
        const auto& content = *s.boxes[u(vx.tag)];
        if (2 * content.n != vx.arity) throw Error("bracket.InvalidSkein", "box arity does not match its projector");
        std::vector<LocalState> out;
        for (const auto& [m, c] : content.terms) out.push_back({m.partners(), c});
        return out;
    }
    case Kind::Slot:
        break;
    }
    throw Error("bracket.InvalidSkein", "unfilled twist slot");
}

// one elimination step: vertex v joins the processed region
struct Step {
    int old_size = 0;
    int arity = 0;
    std::vector<int> wire;      // node -> node across a wire or self link, -1 if terminal
    std::vector<int> new_index; // terminal node -> position in the new frontier
    int new_size = 0;
};

class Sweep {
public:
    explicit Sweep(const SkeinElement& s) : s_(s), g_(s.graph) {}

    CycloFraction run() {
        const int nv = static_cast<int>(g_.vertices.size());
        std::vector<char> done(u(nv), 0);
        std::vector<int> pos(u(g_.num_points()), -1);  // frontier position of a point
        std::vector<int> frontier;
        StateMap states;
        states.emplace(State(), LaurentPoly(1));
        for (int step = 0; step < nv; ++step) {
            const int v = pick(done, pos);
            done[u(v)] = 1;
            states = advance(v, frontier, pos, done, states);
        }
        CycloFraction out;
        auto it = states.find(State());
        if (it != states.end()) out.num = it->second;
        out.num *= loop_value().pow(static_cast<unsigned>(g_.free_loops));
        for (const auto& vx : g_.vertices)
            if (vx.kind == Kind::Box)
                for (const auto& [d, e] : s_.boxes[u(vx.tag)]->den) out.den[d] += e;
        return out;
    }

private:
    // most points already on the frontier, then fewest new ones, then index
    int pick(const std::vector<char>& done, const std::vector<int>& pos) const {
        int best = -1, best_attached = -1, best_new = 0;
        for (int v = 0; v < static_cast<int>(g_.vertices.size()); ++v) {
            if (done[u(v)]) continue;
            int attached = 0, fresh = 0;
            for (int i = 0; i < g_.arity(v); ++i) {
                const int q = g_.partner[u(g_.point(v, i))];
                if (pos[u(q)] >= 0)
                    ++attached;
                else if (g_.vertex_of(q) != v)
                    ++fresh;
            }
            if (best < 0 || attached > best_attached || (attached == best_attached && fresh < best_new)) {
                best = v;
                best_attached = attached;
                best_new = fresh;
            }
        }
        return best;
    }

    StateMap advance(int v, std::vector<int>& frontier, std::vector<int>& pos, const std::vector<char>& done, const StateMap& states) {
        const int a = g_.arity(v);
        Step st;
        st.old_size = static_cast<int>(frontier.size());
        st.arity = a;
        const int nodes = st.old_size + a;
        st.wire.assign(u(nodes), -1);
        st.new_index.assign(u(nodes), -1);
        std::vector<int> next_frontier;
        for (int f = 0; f < st.old_size; ++f) {
            const int q = g_.partner[u(frontier[u(f)])];
            if (g_.vertex_of(q) == v) {
                st.wire[u(f)] = st.old_size + g_.local(q);
                st.wire[u(st.old_size + g_.local(q))] = f;
            } else {
                st.new_index[u(f)] = static_cast<int>(next_frontier.size());
                next_frontier.push_back(frontier[u(f)]);
            }
        }
        for (int i = 0; i < a; ++i) {
            const int p = g_.point(v, i);
            const int q = g_.partner[u(p)];
            const int w = g_.vertex_of(q);
            if (w == v) {
                st.wire[u(st.old_size + i)] = st.old_size + g_.local(q);
            } else if (!done[u(w)]) {
                st.new_index[u(st.old_size + i)] = static_cast<int>(next_frontier.size());
                next_frontier.push_back(p);
            }
        }
        st.new_size = static_cast<int>(next_frontier.size());
        for (int p : frontier) pos[u(p)] = -1;
        frontier = std::move(next_frontier);
        for (int f = 0; f < static_cast<int>(frontier.size()); ++f) pos[u(frontier[u(f)])] = f;

        const auto res = resolutions(s_, v);
        std::vector<const State*> keys;
        keys.reserve(states.size());
        for (const auto& kv : states) keys.push_back(&kv.first);

        const int threads = std::max(1, std::min<int>(g_threads.load(), static_cast<int>(keys.size() / 64)));
        if (threads <= 1) {
            StateMap out;
            apply(st, res, states, keys, 0, keys.size(), out);
            return out;
        }
        std::vector<StateMap> parts(u(threads));
        std::vector<std::thread> pool;
        const std::size_t chunk = (keys.size() + u(threads) - 1) / u(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = std::min(keys.size(), u(t) * chunk), hi = std::min(keys.size(), lo + chunk);
            pool.emplace_back([&, t, lo, hi] { apply(st, res, states, keys, lo, hi, parts[u(t)]); });
        }
        for (auto& th : pool) th.join();
        StateMap out = std::move(parts[0]);
        for (int t = 1; t < threads; ++t)
            for (auto& [k, c] : parts[u(t)]) {
                auto [it, fresh] = out.emplace(k, c);
                if (!fresh) it->second += c;
            }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    void apply(const Step& st, const std::vector<LocalState>& res, const StateMap& states, const std::vector<const State*>& keys,
               std::size_t lo, std::size_t hi, StateMap& out) const {
        const int nodes = st.old_size + st.arity;
        std::vector<int> seen(u(nodes), 0);
        int stamp = 0;
        State next(u(st.new_size), 0);
        std::vector<LaurentPoly> dpow{LaurentPoly(1)};
        const LaurentPoly delta = loop_value();
        for (std::size_t k = lo; k < hi; ++k) {
            const State& cur = *keys[k];
            const LaurentPoly& coeff = states.at(cur);
            for (const auto& r : res) {
                ++stamp;
                // slot 0: the state pairing or the resolution, slot 1: wires
                auto across = [&](int node, int slot) -> int {
                    if (slot == 1) return st.wire[u(node)];
                    if (node < st.old_size) return static_cast<int>(cur[u(node)]);
                    return st.old_size + r.pair[u(node - st.old_size)];
                };
                for (int t = 0; t < nodes; ++t) {
                    if (st.new_index[u(t)] < 0 || seen[u(t)] == stamp) continue;
                    int node = t, slot = 0;
                    seen[u(node)] = stamp;
                    for (;;) {
                        node = across(node, slot);
                        seen[u(node)] = stamp;
                        if (st.new_index[u(node)] >= 0) break;
                        slot = 1 - slot;
                    }
                    next[u(st.new_index[u(t)])] = static_cast<char16_t>(st.new_index[u(node)]);
                    next[u(st.new_index[u(node)])] = static_cast<char16_t>(st.new_index[u(t)]);
                }
                int loops = 0;
                for (int t = 0; t < nodes; ++t) {
                    if (seen[u(t)] == stamp) continue;
                    ++loops;
                    int node = t, slot = 0;
                    do {
                        seen[u(node)] = stamp;
                        node = across(node, slot);
                        slot = 1 - slot;
                    } while (!(node == t && slot == 0));
                }
                while (static_cast<int>(dpow.size()) <= loops) dpow.push_back(dpow.back() * delta);
                LaurentPoly& target = out[next];
                if (r.coeff.is_monomial() && loops == 0)
                    target.add_scaled(coeff, r.coeff.low_coeff(), r.coeff.min_exp());
                else
                    target.add_product(coeff, r.coeff * dpow[u(loops)]);
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }

    const SkeinElement& s_;
    const PlanarGraph& g_;
};

}  // namespace

int SkeinElement::add_projector(int m) {
    const int v = graph.add_vertex(Kind::Box, 2 * m, static_cast<int>(boxes.size()));
    boxes.push_back(jones_wenzl_scaled(m));
    return v;
}

int SkeinElement::crossings() const {
    return static_cast<int>(std::count_if(graph.vertices.begin(), graph.vertices.end(), [](const auto& v) { return v.kind == Kind::Crossing; }));
}

void set_bracket_threads(int threads) { g_threads.store(std::max(1, threads)); }
int bracket_threads() { return g_threads.load(); }

CycloFraction bracket_fraction(const SkeinElement& s) {
    if (!s.closed()) throw Error("bracket.OpenSkein", "skein element has free boundary points");
    return Sweep(s).run();
}

RationalFunc bracket(const SkeinElement& s) { return bracket_fraction(s).to_rational(); }

SkeinElement to_skein(const Diagram& d) { return {to_graph(d), {}}; }

LaurentPoly bracket(const Diagram& d) { return bracket_fraction(to_skein(d)).num; }

LaurentPoly naive_bracket(const Diagram& d) {
    if (d.size() > 24) throw Error("bracket.TooLarge", "naive state sum limited to 24 crossings");
    LaurentPoly sum;
    const LaurentPoly delta = loop_value();
    std::vector<LaurentPoly> dpow{LaurentPoly(1)};
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.size()); ++m) {
        const int loops = loop_count(d, m);
        while (static_cast<int>(dpow.size()) <= loops) dpow.push_back(dpow.back() * delta);
        sum.add_scaled(dpow[u(loops)], 1, d.size() - 2 * __builtin_popcountll(m));
    }
    return sum;
}

RationalFunc naive_bracket(const SkeinElement& s) {
    if (!s.closed()) throw Error("bracket.OpenSkein", "skein element has free boundary points");
    const PlanarGraph& g = s.graph;
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<LocalState>> options(u(nv));
    std::vector<int> choice(u(nv), 0);
    std::map<int, int> den;
    for (int v = 0; v < nv; ++v) {
        options[u(v)] = resolutions(s, v);
        if (g.vertices[u(v)].kind == Kind::Box)
            for (const auto& [d, e] : s.boxes[u(g.vertices[u(v)].tag)]->den) den[d] += e;
    }
    LaurentPoly sum;
    const LaurentPoly delta = loop_value();
    std::vector<std::vector<std::pair<int, int>>> res(u(nv));
    for (;;) {
        LaurentPoly c(1);
        for (int v = 0; v < nv; ++v) {
            const auto& r = options[u(v)][u(choice[u(v)])];
            c *= r.coeff;
            res[u(v)].clear();
            for (int i = 0; i < static_cast<int>(r.pair.size()); ++i)
                if (r.pair[u(i)] > i) res[u(v)].emplace_back(i, r.pair[u(i)]);
        }
        sum.add_product(c, delta.pow(static_cast<unsigned>(count_loops(g, res))));
        int v = 0;
        while (v < nv && ++choice[u(v)] == static_cast<int>(options[u(v)].size())) choice[u(v++)] = 0;
        if (v == nv) break;
    }
    return CycloFraction{sum, den}.to_rational();
}

}  // namespace skein
