#include <algorithm>
#include <numeric>
#include <sstream>

#include "skein/error.hpp"
#include "skein/tl.hpp"

namespace skein {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

void require_same(int a, int b) {
    if (a != b) throw Error("tl.StrandMismatch", "strand counts " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

int find(std::vector<int>& p, int x) {
    while (p[u(x)] != x) x = p[u(x)] = p[u(p[u(x)])];
    return x;
}

void enumerate(int n, int open, int closed, std::uint64_t word, int pos, std::vector<Matching>& out) {
    if (pos == 2 * n) {
        out.push_back({word, n});
        return;
    }
    if (open < n) enumerate(n, open + 1, closed, word | (std::uint64_t{1} << pos), pos + 1, out);
    if (closed < open) enumerate(n, open, closed + 1, word, pos + 1, out);
}

}  // namespace

Matching Matching::identity(int n) {
    if (n < 0 || n > 32) throw Error("tl.InvalidArgument", "strand count out of range");
    return {n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)), n};
}

Matching Matching::cup_cap(int n, int i) {
    if (i < 1 || i >= n) throw Error("tl.InvalidArgument", "generator index out of range");
    std::vector<int> p(u(2 * n));
    for (int s = 0; s < n; ++s) {
        p[u(s)] = 2 * n - 1 - s;
        p[u(2 * n - 1 - s)] = s;
    }
    const int a = i - 1, b = i;
    p[u(a)] = b;
    p[u(b)] = a;
    p[u(2 * n - 1 - a)] = 2 * n - 1 - b;
    p[u(2 * n - 1 - b)] = 2 * n - 1 - a;
    return from_partners(p);
}

Matching Matching::from_partners(const std::vector<int>& partner) {
    Matching m;
    m.n = static_cast<int>(partner.size()) / 2;
    for (std::size_t k = 0; k < partner.size(); ++k)
        if (partner[k] > static_cast<int>(k)) m.word |= std::uint64_t{1} << k;
    if (m.partners() != partner) throw Error("tl.NonPlanar", "pairing is not a planar matching");
    return m;
}

std::vector<int> Matching::partners() const {
    std::vector<int> p(u(2 * n), -1);
    std::vector<int> stack;
    for (int k = 0; k < 2 * n; ++k) {
        if ((word >> k) & 1) {
            stack.push_back(k);
        } else {
            if (stack.empty()) throw Error("tl.NonPlanar", "unbalanced matching word");
            p[u(k)] = stack.back();
            p[u(stack.back())] = k;
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw Error("tl.NonPlanar", "unbalanced matching word");
    return p;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    const auto p = partners();
    for (int k = 0; k < 2 * n; ++k)
        if (p[u(k)] > k) out.emplace_back(k, p[u(k)]);
    return out;
}

std::string Matching::str() const {
    std::string s;
    for (int k = 0; k < 2 * n; ++k) s += ((word >> k) & 1) ? '(' : ')';
    return s;
}

bool Matching::planar() const {
    int depth = 0;
    for (int k = 0; k < 2 * n; ++k) {
        depth += ((word >> k) & 1) ? 1 : -1;
        if (depth < 0) return false;
    }
    return depth == 0 && (2 * n == 64 || (word >> (2 * n)) == 0);
}

int Matching::rank() const {
    int r = 0;
    const auto p = partners();
    for (int k = 0; k < n; ++k)
        if (p[u(k)] >= n) ++r;
    return r;
}

Matching compose(const Matching& x, const Matching& y, int& loops) {
    require_same(x.n, y.n);
    const int n = x.n;
    const auto px = x.partners(), py = y.partners();
    std::vector<char> mid(u(n), 0);
    auto trace = [&](bool in_x, int pos) {
        for (;;) {
            if (in_x) {
                const int q = px[u(pos)];
                if (q >= n) return q;
                mid[u(q)] = 1;
                in_x = false;
                pos = 2 * n - 1 - q;
            } else {
                const int q = py[u(pos)];
                if (q < n) return q;
                const int j = 2 * n - 1 - q;
                mid[u(j)] = 1;
                in_x = true;
                pos = j;
            }
        }
    };
    std::vector<int> r(u(2 * n));
    for (int i = 0; i < n; ++i) r[u(i)] = trace(false, i);
    for (int t = n; t < 2 * n; ++t) r[u(t)] = trace(true, t);
    loops = 0;
    for (int j = 0; j < n; ++j) {
        if (mid[u(j)]) continue;
        ++loops;
        int cur = j;
        bool use_x = true;
        do {
            mid[u(cur)] = 1;
            cur = use_x ? px[u(cur)] : 2 * n - 1 - py[u(2 * n - 1 - cur)];
            use_x = !use_x;
        } while (!(cur == j && use_x));
    }
    return Matching::from_partners(r);
}

Matching tensor(const Matching& x, const Matching& y) {
    const int m = x.n, k = y.n, n = m + k;
    std::vector<int> r(u(2 * n));
    // position maps of the factors into the product box
    auto mx = [&](int p) { return p < m ? p : 2 * n - 1 - (2 * m - 1 - p); };
    auto my = [&](int p) { return p < k ? m + p : 2 * n - 1 - (m + (2 * k - 1 - p)); };
    const auto px = x.partners(), py = y.partners();
    for (int p = 0; p < 2 * m; ++p) r[u(mx(p))] = mx(px[u(p)]);
    for (int p = 0; p < 2 * k; ++p) r[u(my(p))] = my(py[u(p)]);
    return Matching::from_partners(r);
}

int join_loops(const Matching& x, const Matching& y) {
    require_same(x.n, y.n);
    const int n2 = 2 * x.n;
    std::vector<int> parent(u(2 * n2));
    std::iota(parent.begin(), parent.end(), 0);
    int classes = 2 * n2;
    auto unite = [&](int a, int b) {
        a = find(parent, a);
        b = find(parent, b);
        if (a != b) {
            parent[u(a)] = b;
            --classes;
        }
    };
    const auto px = x.partners(), py = y.partners();
    for (int p = 0; p < n2; ++p) {
        unite(p, px[u(p)]);
        unite(n2 + p, n2 + py[u(p)]);
        unite(p, n2 + p);
    }
    return classes;
}

std::vector<Matching> all_matchings(int n) {
    std::vector<Matching> out;
    enumerate(n, 0, 0, 0, 0, out);
    return out;
}

TLElement::TLElement(const Matching& m, RationalFunc c) : n_(m.n) {
    if (!c.is_zero()) t_.emplace(m, std::move(c));
}

RationalFunc TLElement::coeff(const Matching& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? RationalFunc() : it->second;
}

void TLElement::add(const Matching& m, const RationalFunc& c) {
    require_same(n_, m.n);
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TLElement& TLElement::operator+=(const TLElement& o) {
    require_same(n_, o.n_);
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
    require_same(n_, o.n_);
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

TLElement operator*(const TLElement& x, const TLElement& y) {
    require_same(x.n_, y.n_);
    std::map<Matching, std::vector<RationalFunc>> acc;
    const RationalFunc delta(loop_value());
    for (const auto& [mx, cx] : x.t_)
        for (const auto& [my, cy] : y.t_) {
            int loops = 0;
            const Matching m = compose(mx, my, loops);
            acc[m].push_back(cx * cy * delta.pow(loops));
        }
    TLElement r(x.n_);
    for (auto& [m, cs] : acc) {
        RationalFunc s;
        for (const auto& c : cs) s += c;
        if (!s.is_zero()) r.t_.emplace(m, std::move(s));
    }
    return r;
}

TLElement operator*(const RationalFunc& c, const TLElement& x) {
    TLElement r(x.n_);
    if (c.is_zero()) return r;
    for (const auto& [m, cx] : x.t_) r.t_.emplace(m, c * cx);
    return r;
}

TLElement TLElement::tensor_id(int k) const {
    TLElement r(n_ + k);
    const Matching id = Matching::identity(k);
    for (const auto& [m, c] : t_) r.t_.emplace(tensor(m, id), c);
    return r;
}

std::string TLElement::debug_str() const {
    std::ostringstream os;
    for (const auto& [m, c] : t_) os << c.str() << " * " << m.str() << "\n";
    return os.str();
}

TLElement multiply(const TLElement& x, const TLElement& y) { return x * y; }

RationalFunc join(const TLElement& x, const TLElement& y) {
    require_same(x.strands(), y.strands());
    const LaurentPoly delta = loop_value();
    RationalFunc s;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) s += cx * cy * RationalFunc(delta.pow(static_cast<unsigned>(join_loops(mx, my))));
    return s;
}

RationalFunc closure(const TLElement& x) { return join(x, TLElement::identity(x.strands())); }

std::vector<std::pair<RationalFunc, PlanarGraph>> insert_into_skein(const PlanarGraph& host, int v, const TLElement& box) {
    if (host.arity(v) != 2 * box.strands())
        throw Error("tl.ArityMismatch", "box has " + std::to_string(host.arity(v)) + " points but the element has " + std::to_string(box.strands()) + " strands");
    std::vector<std::pair<RationalFunc, PlanarGraph>> out;
    for (const auto& [m, c] : box.terms()) out.emplace_back(c, replace_vertex(host, v, m.pairs()));
    return out;
}

}  // namespace skein
