#include <algorithm>
#include <map>
#include <mutex>

#include "skein/error.hpp"
#include "skein/spin.hpp"

namespace skein {

namespace {

void require_admissible(int a, int b, int c) {
    if (!admissible(a, b, c))
        throw Error("spin.Inadmissible", "colors (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") are not admissible");
}

template <class Key>
class Cache {
public:
    template <class F>
    RationalFunc get(const Key& k, F&& compute) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(k);
            if (it != map_.end()) return it->second;
        }
        RationalFunc v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, RationalFunc> map_;
};

CycloMonomial fact(int m) { return CycloMonomial::qfactorial(m); }

}  // namespace

bool admissible(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return false;
    return (a + b + c) % 2 == 0 && std::abs(a - b) <= c && c <= a + b;
}

RationalFunc theta(int a, int b, int c) {
    require_admissible(a, b, c);
    static Cache<std::array<int, 3>> cache;
    return cache.get({a, b, c}, [&] { return ktg_bracket(theta_graph(a, b, c)); });
}

RationalFunc sixj(int a, int b, int c, int d, int e, int f) {
    require_admissible(b, c, a);
    require_admissible(c, e, f);
    require_admissible(a, e, d);
    require_admissible(b, d, f);
    static Cache<std::array<int, 6>> cache;
    return cache.get({a, b, c, d, e, f}, [&] { return ktg_bracket(tetrahedron_graph(a, b, c, d, e, f)); });
}

CycloMonomial theta_closed_monomial(int a, int b, int c) {
    require_admissible(a, b, c);
    const int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
    CycloMonomial r = fact(m + n + p + 1) * fact(m) * fact(n) * fact(p) / (fact(m + n) * fact(n + p) * fact(m + p));
    if ((m + n + p) % 2 != 0) r *= CycloMonomial::monomial(-1, 0);
    return r;
}

std::vector<CycloMonomial> sixj_terms(int a, int b, int c, int d, int e, int f) {
    require_admissible(b, c, a);
    require_admissible(c, e, f);
    require_admissible(a, e, d);
    require_admissible(b, d, f);
    const std::array<int, 4> lo{(a + b + c) / 2, (c + e + f) / 2, (a + d + e) / 2, (b + d + f) / 2};
    const std::array<int, 3> hi{(a + f + b + e) / 2, (a + f + c + d) / 2, (b + e + c + d) / 2};
    CycloMonomial pre;
    for (int x : lo)
        for (int y : hi) pre *= fact(y - x);
    for (int x : {a, b, c, d, e, f}) pre /= fact(x);
    const int s0 = *std::max_element(lo.begin(), lo.end()), s1 = *std::min_element(hi.begin(), hi.end());
    std::vector<CycloMonomial> out;
    for (int s = s0; s <= s1; ++s) {
        CycloMonomial t = pre * fact(s + 1);
        for (int x : lo) t /= fact(s - x);
        for (int y : hi) t /= fact(y - s);
        if (s % 2 != 0) t *= CycloMonomial::monomial(-1, 0);
        out.push_back(std::move(t));
    }
    return out;
}

CycloFraction sum_terms(const std::vector<CycloMonomial>& terms) {
    CycloFraction r;
    for (const auto& t : terms)
        for (const auto& [d, e] : t.factors())
            if (e < 0) r.den[d] = std::max(r.den[d], -e);
    for (const auto& t : terms) {
        LaurentPoly p = LaurentPoly::monomial(t.sign(), t.shift());
        std::map<int, int> ex = r.den;
        for (const auto& [d, e] : t.factors()) ex[d] += e;
        for (const auto& [d, e] : ex)
            for (int i = 0; i < e; ++i) p *= cyclotomic(d);
        r.num += p;
    }
    r.reduce();
    return r;
}

RationalFunc theta_closed(int a, int b, int c) { return theta_closed_monomial(a, b, c).to_rational(); }

RationalFunc sixj_closed(int a, int b, int c, int d, int e, int f) { return sum_terms(sixj_terms(a, b, c, d, e, f)).to_rational(); }

int validate_closed_forms(int max_color) {
    int bad = 0;
    for (int a = 0; a <= max_color; ++a)
        for (int b = 0; b <= max_color; ++b)
            for (int c = 0; c <= max_color; ++c)
                if (admissible(a, b, c) && theta(a, b, c) != theta_closed(a, b, c)) ++bad;
    for (int a = 0; a <= max_color; ++a)
        for (int b = 0; b <= max_color; ++b)
            for (int c = 0; c <= max_color; ++c) {
                if (!admissible(b, c, a)) continue;
                for (int d = 0; d <= max_color; ++d)
                    for (int e = 0; e <= max_color; ++e) {
                        if (!admissible(a, e, d)) continue;
                        for (int f = 0; f <= max_color; ++f)
                            if (admissible(c, e, f) && admissible(b, d, f) && sixj(a, b, c, d, e, f) != sixj_closed(a, b, c, d, e, f)) ++bad;
                    }
            }
    return bad;
}

}  // namespace skein
