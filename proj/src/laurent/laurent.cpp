#include "skein/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "skein/error.hpp"

namespace skein {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) t_.emplace_back(0, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
    if (c != 0) t_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(const Int& c, int e) {
    LaurentPoly p;
    if (c != 0) p.t_.emplace_back(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& [e, c] : terms) {
        if (!p.t_.empty() && p.t_.back().first == e)
            p.t_.back().second += c;
        else
            p.t_.emplace_back(e, std::move(c));
        if (p.t_.back().second == 0) p.t_.pop_back();
    }
    return p;
}

LaurentPoly LaurentPoly::from_dense(const std::vector<Int>& c, int shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p.t_.emplace_back(shift + static_cast<int>(i), c[i]);
    return p;
}

Int LaurentPoly::coeff(int e) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), e,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != t_.end() && it->first == e) return it->second;
    return 0;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<Int> LaurentPoly::dense() const {
    if (t_.empty()) return {};
    std::vector<Int> d(static_cast<std::size_t>(max_exp() - min_exp() + 1));
    for (const auto& [e, c] : t_) d[static_cast<std::size_t>(e - min_exp())] = c;
    return d;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.t_) t.first += k;
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    p.t_.reserve(t_.size());
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) p.t_.emplace_back(-it->first, it->second);
    return p;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.t_) t.second = -t.second;
    return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Int& c, int k) {
    if (o.t_.empty() || c == 0) return;
    if (&o == this) {
        const LaurentPoly copy = o;
        add_scaled(copy, c, k);
        return;
    }
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    auto a = t_.begin();
    auto b = o.t_.begin();
    while (a != t_.end() || b != o.t_.end()) {
        if (b == o.t_.end() || (a != t_.end() && a->first < b->first + k)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == t_.end() || b->first + k < a->first) {
            out.emplace_back(b->first + k, b->second * c);
            ++b;
        } else {
            mpz_addmul(a->second.get_mpz_t(), b->second.get_mpz_t(), c.get_mpz_t());
            if (a->second != 0) out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    t_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    static const Int one = 1;
    add_scaled(o, one, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    static const Int minus_one = -1;
    add_scaled(o, minus_one, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& t : t_) t.second *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.is_monomial()) {
        r = b.shifted(a.min_exp());
        return r *= a.low_coeff();
    }
    if (b.is_monomial()) {
        r = a.shifted(b.min_exp());
        return r *= b.low_coeff();
    }
    const long lo = static_cast<long>(a.min_exp()) + b.min_exp();
    const long span = static_cast<long>(a.max_exp()) + b.max_exp() - lo + 1;
    const long work = static_cast<long>(a.size()) * static_cast<long>(b.size());
    if (span <= 4 * work + 64) {
        std::vector<Int> acc(static_cast<std::size_t>(span));
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_)
                mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(),
                           cb.get_mpz_t());
        return LaurentPoly::from_dense(acc, static_cast<int>(lo));
    }
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(static_cast<std::size_t>(work));
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) terms.emplace_back(ea + eb, ca * cb);
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

void LaurentPoly::add_product(const LaurentPoly& x, const LaurentPoly& y) {
    if (x.is_monomial()) {
        add_scaled(y, x.low_coeff(), x.min_exp());
        return;
    }
    if (y.is_monomial()) {
        add_scaled(x, y.low_coeff(), y.min_exp());
        return;
    }
    *this += x * y;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

bool LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
    if (b.is_zero()) throw Error("laurent.DivisionByZero", "division by the zero polynomial");
    if (a.is_zero()) {
        q = LaurentPoly();
        return true;
    }
    if (b.is_monomial()) {
        LaurentPoly r;
        r.t_.reserve(a.t_.size());
        for (const auto& [e, c] : a.t_) {
            if (!mpz_divisible_p(c.get_mpz_t(), b.low_coeff().get_mpz_t())) return false;
            Int d;
            mpz_divexact(d.get_mpz_t(), c.get_mpz_t(), b.low_coeff().get_mpz_t());
            r.t_.emplace_back(e - b.min_exp(), std::move(d));
        }
        q = std::move(r);
        return true;
    }
    poly::Dense qa;
    if (!poly::divide_exact(a.dense(), b.dense(), qa)) return false;
    q = from_dense(qa, a.min_exp() - b.min_exp());
    return true;
}

LaurentPoly LaurentPoly::divided_by_content(const Int& c) const {
    LaurentPoly r = *this;
    for (auto& t : r.t_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return r;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += it->second.get_str();
        s += "*A^";
        s += std::to_string(it->first);
    }
    return s;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw Error("laurent.ParseError", why + " in '" + std::string(text) + "'");
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::vector<Term> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](bool allow_sign) -> std::string {
        std::string s;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) s += text[i++];
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) s += text[i++];
        return s;
    };
    skip();
    if (i == text.size()) parse_fail(text, "empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (!first) {
            if (i == text.size()) break;
            if (text[i] != '+') parse_fail(text, "expected '+'");
            ++i;
            skip();
        }
        first = false;
        Int c = 1;
        bool neg = false;
        if (i < text.size() && text[i] == '-' && i + 1 < text.size() && text[i + 1] == 'A') {
            neg = true;
            ++i;
        }
        bool have_coeff = false;
        if (i < text.size() && text[i] != 'A') {
            std::string s = read_int(true);
            if (s.empty() || s == "-" || s == "+") parse_fail(text, "bad coefficient");
            if (s[0] == '+') s.erase(0, 1);
            c = Int(s);
            have_coeff = true;
            skip();
        }
        int e = 0;
        if (i < text.size() && text[i] == '*') {
            if (!have_coeff) parse_fail(text, "dangling '*'");
            ++i;
            skip();
            if (i >= text.size() || text[i] != 'A') parse_fail(text, "expected 'A'");
        }
        if (i < text.size() && text[i] == 'A') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string s = read_int(true);
                if (s.empty() || s == "-" || s == "+") parse_fail(text, "bad exponent");
                try {
                    e = std::stoi(s);
                } catch (const std::exception&) {
                    parse_fail(text, "exponent out of range");
                }
            }
        } else if (!have_coeff) {
            parse_fail(text, "expected a term");
        }
        if (neg) c = -c;
        terms.emplace_back(e, c);
        skip();
    }
    return from_terms(std::move(terms));
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (const auto& t : t_) s += t.second;
    return s;
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = t_.size();
    for (const auto& [e, c] : t_) {
        h = h * 1000003u ^ std::hash<int>{}(e);
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_ui(c.get_mpz_t())) ^
            static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1);
    }
    return h;
}

}  // namespace skein
