#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skein/planar.hpp"
#include "skein/quantum.hpp"
#include "skein/rational.hpp"

namespace skein {

// Non-crossing matching of the 2n boundary points of an (n,n) box, read
// counterclockwise from the bottom left: bottom 0..n-1, then top n-1..0.
// Bit k of the word is set when position k opens a pair.
struct Matching {
    std::uint64_t word = 0;
    int n = 0;

    static Matching identity(int n);
    static Matching cup_cap(int n, int i);  // e_i, 1 <= i < n
    static Matching from_partners(const std::vector<int>& partner);

    std::vector<int> partners() const;
    // local pairs (i, j), i < j, in box point order
    std::vector<std::pair<int, int>> pairs() const;
    std::string str() const;  // balanced parenthesis word
    bool planar() const;
    // through-strand count
    int rank() const;

    auto operator<=>(const Matching&) const = default;
};

// x stacked on top of y; loops counts the circles closed in the middle
Matching compose(const Matching& x, const Matching& y, int& loops);
Matching tensor(const Matching& x, const Matching& y);
// top joined to top, bottom to bottom
int join_loops(const Matching& x, const Matching& y);
std::vector<Matching> all_matchings(int n);

class TLElement {
public:
    TLElement() = default;
    explicit TLElement(int n) : n_(n) {}
    TLElement(const Matching& m, RationalFunc c);

    static TLElement identity(int n) { return {Matching::identity(n), RationalFunc(1)}; }
    static TLElement generator(int n, int i) { return {Matching::cup_cap(n, i), RationalFunc(1)}; }

    int strands() const { return n_; }
    const std::map<Matching, RationalFunc>& terms() const { return t_; }
    RationalFunc coeff(const Matching& m) const;
    bool is_zero() const { return t_.empty(); }

    void add(const Matching& m, const RationalFunc& c);
    TLElement& operator+=(const TLElement& o);
    TLElement& operator-=(const TLElement& o);
    friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
    friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
    friend TLElement operator*(const TLElement& x, const TLElement& y);
    friend TLElement operator*(const RationalFunc& c, const TLElement& x);
    bool operator==(const TLElement& o) const { return n_ == o.n_ && t_ == o.t_; }

    // x (tensor) id_k on the right
    TLElement tensor_id(int k) const;
    // `coeff * matching-word` lines
    std::string debug_str() const;

private:
    int n_ = 0;
    std::map<Matching, RationalFunc> t_;
};

TLElement multiply(const TLElement& x, const TLElement& y);
RationalFunc join(const TLElement& x, const TLElement& y);
RationalFunc closure(const TLElement& x);

// p_n as (1/den) * sum num_m * m with Laurent numerators
struct ScaledTL {
    int n = 0;
    std::vector<std::pair<Matching, LaurentPoly>> terms;
    std::map<int, int> den;  // Phi_d exponents
    TLElement to_element() const;
};

// cached; safe to call concurrently
std::shared_ptr<const ScaledTL> jones_wenzl_scaled(int n);
TLElement jones_wenzl(int n);
bool absorb_check(int m, int n);

// host with box vertex v replaced by each matching of the box
std::vector<std::pair<RationalFunc, PlanarGraph>> insert_into_skein(const PlanarGraph& host, int v, const TLElement& box);

}  // namespace skein
