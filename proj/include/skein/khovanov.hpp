#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct KhGenerator {
    std::uint32_t state = 0;
    std::uint32_t labels = 0;  // bit l set: loop l carries v+
    int j = 0;
};

// Delooped cube. Column r holds the states with r one-smoothings and sits in
// homological degree r + shift; d[r] maps column r to column r + 1 as
// (row, col, value) triples.
struct CubeComplex {
    int shift = 0;
    std::vector<std::vector<KhGenerator>> generators;
    std::vector<std::vector<std::tuple<int, int, int>>> d;
};

struct KhGroup {
    int rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
    bool operator==(const KhGroup&) const = default;
};

struct BigradedGroups {
    std::map<std::pair<int, int>, KhGroup> entries;  // (i, j)

    bool operator==(const BigradedGroups&) const = default;
    BigradedGroups shifted(int di, int dj) const;
    int total_rank() const;
    std::string str() const;
};

CubeComplex ckh(const Diagram& d, int crossing_cap = 16);
// every d[r+1] d[r] vanishes
bool is_complex(const CubeComplex& c);
// rank and invariant factors > 1 of an integer matrix given as triples
std::pair<int, std::vector<Int>> smith_form(int rows, int cols, const std::vector<std::tuple<int, int, int>>& entries);
BigradedGroups homology(const CubeComplex& c);

// sum of (-1)^i q^j rank with q = -A^-2
LaurentPoly euler_characteristic(const BigradedGroups& g);
LaurentPoly euler_characteristic(const CubeComplex& c);

// (sigma_1 ... sigma_{n-1})^length
std::vector<int> torus_braid_word(int n, int length);
Diagram torus_braid_approximant(int n, int length);

struct ColoredKh {
    Diagram diagram;
    BigradedGroups groups;
    LaurentPoly euler;
    // euler / colored_jones(n, unreduced) is +-A^m
    bool monomial_multiple = false;
    int monomial_shift = 0;
    // highest-order coefficients on which both agree after normalization
    int agreeing = 0;
};
// n-cable of twist_fill(t, k); with length > 0 each component's cable also
// carries a positive torus braid of that length
ColoredKh colored_kh_approx(const TwistTemplate& t, int n, const std::vector<int>& k, int length = 0, int crossing_cap = 16);

// groups moved so the lowest nonzero homological degree is 0 and its lowest
// quantum degree is 0
BigradedGroups align(const BigradedGroups& g);
constexpr int kStable = INT_MAX;
// smallest aligned degree where consecutive members differ, kStable if none
std::vector<int> stable_range(const std::vector<BigradedGroups>& seq);

}  // namespace skein
