#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/planar.hpp"

namespace skein {

// PD quadruples list edge labels counterclockwise starting from the incoming
// under strand; a crossing is positive when the over strand runs d -> b.
struct Diagram {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> signs;
    int components = 0;  // including crossingless ones
    int unknots = 0;     // crossingless components

    int size() const { return static_cast<int>(crossings.size()); }
    bool operator==(const Diagram&) const = default;
};

// bits[i] == '1' selects the B-smoothing at crossing i
using KauffmanState = std::string;

struct Resolution {
    int loops = 0;
    // per crossing, the two label pairs joined by the smoothing
    std::vector<std::array<std::pair<int, int>, 2>> smoothing;
};

Diagram parse_pd(std::string_view text);
std::string to_pd(const Diagram& d);
int writhe(const Diagram& d);
Resolution resolve(const Diagram& d, const KauffmanState& s);
// loop count for the state whose bit i is (mask >> i) & 1
int loop_count(const Diagram& d, std::uint64_t mask);

Diagram cable(const Diagram& d, int n);
Diagram mirror(const Diagram& d);
Diagram connected_sum(const Diagram& a, const Diagram& b);
// closure of a braid word; letter +i / -i is sigma_i^{+1} / sigma_i^{-1}
Diagram braid_closure(int strands, const std::vector<int>& word);

// edge labels of each crossed component in travel order
std::vector<std::vector<int>> component_labels(const Diagram& d);

PlanarGraph to_graph(const Diagram& d);
// Orients every component (entering hinted points where given), relabels
// edges along travel and keeps crossings in vertex order. Arcs are absorbed.
Diagram from_graph(const PlanarGraph& g, const std::vector<int>& enter_hints = {});

// Template with marked twist slots. Slot vertices carry points BL, BR, TR, TL.
struct TwistTemplate {
    PlanarGraph base;
    std::vector<int> slot_vertex;
    std::vector<int> slot_sign;
    int t() const { return static_cast<int>(slot_vertex.size()); }
};

// PD tokens X[...], P[a,b], T[bl,br,tr,tl], U plus optional lines
// `twist i: (e1,e2) sign`; a twist line naming two edges of a common face
// cuts them and inserts a slot, with e1 on its left.
TwistTemplate parse_template(std::string_view text);
Diagram twist_fill(const TwistTemplate& t, const std::vector<int>& k);
// base graph with each slot i replaced by k[i] half twists (no orientation)
PlanarGraph fill_graph(const TwistTemplate& t, const std::vector<int>& k, std::vector<int>* hints = nullptr);

}  // namespace skein
