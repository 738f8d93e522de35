#pragma once

#include <optional>
#include <string>

#include "segarr/arrangement.hpp"

namespace segarr {

struct FamilyReport {
    bool is_tree = false;
    bool is_forest = false;
    bool is_unicyclic = false;
    bool is_cactus = false;
    bool is_halin = false;
    bool is_k3_free = false;
    bool is_maximal_planar = false;
    bool is_maximal_outerplanar = false;
    std::optional<std::string> evidence;
};

FamilyReport classify(const ArrangementGraph& g);
FamilyReport classify(const SegmentSet& M);

// Tight-bound constructions. Every generator validates its own output
// (expected m/p/c and family flag) and throws InternalInvariantError if the
// geometry degenerates, so callers can rely on the documented counts.

// Wheel realization with p = (m+2)/2; m even, m >= 6.
SegmentSet gen_halin_wheel(int m);
// Wheel with one straight rim vertex, p = (m+3)/2; m odd, m >= 7.
SegmentSet gen_halin_wheel_odd(int m);
// Two concentric polygons with a re-routed gap, c = (m+3)/3; m ≡ 0 (mod 3).
// Accepted from m >= 18: the recipe is stated for m = 21 and up, and the
// m = 18 instance is kept only because the construction validates there.
SegmentSet gen_halin_c_tight(int m);
// Horizontal base crossed by m-1 zigzag segments: p = 2m-3, c = m-2; m odd.
SegmentSet gen_cactus_tight(int m);
// Staircase of mutually crossing segments: p = C(m,2)-(m-2), c = C(m-2,2).
SegmentSet gen_k3free_tight(int m);
// Triangulated triangle with three external fan points:
// m = 6x+9, p = (x+3)(x+2)/2 + 3, c = (x+1)^2 + 3(x+2).
SegmentSet gen_max_planar(int x);
// Three segments with three intersection points.
SegmentSet gen_triangle_A();

}  // namespace segarr
