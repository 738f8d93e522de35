#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "segarr/families.hpp"

namespace segarr {

// Conflict graph on intersection points: two points are adjacent when they
// lie on a common segment (or line). Each carrier's point set is a clique.
struct ConflictGraph {
    std::vector<Point> points;              // canonical order
    std::vector<std::vector<int>> adj;      // sorted, no duplicates
    std::vector<std::vector<int>> carrier;  // per segment/line: point ids
    long long w = 0;                        // max points on one carrier
};

ConflictGraph conflict_graph(const SegmentSet& M);
ConflictGraph conflict_graph(const std::vector<Line>& lines);

struct EflColoring {
    std::map<Point, int> assignment;

    int colors_used() const {
        std::set<int> k;
        for (const auto& kv : assignment) k.insert(kv.second);
        return static_cast<int>(k.size());
    }
};

// True iff no carrier holds two points of equal color. Throws when a point of
// P(M) is missing from the assignment.
bool validate_coloring(const SegmentSet& M, const EflColoring& f);
bool validate_coloring(const std::vector<Line>& lines, const EflColoring& f);

long long w_of(const SegmentSet& M);

// Colors a segmentment tree with exactly w(M) colors (0 when p = 0).
EflColoring color_tree(const SegmentSet& M);

struct CactusColoring {
    EflColoring coloring;
    bool fallback_used = false;  // structural decomposition failed; exact solver used
};

// At most m-1 colors for any segment cactus other than the 3-segment,
// 3-point triangle set, which takes exactly 3.
CactusColoring color_cactus(const SegmentSet& M);

// w colors for a K3-free line family; rejects line sets containing a triangle.
EflColoring color_lines_k3free(const std::vector<Line>& lines);

// (i + j) mod m rule; requires every intersection point to be simple.
EflColoring color_pairwise(const SegmentSet& M);

struct ChiBudgetExceeded : std::runtime_error {
    long long lower;
    long long upper;
    ChiBudgetExceeded(long long lo, long long hi)
        : std::runtime_error("chi_E point budget exceeded; known bracket [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]"),
          lower(lo),
          upper(hi) {}
};

struct ExactColoring {
    EflColoring coloring;
    int chi = 0;
};

inline constexpr int kDefaultPointBudget = 60;

// Exact chi_E by branch and bound with saturation-degree ordering;
// deterministic. Throws ChiBudgetExceeded when p exceeds the budget.
ExactColoring chi_e_exact(const SegmentSet& M, int point_budget = kDefaultPointBudget);
ExactColoring chi_e_exact_conflicts(const ConflictGraph& cg, int point_budget);

EflColoring greedy_coloring(const ConflictGraph& cg);

struct ConjectureCheck {
    bool holds = false;
    EflColoring witness;
    std::string method;
};

// Tries the constructive colorers, then the exact solver within budget, then
// a greedy fallback; holds iff a valid coloring with at most m colors exists.
ConjectureCheck check_efl_conjecture(const SegmentSet& M,
                                     int point_budget = kDefaultPointBudget);

// The coloring integer program in a solver-readable LP format; byte-stable
// for a fixed input. Requires p >= 1.
std::string emit_ilp(const SegmentSet& M);

// Segment/line conversions used by the coloring equivalence.
std::vector<Line> segments_to_lines(const SegmentSet& M);
SegmentSet lines_to_segments(const std::vector<Line>& lines);

}  // namespace segarr
