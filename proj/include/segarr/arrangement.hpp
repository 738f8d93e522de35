#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "segarr/segment_set.hpp"

namespace segarr {

// Thrown when two independent computations of the same quantity disagree
// (e.g. Euler circuit count vs. face traversal). Indicates a bug, never a
// property of the input.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// P(M) together with the per-segment point lists P(s, M), sorted along each
// segment from its canonical first endpoint.
struct IntersectionData {
    std::vector<Point> points;
    std::vector<std::vector<Point>> per_segment;
};

IntersectionData intersection_points(const SegmentSet& M);

enum class VertexKind : uint8_t { Intersection, Endpoint, Both };

// G_M with its rotation system. Vertices carry exact coordinates; half-edges
// at each vertex are sorted counterclockwise by exact direction comparison.
class ArrangementGraph {
  public:
    struct HalfEdge {
        int to;
        int segment;  // owning segment id
    };

    explicit ArrangementGraph(const SegmentSet& M);

    const SegmentSet& segment_set() const { return set_; }
    const IntersectionData& intersections() const { return isect_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<VertexKind>& kinds() const { return kinds_; }
    const std::vector<std::vector<HalfEdge>>& rotation() const { return rot_; }
    long long edge_count() const { return edge_count_; }
    long long component_count() const { return components_; }
    int component_of(int v) const { return component_of_[v]; }
    int vertex_index(const Point& p) const;  // -1 when absent

  private:
    SegmentSet set_;
    IntersectionData isect_;
    std::vector<Point> vertices_;
    std::vector<VertexKind> kinds_;
    std::vector<std::vector<HalfEdge>> rot_;
    std::vector<int> component_of_;
    long long edge_count_ = 0;
    long long components_ = 0;
};

struct ArrangementStats {
    long long m = 0;
    long long p = 0;
    long long j = 0;
    long long n = 0;
    long long e = 0;
    long long c = 0;
    long long k = 0;   // connected components of G_M
    long long k1 = 0;  // trivial components of M
    long long k2 = 0;  // nontrivial components of M
    long long w = 0;   // max points on a single segment

    bool operator==(const ArrangementStats&) const = default;
};

// One bounded face of G_M: its enclosing simple vertex cycle and the ids of
// the segments contributing an edge (not merely a vertex) to that cycle.
struct Circuit {
    std::vector<int> cycle;         // vertex ids, closed implicitly
    std::vector<int> segment_ids;   // sorted, deduplicated
};

struct FaceDecomposition {
    std::vector<Circuit> circuits;            // one per bounded face
    std::vector<std::vector<int>> face_walks; // every face walk incl. unbounded
};

FaceDecomposition enumerate_faces(const ArrangementGraph& g);
std::vector<Circuit> enumerate_circuits(const SegmentSet& M);

// Counts the full statistics vector. The circuit count is computed both from the Euler
// relation and from face traversal; a mismatch throws InternalInvariantError.
ArrangementStats stats(const ArrangementGraph& g);
ArrangementStats stats(const SegmentSet& M);

// Fixpoint of single-segment trimming: clip every segment to its extreme
// intersection points, deleting segments with fewer than two of them.
SegmentSet trim(const SegmentSet& M);

// Abstract graph H: one vertex per segment, edges between intersecting pairs.
std::vector<std::vector<int>> segment_graph(const SegmentSet& M);

// Non-cut vertices of H. Requires M nontrivial and connected.
std::vector<int> removable_segments(const SegmentSet& M);

SegmentSet delete_segments(const SegmentSet& M, const std::set<int>& ids);

// Canonical form of a vertex cycle given as exact points (rotation/reflection
// normalized); lets tests compare circuit multisets across rebuilds.
std::vector<Point> canonical_cycle(std::vector<Point> cycle);

}  // namespace segarr
