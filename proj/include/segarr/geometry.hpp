#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "segarr/rational.hpp"

namespace segarr {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Lexicographic order; used everywhere a canonical point order is needed.
    bool operator<(const Point& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

std::string point_to_string(const Point& p);

// Closed segment of nonzero length, endpoints stored in lexicographic order
// so each segment has a single representation.
struct Segment {
    Point a;
    Point b;

    Segment(Point p, Point q);

    bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
    bool operator<(const Segment& o) const {
        if (a < o.a) return true;
        if (o.a < a) return false;
        return b < o.b;
    }
};

// Line Ax + By = C with (A,B) != (0,0), normalized so the first nonzero
// coefficient of (A,B) equals 1.
struct Line {
    Rational A;
    Rational B;
    Rational C;

    Line(Rational a, Rational b, Rational c);

    bool operator==(const Line& o) const { return A == o.A && B == o.B && C == o.C; }
    bool operator<(const Line& o) const {
        int c = cmp(A, o.A);
        if (c != 0) return c < 0;
        c = cmp(B, o.B);
        if (c != 0) return c < 0;
        return cmp(C, o.C) < 0;
    }
};

// Sign of the cross product (q-p) x (r-p): +1 counterclockwise, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

bool point_on_segment(const Point& p, const Segment& s);

struct Empty {};
struct SinglePoint {
    Point p;
};
struct Overlap {
    Segment s;
};
using SegmentIntersection = std::variant<Empty, SinglePoint, Overlap>;

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

// Convenience: the intersection point if the segments meet in exactly one point.
std::optional<Point> single_intersection_point(const Segment& s1, const Segment& s2);

bool segments_intersect(const Segment& s1, const Segment& s2);

// Replaces every maximal connected group of collinear intersecting/overlapping
// segments by the single segment spanning their union. Output is sorted and
// duplicate-free; idempotent and independent of input order.
std::vector<Segment> merge_collinear(std::vector<Segment> segments);

Line line_through(const Segment& s);
Line line_through(const Point& p, const Point& q);

std::optional<Point> line_intersection(const Line& l1, const Line& l2);

bool point_on_line(const Point& p, const Line& l);

// For each line, the portion between its extreme pairwise line-intersection
// points (= line ∩ conv of the intersection points on it). Point-degenerate
// portions and lines carrying no intersection point are dropped. The result
// has exactly the same intersection-point set as the input lines.
std::vector<Segment> clip_lines(const std::vector<Line>& lines);

}  // namespace segarr
