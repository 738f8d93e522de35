#include "segarr/geometry.hpp"

#include <algorithm>
#include <map>

namespace segarr {

Rational parse_rational(const std::string& text) {
    std::string t = text;
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    auto dot = t.find('.');
    if (slash != std::string::npos) {
        Rational q;
        if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return q;
    }
    if (dot != std::string::npos) {
        std::string whole = t.substr(0, dot);
        std::string frac = t.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
        if (whole.empty()) whole = "0";
        for (char c : whole + frac)
            if (!isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad decimal literal: " + text);
        BigInt num(whole + frac);
        BigInt den(1);
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad integer literal: " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string point_to_string(const Point& p) {
    return "(" + rational_to_string(p.x) + ", " + rational_to_string(p.y) + ")";
}

Segment::Segment(Point p, Point q) {
    if (p == q) throw std::invalid_argument("zero-length segment at " + point_to_string(p));
    if (q < p) std::swap(p, q);
    a = std::move(p);
    b = std::move(q);
}

Line::Line(Rational a, Rational b, Rational c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
    if (A == 0 && B == 0) throw std::invalid_argument("degenerate line: A = B = 0");
    if (A != 0) {
        C /= A;
        B /= A;
        A = 1;
    } else {
        C /= B;
        B = 1;
    }
}

int orientation(const Point& p, const Point& q, const Point& r) {
    Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (orientation(s.a, s.b, p) != 0) return false;
    return cmp(std::min(s.a.x, s.b.x), p.x) <= 0 && cmp(p.x, std::max(s.a.x, s.b.x)) <= 0 &&
           cmp(std::min(s.a.y, s.b.y), p.y) <= 0 && cmp(p.y, std::max(s.a.y, s.b.y)) <= 0;
}

namespace {

// Parameter of a point along an axis direction chosen to be monotone on the
// segment's supporting line.
Rational axis_param(const Point& p, bool use_x) { return use_x ? p.x : p.y; }

}  // namespace

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    const Point &a = s1.a, &b = s1.b, &c = s2.a, &d = s2.b;
    Rational d1x = b.x - a.x, d1y = b.y - a.y;
    Rational d2x = d.x - c.x, d2y = d.y - c.y;
    Rational denom = d1x * d2y - d1y * d2x;

    if (denom == 0) {
        // Parallel. Check collinearity, then 1-D interval overlap.
        if (orientation(a, b, c) != 0) return Empty{};
        bool use_x = (d1x != 0);
        Rational lo1 = axis_param(s1.a, use_x), hi1 = axis_param(s1.b, use_x);
        if (hi1 < lo1) std::swap(lo1, hi1);
        Rational lo2 = axis_param(s2.a, use_x), hi2 = axis_param(s2.b, use_x);
        if (hi2 < lo2) std::swap(lo2, hi2);
        Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        int c0 = cmp(lo, hi);
        if (c0 > 0) return Empty{};
        auto at = [&](const Rational& t) -> Point {
            // Recover the point on s1's line with the given axis parameter.
            if (use_x) {
                Rational y = a.y + d1y * (t - a.x) / d1x;
                return Point(t, y);
            }
            Rational x = a.x + d1x * (t - a.y) / d1y;
            return Point(x, t);
        };
        if (c0 == 0) return SinglePoint{at(lo)};
        return Overlap{Segment(at(lo), at(hi))};
    }

    Rational ex = c.x - a.x, ey = c.y - a.y;
    Rational t = (ex * d2y - ey * d2x) / denom;
    Rational u = (ex * d1y - ey * d1x) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return Empty{};
    return SinglePoint{Point(a.x + t * d1x, a.y + t * d1y)};
}

std::optional<Point> single_intersection_point(const Segment& s1, const Segment& s2) {
    auto r = segment_intersection(s1, s2);
    if (auto* sp = std::get_if<SinglePoint>(&r)) return sp->p;
    return std::nullopt;
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
    return !std::holds_alternative<Empty>(segment_intersection(s1, s2));
}

Line line_through(const Point& p, const Point& q) {
    Rational A = q.y - p.y;
    Rational B = p.x - q.x;
    Rational C = A * p.x + B * p.y;
    return Line(A, B, C);
}

Line line_through(const Segment& s) { return line_through(s.a, s.b); }

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
    Rational det = l1.A * l2.B - l2.A * l1.B;
    if (det == 0) return std::nullopt;
    Rational x = (l1.C * l2.B - l2.C * l1.B) / det;
    Rational y = (l1.A * l2.C - l2.A * l1.C) / det;
    return Point(x, y);
}

bool point_on_line(const Point& p, const Line& l) { return l.A * p.x + l.B * p.y == l.C; }

std::vector<Segment> merge_collinear(std::vector<Segment> segments) {
    std::map<Line, std::vector<Segment>> by_line;
    for (auto& s : segments) by_line[line_through(s)].push_back(s);

    std::vector<Segment> out;
    for (auto& [line, group] : by_line) {
        bool use_x = (line.B != 0);  // vertical lines (B == 0) parametrize by y
        struct Interval {
            Rational lo, hi;
            Point plo, phi;
        };
        std::vector<Interval> iv;
        for (auto& s : group) {
            Rational ta = axis_param(s.a, use_x), tb = axis_param(s.b, use_x);
            if (tb < ta)
                iv.push_back({tb, ta, s.b, s.a});
            else
                iv.push_back({ta, tb, s.a, s.b});
        }
        std::sort(iv.begin(), iv.end(),
                  [](const Interval& u, const Interval& v) { return u.lo < v.lo; });
        size_t i = 0;
        while (i < iv.size()) {
            Interval cur = iv[i];
            size_t j = i + 1;
            while (j < iv.size() && iv[j].lo <= cur.hi) {
                if (iv[j].hi > cur.hi) {
                    cur.hi = iv[j].hi;
                    cur.phi = iv[j].phi;
                }
                ++j;
            }
            out.emplace_back(cur.plo, cur.phi);
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Segment> clip_lines(const std::vector<Line>& lines) {
    std::vector<Point> pts;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (auto p = line_intersection(lines[i], lines[j])) pts.push_back(*p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {};

    std::vector<Segment> out;
    for (const auto& l : lines) {
        std::vector<Point> on;
        for (const auto& p : pts)
            if (point_on_line(p, l)) on.push_back(p);
        if (on.size() < 2) continue;  // no points, or point-degenerate portion
        auto [mn, mx] = std::minmax_element(on.begin(), on.end());
        out.emplace_back(*mn, *mx);
    }
    return out;
}

}  // namespace segarr
