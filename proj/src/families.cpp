#include "segarr/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

namespace segarr {

namespace {

std::vector<std::set<int>> neighbor_sets(const ArrangementGraph& g) {
    std::vector<std::set<int>> adj(g.vertices().size());
    for (size_t v = 0; v < g.rotation().size(); ++v)
        for (const auto& h : g.rotation()[v]) adj[v].insert(h.to);
    return adj;
}

// Biconnected components as edge lists, via DFS with an edge stack.
std::vector<std::vector<std::pair<int, int>>> blocks(const std::vector<std::set<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> out;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v : adj[u]) {
            if (v == parent) continue;
            if (disc[v] == -1) {
                estack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> comp;
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        comp.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    out.push_back(std::move(comp));
                }
            } else if (disc[v] < disc[u]) {
                estack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1 && !adj[v].empty()) dfs(v, -1);
    return out;
}

std::optional<std::array<int, 3>> find_triangle(const std::vector<std::set<int>>& adj) {
    for (size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) {
            if (v <= static_cast<int>(u)) continue;
            for (int w : adj[v]) {
                if (w <= v) continue;
                if (adj[u].count(w)) return std::array<int, 3>{static_cast<int>(u), v, w};
            }
        }
    return std::nullopt;
}

// The unique face walk of negative signed area per component; valid only for
// a connected graph that encloses area at all.
std::optional<std::vector<int>> outer_face_walk(const ArrangementGraph& g,
                                                const FaceDecomposition& faces) {
    std::optional<std::vector<int>> outer;
    for (const auto& walk : faces.face_walks) {
        Rational area = 0;
        for (size_t i = 0; i < walk.size(); ++i) {
            const Point& u = g.vertices()[walk[i]];
            const Point& v = g.vertices()[walk[(i + 1) % walk.size()]];
            area += u.x * v.y - u.y * v.x;
        }
        if (sgn(area) < 0) {
            if (outer) return std::nullopt;  // disconnected; caller excludes this
            outer = walk;
        }
    }
    return outer;
}

bool halin_check(const ArrangementGraph& g, const FaceDecomposition& faces) {
    size_t n = g.vertices().size();
    if (g.component_count() != 1 || n < 4) return false;

    auto outer = outer_face_walk(g, faces);
    if (!outer) return false;
    const auto& walk = *outer;
    if (walk.size() < 3) return false;
    std::set<int> cycle_vertices(walk.begin(), walk.end());
    if (cycle_vertices.size() != walk.size()) return false;  // not a simple cycle

    std::set<std::pair<int, int>> cycle_edges;
    for (size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i], b = walk[(i + 1) % walk.size()];
        cycle_edges.insert({std::min(a, b), std::max(a, b)});
    }

    // Degrees in T = G minus the outer cycle's edges.
    std::vector<int> tdeg(n, 0);
    long long tree_edges = 0;
    std::vector<std::vector<int>> tadj(n);
    for (size_t v = 0; v < n; ++v)
        for (const auto& h : g.rotation()[v]) {
            if (h.to < static_cast<int>(v)) continue;
            std::pair<int, int> key{std::min(static_cast<int>(v), h.to),
                                    std::max(static_cast<int>(v), h.to)};
            if (cycle_edges.count(key)) continue;
            ++tree_edges;
            ++tdeg[v];
            ++tdeg[h.to];
            tadj[v].push_back(h.to);
            tadj[h.to].push_back(static_cast<int>(v));
        }
    if (tree_edges != static_cast<long long>(n) - 1) return false;

    // Spanning and acyclic: n-1 edges and connected.
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t cnt = 0;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        ++cnt;
        for (int nb : tadj[cur])
            if (!seen[nb]) {
                seen[nb] = 1;
                stack.push_back(nb);
            }
    }
    if (cnt != n) return false;

    std::set<int> leaves;
    for (size_t v = 0; v < n; ++v) {
        if (tdeg[v] == 2) return false;  // the tree may not have degree-2 vertices
        if (tdeg[v] == 1) leaves.insert(static_cast<int>(v));
        if (tdeg[v] == 0) return false;
    }
    return leaves == cycle_vertices;
}

}  // namespace

FamilyReport classify(const ArrangementGraph& g) {
    FamilyReport r;
    const SegmentSet& M = g.segment_set();
    if (M.empty()) {
        r.is_forest = true;
        return r;
    }
    ArrangementStats st = stats(g);
    auto faces = enumerate_faces(g);
    auto adj = neighbor_sets(g);

    r.is_forest = (st.c == 0);
    r.is_tree = (st.c == 0 && st.k == 1);
    r.is_unicyclic = (st.c == 1 && st.k == 1);

    r.is_cactus = true;
    for (const auto& blk : blocks(adj)) {
        std::set<int> verts;
        for (auto [a, b] : blk) {
            verts.insert(a);
            verts.insert(b);
        }
        bool cycle_block = blk.size() == verts.size();
        bool bridge_block = blk.size() == 1;
        if (!cycle_block && !bridge_block) {
            r.is_cactus = false;
            r.evidence = "non-cycle biconnected block with " + std::to_string(verts.size()) +
                         " vertices and " + std::to_string(blk.size()) + " edges";
            break;
        }
    }

    auto tri = find_triangle(adj);
    r.is_k3_free = !tri.has_value();
    if (tri && !r.evidence)
        r.evidence = "K3 at " + point_to_string(g.vertices()[(*tri)[0]]) + ", " +
                     point_to_string(g.vertices()[(*tri)[1]]) + ", " +
                     point_to_string(g.vertices()[(*tri)[2]]);

    r.is_maximal_planar = (st.k == 1 && st.n >= 3 && st.e == 3 * st.n - 6);

    if (st.k == 1 && st.n >= 3 && st.e == 2 * st.n - 3) {
        auto outer = outer_face_walk(g, faces);
        if (outer) {
            std::set<int> on_outer(outer->begin(), outer->end());
            r.is_maximal_outerplanar = (static_cast<long long>(on_outer.size()) == st.n);
        }
    }

    r.is_halin = halin_check(g, faces);
    return r;
}

FamilyReport classify(const SegmentSet& M) {
    if (M.empty()) {
        FamilyReport r;
        r.is_forest = true;
        return r;
    }
    ArrangementGraph g(M);
    return classify(g);
}

namespace {

Point parabola(long k) { return Point(rat(k), rat(k * k)); }

// Interior point of the polygon of parabola points 0..t-1, not lying on any
// line through two of the given anchor points. Deterministic fixup.
Point interior_point_off_chords(int t, const std::vector<Point>& anchors) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rational x = rat(t - 1, 2) + rat(attempt + 1, 101);
        Rational chord_y = rat(t - 1) * x;  // closing chord from (0,0) to (t-1,(t-1)^2)
        Rational para_y = x * x;
        Rational y = (chord_y + para_y) / 2 + rat(attempt, 257);
        if (y >= chord_y || y <= para_y) continue;
        Point cand(x, y);
        bool clean = true;
        for (size_t i = 0; i < anchors.size() && clean; ++i)
            for (size_t j = i + 1; j < anchors.size() && clean; ++j)
                if (orientation(anchors[i], anchors[j], cand) == 0) clean = false;
        if (clean) return cand;
    }
    throw InternalInvariantError("could not place an interior point off all chords");
}

void require(bool cond, const std::string& what) {
    if (!cond) throw InternalInvariantError("generator validation failed: " + what);
}

}  // namespace

SegmentSet gen_halin_wheel(int m) {
    if (m < 6 || m % 2 != 0)
        throw PreconditionError("gen_halin_wheel requires even m >= 6 (no segment Halin graphs "
                                "with fewer than six segments)");
    int t = m / 2;
    std::vector<Point> rim;
    for (int k = 0; k < t; ++k) rim.push_back(parabola(k));
    Point hub = interior_point_off_chords(t, rim);

    std::vector<Segment> segs;
    for (int k = 0; k < t; ++k) {
        segs.emplace_back(rim[k], rim[(k + 1) % t]);
        segs.emplace_back(hub, rim[k]);
    }
    SegmentSet M(std::move(segs));
    require(static_cast<int>(M.m()) == m, "wheel m");
    auto st = stats(M);
    require(st.p == (m + 2) / 2, "wheel p");
    require(classify(M).is_halin, "wheel halin flag");
    return M;
}

SegmentSet gen_halin_wheel_odd(int m) {
    if (m < 7 || m % 2 != 1) throw PreconditionError("gen_halin_wheel_odd requires odd m >= 7");
    int t = (m + 1) / 2;
    std::vector<Point> rim;
    for (int k = 0; k < t; ++k) rim.push_back(parabola(k));
    // Straighten one middle rim vertex so its two rim edges merge into a
    // single segment; the spoke keeps it a vertex of the rim cycle.
    int j = t / 2;
    rim[j] = Point((rim[j - 1].x + rim[j + 1].x) / 2, (rim[j - 1].y + rim[j + 1].y) / 2);
    Point hub = interior_point_off_chords(t, rim);

    std::vector<Segment> segs;
    for (int k = 0; k < t; ++k) {
        segs.emplace_back(rim[k], rim[(k + 1) % t]);
        segs.emplace_back(hub, rim[k]);
    }
    SegmentSet M(std::move(segs));
    require(static_cast<int>(M.m()) == m, "odd wheel m");
    auto st = stats(M);
    require(st.p == (m + 3) / 2, "odd wheel p");
    require(classify(M).is_halin, "odd wheel halin flag");
    return M;
}

SegmentSet gen_halin_c_tight(int m) {
    if (m % 3 != 0)
        throw PreconditionError("gen_halin_c_tight: the recipe applies only for "
                                "m ≡ 0 (mod 3)");
    if (m < 18) throw PreconditionError("gen_halin_c_tight requires m >= 18");
    int t = m / 3 + 1;

    std::vector<Point> inner;
    for (int k = 0; k < t; ++k) inner.push_back(parabola(k));
    Point center = interior_point_off_chords(t, inner);
    std::vector<Point> outer;
    for (int k = 0; k < t; ++k)
        outer.emplace_back(2 * inner[k].x - center.x, 2 * inner[k].y - center.y);

    std::vector<Segment> segs;
    // Inner polygon minus the three consecutive sides 0-1, 1-2, 2-3.
    for (int k = 3; k < t; ++k) segs.emplace_back(inner[k], inner[(k + 1) % t]);
    // Full outer polygon.
    for (int k = 0; k < t; ++k) segs.emplace_back(outer[k], outer[(k + 1) % t]);
    // Gap reconnections and radial spokes.
    segs.emplace_back(inner[0], outer[1]);
    segs.emplace_back(inner[3], outer[2]);
    segs.emplace_back(inner[0], outer[0]);
    for (int k = 3; k < t; ++k) segs.emplace_back(inner[k], outer[k]);

    SegmentSet M(std::move(segs));
    require(static_cast<int>(M.m()) == m, "halin c-tight m");
    auto st = stats(M);
    require(st.c == (m + 3) / 3, "halin c-tight c");
    require(st.n == 2 * t - 2 && st.p == st.n, "halin c-tight n");
    require(classify(M).is_halin, "halin c-tight halin flag");
    return M;
}

SegmentSet gen_cactus_tight(int m) {
    if (m < 3 || m % 2 != 1)
        throw PreconditionError("gen_cactus_tight requires odd m >= 3 (even m corresponds to the "
                                "k1 = 1 equality case with one disjoint segment)");
    std::vector<Segment> segs;
    segs.emplace_back(Point(rat(0), rat(0)), Point(rat(m), rat(0)));
    auto apex = [](int i) { return Point(rat(2 * i + 1, 2), rat(i % 2 == 0 ? -1 : 1)); };
    for (int i = 1; i < m; ++i) segs.emplace_back(apex(i - 1), apex(i));

    SegmentSet M(std::move(segs));
    require(static_cast<int>(M.m()) == m, "cactus m");
    auto st = stats(M);
    require(st.p == 2 * m - 3, "cactus p");
    require(st.c == m - 2, "cactus c");
    require(st.k1 == 0 && st.k2 == 1, "cactus connectivity");
    require(classify(M).is_cactus, "cactus flag");
    return M;
}

namespace {

struct StairLine {
    Rational slope;   // dy/dx; verticals handled separately
    bool vertical;
    Rational x0;      // for verticals: the x coordinate
    Point anchor;     // a point on the line
    bool right;       // r-family (true) or l-family

    Rational y_at(const Rational& x) const { return anchor.y + slope * (x - anchor.x); }
    Rational x_at(const Rational& y) const {
        if (vertical) return x0;
        return anchor.x + (y - anchor.y) / slope;
    }
};

std::optional<Point> stair_cross(const StairLine& a, const StairLine& b) {
    if (a.vertical && b.vertical) return std::nullopt;
    if (a.vertical) return Point(a.x0, b.y_at(a.x0));
    if (b.vertical) return Point(b.x0, a.y_at(b.x0));
    if (a.slope == b.slope) return std::nullopt;
    Rational x = (b.anchor.y - b.slope * b.anchor.x - a.anchor.y + a.slope * a.anchor.x) /
                 (a.slope - b.slope);
    return Point(x, a.y_at(x));
}

}  // namespace

SegmentSet gen_k3free_tight(int m) {
    if (m < 3) throw PreconditionError("gen_k3free_tight requires m >= 3");

    // Lines in creation order: r0, l0, r1, l1, r2, l2, ...
    std::vector<StairLine> lines;
    lines.push_back({rat(0), true, rat(1), Point(rat(1), rat(0)), true});   // r0: x = 1
    lines.push_back({rat(0), true, rat(0), Point(rat(0), rat(0)), false});  // l0: x = 0
    if (m >= 3) {
        StairLine r1;
        r1.vertical = false;
        r1.slope = rat(-4);
        r1.anchor = Point(rat(0), rat(1));
        r1.right = true;
        lines.push_back(r1);
    }

    // Anchor each new line on its host, halfway between the reference crossing
    // and the next crossing below it on the host.
    auto anchor_below = [&](int host, const Point& ref) -> Point {
        Rational next_y = ref.y - 1;
        for (size_t other = 0; other < lines.size(); ++other) {
            if (static_cast<int>(other) == host) continue;
            auto q = stair_cross(lines[host], lines[other]);
            if (!q) continue;
            if (q->y < ref.y && q->y > next_y) next_y = q->y;
        }
        Rational y = (ref.y + next_y) / 2;
        return Point(lines[host].x_at(y), y);
    };

    int wave = 1;  // building l_wave then r_{wave+1}
    while (static_cast<int>(lines.size()) < m) {
        int k = static_cast<int>(lines.size());
        bool make_l = (k % 2 == 1);  // after r0,l0,r1 the order alternates l,r,l,r,...
        if (make_l) {
            // l_i: starts on r_{i-1} below the crossing of r_i and r_{i-1}.
            int r_i = k - 1;      // most recent r
            int r_prev = k - 3 >= 2 ? k - 3 : 0;  // previous r (r0 sits at index 0)
            auto ref = stair_cross(lines[r_i], lines[r_prev]);
            if (!ref) throw InternalInvariantError("staircase reference crossing missing");
            StairLine l;
            l.vertical = false;
            l.right = false;
            l.slope = rat(4);
            for (int i = 1; i < wave; ++i) l.slope /= 4;
            l.anchor = anchor_below(r_prev, *ref);
            lines.push_back(l);
        } else {
            // r_{i+1}: starts on l_{i-1} below the crossing of l_i and l_{i-1}.
            int l_i = k - 1;
            int l_prev = k - 3 >= 3 ? k - 3 : 1;  // previous l (l0 sits at index 1)
            auto ref = stair_cross(lines[l_i], lines[l_prev]);
            if (!ref) throw InternalInvariantError("staircase reference crossing missing");
            StairLine r;
            r.vertical = false;
            r.right = true;
            r.slope = rat(-1);
            for (int i = 1; i < wave; ++i) r.slope /= 4;
            r.anchor = anchor_below(l_prev, *ref);
            lines.push_back(r);
            ++wave;
        }
    }

    // Crossing pairs: all except (r0,l0) and consecutive (index k,k+1), k>=2.
    auto is_exception = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        if (i == 0 && j == 1) return true;
        return j == i + 1 && i >= 2;
    };

    // Clip each line exactly to its extreme required crossings.
    std::vector<std::vector<Point>> needed(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (is_exception(i, j)) continue;
            auto q = stair_cross(lines[i], lines[j]);
            if (!q) throw InternalInvariantError("staircase crossing pair is parallel");
            needed[i].push_back(*q);
            needed[j].push_back(*q);
        }
    std::vector<Segment> segs;
    for (int i = 0; i < m; ++i) {
        auto& pts = needed[i];
        if (pts.size() < 2) {
            if (m == 3 && pts.size() == 1) {
                // With only three segments a vertical carries one crossing;
                // give it a stub of length 1 downward.
                segs.emplace_back(pts[0], Point(pts[0].x, pts[0].y - 1));
                continue;
            }
            throw InternalInvariantError("staircase line with fewer than two crossings");
        }
        auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
        segs.emplace_back(*mn, *mx);
    }

    SegmentSet M(std::move(segs));
    require(static_cast<int>(M.m()) == m, "k3free m");
    auto st = stats(M);
    long long mm = m;
    require(st.p == mm * (mm - 1) / 2 - (mm - 2), "k3free p");
    require(st.c == (mm - 2) * (mm - 3) / 2, "k3free c");
    require(classify(M).is_k3_free, "k3free flag");
    return M;
}

SegmentSet gen_max_planar(int x) {
    if (x < 0) throw PreconditionError("gen_max_planar requires x >= 0");
    long u = x + 1;
    Point T0(rat(0), rat(0)), T1(rat(4 * u), rat(0)), T2(rat(2 * u), rat(3 * u));
    auto ext = [](const Point& a, const Point& b) {  // 2a - b
        return Point(2 * a.x - b.x, 2 * a.y - b.y);
    };
    Point E0 = ext(T0, T1), E1 = ext(T1, T2), E2 = ext(T2, T0);

    std::vector<Segment> segs;
    // Side carriers, each extended beyond one corner to an external point.
    segs.emplace_back(E0, T1);
    segs.emplace_back(E1, T2);
    segs.emplace_back(E2, T0);
    // External triangle.
    segs.emplace_back(E0, E1);
    segs.emplace_back(E1, E2);
    segs.emplace_back(E2, E0);
    // Fans to the remaining points of each external point's facing side.
    segs.emplace_back(E0, T2);
    segs.emplace_back(E1, T0);
    segs.emplace_back(E2, T1);
    for (long j = 1; j <= x; ++j) {
        segs.emplace_back(E0, Point(rat(2 * j), rat(3 * j)));              // left side
        segs.emplace_back(E1, Point(rat(4 * j), rat(0)));                  // bottom side
        segs.emplace_back(E2, Point(rat(4 * u - 2 * j), rat(3 * j)));      // right side
        // Triangulating parallels.
        segs.emplace_back(Point(rat(2 * j), rat(3 * j)), Point(rat(4 * u - 2 * j), rat(3 * j)));
        segs.emplace_back(Point(rat(4 * j), rat(0)), Point(rat(2 * u + 2 * j), rat(3 * (u - j))));
        segs.emplace_back(Point(rat(4 * j), rat(0)), Point(rat(2 * j), rat(3 * j)));
    }

    SegmentSet M(std::move(segs));
    long long xl = x;
    require(static_cast<long long>(M.m()) == 6 * xl + 9, "max planar m");
    auto st = stats(M);
    require(st.p == (xl + 3) * (xl + 2) / 2 + 3, "max planar p");
    require(st.n == st.p && st.e == 3 * st.n - 6, "max planar n/e");
    require(st.c == (xl + 1) * (xl + 1) + 3 * (xl + 2), "max planar c");
    require(classify(M).is_maximal_planar, "max planar flag");
    return M;
}

SegmentSet gen_triangle_A() {
    return SegmentSet({Segment(Point(rat(0), rat(0)), Point(rat(2), rat(0))),
                       Segment(Point(rat(2), rat(0)), Point(rat(1), rat(2))),
                       Segment(Point(rat(1), rat(2)), Point(rat(0), rat(0)))});
}

}  // namespace segarr
