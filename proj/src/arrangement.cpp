#include "segarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace segarr {

namespace {

bool bbox_disjoint(const Segment& s, const Segment& t) {
    // Canonical order gives a.x <= b.x for each segment.
    if (cmp(s.b.x, t.a.x) < 0 || cmp(t.b.x, s.a.x) < 0) return true;
    Rational slo = std::min(s.a.y, s.b.y), shi = std::max(s.a.y, s.b.y);
    Rational tlo = std::min(t.a.y, t.b.y), thi = std::max(t.a.y, t.b.y);
    return cmp(shi, tlo) < 0 || cmp(thi, slo) < 0;
}

// Sort key along a segment with canonical endpoints a < b.
struct AlongSegment {
    bool use_x;
    explicit AlongSegment(const Segment& s) : use_x(s.a.x != s.b.x) {}
    bool operator()(const Point& p, const Point& q) const {
        return use_x ? p.x < q.x : p.y < q.y;
    }
};

// CCW angular order of direction vectors starting just above the positive
// x-axis; exact, no trigonometry.
int direction_half(const Rational& dx, const Rational& dy) {
    if (sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0)) return 0;
    return 1;
}

bool direction_less(const Rational& dx1, const Rational& dy1, const Rational& dx2,
                    const Rational& dy2) {
    int h1 = direction_half(dx1, dy1), h2 = direction_half(dx2, dy2);
    if (h1 != h2) return h1 < h2;
    Rational cross = dx1 * dy2 - dy1 * dx2;
    return sgn(cross) > 0;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

IntersectionData intersection_points(const SegmentSet& M) {
    IntersectionData data;
    data.per_segment.resize(M.m());
    std::set<Point> pts;
    for (size_t i = 0; i < M.m(); ++i) {
        for (size_t j = i + 1; j < M.m(); ++j) {
            if (bbox_disjoint(M[i], M[j])) continue;
            auto r = segment_intersection(M[i], M[j]);
            if (std::holds_alternative<Overlap>(r))
                throw InternalInvariantError("overlap between canonical segments");
            if (auto* sp = std::get_if<SinglePoint>(&r)) {
                pts.insert(sp->p);
                data.per_segment[i].push_back(sp->p);
                data.per_segment[j].push_back(sp->p);
            }
        }
    }
    for (size_t i = 0; i < M.m(); ++i) {
        auto& v = data.per_segment[i];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::sort(v.begin(), v.end(), AlongSegment(M[i]));
    }
    data.points.assign(pts.begin(), pts.end());
    return data;
}

int ArrangementGraph::vertex_index(const Point& p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - vertices_.begin());
}

ArrangementGraph::ArrangementGraph(const SegmentSet& M) : set_(M) {
    isect_ = intersection_points(M);
    const IntersectionData& data = isect_;

    std::set<Point> vertex_set(data.points.begin(), data.points.end());
    std::set<Point> endpoint_set;
    for (const auto& s : M.segments()) {
        endpoint_set.insert(s.a);
        endpoint_set.insert(s.b);
    }
    vertex_set.insert(endpoint_set.begin(), endpoint_set.end());
    vertices_.assign(vertex_set.begin(), vertex_set.end());

    std::set<Point> isect_set(data.points.begin(), data.points.end());
    kinds_.reserve(vertices_.size());
    for (const auto& v : vertices_) {
        bool isect = isect_set.count(v) > 0;
        bool endp = endpoint_set.count(v) > 0;
        kinds_.push_back(isect && endp ? VertexKind::Both
                                       : (isect ? VertexKind::Intersection : VertexKind::Endpoint));
    }

    rot_.assign(vertices_.size(), {});
    for (size_t si = 0; si < M.m(); ++si) {
        const Segment& s = M[si];
        std::vector<Point> chain = data.per_segment[si];
        chain.push_back(s.a);
        chain.push_back(s.b);
        std::sort(chain.begin(), chain.end());
        chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
        std::sort(chain.begin(), chain.end(), AlongSegment(s));
        for (size_t t = 0; t + 1 < chain.size(); ++t) {
            int u = vertex_index(chain[t]);
            int v = vertex_index(chain[t + 1]);
            rot_[u].push_back({v, static_cast<int>(si)});
            rot_[v].push_back({u, static_cast<int>(si)});
            ++edge_count_;
        }
    }

    for (size_t v = 0; v < rot_.size(); ++v) {
        auto& list = rot_[v];
        std::sort(list.begin(), list.end(), [&](const HalfEdge& h1, const HalfEdge& h2) {
            const Point& p = vertices_[v];
            const Point& q1 = vertices_[h1.to];
            const Point& q2 = vertices_[h2.to];
            return direction_less(q1.x - p.x, q1.y - p.y, q2.x - p.x, q2.y - p.y);
        });
        for (size_t t = 0; t + 1 < list.size(); ++t) {
            const Point& p = vertices_[v];
            const Point& q1 = vertices_[list[t].to];
            const Point& q2 = vertices_[list[t + 1].to];
            Rational cross = (q1.x - p.x) * (q2.y - p.y) - (q1.y - p.y) * (q2.x - p.x);
            Rational dot = (q1.x - p.x) * (q2.x - p.x) + (q1.y - p.y) * (q2.y - p.y);
            if (cross == 0 && sgn(dot) > 0)
                throw InternalInvariantError("coincident edge directions at a vertex");
        }
    }

    UnionFind uf(static_cast<int>(vertices_.size()));
    for (size_t v = 0; v < rot_.size(); ++v)
        for (const auto& h : rot_[v]) uf.unite(static_cast<int>(v), h.to);
    component_of_.resize(vertices_.size());
    std::map<int, int> roots;
    for (size_t v = 0; v < vertices_.size(); ++v) {
        int r = uf.find(static_cast<int>(v));
        auto it = roots.emplace(r, static_cast<int>(roots.size())).first;
        component_of_[v] = it->second;
    }
    components_ = static_cast<long long>(roots.size());
}

namespace {

Rational walk_signed_area_twice(const ArrangementGraph& g, const std::vector<int>& walk) {
    Rational area = 0;
    for (size_t i = 0; i < walk.size(); ++i) {
        const Point& u = g.vertices()[walk[i]];
        const Point& v = g.vertices()[walk[(i + 1) % walk.size()]];
        area += u.x * v.y - u.y * v.x;
    }
    return area;
}

// Decomposes a closed walk into simple cycles by cutting at repeated vertices.
std::vector<std::vector<int>> simple_cycles_of_walk(const std::vector<int>& walk) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> stack;
    std::map<int, int> pos;  // vertex -> index in stack
    auto feed = [&](int v) {
        auto it = pos.find(v);
        if (it == pos.end()) {
            pos[v] = static_cast<int>(stack.size());
            stack.push_back(v);
            return;
        }
        int k = it->second;
        std::vector<int> cyc(stack.begin() + k, stack.end());
        for (size_t i = k + 1; i < stack.size(); ++i) pos.erase(stack[i]);
        stack.resize(k + 1);
        if (cyc.size() >= 3) cycles.push_back(std::move(cyc));
    };
    for (int v : walk) feed(v);
    feed(walk.front());
    return cycles;
}

}  // namespace

FaceDecomposition enumerate_faces(const ArrangementGraph& g) {
    FaceDecomposition out;
    const auto& rot = g.rotation();
    size_t nv = rot.size();
    std::vector<std::vector<char>> visited(nv);
    for (size_t v = 0; v < nv; ++v) visited[v].assign(rot[v].size(), 0);

    auto index_of = [&](int u, int to) -> int {
        for (size_t t = 0; t < rot[u].size(); ++t)
            if (rot[u][t].to == to) return static_cast<int>(t);
        throw InternalInvariantError("missing twin half-edge");
    };

    for (size_t v0 = 0; v0 < nv; ++v0) {
        for (size_t t0 = 0; t0 < rot[v0].size(); ++t0) {
            if (visited[v0][t0]) continue;
            std::vector<int> walk;
            int v = static_cast<int>(v0), t = static_cast<int>(t0);
            while (!visited[v][t]) {
                visited[v][t] = 1;
                walk.push_back(v);
                int u = rot[v][t].to;
                int back = index_of(u, v);
                int deg = static_cast<int>(rot[u].size());
                v = u;
                t = (back - 1 + deg) % deg;
            }
            out.face_walks.push_back(walk);

            Rational area2 = walk_signed_area_twice(g, walk);
            if (sgn(area2) <= 0) continue;  // unbounded face of its component

            auto cycles = simple_cycles_of_walk(walk);
            std::vector<int> positive;
            for (size_t ci = 0; ci < cycles.size(); ++ci)
                if (sgn(walk_signed_area_twice(g, cycles[ci])) > 0)
                    positive.push_back(static_cast<int>(ci));
            if (positive.size() != 1)
                throw InternalInvariantError("bounded face without a unique enclosing cycle");

            Circuit circuit;
            circuit.cycle = cycles[positive[0]];
            for (size_t i = 0; i < circuit.cycle.size(); ++i) {
                int a = circuit.cycle[i];
                int b = circuit.cycle[(i + 1) % circuit.cycle.size()];
                circuit.segment_ids.push_back(rot[a][index_of(a, b)].segment);
            }
            std::sort(circuit.segment_ids.begin(), circuit.segment_ids.end());
            circuit.segment_ids.erase(
                std::unique(circuit.segment_ids.begin(), circuit.segment_ids.end()),
                circuit.segment_ids.end());
            out.circuits.push_back(std::move(circuit));
        }
    }
    return out;
}

std::vector<Circuit> enumerate_circuits(const SegmentSet& M) {
    ArrangementGraph g(M);
    auto faces = enumerate_faces(g);
    long long euler =
        g.edge_count() - static_cast<long long>(g.vertices().size()) + g.component_count();
    if (static_cast<long long>(faces.circuits.size()) != euler)
        throw InternalInvariantError("Euler circuit count disagrees with face traversal");
    return faces.circuits;
}

ArrangementStats stats(const ArrangementGraph& g) {
    ArrangementStats st;
    const SegmentSet& M = g.segment_set();
    st.m = static_cast<long long>(M.m());

    const IntersectionData& data = g.intersections();
    st.p = static_cast<long long>(data.points.size());
    std::set<Point> endpoints;
    for (const auto& s : M.segments()) {
        endpoints.insert(s.a);
        endpoints.insert(s.b);
    }
    st.j = static_cast<long long>(endpoints.size());
    st.n = static_cast<long long>(g.vertices().size());
    st.e = g.edge_count();
    st.k = g.component_count();
    for (const auto& lst : data.per_segment)
        st.w = std::max(st.w, static_cast<long long>(lst.size()));

    // Trivial/nontrivial path-connected components of M, via shared points.
    UnionFind uf(static_cast<int>(M.m()));
    std::map<Point, int> first_owner;
    for (size_t si = 0; si < M.m(); ++si)
        for (const auto& p : data.per_segment[si]) {
            auto it = first_owner.emplace(p, static_cast<int>(si)).first;
            uf.unite(static_cast<int>(si), it->second);
        }
    std::map<int, long long> comp_size;
    for (size_t si = 0; si < M.m(); ++si) ++comp_size[uf.find(static_cast<int>(si))];
    for (const auto& kv : comp_size) (kv.second == 1 ? st.k1 : st.k2)++;

    st.c = st.e - st.n + st.k;
    auto faces = enumerate_faces(g);
    if (static_cast<long long>(faces.circuits.size()) != st.c)
        throw InternalInvariantError("Euler circuit count disagrees with face traversal");
    return st;
}

ArrangementStats stats(const SegmentSet& M) {
    ArrangementGraph g(M);
    return stats(g);
}

SegmentSet trim(const SegmentSet& M) {
    SegmentSet cur = M;
    for (;;) {
        IntersectionData data = intersection_points(cur);
        std::vector<Segment> next;
        bool changed = false;
        for (size_t i = 0; i < cur.m(); ++i) {
            const auto& pts = data.per_segment[i];
            if (pts.size() < 2) {
                changed = true;
                continue;
            }
            Segment clipped(pts.front(), pts.back());
            if (!(clipped == cur[i])) changed = true;
            next.push_back(clipped);
        }
        if (!changed) return cur;
        cur = SegmentSet(std::move(next));
    }
}

std::vector<std::vector<int>> segment_graph(const SegmentSet& M) {
    std::vector<std::vector<int>> H(M.m());
    for (size_t i = 0; i < M.m(); ++i) {
        for (size_t j = i + 1; j < M.m(); ++j) {
            if (bbox_disjoint(M[i], M[j])) continue;
            if (segments_intersect(M[i], M[j])) {
                H[i].push_back(static_cast<int>(j));
                H[j].push_back(static_cast<int>(i));
            }
        }
    }
    return H;
}

namespace {

size_t reachable_skipping(const std::vector<std::vector<int>>& H, int start, int skip) {
    std::vector<char> seen(H.size(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    size_t count = 0;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        ++count;
        for (int nb : H[cur])
            if (nb != skip && !seen[nb]) {
                seen[nb] = 1;
                stack.push_back(nb);
            }
    }
    return count;
}

}  // namespace

std::vector<int> removable_segments(const SegmentSet& M) {
    auto H = segment_graph(M);
    size_t m = M.m();
    if (m < 2 || reachable_skipping(H, 0, -1) != m)
        throw PreconditionError("removable_segments requires nontrivial connected set");
    std::vector<int> out;
    for (size_t s = 0; s < m; ++s) {
        int start = (s == 0) ? 1 : 0;
        if (reachable_skipping(H, start, static_cast<int>(s)) == m - 1)
            out.push_back(static_cast<int>(s));
    }
    return out;
}

SegmentSet delete_segments(const SegmentSet& M, const std::set<int>& ids) {
    for (int id : ids)
        if (id < 0 || static_cast<size_t>(id) >= M.m())
            throw PreconditionError("delete_segments: unknown segment id");
    std::vector<Segment> keep;
    for (size_t i = 0; i < M.m(); ++i)
        if (!ids.count(static_cast<int>(i))) keep.push_back(M[i]);
    return SegmentSet(std::move(keep));
}

std::vector<Point> canonical_cycle(std::vector<Point> cycle) {
    if (cycle.empty()) return cycle;
    std::vector<Point> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t shift = 0; shift < cycle.size(); ++shift) {
            std::vector<Point> cand;
            cand.reserve(cycle.size());
            for (size_t i = 0; i < cycle.size(); ++i) cand.push_back(cycle[(shift + i) % cycle.size()]);
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(cycle.begin(), cycle.end());
    }
    return best;
}

}  // namespace segarr
