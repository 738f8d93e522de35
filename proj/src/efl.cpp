#include "segarr/efl.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace segarr {

namespace {

ConflictGraph build_conflicts(std::vector<Point> all_points,
                              std::vector<std::vector<Point>> carriers) {
    ConflictGraph cg;
    std::sort(all_points.begin(), all_points.end());
    all_points.erase(std::unique(all_points.begin(), all_points.end()), all_points.end());
    cg.points = std::move(all_points);
    auto id_of = [&](const Point& p) {
        return static_cast<int>(std::lower_bound(cg.points.begin(), cg.points.end(), p) -
                                cg.points.begin());
    };
    cg.adj.assign(cg.points.size(), {});
    for (auto& pts : carriers) {
        std::vector<int> ids;
        for (const auto& p : pts) ids.push_back(id_of(p));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        cg.w = std::max(cg.w, static_cast<long long>(ids.size()));
        for (size_t i = 0; i < ids.size(); ++i)
            for (size_t j = i + 1; j < ids.size(); ++j) {
                cg.adj[ids[i]].push_back(ids[j]);
                cg.adj[ids[j]].push_back(ids[i]);
            }
        cg.carrier.push_back(std::move(ids));
    }
    for (auto& a : cg.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return cg;
}

}  // namespace

ConflictGraph conflict_graph(const SegmentSet& M) {
    IntersectionData data = intersection_points(M);
    return build_conflicts(data.points, data.per_segment);
}

ConflictGraph conflict_graph(const std::vector<Line>& lines) {
    std::vector<Point> pts;
    std::vector<std::vector<Point>> carriers(lines.size());
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (auto q = line_intersection(lines[i], lines[j])) {
                pts.push_back(*q);
                carriers[i].push_back(*q);
                carriers[j].push_back(*q);
            }
    return build_conflicts(std::move(pts), std::move(carriers));
}

namespace {

bool validate_against(const ConflictGraph& cg, const EflColoring& f) {
    std::vector<int> color(cg.points.size());
    for (size_t i = 0; i < cg.points.size(); ++i) {
        auto it = f.assignment.find(cg.points[i]);
        if (it == f.assignment.end())
            throw PreconditionError("coloring misses intersection point " +
                                    point_to_string(cg.points[i]));
        color[i] = it->second;
    }
    for (const auto& carrier : cg.carrier) {
        std::set<int> seen;
        for (int id : carrier)
            if (!seen.insert(color[id]).second) return false;
    }
    return true;
}

}  // namespace

bool validate_coloring(const SegmentSet& M, const EflColoring& f) {
    return validate_against(conflict_graph(M), f);
}

bool validate_coloring(const std::vector<Line>& lines, const EflColoring& f) {
    return validate_against(conflict_graph(lines), f);
}

long long w_of(const SegmentSet& M) {
    long long w = 0;
    for (const auto& lst : intersection_points(M).per_segment)
        w = std::max(w, static_cast<long long>(lst.size()));
    return w;
}

EflColoring color_tree(const SegmentSet& M) {
    if (!classify(M).is_tree) throw PreconditionError("color_tree requires a segment tree");
    IntersectionData data = intersection_points(M);
    auto H = segment_graph(M);

    EflColoring f;
    std::vector<char> done(M.m(), 0);
    std::vector<size_t> queue{0};
    done[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        size_t s = queue[qi];
        // In a segment tree every non-root segment meets the already-colored
        // part in exactly one point.
        std::vector<Point> mine = data.per_segment[s];
        std::vector<Point> precolored;
        for (const auto& p : mine)
            if (f.assignment.count(p)) precolored.push_back(p);
        if (precolored.size() > 1)
            throw InternalInvariantError("segment tree BFS met two colored points");
        std::set<int> banned;
        for (const auto& p : precolored) banned.insert(f.assignment.at(p));
        int next = 1;
        for (const auto& p : mine) {
            if (f.assignment.count(p)) continue;
            while (banned.count(next)) ++next;
            f.assignment[p] = next;
            banned.insert(next);
        }
        for (int nb : H[s])
            if (!done[nb]) {
                done[nb] = 1;
                queue.push_back(nb);
            }
    }
    return f;
}

EflColoring color_pairwise(const SegmentSet& M) {
    IntersectionData data = intersection_points(M);
    std::map<Point, std::vector<int>> owners;
    for (size_t s = 0; s < M.m(); ++s)
        for (const auto& p : data.per_segment[s]) owners[p].push_back(static_cast<int>(s));
    for (const auto& kv : owners)
        if (kv.second.size() != 2)
            throw PreconditionError("color_pairwise: simple intersections required");
    // Segments labeled 1..m in canonical order; colors are (i+j) mod m.
    EflColoring f;
    long long m = static_cast<long long>(M.m());
    for (const auto& kv : owners)
        f.assignment[kv.first] = static_cast<int>(((kv.second[0] + 1) + (kv.second[1] + 1)) % m);
    return f;
}

EflColoring color_lines_k3free(const std::vector<Line>& lines_in) {
    // Merge collinear (identical) lines first.
    std::vector<Line> lines = lines_in;
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    EflColoring f;
    if (lines.size() <= 1) return f;

    // Group into parallel classes by direction (A, B).
    std::map<std::pair<Rational, Rational>, std::vector<Line>> classes;
    for (const auto& l : lines) classes[{l.A, l.B}].push_back(l);
    if (classes.size() == 1) return f;  // all parallel: p = 0

    // All concurrent?
    {
        auto it = classes.begin();
        const Line& l1 = it->second.front();
        ++it;
        const Line& l2 = it->second.front();
        Point common = *line_intersection(l1, l2);
        bool concurrent = true;
        for (const auto& l : lines)
            if (!point_on_line(common, l)) {
                concurrent = false;
                break;
            }
        if (concurrent) {
            f.assignment[common] = 1;
            return f;
        }
    }

    if (classes.size() != 2)
        throw PreconditionError("color_lines_k3free: line family is not K3-free");

    std::vector<Line> s1 = classes.begin()->second;
    std::vector<Line> s2 = std::next(classes.begin())->second;
    if (s1.size() < s2.size()) std::swap(s1, s2);
    // Order each class by its normalized offset: exact signed position along
    // any transversal, no distances needed.
    auto by_offset = [](const Line& a, const Line& b) { return a.C < b.C; };
    std::sort(s1.begin(), s1.end(), by_offset);
    std::sort(s2.begin(), s2.end(), by_offset);

    long long w = static_cast<long long>(s1.size());
    for (size_t i = 0; i < s1.size(); ++i)
        for (size_t j = 0; j < s2.size(); ++j) {
            Point q = *line_intersection(s1[i], s2[j]);
            f.assignment[q] = static_cast<int>((i + j) % w) + 1;
        }
    return f;
}

EflColoring greedy_coloring(const ConflictGraph& cg) {
    size_t n = cg.points.size();
    std::vector<int> color(n, 0);
    std::vector<std::set<int>> neighbor_colors(n);
    for (size_t step = 0; step < n; ++step) {
        // DSATUR: highest saturation, then highest degree, then lowest id.
        int best = -1;
        for (size_t v = 0; v < n; ++v) {
            if (color[v]) continue;
            if (best == -1) {
                best = static_cast<int>(v);
                continue;
            }
            size_t sat_v = neighbor_colors[v].size(), sat_b = neighbor_colors[best].size();
            if (sat_v > sat_b ||
                (sat_v == sat_b && cg.adj[v].size() > cg.adj[best].size()))
                best = static_cast<int>(v);
        }
        int c = 1;
        while (neighbor_colors[best].count(c)) ++c;
        color[best] = c;
        for (int nb : cg.adj[best]) neighbor_colors[nb].insert(c);
    }
    EflColoring f;
    for (size_t v = 0; v < n; ++v) f.assignment[cg.points[v]] = color[v];
    return f;
}

namespace {

struct ExactSolver {
    const ConflictGraph& cg;
    int n;
    std::vector<int> color;
    std::vector<int> best;
    int best_k;
    long long lb;

    explicit ExactSolver(const ConflictGraph& cg_) : cg(cg_), n(static_cast<int>(cg_.points.size())) {}

    uint64_t neighbor_mask(int v) const {
        uint64_t mask = 0;
        for (int nb : cg.adj[v])
            if (color[nb]) mask |= 1ULL << (color[nb] - 1);
        return mask;
    }

    void search(int colored, int used_k) {
        if (used_k >= best_k) return;
        if (best_k == static_cast<int>(lb)) return;
        if (colored == n) {
            best = color;
            best_k = used_k;
            return;
        }
        int pick = -1;
        int pick_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = static_cast<int>(__builtin_popcountll(neighbor_mask(v)));
            if (pick == -1 || sat > pick_sat ||
                (sat == pick_sat && cg.adj[v].size() > cg.adj[pick].size())) {
                pick = v;
                pick_sat = sat;
            }
        }
        uint64_t banned = neighbor_mask(pick);
        int max_c = std::min(used_k + 1, best_k - 1);
        for (int c = 1; c <= max_c; ++c) {
            if (banned & (1ULL << (c - 1))) continue;
            color[pick] = c;
            search(colored + 1, std::max(used_k, c));
            color[pick] = 0;
            if (best_k == static_cast<int>(lb)) return;
        }
    }
};

}  // namespace

ExactColoring chi_e_exact_conflicts(const ConflictGraph& cg, int point_budget) {
    int n = static_cast<int>(cg.points.size());
    if (n == 0) return {};
    if (n > point_budget || n > 62) {  // 62: color bitmask width
        EflColoring g = greedy_coloring(cg);
        throw ChiBudgetExceeded(cg.w, g.colors_used());
    }

    EflColoring g = greedy_coloring(cg);
    std::vector<int> incumbent(n);
    for (int v = 0; v < n; ++v) incumbent[v] = g.assignment.at(cg.points[v]);

    ExactSolver solver(cg);
    solver.color.assign(n, 0);
    solver.best = incumbent;
    solver.best_k = g.colors_used();
    solver.lb = std::max<long long>(cg.w, 1);
    if (solver.best_k > static_cast<int>(solver.lb)) solver.search(0, 0);

    ExactColoring out;
    out.chi = solver.best_k;
    for (int v = 0; v < n; ++v) out.coloring.assignment[cg.points[v]] = solver.best[v];
    return out;
}

ExactColoring chi_e_exact(const SegmentSet& M, int point_budget) {
    ConflictGraph cg = conflict_graph(M);
    if (classify(M).is_tree) {
        // chi_E(tree) = w; returning directly keeps the witness constructive.
        EflColoring t = color_tree(M);
        ExactColoring out;
        out.coloring = t;
        out.chi = t.colors_used();
        if (out.chi != cg.w) throw InternalInvariantError("tree coloring misses w colors");
        return out;
    }
    return chi_e_exact_conflicts(cg, point_budget);
}

// ---------------------------------------------------------------------------
// Cactus coloring per the inductive decomposition: strip hanging trees, pull
// out a segment lying in a single circuit segment set, recurse, then extend.

namespace {

using PointColor = std::map<Point, int>;

int max_color(const PointColor& f) {
    int k = 0;
    for (const auto& kv : f) k = std::max(k, kv.second);
    return k;
}

struct CactusWork {
    bool fallback = false;
};

std::vector<std::vector<int>> segment_components(const SegmentSet& M) {
    auto H = segment_graph(M);
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(M.m(), 0);
    for (size_t i = 0; i < M.m(); ++i) {
        if (seen[i]) continue;
        std::vector<int> comp, stack{static_cast<int>(i)};
        seen[i] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (int nb : H[cur])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_triangle_A(const SegmentSet& M) {
    return M.m() == 3 && intersection_points(M).points.size() == 3;
}

// All intersection points (in the ambient set) lying on segments of `subset`.
std::vector<Point> points_on_subset(const SegmentSet& ambient, const std::vector<char>& in_subset) {
    IntersectionData data = intersection_points(ambient);
    std::set<Point> pts;
    for (size_t s = 0; s < ambient.m(); ++s)
        if (in_subset[s]) pts.insert(data.per_segment[s].begin(), data.per_segment[s].end());
    return {pts.begin(), pts.end()};
}

// Claim-1 attachment: recolor the junction with the first fresh color and give
// the remaining points of the tree the following fresh colors.
void attach_tree_fresh(PointColor& f, const std::vector<Point>& tree_points,
                       const Point& junction) {
    int k = max_color(f);
    f[junction] = ++k;
    for (const auto& p : tree_points) {
        if (p == junction) continue;
        f[p] = ++k;
    }
}

PointColor color_connected_cactus(const SegmentSet& M, CactusWork& work);

// Colors the circuit core M' (the circuit segment set S, possibly plus one
// attaching segment when |S| = 3) with at most 3 colors.
PointColor color_single_circuit_core(const SegmentSet& core, CactusWork& work) {
    PointColor f;
    auto circuits = enumerate_circuits(core);
    if (circuits.size() != 1) {
        work.fallback = true;
        return f;
    }
    ArrangementGraph g(core);
    auto faces = enumerate_faces(g);
    const Circuit& circ = faces.circuits.at(0);

    // Corners of the circuit in cyclic order (dropping straight-through
    // vertices, e.g. the point where an attaching segment meets a side).
    std::vector<Point> cyc;
    for (int v : circ.cycle) cyc.push_back(g.vertices()[v]);
    std::vector<Point> corners;
    for (size_t i = 0; i < cyc.size(); ++i) {
        const Point& prev = cyc[(i + cyc.size() - 1) % cyc.size()];
        const Point& next = cyc[(i + 1) % cyc.size()];
        if (orientation(prev, cyc[i], next) != 0) corners.push_back(cyc[i]);
    }
    for (size_t i = 0; i < corners.size(); ++i)
        f[corners[i]] = (i + 1 == corners.size() && corners.size() % 2 == 1)
                            ? 3
                            : static_cast<int>(i % 2) + 1;

    // Any remaining intersection point of the core (the attachment point of
    // the extra segment, or a concurrency on a side) gets a color absent from
    // every carrier through it.
    IntersectionData data = intersection_points(core);
    for (const auto& p : data.points) {
        if (f.count(p)) continue;
        std::set<int> banned;
        for (size_t s = 0; s < core.m(); ++s) {
            const auto& lst = data.per_segment[s];
            if (std::find(lst.begin(), lst.end(), p) == lst.end()) continue;
            for (const auto& q : lst)
                if (f.count(q)) banned.insert(f.at(q));
        }
        int c = 1;
        while (banned.count(c)) ++c;
        if (c > 3) {
            work.fallback = true;
            return f;
        }
        f[p] = c;
    }
    return f;
}

PointColor color_connected_cactus(const SegmentSet& M, CactusWork& work) {
    PointColor f;
    ArrangementGraph g(M);
    auto st = stats(g);

    if (st.c == 0) {
        // Segment tree: p <= m-1 distinct colors.
        int next = 1;
        for (const auto& p : g.intersections().points) f[p] = next++;
        return f;
    }

    if (is_triangle_A(M)) {
        int next = 1;
        for (const auto& p : g.intersections().points) f[p] = next++;
        return f;
    }

    auto faces = enumerate_faces(g);
    IntersectionData data = g.intersections();

    if (st.c == 1) {
        const Circuit& circ = faces.circuits.at(0);
        std::vector<char> in_core(M.m(), 0);
        for (int s : circ.segment_ids) in_core[s] = 1;
        size_t core_size = circ.segment_ids.size();
        if (core_size == 3) {
            // Include one attaching segment so the core has 4 segments.
            auto H = segment_graph(M);
            int attach = -1;
            for (int s : circ.segment_ids) {
                for (int nb : H[s])
                    if (!in_core[nb]) {
                        attach = nb;
                        break;
                    }
                if (attach != -1) break;
            }
            if (attach == -1 && M.m() > 3) {
                work.fallback = true;
                return f;
            }
            if (attach != -1) in_core[attach] = 1;
        }
        std::vector<Segment> core_segs;
        for (size_t s = 0; s < M.m(); ++s)
            if (in_core[s]) core_segs.push_back(M[s]);
        SegmentSet core(core_segs);
        f = color_single_circuit_core(core, work);
        if (work.fallback) return f;

        // Hang the remaining trees.
        std::set<int> core_ids;
        for (size_t s = 0; s < M.m(); ++s)
            if (in_core[s]) core_ids.insert(static_cast<int>(s));
        SegmentSet rest = delete_segments(M, core_ids);
        // Components of M minus the core, with junction = unique point shared
        // with the core.
        for (const auto& comp : segment_components(rest)) {
            std::set<Point> tree_points;
            std::vector<Point> junctions;
            for (int rs : comp) {
                const Segment& tseg = rest[rs];
                for (size_t cs = 0; cs < M.m(); ++cs) {
                    if (!in_core[cs]) continue;
                    if (auto q = single_intersection_point(tseg, M[cs])) junctions.push_back(*q);
                }
                for (int rs2 : comp)
                    if (rs2 != rs)
                        if (auto q = single_intersection_point(tseg, rest[rs2]))
                            tree_points.insert(*q);
            }
            std::sort(junctions.begin(), junctions.end());
            junctions.erase(std::unique(junctions.begin(), junctions.end()), junctions.end());
            if (junctions.size() != 1) {
                work.fallback = true;
                return f;
            }
            std::vector<Point> ordered(tree_points.begin(), tree_points.end());
            attach_tree_fresh(f, ordered, junctions[0]);
        }
        return f;
    }

    // c >= 2: find a segment s* in a single circuit segment set whose removal
    // leaves only segment trees besides the circuit component.
    std::vector<int> owner_count(M.m(), 0);
    for (const auto& c : faces.circuits)
        for (int s : c.segment_ids) ++owner_count[s];

    int chosen_seg = -1;
    std::vector<std::vector<int>> chosen_trees;
    for (const auto& circ : faces.circuits) {
        for (int s : circ.segment_ids) {
            if (owner_count[s] != 1) continue;
            SegmentSet rest = delete_segments(M, {s});
            // Map rest indices back to M indices (rest preserves order).
            std::vector<int> back;
            for (size_t i = 0; i < M.m(); ++i)
                if (static_cast<int>(i) != s) back.push_back(static_cast<int>(i));
            std::set<int> sset(circ.segment_ids.begin(), circ.segment_ids.end());
            bool ok = true;
            std::vector<std::vector<int>> trees;
            for (const auto& comp : segment_components(rest)) {
                bool has_S = false;
                for (int rs : comp)
                    if (sset.count(back[rs])) has_S = true;
                if (has_S) continue;
                std::vector<Segment> comp_segs;
                for (int rs : comp) comp_segs.push_back(rest[rs]);
                if (stats(SegmentSet(comp_segs)).c != 0) {
                    ok = false;
                    break;
                }
                std::vector<int> mapped;
                for (int rs : comp) mapped.push_back(back[rs]);
                trees.push_back(std::move(mapped));
            }
            if (ok) {
                chosen_seg = s;
                chosen_trees = std::move(trees);
                break;
            }
        }
        if (chosen_seg != -1) break;
    }
    if (chosen_seg == -1) {
        work.fallback = true;
        return f;
    }

    // M' = M minus the hanging trees; contains s*.
    std::set<int> tree_ids;
    for (const auto& t : chosen_trees)
        for (int s : t) tree_ids.insert(s);
    std::vector<Segment> mprime_segs;
    for (size_t s = 0; s < M.m(); ++s)
        if (!tree_ids.count(static_cast<int>(s)) ) mprime_segs.push_back(M[s]);
    SegmentSet Mp(mprime_segs);
    const Segment star = M[chosen_seg];
    long long mprime = static_cast<long long>(Mp.m());

    // s*'s intersections within M'.
    std::vector<Segment> rec_segs;
    for (const auto& sgm : Mp.segments())
        if (!(sgm == star)) rec_segs.push_back(sgm);
    SegmentSet Mrec(rec_segs);
    struct Touch {
        Point at;
        Segment partner;
    };
    std::vector<Touch> touches;
    {
        std::map<Point, std::vector<Segment>> by_point;
        for (const auto& sgm : rec_segs)
            if (auto q = single_intersection_point(star, sgm)) by_point[*q].push_back(sgm);
        for (auto& kv : by_point) touches.push_back({kv.first, kv.second.front()});
    }
    if (touches.size() != 2) {
        work.fallback = true;
        return f;
    }

    if (is_triangle_A(Mrec)) {
        // M' = triangle plus s* joining two sides outside the circuit.
        IntersectionData tri = intersection_points(Mrec);
        int next = 1;
        for (const auto& p : tri.points) f[p] = next++;
        for (const auto& touch : touches) {
            std::set<int> banned;
            for (size_t s2 = 0; s2 < Mrec.m(); ++s2) {
                if (!point_on_segment(touch.at, Mrec[s2])) continue;
                for (const auto& q : tri.per_segment[s2]) banned.insert(f.at(q));
            }
            int c = 1;
            while (banned.count(c)) ++c;
            f[touch.at] = c;
        }
        if (f.at(touches[0].at) == f.at(touches[1].at)) {
            work.fallback = true;
            return f;
        }
    } else {
        f = color_connected_cactus(Mrec, work);
        if (work.fallback) return f;
        long long mrec = mprime - 1;
        IntersectionData rec_data = intersection_points(Mrec);
        auto points_on = [&](const Segment& sg) {
            for (size_t i = 0; i < Mrec.m(); ++i)
                if (Mrec[i] == sg) return rec_data.per_segment[i];
            throw InternalInvariantError("cactus recursion lost a segment");
        };
        // One of the two touched segments has at most m(Mrec)-2 points; it
        // hosts the reused color q, the other endpoint gets the fresh color.
        int q_side = -1;
        for (int cand = 0; cand < 2; ++cand)
            if (static_cast<long long>(points_on(touches[cand].partner).size()) <= mrec - 2) {
                q_side = cand;
                break;
            }
        if (q_side == -1) {
            work.fallback = true;
            return f;
        }
        const Touch& tq = touches[q_side];
        const Touch& tf = touches[1 - q_side];
        if (!f.count(tq.at)) {
            std::set<int> banned;
            for (const auto& p : points_on(tq.partner))
                if (f.count(p)) banned.insert(f.at(p));
            int c = 1;
            while (banned.count(c)) ++c;
            if (c > mprime - 2) {  // must stay clear of the fresh color m'-1
                work.fallback = true;
                return f;
            }
            f[tq.at] = c;
        }
        f[tf.at] = static_cast<int>(mprime - 1);
    }

    // Hang the trees back onto s* (each touches M' in exactly one point on s*).
    for (const auto& tree : chosen_trees) {
        std::set<Point> tree_points;
        std::vector<Point> junctions;
        for (int ts : tree) {
            if (auto q = single_intersection_point(M[ts], star)) junctions.push_back(*q);
            for (int ts2 : tree)
                if (ts2 != ts)
                    if (auto q = single_intersection_point(M[ts], M[ts2])) tree_points.insert(*q);
        }
        std::sort(junctions.begin(), junctions.end());
        junctions.erase(std::unique(junctions.begin(), junctions.end()), junctions.end());
        if (junctions.size() != 1) {
            work.fallback = true;
            return f;
        }
        std::vector<Point> ordered(tree_points.begin(), tree_points.end());
        attach_tree_fresh(f, ordered, junctions[0]);
    }
    return f;
}

}  // namespace

CactusColoring color_cactus(const SegmentSet& M) {
    if (!classify(M).is_cactus) throw PreconditionError("color_cactus requires a segment cactus");

    CactusColoring out;
    CactusWork work;
    PointColor merged;

    auto comps = segment_components(M);
    for (const auto& comp : comps) {
        std::vector<Segment> segs;
        for (int s : comp) segs.push_back(M[s]);
        SegmentSet sub(segs);
        PointColor f = color_connected_cactus(sub, work);
        if (work.fallback) break;
        merged.insert(f.begin(), f.end());
    }

    long long budget = is_triangle_A(M) ? 3 : static_cast<long long>(M.m()) - 1;
    if (!work.fallback) {
        out.coloring.assignment = merged;
        bool valid = false;
        try {
            valid = validate_coloring(M, out.coloring);
        } catch (const PreconditionError&) {
            valid = false;
        }
        if (!valid || out.coloring.colors_used() > budget) work.fallback = true;
    }
    if (work.fallback) {
        out.fallback_used = true;
        std::cerr << "color_cactus: structural decomposition hit an unexpected configuration; "
                     "falling back to the exact solver\n";
        out.coloring = chi_e_exact(M).coloring;
    }
    return out;
}

ConjectureCheck check_efl_conjecture(const SegmentSet& M, int point_budget) {
    ConjectureCheck out;
    long long m = static_cast<long long>(M.m());
    ConflictGraph cg = conflict_graph(M);
    if (cg.points.empty()) {
        out.holds = true;
        out.method = "empty";
        return out;
    }
    FamilyReport fam = classify(M);

    auto accept = [&](EflColoring f, const std::string& method) {
        if (!validate_against(cg, f)) return false;
        if (f.colors_used() > m) return false;
        out.holds = true;
        out.witness = std::move(f);
        out.method = method;
        return true;
    };

    if (fam.is_tree && accept(color_tree(M), "tree")) return out;
    if (fam.is_cactus) {
        auto cc = color_cactus(M);
        if (accept(cc.coloring, cc.fallback_used ? "cactus+exact" : "cactus")) return out;
    }
    bool simple = true;
    {
        std::vector<int> touch(cg.points.size(), 0);
        for (const auto& carrier : cg.carrier)
            for (int id : carrier) ++touch[id];
        for (int t : touch)
            if (t > 2) simple = false;
    }
    if (simple && accept(color_pairwise(M), "pairwise")) return out;
    if (static_cast<int>(cg.points.size()) <= point_budget) {
        auto ex = chi_e_exact_conflicts(cg, point_budget);
        if (accept(ex.coloring, "exact")) return out;
        out.witness = ex.coloring;  // a counterexample candidate
        out.method = "exact";
        return out;
    }
    EflColoring g = greedy_coloring(cg);
    if (accept(g, "greedy")) return out;
    out.witness = g;
    out.method = "greedy";  // inconclusive: greedy exceeded m within budget limits
    return out;
}

std::string emit_ilp(const SegmentSet& M) {
    ConflictGraph cg = conflict_graph(M);
    size_t p = cg.points.size();
    if (p == 0) throw PreconditionError("emit_ilp: nothing to color (p = 0)");

    std::ostringstream os;
    os << "\\ EFL coloring model: minimize the number of colors used\n";
    os << "\\ points " << p << ", segments " << M.m() << ", colors 1.." << p << "\n";
    os << "Minimize\n obj:";
    for (size_t k = 1; k <= p; ++k) os << (k == 1 ? " " : " + ") << "y_" << k;
    os << "\nSubject To\n";
    for (size_t i = 1; i <= p; ++i) {
        os << " assign_" << i << ":";
        for (size_t k = 1; k <= p; ++k) os << (k == 1 ? " " : " + ") << "x_" << i << "_" << k;
        os << " = 1\n";
    }
    for (size_t i = 1; i <= p; ++i)
        for (size_t k = 1; k <= p; ++k)
            os << " link_" << i << "_" << k << ": x_" << i << "_" << k << " - y_" << k
               << " <= 0\n";
    for (size_t s = 0; s < cg.carrier.size(); ++s) {
        const auto& pts = cg.carrier[s];
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                for (size_t k = 1; k <= p; ++k)
                    os << " conf_s" << s + 1 << "_p" << pts[a] + 1 << "_p" << pts[b] + 1 << "_c"
                       << k << ": x_" << pts[a] + 1 << "_" << k << " + x_" << pts[b] + 1 << "_"
                       << k << " <= 1\n";
    }
    os << "Binary\n";
    for (size_t i = 1; i <= p; ++i)
        for (size_t k = 1; k <= p; ++k) os << " x_" << i << "_" << k << "\n";
    for (size_t k = 1; k <= p; ++k) os << " y_" << k << "\n";
    os << "End\n";
    return os.str();
}

std::vector<Line> segments_to_lines(const SegmentSet& M) {
    std::vector<Line> lines;
    for (const auto& s : M.segments()) lines.push_back(line_through(s));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    return lines;
}

SegmentSet lines_to_segments(const std::vector<Line>& lines) {
    return clip_lines_to_segments(lines);
}

}  // namespace segarr
