#include "segarr/buffon.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace segarr {

uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

constexpr int64_t kSnapDen = 1LL << 40;

Rational snap(double v) {
    Rational q(static_cast<long>(llround(v * static_cast<double>(kSnapDen))), kSnapDen);
    q.canonicalize();
    return q;
}

}  // namespace

SegmentSet gen_buffon(int m, const Rational& ell, uint64_t trial_seed, int* resamples) {
    if (m < 1 || sgn(ell) <= 0) throw PreconditionError("gen_buffon requires m >= 1, ell > 0");
    double len = ell.get_d();
    for (int attempt = 0;; ++attempt) {
        if (attempt > 64) throw InternalInvariantError("gen_buffon could not avoid degeneracy");
        uint64_t s = attempt == 0 ? trial_seed : mix64(trial_seed + attempt);
        SplitMix rng(s);
        std::vector<Segment> segs;
        bool bad = false;
        for (int i = 0; i < m && !bad; ++i) {
            double cx = rng.u01(), cy = rng.u01();
            double theta = rng.u01() * M_PI;
            double dx = 0.5 * len * std::cos(theta), dy = 0.5 * len * std::sin(theta);
            Point a(snap(cx - dx), snap(cy - dy));
            Point b(snap(cx + dx), snap(cy + dy));
            if (a == b) {
                bad = true;
                break;
            }
            segs.emplace_back(a, b);
        }
        if (!bad) {
            SegmentSet M(segs);
            if (static_cast<int>(M.m()) == m) {
                if (resamples) *resamples += attempt;
                return M;
            }
        }
    }
}

namespace {

bool bbox_overlap(const Segment& s, const Segment& t) {
    if (cmp(s.b.x, t.a.x) < 0 || cmp(t.b.x, s.a.x) < 0) return false;
    Rational slo = std::min(s.a.y, s.b.y), shi = std::max(s.a.y, s.b.y);
    Rational tlo = std::min(t.a.y, t.b.y), thi = std::max(t.a.y, t.b.y);
    return !(cmp(shi, tlo) < 0 || cmp(thi, slo) < 0);
}

std::vector<std::vector<int>> intersection_adjacency(const SegmentSet& M) {
    std::vector<std::vector<int>> adj(M.m());
    for (size_t i = 0; i < M.m(); ++i)
        for (size_t j = i + 1; j < M.m(); ++j) {
            if (!bbox_overlap(M[i], M[j])) continue;
            if (segments_intersect(M[i], M[j])) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    return adj;
}

long long count_triangles(const std::vector<std::vector<int>>& adj) {
    long long count = 0;
    for (size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) {
            if (v <= static_cast<int>(u)) continue;
            // common neighbors w > v
            size_t a = 0, b = 0;
            const auto& au = adj[u];
            const auto& av = adj[v];
            while (a < au.size() && b < av.size()) {
                if (au[a] < av[b])
                    ++a;
                else if (au[a] > av[b])
                    ++b;
                else {
                    if (au[a] > v) ++count;
                    ++a;
                    ++b;
                }
            }
        }
    return count;
}

long long count_k4(const std::vector<std::vector<int>>& adj) {
    long long count = 0;
    auto adjacent = [&](int a, int b) {
        const auto& l = adj[a];
        return std::binary_search(l.begin(), l.end(), b);
    };
    for (size_t u = 0; u < adj.size(); ++u)
        for (int v : adj[u]) {
            if (v <= static_cast<int>(u)) continue;
            std::vector<int> common;
            std::set_intersection(adj[u].begin(), adj[u].end(), adj[v].begin(), adj[v].end(),
                                  std::back_inserter(common));
            for (size_t a = 0; a < common.size(); ++a) {
                if (common[a] <= v) continue;
                for (size_t b = a + 1; b < common.size(); ++b)
                    if (adjacent(common[a], common[b])) ++count;
            }
        }
    return count;
}

struct TrialNumbers {
    long long p = 0;
    long long complexity = 0;
    long long triangles = 0;
    long long mutual_t = 0;
};

TrialNumbers analyze_trial(const SegmentSet& M, int mutual_t) {
    TrialNumbers out;
    auto adj = intersection_adjacency(M);
    for (auto& l : adj) std::sort(l.begin(), l.end());

    // p: distinct intersection points among crossing pairs only.
    std::set<Point> pts;
    for (size_t i = 0; i < M.m(); ++i)
        for (int j : adj[i]) {
            if (j <= static_cast<int>(i)) continue;
            if (auto q = single_intersection_point(M[i], M[static_cast<size_t>(j)]))
                pts.insert(*q);
        }
    out.p = static_cast<long long>(pts.size());

    out.triangles = count_triangles(adj);
    if (mutual_t == 2) {
        long long edges = 0;
        for (const auto& l : adj) edges += static_cast<long long>(l.size());
        out.mutual_t = edges / 2;
    } else if (mutual_t == 3) {
        out.mutual_t = out.triangles;
    } else {
        out.mutual_t = count_k4(adj);
    }

    // Complexity n + e + c: full arrangement on the crossing part, plus two
    // vertices and one edge per isolated segment.
    std::vector<Segment> active;
    long long lone = 0;
    for (size_t i = 0; i < M.m(); ++i) {
        if (adj[i].empty())
            ++lone;
        else
            active.push_back(M[i]);
    }
    long long n = 2 * lone, e = lone, c = 0;
    if (!active.empty()) {
        auto st = stats(SegmentSet(std::move(active)));
        n += st.n;
        e += st.e;
        c += st.c;
    }
    out.complexity = n + e + c;
    return out;
}

}  // namespace

long long count_mutually_intersecting(const SegmentSet& M, int t) {
    if (t < 2 || t > 4)
        throw PreconditionError("count_mutually_intersecting supports 2 <= t <= 4");
    auto adj = intersection_adjacency(M);
    for (auto& l : adj) std::sort(l.begin(), l.end());
    if (t == 2) {
        long long edges = 0;
        for (const auto& l : adj) edges += static_cast<long long>(l.size());
        return edges / 2;
    }
    if (t == 3) return count_triangles(adj);
    return count_k4(adj);
}

BuffonSummary estimate(const BuffonConfig& config) {
    if (config.m < 1 || sgn(config.ell) <= 0 || config.trials < 1)
        throw PreconditionError("estimate requires m >= 1, ell > 0, trials >= 1");
    BuffonSummary out;
    out.m = config.m;
    out.ell = config.ell.get_d();
    out.trials = config.trials;
    out.seed = config.seed;
    out.mutual_t = config.mutual_t;

    double sum_p = 0, sum_p2 = 0, sum_cx = 0, sum_tri = 0, sum_mut = 0;
    long long zero = 0;
    int resamples = 0;
    for (long long i = 0; i < config.trials; ++i) {
        uint64_t ts = mix64(config.seed + mix64(static_cast<uint64_t>(i) + 1));
        SegmentSet M = gen_buffon(config.m, config.ell, ts, &resamples);
        TrialNumbers tn = analyze_trial(M, config.mutual_t);
        sum_p += static_cast<double>(tn.p);
        sum_p2 += static_cast<double>(tn.p) * static_cast<double>(tn.p);
        sum_cx += static_cast<double>(tn.complexity);
        sum_tri += static_cast<double>(tn.triangles);
        sum_mut += static_cast<double>(tn.mutual_t);
        if (tn.p == 0) ++zero;
    }
    double T = static_cast<double>(config.trials);
    out.mean_p = sum_p / T;
    out.var_p = config.trials > 1 ? (sum_p2 - sum_p * sum_p / T) / (T - 1) : 0.0;
    out.pr_p_zero = static_cast<double>(zero) / T;
    out.mean_complexity = sum_cx / T;
    out.mean_triangles = sum_tri / T;
    out.mean_mutual_t = sum_mut / T;
    out.resamples = resamples;
    return out;
}

std::vector<ScalingRow> scaling_report(const std::vector<std::pair<int, Rational>>& grid,
                                       long long trials, uint64_t seed) {
    if (grid.empty()) throw PreconditionError("scaling_report requires a nonempty grid");
    std::vector<ScalingRow> rows;
    for (const auto& [m, ell] : grid) {
        BuffonConfig cfg;
        cfg.m = m;
        cfg.ell = ell;
        cfg.trials = trials;
        cfg.seed = seed;
        BuffonSummary s = estimate(cfg);
        ScalingRow row;
        row.m = m;
        row.ell = s.ell;
        row.mean_p = s.mean_p;
        double scale_p = static_cast<double>(m) * static_cast<double>(m) * s.ell * s.ell;
        row.ratio_p = scale_p > 0 ? s.mean_p / scale_p : 0;
        row.ratio_complexity = s.mean_complexity / (scale_p + static_cast<double>(m));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace segarr
