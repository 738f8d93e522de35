#include "segarr/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace segarr {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational coord_from_json(const nlohmann::json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return rat(v.get<long>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": coordinate must be an integer or a \"p/q\" string");
}

Point point_from_json(const nlohmann::json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError(where + ": point must be a [x, y] pair");
    return Point(coord_from_json(v[0], where + ".x"), coord_from_json(v[1], where + ".y"));
}

void reject_unknown(const nlohmann::json& obj, const std::vector<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const auto& a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw ParseError(where + ": unknown field '" + it.key() + "'");
    }
}

}  // namespace

SegmentFileContent parse_segment_file(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    reject_unknown(doc, {"segments", "lines"}, "top level");
    bool has_segments = doc.contains("segments");
    bool has_lines = doc.contains("lines");
    if (has_segments == has_lines)
        throw ParseError("exactly one of 'segments' or 'lines' is required");

    SegmentFileContent out;
    if (has_segments) {
        const auto& arr = doc["segments"];
        if (!arr.is_array()) throw ParseError("'segments' must be an array");
        std::vector<Segment> segs;
        for (size_t i = 0; i < arr.size(); ++i) {
            const auto& rec = arr[i];
            std::string where = "segments[" + std::to_string(i) + "]";
            if (!rec.is_object()) throw ParseError(where + ": must be an object");
            reject_unknown(rec, {"a", "b"}, where);
            if (!rec.contains("a") || !rec.contains("b"))
                throw ParseError(where + ": needs endpoints 'a' and 'b'");
            Point a = point_from_json(rec["a"], where + ".a");
            Point b = point_from_json(rec["b"], where + ".b");
            if (a == b) throw ParseError(where + ": zero-length segment");
            segs.emplace_back(a, b);
        }
        out.segments = SegmentSet(std::move(segs));
    } else {
        const auto& arr = doc["lines"];
        if (!arr.is_array()) throw ParseError("'lines' must be an array");
        std::vector<Line> lines;
        for (size_t i = 0; i < arr.size(); ++i) {
            const auto& rec = arr[i];
            std::string where = "lines[" + std::to_string(i) + "]";
            if (!rec.is_object()) throw ParseError(where + ": must be an object");
            reject_unknown(rec, {"A", "B", "C"}, where);
            if (!rec.contains("A") || !rec.contains("B") || !rec.contains("C"))
                throw ParseError(where + ": needs coefficients A, B, C");
            Rational A = coord_from_json(rec["A"], where + ".A");
            Rational B = coord_from_json(rec["B"], where + ".B");
            Rational C = coord_from_json(rec["C"], where + ".C");
            if (A == 0 && B == 0) throw ParseError(where + ": A and B may not both be zero");
            lines.emplace_back(A, B, C);
        }
        std::sort(lines.begin(), lines.end());
        lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
        out.lines = std::move(lines);
    }
    return out;
}

SegmentFileContent load_segment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_segment_file(ss.str());
}

namespace {

ordered_json point_json(const Point& p) {
    return ordered_json::array({rational_to_string(p.x), rational_to_string(p.y)});
}

}  // namespace

std::string serialize_segments(const SegmentSet& M) {
    ordered_json doc;
    doc["segments"] = ordered_json::array();
    for (const auto& s : M.segments()) {
        ordered_json rec;
        rec["a"] = point_json(s.a);
        rec["b"] = point_json(s.b);
        doc["segments"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

std::string serialize_lines(const std::vector<Line>& lines) {
    ordered_json doc;
    doc["lines"] = ordered_json::array();
    for (const auto& l : lines) {
        ordered_json rec;
        rec["A"] = rational_to_string(l.A);
        rec["B"] = rational_to_string(l.B);
        rec["C"] = rational_to_string(l.C);
        doc["lines"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

std::string analysis_report(const SegmentSet& M) {
    BoundCheckReport rep = check_instance(M);
    ordered_json doc;
    ordered_json stats;
    stats["m"] = rep.stats.m;
    stats["p"] = rep.stats.p;
    stats["j"] = rep.stats.j;
    stats["n"] = rep.stats.n;
    stats["e"] = rep.stats.e;
    stats["c"] = rep.stats.c;
    stats["k"] = rep.stats.k;
    stats["k1"] = rep.stats.k1;
    stats["k2"] = rep.stats.k2;
    stats["w"] = rep.stats.w;
    doc["stats"] = stats;

    ordered_json fam;
    fam["tree"] = rep.families.is_tree;
    fam["forest"] = rep.families.is_forest;
    fam["unicyclic"] = rep.families.is_unicyclic;
    fam["cactus"] = rep.families.is_cactus;
    fam["halin"] = rep.families.is_halin;
    fam["k3_free"] = rep.families.is_k3_free;
    fam["maximal_planar"] = rep.families.is_maximal_planar;
    fam["maximal_outerplanar"] = rep.families.is_maximal_outerplanar;
    if (rep.families.evidence) fam["evidence"] = *rep.families.evidence;
    doc["families"] = fam;
    doc["trimmed"] = rep.trimmed;

    doc["bounds"] = ordered_json::array();
    for (const auto& chk : rep.checks) {
        ordered_json row;
        row["family"] = chk.record.family;
        row["name"] = chk.record.name;
        row["quantity"] = quantity_name(chk.record.quantity);
        row["relation"] = direction_name(chk.record.direction);
        row["bound"] = chk.record.value;
        row["actual"] = chk.actual;
        row["slack"] = chk.slack;
        row["satisfied"] = chk.satisfied;
        doc["bounds"].push_back(row);
    }
    doc["all_bounds_satisfied"] = rep.all_satisfied();
    return doc.dump(2) + "\n";
}

std::string coloring_report(const ColoringOutcome& outcome) {
    ordered_json doc;
    doc["algorithm"] = outcome.algorithm;
    doc["m"] = outcome.m;
    doc["w"] = outcome.w;
    doc["colors_used"] = outcome.coloring.colors_used();
    doc["valid"] = outcome.valid;
    doc["within_m_colors"] = outcome.coloring.colors_used() <= outcome.m;
    if (outcome.fallback_used) doc["fallback_used"] = true;
    doc["assignment"] = ordered_json::array();
    for (const auto& kv : outcome.coloring.assignment) {
        ordered_json rec;
        rec["point"] = point_json(kv.first);
        rec["color"] = kv.second;
        doc["assignment"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

std::string buffon_summary_line(const BuffonSummary& s) {
    std::ostringstream os;
    os << "m=" << s.m << " ell=" << s.ell << " trials=" << s.trials << " seed=" << s.seed
       << " mean_p=" << s.mean_p << " var_p=" << s.var_p << " pr_p_zero=" << s.pr_p_zero
       << " mean_complexity=" << s.mean_complexity << " mean_triangles=" << s.mean_triangles
       << " mutual_t=" << s.mutual_t << " mean_mutual_t=" << s.mean_mutual_t
       << " resamples=" << s.resamples << "\n";
    return os.str();
}

std::string scaling_table(const std::vector<ScalingRow>& rows) {
    std::ostringstream os;
    os << "m\tell\tmean_p\tmean_p/(m^2 ell^2)\tmean_complexity/(m^2 ell^2 + m)\n";
    for (const auto& r : rows)
        os << r.m << "\t" << r.ell << "\t" << r.mean_p << "\t" << r.ratio_p << "\t"
           << r.ratio_complexity << "\n";
    return os.str();
}

}  // namespace segarr
