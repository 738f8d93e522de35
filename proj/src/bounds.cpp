#include "segarr/bounds.hpp"

namespace segarr {

namespace {

long long ceil_div(long long a, long long b) {
    // b > 0; works for negative a as well
    long long q = a / b, r = a % b;
    return q + (r > 0 ? 1 : 0);
}

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

BoundRecord rec(std::string family, std::string name, Quantity q, Direction d, long long value,
                bool conjecture = false) {
    return BoundRecord{std::move(family), std::move(name), q, d, value, conjecture};
}

}  // namespace

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> fams{
        "any",    "tree",   "forest",         "unicyclic",      "cactus",
        "halin",  "k3free", "k3free-trimmed", "max-planar",     "max-outerplanar"};
    return fams;
}

std::vector<BoundRecord> bound_table(const std::string& family, long long m, long long k1,
                                     long long k2) {
    if (k1 < 0 || k2 < 0) throw PreconditionError("bound_table: k1, k2 must be nonnegative");
    std::vector<BoundRecord> out;
    if (family == "any") {
        out.push_back(rec("any", "p <= C(m,2)", Quantity::P, Direction::Upper, choose2(m)));
        out.push_back(rec("any", "c <= C(m-1,2)", Quantity::C, Direction::Upper, choose2(m - 1)));
        out.push_back(rec("any", "e >= m", Quantity::E, Direction::Lower, m));
        out.push_back(rec("any", "m >= k1 + 2*k2", Quantity::M, Direction::Lower, k1 + 2 * k2));
        out.push_back(rec("any", "p >= k2", Quantity::P, Direction::Lower, k2));
    } else if (family == "tree") {
        out.push_back(rec("tree", "p <= m-1", Quantity::P, Direction::Upper, m - 1));
        out.push_back(rec("tree", "c = 0", Quantity::C, Direction::Equal, 0));
    } else if (family == "forest") {
        out.push_back(rec("forest", "p <= m-k1-k2", Quantity::P, Direction::Upper, m - k1 - k2));
        out.push_back(rec("forest", "c = 0", Quantity::C, Direction::Equal, 0));
    } else if (family == "unicyclic") {
        out.push_back(rec("unicyclic", "p <= m", Quantity::P, Direction::Upper, m));
        out.push_back(rec("unicyclic", "c = 1", Quantity::C, Direction::Equal, 1));
    } else if (family == "cactus") {
        out.push_back(rec("cactus", "p <= 2(m-k1)-3k2", Quantity::P, Direction::Upper,
                          2 * (m - k1) - 3 * k2));
        out.push_back(
            rec("cactus", "c <= (m-k1)-2k2", Quantity::C, Direction::Upper, (m - k1) - 2 * k2));
    } else if (family == "halin") {
        if (m >= 6) {  // no segment Halin graphs with fewer than six segments
            out.push_back(rec("halin", "p >= ceil((m+2)/2)", Quantity::P, Direction::Lower,
                              ceil_div(m + 2, 2)));
            out.push_back(rec("halin", "c >= ceil((m+3)/3)", Quantity::C, Direction::Lower,
                              ceil_div(m + 3, 3)));
            out.push_back(rec("halin", "p <= 3m-11", Quantity::P, Direction::Upper, 3 * m - 11));
            out.push_back(rec("halin", "c <= 2m-6", Quantity::C, Direction::Upper, 2 * m - 6));
        }
    } else if (family == "k3free") {
        out.push_back(rec("k3free", "p <= C(m,2)-(m-2)", Quantity::P, Direction::Upper,
                          choose2(m) - (m - 2)));
        out.push_back(
            rec("k3free", "c <= C(m-2,2)", Quantity::C, Direction::Upper, choose2(m - 2)));
    } else if (family == "k3free-trimmed") {
        out.push_back(rec("k3free-trimmed", "p >= ceil((m+4)/2)", Quantity::P, Direction::Lower,
                          ceil_div(m + 4, 2)));
    } else if (family == "max-planar") {
        out.push_back(rec("max-planar", "p >= ceil((m+6)/3)", Quantity::P, Direction::Lower,
                          ceil_div(m + 6, 3)));
        out.push_back(rec("max-planar", "c >= ceil((2m-3)/3)", Quantity::C, Direction::Lower,
                          ceil_div(2 * m - 3, 3)));
    } else if (family == "max-outerplanar") {
        out.push_back(rec("max-outerplanar", "p = c + 2", Quantity::PMinusC, Direction::Equal, 2));
        out.push_back(rec("max-outerplanar", "p >= ceil((m+3)/2)", Quantity::P, Direction::Lower,
                          ceil_div(m + 3, 2)));
        out.push_back(rec("max-outerplanar", "c >= ceil((m-1)/2)", Quantity::C, Direction::Lower,
                          ceil_div(m - 1, 2)));
        out.push_back(rec("max-outerplanar", "p, c upper bounds conjectured linear in m",
                          Quantity::P, Direction::Upper, 0, /*conjecture=*/true));
    } else {
        throw PreconditionError("bound_table: unknown family '" + family + "'");
    }
    return out;
}

namespace {

long long quantity_value(Quantity q, const ArrangementStats& st) {
    switch (q) {
        case Quantity::P: return st.p;
        case Quantity::C: return st.c;
        case Quantity::PMinusC: return st.p - st.c;
        case Quantity::E: return st.e;
        case Quantity::N: return st.n;
        case Quantity::M: return st.m;
    }
    return 0;
}

void apply_records(BoundCheckReport& report, const std::vector<BoundRecord>& records) {
    for (const auto& r : records) {
        if (r.conjecture) continue;
        BoundCheck chk;
        chk.record = r;
        chk.actual = quantity_value(r.quantity, report.stats);
        chk.slack = chk.actual - r.value;
        switch (r.direction) {
            case Direction::Lower: chk.satisfied = chk.slack >= 0; break;
            case Direction::Upper: chk.satisfied = chk.slack <= 0; break;
            case Direction::Equal: chk.satisfied = chk.slack == 0; break;
        }
        report.checks.push_back(std::move(chk));
    }
}

}  // namespace

BoundCheckReport check_instance(const SegmentSet& M) {
    BoundCheckReport report;
    report.stats = stats(M);
    report.families = classify(M);
    report.trimmed = (trim(M) == M);
    const auto& st = report.stats;

    apply_records(report, bound_table("any", st.m, st.k1, st.k2));
    // n <= p + j is relational, not a closed form in (m, k1, k2).
    {
        BoundCheck chk;
        chk.record = rec("any", "n <= p+j", Quantity::N, Direction::Upper, st.p + st.j);
        chk.actual = st.n;
        chk.slack = chk.actual - chk.record.value;
        chk.satisfied = chk.slack <= 0;
        report.checks.push_back(std::move(chk));
    }

    const auto& fam = report.families;
    if (fam.is_tree) apply_records(report, bound_table("tree", st.m, st.k1, st.k2));
    if (fam.is_forest) apply_records(report, bound_table("forest", st.m, st.k1, st.k2));
    if (fam.is_unicyclic) apply_records(report, bound_table("unicyclic", st.m, st.k1, st.k2));
    if (fam.is_cactus) apply_records(report, bound_table("cactus", st.m, st.k1, st.k2));
    if (fam.is_halin) apply_records(report, bound_table("halin", st.m, st.k1, st.k2));
    if (fam.is_k3_free) apply_records(report, bound_table("k3free", st.m, st.k1, st.k2));
    if (fam.is_k3_free && report.trimmed && st.m >= 1)
        apply_records(report, bound_table("k3free-trimmed", st.m, st.k1, st.k2));
    if (fam.is_maximal_planar) apply_records(report, bound_table("max-planar", st.m, st.k1, st.k2));
    if (fam.is_maximal_outerplanar)
        apply_records(report, bound_table("max-outerplanar", st.m, st.k1, st.k2));
    return report;
}

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::P: return "p";
        case Quantity::C: return "c";
        case Quantity::PMinusC: return "p-c";
        case Quantity::E: return "e";
        case Quantity::N: return "n";
        case Quantity::M: return "m";
    }
    return "?";
}

std::string direction_name(Direction d) {
    switch (d) {
        case Direction::Lower: return ">=";
        case Direction::Upper: return "<=";
        case Direction::Equal: return "=";
    }
    return "?";
}

}  // namespace segarr
