#include "monoscroll/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "monoscroll/error.hpp"
#include "monoscroll/scroll.hpp"
#include "monoscroll/semigroup.hpp"

namespace monoscroll {

namespace {

using nlohmann::json;

std::string list_string(const std::vector<int>& v) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ']';
    return out.str();
}

template <class T>
std::string pairs_string(const std::set<T>& values) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& v : values) {
        out << (first ? "" : " ") << v;
        first = false;
    }
    out << '}';
    return out.str();
}

template <class T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    return j.at(key).get<T>();
}

bool keep(const CatalogRow& row, const CatalogFilter& f) {
    if (f.non_gorenstein && row.flags.gorenstein) return false;
    if (f.scroll_dim && std::max(row.min_scroll_dimension, 2) != *f.scroll_dim) return false;
    return true;
}

std::vector<StructureSummary> summarize(const std::vector<ScrollStructure>& structures) {
    std::vector<StructureSummary> out;
    for (const auto& s : structures) out.push_back({s.type().dims, s.step, s.ell});
    return out;
}

}  // namespace

CatalogRow catalog_row(const MonomialCurve& curve, std::string provenance) {
    const CurveAnalysis a = analyze(curve);
    CatalogRow row;
    row.exponents = curve.exponents();
    row.genus = a.g;
    row.gonality = a.gonality;
    row.eta = a.eta;
    row.mu = a.mu;
    row.g_prime = a.g_prime;
    row.singular_points = curve.branches().singular_points();
    row.flags = a.flags;
    row.class_label = a.class_label();
    row.canonical = a.canonical_exponents;
    row.min_scroll_dimension = min_scroll_dimension(a.canonical_exponents);
    const int d = std::max(row.min_scroll_dimension, 2);
    if (d <= 3 && d <= static_cast<int>(row.canonical.size()))
        row.structures = summarize(scroll_structures(row.canonical, d));
    row.provenance = std::move(provenance);
    return row;
}

std::vector<CatalogRow> build_catalog(int genus_lo, int genus_hi, const CatalogFilter& filter) {
    if (genus_hi > kDefaultGenusBound)
        throw Error(ErrorKind::BoundExceeded, "genus above the enumeration bound", genus_hi);
    if (genus_lo < 0 || genus_lo > genus_hi) throw Error(ErrorKind::InvalidArgument, "bad genus range");
    std::vector<CatalogRow> rows;
    const int points = filter.singular_points.value_or(1);
    if (points == 1) {
        for (int g = std::max(genus_lo, 1); g <= genus_hi; ++g)
            for (const auto& s : enumerate_genus(g)) {
                auto row = catalog_row(representative_curve(s));
                if (keep(row, filter)) rows.push_back(std::move(row));
            }
    } else if (points == 2) {
        // Two-point curves are not enumerable without further constraints.
        for (const auto& name : fixture_names()) {
            const Fixture fx = load_fixture(name);
            if (fx.kind != "twopoint") continue;
            std::set<std::vector<int>> seen;
            for (const auto& r : fx.rows) {
                const MonomialCurve curve(r.curve);
                if (curve.genus() < genus_lo || curve.genus() > genus_hi || !seen.insert(r.curve).second) continue;
                auto row = catalog_row(curve, "fixture");
                if (keep(row, filter)) rows.push_back(std::move(row));
            }
        }
        std::stable_sort(rows.begin(), rows.end(),
                         [](const CatalogRow& a, const CatalogRow& b) { return a.genus < b.genus; });
    } else {
        throw Error(ErrorKind::InvalidArgument, "singular points must be 1 or 2", points);
    }
    return rows;
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& f : embedded_fixtures()) out.emplace_back(f.name);
    return out;
}

Fixture parse_fixture(const std::string& json_text) try {
    const json j = json::parse(json_text);
    Fixture fx;
    fx.name = j.at("name").get<std::string>();
    fx.kind = j.at("kind").get<std::string>();
    fx.genus = j.at("genus").get<int>();
    for (const auto& r : j.at("rows")) {
        FixtureRow row;
        row.curve = r.at("curve").get<std::vector<int>>();
        row.gn = r.at("gn").get<int>();
        row.canonical = r.at("canonical").get<std::vector<int>>();
        row.class_label = optional_field<std::string>(r, "class");
        row.ell = optional_field<int>(r, "ell");
        row.m = optional_field<int>(r, "m");
        row.mn = optional_field<std::vector<int>>(r, "mn");
        row.delta_zero = optional_field<int>(r, "delta_zero");
        row.delta_infinity = optional_field<int>(r, "delta_infinity");
        row.expected_flag = optional_field<std::vector<std::string>>(r, "expected_flag").value_or(std::vector<std::string>{});
        fx.rows.push_back(std::move(row));
    }
    return fx;
} catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed fixture: ") + e.what());
}

Fixture load_fixture(const std::string& name) {
    if (name.ends_with(".json")) {
        std::ifstream in(name);
        if (!in) throw Error(ErrorKind::UnknownFixture, "cannot open " + name);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_fixture(buf.str());
    }
    for (const auto& f : embedded_fixtures())
        if (name == f.name) return parse_fixture(f.text);
    std::string known;
    for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::UnknownFixture, "no fixture '" + name + "' (known: " + known + ")");
}

bool AuditReport::as_expected() const {
    return missing_expected.empty() &&
           std::all_of(flagged.begin(), flagged.end(), [](const AuditFlag& f) { return f.expected; });
}

AuditReport audit_fixture(const Fixture& fx) {
    AuditReport report;
    report.fixture = fx.name;
    report.rows = static_cast<int>(fx.rows.size());

    for (std::size_t i = 0; i < fx.rows.size(); ++i) {
        const FixtureRow& r = fx.rows[i];
        std::vector<Discrepancy> found;
        auto check = [&](const std::string& field, bool ok, const std::string& want, const std::string& got) {
            if (!ok) found.push_back({field, want, got});
        };

        const MonomialCurve curve(r.curve);
        const CatalogRow row = catalog_row(curve, "fixture");
        check("genus", row.genus == fx.genus, std::to_string(fx.genus), std::to_string(row.genus));
        check("canonical", same_up_to_shift_and_reversal(row.canonical, r.canonical), list_string(r.canonical),
              list_string(row.canonical));
        check("gn", row.gonality == r.gn, std::to_string(r.gn), std::to_string(row.gonality));
        if (r.class_label)
            check("class", row.class_label == *r.class_label, *r.class_label, row.class_label);
        if (r.delta_zero)
            check("delta_zero", curve.branches().delta_zero() == *r.delta_zero, std::to_string(*r.delta_zero),
                  std::to_string(curve.branches().delta_zero()));
        if (r.delta_infinity)
            check("delta_infinity", curve.branches().delta_infinity() == *r.delta_infinity,
                  std::to_string(*r.delta_infinity), std::to_string(curve.branches().delta_infinity()));

        const int size = static_cast<int>(row.canonical.size());
        if (fx.kind == "threefold") {
            check("min_dim", row.min_scroll_dimension == 3, "3", std::to_string(row.min_scroll_dimension));
            if (r.mn) {
                std::set<std::string> mns;
                if (size >= 3)
                    for (const auto& s : scroll_structures(row.canonical, 3)) {
                        const auto dims = s.type().dims;
                        mns.insert(std::to_string(dims[0]) + std::to_string(dims[1]));
                    }
                const std::string want = std::to_string((*r.mn)[0]) + std::to_string((*r.mn)[1]);
                check("mn", mns.contains(want), want, pairs_string(mns));
            }
        } else if (r.m) {
            std::set<std::pair<int, int>> pairs;
            std::set<int> ms;
            std::set<std::string> shown;
            if (size >= 2)
                for (const auto& s : scroll_structures(row.canonical, 2)) {
                    pairs.emplace(s.type().m(), s.ell);
                    ms.insert(s.type().m());
                    shown.insert("(" + std::to_string(s.type().m()) + "," + std::to_string(s.ell) + ")");
                }
            if (!ms.contains(*r.m)) {
                check("m", false, std::to_string(*r.m), pairs_string(ms));
            } else if (r.ell) {
                check("ell", pairs.contains({*r.m, *r.ell}),
                      "(" + std::to_string(*r.m) + "," + std::to_string(*r.ell) + ")", pairs_string(shown));
            }
        }

        if (found.empty()) {
            ++report.matched;
            if (!r.expected_flag.empty()) report.missing_expected.push_back(i);
            continue;
        }
        std::vector<std::string> fields;
        for (const auto& d : found) fields.push_back(d.field);
        auto wanted = r.expected_flag;
        std::sort(fields.begin(), fields.end());
        std::sort(wanted.begin(), wanted.end());
        report.flagged.push_back({i, r.curve, std::move(found), fields == wanted});
    }
    return report;
}

AuditReport audit_fixture(const std::string& name) { return audit_fixture(load_fixture(name)); }

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "md" || name == "markdown") return Format::Markdown;
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + name + "'");
}

}  // namespace monoscroll
