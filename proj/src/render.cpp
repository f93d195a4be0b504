#include <sstream>

#include <json.hpp>

#include "monoscroll/catalog.hpp"
#include "monoscroll/scroll.hpp"

namespace monoscroll {

namespace {

using ojson = nlohmann::ordered_json;

std::string joined(const std::vector<int>& v, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
    return out.str();
}

std::string type_name(const StructureSummary& s) { return ScrollType{s.dims}.to_string(); }

std::string structures_text(const CatalogRow& row, const char* sep) {
    std::string out;
    for (const auto& s : row.structures) {
        if (!out.empty()) out += sep;
        out += type_name(s) + " r=" + std::to_string(s.step) + " l=" + std::to_string(s.ell);
    }
    return out;
}

std::string curve_text(const std::vector<int>& exps) {
    std::string out = "(1";
    for (int a : exps) out += ":t^" + std::to_string(a);
    return out + ")";
}

ojson row_json(const CatalogRow& row) {
    ojson flags = {{"gorenstein", row.flags.gorenstein},
                   {"kunz", row.flags.kunz},
                   {"almost_gorenstein", row.flags.almost_gorenstein},
                   {"nearly_gorenstein", row.flags.nearly_gorenstein},
                   {"nearly_normal", row.flags.nearly_normal}};
    ojson structures = ojson::array();
    for (const auto& s : row.structures) structures.push_back({{"dims", s.dims}, {"step", s.step}, {"ell", s.ell}});
    return {{"exponents", row.exponents},
            {"genus", row.genus},
            {"gonality", row.gonality},
            {"eta", row.eta},
            {"mu", row.mu},
            {"g_prime", row.g_prime},
            {"flags", flags},
            {"class", row.class_label},
            {"canonical", row.canonical},
            {"min_scroll_dimension", row.min_scroll_dimension},
            {"singular_points", row.singular_points},
            {"provenance", row.provenance},
            {"structures", structures}};
}

const char* kCsvHeader =
    "exponents,genus,gonality,eta,mu,g_prime,class,gorenstein,kunz,almost_gorenstein,nearly_gorenstein,"
    "nearly_normal,canonical,min_scroll_dimension,singular_points,structures,provenance\n";

void csv_line(std::ostringstream& out, const CatalogRow& r) {
    out << joined(r.exponents, " ") << ',' << r.genus << ',' << r.gonality << ',' << r.eta << ',' << r.mu << ','
        << r.g_prime << ',' << r.class_label << ',' << r.flags.gorenstein << ',' << r.flags.kunz << ','
        << r.flags.almost_gorenstein << ',' << r.flags.nearly_gorenstein << ',' << r.flags.nearly_normal << ','
        << joined(r.canonical, " ") << ',' << r.min_scroll_dimension << ',' << r.singular_points << ','
        << structures_text(r, "; ") << ',' << r.provenance << '\n';
}

const char* kMdHeader = "| C | gn | class | C' | structures |\n|---|---|---|---|---|\n";

void md_line(std::ostringstream& out, const CatalogRow& r) {
    out << "| " << curve_text(r.exponents) << " | " << r.gonality << " | " << r.class_label << " | "
        << curve_text(std::vector<int>(r.canonical.begin() + (r.canonical.empty() ? 0 : 1), r.canonical.end()))
        << " | " << structures_text(r, "; ") << " |\n";
}

}  // namespace

std::string render(const std::vector<CatalogRow>& rows, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Json: {
            ojson arr = ojson::array();
            for (const auto& r : rows) arr.push_back(row_json(r));
            out << arr.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << kCsvHeader;
            for (const auto& r : rows) csv_line(out, r);
            break;
        case Format::Markdown:
            out << kMdHeader;
            for (const auto& r : rows) md_line(out, r);
            break;
    }
    return out.str();
}

std::string render(const CatalogRow& row, Format format) {
    if (format == Format::Json) return row_json(row).dump(2) + '\n';
    return render(std::vector<CatalogRow>{row}, format);
}

std::string render(const AuditReport& report, Format format) {
    std::ostringstream out;
    switch (format) {
        case Format::Json: {
            ojson flagged = ojson::array();
            for (const auto& f : report.flagged) {
                ojson fields = ojson::array();
                for (const auto& d : f.discrepancies)
                    fields.push_back({{"field", d.field}, {"fixture", d.fixture_value}, {"computed", d.computed_value}});
                flagged.push_back({{"row", f.row}, {"curve", f.curve}, {"expected", f.expected}, {"fields", fields}});
            }
            ojson j = {{"matched", report.matched}, {"flagged", flagged}};
            out << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "row,curve,field,fixture,computed,expected\n";
            for (const auto& f : report.flagged)
                for (const auto& d : f.discrepancies)
                    out << f.row << ',' << joined(f.curve, " ") << ',' << d.field << ",\"" << d.fixture_value
                        << "\",\"" << d.computed_value << "\"," << f.expected << '\n';
            break;
        case Format::Markdown:
            out << "fixture " << report.fixture << ": " << report.matched << "/" << report.rows << " matched\n\n";
            out << "| row | C | field | fixture | computed | expected |\n|---|---|---|---|---|---|\n";
            for (const auto& f : report.flagged)
                for (const auto& d : f.discrepancies)
                    out << "| " << f.row << " | " << curve_text(f.curve) << " | " << d.field << " | "
                        << d.fixture_value << " | " << d.computed_value << " | " << (f.expected ? "yes" : "no")
                        << " |\n";
            break;
    }
    return out.str();
}

}  // namespace monoscroll
