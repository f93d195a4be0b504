#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "monoscroll/catalog.hpp"
#include "monoscroll/chow.hpp"
#include "monoscroll/error.hpp"
#include "monoscroll/scroll.hpp"

namespace {

const CLI::IsMember kFormats({"json", "csv", "md", "markdown"});

using namespace monoscroll;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDiscrepancy = 3;

std::pair<int, int> parse_genus_range(const std::string& text) {
    static const std::regex pattern(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw CLI::ValidationError("--genus", "expected G or LO..HI");
    const int lo = std::stoi(m[1]);
    const int hi = m[2].matched ? std::stoi(m[2]) : lo;
    if (hi < lo) throw CLI::ValidationError("--genus", "empty range");
    return {lo, hi};
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

std::string list_text(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

std::string blocks_text(const ScrollStructure& s) {
    std::string out;
    for (const auto& b : s.blocks) {
        out += "{";
        for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
        out += "}";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants, canonical models and scroll geometry of rational monomial curves"};
    app.require_subcommand(1);

    std::vector<int> exponents;
    std::string format = "json";
    std::string out_path;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full invariants of one curve");
    analyze_cmd->add_option("--exponents", exponents, "Exponents a_1 < ... < a_n")->delimiter(',')->required();
    analyze_cmd->add_option("--format", format, "json | md | csv")->check(kFormats);

    auto* canonical_cmd = app.add_subcommand("canonical", "Exponents of the canonical model");
    canonical_cmd->add_option("--exponents", exponents)->delimiter(',')->required();

    auto* gonality_cmd = app.add_subcommand("gonality", "Least monomial pencil degree");
    gonality_cmd->add_option("--exponents", exponents)->delimiter(',')->required();

    int max_dim = 3;
    auto* scrolls_cmd = app.add_subcommand("scrolls", "Scroll structures of the canonical model");
    scrolls_cmd->add_option("--exponents", exponents)->delimiter(',')->required();
    scrolls_cmd->add_option("--max-dim", max_dim, "Largest scroll dimension to list")->check(CLI::PositiveNumber);

    std::string genus_text;
    bool non_gorenstein = false;
    std::optional<int> scroll_dim;
    std::optional<int> singular_points;
    auto* catalog_cmd = app.add_subcommand("catalog", "Enumerate curves by genus");
    catalog_cmd->add_option("--genus", genus_text, "G or LO..HI")->required();
    catalog_cmd->add_flag("--non-gorenstein", non_gorenstein);
    catalog_cmd->add_option("--scroll-dim", scroll_dim, "Keep rows with max(min scroll dim, 2) = D");
    catalog_cmd->add_option("--singular-points", singular_points, "1 (default) or 2")->check(CLI::Range(1, 2));
    catalog_cmd->add_option("--format", format, "json | csv | md")->check(kFormats);
    catalog_cmd->add_option("--out", out_path, "Write to FILE instead of stdout");

    std::string fixture;
    bool strict = false;
    auto* audit_cmd = app.add_subcommand("audit", "Recompute a stored table and report discrepancies");
    audit_cmd->add_option("--fixture", fixture, "Fixture name or JSON path")->required();
    audit_cmd->add_flag("--strict", strict, "Exit 3 on any flagged row");
    audit_cmd->add_option("--format", format, "json | csv | md")->check(kFormats);

    auto* formula_cmd = app.add_subcommand("formula", "Closed formulas on scrolls");
    formula_cmd->require_subcommand(1);
    long long d = 0, e = 0, h = 0, f = 0;
    auto* chi_cmd = formula_cmd->add_subcommand("chi", "Euler characteristic of O_S(hH + fF)");
    chi_cmd->set_help_flag("--help", "Print this help message and exit");  // frees --h
    chi_cmd->add_option("--d", d)->required();
    chi_cmd->add_option("--e", e)->required();
    chi_cmd->add_option("--h", h)->required();
    chi_cmd->add_option("--f", f)->required();
    long long u = 0, v = 0, w = 0, z = 0;
    auto* pa_cmd = formula_cmd->add_subcommand("pa-bundle", "Arithmetic genus from rank-2 Chern data on a threefold");
    pa_cmd->add_option("--e", e)->required();
    pa_cmd->add_option("--u", u)->required();
    pa_cmd->add_option("--v", v)->required();
    pa_cmd->add_option("--w", w)->required();
    pa_cmd->add_option("--z", z)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForAllHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            std::cout << render(catalog_row(make_curve(exponents)), parse_format(format));
        } else if (*canonical_cmd) {
            std::cout << list_text(canonical_exponents(make_curve(exponents))) << '\n';
        } else if (*gonality_cmd) {
            std::cout << gonality(make_curve(exponents)) << '\n';
        } else if (*scrolls_cmd) {
            const auto canonical = canonical_exponents(make_curve(exponents));
            std::cout << "canonical " << list_text(canonical) << " min_dim " << min_scroll_dimension(canonical)
                      << '\n';
            for (int dim = 1; dim <= std::min<int>(max_dim, static_cast<int>(canonical.size())); ++dim)
                for (const auto& s : scroll_structures(canonical, dim))
                    std::cout << "d=" << dim << ' ' << s.type().to_string() << " step=" << s.step
                              << " ell=" << s.ell << " blocks=" << blocks_text(s) << '\n';
        } else if (*catalog_cmd) {
            const auto [lo, hi] = parse_genus_range(genus_text);
            const CatalogFilter filter{non_gorenstein, scroll_dim, singular_points};
            write_output(render(build_catalog(lo, hi, filter), parse_format(format)), out_path);
        } else if (*audit_cmd) {
            const AuditReport report = audit_fixture(fixture);
            std::cout << render(report, parse_format(format));
            if (strict && !report.flagged.empty()) return kExitDiscrepancy;
        } else if (*chi_cmd) {
            const Ambient a = Ambient::balanced(static_cast<int>(d), static_cast<int>(e));
            std::cout << euler_characteristic(a, {h, f}) << '\n';
        } else if (*pa_cmd) {
            const Ambient a = Ambient::balanced(3, static_cast<int>(e));
            std::cout << pa_from_bundle(a, {u, v, w, z}) << '\n';
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << err.what() << '\n';
        return kExitUsage;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
