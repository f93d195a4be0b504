#ifndef MONOSCROLL_CATALOG_HPP
#define MONOSCROLL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "monoscroll/curve.hpp"

namespace monoscroll {

struct StructureSummary {
    std::vector<int> dims;
    int step = 1;
    int ell = 1;
};

struct CatalogRow {
    std::vector<int> exponents;
    int genus = 0;
    int gonality = 0;
    int eta = 0;
    int mu = 0;
    int g_prime = 0;
    int singular_points = 0;
    CurveFlags flags;
    std::string class_label;
    std::vector<int> canonical;
    int min_scroll_dimension = 0;
    /// Structures of dimension max(min_scroll_dimension, 2); empty above 3.
    std::vector<StructureSummary> structures;
    std::string provenance = "computed";  ///< or "fixture"
};

/// Full row for one curve.
CatalogRow catalog_row(const MonomialCurve& curve, std::string provenance = "computed");

struct CatalogFilter {
    bool non_gorenstein = false;
    /// Keeps rows whose max(min_scroll_dimension, 2) equals this value.
    std::optional<int> scroll_dim;
    /// 1 enumerates semigroups; 2 takes the two-point fixture curves.
    std::optional<int> singular_points;
};

/// One row per semigroup of each genus in [genus_lo, genus_hi] (one singular
/// point) or per fixture curve (two points). Throws BoundExceeded above the
/// enumeration bound. Rows are sorted by genus, then by gap set.
std::vector<CatalogRow> build_catalog(int genus_lo, int genus_hi, const CatalogFilter& filter = {});

struct FixtureRow {
    std::vector<int> curve;
    int gn = 0;
    std::optional<std::string> class_label;
    std::vector<int> canonical;  ///< as printed, may be unordered or negative
    std::optional<int> ell;
    std::optional<int> m;
    std::optional<std::vector<int>> mn;
    std::optional<int> delta_zero;
    std::optional<int> delta_infinity;
    std::vector<std::string> expected_flag;  ///< fields known to disagree
};

struct Fixture {
    std::string name;
    std::string kind;  ///< surface | twopoint | threefold
    int genus = 0;
    std::vector<FixtureRow> rows;
};

struct EmbeddedFixture {
    const char* name;
    const char* text;
};

/// Tables compiled into the library, sorted by name.
const std::vector<EmbeddedFixture>& embedded_fixtures();
std::vector<std::string> fixture_names();
/// Embedded fixture by name, or a JSON file when `name` ends in ".json".
/// Throws UnknownFixture.
Fixture load_fixture(const std::string& name);
Fixture parse_fixture(const std::string& json_text);

struct Discrepancy {
    std::string field;
    std::string fixture_value;
    std::string computed_value;
};

struct AuditFlag {
    std::size_t row = 0;  ///< zero-based index into the fixture
    std::vector<int> curve;
    std::vector<Discrepancy> discrepancies;
    bool expected = false;  ///< discrepant fields equal the row's expected_flag
};

struct AuditReport {
    std::string fixture;
    int rows = 0;
    int matched = 0;
    std::vector<AuditFlag> flagged;
    /// Rows with expected_flag that nonetheless matched.
    std::vector<std::size_t> missing_expected;

    /// Every flag is pre-registered and every pre-registered row is flagged.
    bool as_expected() const;
};

AuditReport audit_fixture(const Fixture& fixture);
AuditReport audit_fixture(const std::string& name);

enum class Format { Json, Csv, Markdown };
/// Throws InvalidArgument on an unknown name; "md" is accepted for markdown.
Format parse_format(const std::string& name);

std::string render(const std::vector<CatalogRow>& rows, Format format);
std::string render(const AuditReport& report, Format format);
std::string render(const CatalogRow& row, Format format);

}  // namespace monoscroll

#endif  // MONOSCROLL_CATALOG_HPP
