#include <doctest.h>

#include <algorithm>
#include <set>

#include "monoscroll/catalog.hpp"
#include "monoscroll/error.hpp"
#include "monoscroll/scroll.hpp"

using namespace monoscroll;

namespace {

const char* kTinyFixture = R"({
  "name": "tiny", "kind": "surface", "genus": 4,
  "rows": [
    {"curve": [4, 5, 7, 8], "gn": 3, "class": "K", "canonical": [0, 3, 4, 5], "ell": 1, "m": 0},
    {"curve": [3, 7, 8], "gn": 3, "class": "--", "canonical": [0, 1, 3, 4], "ell": 3, "m": 1}
  ]
})";

}  // namespace

TEST_CASE("genus 4 non-Gorenstein catalog") {
    CatalogFilter f;
    f.non_gorenstein = true;
    const auto rows = build_catalog(4, 4, f);
    CHECK(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.genus == 4);
        CHECK_FALSE(r.flags.gorenstein);
        CHECK(r.eta + r.mu + r.g_prime == r.genus);
        CHECK(r.provenance == "computed");
    }
    CHECK(build_catalog(0, 0).size() == 0);
    CHECK(build_catalog(4, 4).size() == 7);
    CHECK_THROWS_AS(build_catalog(4, 17), Error);
}

TEST_CASE("genus 6 threefold rows against the fixture") {
    CatalogFilter f;
    f.non_gorenstein = true;
    f.scroll_dim = 3;
    const auto rows = build_catalog(6, 6, f);
    std::set<std::vector<int>> computed;
    for (const auto& r : rows) {
        CHECK(std::max(r.min_scroll_dimension, 2) == 3);
        computed.insert(NumericalSemigroup(r.exponents).generators());
    }
    const Fixture fx = load_fixture("threefold-g6");
    int matched = 0, flagged = 0;
    for (const auto& row : fx.rows) {
        // the curve's branch at zero identifies the catalog row
        if (computed.contains(NumericalSemigroup(row.curve).generators()))
            ++matched;
        else
            ++flagged;
    }
    CHECK(matched == 3);
    CHECK(flagged == 1);
}

TEST_CASE("catalog is deterministic") {
    CatalogFilter f;
    f.non_gorenstein = true;
    CHECK(render(build_catalog(5, 6, f), Format::Json) == render(build_catalog(5, 6, f), Format::Json));
}

TEST_CASE("singular point filter uses the two-point fixtures") {
    CatalogFilter f;
    f.singular_points = 2;
    const auto rows = build_catalog(4, 4, f);
    // (1:t^2:t^3:t^4:t^5:t^9) is listed at genus 5 but has genus 4
    CHECK(rows.size() == load_fixture("twopoint-g4").rows.size() + 1);
    for (const auto& r : rows) {
        CHECK(r.genus == 4);
        CHECK(r.singular_points == 2);
        CHECK(r.provenance == "fixture");
    }
}

TEST_CASE("audit examples") {
    const auto g4 = audit_fixture("surface-g4");
    CHECK(g4.matched == 4);
    CHECK(g4.flagged.empty());
    CHECK(g4.as_expected());

    const auto g5 = audit_fixture("surface-g5");
    CHECK(g5.as_expected());
    const auto row = std::find_if(g5.flagged.begin(), g5.flagged.end(),
                                  [](const AuditFlag& f) { return f.curve == std::vector<int>{4, 7, 9, 10}; });
    REQUIRE(row != g5.flagged.end());
    REQUIRE(row->discrepancies.size() == 1);
    CHECK(row->discrepancies.front().field == "ell");

    const auto t6 = audit_fixture("threefold-g6");
    REQUIRE_FALSE(t6.flagged.empty());
    CHECK(t6.flagged.front().curve == std::vector<int>{5, 6, 13, 14});
    const auto& d = t6.flagged.front().discrepancies;
    const auto genus = std::find_if(d.begin(), d.end(), [](const Discrepancy& x) { return x.field == "genus"; });
    REQUIRE(genus != d.end());
    CHECK(genus->computed_value == "7");
}

TEST_CASE("every embedded fixture audits as expected") {
    CHECK(fixture_names().size() == 8);
    for (const auto& name : fixture_names()) {
        const auto r = audit_fixture(name);
        CHECK_MESSAGE(r.as_expected(), name);
        CHECK(r.missing_expected.empty());
        CHECK(r.matched + static_cast<int>(r.flagged.size()) == r.rows);
    }
}

TEST_CASE("a regression is distinguished from a known discrepancy") {
    Fixture fx = parse_fixture(kTinyFixture);
    CHECK(fx.rows.size() == 2);
    auto report = audit_fixture(fx);
    CHECK(report.matched == 2);

    fx.rows[0].gn = 4;
    report = audit_fixture(fx);
    CHECK_FALSE(report.as_expected());
    fx.rows[0].expected_flag = {"gn"};
    CHECK(audit_fixture(fx).as_expected());

    fx.rows[1].expected_flag = {"genus"};
    report = audit_fixture(fx);
    CHECK_FALSE(report.as_expected());
    CHECK(report.missing_expected == std::vector<std::size_t>{1});
}

TEST_CASE("rendering") {
    const std::vector<CatalogRow> none;
    const std::string csv = render(none, Format::Csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
    CHECK(csv.rfind("exponents,", 0) == 0);

    CatalogFilter f;
    f.non_gorenstein = true;
    const std::string md = render(build_catalog(4, 4, f), Format::Markdown);
    CHECK(md.rfind("| C | gn | class | C' | structures |", 0) == 0);
    CHECK(md.find("(1:t^4:t^5:t^7:t^8)") != std::string::npos);

    CHECK(render(audit_fixture("surface-g4"), Format::Json).starts_with(R"({"matched":4,"flagged":[]})"));
    CHECK(parse_format("markdown") == Format::Markdown);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("fixture loading errors") {
    try {
        load_fixture("surface-g9");
        FAIL("expected UnknownFixture");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownFixture);
    }
    CHECK_THROWS_AS(load_fixture("/nonexistent/x.json"), Error);
    CHECK_THROWS_AS(parse_fixture("{\"rows\": 3}"), Error);
}

TEST_CASE("catalog row structures sit in the minimal dimension") {
    for (const auto& r : build_catalog(5, 7)) {
        if (r.structures.empty()) continue;
        const int d = std::max(r.min_scroll_dimension, 2);
        for (const auto& s : r.structures) CHECK(static_cast<int>(s.dims.size()) == d);
    }
}
