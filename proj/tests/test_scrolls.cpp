#include <doctest.h>

#include <set>

#include "monoscroll/curve.hpp"
#include "monoscroll/error.hpp"
#include "monoscroll/scroll.hpp"
#include "monoscroll/semigroup.hpp"
#include "oracles.hpp"

using namespace monoscroll;

namespace {

using Blocks = std::vector<std::vector<int>>;
std::vector<int> v(std::initializer_list<int> x) { return x; }

std::set<std::vector<int>> dims_of(const std::vector<ScrollStructure>& ss) {
    std::set<std::vector<int>> out;
    for (const auto& s : ss) out.insert(s.type().dims);
    return out;
}

}  // namespace

TEST_CASE("run_decomposition") {
    CHECK(run_decomposition(v({0, 2, 3, 4, 5}), 1) == Blocks{{0}, {2, 3, 4, 5}});
    CHECK(run_decomposition(v({0, 2, 3, 4, 5}), 2) == Blocks{{0, 2, 4}, {3, 5}});
    CHECK(run_decomposition(v({0, 1, 2, 3}), 1) == Blocks{{0, 1, 2, 3}});
    CHECK_THROWS_AS(run_decomposition(v({0, 1}), 0), Error);
}

TEST_CASE("scroll_structures examples") {
    const auto a = scroll_structures(v({0, 1, 3, 4}), 2);
    REQUIRE_FALSE(a.empty());
    CHECK(a.front().step == 1);
    CHECK(a.front().blocks == Blocks{{0, 1}, {3, 4}});
    CHECK(a.front().type().dims == v({1, 1}));

    CHECK(scroll_structures(v({0, 2, 5, 6, 7, 8}), 2).empty());
    const auto b = scroll_structures(v({0, 2, 5, 6, 7, 8}), 3);
    REQUIRE_FALSE(b.empty());
    CHECK(b.front().step == 1);
    CHECK(b.front().blocks == Blocks{{0}, {2}, {5, 6, 7, 8}});
    CHECK(b.front().type().to_string() == "S_{0,0,3}");

    const auto c = scroll_structures(v({0, 1, 2, 3}), 2);
    REQUIRE_FALSE(c.empty());
    CHECK(c.front().step == 1);
    CHECK(c.front().blocks == Blocks{{0, 1, 2}, {3}});
    CHECK(c.front().type().to_string() == "S_{0,2}");

    CHECK_THROWS_AS(scroll_structures(v({0, 1}), 3), Error);
    CHECK_THROWS_AS(scroll_structures(v({0, 1}), 0), Error);
}

TEST_CASE("both genus-5 structures of {0,2,3,4,5} are reported") {
    std::set<std::pair<int, int>> m_ell;
    for (const auto& s : scroll_structures(v({0, 2, 3, 4, 5}), 2)) m_ell.emplace(s.type().m(), s.ell);
    CHECK(m_ell.contains({0, 1}));
    CHECK(m_ell.contains({1, 2}));
}

TEST_CASE("min_scroll_dimension") {
    CHECK(min_scroll_dimension(v({0, 1, 2, 3})) == 1);
    CHECK(min_scroll_dimension(v({0, 3, 4, 5})) == 2);
    CHECK(min_scroll_dimension(v({0, 2, 5, 6, 7, 8})) == 3);
    CHECK(min_scroll_dimension(v({7})) == 1);
}

TEST_CASE("structure_ell") {
    const auto s = scroll_structures(v({0, 2, 3, 4, 5}), 2);
    bool found = false;
    for (const auto& x : s)
        if (x.step == 2) {
            CHECK(structure_ell(x) == 2);
            found = true;
        }
    CHECK(found);
    const auto h = scroll_structures(v({0, 2, 4, 6}), 1);
    REQUIRE(h.size() == 1);
    CHECK(h.front().kappa == 2);
    CHECK(structure_ell(h.front()) == 1);
}

TEST_CASE("minor_check") {
    CHECK(minor_check(v({0, 1, 3, 4}), ScrollStructure{1, {{0, 1}, {3, 4}}, 1, 1}));
    CHECK_FALSE(minor_check(v({0, 1, 3, 5}), ScrollStructure{1, {{0, 1}, {3, 5}}, 1, 1}));
    CHECK(minor_check(v({0, 1, 2}), ScrollStructure{1, {{0, 1, 2}}, 1, 1}));
    CHECK_FALSE(minor_check(v({0, 1, 3, 4}), ScrollStructure{1, {{0, 1}}, 1, 1}));
}

TEST_CASE("structures agree with the partition oracle on canonical sets") {
    for (int g = 4; g <= 8; ++g)
        for (const auto& s : enumerate_genus(g)) {
            const auto k = canonical_exponents(representative_curve(s));
            for (int d = 1; d <= std::min<int>(3, static_cast<int>(k.size())); ++d) {
                const auto ss = scroll_structures(k, d);
                CHECK(dims_of(ss) == oracle::ap_partitions(k, d));
                for (const auto& x : ss) {
                    CHECK(minor_check(k, x));
                    CHECK(x.step % x.kappa == 0);
                    CHECK(x.ell == x.step / x.kappa);
                    const auto t = x.type();
                    CHECK(t.ambient_dimension() + 1 == static_cast<int>(k.size()));
                }
            }
            int least = 0;
            for (int d = 1; d <= static_cast<int>(k.size()) && !least; ++d)
                if (!oracle::ap_partitions(k, d).empty()) least = d;
            CHECK(min_scroll_dimension(k) == least);
        }
}

TEST_CASE("scroll type bookkeeping") {
    const ScrollType t{{0, 2}};
    CHECK(t.e() == 2);
    CHECK(t.d() == 2);
    CHECK(t.ambient_dimension() == 3);
    CHECK_FALSE(t.smooth());
    CHECK(ScrollType{{1, 2}}.smooth());
}
