#include "monoscroll/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "monoscroll/error.hpp"

namespace monoscroll {

namespace {

// Largest sieve we are willing to allocate; the Frobenius number of
// <n_1, ..., n_r> is below n_1 * n_r.
constexpr long long kMaxSieve = 50'000'000;

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::span<const int> generators) {
    if (generators.empty()) throw Error(ErrorKind::EmptyGenerators, "no generators given");
    int g = 0;
    for (int x : generators) {
        if (x <= 0) throw Error(ErrorKind::InvalidArgument, "generators must be positive", x);
        g = std::gcd(g, x);
    }
    if (g != 1) throw Error(ErrorKind::GcdNotOne, "generators have gcd " + std::to_string(g), g);

    const auto [lo, hi] = std::minmax_element(generators.begin(), generators.end());
    const long long bound = static_cast<long long>(*lo) * *hi + 1;
    if (bound > kMaxSieve) throw Error(ErrorKind::BoundExceeded, "generators too large to sieve", bound);

    std::vector<bool> reach(static_cast<std::size_t>(bound), false);
    reach[0] = true;
    for (long long x = 1; x < bound; ++x)
        for (int n : generators)
            if (n <= x && reach[static_cast<std::size_t>(x - n)]) {
                reach[static_cast<std::size_t>(x)] = true;
                break;
            }

    int conductor = 0;
    for (long long x = bound - 1; x >= 0; --x)
        if (!reach[static_cast<std::size_t>(x)]) {
            conductor = static_cast<int>(x) + 1;
            break;
        }
    reach.resize(static_cast<std::size_t>(conductor));
    below_conductor_ = std::move(reach);
    conductor_ = conductor;
    finish();
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
    NumericalSemigroup s;
    int conductor = 0;
    for (int h : gaps) {
        if (h <= 0) throw Error(ErrorKind::InvalidArgument, "gaps must be positive", h);
        conductor = std::max(conductor, h + 1);
    }
    s.below_conductor_.assign(static_cast<std::size_t>(conductor), true);
    for (int h : gaps) s.below_conductor_[static_cast<std::size_t>(h)] = false;
    s.conductor_ = conductor;
    for (int a = 1; a < conductor; ++a) {
        if (!s.contains(a)) continue;
        for (int b = a; a + b < conductor; ++b)
            if (s.contains(b) && !s.contains(a + b))
                throw Error(ErrorKind::InvalidArgument, "complement of the gap set is not additively closed");
    }
    s.finish();
    return s;
}

void NumericalSemigroup::finish() {
    gaps_.clear();
    for (int x = 1; x < conductor_; ++x)
        if (!contains(x)) gaps_.push_back(x);

    multiplicity_ = 1;
    for (int x = 1; x <= conductor_; ++x)
        if (contains(x)) {
            multiplicity_ = x;
            break;
        }

    // Minimal generators are bounded by γ + α.
    generators_.clear();
    for (int x = 1; x <= conductor_ + multiplicity_; ++x) {
        if (!contains(x)) continue;
        bool decomposable = false;
        for (int a = multiplicity_; a <= x / 2 && !decomposable; ++a)
            decomposable = contains(a) && contains(x - a);
        if (!decomposable) generators_.push_back(x);
    }
}

std::vector<int> NumericalSemigroup::elements_below_conductor() const {
    std::vector<int> out;
    for (int x = 0; x < conductor_; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

std::string NumericalSemigroup::to_string() const {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < generators_.size(); ++i) out << (i ? "," : "") << generators_[i];
    out << '>';
    return out.str();
}

KappaSets kappa_sets(const NumericalSemigroup& s) {
    const int gamma = s.frobenius();
    KappaSets out;
    for (int h : s.gaps()) out.k_star.push_back(gamma - h);
    std::sort(out.k_star.begin(), out.k_star.end());
    out.k = ValueSet(out.k_star, gamma + 1);
    for (int a = 0; a <= s.conductor(); ++a)
        if (s.contains(a)) out.s_star.push_back(a);
    return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
    const int gamma = s.frobenius();
    for (int a = 0; a <= gamma; ++a)
        if (s.contains(a) == s.contains(gamma - a)) return false;
    return true;
}

int eta_local(const NumericalSemigroup& s) {
    const auto kappa = kappa_sets(s);
    int count = 0;
    for (int a : kappa.k_star)
        if (!s.contains(a)) ++count;
    return count;
}

BlowupResult mu_local(const NumericalSemigroup& s) {
    const ValueSet k = kappa_sets(s).k;
    ValueSet power = k;
    int steps = 0;
    // 0 ∈ K, so the powers increase; they live in Z≥0 and are cofinite.
    for (;;) {
        ValueSet next = power + k;
        ++steps;
        if (next == power) break;
        power = std::move(next);
    }
    std::vector<int> t;
    for (int a : power.elements_in(0, power.tail_start())) {
        bool absorbs = true;
        for (int b : power.elements_in(0, power.tail_start()))
            if (!power.contains(a + b)) {
                absorbs = false;
                break;
            }
        if (absorbs) t.push_back(a);
    }
    ValueSet blowup(std::move(t), power.tail_start());
    return {blowup.count_not_in(k), std::move(blowup), steps};
}

NumericalSemigroup recover_from_kappa_star(std::span<const int> kstar) {
    if (kstar.empty()) throw Error(ErrorKind::NotAValidKappaStar, "empty set");
    std::set<int> values(kstar.begin(), kstar.end());
    if (!values.contains(0) || *values.begin() < 0)
        throw Error(ErrorKind::NotAValidKappaStar, "set must contain 0 and be non-negative");
    const int gamma = *values.rbegin() + 1;

    std::vector<int> gaps;
    for (int s = 1; s <= gamma; ++s)
        if (values.contains(gamma - s)) gaps.push_back(s);
    NumericalSemigroup out = [&] {
        try {
            return NumericalSemigroup::from_gaps(gaps);
        } catch (const Error&) {
            throw Error(ErrorKind::NotAValidKappaStar, "recovered set is not additively closed");
        }
    }();
    const auto check = kappa_sets(out).k_star;
    if (!std::equal(check.begin(), check.end(), values.begin(), values.end()))
        throw Error(ErrorKind::NotAValidKappaStar, "recovered semigroup has a different K*");
    return out;
}

BlockDecomposition block_decomposition(const NumericalSemigroup& s) {
    BlockDecomposition out;
    for (int x = 1; x < s.conductor(); ++x) {
        if (!s.contains(x)) continue;
        if (!out.blocks.empty() && out.blocks.back().last == x - 1)
            out.blocks.back().last = x;
        else
            out.blocks.push_back({x, x});
    }
    return out;
}

std::vector<NumericalSemigroup> enumerate_genus(int genus, int bound) {
    if (genus < 0) throw Error(ErrorKind::InvalidArgument, "genus must be non-negative", genus);
    if (genus > bound) throw Error(ErrorKind::BoundExceeded, "genus above configured bound", genus);

    // Semigroup tree: children of S remove one minimal generator above γ.
    std::vector<NumericalSemigroup> level{NumericalSemigroup{1}};
    for (int depth = 0; depth < genus; ++depth) {
        std::vector<NumericalSemigroup> next;
        for (const auto& s : level)
            for (int x : s.generators()) {
                if (x <= s.frobenius()) continue;
                std::vector<int> gaps = s.gaps();
                gaps.push_back(x);
                next.push_back(NumericalSemigroup::from_gaps(gaps));
            }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(),
              [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gaps() < b.gaps(); });
    return level;
}

}  // namespace monoscroll
