#include "monoscroll/curve.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "monoscroll/error.hpp"

namespace monoscroll {

namespace {

BranchData make_branches(const std::vector<int>& exponents) {
    const int top = exponents.back();
    std::vector<int> from_infinity{top};
    for (std::size_t i = 0; i + 1 < exponents.size(); ++i) from_infinity.push_back(top - exponents[i]);
    return {NumericalSemigroup(exponents), NumericalSemigroup(from_infinity)};
}

// Value set of the stalk generated by t^b (b ∈ gens) at a branch with
// semigroup `s`; `sign` is +1 at t = 0 and −1 at t = ∞ (local parameter 1/t).
ValueSet stalk_values(const NumericalSemigroup& s, std::span<const int> gens, int sign) {
    const ValueSet base = s.as_value_set();
    ValueSet out = base.shifted(sign * gens.front());
    for (std::size_t i = 1; i < gens.size(); ++i) out = out.united(base.shifted(sign * gens[i]));
    return out;
}

// dim(F/(F ∩ O)) − dim(O/(F ∩ O)), computed on value sets.
int local_degree(const ValueSet& stalk, const NumericalSemigroup& s) {
    const ValueSet o = s.as_value_set();
    return stalk.count_not_in(o) - o.count_not_in(stalk);
}

int gcd_of(std::span<const int> values) {
    int g = 0;
    for (int v : values) g = std::gcd(g, v);
    return g;
}

int blowup_genus(const NumericalSemigroup& s) {
    const ValueSet t = mu_local(s).blowup_values;
    return static_cast<int>(t.tail_start()) - static_cast<int>(t.elements_in(0, t.tail_start()).size());
}

}  // namespace

MonomialCurve::MonomialCurve(std::vector<int> exponents)
    : exponents_(std::move(exponents)),
      branches_([this] {
          if (exponents_.empty()) throw Error(ErrorKind::NotIncreasing, "no exponents given");
          if (exponents_.front() <= 0) throw Error(ErrorKind::NotIncreasing, "exponents must be positive");
          for (std::size_t i = 1; i < exponents_.size(); ++i)
              if (exponents_[i] <= exponents_[i - 1])
                  throw Error(ErrorKind::NotIncreasing, "exponents must be strictly increasing");
          const int g = gcd_of(exponents_);
          if (g != 1) throw Error(ErrorKind::GcdNotOne, "exponents have gcd " + std::to_string(g), g);
          return make_branches(exponents_);
      }()) {}

MonomialCurve MonomialCurve::reversed() const {
    const int top = exponents_.back();
    std::vector<int> flipped{top};
    for (std::size_t i = 0; i + 1 < exponents_.size(); ++i) flipped.push_back(top - exponents_[i]);
    std::sort(flipped.begin(), flipped.end());
    return MonomialCurve(std::move(flipped));
}

std::string MonomialCurve::to_string() const {
    std::ostringstream out;
    out << "(1";
    for (int a : exponents_) out << ":t^" << a;
    out << ')';
    return out.str();
}

MonomialCurve make_curve(std::vector<int> exponents) { return MonomialCurve(std::move(exponents)); }

MonomialCurve representative_curve(const NumericalSemigroup& s) {
    std::vector<int> exps = s.generators();
    const std::size_t n = exps.size();
    if (n >= 2 && exps[n - 1] == exps[n - 2] + 1) return MonomialCurve(exps);
    if (n == 1) return MonomialCurve(exps);  // S = Z≥0
    const int top = exps.back();
    if (s.contains(top + 1)) {
        exps.push_back(top + 1);
    } else {
        exps.push_back(s.conductor());
        exps.push_back(s.conductor() + 1);
    }
    return MonomialCurve(exps);
}

std::vector<int> canonical_differential_exponents(const MonomialCurve& curve) {
    const auto& br = curve.branches();
    std::vector<int> out;
    // −c−1 must be a gap of S_0 (c ≤ −2) or c+1 a gap of S_∞ (c ≥ 0).
    for (int h : br.at_zero.gaps()) out.push_back(-h - 1);
    for (int h : br.at_infinity.gaps()) out.push_back(h - 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_exponents(const MonomialCurve& curve) {
    if (curve.genus() == 0) throw Error(ErrorKind::GenusZero, "a rational smooth curve has no canonical model");
    return normalize_exponents(canonical_differential_exponents(curve));
}

SheafInvariants sheaf_degree_h0(const MonomialCurve& curve, std::span<const int> gens) {
    if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "sheaf needs at least one generator");
    const auto& br = curve.branches();
    const ValueSet at_zero = stalk_values(br.at_zero, gens, +1);
    const ValueSet at_infinity = stalk_values(br.at_infinity, gens, -1);
    const int degree = local_degree(at_zero, br.at_zero) + local_degree(at_infinity, br.at_infinity);

    // Global sections are Laurent polynomials; the stalks are spanned by
    // monomials, so count the monomials t^c allowed at both ends.
    int h0 = 0;
    for (int c = at_zero.min(); c <= -at_infinity.min(); ++c)
        if (at_zero.contains(c) && at_infinity.contains(-c)) ++h0;
    return {degree, h0};
}

int pencil_degree(const MonomialCurve& curve, int n) {
    if (n == 0) throw Error(ErrorKind::ZeroExponent, "pencil exponent must be nonzero");
    const int gens[] = {0, n};
    return sheaf_degree_h0(curve, gens).degree;
}

int gonality_window(const MonomialCurve& curve) {
    const auto& br = curve.branches();
    return 2 * (br.at_zero.conductor() + br.at_infinity.conductor() + 1);
}

int gonality(const MonomialCurve& curve) {
    const int window = gonality_window(curve);
    int best = std::numeric_limits<int>::max();
    for (int n = 1; n <= window; ++n) best = std::min({best, pencil_degree(curve, n), pencil_degree(curve, -n)});
    return best;
}

bool verify_dualizing_candidate(const MonomialCurve& curve, std::span<const int> gens) {
    const int g = curve.genus();
    const auto inv = sheaf_degree_h0(curve, gens);
    return inv.degree == 2 * g - 2 && inv.h0 == g;
}

std::string CurveAnalysis::class_label() const {
    if (flags.gorenstein) return "G";
    if (flags.nearly_normal) return "NN";
    if (flags.kunz) return "K";
    if (flags.nearly_gorenstein) return "NG";
    return "--";
}

CurveAnalysis analyze(const MonomialCurve& curve) {
    if (curve.genus() == 0) throw Error(ErrorKind::GenusZero, "analysis needs g >= 1");
    CurveAnalysis out;
    out.g = curve.genus();
    out.canonical_exponents = canonical_exponents(curve);
    out.gonality = gonality(curve);

    const auto& br = curve.branches();
    const NumericalSemigroup* branches[] = {&br.at_zero, &br.at_infinity};
    bool kunz = true;
    bool almost = true;
    int conductor_colength = 0;
    for (const auto* s : branches) {
        if (s->genus() == 0) continue;
        const int eta = eta_local(*s);
        const int mu = mu_local(*s).mu;
        out.eta += eta;
        out.mu += mu;
        conductor_colength += s->conductor() - s->genus();
        if (eta > 0) {
            ++out.non_gorenstein_points;
            kunz = kunz && eta == 1;
            almost = almost && mu == 1;
        }
    }

    out.canonical_birational = out.canonical_exponents.size() >= 2 && gcd_of(out.canonical_exponents) == 1;
    out.g_prime = out.canonical_birational ? genus_of_exponent_set(out.canonical_exponents)
                                           : blowup_genus(br.at_zero) + blowup_genus(br.at_infinity);

    out.flags.gorenstein = out.eta == 0;
    out.flags.kunz = kunz;
    out.flags.almost_gorenstein = almost;
    out.flags.nearly_gorenstein = out.mu == 1;
    out.flags.nearly_normal = conductor_colength == 1;
    return out;
}

int genus_of_exponent_set(std::span<const int> set) {
    std::vector<int> normalized = normalize_exponents(set);
    const int k = gcd_of(normalized);
    if (k == 0) return 0;  // a single point
    std::vector<int> exps;
    for (int b : normalized)
        if (b != 0) exps.push_back(b / k);
    return MonomialCurve(std::move(exps)).genus();
}

bool isomorphic_via_canonical(const MonomialCurve& c1, const MonomialCurve& c2) {
    for (const auto* c : {&c1, &c2}) {
        if (c->genus() == 0) throw Error(ErrorKind::GenusZero, c->to_string() + " is smooth");
        if (c->branches().singular_points() != 1)
            throw Error(ErrorKind::NotUnibranchSingle, c->to_string() + " has two singular points");
    }
    return same_up_to_shift_and_reversal(canonical_exponents(c1), canonical_exponents(c2));
}

std::vector<int> normalize_exponents(std::span<const int> set) {
    std::vector<int> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty()) {
        const int lo = out.front();
        for (int& b : out) b -= lo;
    }
    return out;
}

std::vector<int> reverse_exponents(std::span<const int> set) {
    std::vector<int> out = normalize_exponents(set);
    if (out.empty()) return out;
    const int top = out.back();
    for (int& b : out) b = top - b;
    std::sort(out.begin(), out.end());
    return out;
}

bool same_up_to_shift_and_reversal(std::span<const int> a, std::span<const int> b) {
    const auto na = normalize_exponents(a);
    return na == normalize_exponents(b) || na == reverse_exponents(b);
}

}  // namespace monoscroll
