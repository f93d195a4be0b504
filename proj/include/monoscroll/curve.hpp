#ifndef MONOSCROLL_CURVE_HPP
#define MONOSCROLL_CURVE_HPP

#include <span>
#include <string>
#include <vector>

#include "monoscroll/semigroup.hpp"

namespace monoscroll {

/// Branch semigroups of a rational monomial curve at its two possibly
/// singular points t = 0 and t = ∞.
struct BranchData {
    NumericalSemigroup at_zero;
    NumericalSemigroup at_infinity;

    int delta_zero() const noexcept { return at_zero.genus(); }
    int delta_infinity() const noexcept { return at_infinity.genus(); }
    int genus() const noexcept { return delta_zero() + delta_infinity(); }
    int singular_points() const noexcept { return (delta_zero() > 0) + (delta_infinity() > 0); }
};

/// The curve t ↦ (1 : t^{a_1} : … : t^{a_n}) in P^n.
class MonomialCurve {
public:
    /// Throws NotIncreasing or GcdNotOne.
    explicit MonomialCurve(std::vector<int> exponents);
    MonomialCurve(std::initializer_list<int> exponents) : MonomialCurve(std::vector<int>(exponents)) {}

    const std::vector<int>& exponents() const noexcept { return exponents_; }
    const BranchData& branches() const noexcept { return branches_; }
    int genus() const noexcept { return branches_.genus(); }

    /// The same curve under t ↦ 1/t.
    MonomialCurve reversed() const;

    std::string to_string() const;  // "(1:t^4:t^5:t^7:t^8)"

private:
    std::vector<int> exponents_;
    BranchData branches_;
};

MonomialCurve make_curve(std::vector<int> exponents);

/// Curve with the single singular point S at t = 0: the minimal generators,
/// extended so that the two top exponents are consecutive (which makes ∞ smooth).
MonomialCurve representative_curve(const NumericalSemigroup& s);

/// Exponents c of the monomial differentials t^c dt spanning H^0(ω):
/// −c−1 ∉ S_0 and c+1 ∉ S_∞. Exactly g values, sorted.
std::vector<int> canonical_differential_exponents(const MonomialCurve& curve);

/// Exponents of the canonical model, normalized to minimum 0. Throws GenusZero.
std::vector<int> canonical_exponents(const MonomialCurve& curve);

struct SheafInvariants {
    int degree;
    int h0;
};

/// Degree and h^0 of the sheaf O⟨t^b : b ∈ gens⟩. Throws EmptyGenerators.
SheafInvariants sheaf_degree_h0(const MonomialCurve& curve, std::span<const int> gens);

/// Degree of O⟨1, t^n⟩. Throws ZeroExponent.
int pencil_degree(const MonomialCurve& curve, int n);

/// Half-width of the pencil search window, 2(β_0 + β_∞ + 1).
int gonality_window(const MonomialCurve& curve);

/// Least pencil degree over 0 < |n| ≤ gonality_window(curve). For curves with
/// two singular points this is the monomial-pencil gonality.
int gonality(const MonomialCurve& curve);

/// True iff the generated sheaf has degree 2g − 2 and h^0 = g.
bool verify_dualizing_candidate(const MonomialCurve& curve, std::span<const int> gens);

struct CurveFlags {
    bool gorenstein = false;
    bool kunz = false;
    bool almost_gorenstein = false;
    bool nearly_gorenstein = false;
    bool nearly_normal = false;

    friend bool operator==(const CurveFlags&, const CurveFlags&) = default;
};

struct CurveAnalysis {
    int g = 0;
    int g_prime = 0;
    int eta = 0;
    int mu = 0;
    int gonality = 0;
    int non_gorenstein_points = 0;
    /// gcd of the canonical exponents is 1, so C → C' is birational and g'
    /// comes from C' itself; otherwise g' is the genus of the blowup along ω.
    bool canonical_birational = false;
    std::vector<int> canonical_exponents;
    CurveFlags flags;

    /// "NN", "K", "NG", "--" (or "G" for Gorenstein curves), most specific first.
    std::string class_label() const;
};

/// Throws GenusZero.
CurveAnalysis analyze(const MonomialCurve& curve);

/// Genus of the curve with exponents `set ∖ {0}` after dividing by their gcd.
int genus_of_exponent_set(std::span<const int> set);

/// Both curves must have one singular point (either end) and g ≥ 1; throws
/// NotUnibranchSingle or GenusZero otherwise.
bool isomorphic_via_canonical(const MonomialCurve& c1, const MonomialCurve& c2);

/// Normalize to minimum 0; returns the sorted set.
std::vector<int> normalize_exponents(std::span<const int> set);
/// {max − b}.
std::vector<int> reverse_exponents(std::span<const int> set);
/// Equal after normalization, possibly after reversal.
bool same_up_to_shift_and_reversal(std::span<const int> a, std::span<const int> b);

}  // namespace monoscroll

#endif  // MONOSCROLL_CURVE_HPP
