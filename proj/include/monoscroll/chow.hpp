#ifndef MONOSCROLL_CHOW_HPP
#define MONOSCROLL_CHOW_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoscroll {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A rational normal scroll S_{m_1 … m_d} viewed as P(O(m_1) ⊕ … ⊕ O(m_d)).
class Ambient {
public:
    explicit Ambient(std::vector<int> dims);
    /// Dims as equal as possible with the given sum.
    static Ambient balanced(int d, int e);

    const std::vector<int>& dims() const noexcept { return dims_; }
    int d() const noexcept { return static_cast<int>(dims_.size()); }
    int e() const noexcept { return e_; }
    int ambient_dimension() const noexcept { return e_ + d() - 1; }
    bool smooth() const noexcept { return dims_.front() >= 1; }

    std::string to_string() const;

private:
    std::vector<int> dims_;
    int e_;
};

/// The class hH + fF in Pic(S) = ZH ⊕ ZF.
struct DivisorClass {
    Integer h;
    Integer f;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Element of A(S) ⊗ Q = Q[H, F]/(F², H^{d+1}, H^d F, H^d − e H^{d−1} F),
/// kept in the normal form Σ a_i H^i + Σ b_i H^i F with 0 ≤ i < d.
class ChowElement {
public:
    ChowElement(int d, int e);  // zero

    static ChowElement one(int d, int e);
    static ChowElement hyperplane(int d, int e);
    static ChowElement fiber(int d, int e);
    static ChowElement of(const Ambient& a, const DivisorClass& c);

    int d() const noexcept { return d_; }
    int e() const noexcept { return e_; }

    /// Coefficient of H^i (fiber = false) or H^i F (fiber = true).
    const Rational& coefficient(int i, bool fiber) const;

    /// Part of codimension k.
    ChowElement graded(int k) const;
    bool is_zero() const;
    /// Degree of a top-dimensional class. Throws NotTopDimensional.
    Rational top_degree() const;
    /// Degree of the top-dimensional part, ignoring the rest.
    Rational top_part_degree() const { return fiber_[static_cast<std::size_t>(d_ - 1)]; }

    ChowElement operator+(const ChowElement& o) const;
    ChowElement operator-(const ChowElement& o) const;
    ChowElement operator*(const ChowElement& o) const;
    ChowElement operator*(const Rational& s) const;

    std::string to_string() const;
    friend bool operator==(const ChowElement&, const ChowElement&) = default;

private:
    void check_compatible(const ChowElement& o) const;

    int d_;
    int e_;
    std::vector<Rational> plain_;  // H^i
    std::vector<Rational> fiber_;  // H^i F
};

struct ChowProduct {
    ChowElement product;
    std::optional<Rational> degree;  ///< set when the product is top-dimensional
};

ChowProduct chow_mul_degree(const Ambient& a, const ChowElement& x, const ChowElement& y);

struct H0Result {
    Integer h0;
    /// h^i = 0 for i ≥ 1 is guaranteed (a ≥ 0 and b ≥ −(a m_1 + 1)).
    bool higher_vanishing;
};

/// h^0(O_S(hH + fF)). Computed through the push-forward to P^1, which agrees
/// with the binomial closed form whenever f ≥ −(h m_1 + 1).
H0Result h0_class(const Ambient& a, const DivisorClass& c);
/// (f + 1) C(h+d−1, d−1) + e C(h+d−1, d), valid for h ≥ 0.
Integer h0_closed_form(const Ambient& a, const DivisorClass& c);

/// K_S = −dH + (e − 2)F.
DivisorClass canonical_class(const Ambient& a);

/// Closed-form χ(O_S(hH + fF)) for d ∈ {2, 3}. Throws UnsupportedDimension.
Integer euler_characteristic(const Ambient& a, const DivisorClass& c);

/// c_1, c_2 of the tangent bundle as used in the closed forms:
/// d = 2: c_2 = 4HF; d = 3: c_2 = 3H² + (6 − 2e)HF. Throws UnsupportedDimension.
ChowElement tangent_c1(const Ambient& a);
ChowElement tangent_c2(const Ambient& a);

/// Total Chern class (1 + 2F) Π_i (1 + H − m_i F) of T_S, any d.
ChowElement tangent_total_chern(const Ambient& a);

/// Todd class from the Chern roots 2F and H − m_i F, any d.
ChowElement todd_class(const Ambient& a);

/// χ(O_S(D)) = ∫ ch(D) · td(S) in the Chow ring, with td written through
/// `tangent_c1`/`tangent_c2` (d ∈ {2, 3}).
Rational riemann_roch_chi(const Ambient& a, const DivisorClass& c);

/// Chern data of a rank-2 bundle E: c_1 = uH + vF, c_2 = wH² + zHF.
struct RankTwoBundleClass {
    Integer u, v, w, z;

    /// O(aH + bF) ⊕ O(cH + dF).
    static RankTwoBundleClass split(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
        return {a + c, b + d, a * c, a * d + b * c};
    }
};

/// χ(E^∨) on a smooth threefold scroll. Throws UnsupportedDimension.
Integer bundle_chi_dual(const Ambient& a, const RankTwoBundleClass& b);

struct PaPaths {
    Rational resolution;  ///< χ(E^∨) − χ(∧² E^∨)
    Rational closed_form; ///< 1 + ((e(u−2) + v − 2)w + (u − 3)z)/2
    Rational linear_form; ///< from 2p_a − 2 = (u − 3)deg + ℓ(v + N − 4)
    Rational chow_ring;   ///< 1 + c_2(E)(K_S + c_1(E))/2 evaluated in A(S)
};

PaPaths pa_paths(const Ambient& a, const RankTwoBundleClass& b);

/// Arithmetic genus of the zero locus of a section of E (d = 3, w ≥ 1).
/// Throws PathsDisagree if the four evaluations differ and NonIntegralGenus
/// if the Chern data cannot belong to a curve.
Integer pa_from_bundle(const Ambient& a, const RankTwoBundleClass& b);

enum class SurfaceMode { Smooth, Cone };

/// p_a of a curve of degree `deg` on a surface scroll in P^N: smooth scrolls
/// use 2p_a − 2 = (2ℓ − 2)deg − (N − 1)ℓ² + (N − 3)ℓ, cones use
/// (q − 1)(deg − 1) − q(q − 1)(N − 1)/2 with q = ⌈deg/(N − 1)⌉.
Integer genus_on_surface(const Integer& deg, const Integer& n, const Integer& ell, SurfaceMode mode);
inline Integer genus_on_cone(const Integer& deg, const Integer& n) {
    return genus_on_surface(deg, n, 0, SurfaceMode::Cone);
}

}  // namespace monoscroll

#endif  // MONOSCROLL_CHOW_HPP
