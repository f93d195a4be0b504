#ifndef MONOSCROLL_SEMIGROUP_HPP
#define MONOSCROLL_SEMIGROUP_HPP

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "monoscroll/value_set.hpp"

namespace monoscroll {

/// Cofinite additive submonoid of Z≥0, i.e. the value semigroup of a
/// unibranch monomial singularity.
///
/// Naming follows the usual singularity conventions:
///   multiplicity  α = min(S ∖ {0})
///   conductor     β = least c with [c, ∞) ⊆ S
///   frobenius     γ = β − 1
///   genus         δ = number of gaps
/// For S = Z≥0 the multiplicity is reported as 1, the conductor as 0 and the
/// Frobenius number as −1.
class NumericalSemigroup {
public:
    /// Additive closure of `generators`. Throws EmptyGenerators or GcdNotOne.
    explicit NumericalSemigroup(std::span<const int> generators);
    NumericalSemigroup(std::initializer_list<int> generators)
        : NumericalSemigroup(std::span<const int>(generators.begin(), generators.size())) {}

    /// Semigroup whose gap set is `gaps`. Throws InvalidArgument when the
    /// complement of `gaps` in Z≥0 is not closed under addition.
    static NumericalSemigroup from_gaps(std::span<const int> gaps);

    bool contains(int x) const noexcept {
        return x >= conductor_ || (x >= 0 && below_conductor_[static_cast<std::size_t>(x)]);
    }

    /// Minimal generating set, sorted.
    const std::vector<int>& generators() const noexcept { return generators_; }
    const std::vector<int>& gaps() const noexcept { return gaps_; }
    /// S ∩ [0, β), sorted.
    std::vector<int> elements_below_conductor() const;

    int multiplicity() const noexcept { return multiplicity_; }
    int conductor() const noexcept { return conductor_; }
    int frobenius() const noexcept { return conductor_ - 1; }
    int genus() const noexcept { return static_cast<int>(gaps_.size()); }

    ValueSet as_value_set() const { return ValueSet(elements_below_conductor(), conductor_); }

    std::string to_string() const;  // "<4,5,7>"

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gaps_ == b.gaps_;
    }

private:
    NumericalSemigroup() = default;
    void finish();

    std::vector<bool> below_conductor_;
    std::vector<int> generators_;
    std::vector<int> gaps_;
    int conductor_ = 0;
    int multiplicity_ = 1;
};

/// Canonical value set K = {a : γ − a ∉ S} and its companions.
struct KappaSets {
    ValueSet k;
    std::vector<int> k_star;  ///< K ∩ [0, γ]; exponents of the canonical model
    std::vector<int> s_star;  ///< {a ∈ S : a ≤ β}
};

KappaSets kappa_sets(const NumericalSemigroup& s);

bool is_symmetric(const NumericalSemigroup& s);

/// #((K ∖ S) ∩ [0, γ]), the colength of O_P in the normalized dualizing module.
int eta_local(const NumericalSemigroup& s);

struct BlowupResult {
    int mu;
    ValueSet blowup_values;  ///< T, the value semigroup of the blowup along ω
    int power_steps;         ///< number of Minkowski products until K^n stabilized
};

/// Colength of the dualizing module in the blowup along it. The blowup value
/// set is the stable Minkowski power K^n of K; μ = #(T ∖ K).
BlowupResult mu_local(const NumericalSemigroup& s);

/// Inverse of `kappa_sets(...).k_star`. Throws NotAValidKappaStar.
NumericalSemigroup recover_from_kappa_star(std::span<const int> kstar);

struct Block {
    int first;
    int last;
    int size() const noexcept { return last - first + 1; }
    friend bool operator==(const Block&, const Block&) = default;
};

/// Maximal runs of consecutive integers in S ∩ (0, β).
struct BlockDecomposition {
    std::vector<Block> blocks;
    int count() const noexcept { return static_cast<int>(blocks.size()); }
};

BlockDecomposition block_decomposition(const NumericalSemigroup& s);

inline constexpr int kDefaultGenusBound = 16;

/// Every numerical semigroup with exactly `genus` gaps, each once, ordered
/// lexicographically by sorted gap set. Throws BoundExceeded above `bound`.
std::vector<NumericalSemigroup> enumerate_genus(int genus, int bound = kDefaultGenusBound);

}  // namespace monoscroll

#endif  // MONOSCROLL_SEMIGROUP_HPP
