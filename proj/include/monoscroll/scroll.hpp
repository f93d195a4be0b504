#ifndef MONOSCROLL_SCROLL_HPP
#define MONOSCROLL_SCROLL_HPP

#include <span>
#include <string>
#include <vector>

namespace monoscroll {

/// Rational normal scroll S_{m_1 … m_d} ⊂ P^N, N = e + d − 1, e = Σ m_i.
struct ScrollType {
    std::vector<int> dims;  ///< sorted ascending; 0 marks a cone direction

    int d() const noexcept { return static_cast<int>(dims.size()); }
    int e() const noexcept;
    int ambient_dimension() const noexcept { return e() + d() - 1; }
    bool smooth() const noexcept { return dims.empty() || dims.front() >= 1; }
    /// Smallest m_i.
    int m() const noexcept { return dims.empty() ? 0 : dims.front(); }

    std::string to_string() const;  // "S_{0,2}"
    friend bool operator==(const ScrollType&, const ScrollType&) = default;
};

/// A partition of an exponent set into arithmetic progressions sharing the
/// common difference `step`. A monomial curve lies on the scroll of type
/// `type()` exactly when such a partition of its exponents (with 0) exists.
struct ScrollStructure {
    int step = 1;
    std::vector<std::vector<int>> blocks;  ///< each sorted; ordered by first element
    int kappa = 1;                          ///< gcd of the pairwise differences of the set
    int ell = 1;                            ///< points on a generic fiber: step / kappa

    ScrollType type() const;
};

/// Residue classes mod `step`, each cut into maximal runs of difference `step`.
/// Blocks are ordered by their first element.
std::vector<std::vector<int>> run_decomposition(std::span<const int> set, int step);

/// One structure per (step, dims multiset) realizing a d-fold scroll. Steps
/// range over multiples of κ in [κ, max − min]. Returns an empty list when no
/// step admits d blocks; d above #set is refused.
std::vector<ScrollStructure> scroll_structures(std::span<const int> set, int d);

/// Least run count over all steps; 1 means the set is a single progression.
int min_scroll_dimension(std::span<const int> set);

int structure_ell(const ScrollStructure& s);

/// Every 2×2 minor of the determinantal matrix built from the structure's
/// blocks vanishes on t ↦ (t^{b}), and the blocks partition `exponents`.
bool minor_check(std::span<const int> exponents, const ScrollStructure& s);

}  // namespace monoscroll

#endif  // MONOSCROLL_SCROLL_HPP
