#ifndef MONOSCROLL_VALUE_SET_HPP
#define MONOSCROLL_VALUE_SET_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace monoscroll {

/// A set of integers that is bounded below and contains every integer from
/// some point on: `finite_part() ∪ [tail_start(), ∞)`.
///
/// The representation is canonical: `tail_start()` is the least b with
/// [b, ∞) contained in the set, and the finite part lies strictly below it,
/// so two ValueSets are equal exactly when they describe the same set.
class ValueSet {
public:
    ValueSet();  // Z≥0
    ValueSet(std::vector<int> elements, int tail_start);

    static ValueSet from_tail(int tail_start) { return ValueSet({}, tail_start); }

    const std::vector<int>& finite_part() const noexcept { return finite_; }
    int tail_start() const noexcept { return tail_; }
    int min() const noexcept { return finite_.empty() ? tail_ : finite_.front(); }

    bool contains(int x) const;

    /// Elements of the set lying in [lo, hi).
    std::vector<int> elements_in(int lo, int hi) const;

    /// Minkowski sum {a + b}.
    ValueSet operator+(const ValueSet& other) const;
    /// Translate by `shift`.
    ValueSet shifted(int shift) const;
    ValueSet united(const ValueSet& other) const;

    /// #(this ∖ other); finite because both sets are cofinite.
    int count_not_in(const ValueSet& other) const;
    bool is_subset_of(const ValueSet& other) const { return count_not_in(other) == 0; }

    std::string to_string() const;

    friend bool operator==(const ValueSet&, const ValueSet&) = default;

private:
    std::vector<int> finite_;
    int tail_;
};

}  // namespace monoscroll

#endif  // MONOSCROLL_VALUE_SET_HPP
