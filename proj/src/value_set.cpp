#include "monoscroll/value_set.hpp"

#include <algorithm>
#include <sstream>

namespace monoscroll {

ValueSet::ValueSet() : tail_(0) {}

ValueSet::ValueSet(std::vector<int> elements, int tail_start) : tail_(tail_start) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elements.erase(std::remove_if(elements.begin(), elements.end(), [&](int x) { return x >= tail_; }),
                   elements.end());
    while (!elements.empty() && elements.back() == tail_ - 1) {
        elements.pop_back();
        --tail_;
    }
    finite_ = std::move(elements);
}

bool ValueSet::contains(int x) const {
    return x >= tail_ || std::binary_search(finite_.begin(), finite_.end(), x);
}

std::vector<int> ValueSet::elements_in(int lo, int hi) const {
    std::vector<int> out;
    for (int x : finite_)
        if (x >= lo && x < hi) out.push_back(x);
    for (int x = std::max(lo, tail_); x < hi; ++x) out.push_back(x);
    return out;
}

ValueSet ValueSet::operator+(const ValueSet& other) const {
    const int tail = std::min(min() + other.tail_, tail_ + other.min());
    std::vector<int> sums;
    const auto lhs = elements_in(min(), tail - other.min());
    const auto rhs = other.elements_in(other.min(), tail - min());
    for (int a : lhs)
        for (int b : rhs)
            if (a + b < tail) sums.push_back(a + b);
    return ValueSet(std::move(sums), tail);
}

ValueSet ValueSet::shifted(int shift) const {
    std::vector<int> moved(finite_);
    for (int& x : moved) x += shift;
    return ValueSet(std::move(moved), tail_ + shift);
}

ValueSet ValueSet::united(const ValueSet& other) const {
    const int tail = std::min(tail_, other.tail_);
    std::vector<int> all(finite_);
    all.insert(all.end(), other.finite_.begin(), other.finite_.end());
    return ValueSet(std::move(all), tail);
}

int ValueSet::count_not_in(const ValueSet& other) const {
    // Past both tails every integer is in both sets.
    const int hi = std::max(tail_, other.tail_);
    int count = 0;
    for (int x : elements_in(min(), hi))
        if (!other.contains(x)) ++count;
    return count;
}

std::string ValueSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < finite_.size(); ++i) out << (i ? "," : "") << finite_[i];
    out << (finite_.empty() ? "" : ",") << tail_ << "..}";
    return out.str();
}

}  // namespace monoscroll
