// Brute-force reference implementations. Deliberately naive and independent
// of the library code paths they check.
#ifndef MONOSCROLL_TESTS_ORACLES_HPP
#define MONOSCROLL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

// Membership table of ⟨gens⟩ on [0, limit).
inline std::vector<bool> sieve(const std::vector<int>& gens, int limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit), false);
    in[0] = true;
    for (int x = 1; x < limit; ++x)
        for (int g : gens)
            if (x >= g && in[static_cast<std::size_t>(x - g)]) {
                in[static_cast<std::size_t>(x)] = true;
                break;
            }
    return in;
}

inline int sieve_limit(const std::vector<int>& gens) {
    const int top = *std::max_element(gens.begin(), gens.end());
    return 2 * top * top + 2;
}

inline std::vector<int> gaps(const std::vector<int>& gens) {
    const auto in = sieve(gens, sieve_limit(gens));
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(in.size()); ++x)
        if (!in[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

inline int frobenius(const std::vector<int>& gens) {
    const auto g = gaps(gens);
    return g.empty() ? -1 : g.back();
}

// {γ − h : h gap}, i.e. the non-negative part of K below the conductor.
inline std::vector<int> kappa_star(const std::vector<int>& gens) {
    const auto g = gaps(gens);
    if (g.empty()) return {};
    std::vector<int> out;
    for (int h : g) out.push_back(g.back() - h);
    std::sort(out.begin(), out.end());
    return out;
}

// Number of semigroups of genus g, counted over all g-subsets of [1, 2g − 1]
// whose complement is additively closed.
inline long long count_by_gap_subsets(int g) {
    if (g == 0) return 1;
    const int n = 2 * g - 1;
    long long count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != g) continue;
        auto in_s = [&](int x) { return x > n || !(mask >> (x - 1) & 1u); };
        bool closed = true;
        for (int a = 1; a <= n && closed; ++a)
            for (int b = a; a + b <= n && closed; ++b)
                if (in_s(a) && in_s(b) && !in_s(a + b)) closed = false;
        if (closed) ++count;
    }
    return count;
}

// Semigroup elements of one branch, as a membership predicate on ints.
struct Branch {
    std::vector<bool> table;
    bool contains(int x) const {
        if (x < 0) return false;
        if (x >= static_cast<int>(table.size())) return true;
        return table[static_cast<std::size_t>(x)];
    }
};

inline Branch branch(const std::vector<int>& gens) { return {sieve(gens, sieve_limit(gens))}; }

// Degree of O⟨1, t^n⟩ on the curve t ↦ (1 : t^{a_1} : … : t^{a_n}), counting
// valuations on a wide window at both branches.
inline int pencil_degree(const std::vector<int>& exps, int n) {
    const int top = exps.back();
    std::vector<int> inf{top};
    for (std::size_t i = 0; i + 1 < exps.size(); ++i) inf.push_back(top - exps[i]);
    const Branch b0 = branch(exps), binf = branch(inf);
    const int window = 4 * top * top + 4 * std::abs(n) + 8;
    auto local = [&](const Branch& b, int shift) {
        int extra = 0;
        for (int x = -window; x <= window; ++x)
            if (!b.contains(x) && b.contains(x - shift)) ++extra;
        return extra;
    };
    return local(b0, n) + local(binf, -n);
}

inline int gonality(const std::vector<int>& exps, int window) {
    int best = 1 << 30;
    for (int n = 1; n <= window; ++n) best = std::min({best, pencil_degree(exps, n), pencil_degree(exps, -n)});
    return best;
}

// χ(O_S(hH + fF)) on S_{dims} for h ≥ 0, by pushing forward to P^1.
inline long long chi_pushforward(const std::vector<int>& dims, int h, long long f) {
    long long total = 0;
    std::vector<int> k(dims.size(), 0);
    // enumerate compositions of h into dims.size() parts
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == dims.size()) {
            k[i] = left;
            long long deg = f;
            for (std::size_t j = 0; j < dims.size(); ++j) deg += static_cast<long long>(k[j]) * dims[j];
            total += deg + 1;
            return;
        }
        for (int x = 0; x <= left; ++x) {
            k[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, h);
    return total;
}

// h^0 by the same push-forward, dropping negative line bundles on P^1.
inline long long h0_pushforward(const std::vector<int>& dims, int h, long long f) {
    if (h < 0) return 0;
    long long total = 0;
    std::vector<int> k(dims.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == dims.size()) {
            k[i] = left;
            long long deg = f;
            for (std::size_t j = 0; j < dims.size(); ++j) deg += static_cast<long long>(k[j]) * dims[j];
            total += std::max(0LL, deg + 1);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            k[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, h);
    return total;
}

// All partitions of `set` into `d` nonempty arithmetic progressions with one
// common step, reported as sorted dims multisets (size − 1 per block).
inline std::set<std::vector<int>> ap_partitions(const std::vector<int>& set, int d) {
    std::set<std::vector<int>> out;
    const int n = static_cast<int>(set.size());
    const int span = set.back() - set.front();
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    auto is_ap = [](std::vector<int> b, int r) {
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i + 1] - b[i] != r) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            if (used != d) return;
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(d));
            for (int j = 0; j < n; ++j) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(j)])].push_back(set[static_cast<std::size_t>(j)]);
            for (int r = 1; r <= std::max(span, 1); ++r) {
                if (std::all_of(blocks.begin(), blocks.end(), [&](const auto& b) { return is_ap(b, r); })) {
                    std::vector<int> dims;
                    for (const auto& b : blocks) dims.push_back(static_cast<int>(b.size()) - 1);
                    std::sort(dims.begin(), dims.end());
                    out.insert(dims);
                }
            }
            return;
        }
        for (int l = 0; l <= std::min(used, d - 1); ++l) {
            label[static_cast<std::size_t>(i)] = l;
            self(self, i + 1, std::max(used, l + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace oracle

#endif  // MONOSCROLL_TESTS_ORACLES_HPP
