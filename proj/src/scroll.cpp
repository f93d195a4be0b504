#include "monoscroll/scroll.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "monoscroll/error.hpp"

namespace monoscroll {

namespace {

std::vector<int> sorted_unique(std::span<const int> set) {
    std::vector<int> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int difference_gcd(const std::vector<int>& sorted) {
    int k = 0;
    for (int x : sorted) k = std::gcd(k, x - sorted.front());
    return k == 0 ? 1 : k;
}

// All ways to cut a run of `length` elements into `pieces` contiguous parts,
// largest leading part first.
void compositions(int length, int pieces, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    if (pieces == 1) {
        prefix.push_back(length);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = length - pieces + 1; first >= 1; --first) {
        prefix.push_back(first);
        compositions(length - first, pieces - 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int length, int pieces) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    compositions(length, pieces, prefix, out);
    return out;
}

struct Splitter {
    const std::vector<std::vector<int>>& runs;
    int step;
    int kappa;
    std::map<std::vector<int>, ScrollStructure> by_dims;
    std::vector<std::vector<int>> order;

    void emit(const std::vector<std::vector<int>>& cuts) {
        ScrollStructure s;
        s.step = step;
        s.kappa = kappa;
        s.ell = step / kappa;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            auto it = runs[i].begin();
            for (int len : cuts[i]) {
                s.blocks.emplace_back(it, it + len);
                it += len;
            }
        }
        std::sort(s.blocks.begin(), s.blocks.end());
        auto dims = s.type().dims;
        if (by_dims.emplace(dims, std::move(s)).second) order.push_back(std::move(dims));
    }

    void distribute(std::size_t run, int remaining, std::vector<std::vector<int>>& cuts) {
        if (run == runs.size()) {
            if (remaining == 0) emit(cuts);
            return;
        }
        const int len = static_cast<int>(runs[run].size());
        const int later = static_cast<int>(runs.size() - run - 1);
        for (int pieces = 1; pieces <= std::min(len, remaining - later); ++pieces)
            for (auto& c : compositions(len, pieces)) {
                cuts.push_back(std::move(c));
                distribute(run + 1, remaining - pieces, cuts);
                cuts.pop_back();
            }
    }
};

}  // namespace

int ScrollType::e() const noexcept { return std::accumulate(dims.begin(), dims.end(), 0); }

std::string ScrollType::to_string() const {
    std::ostringstream out;
    out << "S_{";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << '}';
    return out.str();
}

ScrollType ScrollStructure::type() const {
    ScrollType t;
    for (const auto& b : blocks) t.dims.push_back(static_cast<int>(b.size()) - 1);
    std::sort(t.dims.begin(), t.dims.end());
    return t;
}

std::vector<std::vector<int>> run_decomposition(std::span<const int> set, int step) {
    if (step < 1) throw Error(ErrorKind::InvalidArgument, "step must be positive", step);
    const auto values = sorted_unique(set);
    const std::set<int> lookup(values.begin(), values.end());
    std::vector<std::vector<int>> runs;
    for (int x : values) {
        if (lookup.contains(x - step)) continue;  // not the start of a run
        std::vector<int> run{x};
        while (lookup.contains(run.back() + step)) run.push_back(run.back() + step);
        runs.push_back(std::move(run));
    }
    return runs;
}

std::vector<ScrollStructure> scroll_structures(std::span<const int> set, int d) {
    const auto values = sorted_unique(set);
    if (values.empty()) throw Error(ErrorKind::InvalidArgument, "empty exponent set");
    if (d < 1 || d > static_cast<int>(values.size()))
        throw Error(ErrorKind::InvalidArgument, "scroll dimension must lie in [1, #set]", d);

    const int kappa = difference_gcd(values);
    const int span_width = values.back() - values.front();
    std::vector<ScrollStructure> out;
    if (span_width == 0) {
        out.push_back({1, {values}, 1, 1});
        return out;
    }
    for (int step = kappa; step <= span_width; step += kappa) {
        const auto runs = run_decomposition(values, step);
        if (static_cast<int>(runs.size()) > d) continue;
        Splitter splitter{runs, step, kappa, {}, {}};
        std::vector<std::vector<int>> cuts;
        splitter.distribute(0, d, cuts);
        for (const auto& dims : splitter.order) out.push_back(std::move(splitter.by_dims.at(dims)));
    }
    return out;
}

int min_scroll_dimension(std::span<const int> set) {
    const auto values = sorted_unique(set);
    if (values.empty()) throw Error(ErrorKind::InvalidArgument, "empty exponent set");
    if (values.size() == 1) return 1;
    const int kappa = difference_gcd(values);
    int best = static_cast<int>(values.size());
    for (int step = kappa; step <= values.back() - values.front(); step += kappa)
        best = std::min(best, static_cast<int>(run_decomposition(values, step).size()));
    return best;
}

int structure_ell(const ScrollStructure& s) { return s.step / s.kappa; }

bool minor_check(std::span<const int> exponents, const ScrollStructure& s) {
    std::multiset<int> covered;
    std::vector<std::pair<int, int>> columns;
    for (const auto& block : s.blocks) {
        covered.insert(block.begin(), block.end());
        auto sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) columns.emplace_back(sorted[i], sorted[i + 1]);
    }
    const std::multiset<int> wanted(exponents.begin(), exponents.end());
    if (covered != wanted) return false;
    // Minor t^{p}t^{q'} − t^{p'}t^{q} vanishes iff p + q' = p' + q.
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (std::size_t j = i + 1; j < columns.size(); ++j)
            if (columns[i].first + columns[j].second != columns[i].second + columns[j].first) return false;
    return true;
}

}  // namespace monoscroll
