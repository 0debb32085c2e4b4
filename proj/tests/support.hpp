#pragma once

// Shared generators and independent oracles for the test suites. Oracles
// stick to first-principles definitions (full relation scans, exhaustive
// subset filters, pointwise folds) so they exercise none of the code paths
// they judge.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spfilt/filtration.hpp"
#include "spfilt/poset.hpp"

namespace spfilt::test {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random poset on up to max_n elements, labels e00, e01, ... Relations only
// point from lower to higher element index, so declaration order is always
// a linear extension.
inline PosetHandle random_poset(Rng& rng, int max_n, int min_n = 1) {
    const int n = pick(rng, min_n, max_n);
    std::vector<std::string> elements;
    for (int i = 0; i < n; ++i) {
        std::string label = "e" + std::string(i < 10 ? "0" : "") + std::to_string(i);
        elements.push_back(std::move(label));
    }
    std::vector<std::pair<std::string, std::string>> relations;
    const int density = pick(rng, 0, 2);  // sparse, medium, dense
    const double p = density == 0 ? 0.15 : density == 1 ? 0.3 : 0.6;
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng))
                relations.emplace_back(elements[static_cast<size_t>(i)],
                                       elements[static_cast<size_t>(j)]);
    return PrimePoset::build(std::move(elements), relations);
}

inline Subset random_subset(Rng& rng, int n) {
    std::bernoulli_distribution member(pick(rng, 1, 4) / 5.0);
    Subset mask(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) mask[static_cast<size_t>(i)] = member(rng);
    return mask;
}

// Random increasing function with values in [lo, hi]. Raw draws are pushed
// up along the order, which keeps the range and yields every increasing
// function with positive probability.
inline PosetHom random_increasing(Rng& rng, const PosetHandle& poset, int lo, int hi) {
    const int n = poset->size();
    std::vector<int> values(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int v = pick(rng, lo, hi);
        for (int j = 0; j < i; ++j)
            if (poset->leq(j, i)) v = std::max(v, values[static_cast<size_t>(j)]);
        values[static_cast<size_t>(i)] = v;
    }
    return PosetHom(poset, std::move(values));
}

inline UpperSet random_upper(Rng& rng, const PosetHandle& poset) {
    return upper_closure(poset, random_subset(rng, poset->size()));
}

// Upward closure straight from the definition: scan the full relation.
inline bool naive_is_upper(const PrimePoset& poset, const Subset& mask) {
    for (int i = 0; i < poset.size(); ++i) {
        if (!mask[static_cast<size_t>(i)]) continue;
        for (int j = 0; j < poset.size(); ++j)
            if (poset.leq(i, j) && !mask[static_cast<size_t>(j)]) return false;
    }
    return true;
}

// Exhaustive filter over all subsets, as label lists sorted the way the
// enumeration promises: cardinality first, then lexicographic member list.
inline std::vector<std::vector<std::string>> brute_force_upper_lists(const PosetHandle& poset) {
    const int n = poset->size();
    std::vector<std::vector<std::string>> out;
    for (uint32_t mask = 0;; ++mask) {
        Subset bits(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) bits[static_cast<size_t>(i)] = true;
        if (naive_is_upper(*poset, bits)) out.push_back(poset->labels_of(bits));
        if (n == 0 || mask + 1 == (uint32_t{1} << n)) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

// The defining property of the function of a filtration: the unique index
// n with p inside the step at n-1 but outside the step at n. Scans the
// whole window and reports failure when some element has no unique index.
inline std::optional<std::vector<int>> naive_function_of(const SpFiltration& phi) {
    std::vector<int> values;
    for (int i = 0; i < phi.poset()->size(); ++i) {
        int found = 0;
        int where = 0;
        for (int n = phi.lo() - 1; n <= phi.hi() + 1; ++n) {
            if (phi.at(n - 1).contains(i) && !phi.at(n).contains(i)) {
                ++found;
                where = n;
            }
        }
        if (found != 1) return std::nullopt;
        values.push_back(where);
    }
    return values;
}

}  // namespace spfilt::test
