#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "artin/exact.hpp"
#include "artin/graph.hpp"
#include "artin/numeric.hpp"
#include "artin/parallel.hpp"
#include "artin/predicates.hpp"

namespace artin {

// The oracle is deliberately dumb: it walks every graph of G^{n,m} exactly
// once and counts. It certifies the closed forms and classifiers on spaces
// small enough to enumerate.

struct EnumBudget {
    std::uint64_t max_graphs = 2'000'000;
};

/// |G^{n,m}| as uint64, or TooLarge (with the exact count) when the space
/// exceeds the budget.
inline std::uint64_t checked_space_size(int n, std::uint64_t m, const EnumBudget& budget = {}) {
    const BigInt total = count_graphs(n, m);
    if (total > budget.max_graphs)
        throw TooLarge("G^{" + std::to_string(n) + "," + std::to_string(m) + "} has " +
                       total.str() + " graphs, over the budget of " +
                       std::to_string(budget.max_graphs));
    return total.convert_to<std::uint64_t>();
}

/// Mixed-radix position of a graph: pair (0,1) is the most significant
/// digit, label order is infinity < 2 < 3 < ... < m. Inverse of enumeration.
inline std::uint64_t graph_index(const DefiningGraph& g, const SampleSpace& space) {
    std::uint64_t idx = 0;
    for (const Label l : g.labels()) idx = idx * space.m + space.label_to_digit(l);
    return idx;
}

/// Walks graphs with linear indices in [first, last), in index order.
/// Restartable at any index, which is what makes range-partitioned parallel
/// enumeration deterministic.
inline void enumerate_range(const SampleSpace& space, std::uint64_t first, std::uint64_t last,
                            const std::function<void(const DefiningGraph&)>& fn) {
    const std::size_t pairs = space.pair_count();
    std::vector<std::uint64_t> digits(pairs, 0);
    std::uint64_t rem = first;
    for (std::size_t p = pairs; p-- > 0;) {
        digits[p] = rem % space.m;
        rem /= space.m;
    }
    std::vector<Label> labels(pairs);
    for (std::uint64_t idx = first; idx < last; ++idx) {
        for (std::size_t p = 0; p < pairs; ++p) labels[p] = space.digit_to_label(digits[p]);
        fn(DefiningGraph::from_labels(space.n, labels));
        for (std::size_t p = pairs; p-- > 0;) {  // odometer step, last pair fastest
            if (++digits[p] < space.m) break;
            digits[p] = 0;
        }
    }
}

/// Every graph of G^{n,m} exactly once, in mixed-radix order.
inline void enumerate_graphs(int n, std::uint64_t m,
                             const std::function<void(const DefiningGraph&)>& fn,
                             const EnumBudget& budget = {}) {
    const SampleSpace space(n, m);
    enumerate_range(space, 0, checked_space_size(n, m, budget), fn);
}

/// Exact #(satisfying) / #(all) over the full space.
inline Rational exact_probability(const std::function<bool(const DefiningGraph&)>& pred, int n,
                                  std::uint64_t m, const EnumBudget& budget = {},
                                  unsigned threads = 0) {
    const SampleSpace space(n, m);
    const std::uint64_t total = checked_space_size(n, m, budget);
    const unsigned workers = resolve_threads(threads);
    std::vector<std::uint64_t> partial(workers, 0);
    parallel_ranges(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t hits = 0;
        enumerate_range(space, lo, hi, [&](const DefiningGraph& g) {
            if (pred(g)) ++hits;
        });
        partial[w] = hits;
    });
    std::uint64_t hits = 0;
    for (auto h : partial) hits += h;
    return Rational(hits, total);
}

inline Rational exact_probability(const GraphPredicate& pred, int n, std::uint64_t m,
                                  const EnumBudget& budget = {}, unsigned threads = 0) {
    return exact_probability(pred.test, n, m, budget, threads);
}

inline Rational exact_probability(ClassId id, int n, std::uint64_t m,
                                  const EnumBudget& budget = {}, unsigned threads = 0) {
    return exact_probability(predicate_for(id), n, m, budget, threads);
}

struct EnumeratedMoments {
    Rational mean;           // E[X]
    Rational second_moment;  // E[X^2]
    Rational p_nonzero;      // P[X != 0]
};

/// Exact moments of the adjacent-two statistic over the uniform measure.
inline EnumeratedMoments moments_by_enumeration(int n, std::uint64_t m,
                                                const EnumBudget& budget = {},
                                                unsigned threads = 0) {
    const SampleSpace space(n, m);
    const std::uint64_t total = checked_space_size(n, m, budget);
    const unsigned workers = resolve_threads(threads);
    struct Acc {
        std::uint64_t sum_x = 0;
        std::uint64_t sum_x2 = 0;
        std::uint64_t nonzero = 0;
    };
    std::vector<Acc> partial(workers);
    parallel_ranges(total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        Acc acc;
        enumerate_range(space, lo, hi, [&](const DefiningGraph& g) {
            const std::uint64_t x = adjacent_two_statistic(g);
            acc.sum_x += x;
            acc.sum_x2 += x * x;
            if (x != 0) ++acc.nonzero;
        });
        partial[w] = acc;
    });
    BigInt sum_x = 0, sum_x2 = 0, nonzero = 0;
    for (const auto& a : partial) {
        sum_x += a.sum_x;
        sum_x2 += a.sum_x2;
        nonzero += a.nonzero;
    }
    return {Rational(sum_x, total), Rational(sum_x2, total), Rational(nonzero, total)};
}

}  // namespace artin
