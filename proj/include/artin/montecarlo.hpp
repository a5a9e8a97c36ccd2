#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "artin/exact.hpp"
#include "artin/graph.hpp"
#include "artin/growth.hpp"
#include "artin/parallel.hpp"
#include "artin/predicates.hpp"
#include "artin/rng.hpp"
#include "artin/stats.hpp"

namespace artin {

/// One uniform draw from G^{n,m}: every pair independently uniform over the
/// m-element alphabet {infinity, 2..m}. Deterministic in
/// (seed, sample_index); worker-independent by construction.
inline DefiningGraph sample_graph(const SampleSpace& space, std::uint64_t seed,
                                  std::uint64_t sample_index = 0) {
    const std::size_t pairs = space.pair_count();
    std::vector<Label> labels(pairs);
    for (std::size_t p = 0; p < pairs; ++p)
        labels[p] = space.digit_to_label(bounded_draw(seed, sample_index, p, space.m));
    return DefiningGraph::from_labels(space.n, std::move(labels));
}

/// Monte Carlo estimate of a class probability with its Wilson interval.
struct Estimate {
    std::string predicate;
    int n = 0;
    std::uint64_t m = 0;
    std::uint64_t samples = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;
    double confidence = 0.0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Estimates P[predicate | G^{n,m}] from `samples` independent draws.
/// The result depends only on (predicate, n, m, samples, seed): per-sample
/// streams are keyed by the sample index, so any worker count produces a
/// bit-identical Estimate.
inline Estimate estimate(const GraphPredicate& predicate, const SampleSpace& space,
                         std::uint64_t samples, std::uint64_t seed, double confidence = 0.99,
                         unsigned threads = 0) {
    if (samples < 1) throw BadSamples("need at least one sample");
    const unsigned workers = resolve_threads(threads);
    std::vector<std::uint64_t> partial(workers, 0);
    parallel_ranges(samples, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t hits = 0;
        for (std::uint64_t s = lo; s < hi; ++s)
            if (predicate.test(sample_graph(space, seed, s))) ++hits;
        partial[w] += hits;
    });
    std::uint64_t successes = 0;
    for (auto h : partial) successes += h;

    Estimate e;
    e.predicate = predicate.name;
    e.n = space.n;
    e.m = space.m;
    e.samples = samples;
    e.successes = successes;
    e.seed = seed;
    e.confidence = confidence;
    e.p_hat = static_cast<double>(successes) / static_cast<double>(samples);
    const WilsonInterval ci = wilson_interval(successes, samples, confidence);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    return e;
}

inline Estimate estimate(ClassId id, const SampleSpace& space, std::uint64_t samples,
                         std::uint64_t seed, double confidence = 0.99, unsigned threads = 0) {
    return estimate(predicate_for(id), space, samples, seed, confidence, threads);
}

struct SweepRow {
    int n = 0;
    std::uint64_t m = 0;
    Estimate est;
    std::optional<double> exact;      // closed form, where one exists
    std::optional<double> asymptote;  // known limit along the growth, if any
};

/// One estimate per requested rank, with m taken from the growth function.
/// Rows keep input order.
inline std::vector<SweepRow> sweep(const GrowthSpec& growth, const GraphPredicate& predicate,
                                   const std::vector<int>& n_values, std::uint64_t samples,
                                   std::uint64_t seed, double confidence = 0.99,
                                   unsigned threads = 0) {
    if (n_values.empty()) throw Error("sweep needs at least one rank");
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1]) throw Error("sweep ranks must be ascending");
    std::vector<SweepRow> rows;
    rows.reserve(n_values.size());
    for (int n : n_values) {
        SweepRow row;
        row.n = n;
        row.m = growth.eval(n);
        row.est = estimate(predicate, SampleSpace(n, row.m), samples, seed, confidence, threads);
        row.exact = exact_probability_closed_form(predicate.name, n, row.m);
        row.asymptote = asymptote_for(predicate.name, growth);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace artin
