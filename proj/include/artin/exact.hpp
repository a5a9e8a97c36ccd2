#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "artin/errors.hpp"
#include "artin/graph.hpp"
#include "artin/numeric.hpp"

namespace artin {

/// A probability (or non-negative bound) carried in two forms: an exact
/// rational where feasible, and a log-space double always. The two agree to
/// ~1e-12 relative whenever both are present.
struct ExactProb {
    std::optional<Rational> exact;
    double log_value = 0.0;

    static ExactProb from_rational(Rational r) {
        ExactProb p;
        p.log_value = log_rational(r);
        p.exact = std::move(r);
        return p;
    }

    static ExactProb from_log(double lv) {
        ExactProb p;
        p.log_value = lv;
        return p;
    }

    double value() const { return exact ? to_double(*exact) : std::exp(log_value); }
};

// Rational evaluation is kept only while the big-integer powers stay cheap;
// larger parameters fall back to the log-space path.
inline constexpr int kRationalRankLimit = 128;

/// |G^{n,m}| = m^(n(n-1)/2).
inline BigInt count_graphs(int n, std::uint64_t m) {
    if (n < 1) throw BadVertex("rank must be >= 1");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    return ipow(BigInt(m), DefiningGraph::pair_count_of(n));
}

/// Probability that every pair avoids a fixed set of k alphabet labels:
/// ((m-k)/m)^(n(n-1)/2). Governs the large-type family (k=1), the
/// extra-large family (k=2), free-of-infinity (k=1), and so on.
inline ExactProb prob_forbidden_labels(int n, std::uint64_t m, std::uint64_t k) {
    if (n < 1) throw BadVertex("rank must be >= 1");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    if (k >= m)
        throw BadForbidCount("cannot forbid " + std::to_string(k) + " of " + std::to_string(m) +
                             " labels");
    const std::uint64_t pairs = DefiningGraph::pair_count_of(n);
    if (n <= kRationalRankLimit)
        return ExactProb::from_rational(rpow(Rational(m - k, m), pairs));
    const double lv = static_cast<double>(pairs) *
                      std::log1p(-static_cast<double>(k) / static_cast<double>(m));
    return ExactProb::from_log(lv);
}

/// Limit of prob_forbidden_labels along m = n^2: e^(-k/2). Reference
/// asymptote for sweep overlays.
inline double limit_forbidden(std::uint64_t k) { return std::exp(-static_cast<double>(k) / 2.0); }

namespace detail {

/// log of n! / ((n-2k)! k! 2^k (m-1)^k), the k-th series term of the
/// (2,2)-free count.
inline double log_22_term(int n, std::uint64_t m, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(n - 2.0 * k + 1.0) - std::lgamma(k + 1.0) -
           k * std::numbers::ln2 - k * std::log(static_cast<double>(m - 1));
}

}  // namespace detail

/// Exact probability that no two edges labeled 2 share a vertex:
///   ((m-1)/m)^C(n,2) * (1 + sum_{k=1..floor(n/2)} n! (m-1)^-k / ((n-2k)! k! 2^k)).
/// The k-th term counts the graphs whose 2-labeled edges form a k-edge
/// matching. Rational for moderate n; log-space always (terms are summed in
/// ascending k with a max shift and Kahan compensation, since they span
/// hundreds of orders of magnitude for large n).
inline ExactProb prob_22_free_exact(int n, std::uint64_t m) {
    if (n < 1) throw BadVertex("rank must be >= 1");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    const std::uint64_t pairs = DefiningGraph::pair_count_of(n);
    const int kmax = n / 2;

    // log-space evaluation
    double max_term = 0.0;  // k = 0 term is log(1) = 0
    std::vector<double> log_terms(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; ++k) {
        log_terms[k] = detail::log_22_term(n, m, k);
        if (log_terms[k] > max_term) max_term = log_terms[k];
    }
    double sum = 0.0, comp = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        const double y = std::exp(log_terms[k] - max_term) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double log_value = static_cast<double>(pairs) * std::log1p(-1.0 / m) + max_term +
                             std::log(sum);

    if (n > kRationalRankLimit) return ExactProb::from_log(log_value);

    Rational series = 1;
    Rational term = 1;
    const BigInt m1 = m - 1;
    for (int k = 1; k <= kmax; ++k) {
        // n! / ((n-2k)! k! 2^k) = prod_{i<k} C(n-2i, 2) / k!
        term *= Rational(BigInt(n - 2 * k + 2) * (n - 2 * k + 1), BigInt(2) * k * m1);
        series += term;
    }
    Rational value = rpow(Rational(m - 1, m), pairs) * series;
    ExactProb p;
    p.exact = std::move(value);
    p.log_value = log_value;
    return p;
}

/// Number of ordered vertex triples (v1, v2, v3) whose two edges at v1 are
/// both labeled 2; each unordered adjacent pair of 2-edges counts twice.
inline std::uint64_t adjacent_two_statistic(const DefiningGraph& g) {
    const int n = g.rank();
    std::uint64_t total = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t deg2 = 0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            const Label l = g.label(v, u);
            if (l.is_finite() && l.value() == 2) ++deg2;
        }
        total += deg2 * (deg2 - 1);
    }
    return total;
}

namespace detail {

inline Rational adjacent_two_mean_total(int n, std::uint64_t m) {
    return Rational(falling_factorial(n, 3), BigInt(m) * m);
}

}  // namespace detail

/// E of adjacent_two_statistic over the uniform measure: n(n-1)(n-2) / m^2.
inline Rational adjacent_two_mean(int n, std::uint64_t m) {
    if (n < 3) throw TooSmall("the adjacent-two statistic needs rank >= 3");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    return detail::adjacent_two_mean_total(n, m);
}

// Coefficients of the nine-bucket second-moment decomposition (below).
// Both were pinned by exact enumeration at (4,2), (4,3), (5,2); see the
// verification suite.
inline constexpr int kCaseFiveCoefficient = 10;
inline constexpr int kCaseNineCoefficient = 4;

/// First and second moments of the adjacent-two statistic, with the second
/// moment broken into the nine overlap cases of ordered triple pairs.
struct MomentReport {
    Rational mean;                        // E[X]
    std::array<Rational, 9> case_terms;   // E[X_1] ... E[X_9]
    Rational second_moment;               // E[X^2] = sum of the cases
    Rational ratio;                       // E[X^2] / E[X]^2
    Rational lower_bound;                 // E[X]^2 / E[X^2] = 1/ratio
    Rational markov_bound;                // min(1, E[X])
};

/// Second moment of the adjacent-two statistic, exactly. The sum over
/// ordered pairs of ordered triples is split by the overlap pattern of the
/// two triples; the coefficient counts position assignments and the power of
/// 1/m counts distinct constrained edges:
///   1: no shared vertex                                n!/(n-6)!  * m^-4
///   2: one shared vertex, first slot in both           n!/(n-5)!  * m^-4
///   3: one shared, first slot in exactly one          4n!/(n-5)!  * m^-4
///   4: one shared, first slot in neither              4n!/(n-5)!  * m^-4
///   5: two shared, four distinct constrained edges   10n!/(n-4)!  * m^-4
///   6: two shared incl. both first slots (equal)      4n!/(n-4)!  * m^-3
///   7: two shared incl. both first slots (crossed)    4n!/(n-4)!  * m^-3
///   8: all three shared, same first slot              2n!/(n-3)!  * m^-2
///   9: all three shared, different first slots        4n!/(n-3)!  * m^-3
/// Falling factorials vanish for small n, so every term is total in n.
inline MomentReport adjacent_two_moments(int n, std::uint64_t m) {
    if (n < 3) throw TooSmall("the adjacent-two statistic needs rank >= 3");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    const BigInt m2 = BigInt(m) * m;
    const BigInt m3 = m2 * m;
    const BigInt m4 = m3 * m;
    MomentReport r;
    r.mean = detail::adjacent_two_mean_total(n, m);
    r.case_terms[0] = Rational(falling_factorial(n, 6), m4);
    r.case_terms[1] = Rational(falling_factorial(n, 5), m4);
    r.case_terms[2] = Rational(4 * falling_factorial(n, 5), m4);
    r.case_terms[3] = Rational(4 * falling_factorial(n, 5), m4);
    r.case_terms[4] = Rational(kCaseFiveCoefficient * falling_factorial(n, 4), m4);
    r.case_terms[5] = Rational(4 * falling_factorial(n, 4), m3);
    r.case_terms[6] = Rational(4 * falling_factorial(n, 4), m3);
    r.case_terms[7] = Rational(2 * falling_factorial(n, 3), m2);
    r.case_terms[8] = Rational(kCaseNineCoefficient * falling_factorial(n, 3), m3);
    r.second_moment = 0;
    for (const auto& t : r.case_terms) r.second_moment += t;
    r.ratio = r.second_moment / (r.mean * r.mean);
    r.lower_bound = (r.mean * r.mean) / r.second_moment;
    r.markov_bound = r.mean > 1 ? Rational(1) : r.mean;
    return r;
}

/// P[X != 0] >= E[X]^2 / E[X^2]; zero in the degenerate rank-(<3) case.
inline ExactProb second_moment_lower_bound(int n, std::uint64_t m) {
    if (n < 1) throw BadVertex("rank must be >= 1");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    if (n < 3) return ExactProb::from_rational(Rational(0));
    return ExactProb::from_rational(adjacent_two_moments(n, m).lower_bound);
}

/// P[X >= 1] <= E[X], capped at 1.
inline ExactProb markov_upper_bound(int n, std::uint64_t m) {
    if (n < 1) throw BadVertex("rank must be >= 1");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    const Rational mean = detail::adjacent_two_mean_total(n, m);
    return ExactProb::from_rational(mean > 1 ? Rational(1) : mean);
}

/// P[some vertex has finite labels to all others] <= n ((m-1)/m)^(n-1),
/// capped at 1.
inline ExactProb cone_upper_bound(int n, std::uint64_t m) {
    if (n < 1) throw BadVertex("rank must be >= 1");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    if (n <= kRationalRankLimit * 4) {
        Rational v = Rational(n) * rpow(Rational(m - 1, m), n - 1);
        return ExactProb::from_rational(v > 1 ? Rational(1) : v);
    }
    const double lv = std::log(static_cast<double>(n)) +
                      static_cast<double>(n - 1) * std::log1p(-1.0 / m);
    return ExactProb::from_log(lv > 0.0 ? 0.0 : lv);
}

/// Union bound on being a k-join, independent of k:
///   sum_{j=1..floor(n/2)} C(n,j) m^(-j(n-j)), capped at 1.
inline ExactProb join_upper_bound(int n, std::uint64_t m) {
    if (n < 2) throw TooSmall("join decompositions need at least 2 vertices");
    if (m < 2) throw BadLabel("alphabet maximum must be >= 2");
    if (n <= kRationalRankLimit * 4) {
        Rational sum = 0;
        for (int j = 1; j <= n / 2; ++j) {
            const std::uint64_t e = static_cast<std::uint64_t>(j) * (n - j);
            sum += Rational(binomial(n, j), ipow(BigInt(m), e));
        }
        return ExactProb::from_rational(sum > 1 ? Rational(1) : sum);
    }
    const double logm = std::log(static_cast<double>(m));
    double max_term = -std::numeric_limits<double>::infinity();
    std::vector<double> terms(n / 2);
    for (int j = 1; j <= n / 2; ++j) {
        terms[j - 1] = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0) -
                       static_cast<double>(j) * (n - j) * logm;
        max_term = std::max(max_term, terms[j - 1]);
    }
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - max_term);
    const double lv = max_term + std::log(sum);
    return ExactProb::from_log(lv > 0.0 ? 0.0 : lv);
}

}  // namespace artin
