#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

#include "artin/errors.hpp"

namespace artin {

/// Inverse standard normal CDF, Wichura's algorithm AS 241 (PPND16).
/// Accurate to ~1e-16 over (0, 1).
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error("normal_quantile requires p in (0,1)");
    const double q = p - 0.5;
    double r;
    if (std::fabs(q) <= 0.425) {
        r = 0.180625 - q * q;
        const double num =
            (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                  6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
              1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
        const double den =
            (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                  3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
              4.2313330701600911252e+1) * r + 1.0);
        return q * num / den;
    }
    r = q < 0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        const double num =
            (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
        const double den =
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
        val = num / den;
    } else {
        r -= 5.0;
        const double num =
            (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
        const double den =
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
        val = num / den;
    }
    return q < 0 ? -val : val;
}

struct WilsonInterval {
    double low;
    double high;
};

/// Wilson score interval for a binomial proportion. Chosen over the normal
/// approximation for sane behaviour at p near 0 and 1.
inline WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t samples,
                                      double confidence) {
    if (samples == 0) throw BadSamples("need at least one sample");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw Error("confidence must be in (0,1)");
    const double z = normal_quantile(1.0 - (1.0 - confidence) / 2.0);
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    WilsonInterval w{centre - half, centre + half};
    if (w.low < 0.0) w.low = 0.0;
    if (w.high > 1.0) w.high = 1.0;
    if (w.low > p) w.low = p;
    if (w.high < p) w.high = p;
    return w;
}

/// Regularized lower incomplete gamma P(a, x), series for x < a+1 and
/// continued fraction otherwise (Numerical Recipes style).
inline double regularized_gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw Error("regularized_gamma_p domain error");
    if (x == 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Lentz's method for the continued fraction of Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    const double q = std::exp(-x + a * std::log(x) - gln) * h;
    return 1.0 - q;
}

/// Upper tail probability of a chi-square statistic with `df` degrees of
/// freedom.
inline double chi_square_sf(double stat, int df) {
    if (stat <= 0.0) return 1.0;
    return 1.0 - regularized_gamma_p(df / 2.0, stat / 2.0);
}

/// Pearson goodness-of-fit against equal cell probabilities.
/// Returns the p-value; the fit "passes at significance alpha" when
/// p-value >= alpha.
inline double chi_square_uniform_pvalue(std::span<const std::uint64_t> counts) {
    const std::size_t cells = counts.size();
    if (cells < 2) throw Error("chi-square needs at least 2 cells");
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw BadSamples("chi-square needs at least one draw");
    const double expected = static_cast<double>(total) / static_cast<double>(cells);
    double stat = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return chi_square_sf(stat, static_cast<int>(cells) - 1);
}

}  // namespace artin
