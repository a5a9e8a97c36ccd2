#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/classify.hpp"
#include "artin/exact.hpp"
#include "artin/growth.hpp"

namespace artin {

/// Named membership test used by the estimator, sweeps and the CLI.
struct GraphPredicate {
    std::string name;  // canonical name
    std::function<bool(const DefiningGraph&)> test;
};

inline const std::vector<std::string>& predicate_names() {
    static const std::vector<std::string> names = {
        "connected",  "irreducible", "cone",         "not-cone",
        "22free",     "2dim",        "fc",           "large",
        "extra-large", "xxl",        "free-of-infinity", "raag",
        "triangle-free", "spherical",
    };
    return names;
}

/// Resolves a predicate name (canonical or alias) to its test.
/// Unknown names raise BadPredicate.
inline GraphPredicate predicate_by_name(std::string_view name) {
    std::string key(name);
    for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto alias = [&](std::string_view a) { return key == a; };

    if (alias("connected")) return {"connected", [](const DefiningGraph& g) { return is_connected(g); }};
    if (alias("irreducible")) return {"irreducible", [](const DefiningGraph& g) { return is_irreducible(g); }};
    if (alias("cone")) return {"cone", [](const DefiningGraph& g) { return is_cone(g); }};
    if (alias("not-cone") || alias("notcone"))
        return {"not-cone", [](const DefiningGraph& g) { return !is_cone(g); }};
    if (alias("22free") || alias("two-two-free") || alias("(2,2)-free"))
        return {"22free", [](const DefiningGraph& g) { return is_22_free(g); }};
    if (alias("2dim") || alias("two-dimensional") || alias("2-dimensional"))
        return {"2dim", [](const DefiningGraph& g) { return is_two_dimensional(g); }};
    if (alias("fc") || alias("fc-type"))
        return {"fc", [](const DefiningGraph& g) { return is_fc_type(g); }};
    if (alias("large") || alias("large-type"))
        return {"large", [](const DefiningGraph& g) { return is_large_type(g); }};
    if (alias("extra-large") || alias("xlarge") || alias("extra-large-type"))
        return {"extra-large", [](const DefiningGraph& g) { return is_extra_large(g); }};
    if (alias("xxl")) return {"xxl", [](const DefiningGraph& g) { return is_xxl(g); }};
    if (alias("free-of-infinity") || alias("noinf"))
        return {"free-of-infinity", [](const DefiningGraph& g) { return is_free_of_infinity(g); }};
    if (alias("raag")) return {"raag", [](const DefiningGraph& g) { return is_raag(g); }};
    if (alias("triangle-free") || alias("trianglefree"))
        return {"triangle-free", [](const DefiningGraph& g) { return is_triangle_free(g); }};
    if (alias("spherical")) return {"spherical", [](const DefiningGraph& g) { return is_spherical(g); }};
    throw BadPredicate("unknown predicate \"" + std::string(name) + "\"");
}

inline GraphPredicate predicate_for(ClassId id) {
    switch (id) {
        case ClassId::Connected: return predicate_by_name("connected");
        case ClassId::Irreducible: return predicate_by_name("irreducible");
        case ClassId::Cone: return predicate_by_name("cone");
        case ClassId::TwoTwoFree: return predicate_by_name("22free");
        case ClassId::TwoDimensional: return predicate_by_name("2dim");
        case ClassId::FcType: return predicate_by_name("fc");
        case ClassId::LargeType: return predicate_by_name("large");
        case ClassId::ExtraLargeType: return predicate_by_name("extra-large");
        case ClassId::Xxl: return predicate_by_name("xxl");
        case ClassId::FreeOfInfinity: return predicate_by_name("free-of-infinity");
        case ClassId::Raag: return predicate_by_name("raag");
        case ClassId::TriangleFree: return predicate_by_name("triangle-free");
        case ClassId::Spherical: return predicate_by_name("spherical");
    }
    throw BadPredicate("unhandled class id");
}

/// Number of forbidden labels actually present in the alphabet {inf, 2..m}
/// for the label-threshold classes; min() caps at the alphabet size.
inline std::uint64_t effective_forbidden(std::uint64_t nominal_finite, std::uint64_t m) {
    return nominal_finite > m - 1 ? m - 1 : nominal_finite;
}

/// Closed-form probability for predicates that have one, at (n, m).
inline std::optional<double> exact_probability_closed_form(std::string_view canonical_name, int n,
                                                           std::uint64_t m) {
    const std::string key(canonical_name);
    if (key == "large") return prob_forbidden_labels(n, m, effective_forbidden(1, m)).value();
    if (key == "extra-large") return prob_forbidden_labels(n, m, effective_forbidden(2, m)).value();
    if (key == "xxl") return prob_forbidden_labels(n, m, effective_forbidden(3, m)).value();
    if (key == "free-of-infinity") return prob_forbidden_labels(n, m, 1).value();
    if (key == "raag") {
        // only infinity and 2 permitted: forbid the other m-2 alphabet labels
        if (m == 2) return 1.0;
        return prob_forbidden_labels(n, m, m - 2).value();
    }
    if (key == "22free") return prob_22_free_exact(n, m).value();
    return std::nullopt;
}

/// Limit value along the growth function, where one is known:
/// - connected / irreducible tend to 1; fc, raag, triangle-free and
///   spherical tend to 0, for every growth;
/// - forbidden-label classes (large/extra-large/xxl/free-of-infinity/raag)
///   tend to 1 above exponent 2, to 0 below, and to e^(-k/2) at 1*N^2;
/// - 22free / 2dim tend to 1 above exponent 3/2 and to 0 below (the value
///   at exponent exactly 3/2 is not asserted);
/// - cone tends to 0 (not-cone to 1) below exponent 1.
inline std::optional<double> asymptote_for(std::string_view canonical_name,
                                           const GrowthSpec& growth) {
    const std::string key(canonical_name);
    if (key == "connected" || key == "irreducible") return 1.0;
    if (key == "fc" || key == "raag" || key == "triangle-free" || key == "spherical") return 0.0;
    if (!growth.is_power()) return std::nullopt;
    const Rational& alpha = growth.exponent();
    const Rational& c = growth.coefficient();
    const auto forbidden = [&](std::uint64_t k) -> std::optional<double> {
        if (alpha > 2) return 1.0;
        if (alpha < 2) return 0.0;
        if (c == 1) return limit_forbidden(k);
        return std::nullopt;
    };
    if (key == "large") return forbidden(1);
    if (key == "extra-large") return forbidden(2);
    if (key == "xxl") return forbidden(3);
    if (key == "free-of-infinity") return forbidden(1);
    if (key == "22free" || key == "2dim") {
        if (alpha > Rational(3, 2)) return 1.0;
        if (alpha < Rational(3, 2)) return 0.0;
        return std::nullopt;
    }
    if (key == "cone") {
        if (alpha < 1) return 0.0;
        return std::nullopt;
    }
    if (key == "not-cone") {
        if (alpha < 1) return 1.0;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace artin
