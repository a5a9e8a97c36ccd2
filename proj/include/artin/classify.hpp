#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/cliques.hpp"
#include "artin/coxeter.hpp"
#include "artin/graph.hpp"

namespace artin {

enum class ClassId {
    Connected,
    Irreducible,
    Cone,
    TwoTwoFree,
    TwoDimensional,
    FcType,
    LargeType,
    ExtraLargeType,
    Xxl,
    FreeOfInfinity,
    Raag,
    TriangleFree,
    Spherical,
};

namespace detail {

/// Adjacency of the finite-label edge graph.
inline AdjacencyBits finite_adjacency(const DefiningGraph& g) {
    const int n = g.rank();
    AdjacencyBits adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.label(i, j).is_finite()) adj.add_edge(i, j);
    return adj;
}

/// Connectivity of an arbitrary edge predicate via union-find.
template <class EdgePred>
bool connected_under(int n, EdgePred has_edge) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!has_edge(i, j)) continue;
            const int a = find(i), b = find(j);
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
    }
    return components == 1;
}

}  // namespace detail

/// Connectivity of the finite-label edge graph; a single vertex is connected.
inline bool is_connected(const DefiningGraph& g) {
    return detail::connected_under(g.rank(),
                                   [&](int i, int j) { return g.label(i, j).is_finite(); });
}

/// Whether the vertex set splits as V1 ⊔ V2 (both non-empty) with every cross
/// pair labeled exactly k. Equivalent to: the auxiliary graph whose edges are
/// the pairs with label != k is disconnected.
inline bool is_k_join(const DefiningGraph& g, Label k) {
    if (g.rank() < 2) throw TooSmall("join decompositions need at least 2 vertices");
    return !detail::connected_under(g.rank(),
                                    [&](int i, int j) { return g.label(i, j) != k; });
}

/// Not a 2-join; a single vertex is irreducible by convention.
inline bool is_irreducible(const DefiningGraph& g) {
    if (g.rank() < 2) return true;
    return !is_k_join(g, Label::finite(2));
}

/// Some vertex carries a finite label to every other vertex. A single vertex
/// is a cone (over the empty graph) by convention.
inline bool is_cone(const DefiningGraph& g) {
    const int n = g.rank();
    for (int v = 0; v < n; ++v) {
        bool all_finite = true;
        for (int u = 0; u < n && all_finite; ++u)
            if (u != v && g.label(v, u).is_infinite()) all_finite = false;
        if (all_finite) return true;
    }
    return false;
}

/// No vertex is incident to two or more edges labeled 2.
inline bool is_22_free(const DefiningGraph& g) {
    const int n = g.rank();
    for (int v = 0; v < n; ++v) {
        int twos = 0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            const Label l = g.label(v, u);
            if (l.is_finite() && l.value() == 2 && ++twos >= 2) return false;
        }
    }
    return true;
}

/// Every vertex triple spans a non-spherical triangle. Returns false for
/// n < 3 (the condition quantifies over triples; the convention is flagged
/// in the docs). A spherical triple always contains an edge labeled 2 —
/// labels all >= 3 give a reciprocal sum of at most 1 — so only triples
/// through a 2-edge need checking.
inline bool is_two_dimensional(const DefiningGraph& g) {
    const int n = g.rank();
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Label lij = g.label(i, j);
            if (!lij.is_finite() || lij.value() != 2) continue;
            for (int c = 0; c < n; ++c) {
                if (c == i || c == j) continue;
                if (triangle_is_spherical(lij, g.label(i, c), g.label(j, c))) return false;
            }
        }
    }
    return true;
}

/// Every maximal clique of the finite-label edge graph generates a finite
/// Coxeter group. Sufficient by heredity: principal submatrices of a
/// positive definite cosine matrix stay positive definite, so sub-cliques of
/// spherical cliques are spherical. Throws CliqueBudgetExceeded when the
/// maximal-clique count passes `budget` (no answer, never a wrong one).
inline bool is_fc_type(const DefiningGraph& g, std::uint64_t budget = kDefaultCliqueBudget) {
    const AdjacencyBits adj = detail::finite_adjacency(g);
    bool ok = true;
    struct Done {};
    try {
        for_each_maximal_clique(adj, budget, [&](const std::vector<int>& clique) {
            if (!coxeter_clique_is_finite(g, clique)) {
                ok = false;
                throw Done{};
            }
        });
    } catch (const Done&) {
    }
    return ok;
}

inline bool is_large_type(const DefiningGraph& g) {
    for (const Label l : g.labels())
        if (l.is_finite() && l.value() < 3) return false;
    return true;
}

inline bool is_extra_large(const DefiningGraph& g) {
    for (const Label l : g.labels())
        if (l.is_finite() && l.value() < 4) return false;
    return true;
}

inline bool is_xxl(const DefiningGraph& g) {
    for (const Label l : g.labels())
        if (l.is_finite() && l.value() < 5) return false;
    return true;
}

inline bool is_free_of_infinity(const DefiningGraph& g) {
    for (const Label l : g.labels())
        if (l.is_infinite()) return false;
    return true;
}

inline bool is_raag(const DefiningGraph& g) {
    for (const Label l : g.labels())
        if (l.is_finite() && l.value() != 2) return false;
    return true;
}

/// The finite-label edge graph has no 3-cycle.
inline bool is_triangle_free(const DefiningGraph& g) {
    const int n = g.rank();
    if (n < 3) return true;
    const AdjacencyBits adj = detail::finite_adjacency(g);
    const int w = adj.words();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!adj.has_edge(i, j)) continue;
            const std::uint64_t* ri = adj.row(i);
            const std::uint64_t* rj = adj.row(j);
            for (int t = 0; t < w; ++t)
                if (ri[t] & rj[t]) return false;
        }
    }
    return true;
}

/// Complete graph (no infinite pair) whose full Coxeter group is finite.
inline bool is_spherical(const DefiningGraph& g) {
    if (!is_free_of_infinity(g)) return false;
    std::vector<int> all(g.rank());
    for (int i = 0; i < g.rank(); ++i) all[i] = i;
    return coxeter_clique_is_finite(g, all);
}

// Known-property names attached by classify_all. One-directional: a property
// is listed only when a hypothesis below certifies it, never negated.
namespace props {
inline constexpr const char* kTorsionFree = "torsion-free";
inline constexpr const char* kKPi1 = "K(pi,1)";
inline constexpr const char* kWordConjugacy = "solvable word and conjugacy problems";
inline constexpr const char* kTitsAlternative = "Tits alternative";
inline constexpr const char* kAcylHyperbolic = "acylindrically hyperbolic";
inline constexpr const char* kTrivialCentre = "trivial centre";
inline constexpr const char* kParabolics = "parabolic subgroups closed under intersections";
inline constexpr const char* kCat0 = "CAT(0)";
inline constexpr const char* kHierHyperbolic = "hierarchically hyperbolic";
inline constexpr const char* kSystolic = "systolic";
inline constexpr const char* kBiautomatic = "biautomatic";
inline constexpr const char* kOutFinite = "finite outer automorphism group";
}  // namespace props

/// Membership flags for every studied class, plus the derived list of known
/// properties.
struct ClassReport {
    bool connected = false;
    bool irreducible = false;
    bool cone = false;
    bool two_two_free = false;
    bool two_dimensional = false;
    bool fc_type = false;
    bool large_type = false;
    bool extra_large_type = false;
    bool xxl = false;
    bool free_of_infinity = false;
    bool raag = false;
    bool triangle_free = false;
    bool spherical = false;
    std::vector<std::string> properties;

    bool get(ClassId id) const {
        switch (id) {
            case ClassId::Connected: return connected;
            case ClassId::Irreducible: return irreducible;
            case ClassId::Cone: return cone;
            case ClassId::TwoTwoFree: return two_two_free;
            case ClassId::TwoDimensional: return two_dimensional;
            case ClassId::FcType: return fc_type;
            case ClassId::LargeType: return large_type;
            case ClassId::ExtraLargeType: return extra_large_type;
            case ClassId::Xxl: return xxl;
            case ClassId::FreeOfInfinity: return free_of_infinity;
            case ClassId::Raag: return raag;
            case ClassId::TriangleFree: return triangle_free;
            case ClassId::Spherical: return spherical;
        }
        throw Error("unhandled class id");
    }

    /// Flat JSON object of booleans plus a "properties" string array.
    /// Key names are frozen; see the README.
    std::string to_json() const {
        nlohmann::ordered_json doc;
        doc["connected"] = connected;
        doc["irreducible"] = irreducible;
        doc["cone"] = cone;
        doc["two_two_free"] = two_two_free;
        doc["two_dimensional"] = two_dimensional;
        doc["fc_type"] = fc_type;
        doc["large_type"] = large_type;
        doc["extra_large_type"] = extra_large_type;
        doc["xxl"] = xxl;
        doc["free_of_infinity"] = free_of_infinity;
        doc["raag"] = raag;
        doc["triangle_free"] = triangle_free;
        doc["spherical"] = spherical;
        doc["properties"] = properties;
        return doc.dump();
    }
};

/// Evaluates every class predicate and fills the known-property list from
/// the static implication table.
inline ClassReport classify_all(const DefiningGraph& g,
                                std::uint64_t clique_budget = kDefaultCliqueBudget) {
    ClassReport r;
    r.connected = is_connected(g);
    r.irreducible = is_irreducible(g);
    r.cone = is_cone(g);
    r.two_two_free = is_22_free(g);
    r.two_dimensional = is_two_dimensional(g);
    r.fc_type = is_fc_type(g, clique_budget);
    r.large_type = is_large_type(g);
    r.extra_large_type = is_extra_large(g);
    r.xxl = is_xxl(g);
    r.free_of_infinity = is_free_of_infinity(g);
    r.raag = is_raag(g);
    r.triangle_free = is_triangle_free(g);
    r.spherical = is_spherical(g);

    const auto add = [&](const char* p) {
        if (std::find(r.properties.begin(), r.properties.end(), p) == r.properties.end())
            r.properties.emplace_back(p);
    };
    if (r.two_dimensional) {
        add(props::kTorsionFree);
        add(props::kKPi1);
        add(props::kWordConjugacy);
        add(props::kTitsAlternative);
    }
    if (r.irreducible && !r.cone) {
        add(props::kAcylHyperbolic);
        add(props::kTrivialCentre);
    }
    if (r.two_two_free && r.two_dimensional) add(props::kParabolics);
    if (r.xxl) add(props::kCat0);
    if (r.extra_large_type) add(props::kHierHyperbolic);
    if (r.large_type) {
        add(props::kSystolic);
        add(props::kBiautomatic);
    }
    if (r.large_type && r.free_of_infinity) add(props::kOutFinite);
    return r;
}

}  // namespace artin
