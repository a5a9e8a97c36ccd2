#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

/// Edge coefficient of a defining graph: a finite integer >= 2, or infinity.
/// Infinity is a first-class value meaning "no edge"; there is no label 0 or 1.
class Label {
  public:
    constexpr Label() : v_(0) {}

    static constexpr Label infinite() { return Label(); }

    static Label finite(std::uint64_t m) {
        if (m < 2) throw BadLabel("finite labels start at 2, got " + std::to_string(m));
        if (m > 0xffffffffull) throw BadLabel("label too large: " + std::to_string(m));
        Label l;
        l.v_ = static_cast<std::uint32_t>(m);
        return l;
    }

    constexpr bool is_finite() const { return v_ != 0; }
    constexpr bool is_infinite() const { return v_ == 0; }

    /// Finite value; only meaningful when is_finite().
    constexpr std::uint32_t value() const { return v_; }

    friend constexpr bool operator==(Label a, Label b) = default;

  private:
    std::uint32_t v_;  // 0 encodes infinity
};

/// Labeled defining graph on `n` vertices: every unordered vertex pair
/// {i, j} carries a Label, stored as the upper triangle in lexicographic
/// (i, j) order. Values are immutable after construction and safe to share
/// across threads.
class DefiningGraph {
  public:
    struct Assignment {
        int i;
        int j;
        Label label;
    };

    /// Graph with every pair labeled infinity.
    explicit DefiningGraph(int n) : n_(check_rank(n)), labels_(pair_count_of(n)) {}

    /// Listed pairs carry their labels, all unlisted pairs are infinite.
    DefiningGraph(int n, std::span<const Assignment> assignments) : DefiningGraph(n) {
        std::vector<bool> seen(labels_.size(), false);
        for (const auto& a : assignments) {
            const std::size_t idx = pair_index(n_, a.i, a.j);
            if (seen[idx])
                throw DuplicateEdge("duplicate pair (" + std::to_string(a.i) + "," +
                                    std::to_string(a.j) + ")");
            seen[idx] = true;
            labels_[idx] = a.label;
        }
    }

    DefiningGraph(int n, std::initializer_list<Assignment> assignments)
        : DefiningGraph(n, std::span<const Assignment>(assignments.begin(), assignments.size())) {}

    /// Adopts a full upper-triangle label vector (lexicographic pair order).
    /// Used by the sampler and the enumeration engine.
    static DefiningGraph from_labels(int n, std::vector<Label> labels) {
        check_rank(n);
        if (labels.size() != pair_count_of(n))
            throw BadVertex("label vector has " + std::to_string(labels.size()) +
                            " entries, expected " + std::to_string(pair_count_of(n)));
        DefiningGraph g(n);
        g.labels_ = std::move(labels);
        return g;
    }

    int rank() const { return n_; }

    std::size_t pair_count() const { return labels_.size(); }

    Label label(int i, int j) const { return labels_[pair_index(n_, i, j)]; }

    /// Raw storage, lexicographic over pairs (0,1), (0,2), ..., (n-2,n-1).
    const std::vector<Label>& labels() const { return labels_; }

    static std::size_t pair_count_of(int n) {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    /// Index of pair {i, j} in lexicographic upper-triangle order.
    static std::size_t pair_index(int n, int i, int j) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n)
            throw BadVertex("bad vertex pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") for rank " + std::to_string(n));
        if (i > j) std::swap(i, j);
        return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
    }

    friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

  private:
    static int check_rank(int n) {
        if (n < 1) throw BadVertex("rank must be >= 1, got " + std::to_string(n));
        return n;
    }

    int n_;
    std::vector<Label> labels_;
};

/// The family of all defining graphs on `n` vertices with labels drawn from
/// the M-element alphabet {infinity, 2, 3, ..., m}.
struct SampleSpace {
    int n;
    std::uint64_t m;

    SampleSpace(int n_, std::uint64_t m_) : n(n_), m(m_) {
        if (n < 1) throw BadVertex("rank must be >= 1, got " + std::to_string(n));
        if (m < 2) throw BadLabel("alphabet maximum must be >= 2, got " + std::to_string(m));
        if (m > 0xffffffffull) throw BadLabel("alphabet maximum too large: " + std::to_string(m));
    }

    std::size_t pair_count() const { return DefiningGraph::pair_count_of(n); }

    /// Alphabet digit -> label. Digit order is infinity < 2 < 3 < ... < m,
    /// shared with the enumeration engine.
    Label digit_to_label(std::uint64_t d) const {
        return d == 0 ? Label::infinite() : Label::finite(d + 1);
    }

    std::uint64_t label_to_digit(Label l) const {
        return l.is_infinite() ? 0 : l.value() - 1;
    }
};

}  // namespace artin
