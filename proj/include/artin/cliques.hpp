#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

/// Adjacency as bitset rows; vertices are 0..n-1.
class AdjacencyBits {
  public:
    explicit AdjacencyBits(int n)
        : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {}

    void add_edge(int i, int j) {
        rows_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
        rows_[static_cast<std::size_t>(j) * words_ + i / 64] |= std::uint64_t(1) << (i % 64);
    }

    bool has_edge(int i, int j) const {
        return rows_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64) & 1;
    }

    int size() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int i) const { return rows_.data() + static_cast<std::size_t>(i) * words_; }

  private:
    int n_;
    int words_;
    std::vector<std::uint64_t> rows_;
};

inline constexpr std::uint64_t kDefaultCliqueBudget = 1'000'000;

/// Bron-Kerbosch with pivoting over bitsets. Invokes `emit` once per maximal
/// clique of `adj` (isolated vertices count as size-1 cliques). Throws
/// CliqueBudgetExceeded after `budget` cliques: the enumeration was cut
/// short, no answer is implied.
inline void for_each_maximal_clique(const AdjacencyBits& adj, std::uint64_t budget,
                                    const std::function<void(const std::vector<int>&)>& emit) {
    const int n = adj.size();
    const int w = adj.words();
    std::uint64_t emitted = 0;
    std::vector<int> current;

    using Set = std::vector<std::uint64_t>;
    std::function<void(Set&, Set&)> expand = [&](Set& cand, Set& excl) {
        bool cand_empty = true, excl_empty = true;
        for (int t = 0; t < w; ++t) {
            cand_empty &= cand[t] == 0;
            excl_empty &= excl[t] == 0;
        }
        if (cand_empty && excl_empty) {
            if (++emitted > budget)
                throw CliqueBudgetExceeded("maximal clique budget of " + std::to_string(budget) +
                                           " exceeded");
            emit(current);
            return;
        }
        // pivot: vertex of cand|excl with the most neighbours in cand
        int pivot = -1, best = -1;
        for (int t = 0; t < w; ++t) {
            std::uint64_t both = cand[t] | excl[t];
            while (both) {
                const int u = t * 64 + std::countr_zero(both);
                both &= both - 1;
                int deg = 0;
                const std::uint64_t* r = adj.row(u);
                for (int s = 0; s < w; ++s) deg += std::popcount(r[s] & cand[s]);
                if (deg > best) {
                    best = deg;
                    pivot = u;
                }
            }
        }
        Set work(w);
        const std::uint64_t* pr = adj.row(pivot);
        for (int t = 0; t < w; ++t) work[t] = cand[t] & ~pr[t];
        for (int t = 0; t < w; ++t) {
            while (work[t]) {
                const int v = t * 64 + std::countr_zero(work[t]);
                work[t] &= work[t] - 1;
                const std::uint64_t* rv = adj.row(v);
                Set next_cand(w), next_excl(w);
                for (int s = 0; s < w; ++s) {
                    next_cand[s] = cand[s] & rv[s];
                    next_excl[s] = excl[s] & rv[s];
                }
                current.push_back(v);
                expand(next_cand, next_excl);
                current.pop_back();
                cand[t] &= ~(std::uint64_t(1) << (v % 64));
                excl[t] |= std::uint64_t(1) << (v % 64);
            }
        }
    };

    Set cand(w, 0), excl(w, 0);
    for (int v = 0; v < n; ++v) cand[v / 64] |= std::uint64_t(1) << (v % 64);
    expand(cand, excl);
}

}  // namespace artin
