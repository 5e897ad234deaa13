#pragma once

// A TermKey is one monomial over the generating set: a multiset of partitions,
// each factor standing for one diagonal-sum form. The key produced from a
// permutation sigma and a partition L groups L's parts along sigma's cycles;
// the same key produced from a set partition groups them along its blocks.

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "prodseries/combinatorics.hpp"

namespace prodseries {

class TermKey {
public:
    TermKey() = default;

    explicit TermKey(std::vector<Partition> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        std::vector<int> all;
        for (const auto& f : factors_) all.insert(all.end(), f.parts().begin(), f.parts().end());
        merged_ = Partition(std::move(all));
    }

    // caller guarantees merged is the multiset union of the factors' parts
    TermKey(std::vector<Partition> factors, Partition merged)
        : factors_(std::move(factors)), merged_(std::move(merged)) {
        std::sort(factors_.begin(), factors_.end());
    }

    TermKey(std::initializer_list<Partition> factors) : TermKey(std::vector<Partition>(factors)) {}

    const std::vector<Partition>& factors() const { return factors_; }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    int degree() const { return merged_.sum(); }

    // Multiset union of all factor parts; for a key built from (sigma, L) this
    // is L itself.
    const Partition& merged() const { return merged_; }

    friend bool operator==(const TermKey& a, const TermKey& b) { return a.factors_ == b.factors_; }

    // Keys sort by their source partition first, then lexicographically on the
    // factor sequence. This reproduces the order of the low-degree displays:
    // [[2]] < [[1],[1]] < [[1,1]].
    friend std::strong_ordering operator<=>(const TermKey& a, const TermKey& b) {
        if (auto c = a.merged_ <=> b.merged_; c != 0) return c;
        return a.factors_ <=> b.factors_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += ',';
            s += factors_[i].to_string();
        }
        return s + "]";
    }

private:
    std::vector<Partition> factors_;
    Partition merged_;
};

// One factor per cycle of sigma: the multiset {L_j : j in cycle}.
inline TermKey term_key_of(const Permutation& sigma, const Partition& L) {
    if (sigma.degree() != L.length())
        throw std::invalid_argument("term_key_of: permutation degree " + std::to_string(sigma.degree()) +
                                    " does not match partition length " + std::to_string(L.length()));
    const auto& parts = L.parts();
    std::vector<Partition> factors;
    for (const auto& cyc : cycle_decomposition(sigma).cycles) {
        std::vector<int> block;
        block.reserve(cyc.size());
        for (int idx : cyc) block.push_back(parts[idx - 1]);
        factors.emplace_back(std::move(block));
    }
    return TermKey(std::move(factors));
}

// One factor per block. All sigma whose cycle supports induce P map to this key.
inline TermKey term_key_of(const SetPartition& P, const Partition& L) {
    if (P.degree() != L.length())
        throw std::invalid_argument("term_key_of: set partition degree does not match partition length");
    const auto& parts = L.parts();
    std::vector<Partition> factors;
    for (const auto& blk : P.blocks) {
        std::vector<int> block;
        block.reserve(blk.size());
        for (int idx : blk) block.push_back(parts[idx - 1]);
        factors.emplace_back(std::move(block));
    }
    return TermKey(std::move(factors));
}

}  // namespace prodseries
