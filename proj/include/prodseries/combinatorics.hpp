#pragma once

// Combinatorial ground layer: integer partitions in canonical sorted form,
// permutations of {1,..,m} with cycle structure and sign, and set partitions
// of {1,..,m}. Everything is immutable after construction and enumeration
// orders are fixed, so streamed output is reproducible byte-for-byte:
//   partitions:     lexicographic on the non-decreasing part sequences
//   permutations:   lexicographic on image sequences
//   set partitions: restricted-growth-string order

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "prodseries/errors.hpp"
#include "prodseries/rational.hpp"

namespace prodseries {

// A non-ordered tuple of positive integers, stored non-decreasing. Sorting on
// construction is what realizes the "forget the ordering" quotient: two tuples
// are the same partition iff their sorted forms are equal.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
        std::sort(parts_.begin(), parts_.end());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int max_part() const { return parts_.empty() ? 0 : parts_.back(); }

    friend bool operator==(const Partition& a, const Partition& b) = default;

    // Total order used everywhere a deterministic order on partitions is
    // needed (term-key canonicalization, JSON output): sum, then length,
    // then lexicographic on the sorted parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.sum() <=> b.sum(); c != 0) return c;
        if (auto c = a.length() <=> b.length(); c != 0) return c;
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

// All partitions of k, lexicographic on the sorted part sequences; |result| = p(k).
inline std::vector<Partition> partitions_of(int k) {
    if (k < 1) throw std::invalid_argument("partitions_of: k must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Ascending compositions: extend with parts >= the last one. Recursing on
    // the smallest next part first yields lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, 1);
    return out;
}

// Order of the stabilizer of an ordered representative of L under the S_m
// coordinate action: the product of factorials of part multiplicities.
inline Integer stabilizer_count(const Partition& L) {
    if (L.empty()) throw std::invalid_argument("stabilizer_count: empty partition");
    Integer c = 1;
    const auto& parts = L.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        c *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return c;
}

inline int length(const Partition& L) { return L.length(); }

// A bijection on {1,..,m}; images[i-1] = sigma(i).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> imgs) : images(std::move(imgs)) {
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: images must be a bijection on {1,..,m}");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int m) {
        std::vector<int> v(m);
        std::iota(v.begin(), v.end(), 1);
        Permutation p;
        p.images = std::move(v);
        return p;
    }

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Disjoint cycles covering {1,..,m}; length-1 cycles are kept. Canonical form:
// each cycle starts at its smallest element, cycles sorted by that element.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;

    int degree() const {
        int m = 0;
        for (const auto& c : cycles) m += static_cast<int>(c.size());
        return m;
    }

    friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
    const int m = p.degree();
    CycleDecomposition d;
    std::vector<bool> seen(m + 1, false);
    for (int start = 1; start <= m; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int i = start; !seen[i]; i = p(i)) {
            seen[i] = true;
            cyc.push_back(i);
        }
        d.cycles.push_back(std::move(cyc));
    }
    return d;
}

inline Permutation reconstruct(const CycleDecomposition& d) {
    const int m = d.degree();
    std::vector<int> images(m, 0);
    for (const auto& cyc : d.cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (from < 1 || from > m || images[from - 1] != 0)
                throw std::invalid_argument("reconstruct: cycles are not disjoint on {1,..,m}");
            images[from - 1] = to;
        }
    }
    return Permutation(std::move(images));
}

// Parity as (-1)^(m - number of cycles).
inline int sign(const Permutation& p) {
    const int m = p.degree();
    int cycles = 0;
    std::vector<bool> seen(m + 1, false);
    for (int start = 1; start <= m; ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (int i = start; !seen[i]; i = p(i)) seen[i] = true;
    }
    return ((m - cycles) % 2 == 0) ? 1 : -1;
}

// Lazy stream over S_m in lexicographic order of image sequences.
class PermutationRange {
public:
    explicit PermutationRange(int m, const EnumerationCaps& caps = {}) : m_(m) {
        if (m < 1) throw std::invalid_argument("PermutationRange: m must be >= 1");
        if (m > caps.permutation_max)
            throw resource_limit_error("permutation enumeration for m=" + std::to_string(m) +
                                       " exceeds cap " + std::to_string(caps.permutation_max));
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;

        iterator() : done_(true) {}
        explicit iterator(int m) : perm_(Permutation::identity(m)), done_(false) {}

        const Permutation& operator*() const { return perm_; }
        const Permutation* operator->() const { return &perm_; }

        iterator& operator++() {
            done_ = !std::next_permutation(perm_.images.begin(), perm_.images.end());
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        Permutation perm_;
        bool done_;
    };

    iterator begin() const { return iterator(m_); }
    std::default_sentinel_t end() const { return {}; }

private:
    int m_;
};

// Disjoint non-empty blocks covering {1,..,m}, each block sorted, blocks
// ordered by first element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int degree() const {
        int m = 0;
        for (const auto& b : blocks) m += static_cast<int>(b.size());
        return m;
    }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.blocks <=> b.blocks; }
};

// The set partition whose blocks are the cycle supports of sigma.
inline SetPartition cycle_support_partition(const Permutation& p) {
    SetPartition sp;
    for (auto& cyc : cycle_decomposition(p).cycles) {
        std::sort(cyc.begin(), cyc.end());
        sp.blocks.push_back(std::move(cyc));
    }
    return sp;
}

// Lazy stream over set partitions of {1,..,m} in restricted-growth-string
// order; total count is the Bell number B_m.
class SetPartitionRange {
public:
    explicit SetPartitionRange(int m, const EnumerationCaps& caps = {}) : m_(m) {
        if (m < 1) throw std::invalid_argument("SetPartitionRange: m must be >= 1");
        if (m > caps.set_partition_max)
            throw resource_limit_error("set partition enumeration for m=" + std::to_string(m) +
                                       " exceeds cap " + std::to_string(caps.set_partition_max));
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = SetPartition;
        using difference_type = std::ptrdiff_t;

        iterator() : done_(true) {}
        explicit iterator(int m) : rgs_(m, 0), maxp_(m, 0), done_(false) {}

        SetPartition operator*() const {
            SetPartition sp;
            const int nblocks = *std::max_element(rgs_.begin(), rgs_.end()) + 1;
            sp.blocks.resize(nblocks);
            for (std::size_t i = 0; i < rgs_.size(); ++i)
                sp.blocks[rgs_[i]].push_back(static_cast<int>(i) + 1);
            return sp;
        }

        // the restricted growth string itself; rgs()[i] is the block index of i+1
        const std::vector<int>& rgs() const { return rgs_; }

        iterator& operator++() {
            // next restricted growth string: rgs_[i] may rise to maxp_[i-1]+1
            const int m = static_cast<int>(rgs_.size());
            for (int i = m - 1; i >= 1; --i) {
                if (rgs_[i] <= maxp_[i - 1]) {
                    ++rgs_[i];
                    maxp_[i] = std::max(maxp_[i - 1], rgs_[i]);
                    for (int j = i + 1; j < m; ++j) {
                        rgs_[j] = 0;
                        maxp_[j] = maxp_[i];
                    }
                    return *this;
                }
            }
            done_ = true;
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        std::vector<int> rgs_;
        std::vector<int> maxp_;
        bool done_;
    };

    iterator begin() const { return iterator(m_); }
    std::default_sentinel_t end() const { return {}; }

private:
    int m_;
};

inline PermutationRange permutations_of(int m, const EnumerationCaps& caps = {}) {
    return PermutationRange(m, caps);
}

inline SetPartitionRange set_partitions_of(int m, const EnumerationCaps& caps = {}) {
    return SetPartitionRange(m, caps);
}

}  // namespace prodseries
