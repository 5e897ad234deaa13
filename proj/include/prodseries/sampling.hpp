#pragma once

// Seeded, platform-independent sampling for verification runs. Raw
// mt19937_64 output is reduced by hand (std::uniform_int_distribution is
// implementation-defined, which would break "same seed, same bytes").

#include <cstdint>
#include <random>

#include "prodseries/combinatorics.hpp"
#include "prodseries/series.hpp"

namespace prodseries {

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    // uniform-ish in [lo, hi]; modulo bias is irrelevant at these range sizes
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// Entries with numerators in [-9,9] and denominators in [1,9].
inline SeriesTable random_series_table(SampleRng& rng, int N, int K) {
    SeriesTable t(N, K);
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= K; ++k)
            t.at(n, k) = Rational(rng.range(-9, 9), rng.range(1, 9));
    return t;
}

inline Partition random_partition(SampleRng& rng, int max_len, int max_part) {
    const int len = static_cast<int>(rng.range(1, max_len));
    std::vector<int> parts(len);
    for (int& p : parts) p = static_cast<int>(rng.range(1, max_part));
    return Partition(std::move(parts));
}

}  // namespace prodseries
