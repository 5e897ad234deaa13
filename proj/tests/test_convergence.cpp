#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "prodseries/convergence.hpp"
#include "prodseries/sampling.hpp"

using namespace prodseries;

TEST_CASE("generator construction and values") {
    auto alt = make_generator("alt_quartic");
    CHECK(alt(1, 1) == Catch::Approx(-1.0));                       // (-1)^1 / (1! 1^(1/4))
    CHECK(alt(4, 2) == Catch::Approx(1.0 / (2.0 * 2.0)));          // 1/(2! 4^(1/2))
    CHECK(alt(3, 1) == Catch::Approx(-1.0 / std::pow(3.0, 0.25)));

    auto euler = make_generator("euler");
    CHECK(euler(3, 3) == -1.0);
    CHECK(euler(3, 2) == 0.0);

    auto geo = make_generator("geometric:1/2");
    CHECK(geo(9, 3) == Catch::Approx(0.125));

    auto bin = make_generator("binomial:3");
    CHECK(bin(5, 1) == 3.0);
    CHECK(bin(5, 2) == 0.0);

    CHECK_THROWS_AS(make_generator("nope"), std::invalid_argument);
    CHECK_THROWS_AS(make_generator("geometric"), std::invalid_argument);
    CHECK_THROWS_AS(make_generator("binomial:zzz"), std::invalid_argument);
}

TEST_CASE("pairwise sum matches sequential on benign input") {
    std::vector<double> v(1000);
    double seq = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = 1.0 / (1.0 + static_cast<double>(i));
        seq += v[i];
    }
    double tree = pairwise_sum(0, static_cast<std::int64_t>(v.size()) - 1,
                               [&](std::int64_t i) { return v[i]; });
    CHECK(tree == Catch::Approx(seq).epsilon(1e-13));
}

TEST_CASE("truncation sequence on euler rows is the pentagonal coefficient") {
    auto seq = truncation_sequence(make_generator("euler"), 5, {5, 6, 10});
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == 1.0);
    CHECK(seq[1] == 1.0);
    CHECK(seq[2] == 1.0);
}

TEST_CASE("truncation sequence of the zero generator is zero") {
    auto seq = truncation_sequence(make_generator("geometric:0"), 3, {1, 10, 100});
    for (double v : seq) CHECK(v == 0.0);
}

TEST_CASE("truncation sequence argument checks") {
    CHECK_THROWS_AS(truncation_sequence(make_generator("euler"), 0, {5}), std::invalid_argument);
    CHECK_THROWS_AS(truncation_sequence(make_generator("euler"), 2, {0}), std::invalid_argument);
}

TEST_CASE("floating evaluation tracks exact evaluation") {
    SampleRng rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = static_cast<int>(rng.range(1, 6));
        const int N = static_cast<int>(rng.range(1, 6));
        auto t = random_series_table(rng, N, k);
        const double exact = rational_to_double(evaluate_formula(xk_formula(k), t));
        const double fp = evaluate_formula_fp(xk_formula(k), table_generator(t), N);
        CHECK(std::abs(fp - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("alt_quartic truncated X_2 is half the squared partial sum") {
    // the a_{n,2} and a_{n,1}^2 columns cancel exactly in reals; the floating
    // path must reproduce (1/2) S_N^2 to rounding error
    auto gen = make_generator("alt_quartic");
    for (std::int64_t N : {100, 1000}) {
        double s = 0;
        for (std::int64_t n = 1; n <= N; ++n) s += gen(n, 1);
        const double x2 = truncation_sequence(gen, 2, {N})[0];
        CHECK(x2 == Catch::Approx(0.5 * s * s).margin(1e-10));
    }
}

TEST_CASE("alternating tail estimate beats the raw value on alt_quartic") {
    auto gen = make_generator("alt_quartic");
    // reference limit M^2/2 via the alternating-series helper
    const double M = alternating_series_limit(
        [&](std::int64_t n) { return gen(n, 1); }, 20000, 24);
    const double target = 0.5 * M * M;
    const double raw = truncation_sequence(gen, 2, {2000})[0];
    const double est = alternating_tail_estimate(gen, 2, 2000);
    CHECK(std::abs(est - target) < std::abs(raw - target) / 10.0);
    CHECK_THROWS_AS(alternating_tail_estimate(gen, 2, 1), std::invalid_argument);
}

TEST_CASE("alternating series limit reaches the known eta values") {
    // sum (-1)^(n-1)/n = ln 2
    const double ln2 = alternating_series_limit(
        [](std::int64_t n) { return (n % 2 ? 1.0 : -1.0) / static_cast<double>(n); }, 5000, 20);
    CHECK(ln2 == Catch::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(alternating_series_limit([](std::int64_t) { return 0.0; }, 10, 20),
                    std::invalid_argument);
}
