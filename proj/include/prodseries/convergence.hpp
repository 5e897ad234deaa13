#pragma once

// Floating-mode evaluation for truncation/convergence runs. Exact arithmetic
// is the default everywhere else; this path exists for generators whose
// entries are irrational (alt_quartic) and for large row counts. The outer
// row sums use pairwise (tree) summation: the interesting truncation runs
// involve conditionally convergent series with heavy cancellation.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "prodseries/series.hpp"

namespace prodseries {

// Pure function of (row, power): the lambda^k coefficient of factor n.
using RowGenerator = std::function<double(std::int64_t n, int k)>;

// Built-in generators (names fixed):
//   alt_quartic   a_{n,k} = (-1)^{nk} / (k! n^{k/4})
//   euler         a_{n,k} = -1 if k = n, else 0
//   geometric:x   a_{n,k} = x^k
//   binomial:x    a_{n,1} = x, else 0
inline RowGenerator make_generator(std::string_view name) {
    auto param_of = [](std::string_view spec) -> double {
        const auto colon = spec.find(':');
        if (colon == std::string_view::npos || colon + 1 == spec.size())
            throw std::invalid_argument("generator '" + std::string(spec) + "' needs a parameter, e.g. '" +
                                        std::string(spec.substr(0, colon)) + ":1/2'");
        const std::string p(spec.substr(colon + 1));
        try {
            return rational_to_double(parse_rational(p));
        } catch (const std::invalid_argument&) {
            std::size_t used = 0;
            const double v = std::stod(p, &used);
            if (used != p.size()) throw std::invalid_argument("generator parameter '" + p + "' is not a number");
            return v;
        }
    };
    if (name == "alt_quartic") {
        return [](std::int64_t n, int k) {
            double kfact = 1.0;
            for (int i = 2; i <= k; ++i) kfact *= i;
            const double mag = 1.0 / (kfact * std::pow(static_cast<double>(n), 0.25 * k));
            return ((n % 2) && (k % 2)) ? -mag : mag;
        };
    }
    if (name == "euler") {
        return [](std::int64_t n, int k) { return (static_cast<std::int64_t>(k) == n) ? -1.0 : 0.0; };
    }
    if (name.substr(0, name.find(':')) == "geometric") {
        const double x = param_of(name);
        return [x](std::int64_t, int k) { return std::pow(x, k); };
    }
    if (name.substr(0, name.find(':')) == "binomial") {
        const double x = param_of(name);
        return [x](std::int64_t, int k) { return k == 1 ? x : 0.0; };
    }
    throw std::invalid_argument("unknown generator '" + std::string(name) +
                                "' (built-ins: alt_quartic, euler, geometric:x, binomial:x)");
}

// View a table's rows as a generator (used to compare floating against exact).
inline RowGenerator table_generator(const SeriesTable& t) {
    return [&t](std::int64_t n, int k) { return rational_to_double(t.at(static_cast<int>(n), k)); };
}

// Pairwise (tree) sum of term(i) for i in [lo, hi].
inline double pairwise_sum(std::int64_t lo, std::int64_t hi,
                           const std::function<double(std::int64_t)>& term) {
    if (lo > hi) return 0.0;
    if (hi - lo < 64) {
        double s = 0.0;
        for (std::int64_t i = lo; i <= hi; ++i) s += term(i);
        return s;
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(lo, mid, term) + pairwise_sum(mid + 1, hi, term);
}

inline double evaluate_form_fp(const Partition& L, const RowGenerator& gen, std::int64_t N) {
    if (L.empty()) throw std::invalid_argument("evaluate_form_fp: empty partition");
    return pairwise_sum(1, N, [&](std::int64_t n) {
        double prod = 1.0;
        for (int k : L.parts()) prod *= gen(n, k);
        return prod;
    });
}

inline double evaluate_formula_fp(const FormulaPolynomial& f, const RowGenerator& gen, std::int64_t N) {
    std::map<Partition, double> form_cache;
    double total = 0.0;
    for (const auto& [key, coeff] : f.terms()) {
        double prod = rational_to_double(coeff);
        for (const auto& factor : key.factors()) {
            auto it = form_cache.find(factor);
            if (it == form_cache.end()) it = form_cache.emplace(factor, evaluate_form_fp(factor, gen, N)).first;
            prod *= it->second;
        }
        total += prod;
    }
    return total;
}

// The truncated coefficients X_k^(N) for each N in Ns (first N rows each).
inline std::vector<double> truncation_sequence(const RowGenerator& gen, int k,
                                               const std::vector<std::int64_t>& Ns,
                                               const EnumerationCaps& caps = {}) {
    if (k < 1) throw std::invalid_argument("truncation_sequence: k must be >= 1");
    const FormulaPolynomial& f = xk_formula(k, caps);
    std::vector<double> out;
    out.reserve(Ns.size());
    for (std::int64_t N : Ns) {
        if (N < 1) throw std::invalid_argument("truncation_sequence: N must be >= 1");
        out.push_back(evaluate_formula_fp(f, gen, N));
    }
    return out;
}

// Heuristic tail estimate for alternating generators: the mean of X_k^(N-1)
// and X_k^(N) cancels the leading oscillation. Not applied by default
// anywhere; callers opt in.
inline double alternating_tail_estimate(const RowGenerator& gen, int k, std::int64_t N,
                                        const EnumerationCaps& caps = {}) {
    if (N < 2) throw std::invalid_argument("alternating_tail_estimate: N must be >= 2");
    const FormulaPolynomial& f = xk_formula(k, caps);
    return 0.5 * (evaluate_formula_fp(f, gen, N - 1) + evaluate_formula_fp(f, gen, N));
}

// Limit of an alternating series by repeated midpoint averaging of the last
// `levels`+1 partial sums S_{N-levels}..S_N. Each averaging level knocks out
// the next term of the tail's asymptotic expansion.
inline double alternating_series_limit(const std::function<double(std::int64_t)>& term,
                                       std::int64_t N, int levels = 24) {
    if (levels < 1 || N <= levels) throw std::invalid_argument("alternating_series_limit: need N > levels >= 1");
    double s = 0.0;
    std::vector<double> tail;
    tail.reserve(levels + 1);
    for (std::int64_t n = 1; n <= N; ++n) {
        s += term(n);
        if (n > N - levels - 1) tail.push_back(s);
    }
    for (std::size_t width = tail.size(); width > 1; --width)
        for (std::size_t i = 0; i + 1 < width; ++i) tail[i] = 0.5 * (tail[i] + tail[i + 1]);
    return tail[0];
}

}  // namespace prodseries
