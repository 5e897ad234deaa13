#pragma once

// Ordinary Bell polynomials two ways: the classical j-vector sum and the
// coefficient-formula route (evaluate X_k on a table of identical rows), plus
// the alternating expression of the multinomial theorem. The two routes
// double-count the same object and are cross-checked in the tests.
//
// Index conventions collide between the two statements and are pinned here
// once: the public (n, k) is the classical one (degree n, k factors), and the
// formula route uses n = k_cf + N, k = N, where N is the number of identical
// rows and k_cf the coefficient degree.

#include <string>
#include <vector>

#include "prodseries/series.hpp"

namespace prodseries {

// Classical query: degree n, k factors, xs = (x_1, .., x_{n-k+1}).
struct BellQuery {
    int n = 0;
    int k = 0;
    std::vector<Rational> xs;
};

// Direct definition: sum of k!/(j_1! .. j_{n-k+1}!) * prod x_i^{j_i} over
// nonnegative j with sum j_i = k and sum i*j_i = n.
inline Rational bell_ordinary_direct(const BellQuery& q) {
    if (q.k < 1 || q.n < q.k)
        throw std::invalid_argument("bell_ordinary_direct: need n >= k >= 1");
    const int width = q.n - q.k + 1;
    if (static_cast<int>(q.xs.size()) != width)
        throw std::invalid_argument("bell_ordinary_direct: xs must have n-k+1 = " + std::to_string(width) +
                                    " entries, got " + std::to_string(q.xs.size()));
    const Integer kfact = factorial(q.k);
    Rational total = 0;
    // bounded recursion over j-vectors
    auto rec = [&](auto&& self, int i, int jsum, int ijsum, const Rational& xprod, const Integer& jfact) -> void {
        if (i == width) {
            if (jsum == q.k && ijsum == q.n) total += xprod * Rational(kfact, jfact);
            return;
        }
        Rational pow = 1;
        for (int j = 0; jsum + j <= q.k && ijsum + (i + 1) * j <= q.n; ++j) {
            if (j > 0) pow *= q.xs[i];
            self(self, i + 1, jsum + j, ijsum + (i + 1) * j, xprod * pow, jfact * factorial(j));
        }
    };
    rec(rec, 0, 0, 0, Rational(1), Integer(1));
    return total;
}

// B-hat_{k+N,N}(1, a_1, .., a_k) through the coefficient formula: X_k of the
// N-th power, i.e. of a table with N identical rows.
inline Rational bell_via_main(int k, int N, const std::vector<Rational>& a,
                              const EnumerationCaps& caps = {}) {
    if (k < 0) throw std::invalid_argument("bell_via_main: k must be >= 0");
    if (N < 1) throw std::invalid_argument("bell_via_main: N must be >= 1");
    if (k == 0) return 1;
    if (static_cast<int>(a.size()) != k)
        throw std::invalid_argument("bell_via_main: need exactly k = " + std::to_string(k) + " entries");
    SeriesTable t(N, k);
    for (int n = 1; n <= N; ++n)
        for (int j = 1; j <= k; ++j) t.at(n, j) = a[j - 1];
    return evaluate_formula(xk_formula(k, caps), t);
}

// Classical B-hat_{n,k}(x0, xs...) for any leading value:
//   x0 = 0        -> 0 (for n > k)
//   n = k         -> x0^k
//   otherwise     -> x0^k * B-hat via the formula route on (xs / x0)
inline Rational bell_general(int n, int k, const Rational& x0, const std::vector<Rational>& xs,
                             const EnumerationCaps& caps = {}) {
    if (k < 1 || n < k) throw std::invalid_argument("bell_general: need n >= k >= 1");
    if (static_cast<int>(xs.size()) != n - k)
        throw std::invalid_argument("bell_general: xs must have n-k = " + std::to_string(n - k) +
                                    " entries after x0, got " + std::to_string(xs.size()));
    if (n == k) return rational_pow(x0, k);
    if (x0 == 0) return 0;
    std::vector<Rational> scaled;
    scaled.reserve(xs.size());
    for (const Rational& x : xs) scaled.push_back(x / x0);
    return rational_pow(x0, k) * bell_via_main(n - k, k, scaled, caps);
}

// (1 + a_1 + .. + a_alpha)^N as 1 + sum of X_k over k = 1..alpha*N, each X_k
// evaluated on N identical truncated rows. Deliberately literal; desk-scale
// only (alpha*N formulas are built).
inline Rational multinomial_via_main(const std::vector<Rational>& a, int N,
                                     const EnumerationCaps& caps = {}) {
    if (a.empty()) throw std::invalid_argument("multinomial_via_main: need at least one term");
    if (N < 1) throw std::invalid_argument("multinomial_via_main: N must be >= 1");
    const int alpha = static_cast<int>(a.size());
    const int kmax = alpha * N;
    SeriesTable t(N, kmax);
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= alpha; ++k) t.at(n, k) = a[k - 1];
    Rational total = 1;
    for (int k = 1; k <= kmax; ++k) total += evaluate_formula(xk_formula(k, caps), t);
    return total;
}

}  // namespace prodseries
