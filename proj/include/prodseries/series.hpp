#pragma once

// Exact evaluation on concrete coefficient tables. A SeriesTable holds the
// nonconstant coefficients a_{n,k} of N factors (the constant term 1 of every
// factor is implicit). truncated_product() is the independent oracle: it
// multiplies the factor polynomials directly and never touches the formula
// engine, so formula-path results can be validated against it.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prodseries/formula.hpp"
#include "prodseries/rational.hpp"

namespace prodseries {

class SeriesTable {
public:
    // N rows (factors) x K columns (lambda powers), zero-initialized.
    SeriesTable(int N, int K) : N_(N), K_(K), a_(static_cast<std::size_t>(N) * K) {
        if (N < 1 || K < 1) throw std::invalid_argument("SeriesTable: N and K must be >= 1");
    }

    static SeriesTable from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("SeriesTable: need at least one row and one column");
        SeriesTable t(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int n = 1; n <= t.N_; ++n) {
            if (static_cast<int>(rows[n - 1].size()) != t.K_)
                throw std::invalid_argument("SeriesTable: row " + std::to_string(n) + " has " +
                                            std::to_string(rows[n - 1].size()) + " entries, expected " +
                                            std::to_string(t.K_));
            for (int k = 1; k <= t.K_; ++k) t.at(n, k) = rows[n - 1][k - 1];
        }
        return t;
    }

    int rows() const { return N_; }
    int cols() const { return K_; }

    // 1-based: row n is factor n, column k is the lambda^k coefficient.
    const Rational& at(int n, int k) const { return a_[index(n, k)]; }
    Rational& at(int n, int k) { return a_[index(n, k)]; }

    // Table of the first n rows; realizes the truncation indicator by
    // row-prefix selection.
    SeriesTable prefix(int n) const {
        if (n < 1 || n > N_) throw std::invalid_argument("SeriesTable::prefix: n out of range");
        SeriesTable t(n, K_);
        for (int r = 1; r <= n; ++r)
            for (int k = 1; k <= K_; ++k) t.at(r, k) = at(r, k);
        return t;
    }

    friend bool operator==(const SeriesTable&, const SeriesTable&) = default;

private:
    std::size_t index(int n, int k) const {
        if (n < 1 || n > N_ || k < 1 || k > K_)
            throw std::invalid_argument("SeriesTable: index (" + std::to_string(n) + "," +
                                        std::to_string(k) + ") outside " + std::to_string(N_) + "x" +
                                        std::to_string(K_));
        return static_cast<std::size_t>(n - 1) * K_ + (k - 1);
    }

    int N_, K_;
    std::vector<Rational> a_;
};

// ---- JSON: { "N": int, "K": int, "a": [ [ "p/q", ... ] x N rows ] } ---------

inline nlohmann::json series_table_to_json(const SeriesTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= t.rows(); ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 1; k <= t.cols(); ++k) row.push_back(rational_to_string(t.at(n, k)));
        rows.push_back(std::move(row));
    }
    return {{"N", t.rows()}, {"K", t.cols()}, {"a", std::move(rows)}};
}

inline SeriesTable series_table_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("K") || !j.contains("a"))
        throw std::invalid_argument("series table: expected {\"N\":..., \"K\":..., \"a\":[[...]]}");
    const int N = j.at("N").get<int>();
    const int K = j.at("K").get<int>();
    SeriesTable t(N, K);
    const auto& rows = j.at("a");
    if (!rows.is_array() || static_cast<int>(rows.size()) != N)
        throw std::invalid_argument("series table: \"a\" must hold exactly N=" + std::to_string(N) + " rows");
    for (int n = 1; n <= N; ++n) {
        const auto& row = rows[n - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != K)
            throw std::invalid_argument("series table: row " + std::to_string(n) + " must hold exactly K=" +
                                        std::to_string(K) + " entries");
        for (int k = 1; k <= K; ++k) {
            const auto& cell = row[k - 1];
            try {
                if (cell.is_number_integer())
                    t.at(n, k) = Rational(cell.get<long long>());
                else if (cell.is_string())
                    t.at(n, k) = parse_rational(cell.get<std::string>());
                else
                    throw std::invalid_argument("expected \"p/q\" string or integer");
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("series table: row " + std::to_string(n) + ", column " +
                                            std::to_string(k) + ": " + e.what());
            }
        }
    }
    return t;
}

// ---- exact evaluation --------------------------------------------------------

// A_L on a finite table: sum over rows of the product of a_{n,k_j}.
inline Rational evaluate_form(const Partition& L, const SeriesTable& t) {
    if (L.empty()) throw std::invalid_argument("evaluate_form: empty partition");
    if (L.max_part() > t.cols())
        throw std::invalid_argument("evaluate_form: part " + std::to_string(L.max_part()) +
                                    " exceeds table truncation K=" + std::to_string(t.cols()));
    Rational total = 0;
    for (int n = 1; n <= t.rows(); ++n) {
        Rational prod = 1;
        for (int k : L.parts()) {
            prod *= t.at(n, k);
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

// Sum over terms of coeff * product of form values. Forms repeat across keys,
// so their values are memoized per call.
inline Rational evaluate_formula(const FormulaPolynomial& f, const SeriesTable& t) {
    std::map<Partition, Rational> form_cache;
    auto form_value = [&](const Partition& L) -> const Rational& {
        auto it = form_cache.find(L);
        if (it == form_cache.end()) it = form_cache.emplace(L, evaluate_form(L, t)).first;
        return it->second;
    };
    Rational total = 0;
    for (const auto& [key, coeff] : f.terms()) {
        Rational prod = coeff;
        for (const auto& factor : key.factors()) {
            prod *= form_value(factor);
            if (prod == 0) break;
        }
        total += prod;
    }
    return total;
}

// Independent oracle: multiply the N truncated factor polynomials directly.
// Returns X_1..X_K. Does not use the formula engine.
inline std::vector<Rational> truncated_product(const SeriesTable& t, int K) {
    if (K < 1 || K > t.cols())
        throw std::invalid_argument("truncated_product: K must be in [1, " + std::to_string(t.cols()) + "]");
    std::vector<Rational> acc(K + 1);
    acc[0] = 1;
    std::vector<Rational> next(K + 1);
    for (int n = 1; n <= t.rows(); ++n) {
        for (int d = 0; d <= K; ++d) {
            Rational c = acc[d];  // factor's constant term 1
            for (int k = 1; k <= d; ++k) {
                const Rational& a = t.at(n, k);
                if (a != 0) c += acc[d - k] * a;
            }
            next[d] = std::move(c);
        }
        acc.swap(next);
    }
    return {acc.begin() + 1, acc.end()};
}

// Left side of the pairwise-distinct lemma, literally: sum over ordered
// tuples of pairwise-distinct rows. Theta(N^m); intended for small N.
inline Rational distinct_sum_bruteforce(const Partition& L, const SeriesTable& t) {
    if (L.empty()) throw std::invalid_argument("distinct_sum_bruteforce: empty partition");
    if (L.max_part() > t.cols())
        throw std::invalid_argument("distinct_sum_bruteforce: part exceeds table truncation");
    const int m = L.length();
    const auto& parts = L.parts();
    Rational total = 0;
    std::vector<bool> used(t.rows() + 1, false);
    auto rec = [&](auto&& self, int j, const Rational& prod) -> void {
        if (j == m) {
            total += prod;
            return;
        }
        for (int n = 1; n <= t.rows(); ++n) {
            if (used[n]) continue;
            used[n] = true;
            self(self, j + 1, prod * t.at(n, parts[j]));
            used[n] = false;
        }
    };
    rec(rec, 0, Rational(1));
    return total;
}

// X_1..X_kmax through the formula path.
inline std::vector<Rational> evaluate_coefficients(const SeriesTable& t, int kmax,
                                                   const EnumerationCaps& caps = {}) {
    if (kmax < 1) throw std::invalid_argument("evaluate_coefficients: k-max must be >= 1");
    if (kmax > t.cols())
        throw std::invalid_argument("evaluate_coefficients: k-max " + std::to_string(kmax) +
                                    " exceeds table truncation K=" + std::to_string(t.cols()));
    std::vector<Rational> xs;
    xs.reserve(kmax);
    for (int k = 1; k <= kmax; ++k) xs.push_back(evaluate_formula(xk_formula(k, caps), t));
    return xs;
}

}  // namespace prodseries
