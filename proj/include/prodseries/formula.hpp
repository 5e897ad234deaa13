#pragma once

// Symbolic side of the coefficient formula. A FormulaPolynomial is a finite
// map TermKey -> exact rational, representing X_k (or a lemma's right-hand
// side) as an element of the polynomial ring over the generating forms.
//
// Construction routes:
//   distinct_index_formula(L)  signed sum over all permutations of S_{l(L)}
//   symmetrized_formula(L)     the same divided by the stabilizer order
//   xk_formula(k)              sum of symmetrized_formula over all L |- k;
//                              switches to the set-partition (collapsed)
//                              route per L when l(L) > 9, since all
//                              permutations with the same cycle supports
//                              produce the same key with weight
//                              (-1)^(|b|-1) (|b|-1)! per block
//   xk_formula_collapsed(k)    collapsed route for every L (cross-testing)

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "prodseries/term_key.hpp"

namespace prodseries {

class FormulaPolynomial {
public:
    FormulaPolynomial() = default;
    FormulaPolynomial(int degree, std::string provenance)
        : degree_(degree), provenance_(std::move(provenance)) {}

    // Accumulates into the canonical key; zero results are dropped.
    void add_term(const TermKey& key, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const FormulaPolynomial& other, const Rational& scale = 1) {
        for (const auto& [key, coeff] : other.terms_) add_term(key, coeff * scale);
    }

    const std::map<TermKey, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // The degree k this polynomial was built for (0 if unset); every stored
    // key of an X_k formula has exactly this degree.
    int degree() const { return degree_; }
    const std::string& provenance() const { return provenance_; }

    Rational coefficient(const TermKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const FormulaPolynomial& a, const FormulaPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<TermKey, Rational> terms_;
    int degree_ = 0;
    std::string provenance_;
};

// Signed permutation sum of the pairwise-distinct-index lemma:
// sum over sigma in S_m of sign(sigma) * key(sigma, L), collected.
inline FormulaPolynomial distinct_index_formula(const Partition& L, const EnumerationCaps& caps = {}) {
    if (L.empty()) throw std::invalid_argument("distinct_index_formula: empty partition");
    FormulaPolynomial f(L.sum(), "distinct_index" + L.to_string());
    for (const Permutation& sigma : permutations_of(L.length(), caps))
        f.add_term(term_key_of(sigma, L), sign(sigma));
    return f;
}

// (1/C_stb(L)) * distinct_index_formula(L): the ordered-index sum over all
// orderings of L with strictly increasing row indices.
inline FormulaPolynomial symmetrized_formula(const Partition& L, const EnumerationCaps& caps = {}) {
    if (L.empty()) throw std::invalid_argument("symmetrized_formula: empty partition");
    const Rational inv_stab = Rational(1, stabilizer_count(L));
    FormulaPolynomial f(L.sum(), "symmetrized" + L.to_string());
    for (const Permutation& sigma : permutations_of(L.length(), caps))
        f.add_term(term_key_of(sigma, L), sign(sigma) * inv_stab);
    return f;
}

namespace detail {

// Same polynomial as symmetrized_formula, built from set partitions: each
// block of size q absorbs the (q-1)! cyclic arrangements sharing its key,
// with sign (-1)^(q-1).
inline FormulaPolynomial symmetrized_formula_collapsed(const Partition& L, const EnumerationCaps& caps) {
    if (L.empty()) throw std::invalid_argument("symmetrized_formula_collapsed: empty partition");
    const int m = L.length();
    const auto& parts = L.parts();
    const Rational inv_stab = Rational(1, stabilizer_count(L));
    FormulaPolynomial f(L.sum(), "symmetrized_collapsed" + L.to_string());
    // iterate restricted growth strings directly; parts is sorted, so each
    // block collects its entries already in order
    auto range = set_partitions_of(m, caps);
    std::vector<std::vector<int>> blocks;
    for (auto it = range.begin(); it != range.end(); ++it) {
        const auto& rgs = it.rgs();
        const int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        blocks.assign(nblocks, {});
        for (int i = 0; i < m; ++i) blocks[rgs[i]].push_back(parts[i]);
        Integer weight = 1;
        for (const auto& blk : blocks) weight *= factorial(static_cast<int>(blk.size()) - 1);
        Rational coeff = Rational(weight) * inv_stab;
        if ((m - nblocks) % 2) coeff = -coeff;
        std::vector<Partition> factors;
        factors.reserve(nblocks);
        for (auto& blk : blocks) factors.emplace_back(blk);
        f.add_term(TermKey(std::move(factors), L), coeff);
    }
    return f;
}

// Above this length the permutation route (m! terms) loses badly to the
// collapsed route (Bell(m) terms): 10! = 3628800 vs Bell(10) = 115975.
inline constexpr int kCollapseThreshold = 9;

}  // namespace detail

enum class FormulaRoute { automatic, permutation, collapsed };

// The degree-k coefficient formula: sum over L |- k of symmetrized_formula(L).
inline FormulaPolynomial xk_formula_with_route(int k, FormulaRoute route, const EnumerationCaps& caps = {}) {
    if (k < 1) throw std::invalid_argument("xk_formula: k must be >= 1");
    FormulaPolynomial f(k, "xk_formula(" + std::to_string(k) + ")");
    for (const Partition& L : partitions_of(k)) {
        const bool collapse = route == FormulaRoute::collapsed ||
                              (route == FormulaRoute::automatic && L.length() > detail::kCollapseThreshold);
        try {
            f.add(collapse ? detail::symmetrized_formula_collapsed(L, caps)
                           : symmetrized_formula(L, caps));
        } catch (const resource_limit_error& e) {
            throw resource_limit_error(std::string(e.what()) +
                                       " while building X_" + std::to_string(k) +
                                       (collapse ? "" : "; the collapsed evaluator reaches further"));
        }
    }
    return f;
}

namespace detail {

inline FormulaPolynomial xk_formula_uncached(int k, const EnumerationCaps& caps) {
    return xk_formula_with_route(k, FormulaRoute::automatic, caps);
}

}  // namespace detail

// Cached: construction is the expensive step, evaluation is cheap.
inline const FormulaPolynomial& xk_formula(int k, const EnumerationCaps& caps = {}) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const FormulaPolynomial>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
        auto built = std::make_unique<const FormulaPolynomial>(detail::xk_formula_uncached(k, caps));
        it = cache.emplace(k, std::move(built)).first;
    }
    return *it->second;
}

inline FormulaPolynomial xk_formula_collapsed(int k, const EnumerationCaps& caps = {}) {
    return xk_formula_with_route(k, FormulaRoute::collapsed, caps);
}

// ---- rendering and serialization ------------------------------------------

enum class RenderFormat { plain, latex, json };

inline RenderFormat parse_render_format(std::string_view s) {
    if (s == "plain") return RenderFormat::plain;
    if (s == "latex") return RenderFormat::latex;
    if (s == "json") return RenderFormat::json;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected plain, latex or json)");
}

inline nlohmann::json formula_to_json(const FormulaPolynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : f.terms()) {
        nlohmann::json jkey = nlohmann::json::array();
        for (const auto& factor : key.factors()) jkey.push_back(factor.parts());
        terms.push_back({{"coeff", rational_to_string(coeff)}, {"key", std::move(jkey)}});
    }
    return {{"k", f.degree()}, {"terms", std::move(terms)}};
}

inline FormulaPolynomial formula_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("terms"))
        throw std::invalid_argument("formula_from_json: expected {\"k\":..., \"terms\":[...]}");
    FormulaPolynomial f(j.at("k").get<int>(), "from_json");
    for (const auto& term : j.at("terms")) {
        std::vector<Partition> factors;
        for (const auto& factor : term.at("key")) factors.emplace_back(factor.get<std::vector<int>>());
        f.add_term(TermKey(std::move(factors)), parse_rational(term.at("coeff").get<std::string>()));
    }
    return f;
}

inline std::string render(const FormulaPolynomial& f, RenderFormat format) {
    if (format == RenderFormat::json) return formula_to_json(f).dump();
    if (f.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : f.terms()) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (format == RenderFormat::plain) {
            out += rational_to_string(mag);
            for (const auto& factor : key.factors()) {
                out += "*S[";
                const auto& parts = factor.parts();
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i) out += ',';
                    out += std::to_string(parts[i]);
                }
                out += ']';
            }
        } else {  // latex
            if (mag != 1) {
                const Integer num = numerator(mag), den = denominator(mag);
                if (den == 1) {
                    out += num.str();
                } else {
                    out += "\\frac{" + num.str() + "}{" + den.str() + "}";
                }
                out += "\\,";
            }
            for (const auto& factor : key.factors()) {
                out += "S_{[";
                const auto& parts = factor.parts();
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i) out += ',';
                    out += std::to_string(parts[i]);
                }
                out += "]}";
            }
        }
    }
    return out;
}

// ---- optional on-disk cache -------------------------------------------------

inline std::filesystem::path xk_cache_file(const std::filesystem::path& dir, int k) {
    return dir / ("xk_" + std::to_string(k) + ".json");
}

// Loads dir/xk_<k>.json when present, otherwise builds and stores it. File
// contents are trusted as-is; verification runs are what detect a bad cache.
inline FormulaPolynomial xk_formula_cached(int k, const std::filesystem::path& dir,
                                           const EnumerationCaps& caps = {}) {
    if (dir.empty()) return xk_formula(k, caps);
    const auto file = xk_cache_file(dir, k);
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot read formula cache file " + file.string());
        nlohmann::json j;
        in >> j;
        return formula_from_json(j);
    }
    FormulaPolynomial f = xk_formula(k, caps);
    std::filesystem::create_directories(dir);
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write formula cache file " + file.string());
    out << formula_to_json(f).dump();
    return f;
}

}  // namespace prodseries
