// prodseries: exact coefficients of (truncated) products of power series with
// constant term 1, via the partition/permutation coefficient formula, with an
// independent truncated-product oracle for verification.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 resource limit exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "prodseries/prodseries.hpp"

namespace {

using namespace prodseries;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitResourceLimit = 3;

std::filesystem::path cache_dir_from_env() {
    const char* dir = std::getenv("PRODSERIES_CACHE_DIR");
    return dir ? std::filesystem::path(dir) : std::filesystem::path();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) out.push_back(cur);
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& tok : split_csv(s)) out.push_back(parse_rational(tok));
    return out;
}

nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min(e.byte > 0 ? e.byte - 1 : 0, content.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (content[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::invalid_argument("parse error in '" + path + "' at line " + std::to_string(line) +
                                    ", column " + std::to_string(col) + ": " + e.what());
    }
}

struct FormulaArgs {
    int k = 0;
    std::string format = "plain";
    std::string route = "auto";
};

int run_formula(const FormulaArgs& args, const EnumerationCaps& caps) {
    const RenderFormat format = parse_render_format(args.format);
    FormulaPolynomial f;
    if (args.route == "auto") {
        f = xk_formula_cached(args.k, cache_dir_from_env(), caps);
    } else if (args.route == "permutation") {
        f = xk_formula_with_route(args.k, FormulaRoute::permutation, caps);
    } else if (args.route == "collapsed") {
        f = xk_formula_collapsed(args.k, caps);
    } else {
        throw std::invalid_argument("unknown route '" + args.route +
                                    "' (expected auto, permutation or collapsed)");
    }
    std::cout << render(f, format) << "\n";
    return kExitOk;
}

struct EvalArgs {
    std::string input;
    int kmax = 0;
    bool check = false;
};

int run_eval(const EvalArgs& args, const EnumerationCaps& caps) {
    const SeriesTable t = series_table_from_json(parse_json_file(args.input));
    // prime the per-k formulas through the cache directory, if one is set
    const auto dir = cache_dir_from_env();
    std::vector<Rational> xs;
    xs.reserve(args.kmax);
    if (args.kmax < 1 || args.kmax > t.cols())
        throw std::invalid_argument("k-max must be in [1, " + std::to_string(t.cols()) +
                                    "] for this table");
    std::vector<FormulaPolynomial> formulas;
    for (int k = 1; k <= args.kmax; ++k) formulas.push_back(xk_formula_cached(k, dir, caps));
    for (int k = 1; k <= args.kmax; ++k) xs.push_back(evaluate_formula(formulas[k - 1], t));

    nlohmann::json out;
    out["K"] = args.kmax;
    nlohmann::json jx = nlohmann::json::array();
    for (const auto& x : xs) jx.push_back(rational_to_string(x));
    out["X"] = std::move(jx);

    bool all_equal = true;
    if (args.check) {
        const auto oracle = truncated_product(t, args.kmax);
        nlohmann::json jo = nlohmann::json::array(), jm = nlohmann::json::array();
        for (int k = 1; k <= args.kmax; ++k) {
            jo.push_back(rational_to_string(oracle[k - 1]));
            const bool eq = oracle[k - 1] == xs[k - 1];
            jm.push_back(eq);
            all_equal = all_equal && eq;
        }
        out["oracle"] = std::move(jo);
        out["match"] = std::move(jm);
    }
    std::cout << out.dump() << "\n";
    return (args.check && !all_equal) ? kExitVerifyFailed : kExitOk;
}

struct VerifyArgs {
    int kmax = 5;
    int nmax = 5;
    int trials = 100;
    std::uint64_t seed = 42;
};

struct SuiteResult {
    std::string name;
    long long passed = 0;
    long long total = 0;
    bool ok() const { return passed == total; }
};

int run_verify(const VerifyArgs& args, const EnumerationCaps& caps) {
    if (args.kmax < 1 || args.nmax < 1 || args.trials < 0)
        throw std::invalid_argument("verify: need k-max >= 1, n-max >= 1, trials >= 0");
    if (args.trials == 0)
        std::cout << "warning: --trials 0 makes the randomized suites vacuous\n";

    const auto dir = cache_dir_from_env();
    std::vector<SuiteResult> suites;
    std::string first_failure;

    auto note_failure = [&](const std::string& msg) {
        if (first_failure.empty()) first_failure = msg;
    };

    {
        SuiteResult r{"oracle-equivalence"};
        SampleRng rng(args.seed);
        for (int k = 1; k <= args.kmax; ++k) {
            const FormulaPolynomial f = xk_formula_cached(k, dir, caps);
            for (int trial = 0; trial < args.trials; ++trial) {
                const int N = static_cast<int>(rng.range(1, args.nmax));
                const SeriesTable t = random_series_table(rng, N, k);
                const Rational via_formula = evaluate_formula(f, t);
                const Rational via_oracle = truncated_product(t, k)[k - 1];
                ++r.total;
                if (via_formula == via_oracle) {
                    ++r.passed;
                } else {
                    note_failure("suite=oracle-equivalence k=" + std::to_string(k) +
                                 " trial=" + std::to_string(trial) +
                                 " seed=" + std::to_string(args.seed) +
                                 "\n  table: " + series_table_to_json(t).dump() +
                                 "\n  formula=" + rational_to_string(via_formula) +
                                 " oracle=" + rational_to_string(via_oracle) +
                                 "\n  reproduce: prodseries verify --k-max " + std::to_string(k) +
                                 " --n-max " + std::to_string(args.nmax) + " --trials " +
                                 std::to_string(trial + 1) + " --seed " + std::to_string(args.seed));
                }
            }
        }
        suites.push_back(r);
    }

    {
        SuiteResult r{"lemma-equivalence"};
        SampleRng rng(args.seed + 1);
        const int max_len = std::min(4, caps.permutation_max);
        for (int trial = 0; trial < args.trials; ++trial) {
            const Partition L = random_partition(rng, max_len, 4);
            const int N = static_cast<int>(rng.range(1, args.nmax));
            const SeriesTable t = random_series_table(rng, N, 4);
            const Rational brute = distinct_sum_bruteforce(L, t);
            const Rational via_distinct = evaluate_formula(distinct_index_formula(L, caps), t);
            const Rational via_symmetrized =
                evaluate_formula(symmetrized_formula(L, caps), t) * Rational(stabilizer_count(L));
            ++r.total;
            if (brute == via_distinct && brute == via_symmetrized) {
                ++r.passed;
            } else {
                note_failure("suite=lemma-equivalence L=" + L.to_string() +
                             " trial=" + std::to_string(trial) + " seed=" + std::to_string(args.seed) +
                             "\n  table: " + series_table_to_json(t).dump() +
                             "\n  brute=" + rational_to_string(brute) +
                             " distinct=" + rational_to_string(via_distinct) +
                             " symmetrized*C_stb=" + rational_to_string(via_symmetrized));
            }
        }
        suites.push_back(r);
    }

    {
        SuiteResult r{"collapsed-equality"};
        for (int k = 1; k <= args.kmax; ++k) {
            ++r.total;
            const FormulaPolynomial cached = xk_formula_cached(k, dir, caps);
            const FormulaPolynomial collapsed = xk_formula_collapsed(k, caps);
            if (cached == collapsed) {
                ++r.passed;
            } else {
                note_failure("suite=collapsed-equality k=" + std::to_string(k) +
                             (dir.empty() ? std::string()
                                          : "\n  cache file: " + xk_cache_file(dir, k).string()) +
                             "\n  cached/default construction differs from the collapsed construction");
            }
        }
        suites.push_back(r);
    }

    int failed_suites = 0;
    for (const auto& s : suites) {
        std::cout << "suite " << s.name << ": " << s.passed << "/" << s.total << " passed\n";
        if (!s.ok()) ++failed_suites;
    }
    if (!first_failure.empty()) std::cout << "first failure: " << first_failure << "\n";
    if (failed_suites == 0) {
        std::cout << "all " << suites.size() << " suites passed\n";
        return kExitOk;
    }
    std::cout << failed_suites << " suite(s) failed\n";
    return kExitVerifyFailed;
}

struct BellArgs {
    int n = 0;
    int k = 0;
    std::string x0;
    std::string xs;
};

int run_bell(const BellArgs& args, const EnumerationCaps& caps) {
    // argument list is (x_1, .., x_{n-k+1}); --x0 supplies x_1 separately
    std::vector<Rational> full;
    if (!args.x0.empty()) full.push_back(parse_rational(args.x0));
    if (!args.xs.empty())
        for (const auto& v : parse_rational_list(args.xs)) full.push_back(v);
    if (static_cast<int>(full.size()) != args.n - args.k + 1)
        throw std::invalid_argument("bell: expected n-k+1 = " + std::to_string(args.n - args.k + 1) +
                                    " values via --x0/--xs, got " + std::to_string(full.size()));
    const Rational result = bell_general(args.n, args.k, full.front(),
                                         {full.begin() + 1, full.end()}, caps);
    std::cout << rational_to_string(result) << "\n";
    return kExitOk;
}

struct MultinomialArgs {
    std::string a;
    int N = 0;
};

int run_multinomial(const MultinomialArgs& args, const EnumerationCaps& caps) {
    std::cout << rational_to_string(multinomial_via_main(parse_rational_list(args.a), args.N, caps))
              << "\n";
    return kExitOk;
}

struct ConvergeArgs {
    std::string gen;
    int k = 0;
    std::vector<std::int64_t> Ns;
    bool estimate = false;
};

int run_converge(const ConvergeArgs& args, const EnumerationCaps& caps) {
    if (args.Ns.empty()) throw std::invalid_argument("converge: --n needs at least one value");
    const RowGenerator gen = make_generator(args.gen);
    const auto values = truncation_sequence(gen, args.k, args.Ns, caps);
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << args.Ns[i] << "," << format_double(values[i]) << "\n";
    if (args.estimate) {
        // heuristic, for alternating generators: mean of the last two truncations
        std::cout << "estimate," << format_double(alternating_tail_estimate(gen, args.k, args.Ns.back(), caps))
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coefficients of products of power series with constant term 1"};
    app.require_subcommand(1);

    EnumerationCaps caps;
    auto add_caps = [&caps](CLI::App* cmd) {
        cmd->add_option("--perm-cap", caps.permutation_max,
                        "max permutation degree to enumerate")
            ->capture_default_str();
        cmd->add_option("--setpart-cap", caps.set_partition_max,
                        "max set-partition ground size to enumerate")
            ->capture_default_str();
    };

    FormulaArgs formula_args;
    auto* cmd_formula = app.add_subcommand("formula", "print the X_k coefficient formula");
    cmd_formula->add_option("--k", formula_args.k, "coefficient degree")->required();
    cmd_formula->add_option("--format", formula_args.format, "plain, latex or json")
        ->capture_default_str();
    cmd_formula->add_option("--route", formula_args.route,
                            "construction route: auto, permutation or collapsed")
        ->capture_default_str();
    add_caps(cmd_formula);

    EvalArgs eval_args;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate X_1..X_kmax on a series table");
    cmd_eval->add_option("--input", eval_args.input, "series table JSON file")->required();
    cmd_eval->add_option("--k-max", eval_args.kmax, "highest coefficient degree")->required();
    cmd_eval->add_flag("--check", eval_args.check, "also run the truncated-product oracle");
    add_caps(cmd_eval);

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "run the randomized verification suites");
    cmd_verify->add_option("--k-max", verify_args.kmax)->capture_default_str();
    cmd_verify->add_option("--n-max", verify_args.nmax)->capture_default_str();
    cmd_verify->add_option("--trials", verify_args.trials)->capture_default_str();
    cmd_verify->add_option("--seed", verify_args.seed)->capture_default_str();
    add_caps(cmd_verify);

    BellArgs bell_args;
    auto* cmd_bell = app.add_subcommand("bell", "ordinary Bell polynomial value");
    cmd_bell->add_option("--n", bell_args.n, "total degree")->required();
    cmd_bell->add_option("--k", bell_args.k, "number of factors")->required();
    cmd_bell->add_option("--x0", bell_args.x0, "first argument x_1 (defaults into --xs)");
    cmd_bell->add_option("--xs", bell_args.xs, "comma-separated remaining arguments");
    add_caps(cmd_bell);

    MultinomialArgs multi_args;
    auto* cmd_multi = app.add_subcommand("multinomial", "(1 + a_1 + .. + a_alpha)^N by the formula");
    cmd_multi->add_option("--a", multi_args.a, "comma-separated a_1..a_alpha")->required();
    cmd_multi->add_option("--N", multi_args.N, "exponent")->required();
    add_caps(cmd_multi);

    ConvergeArgs conv_args;
    auto* cmd_conv = app.add_subcommand("converge", "truncated coefficients X_k^(N) as CSV");
    cmd_conv->add_option("--gen", conv_args.gen,
                         "generator: alt_quartic, euler, geometric:x, binomial:x")
        ->required();
    cmd_conv->add_option("--k", conv_args.k, "coefficient degree")->required();
    cmd_conv->add_option("--n", conv_args.Ns, "comma-separated truncation row counts")
        ->required()
        ->delimiter(',');
    cmd_conv->add_flag("--estimate", conv_args.estimate,
                       "append the heuristic alternating-tail estimate at the last N");
    add_caps(cmd_conv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_formula) return run_formula(formula_args, caps);
        if (*cmd_eval) return run_eval(eval_args, caps);
        if (*cmd_verify) return run_verify(verify_args, caps);
        if (*cmd_bell) return run_bell(bell_args, caps);
        if (*cmd_multi) return run_multinomial(multi_args, caps);
        if (*cmd_conv) return run_converge(conv_args, caps);
    } catch (const prodseries::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
