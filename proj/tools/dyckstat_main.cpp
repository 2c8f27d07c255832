// dyckstat: Dyck-path interval statistics and wreath decompositions of
// Z_{2k+1} from the command line.
//
// Subcommands:
//   enumerate  list all Dyck k-paths in canonical order
//   stat       N_k(m,l) for a cell, a row, or the full triangle,
//              by closed formula and/or exhaustive enumeration
//   check      invariant sweeps (formula vs oracle, symmetry, row sums,
//              lattice-path identities, bijection round-trips, ...)
//   wreath     witness search / verification / single-wreath display
//
// Exit codes: 0 success, 2 usage or malformed input, 3 check or
// verification failure, 4 capacity/exhaustion/timeout.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyckstat/dyckstat.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitCapacity = 4;

constexpr const char* kThreadsEnvVar = "DYCKSTAT_THREADS";

int default_threads() {
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid " << kThreadsEnvVar << "='" << env << "'\n";
    }
    return 1;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(int k, const std::string& format) {
    const auto paths = dyckstat::enumerate_dyck(k);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& D : paths) arr.push_back(D.to_string());
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& D : paths) std::cout << D.to_string() << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------------- stat

struct StatCell {
    long long k, m, l;
    dyckstat::BigCount value;
    std::optional<dyckstat::BigCount> brute;
    bool matches() const { return !brute || *brute == value; }
};

StatCell eval_cell(long long k, long long m, long long l, const std::string& method) {
    StatCell cell{k, m, l, 0, std::nullopt};
    if (method == "brute") {
        cell.value = dyckstat::interval_stat_brute(static_cast<int>(k), m, l);
    } else {
        cell.value = dyckstat::interval_stat(k, m, l);
        if (method == "both")
            cell.brute = dyckstat::interval_stat_brute(static_cast<int>(k), m, l);
    }
    return cell;
}

int cmd_stat(long long k, std::optional<long long> m, std::optional<long long> l,
             const std::string& method, const std::string& format) {
    std::vector<StatCell> cells;
    auto add_row = [&](long long mm) {
        for (long long ll = 0; ll <= mm; ++ll) cells.push_back(eval_cell(k, mm, ll, method));
    };
    if (m && l) {
        cells.push_back(eval_cell(k, *m, *l, method));
    } else if (m) {
        add_row(*m);
    } else {
        for (long long mm = 0; mm <= 2 * k; ++mm) add_row(mm);
    }

    bool all_match = true;
    for (const auto& c : cells) all_match = all_match && c.matches();

    if (format == "csv") {
        std::cout << (method == "both" ? "k,m,l,value,value_brute,match" : "k,m,l,value") << "\n";
        for (const auto& c : cells) {
            std::cout << c.k << ',' << c.m << ',' << c.l << ',' << c.value.str();
            if (c.brute) std::cout << ',' << c.brute->str() << ',' << (c.matches() ? "match" : "mismatch");
            std::cout << "\n";
        }
    } else if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : cells) {
            nlohmann::ordered_json o;
            o["k"] = c.k;
            o["m"] = c.m;
            o["l"] = c.l;
            o["value"] = c.value.str();
            if (c.brute) {
                o["value_brute"] = c.brute->str();
                o["match"] = c.matches();
            }
            arr.push_back(std::move(o));
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& c : cells) {
            std::cout << "N_" << c.k << "(" << c.m << "," << c.l << ") = " << c.value.str();
            if (c.brute)
                std::cout << " (brute: " << c.brute->str() << ", " << (c.matches() ? "match" : "MISMATCH") << ")";
            std::cout << "\n";
        }
    }
    return all_match ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------------- check

using CheckFailure = std::optional<std::string>;

CheckFailure check_theorem(int max_k) {
    const int cap = std::min(max_k, dyckstat::kMaxEnumerationSemilength);
    for (int k = 0; k <= cap; ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; l <= m; ++l) {
                const auto formula = dyckstat::interval_stat(k, m, l);
                const auto brute = dyckstat::interval_stat_brute(k, m, l);
                if (formula != brute) {
                    std::ostringstream msg;
                    msg << "N_" << k << "(" << m << "," << l << "): formula " << formula
                        << " != brute " << brute;
                    return msg.str();
                }
            }
    return std::nullopt;
}

CheckFailure check_corollary(int max_k) {
    for (long long k = 0; k <= max_k; ++k)
        for (long long l = 0; l <= k; ++l) {
            const auto expect = dyckstat::binomial(k, l) * dyckstat::binomial(k, l);
            if (dyckstat::interval_stat(k, k, l) != expect ||
                dyckstat::interval_stat_central(k, l) != expect) {
                std::ostringstream msg;
                msg << "N_" << k << "(" << k << "," << l << ") != binom(k,l)^2";
                return msg.str();
            }
            if (k <= 8 && dyckstat::interval_stat_brute(static_cast<int>(k), k, l) != expect) {
                std::ostringstream msg;
                msg << "oracle disagrees with binom(k,l)^2 at k=" << k << ", l=" << l;
                return msg.str();
            }
        }
    return std::nullopt;
}

CheckFailure check_symmetry(int max_k) {
    for (long long k = 0; k <= max_k; ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; l <= m; ++l)
                if (dyckstat::interval_stat(k, m, l) != dyckstat::interval_stat(k, m, m - l)) {
                    std::ostringstream msg;
                    msg << "N_" << k << "(" << m << "," << l << ") != N_" << k << "(" << m << "," << m - l << ")";
                    return msg.str();
                }
    return std::nullopt;
}

CheckFailure check_rowsum(int max_k) {
    for (long long k = 0; k <= max_k; ++k) {
        const auto ck = dyckstat::catalan(k);
        for (long long m = 0; m <= 2 * k; ++m) {
            dyckstat::BigCount sum = 0;
            for (long long l = 0; l <= m; ++l) sum += dyckstat::interval_stat(k, m, l);
            if (sum != ck * (2 * k - m + 1)) {
                std::ostringstream msg;
                msg << "row sum at k=" << k << ", m=" << m << " is " << sum << ", expected "
                    << ck * (2 * k - m + 1);
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

CheckFailure check_claim(int max_k) {
    for (long long k = 0; k <= max_k; ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; 2 * l <= m; ++l)
                for (long long d = 0; d <= k + l - m; ++d) {
                    dyckstat::BigCount lhs = 0;
                    for (long long i = 0; i <= k + l - m - d; ++i)
                        lhs += dyckstat::count_ne_upper({0, 0}, {i, i + d}) *
                               dyckstat::count_ne_upper({i + l, i + d + m - l}, {k, k});
                    const dyckstat::BigCount rhs =
                        dyckstat::binomial(2 * k - m + 1, k - m + l - d) -
                        dyckstat::binomial(2 * k - m + 1, k - m + l - d - 1);
                    if (lhs != rhs) {
                        std::ostringstream msg;
                        msg << "anchored-pair identity fails at k=" << k << ", m=" << m << ", l=" << l
                            << ", d=" << d << ": " << lhs << " != " << rhs;
                        return msg.str();
                    }
                }
    return std::nullopt;
}

CheckFailure check_lemma4(int max_k) {
    const long long limit = std::min<long long>(2 * max_k, dyckstat::kMaxBoxSteps);
    for (long long alpha = 0; alpha <= limit; ++alpha)
        for (long long beta = 0; alpha + beta <= limit; ++beta)
            for (long long delta = 0; delta <= limit + 1; ++delta) {
                const dyckstat::LatticePoint p1{0, delta};
                const dyckstat::LatticePoint p2{beta, delta + alpha};
                const auto expect = dyckstat::count_ne_upper(p1, p2);
                const auto actual = dyckstat::enumerate_ne_upper(p1, p2).size();
                if (expect != actual) {
                    std::ostringstream msg;
                    msg << "upper-path count (0," << delta << ")->(" << beta << "," << delta + alpha
                        << "): formula " << expect << " != enumeration " << actual;
                    return msg.str();
                }
            }
    return std::nullopt;
}

// Exhaustively verify the reflection flip on one box: bijective from the
// below-dipping paths onto the free paths to the flipped endpoint.
CheckFailure check_flip_box(long long delta, long long alpha, long long beta) {
    namespace ds = dyckstat;
    const ds::LatticePoint p1{0, delta};
    const ds::LatticePoint p2{beta, delta + alpha};
    std::vector<ds::NEPath> dipping;
    ds::NEPath scratch;
    scratch.origin = p1;
    auto gen = [&](auto&& self, long long x, long long y) -> void {
        if (x == p2.x && y == p2.y) {
            if (scratch.dips_below_diagonal()) dipping.push_back(scratch);
            return;
        }
        if (y < p2.y) {
            scratch.steps.push_back(ds::NEStep::North);
            self(self, x, y + 1);
            scratch.steps.pop_back();
        }
        if (x < p2.x) {
            scratch.steps.push_back(ds::NEStep::East);
            self(self, x + 1, y);
            scratch.steps.pop_back();
        }
    };
    gen(gen, p1.x, p1.y);

    const ds::LatticePoint flipped{p1.x + alpha + delta + 1, p1.y + beta - delta - 1};
    std::set<std::string> images;
    for (const auto& W : dipping) {
        const ds::NEPath image = ds::reflect_flip(W);
        if (!(image.end() == flipped)) return "flip image has wrong endpoint";
        if (!(ds::reflect_flip_inverse(image) == W)) return "flip round-trip failed";
        if (!images.insert(image.step_string()).second) return "flip image collision";
    }
    const auto expect = ds::binomial(alpha + beta, beta - delta - 1);
    if (ds::BigCount(images.size()) != expect) {
        std::ostringstream msg;
        msg << "flip image count on delta=" << delta << ", alpha=" << alpha << ", beta=" << beta
            << " is " << images.size() << ", expected " << expect;
        return msg.str();
    }
    return std::nullopt;
}

CheckFailure check_bijections(int max_k) {
    // The flip identity lives on boxes whose flipped endpoint is strictly
    // below the diagonal: beta <= alpha + delta + 1.
    const long long limit = std::min<long long>(2 * max_k, 12);
    for (long long alpha = 0; alpha <= limit; ++alpha)
        for (long long beta = 0; alpha + beta <= limit; ++beta)
            for (long long delta = std::max(0LL, beta - alpha - 1); delta <= limit + 1; ++delta)
                if (auto fail = check_flip_box(delta, alpha, beta)) return fail;

    // Anchored-pair bijection round-trip, exhaustive per configuration.
    for (long long k = 0; k <= std::min(max_k, 5); ++k)
        for (long long m = 0; m <= 2 * k; ++m)
            for (long long l = 0; 2 * l <= m; ++l)
                for (long long d = 0; d <= k + l - m; ++d) {
                    const dyckstat::DiagonalPairConfig cfg(k, m, l, d);
                    std::size_t pairs = 0;
                    for (long long i = 0; i <= cfg.max_i(); ++i)
                        for (const auto& W : dyckstat::enumerate_ne_upper(cfg.start(), cfg.end())) {
                            bool through = false;
                            for (const auto& p : W.visited())
                                through = through || (p.x == -i && p.y == -i);
                            if (!through) continue;
                            ++pairs;
                            const auto image = dyckstat::insert_east_at_diagonal(W, i, cfg);
                            const auto [back, j] = dyckstat::remove_east_at_diagonal(image, cfg);
                            if (!(back == W) || j != i) {
                                std::ostringstream msg;
                                msg << "pair bijection round-trip failed at k=" << k << ", m=" << m
                                    << ", l=" << l << ", d=" << d << ", i=" << i;
                                return msg.str();
                            }
                        }
                    const dyckstat::BigCount rhs =
                        dyckstat::binomial(2 * k - m + 1, k - m + l - d) -
                        dyckstat::binomial(2 * k - m + 1, k - m + l - d - 1);
                    if (dyckstat::BigCount(pairs) != rhs) {
                        std::ostringstream msg;
                        msg << "pair count at k=" << k << ", m=" << m << ", l=" << l << ", d=" << d
                            << " is " << pairs << ", expected " << rhs;
                        return msg.str();
                    }
                }
    return std::nullopt;
}

CheckFailure check_necessary(int max_k) {
    for (int k = 0; k <= std::min(max_k, 12); ++k)
        if (!dyckstat::witness_necessary_condition(k))
            return "zero-free subset split counts disagree with N_k(k,l) at k = " + std::to_string(k);
    return std::nullopt;
}

int cmd_check(const std::string& suite, int max_k) {
    CheckFailure failure;
    if (suite == "theorem") failure = check_theorem(max_k);
    else if (suite == "corollary") failure = check_corollary(max_k);
    else if (suite == "symmetry") failure = check_symmetry(max_k);
    else if (suite == "rowsum") failure = check_rowsum(max_k);
    else if (suite == "claim") failure = check_claim(max_k);
    else if (suite == "lemma4") failure = check_lemma4(max_k);
    else if (suite == "bijections") failure = check_bijections(max_k);
    else if (suite == "necessary") failure = check_necessary(max_k);
    else {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitUsage;
    }
    if (failure) {
        std::cout << "suite " << suite << ": FAIL: " << *failure << "\n";
        return kExitCheckFailed;
    }
    std::cout << "suite " << suite << ": pass (max k = " << max_k << ")\n";
    return kExitOk;
}

// ------------------------------------------------------------------- wreath

int cmd_wreath_search(int k, const std::string& variant_name, bool deterministic, int threads,
                      double time_limit, const std::string& out_path) {
    const auto variant = dyckstat::parse_variant(variant_name);
    dyckstat::SearchOptions options;
    options.deterministic = deterministic;
    options.threads = threads;
    options.time_limit_seconds = time_limit;
    const auto outcome = dyckstat::search_witness(k, variant, options);
    std::cerr << "search: " << outcome.stats.placements << " placements, "
              << outcome.stats.candidates_tested << " candidates tested, "
              << outcome.stats.dead_ends << " dead ends, max depth " << outcome.stats.max_depth
              << ", " << outcome.stats.elapsed_seconds << "s\n";
    if (outcome.status == dyckstat::SearchStatus::Found) {
        dyckstat::write_witness_file(out_path, *outcome.witness, variant);
        std::cout << "witness for k=" << k << " (" << variant_name << ") written to " << out_path << "\n";
        return kExitOk;
    }
    std::cout << (outcome.status == dyckstat::SearchStatus::Timeout
                      ? "search timed out; tree not exhausted\n"
                      : "search exhausted: no witness exists under the canonical ordering\n");
    return kExitCapacity;
}

int cmd_wreath_verify(const std::string& witness_path) {
    const auto doc = dyckstat::read_witness_file(witness_path);
    const auto built = dyckstat::build_witness(doc);
    if (!built.result) {
        std::cout << "witness INVALID: " << built.result.message << "\n";
        return kExitCheckFailed;
    }
    const auto result = dyckstat::verify_witness(built.witness, built.variant);
    if (!result) {
        std::cout << "witness INVALID: " << result.message << "\n";
        return kExitCheckFailed;
    }
    std::cout << "witness valid: k=" << built.witness.k << ", variant " << dyckstat::to_string(built.variant)
              << ", " << built.witness.assignments.size() << " assignments\n";
    return kExitOk;
}

int cmd_wreath_show(int n, int k, const std::string& perm_csv, const std::string& format) {
    std::vector<int> images;
    std::stringstream ss(perm_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        images.push_back(std::stoi(item));
    if (static_cast<int>(images.size()) != n)
        throw std::domain_error("--perm must list exactly n images");
    const dyckstat::Permutation pi(images);
    const auto wreath = dyckstat::wreath_from_permutation(pi, k);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : wreath.sets) arr.push_back(s);
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& s : wreath.sets) {
            std::cout << '{';
            for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? ", " : "") << s[i];
            std::cout << "}\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyck-path interval statistics and wreath decompositions of Z_{2k+1}"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List all Dyck k-paths in canonical order");
    int enum_k = 0;
    std::string enum_format = "text";
    enumerate->add_option("--k", enum_k, "Semilength")->required();
    enumerate->add_option("--format", enum_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    // stat
    auto* stat = app.add_subcommand("stat", "Interval statistic N_k(m,l)");
    long long stat_k = 0;
    std::optional<long long> stat_m, stat_l;
    std::string stat_method = "formula";
    std::string stat_format = "text";
    stat->add_option("--k", stat_k, "Semilength")->required();
    stat->add_option("--m", stat_m, "Interval length (omit for the full triangle)");
    stat->add_option("--l", stat_l, "Fall count (omit for the whole row)");
    stat->add_option("--method", stat_method, "Evaluation route")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    stat->add_option("--format", stat_format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // check
    auto* check = app.add_subcommand("check", "Run an invariant sweep");
    std::string check_suite;
    int check_max_k = 6;
    check->add_option("--suite", check_suite,
                      "One of: theorem, corollary, symmetry, rowsum, claim, lemma4, bijections, necessary")
        ->required();
    check->add_option("--max-k", check_max_k, "Sweep bound");

    // wreath
    auto* wreath = app.add_subcommand("wreath", "Wreath witnesses over Z_{2k+1}");
    wreath->require_subcommand(1);

    auto* search = wreath->add_subcommand("search", "Search for a decomposition witness");
    int search_k = 0;
    std::string search_variant = "weak";
    bool search_deterministic = false;
    int search_threads = default_threads();
    double search_time_limit = 0.0;
    std::string search_out;
    search->add_option("--k", search_k, "Semilength")->required();
    search->add_option("--variant", search_variant, "weak or strong")
        ->check(CLI::IsMember({"weak", "strong"}));
    search->add_flag("--deterministic", search_deterministic,
                     "Return the lexicographically least witness regardless of thread count");
    search->add_option("--threads", search_threads, "Worker threads (default from DYCKSTAT_THREADS)");
    search->add_option("--time-limit", search_time_limit, "Wall-clock limit in seconds (0 = none)");
    search->add_option("--out", search_out, "Output witness file")->required();

    auto* verify = wreath->add_subcommand("verify", "Re-validate a witness file");
    std::string verify_path;
    verify->add_option("--witness", verify_path, "Witness JSON file")->required();

    auto* show = wreath->add_subcommand("show", "Print the wreath generated by one permutation");
    int show_n = 0, show_k = 0;
    std::string show_perm;
    std::string show_format = "text";
    show->add_option("--n", show_n, "Modulus")->required();
    show->add_option("--k", show_k, "Window size")->required();
    show->add_option("--perm", show_perm, "Comma-separated images, e.g. 0,2,4,1,3")->required();
    show->add_option("--format", show_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(enum_k, enum_format);
        if (*stat) {
            if (stat_l && !stat_m) {
                std::cerr << "--l requires --m\n";
                return kExitUsage;
            }
            return cmd_stat(stat_k, stat_m, stat_l, stat_method, stat_format);
        }
        if (*check) return cmd_check(check_suite, check_max_k);
        if (*search)
            return cmd_wreath_search(search_k, search_variant, search_deterministic, search_threads,
                                     search_time_limit, search_out);
        if (*verify) return cmd_wreath_verify(verify_path);
        if (*show) return cmd_wreath_show(show_n, show_k, show_perm, show_format);
    } catch (const dyckstat::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
