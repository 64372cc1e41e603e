// Command-line front end: exact star-factorization counts, class
// expansions, and the self-verification suite, with machine-readable
// output (JSON by default, TSV on request). All numbers are printed as
// exact decimal/fraction strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "starfact/errors.hpp"
#include "starfact/star_counting.hpp"
#include "starfact/verify.hpp"

using namespace starfact;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_lambda(const std::string& text) {
    Partition lambda;
    try {
        lambda = Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --lambda: ") + e.what());
    }
    if (lambda.empty()) throw UsageError("--lambda must be a nonempty partition");
    return lambda;
}

void print_tsv_pairs(const std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [k, v] : rows) std::cout << k << '\t' << v << '\n';
}

int run_count(const std::string& lambda_text, int r, const std::string& format) {
    Partition lambda = parse_lambda(lambda_text);
    if (r < 0) throw UsageError("--r must be nonnegative");
    Integer count = count_gj(lambda, r);
    const bool with_brute = lambda.weight() <= 6 && r <= 8;
    Integer brute = 0;
    if (with_brute) brute = count_brute(representative_pp(lambda).perm(), r);

    if (format == "tsv") {
        std::vector<std::pair<std::string, std::string>> rows = {
            {"lambda", lambda.to_string()},
            {"r", std::to_string(r)},
            {"count", to_string(count)}};
        if (with_brute) rows.emplace_back("brute", to_string(brute));
        print_tsv_pairs(rows);
    } else {
        ordered_json j;
        j["lambda"] = lambda.parts();
        j["r"] = r;
        j["count"] = to_string(count);
        if (with_brute) j["brute"] = to_string(brute);
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int run_g_lambda(const std::string& lambda_text, int r, const std::string& format) {
    Partition lambda = parse_lambda(lambda_text);
    if (r < 0) throw UsageError("--r must be nonnegative");
    Rational g = g_lambda(lambda, r);
    if (format == "tsv") {
        print_tsv_pairs({{"lambda", lambda.to_string()},
                         {"r", std::to_string(r)},
                         {"g", to_string(g)}});
    } else {
        ordered_json j;
        j["lambda"] = lambda.parts();
        j["r"] = r;
        j["g"] = to_string(g);
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int print_class_expansion(const GroupAlgebraElement& x, int n, const std::string& format) {
    auto coeffs = class_coefficients(x);
    if (format == "tsv") {
        for (const auto& mu : partitions_of(n)) {
            auto it = coeffs.find(mu);
            if (it == coeffs.end()) continue;
            std::cout << mu.to_string() << '\t' << to_string(it->second) << '\n';
        }
    } else {
        ordered_json out = ordered_json::array();
        for (const auto& mu : partitions_of(n)) {
            auto it = coeffs.find(mu);
            if (it == coeffs.end()) continue;
            ordered_json entry;
            entry["class"] = mu.parts();
            entry["coeff"] = to_string(it->second);
            out.push_back(std::move(entry));
        }
        std::cout << out.dump() << '\n';
    }
    return 0;
}

int run_verify(int max_n, int max_r, int trunc, const std::string& format, bool verbose) {
    if (max_n < 1 || max_r < 1) throw UsageError("--max-n and --max-r must be >= 1");
    if (trunc < 4) throw UsageError("--trunc must be >= 4");
    if (verbose)
        std::cerr << "verify grid: max-n " << max_n << ", max-r " << max_r
                  << ", series order " << trunc << '\n';
    auto results = run_verification(max_n, max_r, trunc);
    if (format == "tsv") {
        for (const auto& row : results)
            std::cout << row.name << '\t' << (row.pass ? "PASS" : "FAIL") << '\n';
    } else {
        ordered_json out = ordered_json::array();
        for (const auto& row : results) {
            ordered_json entry;
            entry["check"] = row.name;
            entry["pass"] = row.pass;
            out.push_back(std::move(entry));
        }
        std::cout << out.dump() << '\n';
    }
    for (const auto& row : results) {
        if (!row.pass) {
            std::cerr << "verification failed at " << row.name << ": " << row.detail << '\n';
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact transitive star factorization counts and class expansions"};
    app.require_subcommand(1);

    std::string lambda_text;
    std::string format = "json";
    int n = 0;
    int r = 0;
    int max_n = 4;
    int max_r = 6;
    int trunc = 14;
    bool verbose = false;

    app.add_flag("-v,--verbose", verbose, "diagnostics on standard error");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* count = app.add_subcommand("count", "transitive star factorization count");
    count->fallthrough();
    count->add_option("--lambda", lambda_text, "cycle type, e.g. 2,1")->required();
    count->add_option("--r", r, "number of factors")->required();

    auto* glam =
        app.add_subcommand("g-lambda", "coefficient g_lambda of alpha_lambda in p_r(Xi)");
    glam->fallthrough();
    glam->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    glam->add_option("--r", r, "power")->required();

    auto* prx = app.add_subcommand("pr-expand", "class expansion of p_r(X_1..X_n)");
    prx->fallthrough();
    prx->add_option("--n", n, "symmetric group degree")->required();
    prx->add_option("--r", r, "power")->required();

    auto* mnr = app.add_subcommand("mnr", "class expansion of M_n^r");
    mnr->fallthrough();
    mnr->add_option("--n", n, "symmetric group degree")->required();
    mnr->add_option("--r", r, "power")->required();

    auto* verify = app.add_subcommand("verify", "run the invariant suite over a grid");
    verify->fallthrough();
    verify->add_option("--max-n", max_n, "largest symmetric group degree");
    verify->add_option("--max-r", max_r, "largest power / factor count");
    verify->add_option("--trunc", trunc, "series truncation order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(lambda_text, r, format);
        if (glam->parsed()) return run_g_lambda(lambda_text, r, format);
        if (prx->parsed()) {
            if (n < 1 || r < 1) throw UsageError("pr-expand needs --n >= 1 and --r >= 1");
            return print_class_expansion(pr_class_expansion(r, n), n, format);
        }
        if (mnr->parsed()) {
            if (n < 1 || r < 1) throw UsageError("mnr needs --n >= 1 and --r >= 1");
            return print_class_expansion(biane_m_formula(n, r), n, format);
        }
        if (verify->parsed()) return run_verify(max_n, max_r, trunc, format, verbose);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
