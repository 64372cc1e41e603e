// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// every criterion holds. The CLI binary path is taken from argv[1] for
// the determinism criterion.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "starfact/errors.hpp"
#include "starfact/star_counting.hpp"
#include "starfact/verify.hpp"

using namespace starfact;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << index << " (" << what << "): " << (ok ? "PASS" : "FAIL")
              << '\n';
    if (!ok) {
        ++failures;
        if (!detail.empty()) std::cout << "    " << detail << '\n';
    }
}

void run(int index, const std::string& what, const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) {
            report(index, what, false, r.name + ": " + r.detail);
            return;
        }
    }
    report(index, what, true);
}

struct CommandOutput {
    int exit_code = -1;
    std::string stdout_bytes;
};

CommandOutput run_command(const std::string& command) {
    CommandOutput out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) return out;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe.get())) > 0)
        out.stdout_bytes.append(buffer.data(), got);
    int status = pclose(pipe.release());
    out.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_cli(const char* cli_path) {
    const std::string what = "CLI determinism and output schema";
    if (cli_path == nullptr) {
        report(9, what, false, "no CLI binary path given on the command line");
        return;
    }
    const std::string base(cli_path);

    CommandOutput first = run_command(base + " verify --max-n 4 --max-r 6 2>/dev/null");
    CommandOutput second = run_command(base + " verify --max-n 4 --max-r 6 2>/dev/null");
    if (first.exit_code != 0 || second.exit_code != 0) {
        report(9, what, false,
               "verify exited with " + std::to_string(first.exit_code) + " / " +
                   std::to_string(second.exit_code));
        return;
    }
    if (first.stdout_bytes != second.stdout_bytes || first.stdout_bytes.empty()) {
        report(9, what, false, "verify output is not byte-identical across runs");
        return;
    }

    CommandOutput count = run_command(base + " count --lambda 2,1 --r 3 2>/dev/null");
    CommandOutput mnr = run_command(base + " mnr --n 2 --r 3 2>/dev/null");
    try {
        auto cj = nlohmann::json::parse(count.stdout_bytes);
        if (count.exit_code != 0 || cj.at("count").get<std::string>() != "2" ||
            cj.at("brute").get<std::string>() != "2" ||
            cj.at("lambda") != nlohmann::json::array({2, 1}) || cj.at("r").get<int>() != 3) {
            report(9, what, false, "count --lambda 2,1 --r 3 printed " + count.stdout_bytes);
            return;
        }
        auto mj = nlohmann::json::parse(mnr.stdout_bytes);
        nlohmann::json expected = nlohmann::json::array(
            {nlohmann::json{{"class", {2}}, {"coeff", "2"}}});
        if (mnr.exit_code != 0 || mj != expected) {
            report(9, what, false, "mnr --n 2 --r 3 printed " + mnr.stdout_bytes);
            return;
        }
    } catch (const std::exception& e) {
        report(9, what, false, std::string("CLI output is not the documented JSON: ") + e.what());
        return;
    }

    // usage errors exit with 2
    CommandOutput bad = run_command(base + " count --lambda 1,3 --r 2 2>/dev/null");
    if (bad.exit_code != 2) {
        report(9, what, false,
               "malformed partition exited with " + std::to_string(bad.exit_code));
        return;
    }
    report(9, what, true);
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;

    try {
        run(1, "oracle triple equality, n=2..5, r=1..7", {check_count_oracles(5, 7)});
        run(2, "class symmetry of counts, n=2..5, r=1..7", {check_count_symmetry(5, 7)});
        run(3, "derived count fixtures", {check_derived_fixtures()});
        run(4, "Lascoux-Thibon class expansion, n<=5, r<=6", {check_lascoux_thibon(5, 6)});
        run(5, "Biane class expansion, n<=4 r<=7 plus small powers n<=6",
            {check_biane(4, 7), check_biane_small_powers(6)});
        run(6, "phi cross-form to order 12, |lambda|<=6", {check_phi_cross_forms(6, 12)});
        run(7, "structural suite",
            {check_xi_commutativity(6), check_elementary_forms(5),
             check_power_sum_invariance(5, 6), check_projective_stability(4, 6),
             check_morphisms(4), check_p_monomial_triangularity(4),
             check_e_tilde_identities(4, 6), check_tr_centrality(5, 4)});
        run(8, "parity and threshold vanishing, n=2..5, r=1..7",
            {check_parity_threshold(5, 7)});
        criterion_cli(cli_path);
    } catch (const std::exception& e) {
        std::cout << "unexpected exception: " << e.what() << '\n';
        ++failures;
    }

    std::cout << (failures == 0 ? "RESULT: all criteria passed"
                                : "RESULT: " + std::to_string(failures) + " criterion(s) failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
