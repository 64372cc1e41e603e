#pragma once

#include <string>
#include <vector>

namespace starfact {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failing identity, empty on pass
};

// Individual identity checks with explicit grids. Each one is exact:
// a single counterexample fails the check and is reported in detail.
CheckResult check_count_oracles(int max_n, int max_r);
CheckResult check_count_symmetry(int max_n, int max_r);
CheckResult check_parity_threshold(int max_n, int max_r);
CheckResult check_derived_fixtures();
CheckResult check_lascoux_thibon(int max_n, int max_r);
CheckResult check_biane(int max_n, int max_r);
CheckResult check_biane_small_powers(int max_n);
CheckResult check_phi_cross_forms(int max_weight, int order);
CheckResult check_xi_commutativity(int max_i);
CheckResult check_elementary_forms(int max_n);
CheckResult check_power_sum_invariance(int max_n, int max_r);
CheckResult check_projective_stability(int max_n, int max_r);
CheckResult check_morphisms(int max_n);
CheckResult check_p_monomial_triangularity(int max_weight);
CheckResult check_e_tilde_identities(int max_n, int max_r);
CheckResult check_tr_centrality(int max_n, int max_r);

/// The full suite on a grid; the CLI verify subcommand prints one row
/// per result. Deterministic: fixed seeds, no timing in the output.
std::vector<CheckResult> run_verification(int max_n, int max_r, int series_order);

}  // namespace starfact
