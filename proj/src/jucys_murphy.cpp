#include "starfact/jucys_murphy.hpp"

#include <stdexcept>

#include "starfact/errors.hpp"

namespace starfact {

PPAlgebraElement xi(int i) {
    if (i < 1) throw std::invalid_argument("xi: index must be positive");
    PPAlgebraElement out;
    for (int j = 1; j < i; ++j) out.add_term(PartialPermutation::transposition(j, i), 1);
    return out;
}

GroupAlgebraElement classical_jm(int i, int n) {
    if (i < 1) throw std::invalid_argument("classical_jm: index must be positive");
    if (i > n) throw IndexExceedsN("classical_jm: index exceeds n");
    std::vector<int> g = ground_upto(n);
    GroupAlgebraElement out(g);
    for (int j = 1; j < i; ++j)
        out.add_term(Permutation::transposition(j, i).extended_to(g), 1);
    return out;
}

PPAlgebraElement power_sum_xi(int r, int n) {
    if (r < 1) throw std::invalid_argument("power_sum_xi: r must be >= 1 (p_0 is not defined)");
    if (n < 1) throw std::invalid_argument("power_sum_xi: n must be >= 1");
    PPAlgebraElement out;
    for (int i = 1; i <= n; ++i) out += pp_power(xi(i), r);
    return out;
}

PPAlgebraElement elementary_xi_direct(int ell, int n) {
    if (ell < 1 || ell > n)
        throw std::invalid_argument("elementary_xi_direct: need 1 <= ell <= n");
    PPAlgebraElement out;
    for (const auto& indices : subsets_of_size(n, ell)) {
        PPAlgebraElement prod = PPAlgebraElement::unit();
        for (int i : indices) prod = prod * xi(i);
        out += prod;
    }
    return out;
}

PPAlgebraElement elementary_xi_closed(int ell, int n) {
    if (ell < 1 || ell > n)
        throw std::invalid_argument("elementary_xi_closed: need 1 <= ell <= n");
    PPAlgebraElement out;
    for (const auto& sigma : all_permutations(ground_upto(n))) {
        if (static_cast<int>(sigma.num_cycles()) != n - ell) continue;
        std::vector<int> supp = sigma.support();
        out.add_term(PartialPermutation(sigma.restricted_to(supp)), 1);
    }
    return out;
}

PPAlgebraElement p_monomial(const Partition& lambda, int n) {
    PPAlgebraElement acc = PPAlgebraElement::unit();
    const int m1 = lambda.multiplicity(1);
    PPAlgebraElement alpha1 = alpha_element(Partition({1}), n);
    for (int i = 0; i < m1; ++i) acc = acc * alpha1;
    int largest = lambda.empty() ? 0 : lambda.parts().front();
    for (int k = 2; k <= largest; ++k) {
        int mk = lambda.multiplicity(k);
        if (mk == 0) continue;
        PPAlgebraElement pk = power_sum_xi(k - 1, n);
        for (int i = 0; i < mk; ++i) acc = acc * pk;
    }
    return acc;
}

}  // namespace starfact
