#pragma once

#include "starfact/invariant.hpp"
#include "starfact/pp_algebra.hpp"

namespace starfact {

/// xi_i = sum over j < i of ((j i), {j,i}); xi_1 is the zero element.
PPAlgebraElement xi(int i);

/// Classical Jucys-Murphy element X_i = sum over j < i of (j i) in
/// Q[S_n]; requires i <= n (IndexExceedsN).
GroupAlgebraElement classical_jm(int i, int n);

/// p_r(xi_1,...,xi_n), computed by iterated multiplication; r >= 1.
PPAlgebraElement power_sum_xi(int r, int n);

/// e_l(xi_1,...,xi_n) expanded as the sum over l-subsets of products of
/// the corresponding xi's, evaluated in ascending index order.
PPAlgebraElement elementary_xi_direct(int ell, int n);

/// The closed form of e_l(xi_1,...,xi_n): the sum of (sigma, supp sigma)
/// over the permutations of {1..n} with exactly n-l cycles.
PPAlgebraElement elementary_xi_closed(int ell, int n);

/// P_lambda for lambda = 1^{m_1} 2^{m_2} 3^{m_3} ...: the product
/// alpha_{(1)}^{m_1} * prod_{k>=2} p_{k-1}(Xi)^{m_k}, evaluated with
/// alpha powers first then ascending k.
PPAlgebraElement p_monomial(const Partition& lambda, int n);

}  // namespace starfact
