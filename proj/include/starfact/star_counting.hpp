#pragma once

#include <functional>
#include <map>

#include "starfact/group_algebra.hpp"
#include "starfact/invariant.hpp"
#include "starfact/jucys_murphy.hpp"
#include "starfact/series.hpp"

namespace starfact {

/// Word enumeration for star factorizations: visits every sequence
/// (i_1,...,i_r) in {1..n-1}^r with the product (i_1 n)...(i_r n),
/// rightmost factor applied first (the global composition convention).
/// The callback receives the product and whether every generator index
/// occurred, i.e. whether the factorization is transitive.
void for_each_star_word(int n, int r,
                        const std::function<void(const Permutation&, bool transitive)>& visit);

/// Number of transitive factorizations of sigma (a permutation of
/// {1..n}) into r star transpositions, by exhaustive word enumeration.
/// For n = 1 the generator set is empty and the count is 1 iff r = 0.
Integer count_brute(const Permutation& sigma, int r);

/// The counts of all of S_n at once, from a single enumeration; absent
/// permutations have count zero.
std::map<Permutation, Integer> count_brute_table(int n, int r);

/// Tr_n(xi_n^r): the generating element whose coefficient at sigma is
/// the transitive count.
GroupAlgebraElement transitive_power(int n, int r);

/// Same count through the partial-permutation algebra.
Integer count_algebraic(const Permutation& sigma, int r);

/// g_lambda = z_lambda r! [t^r] phi_lambda(t), computed both through the
/// sinh-form series and through the closed f-form
///   (r!/|l|!) (prod l_i) [t^g] f(t)^{|l|-2} prod f(l_i t),
/// g = r - (|l|+len-2). The two routes are compared on every call and
/// InternalMismatch is thrown if they ever disagree.
Rational g_lambda(const Partition& lambda, int r);

/// The closed-formula count of transitive star factorizations of a
/// permutation of type lambda (n = |lambda|) into r factors. Throws
/// NonIntegerResult if the formula fails to produce a nonnegative
/// integer, which would be a bug.
Integer count_gj(const Partition& lambda, int r);

/// Class expansion of p_r(X_1,...,X_n): sum over |lambda| <= n of
/// g_lambda a_{lambda;n}.
GroupAlgebraElement pr_class_expansion(int r, int n);

/// sum_i X_i^r computed directly in Q[S_n]; the cross-check for
/// pr_class_expansion.
GroupAlgebraElement jm_power_sum_direct(int r, int n);

/// M_n^r by brute force: X_{n+1}^r in Q[S_{n+1}] followed by the
/// conditional expectation onto Q[S_n].
GroupAlgebraElement biane_m_brute(int n, int r);

/// M_n^r by the class expansion sum over |lambda| <= n (the empty
/// partition included; its coefficient g_{(1)} vanishes for r >= 1) of
/// g_{lambda u 1} a_{lambda;n}.
GroupAlgebraElement biane_m_formula(int n, int r);

/// The partial-permutation lift E~_n(xi_{n+1}^r); its alpha coordinates
/// are lambda -> g_{lambda u 1} and its For_n image is M_n^r.
PPAlgebraElement m_partial(int n, int r);

}  // namespace starfact
