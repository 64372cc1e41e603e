#pragma once

#include <map>
#include <string>

#include "starfact/pp_algebra.hpp"

namespace starfact {

/// Coordinates of an invariant element in the alpha basis of A_n.
struct AlphaExpansion {
    int n = 0;
    std::map<Partition, Rational> coords;

    Rational coord(const Partition& lambda) const;
    std::string to_json() const;

    friend bool operator==(const AlphaExpansion&, const AlphaExpansion&) = default;
};

/// alpha_{lambda;n}: the sum of (sigma, d) over all |lambda|-subsets d of
/// {1..n} and all sigma in S_d of cycle type lambda. Zero when
/// |lambda| > n.
PPAlgebraElement alpha_element(const Partition& lambda, int n);

/// The canonical representative term of alpha_{lambda;.}: cycles filled
/// with consecutive integers, largest parts first, on the domain
/// {1..|lambda|}.
PartialPermutation representative_pp(const Partition& lambda);

/// True iff x is fixed by the adjacent transpositions (i i+1), i < n,
/// which generate S_n. Throws DomainTooLarge if x does not fit in B_n.
bool is_invariant(const PPAlgebraElement& x, int n);

/// Unique coordinates of an invariant x over the alpha basis, read off
/// the representative term of each alpha (their supports are disjoint).
/// Throws NotInvariant when the precondition fails.
AlphaExpansion alpha_coordinates(const PPAlgebraElement& x, int n);

/// a_{lambda;n} = binom(n-|lambda|+m_1, m_1) C_{lambda 1^(n-|lambda|)},
/// the image of alpha_{lambda;n} under For_n. Throws WeightExceedsN.
GroupAlgebraElement a_element(const Partition& lambda, int n);

/// C_mu: the sum of all permutations of {1..n} of cycle type mu; requires
/// |mu| = n (WeightMismatch otherwise).
GroupAlgebraElement class_sum(const Partition& mu, int n);

}  // namespace starfact
