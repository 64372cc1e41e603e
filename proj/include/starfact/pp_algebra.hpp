#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "starfact/group_algebra.hpp"
#include "starfact/partial_perm.hpp"
#include "starfact/rational.hpp"

namespace starfact {

/// Sparse rational element of the semigroup algebra of partial
/// permutations. Terms are kept in a canonical order (by domain, then by
/// image word) and exact zeros are pruned on every operation.
///
/// n is a parameter of the structural maps below, not of the element:
/// an element lies in B_n exactly when every term's domain fits inside
/// {1..n}. The unit is (id, {}), forced by the domain-union product law.
class PPAlgebraElement {
public:
    PPAlgebraElement() = default;  // zero
    static PPAlgebraElement zero() { return {}; }
    static PPAlgebraElement unit();
    static PPAlgebraElement single(PartialPermutation pp, Rational c = 1);

    const std::map<PartialPermutation, Rational>& terms() const { return terms_; }
    Rational coeff(const PartialPermutation& pp) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// True when every term's domain is contained in {1..n}.
    bool fits_within(int n) const;

    void add_term(const PartialPermutation& pp, const Rational& c);

    PPAlgebraElement& operator+=(const PPAlgebraElement& rhs);
    PPAlgebraElement& operator-=(const PPAlgebraElement& rhs);
    PPAlgebraElement& operator*=(const Rational& c);

    std::string to_string() const;  // "1 * [(1 2) | {1,2}] + ..."

    friend bool operator==(const PPAlgebraElement&, const PPAlgebraElement&) = default;

private:
    std::map<PartialPermutation, Rational> terms_;
};

PPAlgebraElement operator+(PPAlgebraElement lhs, const PPAlgebraElement& rhs);
PPAlgebraElement operator-(PPAlgebraElement lhs, const PPAlgebraElement& rhs);
PPAlgebraElement operator*(const PPAlgebraElement& lhs, const PPAlgebraElement& rhs);
PPAlgebraElement operator*(const Rational& c, PPAlgebraElement x);
/// Iterated product; k = 0 gives the unit.
PPAlgebraElement pp_power(const PPAlgebraElement& x, int k);

/// For_n: forgets domains, B_n -> Q[S_n]. Throws DomainTooLarge if a
/// term does not fit inside {1..n}.
GroupAlgebraElement forget(const PPAlgebraElement& x, int n);

/// Tr_n: keeps exactly the terms with domain {1..n}, forgetting the
/// domain; everything else is discarded.
GroupAlgebraElement transitive_part(const PPAlgebraElement& x, int n);

/// Projection B_{n+1} -> B_n: terms with domain inside {1..n} survive
/// verbatim, the rest map to zero.
PPAlgebraElement project_down(const PPAlgebraElement& x, int n);

/// tau . (sigma, d) = (tau sigma tau^{-1}, tau(d)) extended linearly;
/// tau must be a permutation of {1..n} and every term must fit in
/// {1..n}.
PPAlgebraElement conjugate_action(const Permutation& tau, const PPAlgebraElement& x);

/// phi_d: terms with domain inside d survive as permutations of d, the
/// rest map to zero.
GroupAlgebraElement phi_restrict(const PPAlgebraElement& x, std::vector<int> d);

/// E~_n: B_{n+1} -> B_n. A term (sigma, d) survives as its restriction
/// to d \ {n+1} iff n+1 lies in d and sigma fixes it; in particular
/// terms with n+1 not in d map to zero even when sigma fixes n+1.
PPAlgebraElement e_tilde(const PPAlgebraElement& x, int n);

std::ostream& operator<<(std::ostream& os, const PPAlgebraElement& x);

}  // namespace starfact
