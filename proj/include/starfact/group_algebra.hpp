#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "starfact/partition.hpp"
#include "starfact/permutation.hpp"
#include "starfact/rational.hpp"

namespace starfact {

/// Sparse rational element of the group algebra of the symmetric group
/// on an explicit ground set. Every stored key is a permutation of
/// exactly that ground set; zero coefficients are never stored.
///
/// Q[S_n] is the ground set {1..n}; phi_d lands in the algebra over an
/// arbitrary d.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;  // zero over the empty ground set
    explicit GroupAlgebraElement(std::vector<int> ground);
    static GroupAlgebraElement zero(int n);      // over {1..n}
    static GroupAlgebraElement identity(int n);  // 1 * id over {1..n}

    const std::vector<int>& ground() const { return ground_; }
    /// Requires ground == {1..n}; returns n.
    int n() const;

    const std::map<Permutation, Rational>& terms() const { return terms_; }
    Rational coeff(const Permutation& p) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Accumulates c on the key p (extending fixed points is the
    /// caller's job: p.ground() must equal ground()).
    void add_term(const Permutation& p, const Rational& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
    GroupAlgebraElement& operator*=(const Rational& c);

    std::string to_string() const;

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    std::vector<int> ground_;
    std::map<Permutation, Rational> terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement lhs, const GroupAlgebraElement& rhs);
GroupAlgebraElement operator-(GroupAlgebraElement lhs, const GroupAlgebraElement& rhs);
GroupAlgebraElement operator*(const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs);
GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement x);
GroupAlgebraElement ga_power(const GroupAlgebraElement& x, int k);

/// Conditional expectation Q[S_{n+1}] -> Q[S_n]: keeps permutations
/// fixing n+1 and restricts them to {1..n}.
GroupAlgebraElement expectation(const GroupAlgebraElement& x, int n);

/// Coefficients on the class sums C_mu of a central element of Q[S_n].
/// Verifies constancy on conjugacy classes and throws InternalMismatch
/// if the element is not central.
std::map<Partition, Rational> class_coefficients(const GroupAlgebraElement& x);

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& x);

}  // namespace starfact
