#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "starfact/partition.hpp"

namespace starfact {

/// Permutation of an explicit finite ground set of positive integers.
///
/// The ground set is stored sorted ascending and images aligned to it,
/// so equality and ordering are structural: two permutations are equal
/// only if both the ground sets and the images agree. Points of the
/// ground set outside the support are genuine data (they distinguish
/// the identity on {1} from the identity on the empty set).
class Permutation {
public:
    Permutation() = default;  // identity on the empty set

    static Permutation identity(std::vector<int> ground);
    static Permutation from_images(std::vector<int> ground, std::vector<int> images);
    static Permutation transposition(int a, int b);  // ground {a,b}
    /// Disjoint cycles; ground defaults to their union, or pass a
    /// superset explicitly to carry extra fixed points.
    static Permutation from_cycles(const std::vector<std::vector<int>>& cycles,
                                   std::vector<int> ground = {});

    const std::vector<int>& ground() const { return ground_; }
    const std::vector<int>& images() const { return images_; }
    std::size_t degree() const { return ground_.size(); }
    bool contains(int x) const;

    /// Image of x; points outside the ground set are fixed.
    int apply(int x) const;
    int operator()(int x) const { return apply(x); }

    Permutation inverse() const;
    std::vector<int> support() const;  // non-fixed points
    Permutation extended_to(const std::vector<int>& superset) const;
    /// Restriction to an invariant subset of the ground set.
    Permutation restricted_to(const std::vector<int>& subset) const;
    /// tau * this * tau^{-1}, with ground relabeled to tau(ground).
    Permutation conjugated_by(const Permutation& tau) const;

    /// Nontrivial cycles, each starting at its least element, ordered by
    /// least element.
    std::vector<std::vector<int>> cycles() const;
    /// Multiset of cycle lengths on the full ground set, fixed points
    /// included, sorted decreasingly.
    Partition cycle_type() const;
    std::size_t num_cycles() const;
    bool is_identity() const;

    std::string to_string() const;  // "(1 3)(2 4)", or "id"

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> ground_;
    std::vector<int> images_;
};

/// x -> p(q(x)): q applied first. The single composition convention used
/// by every module; ground sets may differ and the result lives on their
/// union.
Permutation compose(const Permutation& p, const Permutation& q);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Ground-set utilities shared across the algebra code.
std::vector<int> ground_upto(int n);  // {1,...,n}
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_minus(const std::vector<int>& a, int x);
std::string set_to_string(const std::vector<int>& a);  // "{1,2,3}"
std::vector<std::vector<int>> subsets_of_size(int n, int k);  // of {1..n}

/// All |ground|! permutations of a ground set, in lexicographic image
/// order.
std::vector<Permutation> all_permutations(const std::vector<int>& ground);

}  // namespace starfact
