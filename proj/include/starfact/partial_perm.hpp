#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "starfact/permutation.hpp"

namespace starfact {

/// Partial permutation (sigma, d): a permutation sigma of a finite set d.
/// The ground set of sigma is exactly d, so fixed points of d are part of
/// the data. The semigroup product unions the ground sets.
class PartialPermutation {
public:
    PartialPermutation() = default;  // (id, {}), the unit

    explicit PartialPermutation(Permutation sigma) : sigma_(std::move(sigma)) {}
    static PartialPermutation identity_on(std::vector<int> domain);
    static PartialPermutation transposition(int a, int b);  // ((a b), {a,b})

    const std::vector<int>& domain() const { return sigma_.ground(); }
    const Permutation& perm() const { return sigma_; }
    bool is_unit() const { return sigma_.ground().empty(); }

    std::string to_string() const;  // "[(1 3)(2 4) | {1,2,3,4}]"

    friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
    friend auto operator<=>(const PartialPermutation&, const PartialPermutation&) = default;

private:
    Permutation sigma_;
};

/// (sigma, d) * (sigma', d') = (sigma o sigma', d u d'), both factors
/// extended by fixed points to d u d', right factor applied first.
PartialPermutation operator*(const PartialPermutation& x, const PartialPermutation& y);

std::ostream& operator<<(std::ostream& os, const PartialPermutation& pp);

}  // namespace starfact
