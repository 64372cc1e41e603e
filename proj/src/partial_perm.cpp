#include "starfact/partial_perm.hpp"

#include <ostream>

namespace starfact {

PartialPermutation PartialPermutation::identity_on(std::vector<int> domain) {
    return PartialPermutation(Permutation::identity(std::move(domain)));
}

PartialPermutation PartialPermutation::transposition(int a, int b) {
    return PartialPermutation(Permutation::transposition(a, b));
}

std::string PartialPermutation::to_string() const {
    return "[" + sigma_.to_string() + " | " + set_to_string(domain()) + "]";
}

PartialPermutation operator*(const PartialPermutation& x, const PartialPermutation& y) {
    // compose() already extends both factors to the union ground set.
    return PartialPermutation(compose(x.perm(), y.perm()));
}

std::ostream& operator<<(std::ostream& os, const PartialPermutation& pp) {
    return os << pp.to_string();
}

}  // namespace starfact
