#include "starfact/invariant.hpp"

#include <json.hpp>

#include "starfact/errors.hpp"

namespace starfact {

Rational AlphaExpansion::coord(const Partition& lambda) const {
    auto it = coords.find(lambda);
    return it == coords.end() ? Rational(0) : it->second;
}

std::string AlphaExpansion::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["coords"] = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : coords) {
        nlohmann::ordered_json entry;
        entry["lambda"] = lambda.parts();
        entry["coeff"] = starfact::to_string(c);
        j["coords"].push_back(std::move(entry));
    }
    return j.dump();
}

PPAlgebraElement alpha_element(const Partition& lambda, int n) {
    PPAlgebraElement out;
    const int k = lambda.weight();
    if (k > n) return out;  // alpha_{lambda;n} = 0 when n < |lambda|
    for (const auto& d : subsets_of_size(n, k))
        for (const auto& sigma : all_permutations(d))
            if (sigma.cycle_type() == lambda) out.add_term(PartialPermutation(sigma), 1);
    return out;
}

PartialPermutation representative_pp(const Partition& lambda) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int p : lambda.parts()) {
        if (p >= 2) {
            std::vector<int> cycle;
            for (int i = 0; i < p; ++i) cycle.push_back(next + i);
            cycles.push_back(std::move(cycle));
        }
        next += p;
    }
    return PartialPermutation(Permutation::from_cycles(cycles, ground_upto(lambda.weight())));
}

bool is_invariant(const PPAlgebraElement& x, int n) {
    if (!x.fits_within(n))
        throw DomainTooLarge("is_invariant: element does not fit inside B_" + std::to_string(n));
    for (int i = 1; i < n; ++i) {
        Permutation tau = Permutation::transposition(i, i + 1).extended_to(ground_upto(n));
        if (conjugate_action(tau, x) != x) return false;
    }
    return true;
}

AlphaExpansion alpha_coordinates(const PPAlgebraElement& x, int n) {
    if (!is_invariant(x, n))
        throw NotInvariant("alpha_coordinates: element is not S_n-invariant");
    AlphaExpansion out;
    out.n = n;
    for (int k = 0; k <= n; ++k) {
        for (const auto& lambda : partitions_of(k)) {
            Rational c = x.coeff(representative_pp(lambda));
            if (c != 0) out.coords.emplace(lambda, std::move(c));
        }
    }
    return out;
}

GroupAlgebraElement a_element(const Partition& lambda, int n) {
    if (lambda.weight() > n)
        throw WeightExceedsN("a_element: |lambda| exceeds n");
    const unsigned long m1 = static_cast<unsigned long>(lambda.multiplicity(1));
    Integer coef = binomial(static_cast<unsigned long>(n - lambda.weight()) + m1, m1);
    GroupAlgebraElement out = class_sum(pad_with_ones(lambda, n), n);
    out *= Rational(coef);
    return out;
}

GroupAlgebraElement class_sum(const Partition& mu, int n) {
    if (mu.weight() != n)
        throw WeightMismatch("class_sum: |mu| must equal n");
    GroupAlgebraElement out = GroupAlgebraElement::zero(n);
    for (const auto& sigma : all_permutations(ground_upto(n)))
        if (sigma.cycle_type() == mu) out.add_term(sigma, 1);
    return out;
}

}  // namespace starfact
