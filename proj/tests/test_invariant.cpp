#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "starfact/errors.hpp"
#include "starfact/invariant.hpp"
#include "starfact/jucys_murphy.hpp"

using namespace starfact;

TEST_CASE("alpha_element small cases") {
    // one subset, one transposition
    CHECK(alpha_element(Partition({2}), 2) ==
          PPAlgebraElement::single(PartialPermutation::transposition(1, 2)));

    CHECK(alpha_element(Partition({1}), 3) ==
          PPAlgebraElement::single(PartialPermutation::identity_on({1})) +
              PPAlgebraElement::single(PartialPermutation::identity_on({2})) +
              PPAlgebraElement::single(PartialPermutation::identity_on({3})));

    // alpha_{lambda;n} = 0 when n < |lambda|
    CHECK(alpha_element(Partition({3}), 2).is_zero());

    // term count: C(n,k) * k!/z
    CHECK(alpha_element(Partition({2, 1}), 4).size() == 4 * 3);
    CHECK(alpha_element(Partition(), 3) == PPAlgebraElement::unit());
}

TEST_CASE("alpha elements are invariant and mutually disjoint on basis keys") {
    for (int n = 1; n <= 4; ++n) {
        auto group = all_permutations(ground_upto(n));
        for (int k = 0; k <= n; ++k) {
            for (const auto& lambda : partitions_of(k)) {
                PPAlgebraElement alpha = alpha_element(lambda, n);
                CHECK(is_invariant(alpha, n));
                for (const auto& tau : group)
                    CHECK(conjugate_action(tau, alpha) == alpha);
                // every key of alpha_lambda has cycle type lambda on its
                // domain, so distinct lambdas share no keys
                for (const auto& [pp, c] : alpha.terms()) {
                    CHECK(c == 1);
                    CHECK(pp.perm().cycle_type() == lambda);
                }
            }
        }
    }
}

TEST_CASE("representative_pp") {
    CHECK(representative_pp(Partition({2})) == PartialPermutation::transposition(1, 2));
    CHECK(representative_pp(Partition({3, 2, 1})) ==
          PartialPermutation(
              Permutation::from_cycles({{1, 2, 3}, {4, 5}}, ground_upto(6))));
    // domain includes the forced fixed point
    CHECK(representative_pp(Partition({2, 1})).domain() == std::vector<int>{1, 2, 3});
    CHECK(representative_pp(Partition()) == PartialPermutation());
}

TEST_CASE("is_invariant") {
    CHECK(is_invariant(alpha_element(Partition({2, 1}), 3), 3));
    CHECK_FALSE(is_invariant(
        PPAlgebraElement::single(PartialPermutation::transposition(1, 2)), 3));
    CHECK(is_invariant(power_sum_xi(3, 4), 4));
    CHECK_THROWS_AS(
        is_invariant(PPAlgebraElement::single(PartialPermutation::transposition(1, 5)), 3),
        DomainTooLarge);
}

TEST_CASE("alpha_coordinates reads off representatives") {
    PPAlgebraElement x = alpha_element(Partition({2}), 3) +
                         Rational(5) * alpha_element(Partition({1}), 3);
    AlphaExpansion coords = alpha_coordinates(x, 3);
    CHECK(coords.coords.size() == 2);
    CHECK(coords.coord(Partition({2})) == 1);
    CHECK(coords.coord(Partition({1})) == 5);
    CHECK(coords.coord(Partition({3})) == 0);

    // xi_1 + xi_2 = alpha_{(2);2}
    CHECK(alpha_coordinates(xi(1) + xi(2), 2).coords ==
          std::map<Partition, Rational>{{Partition({2}), 1}});

    // e_2(xi_1,xi_2,xi_3) = alpha_{(3);3} since alpha_{(2,2);3} = 0
    AlphaExpansion e2 = alpha_coordinates(elementary_xi_direct(2, 3), 3);
    CHECK(e2.coords == std::map<Partition, Rational>{{Partition({3}), 1}});

    CHECK_THROWS_AS(
        alpha_coordinates(PPAlgebraElement::single(PartialPermutation::transposition(1, 2)), 3),
        NotInvariant);
}

TEST_CASE("alpha_coordinates roundtrip on random invariant combinations") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int n = 1; n <= 5; ++n) {
        std::map<Partition, Rational> chosen;
        PPAlgebraElement x;
        for (int k = 0; k <= n; ++k) {
            for (const auto& lambda : partitions_of(k)) {
                Rational c = make_rational(num(rng), den(rng));
                if (c == 0) continue;
                chosen[lambda] = c;
                x += c * alpha_element(lambda, n);
            }
        }
        AlphaExpansion coords = alpha_coordinates(x, n);
        CHECK(coords.coords == chosen);

        // reconstruction is exact
        PPAlgebraElement rebuilt;
        for (const auto& [lambda, c] : coords.coords)
            rebuilt += c * alpha_element(lambda, n);
        CHECK(rebuilt == x);
    }
}

TEST_CASE("a_element") {
    CHECK(a_element(Partition({1}), 4) == Rational(4) * GroupAlgebraElement::identity(4));

    GroupAlgebraElement a22 = a_element(Partition({2}), 2);
    CHECK(a22.size() == 1);
    CHECK(a22.coeff(Permutation::transposition(1, 2)) == 1);

    // the binomial multiple must match the forget oracle; at (2,1);4 the
    // multiplier is binom(4-3+1, 1) = 2
    CHECK(a_element(Partition({2, 1}), 4) ==
          Rational(2) * class_sum(Partition({2, 1, 1}), 4));
    CHECK(a_element(Partition({2, 1}), 4) == forget(alpha_element(Partition({2, 1}), 4), 4));

    CHECK_THROWS_AS(a_element(Partition({3, 2}), 4), WeightExceedsN);
}

TEST_CASE("a_element equals forget(alpha_element) for all |lambda| <= n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& lambda : partitions_of(k))
                CHECK(a_element(lambda, n) == forget(alpha_element(lambda, n), n));
}

TEST_CASE("a_element falling-factorial form") {
    // a_{lambda;n} = [n(n-1)...(n-|l|+1) / z] C_mu / |C_mu|, mu = lambda 1^{n-|l|}
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& lambda : partitions_of(k)) {
                Partition mu = pad_with_ones(lambda, n);
                Integer falling = 1;
                for (int i = 0; i < k; ++i) falling *= n - i;
                Integer class_size = factorial(static_cast<unsigned long>(n)) / z_value(mu);
                Rational scale = make_rational(falling, z_value(lambda)) /
                                 Rational(class_size);
                CHECK(a_element(lambda, n) == scale * class_sum(mu, n));
            }
        }
    }
}

TEST_CASE("class_sum") {
    CHECK(class_sum(Partition({1, 1}), 2) == GroupAlgebraElement::identity(2));

    GroupAlgebraElement c21 = class_sum(Partition({2, 1}), 3);
    CHECK(c21.size() == 3);
    for (const auto& [p, c] : c21.terms()) {
        CHECK(c == 1);
        CHECK(p.cycle_type() == Partition({2, 1}));
    }

    CHECK(class_sum(Partition({3}), 3).size() == 2);
    CHECK_THROWS_AS(class_sum(Partition({2, 1}), 4), WeightMismatch);
}

TEST_CASE("projective stability of the alpha basis") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n + 1; ++k)
            for (const auto& lambda : partitions_of(k))
                CHECK(project_down(alpha_element(lambda, n + 1), n) ==
                      alpha_element(lambda, n));
}

TEST_CASE("AlphaExpansion JSON form") {
    PPAlgebraElement x = make_rational(3, 2) * alpha_element(Partition({2, 1}), 4);
    AlphaExpansion coords = alpha_coordinates(x, 4);
    CHECK(coords.to_json() ==
          R"({"n":4,"coords":[{"lambda":[2,1],"coeff":"3/2"}]})");
}
