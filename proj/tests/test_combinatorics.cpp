#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "starfact/errors.hpp"
#include "starfact/partition.hpp"
#include "starfact/permutation.hpp"

using namespace starfact;

namespace {

// independent oracle: counts partitions of k with parts <= maxpart by
// plain recursion, no shared code with partitions_of
long count_partitions_oracle(int k, int maxpart) {
    if (k == 0) return 1;
    long total = 0;
    for (int p = std::min(k, maxpart); p >= 1; --p)
        total += count_partitions_oracle(k - p, p);
    return total;
}

Permutation random_perm(std::mt19937& rng, int max_point) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> g;
    for (int x = 1; x <= max_point; ++x)
        if (coin(rng)) g.push_back(x);
    std::vector<int> img = g;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(g, img);
}

}  // namespace

TEST_CASE("partition construction and accessors") {
    Partition p({3, 1, 1});
    CHECK(p.weight() == 5);
    CHECK(p.length() == 3);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(3) == 1);
    CHECK(p.multiplicity(2) == 0);
    CHECK(Partition().empty());
    CHECK(Partition().weight() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partition text format") {
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("7") == Partition({7}));
    CHECK(Partition({3, 1, 1}).to_string() == "3,1,1");
    CHECK(Partition().to_string() == "");
    CHECK_THROWS_AS(Partition::parse("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}

TEST_CASE("z_value") {
    CHECK(z_value(Partition({2, 1})) == 2);
    CHECK(z_value(Partition({2, 2})) == 8);
    CHECK(z_value(Partition()) == 1);
    CHECK(z_value(Partition({3, 1, 1})) == 6);
    CHECK(z_value(Partition({1, 1, 1})) == 6);
}

TEST_CASE("z_value counts conjugacy classes: |{sigma of type lambda}| = k!/z") {
    for (int k = 1; k <= 6; ++k) {
        std::map<Partition, long> freq;
        for (const auto& sigma : all_permutations(ground_upto(k)))
            ++freq[sigma.cycle_type()];
        for (const auto& lambda : partitions_of(k)) {
            Integer expected = factorial(static_cast<unsigned long>(k)) / z_value(lambda);
            CHECK(Integer(freq[lambda]) == expected);
        }
    }
}

TEST_CASE("part transforms") {
    CHECK(add_one_each(Partition({2, 1})) == Partition({3, 2}));
    CHECK(add_one_each(Partition()) == Partition());
    CHECK(union_one(Partition({3})) == Partition({3, 1}));
    CHECK(union_one(Partition()) == Partition({1}));
    CHECK(remove_a_one(Partition({2, 1, 1})) == Partition({2, 1}));
    CHECK_THROWS_AS(remove_a_one(Partition({2, 2})), MissingPartOne);
    CHECK_THROWS_AS(remove_a_one(Partition()), MissingPartOne);
    CHECK(pad_with_ones(Partition({2, 1}), 5) == Partition({2, 1, 1, 1}));
}

TEST_CASE("partitions_of: order and cardinalities") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == Partition());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(partitions_of(7).size() == 15);

    for (int k = 0; k <= 10; ++k)
        CHECK(static_cast<long>(partitions_of(k).size()) == count_partitions_oracle(k, k));
}

TEST_CASE("permutation basics") {
    Permutation t = Permutation::transposition(1, 2);
    CHECK(t.apply(1) == 2);
    CHECK(t.apply(2) == 1);
    CHECK(t.apply(5) == 5);  // outside the ground set
    CHECK(t.inverse() == t);
    CHECK(t.support() == std::vector<int>{1, 2});

    Permutation id3 = Permutation::identity({1, 2, 3});
    CHECK(id3.is_identity());
    CHECK(id3.to_string() == "id");
    CHECK(t.to_string() == "(1 2)");

    // equal only when ground sets agree as well
    CHECK(Permutation::identity({1}) != Permutation::identity({}));
    CHECK(t.extended_to({1, 2, 3}) != t);

    CHECK_THROWS_AS(Permutation::from_images({1, 2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("compose applies the right factor first") {
    // (1 3) on {1,3} composed with (2 3) on {2,3} is the 3-cycle (1 3 2)
    Permutation p = Permutation::transposition(1, 3);
    Permutation q = Permutation::transposition(2, 3);
    Permutation r = compose(p, q);
    CHECK(r.ground() == std::vector<int>{1, 2, 3});
    CHECK(r.apply(1) == 3);
    CHECK(r.apply(3) == 2);
    CHECK(r.apply(2) == 1);
    CHECK(r == Permutation::from_cycles({{1, 3, 2}}));

    Permutation sigma = Permutation::from_cycles({{1, 4, 2}});
    CHECK(compose(Permutation(), sigma) == sigma);
    CHECK(compose(sigma, sigma.inverse()) == Permutation::identity(sigma.ground()));
}

TEST_CASE("compose is associative on random triples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Permutation a = random_perm(rng, 6);
        Permutation b = random_perm(rng, 6);
        Permutation c = random_perm(rng, 6);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("cycle type and cycle count") {
    Permutation t = Permutation::transposition(1, 2).extended_to({1, 2, 3});
    CHECK(t.cycle_type() == Partition({2, 1}));
    CHECK(t.num_cycles() == 2);

    CHECK(Permutation::identity(ground_upto(5)).cycle_type() == Partition({1, 1, 1, 1, 1}));
    CHECK(Permutation::identity(ground_upto(5)).num_cycles() == 5);

    Permutation c = Permutation::from_cycles({{1, 3, 2}});
    CHECK(c.cycle_type() == Partition({3}));
    CHECK(c.num_cycles() == 1);
}

TEST_CASE("cycle type weight and length match the ground set") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Permutation p = random_perm(rng, 7);
        Partition type = p.cycle_type();
        CHECK(type.weight() == static_cast<int>(p.ground().size()));
        CHECK(static_cast<std::size_t>(type.length()) == p.num_cycles());
    }
}

TEST_CASE("ground set helpers") {
    CHECK(ground_upto(3) == std::vector<int>{1, 2, 3});
    CHECK(ground_upto(0).empty());
    CHECK(is_subset({1, 3}, {1, 2, 3}));
    CHECK_FALSE(is_subset({1, 4}, {1, 2, 3}));
    CHECK(set_union({1, 3}, {2, 3}) == std::vector<int>{1, 2, 3});
    CHECK(set_minus({1, 2, 3}, 2) == std::vector<int>{1, 3});
    CHECK(set_to_string({1, 2, 3}) == "{1,2,3}");
    CHECK(set_to_string({}) == "{}");
    CHECK(subsets_of_size(4, 2).size() == 6);
    CHECK(subsets_of_size(3, 0).size() == 1);
    CHECK(all_permutations(ground_upto(4)).size() == 24);
}
