#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "wgcalc/symgroup.hpp"

using namespace wgcalc;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

// Independent parity oracle: count inversions of the image table.
int inversion_sign(const Permutation& p) {
    int inversions = 0;
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            if (p(a) > p(b)) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("permutation construction", "[symgroup]") {
    CHECK(Permutation::identity(4).is_identity());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
    CHECK(Permutation::from_one_based({2, 1, 3}) ==
          Permutation::transposition(3, 0, 1));
}

TEST_CASE("composition laws", "[symgroup]") {
    std::mt19937 rng(7);
    for (int n : {1, 2, 3, 5, 7}) {
        const Permutation e = Permutation::identity(n);
        for (int trial = 0; trial < 20; ++trial) {
            const Permutation sigma = random_permutation(n, rng);
            CHECK(e.compose(sigma) == sigma);
            CHECK(sigma.compose(e) == sigma);
            CHECK(sigma.compose(sigma.inverse()) == e);
            CHECK(sigma.inverse().compose(sigma) == e);
        }
    }
    // (sigma o tau)(k) = sigma(tau(k)) evaluated pointwise in S_3.
    const Permutation sigma = Permutation::from_one_based({2, 1, 3});  // (1 2)
    const Permutation tau = Permutation::from_one_based({1, 3, 2});    // (2 3)
    CHECK(sigma.compose(tau) == Permutation::from_one_based({2, 3, 1}));
    CHECK_THROWS_AS(sigma.compose(Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("cycle structure", "[symgroup]") {
    CHECK(Permutation::identity(4).cycle_type() == Partition({1, 1, 1, 1}));
    // (1 2 3)(4 5) in S_5.
    const Permutation p = Permutation::from_one_based({2, 3, 1, 5, 4});
    CHECK(p.cycle_type() == Partition({3, 2}));
    CHECK(Permutation::from_one_based({2, 1}).cycle_type() == Partition({2}));

    for (int n : {1, 4, 6}) CHECK(Permutation::identity(n).num_cycles() == n);
    std::vector<int> full_cycle(6);
    for (int k = 0; k < 6; ++k) full_cycle[k] = (k + 1) % 6;
    CHECK(Permutation(full_cycle).num_cycles() == 1);
    // (1 2)(3 4) in S_5.
    CHECK(Permutation::from_one_based({2, 1, 4, 3, 5}).num_cycles() == 3);
}

TEST_CASE("cycle type is conjugation invariant", "[symgroup]") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Permutation sigma = random_permutation(n, rng);
            const Permutation rho = random_permutation(n, rng);
            CHECK(rho.compose(sigma).compose(rho.inverse()).cycle_type() ==
                  sigma.cycle_type());
        }
}

TEST_CASE("sign is determined by the cycle count", "[symgroup]") {
    std::mt19937 rng(13);
    for (int n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Permutation sigma = random_permutation(n, rng);
            const int parity = (n - sigma.num_cycles()) % 2 == 0 ? 1 : -1;
            CHECK(inversion_sign(sigma) == parity);
        }
}

TEST_CASE("conjugacy class sizes", "[symgroup]") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(conjugacy_class_size(Partition(std::vector<int>(n, 1))) == 1);
        CHECK(conjugacy_class_size(Partition({n})) == factorial(n - 1));

        Integer total(0);
        for (const auto& mu : enumerate_partitions(n)) total += conjugacy_class_size(mu);
        CHECK(total == factorial(n));

        // Brute force per class.
        std::map<Partition, long> counts;
        for (const auto& sigma : enumerate_group(n)) counts[sigma.cycle_type()]++;
        for (const auto& [mu, count] : counts)
            CHECK(conjugacy_class_size(mu) == count);
    }
}

TEST_CASE("group enumeration", "[symgroup]") {
    CHECK(enumerate_group(1).size() == 1);
    CHECK(enumerate_group(3).size() == 6);
    CHECK(enumerate_group(8).size() == 40320);

    const auto g3 = enumerate_group(3);
    CHECK(std::set<Permutation>(g3.begin(), g3.end()).size() == 6);
    CHECK(std::is_sorted(g3.begin(), g3.end()));

    CHECK_THROWS_AS(enumerate_group(group_cap() + 1), std::length_error);
}

TEST_CASE("multiindex action", "[symgroup]") {
    const MultiIndex mi = {5, 7};
    CHECK(act_on_multiindex(Permutation::identity(2), mi) == mi);
    CHECK(act_on_multiindex(Permutation::from_one_based({2, 1}), mi) ==
          MultiIndex{7, 5});
    CHECK_THROWS_AS(act_on_multiindex(Permutation::identity(3), mi),
                    std::invalid_argument);

    // Left-action law act(sigma o tau, i) = act(sigma, act(tau, i)).
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> value(1, 4);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            const Permutation sigma = random_permutation(n, rng);
            const Permutation tau = random_permutation(n, rng);
            MultiIndex i(n);
            for (auto& v : i) v = value(rng);
            CHECK(act_on_multiindex(sigma.compose(tau), i) ==
                  act_on_multiindex(sigma, act_on_multiindex(tau, i)));
        }
}

TEST_CASE("matching permutations", "[symgroup]") {
    CHECK(matching_permutations({1, 2, 3}, {1, 2, 3}) ==
          std::vector<Permutation>{Permutation::identity(3)});

    const auto stab11 = matching_permutations({1, 1}, {1, 1});
    const auto s2 = enumerate_group(2);
    CHECK(stab11.size() == 2);
    CHECK(std::set<Permutation>(stab11.begin(), stab11.end()) ==
          std::set<Permutation>(s2.begin(), s2.end()));

    CHECK(matching_permutations({1, 2}, {3, 4}).empty());
    CHECK(matching_permutations({1, 1}, {1, 2}).empty());

    // Stabilizer case: matching_permutations(i, i) equals the brute-force
    // stabilizer {sigma : sigma(i) = i} filtered from the whole group.
    std::mt19937 stab_rng(53);
    std::uniform_int_distribution<int> stab_value(1, 3);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 8; ++trial) {
            MultiIndex i(n);
            for (auto& v : i) v = stab_value(stab_rng);
            std::vector<Permutation> stab = matching_permutations(i, i);
            std::sort(stab.begin(), stab.end());
            std::vector<Permutation> brute;
            for (const auto& sigma : enumerate_group(n))
                if (act_on_multiindex(sigma, i) == i) brute.push_back(sigma);
            CHECK(stab == brute);
        }

    // Every yielded sigma satisfies sigma(from) == to; counts are prod m_v!.
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> value(1, 3);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            MultiIndex from(n);
            for (auto& v : from) v = value(rng);
            MultiIndex to = act_on_multiindex(random_permutation(n, rng), from);

            const auto matches = matching_permutations(from, to);
            long expected = 1;
            std::map<int, int> mult;
            for (int v : from) mult[v]++;
            for (const auto& [v, m] : mult)
                expected *= factorial(m).get_si();
            CHECK(static_cast<long>(matches.size()) == expected);
            for (const auto& sigma : matches)
                CHECK(act_on_multiindex(sigma, from) == to);
            CHECK(std::set<Permutation>(matches.begin(), matches.end()).size() ==
                  matches.size());

            // Brute-force cross-check against filtering the whole group.
            std::vector<Permutation> brute;
            for (const auto& sigma : enumerate_group(n))
                if (act_on_multiindex(sigma, from) == to) brute.push_back(sigma);
            std::vector<Permutation> sorted = matches;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == brute);
        }
}
