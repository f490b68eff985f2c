#include <catch2/catch.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "wgcalc/partitions.hpp"

using namespace wgcalc;

namespace {

// Independent oracle: all 2^(n-1) compositions of n, filtered to the weakly
// decreasing ones.
void all_compositions(int remaining, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        cur.push_back(p);
        all_compositions(remaining - p, cur, out);
        cur.pop_back();
    }
}

std::set<std::vector<int>> partitions_by_brute_force(int n) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    all_compositions(n, cur, comps);
    std::set<std::vector<int>> out;
    for (const auto& c : comps)
        if (std::is_sorted(c.rbegin(), c.rend())) out.insert(c);
    if (n == 0) out.insert({});
    return out;
}

// Independent oracle for dim_specht: enumerate all fillings of the diagram with
// 1..n (cells in row-major order, values permuted), keep the ones whose rows
// and columns increase.
long count_standard_tableaux(const Partition& lambda) {
    const int n = lambda.weight();
    std::vector<std::pair<int, int>> cells;  // (row, col), 0-based
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) cells.emplace_back(i, j);

    std::vector<int> labels(n);
    for (int k = 0; k < n; ++k) labels[k] = k + 1;

    long count = 0;
    do {
        std::vector<std::vector<int>> grid(lambda.length(),
                                           std::vector<int>(lambda.length() ? lambda.parts()[0] : 0, 0));
        for (int k = 0; k < n; ++k) grid[cells[k].first][cells[k].second] = labels[k];
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            const auto [i, j] = cells[k];
            if (j + 1 <= lambda.parts()[i] - 1 && grid[i][j] > grid[i][j + 1]) ok = false;
            if (i + 1 <= lambda.length() - 1 && j < lambda.parts()[i + 1] &&
                grid[i][j] > grid[i + 1][j])
                ok = false;
        }
        if (ok) ++count;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return n == 0 ? 1 : count;
}

}  // namespace

TEST_CASE("partition construction and invariants", "[partitions]") {
    CHECK(Partition().weight() == 0);
    CHECK(Partition().length() == 0);
    CHECK(Partition({3, 1}).weight() == 4);
    CHECK(Partition({3, 1}).length() == 2);
    CHECK(Partition({3, 1}).str() == "(3,1)");
    CHECK(Partition().str() == "()");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::parse("(3,1)") == Partition({3, 1}));
    CHECK(Partition::parse("3,1") == Partition({3, 1}));
    CHECK(Partition::parse("()") == Partition());
}

TEST_CASE("enumerate_partitions order and contents", "[partitions]") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});

    const auto p4 = enumerate_partitions(4);
    const std::vector<Partition> expected4 = {
        Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
        Partition({1, 1, 1, 1})};
    CHECK(p4 == expected4);

    CHECK(enumerate_partitions(8).size() == 22);
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition());

    const auto p3len2 = enumerate_partitions(3, 2);
    CHECK(p3len2 == std::vector<Partition>{Partition({3}), Partition({2, 1})});

    // Agreement with the brute-force composition filter, including the order:
    // decreasing lexicographic.
    for (int n = 0; n <= 8; ++n) {
        const auto fast = enumerate_partitions(n);
        const auto brute = partitions_by_brute_force(n);
        REQUIRE(fast.size() == brute.size());
        for (std::size_t k = 0; k < fast.size(); ++k) {
            CHECK(brute.count(fast[k].parts()) == 1);
            if (k > 0)
                CHECK(std::lexicographical_compare(fast[k].parts().begin(),
                                                   fast[k].parts().end(),
                                                   fast[k - 1].parts().begin(),
                                                   fast[k - 1].parts().end()));
        }
    }
}

TEST_CASE("hook lengths", "[partitions]") {
    CHECK(hook_length(Partition({1}), {1, 1}) == 1);
    CHECK(hook_length(Partition({4, 3, 2, 2, 1}), {2, 2}) == 4);
    for (int n = 1; n <= 6; ++n) CHECK(hook_length(Partition({n}), {1, 1}) == n);
    CHECK_THROWS_AS(hook_length(Partition({2, 1}), {2, 2}), std::out_of_range);
    CHECK_THROWS_AS(hook_length(Partition({2, 1}), {0, 1}), std::out_of_range);
}

TEST_CASE("cell contents", "[partitions]") {
    CHECK(content({1, 1}) == 0);
    CHECK(content({1, 3}) == 2);
    CHECK(content({3, 1}) == -2);
}

TEST_CASE("dim_specht examples and tableau oracle", "[partitions]") {
    for (int n = 1; n <= 6; ++n) CHECK(dim_specht(Partition({n})) == 1);
    CHECK(dim_specht(Partition({2, 1})) == 2);
    CHECK(dim_specht(Partition({1, 1, 1})) == 1);
    CHECK(dim_specht(Partition()) == 1);

    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            CHECK(dim_specht(lambda) == count_standard_tableaux(lambda));
}

TEST_CASE("dim_weyl examples", "[partitions]") {
    for (int d = 1; d <= 6; ++d) CHECK(dim_weyl(Partition({1}), d) == d);
    for (int d = 1; d <= 5; ++d)
        for (int n = 1; n <= 5; ++n)
            CHECK(dim_weyl(Partition({n}), d) == binomial(d + n - 1, n));
    CHECK(dim_weyl(Partition({1, 1}), 1) == 0);
}

TEST_CASE("content product examples", "[partitions]") {
    for (int d = 1; d <= 6; ++d) CHECK(content_product(Partition({1}), d) == d);
    CHECK(content_product(Partition({2}), 2) == 6);
    CHECK(content_product(Partition({1, 1}), 1) == 0);
    CHECK(content_product(Partition(), 3) == 1);
}

TEST_CASE("regular representation dimension count", "[partitions]") {
    for (int n = 1; n <= 8; ++n) {
        Integer total(0);
        for (const auto& lambda : enumerate_partitions(n)) {
            const Integer dim = dim_specht(lambda);
            total += dim * dim;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("weyl dimension vs content product", "[partitions]") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (int d = 1; d <= 8; ++d) {
                const Integer c = content_product(lambda, d);
                const Integer dw = dim_weyl(lambda, d);
                CHECK(dw * factorial(n) == dim_specht(lambda) * c);
                const bool fits = lambda.length() <= d;
                CHECK((c != 0) == fits);
                CHECK((dw > 0) == fits);
            }
}
