#include "dha/partition.hpp"
#include "dha/dyck.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dha;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::vector<Partition> all_partitions_up_to(int max_n) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_n; ++n)
        for (auto& mu : partitions_of(n)) out.push_back(mu);
    return out;
}

} // namespace

TEST_CASE("partition construction") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK(Partition().sum() == 0);
    CHECK(P({4, 2, 1}).sum() == 7);
    CHECK(P({4, 2, 1}).length() == 3);
    CHECK(P({4, 2, 1}).part(5) == 0);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (const auto& mu : all_partitions_up_to(8)) CHECK(conjugate(conjugate(mu)) == mu);
}

TEST_CASE("cell statistics") {
    auto single = cell_stats(P({1}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].arm == 0);
    CHECK(single[0].leg == 0);
    CHECK(single[0].coarm == 0);
    CHECK(single[0].coleg == 0);

    auto cells21 = cell_stats(P({2, 1}));
    REQUIRE(cells21.size() == 3);
    CHECK(cells21[0].arm == 1);  // cell (0,0)
    CHECK(cells21[0].leg == 1);

    auto cells421 = cell_stats(P({4, 2, 1}));
    REQUIRE(cells421.size() == 7);
    CHECK(cells421[0].arm == 3);
    CHECK(cells421[0].leg == 2);

    // arm + coarm + 1 = row length, for every cell of every small partition
    for (const auto& mu : all_partitions_up_to(8))
        for (const auto& c : cell_stats(mu)) {
            CHECK(c.arm + c.coarm + 1 == mu.part(c.row));
            CHECK(c.arm >= 0);
            CHECK(c.leg >= 0);
        }
}

TEST_CASE("coleg and coarm sums give n(mu) and n(mu')") {
    for (int n = 0; n <= 10; ++n)
        for (const auto& mu : partitions_of(n)) {
            long coleg_sum = 0, coarm_sum = 0;
            for (const auto& c : cell_stats(mu)) {
                coleg_sum += c.coleg;
                coarm_sum += c.coarm;
            }
            CHECK(coleg_sum == n_stat(mu));
            CHECK(coarm_sum == n_stat(conjugate(mu)));
        }
}

TEST_CASE("hook statistics") {
    SECTION("column shape [1,1,1]") {
        HookStats h = hook_stats(P({1, 1, 1}));
        CHECK(h.n_mu == 3);
        CHECK(h.n_mu_conj == 0);
        CHECK(h.T == QtLaurent::t().pow(3));
    }

    SECTION("[2,1]") {
        HookStats h = hook_stats(P({2, 1}));
        QtLaurent one = QtLaurent::one(), q = QtLaurent::q(), t = QtLaurent::t();
        CHECK(h.T == q * t);
        CHECK(h.B == one + q + t);
        CHECK(h.Pi == (one - q) * (one - t));
        QtLaurent w_expected = (q - t.pow(2)) * (t - q.pow(2)) * (one - t).pow(2) * (one - q).pow(2);
        CHECK(h.w == w_expected);
    }

    SECTION("[1]") {
        HookStats h = hook_stats(P({1}));
        CHECK(h.B == QtLaurent::one());
        CHECK(h.Pi == QtLaurent::one());
        CHECK(h.w == h.M);
    }

    SECTION("empty partition rejected") {
        CHECK_THROWS_AS(hook_stats(Partition()), std::invalid_argument);
    }

    SECTION("B and T are symmetric under conjugation with q and t swapped") {
        for (int n = 1; n <= 8; ++n)
            for (const auto& mu : partitions_of(n)) {
                HookStats h = hook_stats(mu);
                HookStats hc = hook_stats(conjugate(mu));
                CHECK(h.B == hc.B.swap_qt());
                CHECK(h.T == hc.T.swap_qt());
            }
    }

    SECTION("T is a single monomial, B has |mu| unit terms") {
        for (int n = 1; n <= 8; ++n)
            for (const auto& mu : partitions_of(n)) {
                HookStats h = hook_stats(mu);
                CHECK(h.T.is_monomial());
                CHECK(h.B.term_count() == static_cast<size_t>(n));
                for (const auto& [k, c] : h.B.terms()) CHECK(c == 1);
                CHECK_FALSE(h.w.is_zero());
            }
    }
}

TEST_CASE("z_mu") {
    CHECK(z_mu(P({1, 1, 1})) == 6);
    CHECK(z_mu(P({2, 1})) == 2);
    CHECK(z_mu(P({3})) == 3);
    CHECK(z_mu(Partition()) == 1);
    // sum over mu of n!/z_mu counts all permutations
    for (int n = 1; n <= 8; ++n) {
        Int total = 0;
        for (const auto& mu : partitions_of(n)) total += factorial(n) / z_mu(mu);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("partition enumeration") {
    PartitionFilter len2;
    len2.exact_length = 2;
    auto of5 = partitions_of(5, len2);
    REQUIRE(of5.size() == 2);
    CHECK(of5[0] == P({4, 1}));
    CHECK(of5[1] == P({3, 2}));

    auto of0 = partitions_of(0);
    REQUIRE(of0.size() == 1);
    CHECK(of0[0] == Partition());

    PartitionFilter stair6;
    stair6.staircase_m = 6;
    auto of7 = partitions_of(7, stair6);
    CHECK(std::find(of7.begin(), of7.end(), P({4, 2, 1})) != of7.end());
    for (const auto& mu : of7)
        for (int i = 0; i < mu.length(); ++i) CHECK(mu.part(i) <= 5 - i);

    // emitted in decreasing lexicographic order, no duplicates
    for (int n = 0; n <= 9; ++n) {
        auto all = partitions_of(n);
        for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts() > all[i].parts());
    }

    PartitionFilter maxp;
    maxp.max_part = 3;
    for (const auto& mu : partitions_of(9, maxp)) CHECK(mu.part(0) <= 3);
}

TEST_CASE("staircase partitions are counted by Catalan numbers") {
    for (int n = 1; n <= 8; ++n) {
        PartitionFilter f;
        f.staircase_m = n;
        long count = 0;
        for (int k = 0; k <= n * (n - 1) / 2; ++k)
            count += static_cast<long>(partitions_of(k, f).size());
        CHECK(count == static_cast<long>(enumerate_paths(n).size()));
    }
}
