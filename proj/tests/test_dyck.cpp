#include "dha/dyck.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dha;

namespace {

DyckPath path(std::initializer_list<int> d) { return DyckPath(std::vector<int>(d)); }

QtLaurent c3_expected() {
    // t^3 + t^2 q + t q + t q^2 + q^3
    QtLaurent p;
    p.add_term(0, 3, 1);
    p.add_term(1, 2, 1);
    p.add_term(1, 1, 1);
    p.add_term(2, 1, 1);
    p.add_term(3, 0, 1);
    return p;
}

} // namespace

TEST_CASE("path validation") {
    CHECK_THROWS_AS(path({1}), std::invalid_argument);
    CHECK_THROWS_AS(path({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(path({0, 1, 0}), std::invalid_argument);
    CHECK_NOTHROW(path({0, 0, 1, 1, 2, 3, 3, 5}));
}

TEST_CASE("enumeration") {
    auto p1 = enumerate_paths(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].d() == std::vector<int>{0});

    CHECK(enumerate_paths(3).size() == 5);
    CHECK(enumerate_paths(8).size() == 1430);

    // lexicographic order, all distinct
    auto p5 = enumerate_paths(5);
    for (size_t i = 1; i < p5.size(); ++i) CHECK(p5[i - 1].d() < p5[i].d());

    for (int n = 1; n <= 9; ++n)
        CHECK(Int(enumerate_paths(n).size()) == catalan_number(n));
}

TEST_CASE("area") {
    CHECK(area(path({0, 0, 1, 1, 2, 3, 3, 5})) == 13);
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> diag, zeros(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) diag.push_back(i);
        CHECK(area(DyckPath(diag)) == 0);
        CHECK(area(DyckPath(zeros)) == n * (n - 1) / 2);
    }
}

TEST_CASE("bounce") {
    CHECK(bounce(path({0, 0, 1, 1, 2, 3, 3, 5})) == 9); // diagonal labels 3 + 6
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> diag, zeros(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) diag.push_back(i);
        CHECK(bounce(DyckPath(zeros)) == 0);
        CHECK(bounce(DyckPath(diag)) == n * (n - 1) / 2); // hits every label
    }
}

TEST_CASE("dinv") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> diag, zeros(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) diag.push_back(i);
        CHECK(dinv(DyckPath(diag)) == n * (n - 1) / 2); // all u_i = 0, every pair ties
        CHECK(dinv(DyckPath(zeros)) == 0);               // u strictly increasing
    }
    CHECK(dinv(path({0, 0, 1})) == 1);

    // the area-dinv generating polynomial over the 5 paths reproduces c_3
    QtLaurent total;
    for (const auto& D : enumerate_paths(3)) total.add_term(dinv(D), area(D), 1);
    CHECK(total == c3_expected());
}

TEST_CASE("copartition") {
    CHECK(copartition(path({0, 0, 0, 1, 2, 4})) == Partition({4, 2, 1}));
    CHECK(copartition(path({0, 0, 0})) == Partition());
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> diag;
        for (int i = 0; i < n; ++i) diag.push_back(i);
        std::vector<int> staircase;
        for (int i = n - 1; i >= 1; --i) staircase.push_back(i);
        CHECK(copartition(DyckPath(diag)) == Partition(staircase));
    }

    // area + |copartition| = n(n-1)/2, and path_from_copartition inverts
    for (int n = 1; n <= 7; ++n)
        for (const auto& D : enumerate_paths(n)) {
            Partition co = copartition(D);
            CHECK(area(D) + co.sum() == n * (n - 1) / 2);
            CHECK(path_from_copartition(n, co) == D);
        }
}

TEST_CASE("qt-Catalan polynomials") {
    CHECK(qt_catalan(1) == QtLaurent::one());
    CHECK(qt_catalan(2) == QtLaurent::q() + QtLaurent::t());
    CHECK(qt_catalan(3, StatPair::AreaBounce) == c3_expected());
    CHECK(qt_catalan(3, StatPair::AreaDinv) == c3_expected());
}

TEST_CASE("statistic pair equality and q,t symmetry") {
    for (int n = 1; n <= 6; ++n) {
        QtLaurent ab = qt_catalan(n, StatPair::AreaBounce);
        CHECK(ab == qt_catalan(n, StatPair::AreaDinv));
        CHECK(ab == ab.swap_qt());
    }
}

TEST_CASE("specialization matches the q-Catalan polynomial") {
    for (int n = 1; n <= 6; ++n) {
        QtLaurent lhs = QtLaurent::q(n * (n - 1) / 2) *
                        specialize_t_to_q_inverse(qt_catalan(n));
        CHECK(lhs == q_catalan_polynomial(n));
    }
}

TEST_CASE("coefficient grid") {
    auto g3 = coefficient_grid(3);
    std::map<std::pair<int, int>, long> expected{
        {{3, 0}, 1}, {{2, 1}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}};
    CHECK(g3 == expected);

    auto g5 = coefficient_grid(5);
    CHECK(g5[{5, 2}] == 1);
    CHECK(g5[{4, 4}] == 2);
}

TEST_CASE("path statistics bundle") {
    PathStats s = path_stats(path({0, 0, 1, 1, 2, 3, 3, 5}));
    CHECK(s.area == 13);
    CHECK(s.bounce == 9);
    CHECK(s.u == std::vector<int>{0, 1, 1, 2, 2, 2, 3, 2});
}
