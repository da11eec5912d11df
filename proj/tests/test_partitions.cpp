#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "domord/partitions.hpp"
#include "domord/rational.hpp"
#include "oracles.hpp"

using namespace domord;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Composition C(std::vector<int> v) { return Composition(std::move(v)); }
}  // namespace

TEST_CASE("rearrange_to_partition sorts non-increasing") {
    CHECK(rearrange_to_partition(C({0, 3, 1})) == P({3, 1, 0}));
    CHECK(rearrange_to_partition(C({2, 2})) == P({2, 2}));
    CHECK(rearrange_to_partition(C({1, 0, 4, 1})) == P({4, 1, 1, 0}));
    CHECK(rearrange_to_partition(C({})) == P({}));
}

TEST_CASE("rearrange preserves weight and part multiset") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> parts(rng() % 8);
        for (int& x : parts) x = static_cast<int>(rng() % 6);
        Composition c(parts);
        Partition p = rearrange_to_partition(c);
        CHECK(p.weight() == c.weight());
        std::vector<int> a = parts, b = p.parts();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("dominates basics") {
    CHECK(dominates(P({3, 1}), P({2, 2})));
    CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
    CHECK_FALSE(dominates(P({3, 1}), P({2, 1})));  // weights differ
    CHECK(dominates(P({4, 2, 1}), P({4, 2, 1})));
    CHECK(dominates(C({1, 3}), C({2, 2})));  // compositions rearranged first
    CHECK(dominates(P({}), P({})));
}

TEST_CASE("dominance is a partial order on each weight class") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<Partition> ps = enumerate_partitions(n);
        for (const Partition& a : ps) {
            CHECK(dominates(a, a));
            for (const Partition& b : ps) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const Partition& c : ps)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("covers examples") {
    CHECK(covers(P({3, 1}), P({2, 2})));
    CHECK_FALSE(covers(P({4, 0}), P({2, 2})));  // (3,1) lies strictly between
    CHECK_FALSE(covers(P({3, 1}), P({3, 1})));
    CHECK(covers(P({2, 2}), P({2, 1, 1})));
}

TEST_CASE("covers agrees with brute-force interval check up to n=8") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Partition> ps = enumerate_partitions(n);
        for (const Partition& a : ps)
            for (const Partition& b : ps)
                CHECK(covers(a, b) == oracles::covers_bruteforce(a, b));
    }
}

TEST_CASE("dual examples and involution") {
    CHECK(dual(P({3, 1})) == P({2, 1, 1}));
    CHECK(dual(P({1, 1, 1})) == P({3}));
    CHECK(dual(P({})) == P({}));
    for (int n = 0; n <= 9; ++n)
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(dual(p) == oracles::dual_bruteforce(p));
            CHECK(dual(dual(p)) == p);
        }
}

TEST_CASE("duality is a dominance anti-isomorphism up to n=10") {
    for (int n = 0; n <= 10; ++n) {
        std::vector<Partition> ps = enumerate_partitions(n);
        for (const Partition& a : ps)
            for (const Partition& b : ps)
                CHECK(dominates(a, b) == dominates(dual(b), dual(a)));
    }
}

TEST_CASE("enumerate_compositions") {
    std::vector<Composition> u22 = enumerate_compositions(2, 2);
    REQUIRE(u22.size() == 3);
    CHECK(u22[0] == C({0, 2}));
    CHECK(u22[1] == C({1, 1}));
    CHECK(u22[2] == C({2, 0}));

    CHECK(enumerate_compositions(0, 0).size() == 1);
    CHECK(enumerate_compositions(0, 1).empty());

    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
            std::vector<Composition> all = enumerate_compositions(m, n);
            Integer expected = m == 0 ? Integer(n == 0 ? 1 : 0)
                                      : binomial(static_cast<unsigned long>(n + m - 1),
                                                 static_cast<unsigned long>(m - 1));
            CHECK(Integer(static_cast<long>(all.size())) == expected);
            std::set<std::vector<int>> distinct;
            for (const Composition& c : all) {
                CHECK(c.weight() == n);
                CHECK(c.size() == static_cast<std::size_t>(m));
                distinct.insert(c.parts);
            }
            CHECK(distinct.size() == all.size());
        }
}

TEST_CASE("enumerate_partitions") {
    std::vector<Partition> p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == P({4}));
    CHECK(p4[1] == P({3, 1}));
    CHECK(p4[2] == P({2, 2}));
    CHECK(p4[3] == P({2, 1, 1}));
    CHECK(p4[4] == P({1, 1, 1, 1}));

    CHECK(enumerate_partitions(0).size() == 1);

    std::vector<Partition> p32 = enumerate_partitions(3, 2);
    REQUIRE(p32.size() == 2);
    CHECK(p32[0].parts() == std::vector<int>{3, 0});
    CHECK(p32[1].parts() == std::vector<int>{2, 1});

    // classical values p(1..10)
    std::vector<std::size_t> counts = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_partitions(n).size() == counts[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("fixed-length partitions match the composition filter") {
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 5; ++m) {
            std::set<std::vector<int>> via_comp;
            for (const Composition& c : enumerate_compositions(m, n)) {
                if (std::is_sorted(c.parts.begin(), c.parts.end(), std::greater<int>()))
                    via_comp.insert(c.parts);
            }
            std::set<std::vector<int>> direct;
            for (const Partition& p : enumerate_partitions(n, m)) direct.insert(p.parts());
            CHECK(via_comp == direct);
        }
}

TEST_CASE("concat") {
    CHECK(concat(C({2, 0}), C({1})) == C({2, 0, 1}));
    CHECK(concat(C({}), C({5, 1})) == C({5, 1}));
    CHECK(concat(C({1}), C({3, 3})) == C({1, 3, 3}));
    CHECK(concat(C({2, 0}), C({1})).weight() == 3);
}

TEST_CASE("partition equality ignores trailing zeros") {
    CHECK(P({3, 1, 0, 0}) == P({3, 1}));
    CHECK_FALSE(P({3, 1}) == P({3, 1, 1}));
    CHECK(C({3, 1, 0}) != C({3, 1}));  // compositions keep length
}

TEST_CASE("parsing literals") {
    CHECK(parse_partition("4,2") == P({4, 2}));
    CHECK(parse_partition("") == P({}));
    CHECK(parse_composition("0,3,1") == C({0, 3, 1}));
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("1,,2"), std::invalid_argument);
    CHECK(format(P({4, 2})) == "4,2");
    CHECK(format(C({})) == "");
}
