#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "domord/sequences.hpp"
#include "domord/tn.hpp"
#include "oracles.hpp"

using namespace domord;

namespace {

SequenceView S(const std::string& lit, bool finite = true) {
    return parse_sequence(lit, finite);
}

SequenceView random_nonneg_seq(std::mt19937& rng, std::size_t max_len) {
    std::vector<Rational> c(1 + rng() % max_len);
    for (Rational& x : c) x = rational(static_cast<long>(rng() % 5), 1 + rng() % 3);
    return SequenceView(std::move(c), true);
}

SequenceView random_signed_seq(std::mt19937& rng, std::size_t len) {
    std::vector<Rational> c(len);
    for (Rational& x : c)
        x = rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4);
    return SequenceView(std::move(c), true);
}

// positive log-concave prefix: p_0 > 0 and non-increasing consecutive ratios
SequenceView random_log_concave(std::mt19937& rng, std::size_t len) {
    std::vector<Rational> ratios(len > 0 ? len - 1 : 0);
    for (Rational& r : ratios) r = rational(1 + rng() % 6, 1 + rng() % 6);
    std::sort(ratios.begin(), ratios.end(), std::greater<Rational>());
    std::vector<Rational> c;
    c.push_back(rational(1 + rng() % 4, 1 + rng() % 3));
    for (const Rational& r : ratios) c.push_back(c.back() * r);
    return SequenceView(std::move(c), true);
}

}  // namespace

TEST_CASE("toeplitz_entry") {
    SequenceView p = S("1,2,3");
    CHECK(toeplitz_entry(p, 1, 2) == 2);
    CHECK(toeplitz_entry(p, 3, 0) == 0);  // below the band
    CHECK(toeplitz_entry(S("1,1"), 0, 5) == 0);
    SequenceView inf = S("1,1", /*finite=*/false);
    CHECK(toeplitz_entry(inf, 0, 1) == 1);
    CHECK_THROWS_AS(toeplitz_entry(inf, 0, 5), insufficient_coefficients);
}

TEST_CASE("power_entry") {
    SequenceView p = S("1,1");
    CHECK(power_entry(p, 0, 0) == 1);
    CHECK(power_entry(p, 0, 3) == 0);
    CHECK(power_entry(p, 2, 1) == 2);
    CHECK(power_entry(S("1/3,1/3,0,1/3"), 4, 6) == rational(10, 81));
    CHECK_THROWS_AS(power_entry(S("1,1", false), 2, 7), insufficient_coefficients);
}

TEST_CASE("PowerView matches power_entry") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        SequenceView p = random_signed_seq(rng, 5);
        PowerView v(p, 5, 8);
        for (long i = 0; i < 5; ++i)
            for (long j = 0; j < 8; ++j) CHECK(v.entry(i, j) == power_entry(p, i, j));
    }
}

TEST_CASE("minor examples") {
    SequenceView ones = S("1,1,1");
    ToeplitzView t(ones);
    CHECK(minor_det(t, MinorIndex({0}, {2})) == 1);
    CHECK(minor_det(t, MinorIndex({0, 1}, {0, 1})) == 1);

    SequenceView gap = S("1,0,0,1,1");
    ToeplitzView tg(gap);
    CHECK(minor_det(tg, MinorIndex({0, 3}, {3, 4})) == -1);
}

TEST_CASE("minor_det agrees with permanent-style expansion") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        SequenceView p = random_signed_seq(rng, 9);
        ToeplitzView t(p);
        int order = 1 + rng() % 4;
        std::vector<int> rows, cols;
        int rcur = rng() % 3, ccur = rng() % 3;
        for (int i = 0; i < order; ++i) {
            rows.push_back(rcur);
            cols.push_back(ccur);
            rcur += 1 + rng() % 3;
            ccur += 1 + rng() % 3;
        }
        MinorIndex idx(rows, cols);
        CHECK(minor_det(t, idx) == oracles::det_bruteforce(t, rows, cols));
    }
}

TEST_CASE("toeplitz minors are shift invariant") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        SequenceView p = random_signed_seq(rng, 8);
        ToeplitzView t(p);
        std::vector<int> rows = {static_cast<int>(rng() % 3),
                                 static_cast<int>(3 + rng() % 3)};
        std::vector<int> cols = {static_cast<int>(rng() % 3),
                                 static_cast<int>(3 + rng() % 3)};
        int shift = static_cast<int>(rng() % 4);
        std::vector<int> rows2 = rows, cols2 = cols;
        for (int& r : rows2) r += shift;
        for (int& c : cols2) c += shift;
        CHECK(minor_det(t, MinorIndex(rows, cols)) ==
              minor_det(t, MinorIndex(rows2, cols2)));
    }
}

TEST_CASE("check_tn") {
    TNReport ok = check_tn(S("1/4,1/2,1/4"), MatrixKind::toeplitz, 2, 6, 10);
    CHECK(ok.holds);

    TNReport bad = check_tn(S("1,0,0,1,1"), MatrixKind::toeplitz, 2, 6, 10);
    REQUIRE_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->rows == std::vector<int>{0, 1});
    CHECK(bad.witness->cols == std::vector<int>{1, 3});
    CHECK(*bad.witness_value == -1);
    // witness re-evaluates to the reported value
    ToeplitzView t(S("1,0,0,1,1"));
    CHECK(minor_det(t, *bad.witness) == *bad.witness_value);

    CHECK(check_tn(S("1"), MatrixKind::toeplitz, 1, 1, 1).holds);
}

TEST_CASE("tn2_via_char") {
    CHECK(tn2_via_char(S("1,1,1,1,1"), 4).holds);

    TNReport neg = tn2_via_char(S("1,-2,4,-8"), 3);
    REQUIRE_FALSE(neg.holds);
    CHECK(neg.witness->rows == std::vector<int>{0});
    CHECK(neg.witness->cols == std::vector<int>{1});
    CHECK(*neg.witness_value == -2);

    TNReport gap = tn2_via_char(S("1,0,0,1,1"), 4);
    REQUIRE_FALSE(gap.holds);
    // quadruple (a,b,c,d) = (3,2,1,0), reported as minor {0,1} x {1,3}
    CHECK(gap.witness->rows == std::vector<int>{0, 1});
    CHECK(gap.witness->cols == std::vector<int>{1, 3});
    CHECK(*gap.witness_value == -1);
}

TEST_CASE("shape predicates") {
    ShapeReport a = shape(S("2,3,5,9,17"));
    CHECK(a.unimodal);
    CHECK_FALSE(a.log_concave);

    ShapeReport b = shape(S("1,0,0,1,1"));
    CHECK(b.log_concave);
    CHECK_FALSE(b.unimodal);

    ShapeReport c = shape(S("1/4,1/2,1/4"));
    CHECK(c.strictly_log_concave);
    CHECK(c.log_concave);
    CHECK(c.unimodal);
    CHECK_FALSE(c.prefix_only);

    ShapeReport d = shape(S("1,2,3", /*finite=*/false));
    CHECK(d.prefix_only);
    CHECK(d.unimodal);

    // zero tail matters: an increasing finite-support sequence is unimodal,
    // but an interior dip against the tail is not
    CHECK(shape(S("0,1")).unimodal);
    CHECK_FALSE(shape(S("1,0,2")).unimodal);
}

TEST_CASE("char_iii_check") {
    CHECK(char_iii_check(S("1/4,1/2,1/4"), 3, 2).holds);

    TNReport neg = char_iii_check(S("1,-2,4"), 2, 2);
    REQUIRE_FALSE(neg.holds);
    CHECK(neg.witness->cols == std::vector<int>{1});

    TNReport gap = char_iii_check(S("1,0,0,1,1"), 2, 4);
    REQUIRE_FALSE(gap.holds);
    REQUIRE(gap.pair_witness.has_value());
    CHECK(dominates(gap.pair_witness->lhs, gap.pair_witness->rhs));
    CHECK(gap.pair_witness->p_lhs > gap.pair_witness->p_rhs);
    REQUIRE(gap.witness.has_value());
    ToeplitzView t(S("1,0,0,1,1"));
    CHECK(minor_det(t, *gap.witness) == *gap.witness_value);
}

TEST_CASE("Lemma 2.1 equivalences on a random corpus") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        SequenceView p = random_nonneg_seq(rng, 6);
        int s = static_cast<int>(p.prefix_length()) - 1;
        bool via_char = tn2_via_char(p, s).holds;
        auto [rows, cols] = complete_tn2_window(p);
        bool via_minors = check_tn(p, MatrixKind::toeplitz, 2, rows, cols).holds;
        bool via_products = char_iii_check(p, 4, s).holds;
        CHECK(via_char == via_minors);
        CHECK(via_char == via_products);
    }
}

TEST_CASE("Lemma 2.3 implications on random corpora") {
    std::mt19937 rng(59);
    // (iv): positive log-concave prefixes are TN2
    for (int trial = 0; trial < 40; ++trial) {
        SequenceView p = random_log_concave(rng, 1 + rng() % 7);
        REQUIRE(shape(p).log_concave);
        CHECK(tn2_via_char(p, static_cast<int>(p.prefix_length()) - 1).holds);
    }
    // (i) and (ii): TN2 implies log-concave and unimodal
    for (int trial = 0; trial < 60; ++trial) {
        SequenceView p = random_nonneg_seq(rng, 6);
        if (tn2_via_char(p, static_cast<int>(p.prefix_length()) - 1).holds) {
            ShapeReport sh = shape(p);
            CHECK(sh.log_concave);
            CHECK(sh.unimodal);
        }
    }
}

TEST_CASE("transfer identity examples") {
    // order 1 telescopes to the convolution definition
    std::mt19937 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        SequenceView p = random_signed_seq(rng, 6);
        int A = 1 + static_cast<int>(rng() % 4);
        int j = static_cast<int>(rng() % 6);
        TransferIdentityReport rep = transfer_identity_check(p, MinorIndex({A}, {j}));
        CHECK(rep.equal);
        CHECK(rep.lhs == power_entry(p, A, j));
    }

    TransferIdentityReport small =
        transfer_identity_check(S("1,1"), MinorIndex({1, 2}, {0, 1}));
    CHECK(small.lhs == 1);
    CHECK(small.rhs == 1);
    CHECK(small.equal);

    CHECK_THROWS_AS(transfer_identity_check(S("1,1"), MinorIndex({0, 1}, {0, 1})),
                    std::invalid_argument);
}

TEST_CASE("transfer identity fuzzed") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        SequenceView p = random_signed_seq(rng, 9);
        int order = 1 + rng() % 3;
        std::vector<int> rows, cols;
        int rcur = 1 + static_cast<int>(rng() % 2), ccur = static_cast<int>(rng() % 2);
        for (int i = 0; i < order; ++i) {
            rows.push_back(rcur);
            cols.push_back(ccur);
            rcur += 1 + rng() % 3;
            ccur += 1 + rng() % 3;
        }
        CHECK(transfer_identity_check(p, MinorIndex(rows, cols)).equal);
    }
}

TEST_CASE("theorem: TN2 Toeplitz gives TN2 power matrix (window evidence)") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 8; ++trial) {
        SequenceView p = random_log_concave(rng, 1 + rng() % 8);
        REQUIRE(tn2_via_char(p, static_cast<int>(p.prefix_length()) - 1).holds);
        CHECK(check_tn(p, MatrixKind::power, 2, 7, 21).holds);
    }
}

TEST_CASE("theorem: binomial sequences pass k=3 windows on both matrices") {
    for (int m = 1; m <= 3; ++m) {
        SequenceView p = make_distribution("binomial:" + std::to_string(m) + ":1/2")
                             .sequence();
        CHECK(check_tn(p, MatrixKind::toeplitz, 3, 5, 15).holds);
        CHECK(check_tn(p, MatrixKind::power, 3, 5, 15).holds);
    }
}

TEST_CASE("windowed strict check distinguishes TP from TN") {
    // uniform on {0,1}: minors of order 2 include zero values, so TN2 holds
    // but TP2 does not
    SequenceView p = S("1/2,1/2");
    CHECK(check_tn(p, MatrixKind::toeplitz, 2, 4, 6).holds);
    TNReport strict = check_tn(p, MatrixKind::toeplitz, 2, 4, 6, /*strict=*/true);
    CHECK_FALSE(strict.holds);
}

TEST_CASE("insufficient coefficient errors") {
    SequenceView inf = S("1,1,1", /*finite=*/false);
    CHECK_THROWS_AS(check_tn(inf, MatrixKind::toeplitz, 2, 3, 10),
                    insufficient_coefficients);
    CHECK_THROWS_AS(PowerView(inf, 3, 10), insufficient_coefficients);
    CHECK_THROWS_AS(complete_tn2_window(inf), std::invalid_argument);
}

TEST_CASE("MinorIndex validation") {
    CHECK_THROWS_AS(MinorIndex({1, 1}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(MinorIndex({0, 1}, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MinorIndex({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MinorIndex({0, 1}, {0}), std::invalid_argument);
}
