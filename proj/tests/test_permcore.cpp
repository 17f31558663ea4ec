#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cycdes/permcore.hpp"
#include "oracles.hpp"

using namespace cycdes;

TEST_CASE("descent sets of the running example") {
    Permutation pi = Permutation::parse("21453");
    CHECK(des_set(pi) == Mask(4, {1, 4}));
    CHECK(cdes_set(pi) == Mask(5, {1, 4, 5}));
}

TEST_CASE("descent sets of monotone words") {
    for (int n = 2; n <= 8; ++n) {
        Permutation id = Permutation::identity(n);
        CHECK(des_set(id).empty());
        CHECK(cdes_set(id) == Mask(n, {n}));
        std::vector<int> rev(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) rev[static_cast<std::size_t>(i)] = n - i;
        Permutation dec{rev};
        CHECK(des_set(dec) == Mask::full(n - 1));
        CHECK(cdes_set(dec) == Mask::from_bits(n, Mask::full(n - 1).bits()));
    }
}

TEST_CASE("cdes rejects a single letter") {
    CHECK_THROWS_AS(cdes_set(Permutation::identity(1)), std::domain_error);
}

TEST_CASE("group operations") {
    CHECK(cn_power(4, 1) * cn_power(4, 3) == Permutation::identity(4));
    CHECK(cn_power(4, 1) == Permutation::parse("2341"));
    CHECK(cn_power(4, -1) == cn_power(4, 3));

    // right multiplication by c_n^j shifts positions, left multiplication
    // shifts values; checked against direct composition over all of S_4
    oracles::for_each_perm(4, [&](const Permutation& pi) {
        for (int j = 0; j < 4; ++j) {
            Permutation right = pi * cn_power(4, j);
            Permutation left = cn_power(4, j) * pi;
            for (int i = 1; i <= 4; ++i) {
                int shifted_pos = (i + j - 1) % 4 + 1;
                CHECK(right(i) == pi(shifted_pos));
                int shifted_val = (pi(i) + j - 1) % 4 + 1;
                CHECK(left(i) == shifted_val);
            }
        }
    });

    CHECK_THROWS_AS(Permutation::identity(3) * Permutation::identity(4), std::invalid_argument);
    CHECK(Permutation::parse("21453").inverse() == Permutation::parse("21534"));
}

TEST_CASE("mask shifting") {
    CHECK(shift_mask(Mask(5, {1, 4}), 1) == Mask(5, {2, 5}));
    CHECK(shift_mask(Mask(5, {1, 4, 5}), 1) == Mask(5, {1, 2, 5}));
    for (int n = 1; n <= 10; ++n) {
        Mask d = Mask::from_bits(n, 0b1011 & ((1u << n) - 1));
        CHECK(shift_mask(d, n) == d);
        CHECK(shift_mask(shift_mask(d, 3), -3) == d);
    }
}

TEST_CASE("cyclic rotation shifts the cyclic descent set") {
    for (int n = 2; n <= 8; ++n) {
        oracles::for_each_perm(n, [&](const Permutation& pi) {
            CHECK(cdes_set(pi * cn_power(n, -1)) == shift_mask(cdes_set(pi), 1));
        });
    }
}

TEST_CASE("non-Escher property") {
    for (int n = 2; n <= 8; ++n) {
        oracles::for_each_perm(n, [&](const Permutation& pi) {
            Mask cd = cdes_set(pi);
            CHECK(!cd.empty());
            CHECK(cd.count() < n);
        });
    }
}

TEST_CASE("subset and composition are mutually inverse") {
    Mask j(6, {2, 5});
    Composition gamma = subset_to_composition(j, 7);
    CHECK(gamma.parts == std::vector<int>{2, 3, 2});
    CHECK(composition_to_subset(gamma) == j);

    CHECK(subset_to_composition(Mask(5), 6).parts == std::vector<int>{6});
    CHECK(subset_to_composition(Mask::full(5), 6).parts == std::vector<int>(6, 1));

    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t lim = std::uint64_t{1} << (n - 1);
        for (std::uint64_t bits = 0; bits < lim; ++bits) {
            Mask sub = Mask::from_bits(n - 1, bits);
            Composition g = subset_to_composition(sub, n);
            CHECK(g.total() == n);
            CHECK(g.size() == sub.count() + 1);
            CHECK(composition_to_subset(g) == sub);
        }
    }
}

TEST_CASE("textual formats") {
    CHECK(Permutation::parse("21453").str() == "21453");
    Permutation big = cn_power(12, 5);
    CHECK(Permutation::parse(big.str()) == big);
    CHECK(big.str().find(',') != std::string::npos);

    CHECK(Mask::parse("{1,4,5}", 5) == Mask(5, {1, 4, 5}));
    CHECK(Mask::parse("{}", 5).empty());
    CHECK(Mask(5, {1, 4, 5}).str() == "{1,4,5}");
    CHECK_THROWS_AS(Mask::parse("{1,9}", 5), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("120"), std::invalid_argument);
    CHECK(Composition{{2, 3, 2}}.str() == "(2,3,2)");
}

TEST_CASE("invalid words rejected") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
}
