#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cycdes/tableaux.hpp"
#include "oracles.hpp"

using namespace cycdes;

TEST_CASE("shape parsing and structure") {
    SkewShape fig1 = SkewShape::parse("5,4,2/1,1");
    CHECK(fig1.size() == 9);
    CHECK(fig1.is_connected());
    CHECK(!fig1.is_straight());

    SkewShape ds = SkewShape::parse("(1^2)+(2)");
    CHECK(ds == SkewShape::direct_sum({{1, 1}, {2}}));
    CHECK(ds.component_count() == 2);
    CHECK(ds.is_strip());
    CHECK(ds.str() == "(1^2)+(2)");

    CHECK(SkewShape::parse("nh(6,2)") == SkewShape::direct_sum({{3, 1, 1}, {1}}));
    CHECK(SkewShape::near_hook(6, 2).near_hook_arm() == 2);
    CHECK(!SkewShape::parse("(2,2)+(1)").near_hook_arm().has_value());
    CHECK(SkewShape::parse("4,2").is_straight());
    CHECK(SkewShape::parse("4,2").straight_partition() == Partition{4, 2});
    CHECK_THROWS_AS(SkewShape::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(SkewShape::parse("1,1/2"), std::invalid_argument);
}

TEST_CASE("shape strings round-trip through the parser") {
    for (const char* text : {"5,4,2/1,1", "(1^2)+(2)", "nh(6,2)", "4,2", "3,3/2", "(1)+(1)+(2)",
                             "(2,2)+(1)", "1^5", "(3,1^2)+(1)"}) {
        SkewShape shape = SkewShape::parse(text);
        CHECK(SkewShape::parse(shape.str()) == shape);
    }
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            SkewShape shape = SkewShape::from_partitions(lambda);
            CHECK(SkewShape::parse(shape.str()) == shape);
        }
}

TEST_CASE("ribbon detection") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k) {
            Partition hook{n - k};
            for (int i = 0; i < k; ++i) hook.push_back(1);
            CHECK(SkewShape::from_partitions(hook).is_connected_ribbon());
        }
    CHECK(!SkewShape::parse("2,2").is_connected_ribbon());
    CHECK(SkewShape::parse("2,2").has_2x2_block());
    CHECK(!SkewShape::parse("(1)+(3)").is_connected_ribbon());
    CHECK(SkewShape::parse("3,3/2").is_connected_ribbon());
    CHECK(!SkewShape::parse("3,3/1").is_connected_ribbon());
}

TEST_CASE("descent set of the skew tableau example") {
    // rows: 1 3 4 8 / 2 5 7 / 6 9 on the shape (5,4,2)/(1,1)
    SkewShape shape = SkewShape::parse("5,4,2/1,1");
    Tableau t(shape, {1, 3, 4, 8, 2, 5, 7, 6, 9});
    CHECK(des_set_syt(t) == Mask(8, {1, 4, 5, 8}));

    Tableau row(SkewShape::parse("5"), {1, 2, 3, 4, 5});
    CHECK(des_set_syt(row).empty());
    Tableau col(SkewShape::parse("1^5"), {1, 2, 3, 4, 5});
    CHECK(des_set_syt(col) == Mask::full(4));
}

TEST_CASE("enumeration counts against independent oracles") {
    CHECK(enumerate_syt(SkewShape::parse("6")).size() == 1);
    CHECK(enumerate_syt(SkewShape::parse("2,2")).size() == 2);
    CHECK(enumerate_syt(SkewShape::parse("(3,1^2)+(1)")).size() == 36);

    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            SkewShape shape = SkewShape::from_partitions(lambda);
            long long count = static_cast<long long>(enumerate_syt(shape).size());
            CHECK(count == oracles::hook_length_count(lambda));
            CHECK(count == oracles::syt_count_by_removal(shape));
        }

    for (const char* text : {"(1^2)+(2)", "(2)+(2)", "(1)+(2,2)", "3,3,2/1", "nh(6,2)", "(1)+(1)+(2)"}) {
        SkewShape shape = SkewShape::parse(text);
        CHECK(static_cast<long long>(enumerate_syt(shape).size()) ==
              oracles::syt_count_by_removal(shape));
    }
}

TEST_CASE("strip cyclic descents reproduce the worked quadruples") {
    SkewShape vert = SkewShape::parse("(1^2)+(2)");
    Tableau t(vert, {3, 4, 1, 2});  // cells: row0 cols1-2 then the column
    CHECK(cdes_strip(t) == Mask(4, {1, 4}));
    std::vector<Mask> expected = {Mask(4, {1, 2}), Mask(4, {2, 3}), Mask(4, {3, 4})};
    for (int j = 1; j <= 3; ++j)
        CHECK(cdes_strip(rotate_strip(t, j)) == expected[static_cast<std::size_t>(j - 1)]);

    SkewShape horiz = SkewShape::parse("(2)+(2)");
    Tableau h(horiz, {3, 4, 1, 2});
    CHECK(cdes_strip(h) == Mask(4, {4}));
    std::vector<Mask> hexpected = {Mask(4, {1}), Mask(4, {2}), Mask(4, {3})};
    for (int j = 1; j <= 3; ++j)
        CHECK(cdes_strip(rotate_strip(h, j)) == hexpected[static_cast<std::size_t>(j - 1)]);

    CHECK_THROWS_AS(cdes_strip(Tableau(SkewShape::parse("3"), {1, 2, 3})), std::domain_error);
    CHECK_THROWS_AS(cdes_strip(Tableau(SkewShape::parse("2,2"), {1, 2, 3, 4})), std::domain_error);
}

TEST_CASE("strip rotation properties") {
    for (const char* text : {"(1^2)+(2)", "(2)+(2)", "(1)+(3)", "(2)+(1^2)", "(1)+(1)+(2)", "(1^3)+(2)"}) {
        SkewShape shape = SkewShape::parse(text);
        const int n = shape.size();
        for (const Tableau& t : enumerate_syt(shape)) {
            // iterating the single-step rotation
            Tableau step = t;
            for (int j = 1; j <= n; ++j) {
                step = rotate_strip(step, 1);
                CHECK(step == rotate_strip(t, j));
            }
            CHECK(step == t);  // order n
            // equivariance and the axioms
            Mask cd = cdes_strip(t);
            CHECK(cdes_strip(rotate_strip(t, 1)) == shift_mask(cd, 1));
            CHECK((cd.bits() & ((std::uint64_t{1} << (n - 1)) - 1)) == des_set_syt(t).bits());
            CHECK(!cd.empty());
            CHECK(cd.count() < n);
        }
    }
}

TEST_CASE("horizontal strips follow the cyclic successor rule") {
    // every component a single row: i in cDes iff the cyclic successor of i
    // sits in a strictly lower row
    for (int n = 3; n <= 7; ++n)
        for (int a = 1; a < n; ++a) {
            SkewShape shape = SkewShape::direct_sum({{a}, {n - a}});
            for (const Tableau& t : enumerate_syt(shape)) {
                Mask direct(n);
                for (int i = 1; i <= n; ++i) {
                    int succ = i % n + 1;
                    if (t.cell_of(succ).row > t.cell_of(i).row) direct.insert(i);
                }
                CHECK(cdes_strip(t) == direct);
            }
        }
}

TEST_CASE("near-hook cyclic descents and rotation") {
    // the worked rotation: NE 6, first row 1 2 5, first column 1 3 4
    SkewShape shape = SkewShape::near_hook(6, 2);
    Tableau t(shape, {6, 1, 2, 5, 3, 4});
    CHECK(delta(t) == 6);
    CHECK(des_set_syt(t) == Mask(5, {2, 3}));
    CHECK(cdes_near_hook(t) == Mask(6, {2, 3, 6}));

    Tableau rotated = rotate_near_hook(t, 4);
    CHECK(delta(rotated) == 4);
    CHECK(rotated == Tableau(shape, {4, 1, 3, 6, 2, 5}));

    CHECK_THROWS_AS(delta(Tableau(SkewShape::parse("2,2"), {1, 2, 3, 4})), std::domain_error);
}

TEST_CASE("near-hook rotation properties") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 0; k <= n - 2; ++k) {
            SkewShape shape = SkewShape::near_hook(n, k);
            for (const Tableau& t : enumerate_syt(shape)) {
                Mask cd = cdes_near_hook(t);
                CHECK((cd.bits() & ((std::uint64_t{1} << (n - 1)) - 1)) == des_set_syt(t).bits());
                CHECK(!cd.empty());
                CHECK(cd.count() < n);
                Tableau step = t;
                for (int j = 1; j <= n; ++j) {
                    step = rotate_near_hook(step, 1);
                    CHECK(step == rotate_near_hook(t, j % n));
                    CHECK(delta(step) == (delta(t) + j - 1) % n + 1);
                }
                CHECK(step == t);
                CHECK(cdes_near_hook(rotate_near_hook(t, 1)) == shift_mask(cd, 1));
                // k = 0 near-hooks are strips; the two maps agree
                if (k == 0) CHECK(cdes_near_hook(t) == cdes_strip(t));
            }
        }
}

TEST_CASE("hook plus taller hook matches the disconnected strip") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            std::map<std::uint64_t, int> lhs, rhs;
            SkewShape strip = k == 0 ? SkewShape::from_partitions({n})
                                     : SkewShape::direct_sum({Partition(static_cast<std::size_t>(k), 1),
                                                              {n - k}});
            for (const Tableau& t : enumerate_syt(strip)) ++lhs[des_set_syt(t).bits()];
            Partition hook{n - k};
            for (int i = 0; i < k; ++i) hook.push_back(1);
            for (const Tableau& t : enumerate_syt(SkewShape::from_partitions(hook)))
                ++rhs[des_set_syt(t).bits()];
            if (k >= 1) {
                Partition taller{n - k + 1};
                for (int i = 0; i < k - 1; ++i) taller.push_back(1);
                for (const Tableau& t : enumerate_syt(SkewShape::from_partitions(taller)))
                    ++rhs[des_set_syt(t).bits()];
            }
            CHECK(lhs == rhs);
        }
}

TEST_CASE("tableau serialization") {
    Tableau t(SkewShape::near_hook(6, 2), {6, 1, 2, 5, 3, 4});
    CHECK(t.str() == "[[1,2,5],[3],[4]] + [[6]]");
    CHECK_THROWS_AS(Tableau(SkewShape::parse("2,2"), {2, 1, 3, 4}), std::invalid_argument);
}
