#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "tableaux/tableau.hpp"

using namespace tableaux;

namespace {

// the 13-square example tableau on (5,3,2,2,1)
Tableau example_tableau() {
    return make_tableau(Shape({5, 3, 2, 2, 1}),
                        {{1, 4, 6, 7, 10}, {2, 5, 9}, {3, 11}, {8, 13}, {12}});
}

}  // namespace

TEST_CASE("make_tableau validates") {
    CHECK_NOTHROW(example_tableau());
    CHECK_NOTHROW(make_tableau(Shape({2, 1}), {{1, 3}, {2}}));
    CHECK_THROWS_AS(make_tableau(Shape({2}), {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tableau(Shape({2, 1}), {{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tableau(Shape({2, 1}), {{2, 3}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tableau(Shape({2, 1}), {{1, 2, 3}, {4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_tableau(Shape({2, 1}), {{1, 2}}), std::invalid_argument);
}

TEST_CASE("reading word") {
    CHECK(make_tableau(Shape({2, 1}), {{1, 3}, {2}}).reading_word() == Word{1, 3, 2});
    CHECK(make_tableau(Shape({3}), {{1, 2, 3}}).reading_word() == Word{1, 2, 3});
    CHECK(example_tableau().reading_word() ==
          Word{1, 4, 6, 7, 10, 2, 5, 9, 3, 11, 8, 13, 12});
}

TEST_CASE("word sign and inversions") {
    CHECK(word_sign({1, 3, 2}) == -1);
    CHECK(word_sign({1, 2, 3, 4}) == 1);
    CHECK(inversion_count(example_tableau().reading_word()) == 18);
    CHECK(example_tableau().sign() == 1);
    CHECK(inversion_count({}) == 0);
    CHECK(word_sign({}) == 1);
}

TEST_CASE("tableau sign") {
    CHECK(tableau_sign(example_tableau()) == 1);
    CHECK(tableau_sign(make_tableau(Shape({4}), {{1, 2, 3, 4}})) == 1);
    CHECK(tableau_sign(make_tableau(Shape({2, 1}), {{1, 3}, {2}})) == -1);
}

TEST_CASE("chess predicate") {
    CHECK_FALSE(make_tableau(Shape({2, 1}), {{1, 2}, {3}}).is_chess());
    CHECK_FALSE(make_tableau(Shape({2, 2}), {{1, 2}, {3, 4}}).is_chess());
    CHECK(make_tableau(Shape({1}), {{1}}).is_chess());
    CHECK(make_tableau(Shape({2, 1}), {{1, 2}, {3}}).is_standard());
}

TEST_CASE("syt enumeration on small shapes") {
    const auto two_one = enumerate_syt(Shape({2, 1}));
    REQUIRE(two_one.size() == 2);
    CHECK(two_one[0].sign() + two_one[1].sign() == 0);

    CHECK(enumerate_syt(Shape({6})).size() == 1);
    CHECK(enumerate_syt(Shape{}).size() == 1);
    CHECK(enumerate_syt(Shape{}).front().sign() == 1);

    const auto two_two = enumerate_syt(Shape({2, 2}));
    REQUIRE(two_two.size() == 2);
    CHECK(two_two[0].sign() + two_two[1].sign() == 0);
}

TEST_CASE("chess enumeration") {
    CHECK(enumerate_chess(Shape({2, 2})).empty());
    CHECK(enumerate_chess(Shape({1})).size() == 1);
    // both standard tableaux of (2,1) put the odd entry 3 on a white square
    CHECK(enumerate_chess(Shape({2, 1})).empty());
}

TEST_CASE("chess enumeration equals filtering the full enumeration") {
    for (int n = 0; n <= 10; ++n)
        for_each_partition(n, [&](const Shape& s) {
            std::vector<Tableau> filtered;
            for_each_syt(s, [&](const Tableau& t) {
                if (t.is_chess()) filtered.push_back(t);
            });
            CHECK(enumerate_chess(s) == filtered);
        });
}

TEST_CASE("chess tableaux have odd entries exactly on black squares") {
    for (int n = 0; n <= 8; ++n)
        for_each_partition(n, [&](const Shape& s) {
            for_each_chess(s, [&](const Tableau& t) {
                for (const Cell& c : s.cells()) {
                    const bool black = cell_color(c) == Color::black;
                    CHECK(black == (t.at(c) % 2 == 1));
                }
            });
        });
}

TEST_CASE("incremental sign matches the reading word") {
    for (int n = 0; n <= 9; ++n)
        for_each_partition(n, [&](const Shape& s) {
            for_each_syt(s, [&](const Tableau& t) {
                CHECK(t.sign() == word_sign(t.reading_word()));
            });
        });
}

TEST_CASE("syt_count") {
    CHECK(syt_count(Shape({2, 1})) == 2);
    CHECK(syt_count(Shape({9})) == 1);
    CHECK(syt_count(Shape{}) == 1);

    mpz_class total = 0;
    for_each_partition(12, [&](const Shape& s) { total += syt_count(s); });
    CHECK(total == mpz_class(140152));
    CHECK(total == mpz_class(oracles::involution_count(12)));
}

TEST_CASE("enumeration is complete") {
    for (int n = 0; n <= 12; ++n) {
        mpz_class schedule_total = 0;
        long enumerated_total = 0;
        for_each_partition(n, [&](const Shape& s) {
            long count = 0;
            for_each_syt_sign(s, [&](int) { ++count; });
            CHECK(syt_count(s) == mpz_class(count));
            schedule_total += syt_count(s);
            enumerated_total += count;
        });
        CHECK(schedule_total == mpz_class(oracles::involution_count(n)));
        CHECK(enumerated_total == oracles::involution_count(n));
    }
}

TEST_CASE("tableau accessors") {
    const Tableau t = example_tableau();
    CHECK(t.at({1, 1}) == 1);
    CHECK(t.at({4, 2}) == 13);
    CHECK_THROWS_AS(t.at({6, 1}), std::invalid_argument);
    CHECK(t.find(11) == Cell{3, 2});
    CHECK_FALSE(t.find(14).has_value());
    CHECK(t.contains_value(12));
    CHECK(t.is_standard());
    CHECK(t.str() == "1 4 6 7 10\n2 5 9\n3 11\n8 13\n12\n");
}
