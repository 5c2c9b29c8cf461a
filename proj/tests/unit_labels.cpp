#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "labels.hpp"

using namespace lab;

TEST_CASE("multinumber parse and print") {
    CHECK(mn_parse("21", 2) == mn_node(mn_leaf(2), mn_leaf(1)));
    CHECK(mn_parse("((32)1)0", 3) ==
          mn_node(mn_node(mn_node(mn_leaf(3), mn_leaf(2)), mn_leaf(1)), mn_leaf(0)));
    CHECK(mn_parse("0", 3) == mn_leaf(0));

    const char *labels[] = {"0",      "1",      "2",       "3",        "10",      "20",
                            "21",     "30",     "31",      "32",       "(21)0",   "2(10)",
                            "(31)0",  "3(10)",  "(32)0",   "3(20)",    "(32)1",   "3(21)",
                            "(32)(10)", "3((21)0)", "3(2(10))", "((32)1)0", "(3(21))0",
                            "(32)((21)0)", "(3(21))(10)", "(3(2(10)))0", "3(((32)1)0)"};
    for (const char *t : labels) CHECK(mn_str(mn_parse(t, 3)) == t);

    CHECK_THROWS_AS(mn_parse("", 3), std::runtime_error);
    CHECK_THROWS_AS(mn_parse("(21", 3), std::runtime_error);
    CHECK_THROWS_AS(mn_parse("210", 3), std::runtime_error);
    CHECK_THROWS_AS(mn_parse("3", 2), std::runtime_error);
    CHECK_THROWS_AS(mn_parse("(1)0", 2), std::runtime_error);
}

TEST_CASE("card and maxdigit") {
    CHECK(mn_card(mn_parse("2(10)", 2)) == 3);
    CHECK(mn_card(mn_parse("3", 3)) == 1);
    CHECK(mn_card(mn_parse("3(((32)1)0)", 3)) == 5);
    CHECK(mn_maxdigit(mn_parse("(21)0", 2)) == 2);
    CHECK(mn_maxdigit(mn_parse("10", 1)) == 1);
}

TEST_CASE("string inversions") {
    CHECK(inversions(str_parse("0101", 1)) == 1);
    CHECK(inversions(str_parse("0210", 2)) == 3);
    CHECK(inversions(str_parse("0012", 2)) == 0);
    CHECK(inversions(str_parse("103213", 3)) == 4);
}

TEST_CASE("shape dimension is the top inversion count") {
    Shape sh{2, {2, 1, 1}};
    CHECK(sh.n() == 4);
    CHECK(sh.dim() == 5);
    Str top = str_parse("2100", 2);
    CHECK(inversions(top) == sh.dim());
    Shape g24{1, {2, 2}};
    CHECK(g24.dim() == 4);
}

TEST_CASE("bruhat order") {
    CHECK(bruhat_leq(str_parse("0101", 1), str_parse("0110", 1)));
    CHECK(!bruhat_leq(str_parse("1001", 1), str_parse("0110", 1)));
    CHECK(!bruhat_leq(str_parse("0110", 1), str_parse("1001", 1)));
    // omega is the minimum of its content class
    for (auto &s : strings_of_content({2, 2}))
        CHECK(bruhat_leq(str_parse("0011", 1), s));
    // reflexive, and consistent with length
    auto all = strings_of_content({1, 2, 1});
    for (auto &x : all)
        for (auto &y : all)
            if (bruhat_leq(x, y) && x != y) CHECK(inversions(x) < inversions(y));
}

TEST_CASE("min lift preserves inversions") {
    std::mt19937_64 rng(99);
    auto all = strings_of_content({2, 2, 1});
    for (auto &s : all) CHECK(perm_inversions(min_lift(s)) == inversions(s));
    CHECK(min_lift(str_parse("10", 1)) == std::vector<int>{1, 0});
}

TEST_CASE("refine") {
    // coarse digits: 0 -> {0} x2; 1 -> {1}x3,{2}x2; 2 -> {3}x1,{4}x3
    Str coarse = str_parse("12021021121", 2);
    Str fine = refine(coarse, {{2}, {3, 2}, {1, 3}});
    CHECK(str_str(fine) == "13041041242");
    CHECK(inversions(fine) == inversions(coarse));

    // identity splitting
    Str s = str_parse("0210", 2);
    CHECK(refine(s, {{2}, {1}, {1}}) == s);

    Str zz = str_parse("00", 0);
    CHECK(refine(zz, {{2}}) == zz);

    // random inversion-preservation
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 50; iter++) {
        auto all = strings_of_content({2, 3});
        Str c = all[rng() % all.size()];
        Str f = refine(c, {{1, 1}, {2, 1}});
        CHECK(inversions(f) == inversions(c));
    }
}

TEST_CASE("content utilities") {
    CHECK(omega_of_content({2, 1, 1}) == str_parse("0012", 2));
    CHECK(strings_of_content({1, 1}).size() == 2);
    CHECK(strings_of_content({2, 2, 1}).size() == 30);
    CHECK(content_of(str_parse("103213", 3), 3) == std::vector<int>{1, 2, 1, 2});
    CHECK(reversed(str_parse("0102", 2)) == str_parse("2010", 2));
    CHECK(complemented(str_parse("0102", 2), 2) == str_parse("2120", 2));
    CHECK(inversions(omega_of_content({3, 2})) == 0);
}

TEST_CASE("occurrence map matches spec lift") {
    // digit v's k-th occurrence in `from` goes to its k-th occurrence in `to`
    Str omega = str_parse("01", 1), sigma = str_parse("10", 1);
    auto s = occurrence_map(omega, sigma);
    CHECK(s == std::vector<int>{1, 0});
    auto id = occurrence_map(sigma, sigma);
    CHECK(id == std::vector<int>{0, 1});
}
