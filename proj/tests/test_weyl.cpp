#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "strpoly/weyl.hpp"

using namespace strpoly;

TEST_CASE("words are validated against the longest element")
{
    CHECK(validate_reduced(3, {3, 1, 2, 1, 3, 2}).length() == 6);
    CHECK(validate_reduced(1, {1}).str() == "1");
    CHECK_THROWS_AS(validate_reduced(2, {1, 1, 2}), NotReduced);
    CHECK_THROWS_AS(parse_word("1 2"), Error);
    CHECK_THROWS_AS(parse_word("1 x 1"), InvalidInput);
    CHECK(parse_word("3 1 2 1 3 2").rank() == 3);
}

TEST_CASE("braid moves")
{
    const auto w = parse_word("1 2 1");
    CHECK(apply_move(w, {BraidMove::Kind::Three, 1}) == parse_word("2 1 2"));
    CHECK_THROWS_AS(apply_move(w, {BraidMove::Kind::Two, 1}), MoveNotApplicable);
    CHECK(apply_move(parse_word("3 1 2 1 3 2"), {BraidMove::Kind::Two, 1}) == parse_word("1 3 2 1 3 2"));

    for (const auto& v : enumerate_words(3))
        for (const auto& m : applicable_moves(v))
            CHECK(apply_move(apply_move(v, m), m) == v);
}

TEST_CASE("move sequences replay to their target")
{
    const auto a = parse_word("1 2 1");
    CHECK(find_move_sequence(a, a).empty());
    CHECK(find_move_sequence(a, parse_word("2 1 2")) == std::vector<BraidMove>{{BraidMove::Kind::Three, 1}});

    const auto src = parse_word("1 2 1 3 2 1"), dst = parse_word("3 1 2 1 3 2");
    auto cur = src;
    for (const auto& m : find_move_sequence(src, dst))
        cur = apply_move(cur, m);
    CHECK(cur == dst);
}

TEST_CASE("enumeration matches exhaustive letter search")
{
    for (int n = 1; n <= 4; ++n) {
        std::set<IntVec> got;
        for (const auto& w : enumerate_words(n))
            got.insert(w.letters());
        CHECK(got == oracle::reduced_words(n));
    }
    CHECK(enumerate_words(2).size() == 2);
    CHECK(enumerate_words(3).size() == 16);
    CHECK(enumerate_words(4).size() == 768);
    CHECK_THROWS_AS(enumerate_words(5), RankTooLarge);
    CHECK(standard_word(3) == parse_word("1 2 1 3 2 1"));
}
