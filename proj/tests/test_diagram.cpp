#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "strpoly/diagram.hpp"

using namespace strpoly;

TEST_CASE("crossings agree with column simulation")
{
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : enumerate_words(n)) {
            const StringDiagram d(w);
            const auto expected = oracle::crossing_strands(w.letters(), n);
            for (int p = 1; p <= d.size(); ++p) {
                CHECK(d.crossing(p).corridor == w.letter(p));
                CHECK(d.crossing(p).left == expected[static_cast<std::size_t>(p - 1)].first);
                CHECK(d.crossing(p).right == expected[static_cast<std::size_t>(p - 1)].second);
            }
            // every pair of strands meets exactly once; strands end reversed
            for (int s = 1; s <= d.strands(); ++s) {
                CHECK(d.strand_crossings(s).size() == static_cast<std::size_t>(n));
                CHECK(d.trajectory(s).back().second == d.bottom_column(s));
            }
        }

    const StringDiagram d(parse_word("3 1 2 1 3 2"));
    CHECK(d.crossing(1).left == 3);
    CHECK(d.crossing(1).right == 4);

    const StringDiagram small(parse_word("1 2 1"));
    CHECK(std::pair(small.crossing(1).left, small.crossing(1).right) == std::pair(1, 2));
    CHECK(std::pair(small.crossing(2).left, small.crossing(2).right) == std::pair(1, 3));
    CHECK(std::pair(small.crossing(3).left, small.crossing(3).right) == std::pair(2, 3));
}

TEST_CASE("boxes are consecutive crossings in one corridor")
{
    CHECK(enumerate_boxes(StringDiagram(parse_word("1"))).empty());
    CHECK(enumerate_boxes(StringDiagram(parse_word("1 2 1"))) == std::vector<Box>{{1, 3, 1}});
    const auto boxes = enumerate_boxes(StringDiagram(parse_word("3 1 2 1 3 2")));
    CHECK(boxes == std::vector<Box>{{1, 5, 3}, {2, 4, 1}, {3, 6, 2}});

    for (const auto& w : enumerate_words(3))
        CHECK(enumerate_boxes(StringDiagram(w)).size() == static_cast<std::size_t>(w.length() - w.rank()));
}

TEST_CASE("braid regions")
{
    const auto r = braid_region(parse_word("1 2 1"), {BraidMove::Kind::Three, 1});
    CHECK(r.box == Box{1, 3, 1});
    CHECK(r.kind == BraidRegion::Kind::R121);
    CHECK(braid_region(parse_word("2 1 2"), {BraidMove::Kind::Three, 1}).kind == BraidRegion::Kind::R212);
    const auto big = braid_region(parse_word("1 2 1 3 2 1"), {BraidMove::Kind::Three, 1});
    CHECK(big.box == Box{1, 3, 1});
    CHECK(big.kind == BraidRegion::Kind::R121);
}
