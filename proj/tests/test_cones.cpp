#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "strpoly/cones.hpp"

using namespace strpoly;

namespace {

const Inequality* by_id(const std::vector<Inequality>& hrep, const std::string& id)
{
    for (const auto& q : hrep)
        if (q.id == id)
            return &q;
    return nullptr;
}

std::set<IntVec> string_normals(const std::vector<Inequality>& hrep)
{
    std::set<IntVec> out;
    for (const auto& q : hrep)
        if (!q.is_lambda())
            out.insert(q.M);
    return out;
}

}  // namespace

TEST_CASE("worked example of rank three")
{
    const auto w = parse_word("3 1 2 1 3 2");
    const StringDiagram d(w);
    const auto lambdas = lambda_inequalities(d);
    REQUIRE(lambdas.size() == 6);
    CHECK(lambdas[1].M == IntVec{0, 1, -1, 2, 0, -1});
    CHECK(lambdas[1].rhs == 2);

    const auto paths = rigorous_paths(d, 1);
    const auto it = std::find_if(paths.begin(), paths.end(),
                                 [](const RigorousPath& p) { return p.crossings == IntVec{5, 3, 4, 6}; });
    REQUIRE(it != paths.end());
    const Inequality q = path_inequality(*it, 6);
    CHECK(q.M == IntVec{0, 0, -1, 1, 0, 0});
    CHECK(q.rhs == 0);
}

TEST_CASE("small words")
{
    const StringDiagram one(parse_word("1"));
    const auto p = rigorous_paths(one, 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0].crossings == IntVec{1});
    CHECK(lambda_inequalities(one)[0].M == IntVec{1});
    CHECK(delta_hrep(parse_word("1")).size() == 2);

    const StringDiagram d(parse_word("1 2 1"));
    const auto lam = lambda_inequalities(d);
    CHECK(lam[0].M == IntVec{1, -1, 2});
    CHECK(lam[1].M == IntVec{0, 1, -1});
    CHECK(lam[2].M == IntVec{0, 0, 1});

    const auto k1 = rigorous_paths(d, 1);
    CHECK(k1.size() == 2);
    std::set<IntVec> k1_normals;
    for (const auto& path : k1)
        k1_normals.insert(path_inequality(path, 3).M);
    CHECK(k1_normals == std::set<IntVec>{{-1, 0, 0}, {0, -1, 1}});
    for (const auto& path : rigorous_paths(d, 2))
        if (path.switches.size() == 1 && path.switches[0].crossing == 3)
            CHECK(path_inequality(path, 3).M == IntVec{0, 0, -1});

    const auto hrep = delta_hrep(parse_word("1 2 1"));
    CHECK(hrep.size() == 6);
    CHECK(by_id(hrep, "S1.2")->M == IntVec{0, -1, 1});
    CHECK(format_inequality(*by_id(hrep, "L1")) == "x1 - x2 + 2x3 <= 2");
}

TEST_CASE("forbidden fragments")
{
    const Crossing x{1, 1, 2, 3};
    CHECK(classify_straight_traversal(x, 2, true, true) == Fragment::UpThroughLeft);
    CHECK(classify_straight_traversal(x, 3, false, false) == Fragment::DownThroughRight);
    CHECK(classify_straight_traversal(x, 3, true, true) == Fragment::None);
    CHECK(classify_straight_traversal(x, 2, false, false) == Fragment::None);
    CHECK(classify_straight_traversal(x, 2, true, false) == Fragment::None);
}

// For the standard word the string cone is x1 >= 0, x2 >= x3 >= 0,
// x4 >= x5 >= x6 >= 0: compare membership on a grid.
TEST_CASE("standard word cone matches the chain description")
{
    const auto hrep = delta_hrep(standard_word(3));
    std::vector<Inequality> strings;
    for (const auto& q : hrep)
        if (!q.is_lambda())
            strings.push_back(q);
    const auto chain = [](const IntVec& x) {
        return x[0] >= 0 && x[1] >= x[2] && x[2] >= 0 && x[3] >= x[4] && x[4] >= x[5] && x[5] >= 0;
    };
    std::size_t agree = 0, total = 0;
    for (const auto& x : oracle::box_lattice_points({}, IntVec(6, -2), IntVec(6, 3))) {
        ++total;
        agree += oracle::satisfies(strings, to_rational(x)) == chain(x);
    }
    CHECK(agree == total);
}

TEST_CASE("two-moves permute string inequalities")
{
    for (const auto& w : enumerate_words(3))
        for (const auto& m : applicable_moves(w)) {
            if (m.kind != BraidMove::Kind::Two)
                continue;
            std::set<IntVec> swapped;
            for (IntVec M : string_normals(delta_hrep(w))) {
                std::swap(M[static_cast<std::size_t>(m.pos - 1)], M[static_cast<std::size_t>(m.pos)]);
                swapped.insert(M);
            }
            CHECK(swapped == string_normals(delta_hrep(apply_move(w, m))));
        }
}
