#include <catch2/catch_amalgamated.hpp>

#include "strpoly/family.hpp"
#include "strpoly/polytope.hpp"

using namespace strpoly;

namespace {

IntVec add(const IntVec& a, const IntVec& b)
{
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

}  // namespace

TEST_CASE("family monomials are the inequality normals")
{
    const Family one = build_family(parse_word("1"));
    CHECK(one.size() == 2);
    CHECK(one.symbol_names() == std::vector<std::string>{"a_L1", "a_S1.1"});
    CHECK(evaluate_member(one, {Rational(1, 2), Rational(1, 2)}, {1}) == 0);
    CHECK(evaluate_member(one, {1, 1}, {1}) == -1);

    const Family fam = build_family(parse_word("1 2 1"));
    const std::vector<IntVec> expected{{1, -1, 2}, {0, 1, -1}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 1}, {0, 0, -1}};
    REQUIRE(fam.size() == expected.size());
    for (std::size_t d = 0; d < fam.size(); ++d) {
        CHECK(fam.inequalities[d].M == expected[d]);
        const auto it = fam.f.terms().find(expected[d]);
        REQUIRE(it != fam.f.terms().end());
        CHECK(it->second == -CoeffSum(CoeffMonomial::symbol(d)));
    }
    CHECK(fam.f.size() == 7);
    CHECK(fam.find(IntVec{0, -1, 1}) == fam.find("S1.2"));

    const Family worked = build_family(parse_word("3 1 2 1 3 2"));
    CHECK(worked.inequalities[worked.lambda(2)].M == IntVec{0, 1, -1, 2, 0, -1});
}

TEST_CASE("evaluation rejects zero coordinates and off-space coefficients")
{
    const Family fam = build_family(parse_word("1 2 1"));
    const ParamSpace space = box_equations(fam);
    const std::vector<Rational> ones(6, Rational(1));
    CHECK_THROWS_AS(evaluate_member(fam, ones, {1, 0, 1}), ZeroCoordinate);
    std::vector<Rational> bad = ones;
    bad[3] = 2;  // a_S1.1 a_L1 != a_S1.2 a_L3
    CHECK_THROWS_AS(evaluate_member(fam, bad, {1, 1, 1}, &space), BoxEquationViolated);
    bad[4] = 2;
    CHECK(evaluate_member(fam, bad, {1, 1, 1}, &space) == 1 - 1 - 1 - 1 - 2 - 2 - 1);
}

TEST_CASE("box equations")
{
    const Family one = build_family(parse_word("1"));
    const ParamSpace s1 = box_equations(one);
    CHECK(s1.equations.empty());
    CHECK(s1.dim == 2);

    const Family fam = build_family(parse_word("1 2 1"));
    const ParamSpace s = box_equations(fam);
    REQUIRE(s.equations.size() == 1);
    const auto& eq = s.equations[0];
    CHECK(eq.p1 == *fam.find("S1.1"));
    CHECK(eq.lambda_top == fam.lambda(1));
    CHECK(eq.p2 == *fam.find("S1.2"));
    CHECK(eq.lambda_bot == fam.lambda(3));
    CHECK(s.dim == 5);

    // every equation is a monomial identity  T^{M_p1} T^{M_top} = T^{M_p2} T^{M_bot}
    for (const auto& w : enumerate_words(3)) {
        const Family f = build_family(w);
        const ParamSpace sp = box_equations(f);
        CHECK(sp.saturation_index == 1);
        for (const auto& e : sp.equations)
            CHECK(add(f.inequalities[e.p1].M, f.inequalities[e.lambda_top].M) ==
                  add(f.inequalities[e.p2].M, f.inequalities[e.lambda_bot].M));
    }
}

// Two independent routes: the rank of the box-equation lattice, and the
// Picard rank of the fan spanned by the family exponents.
TEST_CASE("parameter space dimension on standard words")
{
    for (int n = 2; n <= 3; ++n) {
        const auto w = standard_word(n);
        const Family fam = build_family(w);
        const ParamSpace space = box_equations(fam);
        const ExactPolytope P = vertices(fam.inequalities);
        const DualPolytope D = dual_polytope(P, interior_point(w, P));
        CHECK(space.dim == face_fan_ranks(D.poly).picard_rank + w.length());
        CHECK(space.dim == static_cast<Index>(fam.size()) - space.lattice.rank());
    }
}

TEST_CASE("parameter sampling")
{
    const Family fam = build_family(parse_word("1 2 1"));
    const ParamSpace space = box_equations(fam);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = sample_param(space, seed);
        CHECK(a[3] * a[0] == a[4] * a[2]);
        CHECK(space.satisfied_by(a));
        for (const auto& x : a)
            CHECK(x > 0);
    }
    CHECK(sample_param(space, 9) == sample_param(space, 9));

    const ParamSpace free_space = box_equations(build_family(parse_word("1")));
    const auto a = sample_param(free_space, 4);
    CHECK(a.size() == 2);
    CHECK(a[0] != 0);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const Rational q = random_positive(rng);
        CHECK(q > 0);
        CHECK(q != 1);
    }
}
