// Acceptance suite: one line per criterion, exit status 1 if any fails.
// Pass --allow-large to add the rank-four integrality sweep (about 15 minutes, untimed).
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "oracles.hpp"
#include "strpoly/family.hpp"
#include "strpoly/lifting.hpp"
#include "strpoly/polytope.hpp"

using namespace strpoly;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool allow_large = false;

bool integral(const std::vector<VectorQ>& pts)
{
    for (const auto& v : pts)
        for (Index i = 0; i < v.size(); ++i)
            if (!is_integral(v(i)))
                return false;
    return true;
}

std::vector<std::pair<ReducedWord, BraidMove>> three_moves(int lo, int hi)
{
    std::vector<std::pair<ReducedWord, BraidMove>> out;
    for (int n = lo; n <= hi; ++n)
        for (const auto& w : enumerate_words(n))
            for (const auto& m : applicable_moves(w))
                if (m.kind == BraidMove::Kind::Three)
                    out.emplace_back(w, m);
    return out;
}

Verdict worked_example()
{
    Verdict v;
    const auto w = parse_word("3 1 2 1 3 2");
    const Family fam = build_family(w);
    const Inequality& lam2 = fam.inequalities[fam.lambda(2)];
    v.require(lam2.M == IntVec{0, 1, -1, 2, 0, -1} && lam2.rhs == 2, "lambda_2 inequality");
    v.require(fam.f.terms().count(IntVec{0, 1, -1, 2, 0, -1}) == 1, "lambda_2 monomial");
    bool found = false;
    for (const auto& p : rigorous_paths(StringDiagram(w), 1))
        if (p.crossings == IntVec{5, 3, 4, 6}) {
            const Inequality q = path_inequality(p, 6);
            found = q.M == IntVec{0, 0, -1, 1, 0, 0} && q.rhs == 0;
        }
    v.require(found, "rigorous path b1 -> t5 -> t3 -> t4 -> t6 -> b2");
    return v;
}

Verdict dual_integrality()
{
    Verdict v;
    std::size_t words = 0;
    for (int n = 2; n <= (allow_large ? 4 : 3); ++n)
        for (const auto& w : enumerate_words(n, allow_large ? 4 : kDefaultRankCap)) {
            const auto hrep = delta_hrep(w);
            const ExactPolytope P = vertices(hrep);
            try {
                const VectorQ mid = interior_point(w, P);
                for (const auto& q : hrep)
                    v.require(q.rhs - dot(q.M, mid) == 1, w.str() + ": slack of " + q.id);
                const DualPolytope D = dual_polytope(P, mid);
                v.require(integral(D.poly.vertices), w.str() + ": dual vertex");
            } catch (const Error& e) {
                v.require(false, w.str() + ": " + e.what());
            }
            ++words;
        }
    v.detail = v.ok ? std::to_string(words) + " words" : v.detail;
    return v;
}

Verdict delta_integrality()
{
    Verdict v;
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : enumerate_words(n))
            v.require(integral(vertices(delta_hrep(w)).vertices), w.str());
    return v;
}

Verdict apex_hyperplane()
{
    Verdict v;
    for (const auto& [w, m] : three_moves(2, 3)) {
        const VectorQ apex = lambda_apex(w);
        v.require(apex(m.pos - 1) + apex(m.pos + 1) == apex(m.pos), w.str() + " " + to_string(m));
    }
    return v;
}

Verdict classification()
{
    Verdict v;
    std::size_t moves = 0;
    for (const auto& [w, m] : three_moves(3, 3)) {
        const auto r = classify_pieces(w, m);
        v.require(r.ok, w.str() + " " + to_string(m) + ": " + (r.violations.empty() ? "" : r.violations.front()));
        ++moves;
    }
    if (v.ok)
        v.detail = std::to_string(moves) + " moves";
    return v;
}

Verdict pullback()
{
    Verdict v;
    for (const auto& [w, m] : three_moves(3, 3)) {
        const Family src = build_family(w);
        const ParamSpace space = box_equations(src);
        try {
            const LiftResult lift = lift_pullback(src, space, m);
            v.require(lift.table_consistent, w.str() + ": exchange table");
            v.require(verify_box_preservation(space, box_equations(lift.target), lift.g).ok,
                      w.str() + ": box equation not preserved");
        } catch (const Error& e) {
            v.require(false, w.str() + " " + to_string(m) + ": " + e.what());
        }
    }

    // rank two: images over (L1, L2, L3, S1.1, S1.2, S2.1), keyed by target monomial
    const Family src = build_family(parse_word("1 2 1"));
    const ParamSpace space = box_equations(src);
    const LiftResult lift = lift_pullback(src, space, {BraidMove::Kind::Three, 1});
    const std::vector<std::pair<IntVec, IntVec>> table{
        {{1, -1, 2}, {2, 1, -2, 0, 0, 0}}, {{0, 1, -1}, {-1, 0, 2, 0, 0, 0}}, {{0, 0, 1}, {1, 1, -1, 0, 0, 0}},
        {{-1, 0, 0}, {0, 0, 0, 0, 0, 1}},  {{0, -1, 1}, {1, 0, -1, 0, 0, 1}}, {{0, 0, -1}, {0, 0, 0, 1, 0, 0}},
    };
    for (const auto& [monomial, expected] : table) {
        const auto d = lift.target.find(monomial);
        if (!d) {
            v.require(false, "rank two: missing target monomial");
            continue;
        }
        IntVec diff = dense(lift.g.image[*d].exponents, src.size());
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i] -= expected[i];
        v.require(lift.g.image[*d].scalar == 1 && space.lattice.contains(diff),
                  "rank two: image of " + lift.target.inequalities[*d].id);
    }
    return v;
}

Verdict roundtrip()
{
    Verdict v;
    for (const auto& [w, m] : three_moves(2, 3)) {
        const RoundtripReport r = verify_roundtrip(w, m);
        v.require(r.symbolic_identity && r.numeric_spot_check && r.coefficient_identity, w.str() + " " + to_string(m));
    }
    const auto there = lift_point({1, 1, 1}, {1, 2, 3}, 1);
    v.require(there == std::vector<Rational>{2, 1, Rational(1, 2)}, "(1,1,1) -> (2,1,1/2)");
    v.require(lift_point(there, {1, 2, 3}, 1) == std::vector<Rational>{1, 1, 1}, "(2,1,1/2) -> (1,1,1)");
    return v;
}

Verdict chains()
{
    Verdict v;
    const auto all = enumerate_words(3);
    const std::vector<ReducedWord> words(all.begin(), all.end());
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    int done = 0;
    while (done < 6) {
        const auto& a = words[pick(rng)];
        const auto& b = words[pick(rng)];
        if (a == b)
            continue;
        const ChainReport r = chain_verify(a, b, rng());
        const Family src = build_family(a);
        v.require(r.ok, a.str() + " -> " + b.str());
        if (r.ok)
            v.require(evaluate_member(src, r.source_coefficients, r.source_point, nullptr) == 0,
                      a.str() + ": independent evaluation");
        ++done;
    }
    if (v.ok)
        v.detail = std::to_string(done) + " pairs";
    return v;
}

Verdict box_quadruples()
{
    Verdict v;
    std::size_t equations = 0;
    for (int n = 2; n <= 3; ++n)
        for (const auto& w : enumerate_words(n)) {
            const Family fam = build_family(w);
            const ExactPolytope P = vertices(fam.inequalities);
            const DualPolytope D = dual_polytope(P, interior_point(w, P));
            for (const auto& e : box_equations(fam).equations) {
                const std::vector<std::size_t> quad{e.p1, e.lambda_top, e.p2, e.lambda_bot};
                v.require(facet_quadruple_test(D, quad, e.box.top, e.box.bot).on_common_facet, w.str());
                // direct evaluation of L on the dual vertices
                const auto L = [&](const VectorQ& y) { return y(e.box.top - 1) - y(e.box.bot - 1) + 1; };
                for (auto d : quad)
                    v.require(L(D.points[d]) == 0, w.str() + ": quadruple vertex off L = 0");
                for (const auto& y : D.poly.vertices)
                    v.require(L(y) >= 0, w.str() + ": L negative");
                ++equations;
            }
        }
    if (v.ok)
        v.detail = std::to_string(equations) + " equations";
    return v;
}

Verdict dimension_identity()
{
    Verdict v;
    for (int n = 2; n <= 3; ++n) {
        const auto w = standard_word(n);
        const Family fam = build_family(w);
        const ParamSpace space = box_equations(fam);
        const Index lattice_route = static_cast<Index>(fam.size()) - space.lattice.rank();
        const ExactPolytope P = vertices(fam.inequalities);
        const DualPolytope D = dual_polytope(P, interior_point(w, P));
        const Index fan_route = face_fan_ranks(D.poly).picard_rank + w.length();
        v.require(lattice_route == fan_route,
                  w.str() + ": " + std::to_string(lattice_route) + " vs " + std::to_string(fan_route));
    }
    return v;
}

Verdict smallness()
{
    Verdict v;
    const FanRanks r = fan_ranks(vertices(delta_hrep(parse_word("3 1 2 1 3 2"))));
    v.require(r.picard_rank < 3, "picard rank " + std::to_string(r.picard_rank));
    if (v.ok)
        v.detail = "picard rank " + std::to_string(r.picard_rank);
    return v;
}

Verdict vertex_oracle()
{
    Verdict v;
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : enumerate_words(n)) {
            const auto hrep = delta_hrep(w);
            v.require(vertices(hrep).vertices == oracle::brute_force_vertices(hrep, w.length()), w.str());
        }
    return v;
}

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--allow-large") == 0)
            allow_large = true;

    const std::vector<Criterion> criteria{
        {1, "worked example of rank three", 1, worked_example},
        {2, "dual integrality and facet normalization", allow_large ? std::numeric_limits<double>::infinity() : 60.0, dual_integrality},
        {3, "string polytope integrality, n <= 3", 60, delta_integrality},
        {4, "apex on the move hyperplane", 60, apex_hyperplane},
        {5, "monomial piece exchange tables", 60, classification},
        {6, "pullback is Laurent and preserves box equations", 60, pullback},
        {7, "lift round trip", 60, roundtrip},
        {8, "exact points through move chains", 60, chains},
        {9, "box quadruples on a dual facet", 60, box_quadruples},
        {10, "parameter dimension identity, standard words", 60, dimension_identity},
        {11, "non-small degeneration of 3 1 2 1 3 2", 10, smallness},
        {12, "double description vs tight-subset oracle", 60, vertex_oracle},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && secs > c.budget_s) {
            v.ok = false;
            v.detail = "over time budget";
        }
        failed += v.ok ? 0 : 1;
        std::printf("%-4s criterion %2d  %-50s %8.3f s  %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    v.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
