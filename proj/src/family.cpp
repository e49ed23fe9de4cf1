#include "strpoly/family.hpp"

#include <algorithm>
#include <set>

namespace strpoly {

namespace {

Rational ipow(const Rational& x, int e)
{
    Rational out = 1;
    const Rational base = e < 0 ? Rational(1) / x : x;
    for (int i = 0; i < std::abs(e); ++i)
        out *= base;
    return out;
}

}  // namespace

std::optional<std::size_t> Family::find(const IntVec& M) const
{
    for (std::size_t d = 0; d < inequalities.size(); ++d)
        if (inequalities[d].M == M)
            return d;
    return std::nullopt;
}

std::optional<std::size_t> Family::find(const std::string& id) const
{
    for (std::size_t d = 0; d < inequalities.size(); ++d)
        if (inequalities[d].id == id)
            return d;
    return std::nullopt;
}

std::vector<std::string> Family::symbol_names() const
{
    std::vector<std::string> out;
    for (const auto& q : inequalities)
        out.push_back("a_" + q.id);
    return out;
}

Family build_family(const ReducedWord& word)
{
    Family fam{word, delta_hrep(word), SymbolicLaurent(static_cast<std::size_t>(word.length()))};
    const std::size_t N = static_cast<std::size_t>(word.length());
    fam.f = SymbolicLaurent::constant(N, CoeffSum(Rational(1)));
    for (std::size_t d = 0; d < fam.size(); ++d)
        fam.f -= SymbolicLaurent::monomial(CoeffSum(CoeffMonomial::symbol(d)), fam.inequalities[d].M);
    return fam;
}

bool ParamSpace::satisfied_by(const std::vector<Rational>& a) const
{
    for (const auto& eq : equations) {
        Rational lhs = 1, rhs = 1;
        for (std::size_t d = 0; d < r; ++d) {
            if (eq.exponent[d] > 0)
                lhs *= ipow(a[d], eq.exponent[d]);
            else if (eq.exponent[d] < 0)
                rhs *= ipow(a[d], -eq.exponent[d]);
        }
        if (lhs != rhs)
            return false;
    }
    return true;
}

ParamSpace box_equations(const Family& family)
{
    const StringDiagram diagram(family.word);
    ParamSpace space;
    space.r = family.size();
    std::set<IntVec> seen;
    std::vector<IntVec> generators;
    for (const Box& box : enumerate_boxes(diagram)) {
        const std::size_t top = family.lambda(box.top), bot = family.lambda(box.bot);
        const IntVec& Mt = family.inequalities[top].M;
        const IntVec& Mb = family.inequalities[bot].M;
        for (std::size_t p1 = 0; p1 < family.size(); ++p1) {
            const IntVec& M1 = family.inequalities[p1].M;
            if (family.inequalities[p1].is_lambda() || M1[static_cast<std::size_t>(box.top - 1)] != -1)
                continue;
            for (std::size_t p2 = 0; p2 < family.size(); ++p2) {
                const IntVec& M2 = family.inequalities[p2].M;
                if (p2 == p1 || family.inequalities[p2].is_lambda() || M2[static_cast<std::size_t>(box.bot - 1)] != 1)
                    continue;
                bool balanced = true;
                for (std::size_t q = 0; q < M1.size() && balanced; ++q)
                    balanced = M1[q] + Mt[q] == M2[q] + Mb[q];
                if (!balanced)
                    continue;
                IntVec e(space.r, 0);
                ++e[p1];
                ++e[top];
                --e[p2];
                --e[bot];
                if (!seen.insert(e).second)
                    continue;
                generators.push_back(e);
                space.equations.push_back({box, p1, top, p2, bot, std::move(e)});
            }
        }
    }
    space.lattice = IntegerLattice(space.r, generators);
    space.dim = static_cast<Index>(space.r) - space.lattice.rank();
    space.saturation_index = space.lattice.saturation_index();
    return space;
}

Rational evaluate_member(const Family& family, const std::vector<Rational>& a, const std::vector<Rational>& t,
                         const ParamSpace* space)
{
    if (a.size() != family.size() || t.size() != static_cast<std::size_t>(family.word.length()))
        throw InvalidInput("coefficient or point has the wrong length");
    if (std::any_of(t.begin(), t.end(), [](const Rational& x) { return x == 0; }))
        throw ZeroCoordinate("point lies off the torus");
    if (std::any_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; }))
        throw ZeroCoordinate("coefficient vector lies off the torus");
    if (space && !space->satisfied_by(a))
        throw BoxEquationViolated("coefficients do not satisfy the box equations");
    return family.f.evaluate(a, t);
}

Rational random_positive(std::mt19937_64& rng, int bound)
{
    const auto b = static_cast<std::uint64_t>(bound);
    for (;;) {
        const auto p = static_cast<long>(rng() % b + 1);
        const auto q = static_cast<long>(rng() % b + 1);
        if (p != q || bound == 1)
            return Rational(p) / q;
    }
}

std::vector<Rational> sample_param(const ParamSpace& space, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    // The integer kernel is saturated, so every character is hit.
    const auto basis = space.lattice.orthogonal_basis();
    std::vector<Rational> a(space.r, Rational(1));
    for (const auto& b : basis) {
        const Rational s = random_positive(rng);
        for (std::size_t d = 0; d < space.r; ++d)
            if (b[d] != 0)
                a[d] *= ipow(s, b[d]);
    }
    return a;
}

}  // namespace strpoly
