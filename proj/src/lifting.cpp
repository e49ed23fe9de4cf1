#include "strpoly/lifting.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "strpoly/cones.hpp"

namespace strpoly {

namespace {

Rational ipow(const Rational& x, int e)
{
    Rational out = 1;
    const Rational base = e < 0 ? Rational(1) / x : x;
    for (int n = 0; n < std::abs(e); ++n)
        out *= base;
    return out;
}

std::size_t at(int pos)
{
    return static_cast<std::size_t>(pos - 1);
}

std::string piece_str(const Piece& p)
{
    static const char* names[] = {"t_i", "t_j", "t_k"};
    std::string out;
    for (int c = 0; c < 3; ++c) {
        if (p[c] == 0)
            continue;
        if (!out.empty())
            out += " ";
        out += names[c];
        if (p[c] != 1)
            out += "^" + std::to_string(p[c]);
    }
    return out.empty() ? "1" : out;
}

void require_three(const BraidMove& move)
{
    if (move.kind != BraidMove::Kind::Three)
        throw MoveNotApplicable("expected a 3-move");
}

}  // namespace

Triple triple(const BraidMove& move)
{
    return {move.pos, move.pos + 1, move.pos + 2};
}

VectorQ pl_apply(const BraidMove& move, const VectorQ& x)
{
    VectorQ y = x;
    const Index p = move.pos - 1;
    if (move.kind == BraidMove::Kind::Two) {
        std::swap(y(p), y(p + 1));
        return y;
    }
    const Rational xi = x(p), xj = x(p + 1), xk = x(p + 2);
    y(p) = std::max(xk, Rational(xj - xi));
    y(p + 1) = xi + xk;
    y(p + 2) = std::min(xi, Rational(xj - xk));
    return y;
}

PLReport pl_verify_polytope(const ReducedWord& word, const BraidMove& move)
{
    if (!is_applicable(word, move))
        throw MoveNotApplicable("move " + to_string(move) + " does not apply to " + word.str());
    const ReducedWord target = apply_move(word, move);
    const auto src_h = delta_hrep(word), tgt_h = delta_hrep(target);
    const auto src = lattice_points(src_h, vertices(src_h));
    const auto tgt_list = lattice_points(tgt_h, vertices(tgt_h));
    const std::set<IntVec> tgt(tgt_list.begin(), tgt_list.end());

    PLReport rep;
    rep.source_points = src.size();
    rep.target_points = tgt.size();
    std::set<IntVec> images;
    for (const auto& x : src) {
        const VectorQ y = pl_apply(move, to_rational(x));
        IntVec yi(x.size());
        for (std::size_t q = 0; q < x.size(); ++q)
            yi[q] = y(static_cast<Index>(q)).convert_to<int>();
        if (!tgt.count(yi) || !images.insert(yi).second) {
            rep.witness = x;
            break;
        }
    }
    rep.interior_point_maps = pl_apply(move, lambda_apex(word) / 2) == lambda_apex(target) / 2;
    rep.ok = !rep.witness && images.size() == tgt.size() && rep.interior_point_maps;
    return rep;
}

Piece piece(const IntVec& M, const Triple& t)
{
    return {M[at(t.i)], M[at(t.j)], M[at(t.k)]};
}

namespace {

// Exchange lists for monomial pieces under a 3-move, read as unordered pairs.
const std::vector<std::pair<Piece, Piece>> kLambdaPairs = {
    {{0, 0, 0}, {0, 0, 0}},     {{1, -1, 2}, {1, -1, 2}},   {{0, 1, -1}, {0, 1, -1}},
    {{0, 0, 1}, {0, 0, 1}},     {{-1, 0, -1}, {0, -1, 0}},  {{2, -1, 2}, {-1, 2, -1}},
};

const std::vector<std::pair<Piece, Piece>> kStringSingles = {
    {{0, 0, 0}, {0, 0, 0}},
    {{1, 0, 1}, {0, 1, 0}},
    {{-1, 0, -1}, {0, -1, 0}},
    {{1, -1, 1}, {-1, 1, -1}},
};

struct PairRule {
    Piece single;
    Piece first, second;  // must occur together
};

const std::vector<PairRule> kStringPairs = {
    {{0, 0, -1}, {-1, 0, 0}, {0, -1, 1}},
    {{1, 0, 0}, {0, 0, 1}, {-1, 1, 0}},
};

bool lambda_pair_listed(const Piece& a, const Piece& b)
{
    return std::any_of(kLambdaPairs.begin(), kLambdaPairs.end(), [&](const auto& p) {
        return (p.first == a && p.second == b) || (p.first == b && p.second == a);
    });
}

// Image of one outside-part group of string pieces; nullopt (with a message)
// when a piece is not in the table or a paired piece appears alone.
std::optional<std::multiset<Piece>> string_image(const std::multiset<Piece>& group, std::string& why)
{
    std::multiset<Piece> out;
    std::multiset<Piece> rest = group;
    for (const auto& rule : kStringPairs) {
        const auto n1 = rest.count(rule.first), n2 = rest.count(rule.second), ns = rest.count(rule.single);
        if (n1 != n2) {
            why = "unpaired " + piece_str(n1 > n2 ? rule.first : rule.second);
            return std::nullopt;
        }
        for (std::size_t c = 0; c < n1; ++c)
            out.insert(rule.single);
        for (std::size_t c = 0; c < ns; ++c) {
            out.insert(rule.first);
            out.insert(rule.second);
        }
        rest.erase(rule.first);
        rest.erase(rule.second);
        rest.erase(rule.single);
    }
    for (const auto& p : rest) {
        const auto it = std::find_if(kStringSingles.begin(), kStringSingles.end(),
                                     [&](const auto& s) { return s.first == p || s.second == p; });
        if (it == kStringSingles.end()) {
            why = "unlisted piece " + piece_str(p);
            return std::nullopt;
        }
        out.insert(it->first == p ? it->second : it->first);
    }
    return out;
}

IntVec outside(IntVec M, const Triple& t)
{
    M[at(t.i)] = M[at(t.j)] = M[at(t.k)] = 0;
    return M;
}

}  // namespace

ClassificationReport classify_pieces(const ReducedWord& word, const BraidMove& move)
{
    require_three(move);
    if (!is_applicable(word, move))
        throw MoveNotApplicable("move " + to_string(move) + " does not apply to " + word.str());
    const Triple t = triple(move);
    const auto src = delta_hrep(word);
    const auto tgt = delta_hrep(apply_move(word, move));
    const auto N = static_cast<std::size_t>(word.length());

    ClassificationReport rep;
    for (std::size_t l = 0; l < N; ++l) {
        const Piece a = piece(src[l].M, t), b = piece(tgt[l].M, t);
        rep.lambda_exchanges.emplace_back(a, b);
        if (!lambda_pair_listed(a, b))
            rep.violations.push_back("L" + std::to_string(l + 1) + ": " + piece_str(a) + " -> " + piece_str(b));
        // lambda_i, lambda_j, lambda_k change corridor with the move; the rest keep their monomial
        const bool in_move = l + 1 >= static_cast<std::size_t>(t.i) && l + 1 <= static_cast<std::size_t>(t.k);
        if (!in_move && outside(src[l].M, t) != outside(tgt[l].M, t))
            rep.violations.push_back("L" + std::to_string(l + 1) + ": coefficients outside the move changed");
    }

    using Groups = std::map<IntVec, std::multiset<Piece>>;
    const auto group = [&](const std::vector<Inequality>& h) {
        Groups g;
        for (const auto& q : h)
            if (!q.is_lambda())
                g[outside(q.M, t)].insert(piece(q.M, t));
        return g;
    };
    const Groups gs = group(src), gt = group(tgt);
    std::set<IntVec> keys;
    for (const auto& [k, v] : gs)
        keys.insert(k);
    for (const auto& [k, v] : gt)
        keys.insert(k);
    for (const auto& key : keys) {
        const auto s = gs.count(key) ? gs.at(key) : std::multiset<Piece>{};
        const auto g = gt.count(key) ? gt.at(key) : std::multiset<Piece>{};
        std::string why;
        const auto image = string_image(s, why);
        if (!image) {
            rep.violations.push_back("string group: " + why);
            continue;
        }
        if (*image != g) {
            std::string msg = "string group maps to {";
            for (const auto& p : *image)
                msg += " " + piece_str(p);
            msg += " } but target has {";
            for (const auto& p : g)
                msg += " " + piece_str(p);
            rep.violations.push_back(msg + " }");
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

RationalExpr lift_substitute(const SymbolicLaurent& f, const Triple& t, const CoeffMonomial& C)
{
    const std::size_t nv = f.nvars();
    const std::size_t i = at(t.i), j = at(t.j), k = at(t.k);
    SymbolicLaurent D = SymbolicLaurent::variable(nv, i) * SymbolicLaurent::variable(nv, k) +
                        SymbolicLaurent::monomial(CoeffSum(C), [&] {
                            TExponent e(nv, 0);
                            e[j] = 1;
                            return e;
                        }());

    struct Term {
        TExponent e;
        CoeffSum c;
        int dpow;
    };
    std::vector<Term> terms;
    int lowest = 0;
    for (const auto& [e, c] : f.terms()) {
        TExponent ne = e;
        ne[i] = -e[i] + e[j] + e[k];
        ne[j] = e[k];
        ne[k] = e[j];
        const int dpow = e[i] - e[k];
        lowest = std::min(lowest, dpow);
        terms.push_back({std::move(ne), c * CoeffSum(C.pow(e[k] - e[j])), dpow});
    }
    RationalExpr out;
    out.numerator = SymbolicLaurent(nv);
    for (const auto& term : terms)
        out.numerator += SymbolicLaurent::monomial(term.c, term.e) * D.pow(static_cast<unsigned>(term.dpow - lowest));
    out.base = D;
    out.power = -lowest;
    out.monomial_exp.assign(nv, 0);
    return out;
}

CoeffMonomial lift_constant(const Family& family, const Triple& t)
{
    return CoeffMonomial::symbol(family.lambda(t.k)) * CoeffMonomial::symbol(family.lambda(t.i), -1);
}

std::vector<Rational> CoeffMap::apply(const std::vector<Rational>& a) const
{
    std::vector<Rational> out;
    for (const auto& m : image) {
        Rational v = m.scalar;
        for (const auto& [d, e] : m.exponents)
            v *= ipow(a.at(d), e);
        out.push_back(v);
    }
    return out;
}

IntVec CoeffMap::pullback(const IntVec& target_exponent) const
{
    IntVec out(source_size, 0);
    for (std::size_t dp = 0; dp < image.size(); ++dp) {
        if (target_exponent[dp] == 0)
            continue;
        for (const auto& [d, e] : image[dp].exponents)
            out[d] += target_exponent[dp] * e;
    }
    return out;
}

namespace {

struct TableEntry {
    std::vector<std::pair<int, Piece>> from;  // (power of C, piece); a common symbol multiplies all
    std::vector<std::pair<int, Piece>> to;
};

// Action of h_a^* on monomial pieces, one symbolic coefficient a in front.
const std::vector<TableEntry> kPullbackTable = {
    {{{0, {-1, 0, -1}}}, {{-1, {0, -1, 0}}}},
    {{{0, {2, -1, 2}}}, {{3, {-1, 2, -1}}}},
    {{{0, {-1, 2, -1}}}, {{-3, {2, -1, 2}}}},
    {{{0, {0, -1, 0}}}, {{1, {-1, 0, -1}}}},
    {{{0, {1, 0, 1}}}, {{1, {0, 1, 0}}}},
    {{{0, {0, 1, 0}}}, {{-1, {1, 0, 1}}}},
    {{{0, {1, -1, 1}}}, {{2, {-1, 1, -1}}}},
    {{{0, {-1, 1, -1}}}, {{-2, {1, -1, 1}}}},
    {{{0, {0, 1, -1}}}, {{-2, {1, -1, 2}}, {-1, {0, 0, 1}}}},
    {{{0, {0, 0, -1}}}, {{0, {-1, 0, 0}}, {-1, {0, -1, 1}}}},
    {{{0, {1, 0, 0}}}, {{0, {0, 0, 1}}, {1, {-1, 1, 0}}}},
    {{{0, {1, -1, 2}}, {1, {0, 0, 1}}}, {{2, {0, 1, -1}}}},
    {{{0, {0, 0, 1}}, {1, {-1, 1, 0}}}, {{0, {1, 0, 0}}}},
    {{{0, {-1, 0, 0}}, {-1, {0, -1, 1}}}, {{0, {0, 0, -1}}}},
    {{{0, {0, 0, 0}}}, {{0, {0, 0, 0}}}},
};

SymbolicLaurent table_side(const std::vector<std::pair<int, Piece>>& side)
{
    // symbol 0 is the common coefficient a, symbol 1 is C
    SymbolicLaurent out(3);
    for (const auto& [cpow, p] : side)
        out += SymbolicLaurent::monomial(
            CoeffSum(CoeffMonomial::symbol(0) * CoeffMonomial::symbol(1, cpow)), TExponent{p[0], p[1], p[2]});
    return out;
}

// Each table line re-derived by direct substitution; returns mismatching lines.
std::vector<std::string> check_table(const std::set<Piece>& used)
{
    std::vector<std::string> bad;
    std::set<Piece> covered;
    for (std::size_t n = 0; n < kPullbackTable.size(); ++n) {
        const auto& entry = kPullbackTable[n];
        for (const auto& [cpow, p] : entry.from)
            covered.insert(p);
        RationalExpr expr = lift_substitute(table_side(entry.from), {1, 2, 3}, CoeffMonomial::symbol(1));
        expr.normalize();
        const auto got = expr.as_laurent();
        if (!got || !(*got == table_side(entry.to)))
            bad.push_back("table line " + std::to_string(n + 1) + " disagrees with substitution");
    }
    for (const auto& p : used)
        if (!covered.count(p))
            bad.push_back("piece " + piece_str(p) + " is not covered by the table");
    return bad;
}

}  // namespace

LiftResult lift_pullback(const Family& source, const ParamSpace& source_space, const BraidMove& move)
{
    require_three(move);
    if (!is_applicable(source.word, move))
        throw MoveNotApplicable("move " + to_string(move) + " does not apply to " + source.word.str());
    const Triple t = triple(move);
    const IntegerLattice& L = source_space.lattice;
    LiftResult res{build_family(apply_move(source.word, move)), {}, SymbolicLaurent(source.f.nvars()), false, {}};

    RationalExpr expr = lift_substitute(source.f, t, lift_constant(source, t));
    expr.normalize(&L);
    const auto laurent = expr.as_laurent(&L);
    if (!laurent)
        throw NotLaurent("denominator survives for " + source.word.str() + " at " + to_string(move));
    res.pulled = *laurent;

    const TExponent zero(source.f.nvars(), 0);
    res.g.source_size = source.size();
    res.g.image.assign(res.target.size(), CoeffMonomial{0, {}});
    std::vector<bool> hit(res.target.size(), false);
    for (const auto& [e, c] : res.pulled.terms()) {
        if (e == zero) {
            if (!(c == CoeffSum(Rational(1))))
                throw MonomialMismatch("constant term is not 1");
            continue;
        }
        const auto d = res.target.find(e);
        if (!d)
            throw MonomialMismatch("pullback has a monomial outside the target family");
        const auto m = c.as_monomial();
        if (!m)
            throw MonomialMismatch("coefficient of " + res.target.inequalities[*d].id + " is not a monomial");
        res.g.image[*d] = {-m->scalar, m->exponents};
        hit[*d] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
        throw MonomialMismatch("target family monomial missing from the pullback");

    std::set<Piece> used;
    for (const auto& q : source.inequalities)
        used.insert(piece(q.M, t));
    res.table_mismatches = check_table(used);
    res.table_consistent = res.table_mismatches.empty();
    return res;
}

BoxPreservation verify_box_preservation(const ParamSpace& source, const ParamSpace& target, const CoeffMap& g)
{
    BoxPreservation out;
    for (std::size_t n = 0; n < target.equations.size(); ++n) {
        const IntVec& u = target.equations[n].exponent;
        Rational scalar = 1;
        for (std::size_t dp = 0; dp < u.size(); ++dp)
            if (u[dp] != 0)
                scalar *= ipow(g.image[dp].scalar, u[dp]);
        if (scalar != 1 || !source.lattice.contains(g.pullback(u))) {
            out.witness = n;
            return out;
        }
    }
    out.ok = true;
    return out;
}

std::vector<Rational> lift_point(const std::vector<Rational>& tp, const Triple& t, const Rational& C)
{
    const std::size_t i = at(t.i), j = at(t.j), k = at(t.k);
    const Rational D = tp[i] * tp[k] + C * tp[j];
    if (D == 0 || tp[i] == 0 || C == 0)
        throw ZeroCoordinate("lift is undefined at this point");
    std::vector<Rational> out = tp;
    out[i] = D / tp[i];
    out[j] = tp[i] * tp[k] / C;
    out[k] = C * tp[i] * tp[j] / D;
    return out;
}

RoundtripReport verify_roundtrip(const ReducedWord& word, const BraidMove& move)
{
    require_three(move);
    RoundtripReport rep;

    // Symbolic: the same formula applied twice with one symbol C.
    using F = LaurentFraction;
    const F c = F::of(SymbolicLaurent::constant(3, CoeffSum(CoeffMonomial::symbol(0))));
    const auto var = [](std::size_t q) { return F::of(SymbolicLaurent::variable(3, q)); };
    const auto h = [&](const F& ti, const F& tj, const F& tk) {
        const F D = ti * tk + c * tj;
        return std::array<F, 3>{D / ti, ti * tk / c, c * ti * tj / D};
    };
    const auto once = h(var(0), var(1), var(2));
    const auto twice = h(once[0], once[1], once[2]);
    rep.symbolic_identity = equivalent(twice[0], var(0)) && equivalent(twice[1], var(1)) && equivalent(twice[2], var(2));

    const std::vector<Rational> ones(3, Rational(1));
    const auto p1 = lift_point(ones, {1, 2, 3}, 1);
    const auto p2 = lift_point(p1, {1, 2, 3}, 1);
    rep.numeric_spot_check = p1 == std::vector<Rational>{2, 1, Rational(1, 2)} && p2 == ones;

    // Coefficients: g' after g is the identity modulo the source lattice.
    const Family src = build_family(word);
    const ParamSpace src_space = box_equations(src);
    const LiftResult fwd = lift_pullback(src, src_space, move);
    const ParamSpace tgt_space = box_equations(fwd.target);
    const LiftResult back = lift_pullback(fwd.target, tgt_space, move);
    rep.coefficient_identity = back.target.word == word;
    for (std::size_t d = 0; d < src.size() && rep.coefficient_identity; ++d) {
        const CoeffMonomial& m = back.g.image[d];
        const IntVec u = dense(m.exponents, fwd.target.size());
        IntVec v = fwd.g.pullback(u);
        --v[d];
        Rational scalar = m.scalar;
        for (std::size_t dp = 0; dp < u.size(); ++dp)
            if (u[dp] != 0)
                scalar *= ipow(fwd.g.image[dp].scalar, u[dp]);
        rep.coefficient_identity = scalar == 1 && src_space.lattice.contains(v);
    }
    return rep;
}

TransportResult two_move_transport(const Family& source, const ParamSpace& source_space, const BraidMove& move)
{
    if (move.kind != BraidMove::Kind::Two || !is_applicable(source.word, move))
        throw MoveNotApplicable("expected an applicable 2-move");
    TransportResult res{build_family(apply_move(source.word, move)), {}, false, false};
    const auto p = at(move.pos);
    res.monomials_match = res.target.size() == source.size();
    for (const auto& q : source.inequalities) {
        IntVec M = q.M;
        std::swap(M[p], M[p + 1]);
        const auto d = res.target.find(M);
        if (!d) {
            res.monomials_match = false;
            res.perm.push_back(source.size());
            continue;
        }
        res.perm.push_back(*d);
    }
    if (!res.monomials_match)
        return res;
    const ParamSpace target_space = box_equations(res.target);
    std::vector<IntVec> relabeled;
    for (const auto& g : source_space.lattice.generators()) {
        IntVec v(g.size(), 0);
        for (std::size_t d = 0; d < g.size(); ++d)
            v[res.perm[d]] = g[d];
        relabeled.push_back(std::move(v));
    }
    const IntegerLattice moved(res.target.size(), relabeled);
    res.lattice_match = true;
    for (const auto& v : relabeled)
        res.lattice_match = res.lattice_match && target_space.lattice.contains(v);
    for (const auto& v : target_space.lattice.generators())
        res.lattice_match = res.lattice_match && moved.contains(v);
    return res;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& x)
{
    if (x < 0)
        return std::nullopt;
    const Integer n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    const Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d)
        return std::nullopt;
    return Rational(rn) / Rational(rd);
}

// Nonzero rational roots of f(a, t) = 0 in the single coordinate q.
std::vector<Rational> solve_coordinate(const Family& fam, const std::vector<Rational>& a,
                                       const std::vector<Rational>& t, std::size_t q)
{
    std::map<int, Rational> poly;
    for (const auto& [e, c] : fam.f.terms()) {
        Rational v = c.evaluate(a);
        for (std::size_t p = 0; p < e.size(); ++p)
            if (p != q && e[p] != 0)
                v *= ipow(t[p], e[p]);
        poly[e[q]] += v;
    }
    std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
    if (poly.size() < 2)
        return {};
    const int lo = poly.begin()->first, deg = poly.rbegin()->first - lo;
    const auto coeff = [&](int s) { return poly.count(lo + s) ? poly.at(lo + s) : Rational(0); };
    if (deg == 1)
        return {-coeff(0) / coeff(1)};
    if (deg != 2)
        return {};
    const Rational A = coeff(2), B = coeff(1), C0 = coeff(0);
    const auto r = rational_sqrt(B * B - 4 * A * C0);
    if (!r)
        return {};
    std::vector<Rational> out;
    for (const Rational& x : {(-B + *r) / (2 * A), (-B - *r) / (2 * A)})
        if (x != 0)
            out.push_back(x);
    return out;
}

struct Step {
    BraidMove move;
    std::optional<LiftResult> lift;
    std::optional<TransportResult> transport;
};

}  // namespace

ChainReport chain_verify(const ReducedWord& a, const ReducedWord& b, std::uint64_t seed)
{
    if (a.rank() != b.rank())
        throw InvalidInput("words have different rank");
    ChainReport rep;
    rep.moves = find_move_sequence(a, b);

    std::vector<Family> fams{build_family(a)};
    std::vector<ParamSpace> spaces{box_equations(fams[0])};
    std::vector<Step> steps;
    for (const auto& m : rep.moves) {
        Step s{m, std::nullopt, std::nullopt};
        if (m.kind == BraidMove::Kind::Three) {
            s.lift = lift_pullback(fams.back(), spaces.back(), m);
            fams.push_back(s.lift->target);
        } else {
            s.transport = two_move_transport(fams.back(), spaces.back(), m);
            fams.push_back(s.transport->target);
        }
        spaces.push_back(box_equations(fams.back()));
        steps.push_back(std::move(s));
    }

    const auto push = [&](const std::vector<Rational>& a0) {
        std::vector<std::vector<Rational>> coeffs{a0};
        for (const auto& s : steps) {
            if (s.lift) {
                coeffs.push_back(s.lift->g.apply(coeffs.back()));
            } else {
                std::vector<Rational> next(coeffs.back().size());
                for (std::size_t d = 0; d < next.size(); ++d)
                    next[s.transport->perm[d]] = coeffs.back()[d];
                coeffs.push_back(std::move(next));
            }
        }
        return coeffs;
    };
    // Map a target point back to every word of the chain; throws off the torus.
    const auto pull = [&](const std::vector<std::vector<Rational>>& coeffs, const std::vector<Rational>& tm) {
        std::vector<std::vector<Rational>> pts(steps.size() + 1);
        pts.back() = tm;
        for (std::size_t s = steps.size(); s-- > 0;) {
            const auto& st = steps[s];
            if (st.lift) {
                const Triple t = triple(st.move);
                const Rational C = coeffs[s][fams[s].lambda(t.k)] / coeffs[s][fams[s].lambda(t.i)];
                pts[s] = lift_point(pts[s + 1], t, C);
            } else {
                pts[s] = pts[s + 1];
                std::swap(pts[s][at(st.move.pos)], pts[s][at(st.move.pos) + 1]);
            }
        }
        return pts;
    };

    std::vector<Rational> a0 = sample_param(spaces[0], seed);
    auto coeffs = push(a0);
    for (std::size_t s = 0; s < coeffs.size(); ++s)
        if (!spaces[s].satisfied_by(coeffs[s])) {
            rep.failing_move = s == 0 ? 0 : s - 1;
            return rep;
        }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto N = static_cast<std::size_t>(a.length());
    std::vector<Rational> tm(N);
    for (auto& x : tm)
        x = random_positive(rng);

    std::optional<std::vector<std::vector<Rational>>> pts;
    for (std::size_t q = 0; q < N && !pts; ++q)
        for (const Rational& root : solve_coordinate(fams.back(), coeffs.back(), tm, q)) {
            std::vector<Rational> cand = tm;
            cand[q] = root;
            try {
                pts = pull(coeffs, cand);
                rep.point_method = "solve t" + std::to_string(q + 1);
                break;
            } catch (const ZeroCoordinate&) {
            }
        }
    if (!pts) {
        // f is 1 minus a form homogeneous of degree one in the coefficients;
        // rescaling a0 (the box equations are homogeneous) puts tm on the hypersurface.
        Rational s = 0;
        for (std::size_t d = 0; d < fams.back().size(); ++d) {
            Rational v = coeffs.back()[d];
            for (std::size_t p = 0; p < N; ++p)
                v *= ipow(tm[p], fams.back().inequalities[d].M[p]);
            s += v;
        }
        for (auto& x : a0)
            x /= s;
        coeffs = push(a0);
        pts = pull(coeffs, tm);
        rep.point_method = "rescale coefficients";
    }

    rep.target_point = pts->back();
    rep.source_point = pts->front();
    rep.source_coefficients = coeffs.front();
    for (std::size_t s = coeffs.size(); s-- > 0;)
        if (evaluate_member(fams[s], coeffs[s], (*pts)[s], &spaces[s]) != 0) {
            rep.failing_move = s;
            break;
        }
    rep.source_value = evaluate_member(fams[0], coeffs[0], (*pts)[0]);
    rep.ok = !rep.failing_move && rep.source_value == 0;
    return rep;
}

}  // namespace strpoly
