// strpoly: string polytopes, their duals and mirror families from reduced words.
//
// Every subcommand prints one JSON report on stdout. Exit status: 0 when all
// checks pass, 1 on a verification failure, 2 on malformed input.
#include <chrono>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "report.hpp"
#include "strpoly/family.hpp"
#include "strpoly/lifting.hpp"
#include "strpoly/polytope.hpp"

using namespace strpoly;
using report::json;

namespace {

struct Outcome {
    json results = json::object();
    bool ok = true;
};

struct Options {
    std::string word, from, to;
    int n = 0;
    int pos = 0;
    std::uint64_t seed = 1;
    bool dual = false, f_vector = false, picard = false;
    bool allow_large = false, timing = false, json_out = true;
};

ReducedWord read_word(const std::string& text, const Options& opt)
{
    const ReducedWord w = parse_word(text);
    if (w.rank() > kDefaultRankCap && !opt.allow_large)
        throw RankTooLarge("rank " + std::to_string(w.rank()) + " exceeds the cap; pass --allow-large");
    return w;
}

int rank_cap(const Options& opt)
{
    return opt.allow_large ? std::max(opt.n, kDefaultRankCap) : kDefaultRankCap;
}

bool all_integral(const std::vector<VectorQ>& pts)
{
    for (const auto& v : pts)
        for (Index i = 0; i < v.size(); ++i)
            if (!is_integral(v(i)))
                return false;
    return true;
}

Outcome cmd_words(const Options& opt)
{
    Outcome out;
    json list = json::array();
    for (const auto& w : enumerate_words(opt.n, rank_cap(opt)))
        list.push_back(report::word(w));
    out.results = {{"n", opt.n}, {"count", list.size()}, {"words", list}};
    return out;
}

Outcome cmd_diagram(const Options& opt)
{
    const StringDiagram d(read_word(opt.word, opt));
    Outcome out;
    json crossings = json::array(), trajectories = json::object(), boxes = json::array();
    for (const auto& x : d.crossings())
        crossings.push_back({{"level", x.level}, {"corridor", x.corridor}, {"strands", {x.left, x.right}}});
    for (int s = 1; s <= d.strands(); ++s) {
        json path = json::array();
        for (const auto& [level, column] : d.trajectory(s))
            path.push_back({level, column});
        trajectories["U" + std::to_string(s)] = path;
    }
    for (const auto& b : enumerate_boxes(d))
        boxes.push_back(report::box(b));
    out.results = {{"word", report::word(d.word())}, {"crossings", crossings}, {"trajectories", trajectories},
                   {"boxes", boxes}};
    return out;
}

Outcome cmd_cone(const Options& opt)
{
    const ReducedWord w = read_word(opt.word, opt);
    Outcome out;
    json list = json::array();
    for (const auto& q : delta_hrep(w))
        list.push_back(report::inequality(q));
    out.results = {{"word", report::word(w)}, {"inequalities", list}};
    return out;
}

Outcome cmd_polytope(const Options& opt)
{
    const ReducedWord w = read_word(opt.word, opt);
    const auto hrep = delta_hrep(w);
    const ExactPolytope delta = vertices(hrep);
    Outcome out;
    json ineqs = json::array(), verts = json::array(), non_facet = json::array();
    for (std::size_t h = 0; h < hrep.size(); ++h) {
        ineqs.push_back({{"id", hrep[h].id}, {"facet", static_cast<bool>(delta.facet[h])}});
        if (!delta.facet[h])
            non_facet.push_back(hrep[h].id);
    }
    for (const auto& v : delta.vertices)
        verts.push_back(report::vector(v));
    const bool integral = all_integral(delta.vertices);
    out.ok = integral;
    out.results = {{"word", report::word(w)},   {"dim", delta.dim},         {"inequalities", ineqs},
                   {"vertices", verts},         {"integral", integral},     {"non_facet", non_facet},
                   {"apex", report::vector(lambda_apex(w))}};
    if (!non_facet.empty())
        std::cerr << "warning: " << non_facet.size() << " inequalities do not define facets\n";

    std::optional<DualPolytope> dual;
    if (opt.dual || opt.picard) {
        try {
            const VectorQ P = interior_point(w, delta);
            dual = dual_polytope(delta, P);
            out.results["interior_point"] = report::vector(P);
        } catch (const NormalizationFailure& e) {
            out.ok = false;
            out.results["dual"] = {{"error", e.what()}};
        } catch (const NonIntegralDual& e) {
            out.ok = false;
            out.results["dual"] = {{"error", e.what()}};
        }
    }
    if (opt.dual && dual) {
        json dv = json::array(), vertex_of = json::object();
        for (const auto& v : dual->poly.vertices)
            dv.push_back(report::vector(v));
        for (std::size_t h = 0; h < hrep.size(); ++h)
            if (dual->vertex_of[h])
                vertex_of[hrep[h].id] = *dual->vertex_of[h];
        out.results["dual"] = {{"vertices", dv}, {"integral", true}, {"vertex_of", vertex_of}};
    }
    if (opt.f_vector) {
        out.results["f_vector"] = f_vector(delta);
        if (dual)
            out.results["dual_f_vector"] = f_vector(dual->poly);
    }
    if (opt.picard) {
        const FanRanks primal = fan_ranks(delta);
        out.results["picard"] = {{"normal_fan_of_delta", {{"class_rank", primal.class_rank}, {"picard_rank", primal.picard_rank}}}};
        if (dual) {
            const FanRanks over_dual = face_fan_ranks(dual->poly);
            out.results["picard"]["face_fan_of_dual"] = {{"class_rank", over_dual.class_rank},
                                                         {"picard_rank", over_dual.picard_rank}};
        }
    }
    return out;
}

json family_json(const Family& fam, const ParamSpace& space)
{
    const auto names = fam.symbol_names();
    json monomials = json::object(), equations = json::array();
    for (const auto& q : fam.inequalities)
        monomials[q.id] = q.M;
    for (const auto& eq : space.equations)
        equations.push_back({{"box", report::box(eq.box)},
                             {"p1", fam.inequalities[eq.p1].id},
                             {"lambda_top", fam.inequalities[eq.lambda_top].id},
                             {"p2", fam.inequalities[eq.p2].id},
                             {"lambda_bot", fam.inequalities[eq.lambda_bot].id},
                             {"exponent", eq.exponent}});
    return {{"word", report::word(fam.word)},
            {"monomials", monomials},
            {"f", fam.f.str(names)},
            {"r", space.r},
            {"box_equations", equations},
            {"param_dim", space.dim},
            {"saturation_index", space.saturation_index.str()}};
}

Outcome cmd_family(const Options& opt)
{
    const Family fam = build_family(read_word(opt.word, opt));
    const ParamSpace space = box_equations(fam);
    Outcome out;
    out.results = family_json(fam, space);
    if (space.saturation_index != 1)
        std::cerr << "warning: box-equation lattice is not saturated; sampling uses the identity component\n";
    return out;
}

// Apex lies on x_i + x_k = x_j for the move's triple.
bool apex_on_hyperplane(const ReducedWord& w, const BraidMove& m)
{
    const VectorQ apex = lambda_apex(w);
    const Index i = m.pos - 1;
    return apex(i) + apex(i + 2) == apex(i + 1);
}

json verify_three(const ReducedWord& w, const BraidMove& m, bool& ok)
{
    json r = json::object();
    const ClassificationReport cls = classify_pieces(w, m);
    r["classification"] = report::check(cls.ok, {{"violations", cls.violations}});
    const PLReport pl = pl_verify_polytope(w, m);
    json pl_detail = {{"source_points", pl.source_points}, {"target_points", pl.target_points},
                      {"interior_point_maps", pl.interior_point_maps}};
    if (pl.witness)
        pl_detail["witness"] = *pl.witness;
    r["pl_bijection"] = report::check(pl.ok, pl_detail);
    r["apex_on_hyperplane"] = report::check(apex_on_hyperplane(w, m));

    const Family src = build_family(w);
    const ParamSpace src_space = box_equations(src);
    bool lift_ok = true;
    try {
        const LiftResult lift = lift_pullback(src, src_space, m);
        const auto names = src.symbol_names();
        json g = json::object();
        for (std::size_t d = 0; d < lift.target.size(); ++d)
            g[lift.target.inequalities[d].id] = report::coeff_monomial(lift.g.image[d], names);
        r["pullback"] = report::check(lift.table_consistent, {{"coefficient_map", g}, {"table_mismatches", lift.table_mismatches}});
        const BoxPreservation bp = verify_box_preservation(src_space, box_equations(lift.target), lift.g);
        json bp_detail = json::object();
        if (bp.witness)
            bp_detail["witness_equation"] = *bp.witness;
        r["box_preservation"] = report::check(bp.ok, bp_detail);
        lift_ok = lift.table_consistent && bp.ok;
    } catch (const NotLaurent& e) {
        r["pullback"] = report::check(false, {{"error", e.what()}});
        lift_ok = false;
    } catch (const MonomialMismatch& e) {
        r["pullback"] = report::check(false, {{"error", e.what()}});
        lift_ok = false;
    }
    const RoundtripReport rt = verify_roundtrip(w, m);
    const bool rt_ok = rt.symbolic_identity && rt.numeric_spot_check && rt.coefficient_identity;
    r["roundtrip"] = report::check(rt_ok, {{"symbolic", rt.symbolic_identity},
                                           {"numeric", rt.numeric_spot_check},
                                           {"coefficients", rt.coefficient_identity}});
    ok = ok && cls.ok && pl.ok && apex_on_hyperplane(w, m) && lift_ok && rt_ok;
    return r;
}

json verify_two(const ReducedWord& w, const BraidMove& m, bool& ok)
{
    const Family src = build_family(w);
    const TransportResult t = two_move_transport(src, box_equations(src), m);
    const PLReport pl = pl_verify_polytope(w, m);
    json perm = json::object();
    for (std::size_t d = 0; d < t.perm.size() && t.monomials_match; ++d)
        perm[src.inequalities[d].id] = t.target.inequalities[t.perm[d]].id;
    ok = ok && t.monomials_match && t.lattice_match && pl.ok;
    return {{"transport", report::check(t.monomials_match && t.lattice_match,
                                        {{"relabeling", perm}, {"lattice_match", t.lattice_match}})},
            {"pl_bijection", report::check(pl.ok, {{"source_points", pl.source_points}})}};
}

Outcome cmd_verify_move(const Options& opt)
{
    const ReducedWord w = read_word(opt.word, opt);
    BraidMove m{BraidMove::Kind::Three, opt.pos};
    if (!is_applicable(w, m))
        m.kind = BraidMove::Kind::Two;
    if (!is_applicable(w, m))
        throw MoveNotApplicable("no braid move applies at position " + std::to_string(opt.pos));
    Outcome out;
    out.results = {{"word", report::word(w)}, {"move", report::move(m)}, {"target", report::word(apply_move(w, m))}};
    out.results["checks"] = m.kind == BraidMove::Kind::Three ? verify_three(w, m, out.ok) : verify_two(w, m, out.ok);
    return out;
}

json chain_json(const ChainReport& c)
{
    json moves = json::array();
    for (const auto& m : c.moves)
        moves.push_back(report::move(m));
    json out = {{"moves", moves},
                {"point_method", c.point_method},
                {"target_point", report::vector(c.target_point)},
                {"source_point", report::vector(c.source_point)},
                {"source_coefficients", report::vector(c.source_coefficients)},
                {"source_value", report::rational(c.source_value)}};
    if (c.failing_move)
        out["failing_move"] = *c.failing_move;
    return report::check(c.ok, out);
}

Outcome cmd_verify_chain(const Options& opt)
{
    const ReducedWord a = read_word(opt.from, opt), b = read_word(opt.to, opt);
    if (a.rank() != b.rank())
        throw InvalidInput("--from and --to have different rank");
    const ChainReport c = chain_verify(a, b, opt.seed);
    Outcome out;
    out.ok = c.ok;
    out.results = {{"from", report::word(a)}, {"to", report::word(b)}, {"seed", opt.seed}, {"chain", chain_json(c)}};
    return out;
}

Outcome cmd_smallness(const Options& opt)
{
    const ReducedWord w = read_word(opt.word, opt);
    const FanRanks r = fan_ranks(vertices(delta_hrep(w)));
    Outcome out;
    out.results = {{"word", report::word(w)},
                   {"class_rank", r.class_rank},
                   {"picard_rank", r.picard_rank},
                   {"flag_variety_picard_rank", w.rank()},
                   {"not_small", r.picard_rank < w.rank()},
                   {"scope", "toric Picard-rank indicator only"}};
    return out;
}

Outcome cmd_orbit(const Options& opt)
{
    Outcome out;
    json words = json::array();
    std::set<Index> dims;
    std::size_t failures = 0;
    for (const auto& w : enumerate_words(opt.n, rank_cap(opt))) {
        bool ok = true;
        json wr = {{"word", report::word(w)}};
        const auto hrep = delta_hrep(w);
        const ExactPolytope delta = vertices(hrep);
        wr["delta_integral"] = all_integral(delta.vertices);
        ok = ok && all_integral(delta.vertices);
        std::optional<DualPolytope> dual;
        try {
            dual = dual_polytope(delta, interior_point(w, delta));
            wr["dual_integral"] = true;
        } catch (const Error& e) {
            wr["dual_integral"] = false;
            wr["dual_error"] = e.what();
            ok = false;
        }
        const Family fam = build_family(w);
        const ParamSpace space = box_equations(fam);
        dims.insert(space.dim);
        wr["param_dim"] = space.dim;
        if (dual) {
            bool on_facet = true;
            for (const auto& eq : space.equations)
                on_facet = on_facet && facet_quadruple_test(*dual, {eq.p1, eq.lambda_top, eq.p2, eq.lambda_bot},
                                                      eq.box.top, eq.box.bot)
                                     .on_common_facet;
            wr["box_quadruples_on_facet"] = on_facet;
            ok = ok && on_facet;
            // The dimension identity is a statement about small degenerations.
            const bool small = fan_ranks(delta).picard_rank == w.rank();
            const Index rhs = face_fan_ranks(dual->poly).picard_rank + w.length();
            wr["small"] = small;
            wr["dimension_identity"] = {{"param_dim", space.dim}, {"picard_plus_N", rhs},
                                        {"holds", space.dim == rhs}, {"required", small}};
            ok = ok && (!small || space.dim == rhs);
        }
        json moves = json::array();
        for (const auto& m : applicable_moves(w)) {
            json mr = {{"move", report::move(m)}};
            mr["checks"] = m.kind == BraidMove::Kind::Three ? verify_three(w, m, ok) : verify_two(w, m, ok);
            moves.push_back(mr);
        }
        wr["moves"] = moves;
        wr["pass"] = ok;
        failures += ok ? 0 : 1;
        words.push_back(wr);
    }
    const bool invariant = dims.size() <= 1;
    out.ok = failures == 0 && invariant;
    out.results = {{"n", opt.n}, {"words", words}, {"failures", failures}, {"param_dim_invariant", invariant}};
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"String polytopes and mirror families from reduced words of the longest element"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--allow-large", opt.allow_large, "lift the rank cap of 4");
    app.add_flag("--json", opt.json_out, "emit JSON (the only format)");
    app.add_flag("--timing", opt.timing, "include wall-clock time in the report");

    auto* words = app.add_subcommand("words", "list reduced words of w0");
    words->add_option("--n", opt.n, "rank")->required()->check(CLI::PositiveNumber);
    auto* diagram = app.add_subcommand("diagram", "string diagram: crossings, trajectories, boxes");
    auto* cone = app.add_subcommand("cone", "string and lambda inequalities");
    auto* polytope = app.add_subcommand("polytope", "vertices of the string polytope");
    polytope->add_flag("--dual", opt.dual, "polar dual about half the apex");
    polytope->add_flag("--f-vector", opt.f_vector, "face counts");
    polytope->add_flag("--picard", opt.picard, "class and Picard ranks");
    auto* family = app.add_subcommand("family", "Laurent family and box equations");
    auto* smallness = app.add_subcommand("smallness", "Picard rank of the toric variety of the polytope");
    for (auto* sub : {diagram, cone, polytope, family, smallness})
        sub->add_option("--word", opt.word, "letters, e.g. \"3 1 2 1 3 2\"")->required();

    auto* verify = app.add_subcommand("verify", "check braid-move compatibility");
    verify->require_subcommand(1);
    verify->fallthrough();
    auto* vmove = verify->add_subcommand("move", "all checks for one braid move");
    vmove->add_option("--word", opt.word)->required();
    vmove->add_option("--pos", opt.pos, "1-based position of the move")->required();
    auto* vchain = verify->add_subcommand("chain", "push a point through a chain of moves");
    vchain->add_option("--from", opt.from)->required();
    vchain->add_option("--to", opt.to)->required();
    vchain->add_option("--seed", opt.seed);

    auto* orbit = app.add_subcommand("orbit", "every check on every word and move of a rank");
    orbit->add_option("--n", opt.n, "rank")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (*words)
            out = cmd_words(opt);
        else if (*diagram)
            out = cmd_diagram(opt);
        else if (*cone)
            out = cmd_cone(opt);
        else if (*polytope)
            out = cmd_polytope(opt);
        else if (*family)
            out = cmd_family(opt);
        else if (*smallness)
            out = cmd_smallness(opt);
        else if (*vmove)
            out = cmd_verify_move(opt);
        else if (*vchain)
            out = cmd_verify_chain(opt);
        else if (*orbit)
            out = cmd_orbit(opt);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotReduced& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MoveNotApplicable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RankTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        out.ok = false;
        out.results = {{"error", e.what()}};
    }

    std::vector<std::string> command(argv + 1, argv + argc);
    json doc = {{"schema", 1}, {"command", command}, {"ok", out.ok}, {"results", out.results}};
    if (opt.timing)
        doc["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << doc.dump(2) << "\n";
    if (!out.ok)
        std::cerr << "verification failed\n";
    return out.ok ? 0 : 1;
}
