#include "strpoly/polytope.hpp"

#include <algorithm>
#include <set>

#include "strpoly/algebra/lattice.hpp"
#include "strpoly/diagram.hpp"
#include "strpoly/linalg.hpp"

namespace strpoly {

std::vector<Halfspace> halfspaces(const std::vector<Inequality>& hrep)
{
    std::vector<Halfspace> out;
    out.reserve(hrep.size());
    for (const auto& ineq : hrep)
        out.push_back({to_rational(ineq.M), Rational(ineq.rhs)});
    return out;
}

bool ExactPolytope::full_dimensional() const
{
    return linalg::affine_rank(vertices) == dim;
}

std::vector<std::size_t> ExactPolytope::facet_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < facet.size(); ++h)
        if (facet[h])
            out.push_back(h);
    return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
    VectorQ y;
    Bits zero;
};

// Scales v to a primitive integer vector (same direction).
void make_primitive(VectorQ& v)
{
    Integer l = 1;
    for (Index i = 0; i < v.size(); ++i)
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(v(i))));
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) {
        v(i) *= l;
        g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::numerator(v(i))));
    }
    if (g > 1)
        for (Index i = 0; i < v.size(); ++i)
            v(i) /= g;
}

}  // namespace

ExactPolytope vertices(const std::vector<Halfspace>& hrep, Index dim)
{
    // Cone {(x, s) : normal . x - rhs s <= 0, -s <= 0}; vertices are its rays with s > 0.
    const Index d1 = dim + 1;
    const std::size_t m = hrep.size() + 1;
    MatrixQ A(static_cast<Index>(m), d1);
    for (std::size_t h = 0; h < hrep.size(); ++h) {
        if (hrep[h].normal.size() != dim)
            throw InvalidInput("halfspace has the wrong dimension");
        A.row(static_cast<Index>(h)).head(dim) = hrep[h].normal.transpose();
        A(static_cast<Index>(h), dim) = -hrep[h].rhs;
    }
    A.row(static_cast<Index>(m - 1)).setZero();
    A(static_cast<Index>(m - 1), dim) = -1;

    // Initial simplicial cone from d+1 independent rows.
    std::vector<std::size_t> basis;
    MatrixQ B(0, d1);
    for (std::size_t r = 0; r < m && static_cast<Index>(basis.size()) < d1; ++r) {
        MatrixQ trial(B.rows() + 1, d1);
        trial << B, A.row(static_cast<Index>(r));
        if (linalg::rank(trial) == trial.rows()) {
            B = trial;
            basis.push_back(r);
        }
    }
    if (static_cast<Index>(basis.size()) < d1)
        throw Unbounded("inequalities do not cut out a pointed region");

    std::vector<Ray> rays;
    for (Index j = 0; j < d1; ++j) {
        VectorQ rhs = VectorQ::Zero(d1);
        rhs(j) = -1;
        auto y = linalg::solve<Rational>(B, rhs);
        make_primitive(*y);
        Bits zero(m);
        for (Index r = 0; r < d1; ++r)
            if (r != j)
                zero.set(basis[static_cast<std::size_t>(r)]);
        rays.push_back({std::move(*y), std::move(zero)});
    }

    std::vector<bool> processed(m, false);
    for (std::size_t b : basis)
        processed[b] = true;

    for (std::size_t r = 0; r < m; ++r) {
        if (processed[r])
            continue;
        const auto a = A.row(static_cast<Index>(r));
        std::vector<Rational> val(rays.size());
        std::vector<std::size_t> plus, minus;
        for (std::size_t q = 0; q < rays.size(); ++q) {
            val[q] = a.dot(rays[q].y.transpose());
            if (val[q] > 0)
                plus.push_back(q);
            else if (val[q] < 0)
                minus.push_back(q);
        }
        std::vector<Ray> next;
        for (std::size_t q = 0; q < rays.size(); ++q)
            if (val[q] <= 0) {
                Ray ray = rays[q];
                if (val[q] == 0)
                    ray.zero.set(r);
                next.push_back(std::move(ray));
            }
        for (std::size_t p : plus)
            for (std::size_t q : minus) {
                const Bits common = rays[p].zero & rays[q].zero;
                if (static_cast<Index>(common.count()) < dim - 1)
                    continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != q && common.is_subset_of(rays[o].zero))
                        adjacent = false;
                if (!adjacent)
                    continue;
                VectorQ y = val[p] * rays[q].y - val[q] * rays[p].y;
                make_primitive(y);
                Bits zero = common;
                zero.set(r);
                next.push_back({std::move(y), std::move(zero)});
            }
        rays = std::move(next);
        processed[r] = true;
    }

    ExactPolytope poly;
    poly.dim = dim;
    poly.hrep = hrep;
    bool at_infinity = false;
    for (const auto& ray : rays) {
        if (ray.y(dim) == 0) {
            at_infinity = true;
            continue;
        }
        poly.vertices.push_back(ray.y.head(dim) / ray.y(dim));
    }
    if (poly.vertices.empty())
        throw Empty("inequalities are infeasible");
    if (at_infinity)
        throw Unbounded("region has a recession direction");
    std::sort(poly.vertices.begin(), poly.vertices.end(), lex_less<Rational>);

    const std::size_t nv = poly.vertices.size();
    poly.tight.assign(hrep.size(), Bits(nv));
    poly.facet.assign(hrep.size(), false);
    for (std::size_t h = 0; h < hrep.size(); ++h) {
        std::vector<VectorQ> on;
        for (std::size_t v = 0; v < nv; ++v)
            if (hrep[h].normal.dot(poly.vertices[v]) == hrep[h].rhs) {
                poly.tight[h].set(v);
                on.push_back(poly.vertices[v]);
            }
        poly.facet[h] = !on.empty() && linalg::affine_rank(on) == dim - 1;
    }
    return poly;
}

ExactPolytope vertices(const std::vector<Inequality>& hrep)
{
    if (hrep.empty())
        throw InvalidInput("empty H-representation");
    return vertices(halfspaces(hrep), static_cast<Index>(hrep.front().M.size()));
}

VectorQ lambda_apex(const ReducedWord& word)
{
    const auto lambdas = lambda_inequalities(StringDiagram(word));
    const Index N = word.length();
    VectorQ x = VectorQ::Zero(N);
    for (Index i = N - 1; i >= 0; --i) {
        const auto& M = lambdas[static_cast<std::size_t>(i)].M;
        Rational s = lambdas[static_cast<std::size_t>(i)].rhs;
        for (Index j = i + 1; j < N; ++j)
            s -= M[static_cast<std::size_t>(j)] * x(j);
        x(i) = s;  // M_i = 1 on the diagonal
    }
    return x;
}

VectorQ interior_point(const ReducedWord& word, const ExactPolytope& delta)
{
    const VectorQ P = lambda_apex(word) / 2;
    for (std::size_t h = 0; h < delta.hrep.size(); ++h) {
        const Rational slack = delta.hrep[h].rhs - delta.hrep[h].normal.dot(P);
        if (slack <= 0)
            throw NormalizationFailure("half the apex is not interior (inequality " + std::to_string(h + 1) + ")");
        if (delta.facet[h] && slack != 1)
            throw NormalizationFailure("facet " + std::to_string(h + 1) + " has b - M.P = " + to_string(slack));
    }
    return P;
}

DualPolytope dual_polytope(const ExactPolytope& delta, const VectorQ& P)
{
    DualPolytope out;
    std::vector<Halfspace> dual_h;
    for (const auto& v : delta.vertices)
        dual_h.push_back({v - P, Rational(1)});
    out.poly = vertices(dual_h, delta.dim);

    for (const auto& v : out.poly.vertices)
        for (Index i = 0; i < v.size(); ++i)
            if (!is_integral(v(i)))
                throw NonIntegralDual("dual vertex has coordinate " + to_string(v(i)));

    std::vector<bool> matched(out.poly.vertices.size(), false);
    out.vertex_of.assign(delta.hrep.size(), std::nullopt);
    for (std::size_t h = 0; h < delta.hrep.size(); ++h) {
        const auto& hs = delta.hrep[h];
        out.points.push_back(hs.normal / (hs.rhs - hs.normal.dot(P)));
        if (!delta.facet[h]) {
            out.non_facet.push_back(h);
            continue;
        }
        const auto it = std::find(out.poly.vertices.begin(), out.poly.vertices.end(), out.points.back());
        if (it == out.poly.vertices.end())
            throw Error("facet " + std::to_string(h + 1) + " has no matching dual vertex");
        const auto idx = static_cast<std::size_t>(it - out.poly.vertices.begin());
        out.vertex_of[h] = idx;
        matched[idx] = true;
    }
    if (std::find(matched.begin(), matched.end(), false) != matched.end())
        throw Error("dual vertex not accounted for by any facet");
    return out;
}

std::vector<std::size_t> f_vector(const ExactPolytope& poly)
{
    const auto d = static_cast<std::size_t>(poly.dim);
    std::vector<std::set<Bits>> level(d + 1);
    Bits all(poly.vertices.size());
    all.set();
    level[d].insert(all);
    std::set<Bits> facets;
    for (std::size_t h = 0; h < poly.hrep.size(); ++h)
        if (poly.facet[h])
            facets.insert(poly.tight[h]);
    // Each (k-1)-face of a k-face F is an inclusion-maximal proper F & G, G a facet.
    for (std::size_t k = d; k >= 1; --k) {
        for (const auto& F : level[k]) {
            std::vector<Bits> cand;
            for (const auto& G : facets) {
                Bits c = F & G;
                if (c.any() && c != F)
                    cand.push_back(std::move(c));
            }
            for (const auto& c : cand) {
                const bool maximal = std::none_of(cand.begin(), cand.end(), [&](const Bits& o) {
                    return o != c && c.is_subset_of(o);
                });
                if (maximal)
                    level[k - 1].insert(c);
            }
        }
    }
    std::vector<std::size_t> out;
    for (const auto& l : level)
        out.push_back(l.size());
    return out;
}

QuadrupleTest facet_quadruple_test(const DualPolytope& dual, const std::vector<std::size_t>& quad, int top,
                                   int bot)
{
    QuadrupleTest out;
    out.on_common_facet = true;
    for (const auto& v : dual.poly.vertices)
        out.values.push_back(v(top - 1) - v(bot - 1) + 1);
    std::vector<bool> in_quad(out.values.size(), false);
    for (std::size_t q : quad) {
        const auto& idx = dual.vertex_of.at(q);
        if (!idx) {
            out.on_common_facet = false;
            continue;
        }
        in_quad[*idx] = true;
    }
    for (std::size_t v = 0; v < out.values.size(); ++v)
        if (in_quad[v] ? out.values[v] != 0 : out.values[v] < 0)
            out.on_common_facet = false;
    return out;
}

namespace {

// Piecewise-linear functions on a complete fan, counted through their values
// on the rays: within each maximal cone they must agree with one linear form.
FanRanks support_ranks(const std::vector<VectorQ>& rays, const std::vector<std::vector<Index>>& cones, Index dim)
{
    const auto R = static_cast<Index>(rays.size());
    std::vector<VectorQ> rows;
    for (const auto& cone : cones) {
        MatrixQ U(dim, static_cast<Index>(cone.size()));
        for (std::size_t c = 0; c < cone.size(); ++c)
            U.col(static_cast<Index>(c)) = rays[static_cast<std::size_t>(cone[c])];
        if (linalg::rank(U) != dim)
            throw DegenerateFan("maximal cone is not full-dimensional");
        const MatrixQ K = linalg::nullspace(U);
        for (Index c = 0; c < K.cols(); ++c) {
            VectorQ row = VectorQ::Zero(R);
            for (std::size_t e = 0; e < cone.size(); ++e)
                row(cone[e]) = K(static_cast<Index>(e), c);
            rows.push_back(std::move(row));
        }
    }
    MatrixQ constraints(static_cast<Index>(rows.size()), R);
    for (std::size_t r = 0; r < rows.size(); ++r)
        constraints.row(static_cast<Index>(r)) = rows[r].transpose();
    const Index support_dim = R - (rows.empty() ? 0 : linalg::rank(constraints));
    return {R - dim, support_dim - dim};
}

}  // namespace

FanRanks fan_ranks(const ExactPolytope& poly)
{
    if (!poly.full_dimensional())
        throw DegenerateFan("polytope is not full-dimensional");
    const auto facets = poly.facet_indices();
    std::vector<VectorQ> rays;
    for (std::size_t f : facets)
        rays.push_back(poly.hrep[f].normal);
    std::vector<std::vector<Index>> cones(poly.vertices.size());
    for (std::size_t v = 0; v < poly.vertices.size(); ++v)
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (poly.tight[facets[f]].test(v))
                cones[v].push_back(static_cast<Index>(f));
    return support_ranks(rays, cones, poly.dim);
}

FanRanks face_fan_ranks(const ExactPolytope& poly)
{
    if (!poly.full_dimensional())
        throw DegenerateFan("polytope is not full-dimensional");
    for (const auto& h : poly.hrep)
        if (h.rhs <= 0)
            throw DegenerateFan("origin is not interior");
    std::vector<std::vector<Index>> cones;
    for (std::size_t f : poly.facet_indices()) {
        std::vector<Index> cone;
        for (std::size_t v = 0; v < poly.vertices.size(); ++v)
            if (poly.tight[f].test(v))
                cone.push_back(static_cast<Index>(v));
        cones.push_back(std::move(cone));
    }
    return support_ranks(poly.vertices, cones, poly.dim);
}

std::vector<IntVec> lattice_points(const std::vector<Inequality>& hrep, const ExactPolytope& poly)
{
    const auto N = static_cast<std::size_t>(poly.dim);
    IntVec lo(N), hi(N);
    for (std::size_t i = 0; i < N; ++i) {
        Rational mn = poly.vertices.front()(static_cast<Index>(i)), mx = mn;
        for (const auto& v : poly.vertices) {
            mn = std::min(mn, Rational(v(static_cast<Index>(i))));
            mx = std::max(mx, Rational(v(static_cast<Index>(i))));
        }
        const Integer flo = floor_div(boost::multiprecision::numerator(mn), boost::multiprecision::denominator(mn));
        const Integer fhi = floor_div(boost::multiprecision::numerator(mx), boost::multiprecision::denominator(mx));
        lo[i] = flo.convert_to<int>() + (Rational(flo) == mn ? 0 : 1);
        hi[i] = fhi.convert_to<int>();
    }
    std::vector<IntVec> out;
    IntVec x = lo;
    for (;;) {
        const bool inside = std::all_of(hrep.begin(), hrep.end(), [&](const Inequality& q) {
            long s = 0;
            for (std::size_t i = 0; i < N; ++i)
                s += static_cast<long>(q.M[i]) * x[i];
            return s <= q.rhs;
        });
        if (inside)
            out.push_back(x);
        std::size_t i = N;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            if (i == 0)
                return out;
        }
        if (N == 0)
            return out;
    }
}

}  // namespace strpoly
