// Exact polyhedral geometry over the rationals: double-description vertex
// enumeration, the string polytope's apex, interior point and polar dual,
// face counts, and ranks attached to the normal fan.
#pragma once

#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "strpoly/cones.hpp"
#include "strpoly/types.hpp"
#include "strpoly/weyl.hpp"

namespace strpoly {

class Unbounded : public Error {
public:
    using Error::Error;
};
class Empty : public Error {
public:
    using Error::Error;
};
class NormalizationFailure : public Error {
public:
    using Error::Error;
};
class NonIntegralDual : public Error {
public:
    using Error::Error;
};
class DegenerateFan : public Error {
public:
    using Error::Error;
};

/// normal . x <= rhs
struct Halfspace {
    VectorQ normal;
    Rational rhs;
};

std::vector<Halfspace> halfspaces(const std::vector<Inequality>& hrep);

struct ExactPolytope {
    Index dim = 0;
    std::vector<Halfspace> hrep;
    std::vector<VectorQ> vertices;            // lexicographically sorted
    std::vector<boost::dynamic_bitset<>> tight;  // tight[h][v]: vertex v on halfspace h
    std::vector<bool> facet;                  // halfspace h supports a facet

    bool full_dimensional() const;
    std::vector<std::size_t> facet_indices() const;
};

/// Incremental double description on the homogenized cone.
ExactPolytope vertices(const std::vector<Halfspace>& hrep, Index dim);
ExactPolytope vertices(const std::vector<Inequality>& hrep);

/// The point where every lambda-inequality is tight (unitriangular system).
VectorQ lambda_apex(const ReducedWord& word);

/// apex / 2, checked to satisfy b_d - M_d . P = 1 on every facet of `delta`.
VectorQ interior_point(const ReducedWord& word, const ExactPolytope& delta);

struct DualPolytope {
    ExactPolytope poly;
    /// Per inequality of the primal: its dual point M_d / (b_d - M_d . P).
    std::vector<VectorQ> points;
    /// Per inequality: index into poly.vertices, or nullopt for a non-facet.
    std::vector<std::optional<std::size_t>> vertex_of;
    std::vector<std::size_t> non_facet;
};

/// Polar dual {y : <y, x - P> <= 1 on delta}. Vertices come from a separate
/// double description run and are matched against the facet points.
DualPolytope dual_polytope(const ExactPolytope& delta, const VectorQ& P);

/// f_0, ..., f_dim; the last entry counts the polytope itself.
std::vector<std::size_t> f_vector(const ExactPolytope& poly);

struct QuadrupleTest {
    bool on_common_facet = false;
    std::vector<Rational> values;  // L on every dual vertex, in vertex order
};

/// L(y) = y_top - y_bot + 1 (crossing indices 1-based) on the dual's vertices:
/// zero on the four named inequalities' vertices and nonnegative elsewhere.
QuadrupleTest facet_quadruple_test(const DualPolytope& dual, const std::vector<std::size_t>& quad, int top,
                                   int bot);

struct FanRanks {
    Index class_rank = 0;
    Index picard_rank = 0;
};

/// Ranks of the toric variety of the normal fan (rays: facet normals,
/// maximal cones: one per vertex), over the rationals.
FanRanks fan_ranks(const ExactPolytope& poly);

/// Ranks for the fan over the faces of `poly` (rays: vertices, maximal cones:
/// facets). The origin must be interior. For a dual polytope this is the fan
/// whose rays are the family's exponent vectors.
FanRanks face_fan_ranks(const ExactPolytope& poly);

/// Integer points, lexicographically ordered. Requires integral bounds.
std::vector<IntVec> lattice_points(const std::vector<Inequality>& hrep, const ExactPolytope& poly);

}  // namespace strpoly
