// Braid moves acting on everything built from a word: the piecewise-linear
// map on string polytopes, its geometric lift between tori, the induced
// monomial map on coefficients, and checks that these are compatible.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strpoly/algebra/laurent.hpp"
#include "strpoly/family.hpp"
#include "strpoly/polytope.hpp"
#include "strpoly/weyl.hpp"

namespace strpoly {

class NotLaurent : public Error {
public:
    using Error::Error;
};
class MonomialMismatch : public Error {
public:
    using Error::Error;
};
class ClassificationViolation : public Error {
public:
    using Error::Error;
};

/// Positions (i, j, k) = (pos, pos+1, pos+2) of a 3-move, 1-based.
struct Triple {
    int i = 0, j = 0, k = 0;
};
Triple triple(const BraidMove& move);

/// (x_i, x_j, x_k) -> (max(x_k, x_j - x_i), x_i + x_k, min(x_i, x_j - x_k)); a
/// 2-move swaps x_pos and x_pos+1.
VectorQ pl_apply(const BraidMove& move, const VectorQ& x);

struct PLReport {
    bool ok = false;
    std::size_t source_points = 0;
    std::size_t target_points = 0;
    bool interior_point_maps = false;
    std::optional<IntVec> witness;  // a lattice point whose image misbehaves
};

PLReport pl_verify_polytope(const ReducedWord& word, const BraidMove& move);

/// Restriction (e_i, e_j, e_k) of an exponent vector to the move's positions.
using Piece = std::array<int, 3>;
Piece piece(const IntVec& M, const Triple& t);

struct ClassificationReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::vector<std::pair<Piece, Piece>> lambda_exchanges;  // per lambda index l
};

ClassificationReport classify_pieces(const ReducedWord& word, const BraidMove& move);

/// Substitution t = h_a(t'): t_i = D / t'_i, t_j = t'_i t'_k / C,
/// t_k = C t'_i t'_j / D with D = t'_i t'_k + C t'_j.
RationalExpr lift_substitute(const SymbolicLaurent& f, const Triple& t, const CoeffMonomial& C);

/// C = a_{lambda_k} / a_{lambda_i}.
CoeffMonomial lift_constant(const Family& family, const Triple& t);

/// Coefficient map g*: each target symbol as a monomial in source symbols,
/// canonical modulo the source box-equation lattice.
struct CoeffMap {
    std::size_t source_size = 0;
    std::vector<CoeffMonomial> image;

    std::vector<Rational> apply(const std::vector<Rational>& a) const;
    /// Exponent (over source symbols) of the pullback of a target exponent.
    IntVec pullback(const IntVec& target_exponent) const;
};

struct LiftResult {
    Family target;
    CoeffMap g;
    SymbolicLaurent pulled;  // h_a^* f, reduced modulo the source lattice
    bool table_consistent = false;
    std::vector<std::string> table_mismatches;
};

/// Pulls the source family back along h_a, certifies that the result is the
/// target family with coefficients g*(a), and cross-checks the exchange table.
LiftResult lift_pullback(const Family& source, const ParamSpace& source_space, const BraidMove& move);

struct BoxPreservation {
    bool ok = false;
    std::optional<std::size_t> witness;  // index of a target equation that fails
};

BoxPreservation verify_box_preservation(const ParamSpace& source, const ParamSpace& target, const CoeffMap& g);

/// Numeric lift h_a on a point of the target torus.
std::vector<Rational> lift_point(const std::vector<Rational>& tp, const Triple& t, const Rational& C);

struct RoundtripReport {
    bool symbolic_identity = false;
    bool numeric_spot_check = false;
    bool coefficient_identity = false;
};

RoundtripReport verify_roundtrip(const ReducedWord& word, const BraidMove& move);

struct TransportResult {
    Family target;
    std::vector<std::size_t> perm;  // source symbol -> target symbol
    bool monomials_match = false;
    bool lattice_match = false;
};

TransportResult two_move_transport(const Family& source, const ParamSpace& source_space, const BraidMove& move);

struct ChainReport {
    bool ok = false;
    std::vector<BraidMove> moves;
    std::optional<std::size_t> failing_move;
    std::string point_method;  // how the target point was found
    std::vector<Rational> target_point;
    std::vector<Rational> source_point;
    std::vector<Rational> source_coefficients;
    Rational source_value;
};

/// Samples a on the source parameter space, pushes it along the move chain,
/// finds an exact point on the target hypersurface and maps it back.
ChainReport chain_verify(const ReducedWord& a, const ReducedWord& b, std::uint64_t seed);

}  // namespace strpoly
