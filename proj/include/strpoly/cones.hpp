// String-cone inequalities from rigorous paths, lambda-inequalities, and the
// H-representation of the string polytope.
//
// Every inequality is stored in the form  M . x <= rhs  with rhs in {0, 2};
// M doubles as the exponent vector of the corresponding family monomial.
#pragma once

#include <string>
#include <vector>

#include "strpoly/diagram.hpp"

namespace strpoly {

struct Switch {
    int crossing = 0;
    int from = 0;  // strand id
    int to = 0;
};

struct RigorousPath {
    int k = 0;
    /// Crossing indices in the order visited (endpoints b_k, b_{k+1} implicit).
    IntVec crossings;
    std::vector<Switch> switches;
};

struct Inequality {
    enum class Kind { String, Lambda };

    IntVec M;
    int rhs = 0;
    Kind kind = Kind::String;
    /// String: k of the first path producing it. Lambda: crossing index i.
    int index = 0;
    std::string id;
    /// Canonical (first) path, empty for lambda-inequalities.
    IntVec path;
    /// Number of rigorous paths (over all k) yielding this inequality.
    int multiplicity = 1;

    bool is_lambda() const { return kind == Kind::Lambda; }
};

/// Local traversal classes for the two forbidden fragments. At a crossing the
/// path continues on the same strand while the other strand shares its
/// orientation:
///   UpThroughLeft    both strands upward, path on the strand that is upper-left
///                    (lower id), i.e. travelling from lower-right to upper-left;
///   DownThroughRight both strands downward, path on the strand that is
///                    upper-right (higher id), travelling to the lower-left.
enum class Fragment { None, UpThroughLeft, DownThroughRight };

Fragment classify_straight_traversal(const Crossing& x, int strand, bool strand_up, bool other_up);

/// All rigorous paths from b_k to b_{k+1}, sorted lexicographically by crossing sequence.
std::vector<RigorousPath> rigorous_paths(const StringDiagram& diagram, int k);

/// Inequality of a rigorous path in <= 0 form (id left empty).
Inequality path_inequality(const RigorousPath& path, int N);

std::vector<Inequality> lambda_inequalities(const StringDiagram& diagram);

/// Lambda-inequalities L1..LN followed by the distinct string inequalities
/// S<k>.<serial> in (k, path order).
std::vector<Inequality> delta_hrep(const ReducedWord& word);

std::string format_inequality(const Inequality& ineq);

}  // namespace strpoly
