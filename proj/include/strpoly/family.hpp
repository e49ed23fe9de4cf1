// The Laurent family f = 1 - sum_d a_d T^{M_d}, its combinatorial box
// equations, and the parameter space they cut out of the coefficient torus.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strpoly/algebra/lattice.hpp"
#include "strpoly/algebra/laurent.hpp"
#include "strpoly/cones.hpp"
#include "strpoly/diagram.hpp"
#include "strpoly/weyl.hpp"

namespace strpoly {

class ZeroCoordinate : public Error {
public:
    using Error::Error;
};
class BoxEquationViolated : public Error {
public:
    using Error::Error;
};

/// Coefficient symbol d belongs to inequality d of delta_hrep (lambdas first).
struct Family {
    ReducedWord word;
    std::vector<Inequality> inequalities;
    SymbolicLaurent f;

    std::size_t size() const { return inequalities.size(); }
    std::optional<std::size_t> find(const IntVec& M) const;
    std::optional<std::size_t> find(const std::string& id) const;
    /// Index of the lambda-inequality of crossing i (1-based).
    std::size_t lambda(int i) const { return static_cast<std::size_t>(i - 1); }
    std::vector<std::string> symbol_names() const;
};

Family build_family(const ReducedWord& word);

/// a_{p1} a_{lambda_top} = a_{p2} a_{lambda_bot}
struct BoxEquation {
    Box box;
    std::size_t p1 = 0, lambda_top = 0, p2 = 0, lambda_bot = 0;
    IntVec exponent;  // e_{p1} + e_{top} - e_{p2} - e_{bot}
};

struct ParamSpace {
    std::size_t r = 0;
    std::vector<BoxEquation> equations;  // deduplicated by exponent
    IntegerLattice lattice;
    Index dim = 0;
    Integer saturation_index = 1;

    bool satisfied_by(const std::vector<Rational>& a) const;
};

ParamSpace box_equations(const Family& family);

/// f(a, t). With `space`, `a` must also satisfy the box equations.
Rational evaluate_member(const Family& family, const std::vector<Rational>& a, const std::vector<Rational>& t,
                         const ParamSpace* space = nullptr);

/// A point of the identity component of the parameter space: a_d = prod_e s_e^{B_{d,e}}
/// for an integer basis B of the lattice's orthogonal complement and random
/// positive rationals s_e.
std::vector<Rational> sample_param(const ParamSpace& space, std::uint64_t seed);

/// Random positive rational p/q != 1 with p, q in [1, bound].
Rational random_positive(std::mt19937_64& rng, int bound = 5);

}  // namespace strpoly
