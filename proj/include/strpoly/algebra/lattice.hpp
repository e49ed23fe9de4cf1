// Integer lattices: Hermite and Smith normal forms, membership, saturation,
// canonical coset representatives and integer kernels.
#pragma once

#include <vector>

#include "strpoly/types.hpp"

namespace strpoly {

struct EchelonForm {
    MatrixZ rows;               // nonzero echelon rows only
    std::vector<Index> pivots;  // pivot column of each row; pivots are positive
};

/// Row Hermite normal form (pivots positive, entries above pivots reduced into [0, pivot)).
EchelonForm hermite_normal_form(MatrixZ m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(MatrixZ m);

/// Basis (as columns) of the integer kernel {x in Z^cols : m x = 0}.
MatrixZ integer_kernel(const MatrixZ& m);

Integer floor_div(const Integer& a, const Integer& b);

/// Sub-lattice of Z^dim spanned by integer generators.
class IntegerLattice {
public:
    IntegerLattice() = default;
    IntegerLattice(std::size_t dim, const std::vector<IntVec>& generators);

    std::size_t ambient_dim() const { return dim_; }
    Index rank() const { return hnf_.rows.rows(); }
    const std::vector<IntVec>& generators() const { return generators_; }
    const EchelonForm& hnf() const { return hnf_; }

    /// Canonical representative of v + L: pivot coordinates reduced into [0, pivot).
    IntVec reduce(const IntVec& v) const;
    bool contains(const IntVec& v) const;

    /// Index of L in its saturation (L_Q intersect Z^dim); 1 means saturated.
    Integer saturation_index() const;

    /// Integer basis of the orthogonal complement {x : <g, x> = 0 for all g}.
    std::vector<IntVec> orthogonal_basis() const;

private:
    std::size_t dim_ = 0;
    std::vector<IntVec> generators_;
    EchelonForm hnf_;
};

bool lattice_contains(const IntegerLattice& lattice, const IntVec& v);
Integer lattice_saturation_index(const IntegerLattice& lattice);

}  // namespace strpoly
