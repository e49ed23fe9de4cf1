// Symbolic Laurent polynomials in t_1..t_N whose coefficients live in the
// group algebra Q[a_1^{+-1}, ..., a_r^{+-1}], optionally taken modulo a
// lattice of exponent relations (the box equations).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strpoly/algebra/lattice.hpp"
#include "strpoly/types.hpp"

namespace strpoly {

/// Sparse exponent vector over the coefficient symbols a_d; no zero entries.
using CoeffExponent = std::map<std::size_t, int>;

CoeffExponent operator+(const CoeffExponent& a, const CoeffExponent& b);
CoeffExponent operator-(const CoeffExponent& a);
CoeffExponent scaled(const CoeffExponent& a, int factor);
IntVec dense(const CoeffExponent& e, std::size_t dim);
CoeffExponent sparse(const IntVec& v);
/// Canonical coset representative modulo `lattice`.
CoeffExponent reduce(const CoeffExponent& e, const IntegerLattice& lattice);

struct CoeffMonomial {
    Rational scalar = 1;
    CoeffExponent exponents;

    static CoeffMonomial symbol(std::size_t d, int power = 1);

    CoeffMonomial inverse() const;
    CoeffMonomial pow(int e) const;
    bool is_zero() const { return scalar == 0; }
    bool operator==(const CoeffMonomial&) const = default;
};

CoeffMonomial operator*(const CoeffMonomial& a, const CoeffMonomial& b);

/// Element of the coefficient group algebra: a finite sum of CoeffMonomials.
class CoeffSum {
public:
    CoeffSum() = default;
    CoeffSum(const Rational& scalar);
    CoeffSum(const CoeffMonomial& m);

    const std::map<CoeffExponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// The single monomial, when the sum has exactly one term.
    std::optional<CoeffMonomial> as_monomial() const;

    CoeffSum& operator+=(const CoeffSum& o);
    CoeffSum& operator-=(const CoeffSum& o);
    CoeffSum operator-() const;
    CoeffSum reduced(const IntegerLattice& lattice) const;

    Rational evaluate(const std::vector<Rational>& a) const;

    bool operator==(const CoeffSum&) const = default;

private:
    void add(const CoeffExponent& e, const Rational& c);
    std::map<CoeffExponent, Rational> terms_;

    friend CoeffSum operator*(const CoeffSum& a, const CoeffSum& b);
};

CoeffSum operator+(CoeffSum a, const CoeffSum& b);
CoeffSum operator-(CoeffSum a, const CoeffSum& b);
CoeffSum operator*(const CoeffSum& a, const CoeffSum& b);

using TExponent = IntVec;

class SymbolicLaurent {
public:
    explicit SymbolicLaurent(std::size_t nvars = 0) : nvars_(nvars) {}

    static SymbolicLaurent constant(std::size_t nvars, const CoeffSum& c);
    static SymbolicLaurent monomial(const CoeffSum& c, const TExponent& e);
    /// t_q (0-based q).
    static SymbolicLaurent variable(std::size_t nvars, std::size_t q, int power = 1);

    std::size_t nvars() const { return nvars_; }
    const std::map<TExponent, CoeffSum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    SymbolicLaurent& operator+=(const SymbolicLaurent& o);
    SymbolicLaurent& operator-=(const SymbolicLaurent& o);
    SymbolicLaurent operator-() const;
    SymbolicLaurent pow(unsigned e) const;
    /// Merges coefficient monomials that agree modulo `lattice`.
    SymbolicLaurent reduced(const IntegerLattice& lattice) const;

    Rational evaluate(const std::vector<Rational>& a, const std::vector<Rational>& t) const;

    std::string str(const std::vector<std::string>& symbol_names = {}) const;

    bool operator==(const SymbolicLaurent& o) const { return terms_ == o.terms_; }

private:
    void add(const TExponent& e, const CoeffSum& c);
    std::size_t nvars_ = 0;
    std::map<TExponent, CoeffSum> terms_;

    friend SymbolicLaurent operator*(const SymbolicLaurent& a, const SymbolicLaurent& b);
};

SymbolicLaurent operator+(SymbolicLaurent a, const SymbolicLaurent& b);
SymbolicLaurent operator-(SymbolicLaurent a, const SymbolicLaurent& b);
SymbolicLaurent operator*(const SymbolicLaurent& a, const SymbolicLaurent& b);

SymbolicLaurent laurent_add(const SymbolicLaurent& x, const SymbolicLaurent& y);
SymbolicLaurent laurent_mul(const SymbolicLaurent& x, const SymbolicLaurent& y);

/// q with q * base == num, or nullopt when base does not divide num. The
/// leading and trailing coefficients of `base` (lex order on exponents) must
/// be single monomials. With `modulo`, coefficients are compared in the
/// quotient group algebra.
std::optional<SymbolicLaurent> exact_divide(const SymbolicLaurent& num, const SymbolicLaurent& base,
                                            const IntegerLattice* modulo = nullptr);

/// numerator / (base^power * monomial)
struct RationalExpr {
    SymbolicLaurent numerator;
    SymbolicLaurent base;
    int power = 0;
    CoeffMonomial monomial_coeff;
    TExponent monomial_exp;

    /// Divides out `base` while it divides the numerator.
    void normalize(const IntegerLattice* modulo = nullptr);
    /// The Laurent polynomial, when the denominator has cleared.
    std::optional<SymbolicLaurent> as_laurent(const IntegerLattice* modulo = nullptr) const;
};

/// A quotient of two symbolic Laurent polynomials, compared by cross-multiplication.
struct LaurentFraction {
    SymbolicLaurent num;
    SymbolicLaurent den;

    static LaurentFraction of(SymbolicLaurent n);
};

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);
bool equivalent(const LaurentFraction& a, const LaurentFraction& b, const IntegerLattice* modulo = nullptr);

}  // namespace strpoly
