// Exact scalar types and Eigen aliases shared by every module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace strpoly {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixZ = Matrix<Integer>;
using VectorZ = Vector<Integer>;

using Index = Eigen::Index;

/// Integer exponent / coefficient vector used by the combinatorial modules.
using IntVec = std::vector<int>;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define STRPOLY_ERROR(Name)                  \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

STRPOLY_ERROR(InvalidInput);

#undef STRPOLY_ERROR

inline std::string to_string(const Rational& q)
{
    return q.str();
}

inline bool is_integral(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

inline VectorQ to_rational(const IntVec& v)
{
    VectorQ out(static_cast<Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        out(static_cast<Index>(i)) = v[i];
    return out;
}

inline Rational dot(const IntVec& m, const VectorQ& x)
{
    Rational s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0)
            s += m[i] * x(static_cast<Index>(i));
    return s;
}

/// Lexicographic order on Eigen vectors (Eigen provides none).
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b)
{
    const Index n = std::min(a.size(), b.size());
    for (Index i = 0; i < n; ++i) {
        if (a(i) < b(i))
            return true;
        if (b(i) < a(i))
            return false;
    }
    return a.size() < b.size();
}

}  // namespace strpoly
