#include "strpoly/algebra/laurent.hpp"

#include <sstream>

namespace strpoly {

namespace {

Rational ipow(const Rational& x, int e)
{
    Rational base = e < 0 ? Rational(1) / x : x;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    Rational out = 1;
    while (n) {
        if (n & 1u)
            out *= base;
        base *= base;
        n >>= 1u;
    }
    return out;
}

TExponent add_exp(const TExponent& a, const TExponent& b)
{
    TExponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

TExponent sub_exp(const TExponent& a, const TExponent& b)
{
    TExponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

}  // namespace

CoeffExponent operator+(const CoeffExponent& a, const CoeffExponent& b)
{
    CoeffExponent out = a;
    for (const auto& [d, e] : b) {
        const int v = (out[d] += e);
        if (v == 0)
            out.erase(d);
    }
    return out;
}

CoeffExponent operator-(const CoeffExponent& a)
{
    return scaled(a, -1);
}

CoeffExponent scaled(const CoeffExponent& a, int factor)
{
    CoeffExponent out;
    if (factor == 0)
        return out;
    for (const auto& [d, e] : a)
        out[d] = e * factor;
    return out;
}

IntVec dense(const CoeffExponent& e, std::size_t dim)
{
    IntVec out(dim, 0);
    for (const auto& [d, x] : e) {
        if (d >= dim)
            throw InvalidInput("coefficient symbol outside the lattice dimension");
        out[d] = x;
    }
    return out;
}

CoeffExponent sparse(const IntVec& v)
{
    CoeffExponent out;
    for (std::size_t d = 0; d < v.size(); ++d)
        if (v[d] != 0)
            out[d] = v[d];
    return out;
}

CoeffExponent reduce(const CoeffExponent& e, const IntegerLattice& lattice)
{
    return sparse(lattice.reduce(dense(e, lattice.ambient_dim())));
}

CoeffMonomial CoeffMonomial::symbol(std::size_t d, int power)
{
    CoeffMonomial m;
    if (power != 0)
        m.exponents[d] = power;
    return m;
}

CoeffMonomial CoeffMonomial::inverse() const
{
    if (scalar == 0)
        throw Error("inverse of a zero coefficient");
    return {Rational(1) / scalar, -exponents};
}

CoeffMonomial CoeffMonomial::pow(int e) const
{
    return {ipow(scalar, e), scaled(exponents, e)};
}

CoeffMonomial operator*(const CoeffMonomial& a, const CoeffMonomial& b)
{
    return {a.scalar * b.scalar, a.exponents + b.exponents};
}

// ---- CoeffSum -------------------------------------------------------------

CoeffSum::CoeffSum(const Rational& scalar)
{
    add({}, scalar);
}

CoeffSum::CoeffSum(const CoeffMonomial& m)
{
    add(m.exponents, m.scalar);
}

void CoeffSum::add(const CoeffExponent& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::optional<CoeffMonomial> CoeffSum::as_monomial() const
{
    if (terms_.size() != 1)
        return std::nullopt;
    return CoeffMonomial{terms_.begin()->second, terms_.begin()->first};
}

CoeffSum& CoeffSum::operator+=(const CoeffSum& o)
{
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

CoeffSum& CoeffSum::operator-=(const CoeffSum& o)
{
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

CoeffSum CoeffSum::operator-() const
{
    CoeffSum out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

CoeffSum CoeffSum::reduced(const IntegerLattice& lattice) const
{
    CoeffSum out;
    for (const auto& [e, c] : terms_)
        out.add(reduce(e, lattice), c);
    return out;
}

Rational CoeffSum::evaluate(const std::vector<Rational>& a) const
{
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (const auto& [d, x] : e)
            term *= ipow(a.at(d), x);
        total += term;
    }
    return total;
}

CoeffSum operator+(CoeffSum a, const CoeffSum& b)
{
    return a += b;
}

CoeffSum operator-(CoeffSum a, const CoeffSum& b)
{
    return a -= b;
}

CoeffSum operator*(const CoeffSum& a, const CoeffSum& b)
{
    CoeffSum out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add(ea + eb, ca * cb);
    return out;
}

// ---- SymbolicLaurent ------------------------------------------------------

SymbolicLaurent SymbolicLaurent::constant(std::size_t nvars, const CoeffSum& c)
{
    SymbolicLaurent p(nvars);
    p.add(TExponent(nvars, 0), c);
    return p;
}

SymbolicLaurent SymbolicLaurent::monomial(const CoeffSum& c, const TExponent& e)
{
    SymbolicLaurent p(e.size());
    p.add(e, c);
    return p;
}

SymbolicLaurent SymbolicLaurent::variable(std::size_t nvars, std::size_t q, int power)
{
    TExponent e(nvars, 0);
    e.at(q) = power;
    return monomial(CoeffSum(Rational(1)), e);
}

void SymbolicLaurent::add(const TExponent& e, const CoeffSum& c)
{
    if (e.size() != nvars_)
        throw InvalidInput("Laurent term has the wrong number of variables");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymbolicLaurent& SymbolicLaurent::operator+=(const SymbolicLaurent& o)
{
    if (nvars_ == 0 && terms_.empty())
        nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

SymbolicLaurent& SymbolicLaurent::operator-=(const SymbolicLaurent& o)
{
    if (nvars_ == 0 && terms_.empty())
        nvars_ = o.nvars_;
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

SymbolicLaurent SymbolicLaurent::operator-() const
{
    SymbolicLaurent out(nvars_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

SymbolicLaurent SymbolicLaurent::pow(unsigned e) const
{
    SymbolicLaurent out = constant(nvars_, CoeffSum(Rational(1)));
    for (unsigned i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

SymbolicLaurent SymbolicLaurent::reduced(const IntegerLattice& lattice) const
{
    SymbolicLaurent out(nvars_);
    for (const auto& [e, c] : terms_)
        out.add(e, c.reduced(lattice));
    return out;
}

Rational SymbolicLaurent::evaluate(const std::vector<Rational>& a, const std::vector<Rational>& t) const
{
    if (t.size() != nvars_)
        throw InvalidInput("point has the wrong number of coordinates");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c.evaluate(a);
        for (std::size_t q = 0; q < e.size(); ++q)
            if (e[q] != 0)
                term *= ipow(t[q], e[q]);
        total += term;
    }
    return total;
}

std::string SymbolicLaurent::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first_term = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (const auto& [ce, c] : it->second.terms()) {
            out << (first_term ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first_term = false;
            const Rational mag = abs(c);
            bool bare = true;
            if (mag != 1) {
                out << mag;
                bare = false;
            }
            for (const auto& [d, x] : ce) {
                out << (bare ? "" : "*") << (d < names.size() ? names[d] : "a" + std::to_string(d + 1));
                if (x != 1)
                    out << "^" << x;
                bare = false;
            }
            for (std::size_t q = 0; q < it->first.size(); ++q) {
                if (it->first[q] == 0)
                    continue;
                out << (bare ? "" : "*") << "t" << q + 1;
                if (it->first[q] != 1)
                    out << "^" << it->first[q];
                bare = false;
            }
            if (bare)
                out << "1";
        }
    }
    return out.str();
}

SymbolicLaurent operator+(SymbolicLaurent a, const SymbolicLaurent& b)
{
    return a += b;
}

SymbolicLaurent operator-(SymbolicLaurent a, const SymbolicLaurent& b)
{
    return a -= b;
}

SymbolicLaurent operator*(const SymbolicLaurent& a, const SymbolicLaurent& b)
{
    SymbolicLaurent out(a.nvars_ ? a.nvars_ : b.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add(add_exp(ea, eb), ca * cb);
    return out;
}

SymbolicLaurent laurent_add(const SymbolicLaurent& x, const SymbolicLaurent& y)
{
    return x + y;
}

SymbolicLaurent laurent_mul(const SymbolicLaurent& x, const SymbolicLaurent& y)
{
    return x * y;
}

std::optional<SymbolicLaurent> exact_divide(const SymbolicLaurent& num, const SymbolicLaurent& base,
                                            const IntegerLattice* modulo)
{
    if (base.is_zero())
        throw InvalidInput("division by zero Laurent polynomial");
    const auto lead = *base.terms().rbegin();
    const auto trail = *base.terms().begin();
    const auto lead_coeff = lead.second.as_monomial();
    if (!lead_coeff || !trail.second.as_monomial())
        throw InvalidInput("divisor must have monomial leading and trailing coefficients");
    const CoeffSum lead_inv(lead_coeff->inverse());

    SymbolicLaurent rem = modulo ? num.reduced(*modulo) : num;
    SymbolicLaurent quotient(num.nvars());
    if (rem.is_zero())
        return quotient;
    // Every quotient exponent is bounded below by trailing(num) - trailing(base).
    const TExponent floor = sub_exp(rem.terms().begin()->first, trail.first);

    constexpr int kMaxSteps = 1 << 20;
    for (int step = 0; !rem.is_zero(); ++step) {
        if (step == kMaxSteps)
            throw Error("exact_divide did not terminate");
        const auto& [alpha, c] = *rem.terms().rbegin();
        const TExponent beta = sub_exp(alpha, lead.first);
        if (beta < floor)
            return std::nullopt;
        CoeffSum qc = c * lead_inv;
        if (modulo)
            qc = qc.reduced(*modulo);
        const SymbolicLaurent qt = SymbolicLaurent::monomial(qc, beta);
        quotient += qt;
        rem -= qt * base;
        if (modulo)
            rem = rem.reduced(*modulo);
    }
    return quotient;
}

void RationalExpr::normalize(const IntegerLattice* modulo)
{
    while (power > 0) {
        auto q = exact_divide(numerator, base, modulo);
        if (!q)
            break;
        numerator = std::move(*q);
        --power;
    }
}

std::optional<SymbolicLaurent> RationalExpr::as_laurent(const IntegerLattice* modulo) const
{
    if (power != 0)
        return std::nullopt;
    TExponent inv(monomial_exp.size());
    for (std::size_t i = 0; i < inv.size(); ++i)
        inv[i] = -monomial_exp[i];
    SymbolicLaurent out =
        numerator * SymbolicLaurent::monomial(CoeffSum(monomial_coeff.inverse()), inv.empty() ? TExponent(numerator.nvars(), 0) : inv);
    return modulo ? out.reduced(*modulo) : out;
}

LaurentFraction LaurentFraction::of(SymbolicLaurent n)
{
    const std::size_t nv = n.nvars();
    return {std::move(n), SymbolicLaurent::constant(nv, CoeffSum(Rational(1)))};
}

LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b)
{
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b)
{
    return {a.num * b.num, a.den * b.den};
}

LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b)
{
    if (b.num.is_zero())
        throw Error("division by a zero fraction");
    return {a.num * b.den, a.den * b.num};
}

bool equivalent(const LaurentFraction& a, const LaurentFraction& b, const IntegerLattice* modulo)
{
    SymbolicLaurent diff = a.num * b.den - b.num * a.den;
    if (modulo)
        diff = diff.reduced(*modulo);
    return diff.is_zero();
}

}  // namespace strpoly
