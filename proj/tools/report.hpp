// JSON encodings for CLI reports. Exact rationals become "p/q" strings;
// nlohmann's default object keeps keys sorted, so output is deterministic.
#pragma once

#include <json.hpp>

#include "strpoly/cones.hpp"
#include "strpoly/diagram.hpp"
#include "strpoly/lifting.hpp"
#include "strpoly/weyl.hpp"

namespace strpoly::report {

using json = nlohmann::json;

inline json rational(const Rational& q)
{
    return q.str();
}

inline json vector(const VectorQ& v)
{
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(rational(v(i)));
    return out;
}

inline json vector(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(rational(q));
    return out;
}

inline json word(const ReducedWord& w)
{
    return w.str();
}

inline json move(const BraidMove& m)
{
    return {{"kind", m.kind == BraidMove::Kind::Two ? "two" : "three"}, {"pos", m.pos}};
}

inline json inequality(const Inequality& q)
{
    json out = {{"id", q.id}, {"M", q.M}, {"rhs", q.rhs}, {"kind", q.is_lambda() ? "lambda" : "string"},
                {"text", format_inequality(q)}};
    if (!q.is_lambda()) {
        out["k"] = q.index;
        out["path"] = q.path;
        out["multiplicity"] = q.multiplicity;
    }
    return out;
}

inline json box(const Box& b)
{
    return {{"top", b.top}, {"bot", b.bot}, {"corridor", b.corridor}};
}

inline json coeff_monomial(const CoeffMonomial& m, const std::vector<std::string>& names)
{
    json exps = json::object();
    for (const auto& [d, e] : m.exponents)
        exps[names.at(d)] = e;
    return {{"scalar", rational(m.scalar)}, {"exponents", exps}};
}

inline json check(bool ok, json detail = json::object())
{
    detail["pass"] = ok;
    return detail;
}

}  // namespace strpoly::report
