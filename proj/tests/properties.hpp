#pragma once

// Randomized subresultant property suites, shared by the unit tests and the acceptance run.
// Each returns the number of failing cases.

#include "offsetsing/oracle.hpp"
#include "offsetsing/subresultants.hpp"
#include "support.hpp"

namespace testsupport {

inline bool proportional(const TriPoly& a, const TriPoly& b)
{
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    Rat r = b.leading_term().second / a.leading_term().second;
    return a * r == b;
}

inline TriPoly specialize(const TriPoly& p, const Rat& x, const Rat& y)
{
    return p.substitute(Var::X, x).substitute(Var::Y, y);
}

// f = a h, g = b h with a, b coprime: the first nonzero Subres_j has j = deg h, is regular and
// proportional to h.
inline int planted_gcd_failures(int cases, std::uint64_t seed)
{
    Gen g(seed);
    int failures = 0;
    for (int k = 0; k < cases; ++k) {
        UniPoly h = g.uni(static_cast<int>(g.integer(1, 3)), 9);
        UniPoly a, b;
        do {
            a = g.uni(static_cast<int>(g.integer(1, 4)), 9);
            b = g.uni(static_cast<int>(g.integer(1, 4)), 9);
        } while (gcd(a, b).degree() != 0);
        UniPoly f = a * h, q = b * h;
        auto ch = chain(TriPoly::from_uni(f), f.degree(), TriPoly::from_uni(q), q.degree());
        std::size_t j = 0;
        while (j < ch.polys.size() && ch.polys[j].is_zero()) ++j;
        bool ok = static_cast<int>(j) == h.degree() && !ch.principal[j].is_zero() &&
                  ch.polys[j].eval_xy(0, 0).monic() == h.monic();
        failures += !ok;
    }
    return failures;
}

// Random P, Q in Z[x,y][t] and a rational point keeping both leading coefficients nonzero.
inline int specialization_failures(int cases, std::uint64_t seed)
{
    Gen g(seed);
    int failures = 0;
    for (int k = 0; k < cases; ++k) {
        int n = static_cast<int>(g.integer(1, 4)), m = static_cast<int>(g.integer(1, 4));
        TriPoly P = g.in_t(n, 2, 6), Q = g.in_t(m, 2, 6);
        Rat x0, y0;
        do {
            x0 = g.rational(6, 3);
            y0 = g.rational(6, 3);
        } while (specialize(P.t_coeff(n), x0, y0).is_zero() || specialize(Q.t_coeff(m), x0, y0).is_zero());
        auto full = chain(P, n, Q, m);
        auto spec = chain(specialize(P, x0, y0), n, specialize(Q, x0, y0), m);
        bool ok = true;
        for (std::size_t i = 0; i < full.polys.size(); ++i) {
            ok = ok && specialize(full.polys[i], x0, y0) == spec.polys[i];
            ok = ok && full.polys[i].degree(Var::T) <= static_cast<int>(i);
        }
        failures += !ok;
    }
    return failures;
}

// The leading coefficient of Q vanishes at the point: the evaluated chain is proportional to
// the chain of the specialized pair taken with its actual degree.
inline int degree_drop_failures(int cases, std::uint64_t seed)
{
    Gen g(seed);
    int failures = 0;
    for (int k = 0; k < cases; ++k) {
        int n = static_cast<int>(g.integer(2, 4)), m = static_cast<int>(g.integer(2, 4));
        Rat x0(g.integer(-3, 3));
        TriPoly P = g.in_t(n, 2, 6);
        std::vector<TriPoly> qc = g.in_t(m, 1, 6).t_coeffs();
        qc.back() = (TriPoly::variable(Var::X) - TriPoly::constant(x0)) * TriPoly::term(g.nonzero(5), 0, 1, 0);
        TriPoly Q = TriPoly::from_t_coeffs(qc);
        Rat y0 = g.rational(5, 2);
        TriPoly Ps = specialize(P, x0, y0), Qs = specialize(Q, x0, y0);
        if (Ps.degree(Var::T) != n || Qs.degree(Var::T) < 1) continue;
        auto full = chain(P, n, Q, m);
        auto actual = chain(Ps, n, Qs, Qs.degree(Var::T));
        for (std::size_t i = 0; i < actual.polys.size(); ++i)
            failures += !proportional(specialize(full.polys[i], x0, y0), actual.polys[i]);
    }
    return failures;
}

// Subres_0 against the oracle's own Sylvester determinant.
inline int resultant_failures(int cases, std::uint64_t seed)
{
    Gen g(seed);
    int failures = 0;
    for (int k = 0; k < cases; ++k) {
        int n = static_cast<int>(g.integer(1, 4)), m = static_cast<int>(g.integer(1, 4));
        int dxy = k % 2 == 0 ? 2 : 0;
        TriPoly P = g.in_t(n, dxy, 7), Q = g.in_t(m, dxy, 7);
        failures += !(chain(P, n, Q, m).polys[0] == oracle::sylvester_resultant(P, Q));
    }
    return failures;
}

}  // namespace testsupport
