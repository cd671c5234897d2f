#include "offsetsing/offset_builder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace offsetsing {

namespace {

// Scale a family of polynomials jointly to coprime integer coefficients; returns the
// positive factor applied.
Rat joint_integer_scale(const std::vector<const UniPoly*>& ps)
{
    Int l = 1, g = 0;
    for (const UniPoly* p : ps)
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const UniPoly* p : ps)
        for (const auto& c : p->coeffs()) {
            Int v = c.get_num() * (l / c.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    if (g == 0) return 1;
    Rat s(l, g);
    s.canonicalize();
    return s;
}

TriPoly linear_in(Var v, const UniPoly& W, const UniPoly& X)
{
    // W(t) * v - X(t)
    return TriPoly::from_uni(W) * TriPoly::variable(v) - TriPoly::from_uni(X);
}

}  // namespace

TriPoly divide_in_t(const TriPoly& p, const UniPoly& q)
{
    if (q.degree() == 0) return p * (1 / q.lead());
    std::map<std::pair<int, int>, std::vector<Rat>> groups;
    for (const auto& [e, c] : p.terms()) {
        auto& v = groups[{e.x, e.y}];
        if (v.size() <= static_cast<std::size_t>(e.t)) v.resize(static_cast<std::size_t>(e.t) + 1);
        v[static_cast<std::size_t>(e.t)] = c;
    }
    TriPoly out;
    for (const auto& [key, coeffs] : groups) {
        UniPoly quo = divide_exact(UniPoly(coeffs), q);
        for (int k = 0; k <= quo.degree(); ++k)
            out += TriPoly::term(quo.coeff(k), key.first, key.second, k);
    }
    return out;
}

CurveSpec normalize_curve(CurveSpec raw)
{
    if (raw.W.is_zero()) throw InputError("W must not be identically zero");
    if (raw.d <= 0) throw InputError("distance must be positive");
    UniPoly g = gcd(gcd(raw.X, raw.Y), raw.W);
    if (g.degree() > 0) {
        raw.X = raw.X.is_zero() ? raw.X : divide_exact(raw.X, g);
        raw.Y = raw.Y.is_zero() ? raw.Y : divide_exact(raw.Y, g);
        raw.W = divide_exact(raw.W, g);
    }
    Rat s = joint_integer_scale({&raw.X, &raw.Y, &raw.W});
    if (raw.W.lead() < 0) s = -s;
    raw.X *= s;
    raw.Y *= s;
    raw.W *= s;
    UniPoly U = raw.X.derivative() * raw.W - raw.X * raw.W.derivative();
    UniPoly V = raw.Y.derivative() * raw.W - raw.Y * raw.W.derivative();
    if (U.is_zero() && V.is_zero()) throw InputError("degenerate curve: X/W and Y/W are both constant");
    return raw;
}

NormalData derive_normals(const CurveSpec& c)
{
    NormalData n;
    n.U = c.X.derivative() * c.W - c.X * c.W.derivative();
    n.V = c.Y.derivative() * c.W - c.Y * c.W.derivative();
    if (n.U.is_zero() && n.V.is_zero()) throw InputError("degenerate curve: U and V vanish identically");
    UniPoly nu = gcd(n.U, n.V);
    n.Uhat = n.U.is_zero() ? UniPoly{} : divide_exact(n.U, nu);
    n.Vhat = n.V.is_zero() ? UniPoly{} : divide_exact(n.V, nu);
    Rat s = joint_integer_scale({&n.Uhat, &n.Vhat});
    n.Uhat *= s;
    n.Vhat *= s;
    n.nu = nu * (1 / s);
    return n;
}

bool perfect_square_test(const UniPoly& U, const UniPoly& V)
{
    UniPoly S = U * U + V * V;
    if (S.is_zero()) throw std::invalid_argument("perfect_square_test: U and V both zero");
    if (S.lead() < 0) return false;
    auto dec = squarefree(S);
    for (const auto& [f, mult] : dec.factors)
        if (mult % 2 != 0) return false;
    return true;
}

Contents compute_contents(const CurveSpec& c, const UniPoly& U, const UniPoly& V)
{
    Contents k;
    k.mu = gcd(c.W, c.X * c.X + c.Y * c.Y);
    k.sigma = gcd(c.W, c.W.derivative());
    if (k.sigma.is_zero()) k.sigma = UniPoly::constant(1);
    UniPoly Us = U.is_zero() ? U : divide_exact(U, k.sigma);
    UniPoly Vs = V.is_zero() ? V : divide_exact(V, k.sigma);
    k.gamma = gcd(Us, Vs);
    k.beta = (k.sigma * k.gamma * k.mu).monic();
    return k;
}

PQ build_PQ(const CurveSpec& c, const NormalData& normals, const Contents& contents)
{
    PQ r;
    TriPoly ax = linear_in(Var::X, c.W, c.X);
    TriPoly ay = linear_in(Var::Y, c.W, c.Y);
    r.Ptilde = TriPoly::from_uni(normals.U) * ax + TriPoly::from_uni(normals.V) * ay;
    r.Qtilde = ax * ax + ay * ay - TriPoly::from_uni(c.W * c.W) * (c.d * c.d);
    r.P = divide_in_t(r.Ptilde, contents.beta).primitive_integer();
    r.Q = divide_in_t(r.Qtilde, contents.mu).primitive_integer();
    if (!content_primpart(r.P, {Var::T}).content.is_constant())
        throw InvariantError("P is not primitive in t after removing beta");
    if (!content_primpart(r.Q, {Var::T}).content.is_constant())
        throw InvariantError("Q is not primitive in t after removing mu");
    return r;
}

OffsetSystem build_offset_system(const CurveSpec& c)
{
    NormalData n = derive_normals(c);
    if (perfect_square_test(n.U, n.V))
        throw ReducibleOffsetError("U^2 + V^2 is a perfect square: the offset is reducible");
    Contents k = compute_contents(c, n.U, n.V);
    PQ pq = build_PQ(c, n, k);
    OffsetSystem s;
    s.U = n.U;
    s.V = n.V;
    s.nu = n.nu;
    s.Uhat = n.Uhat;
    s.Vhat = n.Vhat;
    s.mu = k.mu;
    s.sigma = k.sigma;
    s.gamma = k.gamma;
    s.beta = k.beta;
    s.Ptilde = std::move(pq.Ptilde);
    s.Qtilde = std::move(pq.Qtilde);
    s.P = std::move(pq.P);
    s.Q = std::move(pq.Q);
    s.degP_t = s.P.degree(Var::T);
    s.degQ_t = s.Q.degree(Var::T);
    return s;
}

bool properness_suspect(const CurveSpec& c)
{
    for (int k = 0; k < 8; ++k) {
        Rat t0(3 + 2 * k, 13 + 4 * k);
        t0.canonicalize();
        Rat w = c.W.eval(t0);
        if (w == 0) continue;
        Rat x0 = c.X.eval(t0) / w, y0 = c.Y.eval(t0) / w;
        return gcd(c.X - c.W * x0, c.Y - c.W * y0).degree() > 1;
    }
    return false;
}

InfinityInfo infinity_info(const CurveSpec& c)
{
    InfinityInfo info;
    int dw = c.W.degree();
    info.p_inf_affine = dw >= std::max(c.X.degree(), c.Y.degree());
    if (info.p_inf_affine) info.p_inf = std::pair{c.X.coeff(dw) / c.W.lead(), c.Y.coeff(dw) / c.W.lead()};
    return info;
}

CurveSpec mobius_reparametrize(const CurveSpec& c, const Rat& a, const Rat& b, const Rat& cc, const Rat& e)
{
    if (a * e - b * cc == 0) throw InputError("singular Mobius map (a*e - b*c = 0)");
    const int K = std::max({c.X.degree(), c.Y.degree(), c.W.degree(), 0});
    UniPoly num{b, a}, den{e, cc};
    std::vector<UniPoly> np{UniPoly::constant(1)}, dp{UniPoly::constant(1)};
    for (int i = 1; i <= K; ++i) {
        np.push_back(np.back() * num);
        dp.push_back(dp.back() * den);
    }
    auto apply = [&](const UniPoly& p) {
        UniPoly r;
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i) != 0)
                r += np[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(K - i)] * p.coeff(i);
        return r;
    };
    CurveSpec out = c;
    out.X = apply(c.X);
    out.Y = apply(c.Y);
    out.W = apply(c.W);
    return normalize_curve(std::move(out));
}

PointEnclosure eval_offset_point(const CurveSpec& c, const OffsetSystem& sys, const RatInterval& t, Branch br,
                                 unsigned bits)
{
    RatInterval w = c.W.eval(t);
    if (w.contains_zero()) throw std::domain_error("W vanishes at the requested parameter");
    RatInterval uh = sys.Uhat.eval(t), vh = sys.Vhat.eval(t);
    RatInterval norm2 = uh.square() + vh.square();
    if (!norm2.positive()) throw std::domain_error("normal direction is not determined on the interval");
    RatInterval r = norm2.sqrt(bits);
    RatInterval s = RatInterval::point(c.d * branch_sign(br)) / r;
    RatInterval x = (c.X.eval(t) / w + vh * s).round_out(bits);
    RatInterval y = (c.Y.eval(t) / w - uh * s).round_out(bits);
    return {x, y};
}

std::pair<double, double> eval_offset_point(const CurveSpec& c, const OffsetSystem& sys, double t, Branch br)
{
    double w = c.W.eval(t);
    if (w == 0.0) throw std::domain_error("W vanishes at the requested parameter");
    double uh = sys.Uhat.eval(t), vh = sys.Vhat.eval(t);
    double r = std::hypot(uh, vh);
    double s = to_double(c.d) * branch_sign(br) / r;
    return {c.X.eval(t) / w + vh * s, c.Y.eval(t) / w - uh * s};
}

}  // namespace offsetsing
