#include "offsetsing/singularity_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace offsetsing {

namespace {

// even + odd * alpha over Z[t].
struct ZAlpha {
    ZPoly e, o;
};

// r * s where s_ob = s.o * b is precomputed.
ZAlpha mul(const ZAlpha& r, const ZAlpha& s, const ZPoly& s_ob)
{
    return {r.e * s.e + r.o * s_ob, r.e * s.o + r.o * s.e};
}

ZAlpha scaled(const ZAlpha& a, const Int& k) { return {a.e * k, a.o * k}; }

void add_to(ZAlpha& acc, const ZAlpha& a)
{
    acc.e += a.e;
    acc.o += a.o;
}

ZPoly to_z(const UniPoly& p)
{
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw InvariantError("expected an integer polynomial");
        v.push_back(c.get_num());
    }
    return ZPoly(std::move(v));
}

ZPoly squarefree_z(const ZPoly& f)
{
    ZPoly g = gcd(f, f.derivative());
    if (g.degree() <= 0) return f.primitive();
    return divide_exact(f, g).primitive();
}

ZPoly remove_common(const ZPoly& f, const ZPoly& with)
{
    ZPoly g = gcd(f, with);
    if (g.degree() <= 0) return f;
    return divide_exact(f, g).primitive();
}

// Roots of q in (0, 2^k), q(0) != 0. Intervals are returned in the original scale.
void isolate_positive(const ZPoly& q, std::vector<IsolatedRoot>& out)
{
    const int n = q.degree();
    if (n <= 0) return;
    // Fujiwara-type bound: every root is below 2^k.
    const long lb = static_cast<long>(bit_length(q.lead()));
    long k = 0;
    for (int i = 0; i < n; ++i) {
        const Int& a = q.coeffs()[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        long diff = static_cast<long>(bit_length(a)) - lb + 1;
        long e = diff <= 0 ? 0 : (diff + (n - i) - 1) / (n - i);
        k = std::max(k, e);
    }
    k += 2;
    const ZPoly scaled_q = q.scale_up_pow2(static_cast<unsigned>(k));

    struct Node {
        ZPoly p;
        Int c;
        unsigned depth;
    };
    std::vector<Node> stack;
    stack.push_back({scaled_q, Int(0), 0});
    auto emit = [&](const Int& num, unsigned depth, bool exact) {
        Int den;
        mpz_setbit(den.get_mpz_t(), depth);
        Rat lo(num, den), hi(num + (exact ? 0 : 1), den);
        Rat scale(1);
        mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
        lo.canonicalize();
        hi.canonicalize();
        out.push_back({lo * scale, hi * scale});
    };
    std::vector<IsolatedRoot> found;
    while (!stack.empty()) {
        Node nd = std::move(stack.back());
        stack.pop_back();
        if (nd.p.degree() <= 0) continue;
        std::size_t v = nd.p.reversed().taylor_shift_one().sign_variations();
        if (v == 0) continue;
        if (v == 1) {
            emit(nd.c, nd.depth, false);
            continue;
        }
        ZPoly left = nd.p.scale_down_pow2(1);
        ZPoly right = left.taylor_shift_one();
        Int cl = nd.c * 2;
        if (right.coeffs().front() == 0) {
            emit(cl + 1, nd.depth + 1, true);
            right = right.strip_zero_roots();
        }
        stack.push_back({std::move(right), cl + 1, nd.depth + 1});
        stack.push_back({std::move(left), cl, nd.depth + 1});
    }
}

// An endpoint can be an exact root found at a split point; divide it out.
ZPoly deflate_endpoints(ZPoly p, const IsolatedRoot& r)
{
    for (const Rat* e : {&r.lo, &r.hi}) {
        if (p.sign_at(*e) != 0) continue;
        ZPoly lin(std::vector<Int>{Int(-e->get_num()), e->get_den()});
        p = divide_exact(p, lin);
    }
    return p;
}

void refine(const ZPoly& p0, IsolatedRoot& r, const Rat& width)
{
    if (r.exact()) return;
    const ZPoly p = deflate_endpoints(p0, r);
    int s_lo = p.sign_at(r.lo);
    if (s_lo == 0 || p.sign_at(r.hi) == 0) throw InvariantError("isolating interval endpoint is a root");
    while (r.hi - r.lo > width) {
        Rat m = r.mid();
        int s = p.sign_at(m);
        if (s == 0) {
            r.lo = r.hi = m;
            return;
        }
        if (s == s_lo) r.lo = m;
        else r.hi = m;
    }
}

}  // namespace

std::pair<TriPoly, TriPoly> first_subresultant_xy(const OffsetSystem& sys, ChainStrategy strategy)
{
    const int n = sys.degP_t, m = sys.degQ_t;
    if (std::min(n, m) < 2) throw InvariantError("P and Q need t-degree at least 2 for Subres_1");
    TriPoly s1 = subresultant(sys.P, n, sys.Q, m, 1, strategy);
    if (s1.is_zero()) throw InvariantError("Subres_1(P, Q) vanishes identically; is the parametrization proper?");
    TriPoly prim = content_primpart(s1, {}).primitive;
    TriPoly sres1 = prim.t_coeff(1);
    if (sres1.is_zero()) throw InvariantError("sres_1 vanishes identically");
    return {sres1, prim.t_coeff(0)};
}

AlphaForm substitute_alpha(const TriPoly& sres1_in, const OffsetSystem& sys, const CurveSpec& c)
{
    if (sres1_in.is_zero()) throw std::invalid_argument("substitute_alpha: sres1 is zero");
    const TriPoly sres1 = sres1_in.is_integral() ? sres1_in : sres1_in.primitive_integer();
    const int N = sres1.total_degree_xy();
    const Int p = c.d.get_num(), q = c.d.get_den();
    const ZPoly X = to_z(c.X), Y = to_z(c.Y), W = to_z(c.W);
    const ZPoly Uh = to_z(sys.Uhat), Vh = to_z(sys.Vhat);
    const ZPoly b = Uh * Uh + Vh * Vh;

    const ZAlpha A{Vh * W * p, X * q};
    const ZAlpha B{Uh * W * Int(-p), Y * q};
    const ZAlpha C{ZPoly{}, W * q};
    const ZPoly A_ob = A.o * b, B_ob = B.o * b, C_ob = C.o * b;

    std::vector<ZAlpha> cpow{{ZPoly::constant(1), ZPoly{}}};
    for (int k = 1; k <= N; ++k) cpow.push_back(mul(cpow.back(), C, C_ob));

    // a[j][i] = coefficient of x^i y^j
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) a[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(N - j) + 1, Int(0));
    for (const auto& [e, v] : sres1.terms()) {
        if (e.t != 0) throw std::invalid_argument("substitute_alpha: sres1 depends on t");
        a[static_cast<std::size_t>(e.y)][static_cast<std::size_t>(e.x)] = v.get_num();
    }

    ZAlpha total;
    for (int j = N; j >= 0; --j) {
        const auto& row = a[static_cast<std::size_t>(j)];
        const int D = N - j;
        // h_j = sum_i a_ij A^i C^(D-i), homogeneous Horner.
        ZAlpha h{ZPoly::constant(row[static_cast<std::size_t>(D)]), ZPoly{}};
        for (int i = D - 1; i >= 0; --i) {
            h = mul(h, A, A_ob);
            const Int& ai = row[static_cast<std::size_t>(i)];
            if (ai != 0) add_to(h, scaled(cpow[static_cast<std::size_t>(D - i)], ai));
        }
        if (j == N) total = std::move(h);
        else {
            total = mul(total, B, B_ob);
            add_to(total, h);
        }
    }
    AlphaForm out;
    out.N = N;
    out.numerator = {UniPoly::from_integer(total.e), UniPoly::from_integer(total.o)};
    return out;
}

std::pair<UniPoly, UniPoly> reduce_alpha(const BiPolyTA& a, const UniPoly&) { return {a.odd, a.even}; }

std::pair<UniPoly, UniPoly> reduce_alpha(const std::vector<UniPoly>& alpha_coeffs, const UniPoly& b)
{
    BiPolyTA r = reduce_alpha_powers(alpha_coeffs, b);
    return {r.odd, r.even};
}

OmegaData build_omega(const UniPoly& xi1, const UniPoly& eta1, const OffsetSystem& sys, const CurveSpec& c)
{
    if (xi1.is_zero() && eta1.is_zero()) throw InvariantError("xi1 and eta1 both vanish");
    OmegaData out;

    // Joint integer scaling keeps xi^2 b - eta^2 meaningful.
    Int l = 1;
    for (const auto* p : {&xi1, &eta1})
        for (const auto& v : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    ZPoly xi = to_z(xi1 * Rat(l)), eta = to_z(eta1 * Rat(l));
    const ZPoly b = to_z(sys.Uhat * sys.Uhat + sys.Vhat * sys.Vhat);
    const ZPoly W = c.W.primitive_integer();

    auto raw_degree = [&](const ZPoly& x, const ZPoly& e) {
        int dx = x.is_zero() ? -1 : 2 * x.degree() + b.degree();
        int de = e.is_zero() ? -1 : 2 * e.degree();
        if (dx != de) return std::max(dx, de);
        return (x * x * b - e * e).degree();
    };
    out.deg_omega_tilde_raw = raw_degree(xi, eta);

    // Drop common factors of xi, eta that vanish only where W or b does.
    ZPoly g = gcd(xi, eta);
    const ZPoly wb = W * b;
    for (;;) {
        ZPoly h = gcd(g, wb);
        if (h.degree() <= 0) break;
        if (!xi.is_zero()) xi = divide_exact(xi, h);
        if (!eta.is_zero()) eta = divide_exact(eta, h);
        g = divide_exact(g, h);
    }
    out.xi1 = UniPoly::from_integer(xi);
    out.eta1 = UniPoly::from_integer(eta);

    ZPoly wt = xi * xi * b - eta * eta;
    if (wt.is_zero()) throw InvariantError("omega_tilde vanishes identically");
    out.omega_tilde = UniPoly::from_integer(wt);
    out.deg_omega_tilde = wt.degree();

    ZPoly ws = squarefree_z(wt);
    out.omega_star = UniPoly::from_integer(ws).monic();
    out.w_gcd_nonconstant = gcd(ws, W).degree() > 0;
    out.b_gcd_nonconstant = gcd(ws, b).degree() > 0;
    ZPoly w = remove_common(remove_common(ws, W), b);
    out.omega = UniPoly::from_integer(w).monic();
    out.deg_omega = w.degree();
    out.tau_omega = w.primitive().max_bits();
    return out;
}

RootSet isolate_real_roots(const UniPoly& omega, int precision_bits)
{
    if (omega.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (precision_bits < 1) throw std::invalid_argument("isolate_real_roots: precision must be positive");
    RootSet rs;
    rs.precision_bits = precision_bits;
    rs.poly = omega.primitive_integer();
    const ZPoly& p = rs.poly;
    if (p.degree() >= 1 && gcd(p, p.derivative()).degree() > 0)
        throw std::invalid_argument("isolate_real_roots: polynomial is not squarefree");
    if (p.degree() <= 0) return rs;

    int zeros = 0;
    ZPoly q = p.strip_zero_roots(&zeros);
    if (zeros > 0) rs.roots.push_back({Rat(0), Rat(0)});

    std::vector<IsolatedRoot> pos, neg;
    isolate_positive(q, pos);
    isolate_positive(q.negate_variable(), neg);
    for (auto& r : neg) rs.roots.push_back({-r.hi, -r.lo});
    for (auto& r : pos) rs.roots.push_back(r);

    Rat width(1);
    mpz_mul_2exp(width.get_den_mpz_t(), width.get_den_mpz_t(), static_cast<mp_bitcnt_t>(precision_bits));
    for (auto& r : rs.roots) refine(q, r, width);
    std::sort(rs.roots.begin(), rs.roots.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.mid() < b.mid();
    });
    return rs;
}

std::size_t sturm_root_count(const ZPoly& p0, const Rat& a, const Rat& b)
{
    if (p0.degree() <= 0) return 0;
    ZPoly p = p0.primitive();
    ZPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) p = divide_exact(p, g);
    std::vector<ZPoly> seq{p, p.derivative()};
    while (seq.back().degree() > 0) {
        const ZPoly& u = seq[seq.size() - 2];
        const ZPoly& v = seq.back();
        ZPoly r = pseudo_remainder(u, v);
        int steps = u.degree() - v.degree() + 1;
        if (v.lead() < 0 && steps % 2 != 0) r = -r;
        if (r.is_zero()) break;
        Int cont = r.content();
        r = r.div_exact_scalar(cont);
        seq.push_back(-r);
    }
    auto variations = [&](const Rat& x) {
        std::size_t v = 0;
        int last = 0;
        for (const auto& s : seq) {
            int sg = s.sign_at(x);
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    };
    std::size_t va = variations(a), vb = variations(b);
    return va >= vb ? va - vb : 0;
}

void bisect_root(const ZPoly& poly0, IsolatedRoot& r)
{
    if (r.exact()) return;
    const ZPoly poly = deflate_endpoints(poly0, r);
    Rat m = r.mid();
    int s = poly.sign_at(m);
    if (s == 0) {
        r.lo = r.hi = m;
        return;
    }
    if (s == poly.sign_at(r.lo)) r.lo = m;
    else r.hi = m;
}

int sign_at_root(const ZPoly& f, const ZPoly& poly, IsolatedRoot& r)
{
    if (f.is_zero()) return 0;
    if (r.exact()) return f.sign_at(r.lo);
    ZPoly g = gcd(deflate_endpoints(poly, r), f);
    if (g.degree() > 0 && g.sign_at(r.lo) * g.sign_at(r.hi) < 0) return 0;
    const UniPoly fu = UniPoly::from_integer(f);
    for (int iter = 0; iter < 100000; ++iter) {
        RatInterval v = fu.eval(RatInterval(r.lo, r.hi));
        if (int s = v.certain_sign(); s != 0) return s;
        bisect_root(poly, r);
        if (r.exact()) return f.sign_at(r.lo);
    }
    throw InvariantError("sign_at_root did not terminate");
}

PipelineResult run_offset_sing(const CurveSpec& c, const SolverOptions& opts)
{
    PipelineResult res;
    res.curve = c;
    res.sys = build_offset_system(c);
    std::tie(res.sres1, res.sr) = first_subresultant_xy(res.sys, opts.strategy);
    res.alpha = substitute_alpha(res.sres1, res.sys, c);
    auto [xi, eta] = reduce_alpha(res.alpha.numerator, res.sys.b());
    res.omega = build_omega(xi, eta, res.sys, c);
    res.roots = isolate_real_roots(res.omega.omega, opts.precision_bits);
    return res;
}

}  // namespace offsetsing
