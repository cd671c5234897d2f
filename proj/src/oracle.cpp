#include "offsetsing/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace offsetsing::oracle {

TriPoly bareiss_determinant(std::vector<std::vector<TriPoly>> a)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix is not square");
    if (n == 0) return TriPoly::constant(1);
    bool negate = false;
    TriPoly prev = TriPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) return {};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = TriPoly{};
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

TriPoly sylvester_resultant(const TriPoly& f, const TriPoly& g)
{
    const int n = f.degree(Var::T), m = g.degree(Var::T);
    if (n < 0 || m < 0) throw std::invalid_argument("sylvester_resultant: zero polynomial");
    if (n + m == 0) return TriPoly::constant(1);
    const std::size_t size = static_cast<std::size_t>(n + m);
    std::vector<std::vector<TriPoly>> M(size, std::vector<TriPoly>(size));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.t_coeff(n - k);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            M[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = g.t_coeff(m - k);
    return bareiss_determinant(std::move(M));
}

TriPoly implicit_offset(const OffsetSystem& sys, int cap)
{
    if (sys.P.degree(Var::T) + sys.Q.degree(Var::T) > cap)
        throw std::invalid_argument("implicit_offset: deg_t P + deg_t Q exceeds the cap");
    return sylvester_resultant(sys.P, sys.Q).primitive_integer();
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// Normal data recomputed from the curve alone.
struct Frame {
    UniPoly X, Y, W, Uh, Vh, nu, J;
    double d;

    explicit Frame(const CurveSpec& c) : X(c.X), Y(c.Y), W(c.W), d(to_double(c.d))
    {
        UniPoly U = X.derivative() * W - X * W.derivative();
        UniPoly V = Y.derivative() * W - Y * W.derivative();
        nu = gcd(U, V);
        Uh = U.is_zero() ? U : divide_exact(U, nu);
        Vh = V.is_zero() ? V : divide_exact(V, nu);
        J = Uh * Vh.derivative() - Vh * Uh.derivative();
    }

    bool point(double t, int s, double& x, double& y) const
    {
        double w = W.eval(t);
        if (w == 0.0 || !std::isfinite(w)) return false;
        double uh = Uh.eval(t), vh = Vh.eval(t);
        double r = std::hypot(uh, vh);
        if (r == 0.0 || !std::isfinite(r)) return false;
        x = X.eval(t) / w + s * d * vh / r;
        y = Y.eval(t) / w - s * d * uh / r;
        return std::isfinite(x) && std::isfinite(y);
    }

    // Zero exactly where the offset derivative vanishes on branch s.
    double cusp_indicator(double t, int s) const
    {
        double uh = Uh.eval(t), vh = Vh.eval(t);
        double b = uh * uh + vh * vh;
        double w = W.eval(t);
        return nu.eval(t) * std::sqrt(b) / (w * w) + s * d * J.eval(t) / b;
    }
};

Branch to_branch(int s) { return s > 0 ? Branch::Plus : Branch::Minus; }

struct Sample {
    double t, x, y;
    bool ok;
};

bool newton_pair(const Frame& F, int s1, int s2, double& t, double& u, double tol)
{
    for (int it = 0; it < 60; ++it) {
        double x1, y1, x2, y2;
        if (!F.point(t, s1, x1, y1) || !F.point(u, s2, x2, y2)) return false;
        double fx = x1 - x2, fy = y1 - y2;
        if (std::hypot(fx, fy) < tol * 1e-3) return true;
        double ht = 1e-7 * (1 + std::fabs(t)), hu = 1e-7 * (1 + std::fabs(u));
        double xa, ya, xb, yb, xc, yc, xd, yd;
        if (!F.point(t + ht, s1, xa, ya) || !F.point(t - ht, s1, xb, yb)) return false;
        if (!F.point(u + hu, s2, xc, yc) || !F.point(u - hu, s2, xd, yd)) return false;
        double a11 = (xa - xb) / (2 * ht), a21 = (ya - yb) / (2 * ht);
        double a12 = -(xc - xd) / (2 * hu), a22 = -(yc - yd) / (2 * hu);
        double det = a11 * a22 - a12 * a21;
        if (det == 0.0 || !std::isfinite(det)) return false;
        double dt = (fx * a22 - fy * a12) / det;
        double du = (a11 * fy - a21 * fx) / det;
        t -= dt;
        u -= du;
        if (!std::isfinite(t) || !std::isfinite(u)) return false;
        if (std::fabs(dt) < 1e-15 * (1 + std::fabs(t)) && std::fabs(du) < 1e-15 * (1 + std::fabs(u))) {
            if (!F.point(t, s1, x1, y1) || !F.point(u, s2, x2, y2)) return false;
            return std::hypot(x1 - x2, y1 - y2) < tol;
        }
    }
    double x1, y1, x2, y2;
    return F.point(t, s1, x1, y1) && F.point(u, s2, x2, y2) && std::hypot(x1 - x2, y1 - y2) < tol;
}

bool segments_cross(double ax, double ay, double bx, double by, double cx, double cy, double dx, double dy,
                    double& sa, double& sc)
{
    double rx = bx - ax, ry = by - ay, qx = dx - cx, qy = dy - cy;
    double den = rx * qy - ry * qx;
    if (den == 0.0) return false;
    double wx = cx - ax, wy = cy - ay;
    sa = (wx * qy - wy * qx) / den;
    sc = (wx * ry - wy * rx) / den;
    return sa >= 0 && sa <= 1 && sc >= 0 && sc <= 1;
}

}  // namespace

std::vector<ScanHit> numeric_singularity_scan(const CurveSpec& c, const ScanOptions& opts)
{
    const Frame F(c);
    const int n = std::max(opts.grid, 100);
    std::vector<double> ts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = std::tan(-kPi / 2 + kPi * (i + 0.5) / n);

    std::vector<ScanHit> hits;

    // Cusps: sign changes of the indicator, refined by bisection in theta.
    for (int s : {1, -1}) {
        double prev = F.cusp_indicator(ts[0], s);
        for (int i = 1; i < n; ++i) {
            double cur = F.cusp_indicator(ts[static_cast<std::size_t>(i)], s);
            if (std::isfinite(prev) && std::isfinite(cur) && ((prev < 0) != (cur < 0))) {
                double lo = -kPi / 2 + kPi * (i - 0.5) / n, hi = -kPi / 2 + kPi * (i + 0.5) / n;
                double flo = prev;
                for (int k = 0; k < 200 && hi - lo > 1e-17; ++k) {
                    double mid = 0.5 * (lo + hi);
                    double fm = F.cusp_indicator(std::tan(mid), s);
                    if ((fm < 0) == (flo < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                double t = std::tan(0.5 * (lo + hi));
                double x, y;
                if (F.point(t, s, x, y)) hits.push_back({HitKind::Cusp, t, t, to_branch(s), to_branch(s), x, y});
            }
            prev = cur;
        }
    }

    // Self-intersections: crossings between sampled polylines of both branches.
    std::vector<Sample> pts[2];
    std::vector<double> xs, ys;
    for (int b = 0; b < 2; ++b) {
        int s = b == 0 ? 1 : -1;
        pts[b].resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            auto& p = pts[b][static_cast<std::size_t>(i)];
            p.t = ts[static_cast<std::size_t>(i)];
            p.ok = F.point(p.t, s, p.x, p.y);
            if (p.ok) {
                xs.push_back(p.x);
                ys.push_back(p.y);
            }
        }
    }
    if (xs.size() < 4) return hits;
    auto quant = [](std::vector<double> v, double q) {
        std::size_t k = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1));
        std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
        return v[k];
    };
    double x0 = quant(xs, 0.02), x1 = quant(xs, 0.98), y0 = quant(ys, 0.02), y1 = quant(ys, 0.98);
    double span = std::max({x1 - x0, y1 - y0, 4 * F.d, 1e-9});
    x0 -= span;
    x1 += span;
    y0 -= span;
    y1 += span;

    struct Seg {
        int b;
        int i;  // segment between samples i and i+1
    };
    std::vector<Seg> segs;
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i + 1 < n; ++i) {
            const auto& p = pts[b][static_cast<std::size_t>(i)];
            const auto& q = pts[b][static_cast<std::size_t>(i + 1)];
            if (!p.ok || !q.ok) continue;
            // Skip segments that jump across a pole of W.
            if (c.W.eval(p.t) * c.W.eval(q.t) <= 0) continue;
            if (std::min(p.x, q.x) > x1 || std::max(p.x, q.x) < x0 || std::min(p.y, q.y) > y1 || std::max(p.y, q.y) < y0)
                continue;
            if (std::hypot(q.x - p.x, q.y - p.y) > span) continue;
            segs.push_back({b, i});
        }

    const int cells = 512;
    const double cw = (x1 - x0) / cells, ch = (y1 - y0) / cells;
    std::unordered_map<long long, std::vector<std::size_t>> grid;
    auto cell_of = [&](double x, double y) {
        long long cx = std::clamp(static_cast<long long>((x - x0) / cw), 0LL, static_cast<long long>(cells - 1));
        long long cy = std::clamp(static_cast<long long>((y - y0) / ch), 0LL, static_cast<long long>(cells - 1));
        return std::pair{cx, cy};
    };
    for (std::size_t k = 0; k < segs.size(); ++k) {
        const auto& p = pts[segs[k].b][static_cast<std::size_t>(segs[k].i)];
        const auto& q = pts[segs[k].b][static_cast<std::size_t>(segs[k].i + 1)];
        auto [ax, ay] = cell_of(std::min(p.x, q.x), std::min(p.y, q.y));
        auto [bx, by] = cell_of(std::max(p.x, q.x), std::max(p.y, q.y));
        for (long long gx = ax; gx <= bx; ++gx)
            for (long long gy = ay; gy <= by; ++gy) grid[gx * cells + gy].push_back(k);
    }

    std::set<std::pair<long long, long long>> seen;
    std::vector<long long> keys;
    keys.reserve(grid.size());
    for (const auto& [key, v] : grid) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (long long key : keys) {
        const auto& bucket = grid[key];
        for (std::size_t u = 0; u < bucket.size(); ++u)
            for (std::size_t v = u + 1; v < bucket.size(); ++v) {
                const Seg& A = segs[bucket[u]];
                const Seg& B = segs[bucket[v]];
                if (A.b == B.b && std::abs(A.i - B.i) <= 1) continue;
                const auto& a0 = pts[A.b][static_cast<std::size_t>(A.i)];
                const auto& a1 = pts[A.b][static_cast<std::size_t>(A.i + 1)];
                const auto& c0 = pts[B.b][static_cast<std::size_t>(B.i)];
                const auto& c1 = pts[B.b][static_cast<std::size_t>(B.i + 1)];
                double sa, sc;
                if (!segments_cross(a0.x, a0.y, a1.x, a1.y, c0.x, c0.y, c1.x, c1.y, sa, sc)) continue;
                int s1 = A.b == 0 ? 1 : -1, s2 = B.b == 0 ? 1 : -1;
                double t = a0.t + sa * (a1.t - a0.t);
                double u2 = c0.t + sc * (c1.t - c0.t);
                if (!newton_pair(F, s1, s2, t, u2, 1e-8)) continue;
                if (std::fabs(t - u2) < 1e-7 * (1 + std::fabs(t))) continue;
                if (t > u2) {
                    std::swap(t, u2);
                    std::swap(s1, s2);
                }
                auto sig = std::pair{std::llround(t * 1e7) * 4 + (s1 > 0 ? 0 : 1) * 2 + (s2 > 0 ? 0 : 1),
                                     std::llround(u2 * 1e7)};
                if (!seen.insert(sig).second) continue;
                double x = 0, y = 0;
                F.point(t, s1, x, y);
                hits.push_back({HitKind::SelfIntersection, t, u2, to_branch(s1), to_branch(s2), x, y});
            }
    }
    std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
        return a.kind != b.kind ? a.kind < b.kind : (a.t != b.t ? a.t < b.t : a.s < b.s);
    });
    return hits;
}

std::vector<double> scan_parameters(const std::vector<ScanHit>& hits)
{
    std::vector<double> v;
    for (const auto& h : hits) {
        v.push_back(h.t);
        if (h.kind == HitKind::SelfIntersection) v.push_back(h.s);
    }
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double t : v)
        if (out.empty() || std::fabs(t - out.back()) > 1e-9 * (1 + std::fabs(t))) out.push_back(t);
    return out;
}

std::vector<double> uncovered_parameters(const std::vector<double>& params, const std::vector<IsolatedRoot>& roots,
                                         double tol)
{
    std::vector<double> out;
    for (double t : params) {
        double slack = tol * (1 + std::fabs(t));
        bool hit = std::any_of(roots.begin(), roots.end(), [&](const IsolatedRoot& r) {
            return to_double(r.lo) - slack <= t && t <= to_double(r.hi) + slack;
        });
        if (!hit) out.push_back(t);
    }
    return out;
}

namespace {

// Certified enclosure of the offset point at an exact parameter.
bool offset_enclosure(const Frame& F, const Rat& t, int s, const Rat& d, unsigned bits, RatInterval& x, RatInterval& y)
{
    Rat w = F.W.eval(t);
    if (w == 0) return false;
    Rat uh = F.Uh.eval(t), vh = F.Vh.eval(t);
    Rat b = uh * uh + vh * vh;
    if (b == 0) return false;
    RatInterval inv = RatInterval::point(d * s) / RatInterval::point(b).sqrt(bits);
    x = (RatInterval::point(F.X.eval(t) / w) + RatInterval::point(vh) * inv).round_out(bits);
    y = (RatInterval::point(F.Y.eval(t) / w) - RatInterval::point(uh) * inv).round_out(bits);
    return true;
}

}  // namespace

bool implicit_vanishes_on_offset(const TriPoly& H, const CurveSpec& c, int count, std::uint64_t seed)
{
    const Frame F(c);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> theta(-1.4, 1.4);
    int done = 0;
    for (int attempt = 0; done < count && attempt < 50 * count; ++attempt) {
        Rat t(static_cast<long>(std::llround(std::tan(theta(rng)) * 4096)), 4096);
        t.canonicalize();
        RatInterval x, y;
        if (!offset_enclosure(F, t, done % 2 == 0 ? 1 : -1, c.d, 256, x, y)) continue;
        if (!H.eval(x, y, RatInterval::point(0), 256).contains_zero()) return false;
        ++done;
    }
    return done == count;
}

bool squarefree_offset_check(const TriPoly& H, const CurveSpec& c, int trials, std::uint64_t seed)
{
    const Frame F(c);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int dx = H.degree(Var::X);
    if (dx <= 0) return false;

    // Offset samples, used to pick slices and to locate the slice crossings.
    std::vector<std::pair<double, double>> samples[2];
    const int n = 4000;
    double ymin = 1e300, ymax = -1e300;
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < n; ++i) {
            double t = std::tan(-kPi / 2 + kPi * (i + 0.5) / n);
            double x, y;
            if (!F.point(t, b == 0 ? 1 : -1, x, y)) continue;
            samples[b].emplace_back(t, y);
            if (std::fabs(y) < 1e6) {
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    if (!(ymin < ymax)) return false;

    for (int trial = 0; trial < trials; ++trial) {
        bool decided = false;
        for (int attempt = 0; attempt < 20 && !decided; ++attempt) {
            // Rational slice strictly inside the sampled y-range.
            double yd = ymin + (0.1 + 0.8 * unit(rng)) * (ymax - ymin);
            Rat y0(static_cast<long>(std::llround(yd * 1024)), 1024);
            y0.canonicalize();
            std::vector<Rat> coeffs(static_cast<std::size_t>(dx) + 1);
            for (const auto& [e, v] : H.terms()) {
                Rat yp = 1;
                for (int k = 0; k < e.y; ++k) yp *= y0;
                coeffs[static_cast<std::size_t>(e.x)] += v * yp;
            }
            UniPoly h(coeffs);
            if (h.degree() != dx) continue;  // degree drop: resample
            UniPoly g = gcd(h, h.derivative());
            // Offset crossings with y = y0.
            std::vector<double> xs;
            const double yv = to_double(y0);
            for (int b = 0; b < 2; ++b) {
                const auto& sm = samples[b];
                const int s = b == 0 ? 1 : -1;
                for (std::size_t i = 0; i + 1 < sm.size(); ++i) {
                    double fa = sm[i].second - yv, fb = sm[i + 1].second - yv;
                    if ((fa < 0) == (fb < 0) || std::fabs(fa - fb) > (ymax - ymin)) continue;
                    double lo = std::atan(sm[i].first), hi = std::atan(sm[i + 1].first);
                    for (int k = 0; k < 100; ++k) {
                        double mid = 0.5 * (lo + hi), x, y;
                        if (!F.point(std::tan(mid), s, x, y)) break;
                        if ((y - yv < 0) == (fa < 0)) lo = mid;
                        else hi = mid;
                    }
                    double x, y;
                    if (F.point(std::tan(0.5 * (lo + hi)), s, x, y)) xs.push_back(x);
                }
            }
            if (xs.empty()) continue;
            decided = true;
            if (g.degree() <= 0) continue;
            for (double x : xs) {
                double val = 0, mag = 0;
                for (int k = g.degree(); k >= 0; --k) {
                    val = val * x + to_double(g.coeff(k));
                    mag = mag * std::fabs(x) + std::fabs(to_double(g.coeff(k)));
                }
                if (std::fabs(val) <= 1e-6 * mag) return false;
            }
        }
        if (!decided) return false;
    }
    return true;
}

bool verify_sres1_vanishing(const Classification& cls, const TriPoly& sres1, const CurveSpec& c)
{
    const Frame F(c);
    const unsigned bits = 256;
    auto contains_zero_on = [&](const IsolatedRoot& r, Branch br) {
        RatInterval t(r.lo, r.hi);
        RatInterval w = F.W.eval(t);
        if (w.contains_zero()) return true;  // undecidable at this width; treated as not refuting
        RatInterval uh = F.Uh.eval(t), vh = F.Vh.eval(t);
        RatInterval rad = (uh.square() + vh.square()).sqrt(bits);
        RatInterval s = RatInterval::point(c.d * branch_sign(br)) / rad;
        RatInterval x = (F.X.eval(t) / w + vh * s).round_out(bits);
        RatInterval y = (F.Y.eval(t) / w - uh * s).round_out(bits);
        return sres1.eval(x, y, RatInterval::point(0), bits).contains_zero();
    };
    for (const auto& rec : cls.roots) {
        bool need_all = !rec.branches.empty() && rec.kind != RootKind::CuspGenerated;
        if (need_all) {
            for (Branch b : rec.branches)
                if (!contains_zero_on(rec.interval, b)) return false;
        } else {
            if (!contains_zero_on(rec.interval, Branch::Plus) && !contains_zero_on(rec.interval, Branch::Minus))
                return false;
        }
    }
    return true;
}

}  // namespace offsetsing::oracle
