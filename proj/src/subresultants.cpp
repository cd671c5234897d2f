#include "offsetsing/subresultants.hpp"

#include <algorithm>
#include <stdexcept>

namespace offsetsing {

namespace {

thread_local DetpolStats g_stats;

// Nodes 0, 1, -1, 2, -2, ...
long grid_node(int k) { return (k % 2 == 1) ? (k + 1) / 2 : -(k / 2); }

// Fraction-free elimination over the first rows-1 columns. Returns det(Delta_k) for
// k = 0..cols-rows. T needs *, -, ==0 and exact division via `div`.
template <class T, class IsZero, class Div>
std::vector<T> bareiss_minors(std::vector<std::vector<T>> a, const T& one, IsZero is_zero, Div div)
{
    const std::size_t rows = a.size();
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    const std::size_t width = cols - rows + 1;
    std::vector<T> out;
    out.reserve(width);
    if (rows == 0) return out;

    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < rows; ++k) {
        std::size_t piv = k;
        while (piv < rows && is_zero(a[piv][k])) ++piv;
        if (piv == rows) {
            // First rows-1 columns are rank deficient: every minor vanishes.
            for (std::size_t j = 0; j < width; ++j) out.push_back(T{});
            return out;
        }
        if (piv != k) {
            std::swap(a[piv], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                T v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = div(v, prev);
            }
            a[i][k] = T{};
        }
        prev = a[k][k];
    }
    for (std::size_t j = rows - 1; j < cols; ++j) out.push_back(negate ? T(-a[rows - 1][j]) : a[rows - 1][j]);
    return out;
}

std::vector<TriPoly> minors_direct(const std::vector<std::vector<TriPoly>>& M)
{
    return bareiss_minors<TriPoly>(
        M, TriPoly::constant(1), [](const TriPoly& p) { return p.is_zero(); },
        [](const TriPoly& a, const TriPoly& b) { return divide_exact(a, b); });
}

// Monomial coefficients of the interpolant through (node(k), v[k]).
std::vector<Rat> newton_interpolate(const std::vector<Rat>& v)
{
    const std::size_t n = v.size();
    std::vector<Rat> dd = v;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(grid_node(static_cast<int>(i)) - grid_node(static_cast<int>(i - level)));
            if (i == level) break;
        }
    // Horner in Newton form.
    std::vector<Rat> poly{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        Rat xk = grid_node(static_cast<int>(k));
        std::vector<Rat> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * xk;
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    return poly;
}

std::vector<TriPoly> minors_interpolated(const std::vector<std::vector<TriPoly>>& M)
{
    const std::size_t rows = M.size();
    const std::size_t cols = M[0].size();
    const std::size_t width = cols - rows + 1;

    // Per-row denominators so the numeric eliminations stay over Z.
    Rat scale = 1;
    std::vector<std::vector<TriPoly>> A = M;
    int dx = 0, dy = 0;
    for (auto& row : A) {
        Int l = 1;
        int rx = 0, ry = 0;
        for (const auto& e : row) {
            for (const auto& [ex, c] : e.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
            rx = std::max(rx, e.degree(Var::X));
            ry = std::max(ry, e.degree(Var::Y));
        }
        if (l != 1) {
            for (auto& e : row) e *= Rat(l);
            scale /= Rat(l);
        }
        dx += rx;
        dy += ry;
    }
    g_stats = {dx + 1, dy + 1, false};

    // vals[k][ix][iy]
    std::vector<std::vector<std::vector<Rat>>> vals(width, std::vector<std::vector<Rat>>(
                                                               static_cast<std::size_t>(dx + 1),
                                                               std::vector<Rat>(static_cast<std::size_t>(dy + 1))));
    std::vector<std::vector<Int>> num(rows, std::vector<Int>(cols));
    for (int ix = 0; ix <= dx; ++ix) {
        Rat x0 = grid_node(ix);
        for (int iy = 0; iy <= dy; ++iy) {
            Rat y0 = grid_node(iy);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) {
                    const TriPoly& e = A[r][c];
                    if (e.is_zero()) num[r][c] = 0;
                    else num[r][c] = e.eval(x0, y0, Rat(0)).get_num();
                }
            auto mins = bareiss_minors<Int>(
                num, Int(1), [](const Int& v) { return v == 0; },
                [](const Int& a, const Int& b) {
                    Int q;
                    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                    return q;
                });
            for (std::size_t k = 0; k < width; ++k)
                vals[k][static_cast<std::size_t>(ix)][static_cast<std::size_t>(iy)] = mins[k];
        }
    }

    std::vector<TriPoly> out;
    out.reserve(width);
    for (std::size_t k = 0; k < width; ++k) {
        // Interpolate in y for each x node, then in x for each y power.
        std::vector<std::vector<Rat>> ycoef(static_cast<std::size_t>(dx + 1));
        for (int ix = 0; ix <= dx; ++ix) {
            ycoef[static_cast<std::size_t>(ix)] = newton_interpolate(vals[k][static_cast<std::size_t>(ix)]);
            ycoef[static_cast<std::size_t>(ix)].resize(static_cast<std::size_t>(dy + 1));
        }
        TriPoly p;
        for (int jy = 0; jy <= dy; ++jy) {
            std::vector<Rat> column(static_cast<std::size_t>(dx + 1));
            bool any = false;
            for (int ix = 0; ix <= dx; ++ix) {
                column[static_cast<std::size_t>(ix)] = ycoef[static_cast<std::size_t>(ix)][static_cast<std::size_t>(jy)];
                any = any || column[static_cast<std::size_t>(ix)] != 0;
            }
            if (!any) continue;
            auto xc = newton_interpolate(column);
            for (std::size_t jx = 0; jx < xc.size(); ++jx)
                if (xc[jx] != 0) p += TriPoly::term(xc[jx] * scale, static_cast<int>(jx), jy, 0);
        }
        out.push_back(std::move(p));
    }
    return out;
}

bool has_rational_entries(const std::vector<std::vector<TriPoly>>& M)
{
    for (const auto& row : M)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

}  // namespace

DetpolStats last_detpol_stats() { return g_stats; }

SylvesterMatrix sylvester(const TriPoly& f, int n, const TriPoly& g, int m, int i)
{
    if (n < 1 || m < 1) throw std::invalid_argument("sylvester: declared degrees must be positive");
    if (i < 0 || i >= std::min(n, m)) throw std::invalid_argument("sylvester: index out of range");
    if (f.degree(Var::T) > n || g.degree(Var::T) > m)
        throw std::invalid_argument("sylvester: polynomial exceeds its declared degree");
    SylvesterMatrix S;
    S.n = n;
    S.m = m;
    S.index = i;
    const int cols = n + m - i;
    auto fc = f.t_coeffs();
    auto gc = g.t_coeffs();
    fc.resize(static_cast<std::size_t>(n) + 1);
    gc.resize(static_cast<std::size_t>(m) + 1);
    for (int r = 0; r < m - i; ++r) {
        std::vector<TriPoly> row(static_cast<std::size_t>(cols));
        for (int k = 0; k <= n; ++k) row[static_cast<std::size_t>(r + k)] = fc[static_cast<std::size_t>(n - k)];
        S.entries.push_back(std::move(row));
    }
    for (int r = 0; r < n - i; ++r) {
        std::vector<TriPoly> row(static_cast<std::size_t>(cols));
        for (int k = 0; k <= m; ++k) row[static_cast<std::size_t>(r + k)] = gc[static_cast<std::size_t>(m - k)];
        S.entries.push_back(std::move(row));
    }
    return S;
}

TriPoly detpol(const std::vector<std::vector<TriPoly>>& M, ChainStrategy strategy)
{
    if (M.empty()) throw std::invalid_argument("detpol: empty matrix");
    const std::size_t rows = M.size();
    const std::size_t cols = M[0].size();
    for (const auto& row : M)
        if (row.size() != cols) throw std::invalid_argument("detpol: ragged matrix");
    if (rows > cols) throw std::invalid_argument("detpol: more rows than columns");

    std::vector<TriPoly> mins;
    if (strategy == ChainStrategy::Auto) {
        int dx = 0, dy = 0;
        for (const auto& row : M) {
            int rx = 0, ry = 0;
            for (const auto& e : row) {
                rx = std::max(rx, e.degree(Var::X));
                ry = std::max(ry, e.degree(Var::Y));
            }
            dx += rx;
            dy += ry;
        }
        // Polynomial-entry elimination only wins on tiny grids.
        strategy = (dx + 1) * (dy + 1) <= 16 && !has_rational_entries(M) ? ChainStrategy::Direct
                                                                        : ChainStrategy::Interpolation;
    }
    if (strategy == ChainStrategy::Direct) {
        mins = minors_direct(M);
        g_stats = {0, 0, true};
    } else {
        mins = minors_interpolated(M);
    }

    TriPoly out;
    const int top = static_cast<int>(cols - rows);
    for (std::size_t k = 0; k < mins.size(); ++k)
        for (const auto& [e, c] : mins[k].terms())
            out += TriPoly::term(c, e.x, e.y, top - static_cast<int>(k));
    return out;
}

TriPoly subresultant(const TriPoly& f, int n, const TriPoly& g, int m, int i, ChainStrategy strategy)
{
    return detpol(sylvester(f, n, g, m, i).entries, strategy);
}

SubresultantChain chain(const TriPoly& f, int n, const TriPoly& g, int m, ChainStrategy strategy)
{
    SubresultantChain C;
    C.n = n;
    C.m = m;
    for (int i = 0; i < std::min(n, m); ++i) {
        C.polys.push_back(subresultant(f, n, g, m, i, strategy));
        C.principal.push_back(C.polys.back().t_coeff(i));
    }
    return C;
}

TriPoly resultant(const TriPoly& f, const TriPoly& g, ChainStrategy strategy)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    int n = f.degree(Var::T), m = g.degree(Var::T);
    if (n == 0 && m == 0) return TriPoly::constant(1);
    if (n == 0) return f.pow(static_cast<unsigned>(m));
    if (m == 0) return g.pow(static_cast<unsigned>(n));
    return subresultant(f, n, g, m, 0, strategy);
}

}  // namespace offsetsing
