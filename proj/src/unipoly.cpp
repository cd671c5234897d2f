#include "offsetsing/unipoly.hpp"

#include "offsetsing/interval.hpp"

#include <cmath>
#include <sstream>

namespace offsetsing {

UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int deg)
{
    std::vector<Rat> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_integer(const ZPoly& z)
{
    std::vector<Rat> v;
    v.reserve(z.coeffs().size());
    for (const auto& x : z.coeffs()) v.emplace_back(x);
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UniPoly::coeff(int i) const
{
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const Rat& UniPoly::lead() const
{
    if (c_.empty()) throw InvariantError("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& k)
{
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() * b.c_.size() > 64) {
        // Integer products avoid a gcd per rational multiply.
        auto [sa, za] = a.to_primitive_integer();
        auto [sb, zb] = b.to_primitive_integer();
        return UniPoly::from_integer(za * zb) * Rat(sa * sb);
    }
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::pow(unsigned e) const
{
    UniPoly result = constant(1);
    UniPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return {};
    Rat inv = 1 / lead();
    return *this * inv;
}

UniPoly UniPoly::compose(const UniPoly& q) const
{
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
    return r;
}

Rat UniPoly::eval(const Rat& x) const
{
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double UniPoly::eval(double x) const
{
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_double(*it);
    return r;
}

RatInterval UniPoly::eval(const RatInterval& x) const
{
    RatInterval r = RatInterval::point(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + RatInterval::point(*it);
    return r;
}

std::pair<Rat, ZPoly> UniPoly::to_primitive_integer() const
{
    if (is_zero()) return {Rat(0), ZPoly{}};
    Int l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> ints(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(ints[i].get_mpz_t(), l.get_mpz_t(), c_[i].get_den_mpz_t());
        ints[i] *= c_[i].get_num();
    }
    ZPoly z(std::move(ints));
    ZPoly prim = z.primitive();
    Rat scale(z.lead() / prim.lead(), l);  // exact: z = (content * sign) * prim
    scale.canonicalize();
    return {scale, prim};
}

std::string UniPoly::to_string(char var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rat mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = mag == 1 && i > 0;
        if (!unit) os << offsetsing::to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw InvariantError("division by zero polynomial");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1);
    Rat inv = 1 / b.lead();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat f = r[static_cast<std::size_t>(k + db)] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeff(j);
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw InvariantError("division by zero polynomial");
    if (a.is_zero()) return {};
    auto [sa, za] = a.to_primitive_integer();
    auto [sb, zb] = b.to_primitive_integer();
    // Gauss: if zb | za over Q with both primitive, the quotient is integral.
    auto q = try_divide(za, zb);
    if (!q) throw InvariantError("polynomial division expected to be exact");
    return UniPoly::from_integer(*q) * Rat(sa / sb);
}

bool divides(const UniPoly& b, const UniPoly& a)
{
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return try_divide(a.primitive_integer(), b.primitive_integer()).has_value();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() && b.is_zero()) return {};
    return UniPoly::from_integer(gcd(a.primitive_integer(), b.primitive_integer())).monic();
}

SquarefreeDecomposition squarefree(const UniPoly& p)
{
    if (p.is_zero()) throw InvariantError("squarefree decomposition of zero polynomial");
    SquarefreeDecomposition out;
    out.unit = p.lead();
    UniPoly f = p.monic();
    if (f.degree() == 0) {
        out.squarefree_part = UniPoly::constant(1);
        return out;
    }
    UniPoly fp = f.derivative();
    UniPoly a0 = gcd(f, fp);
    UniPoly b = divide_exact(f, a0);
    UniPoly c = divide_exact(fp, a0);
    UniPoly d = c - b.derivative();
    UniPoly part = UniPoly::constant(1);
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0) {
            out.factors.emplace_back(a, i);
            part = part * a;
        }
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - b.derivative();
    }
    out.squarefree_part = part.monic();
    return out;
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_zero()) throw InvariantError("squarefree part of zero polynomial");
    UniPoly f = p.monic();
    if (f.degree() <= 0) return UniPoly::constant(1);
    return divide_exact(f, gcd(f, f.derivative())).monic();
}

std::size_t bitsize(const UniPoly& p)
{
    if (p.is_zero()) return 0;
    return p.primitive_integer().max_bits();
}

}  // namespace offsetsing
