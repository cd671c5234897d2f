#include "offsetsing/tripoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace offsetsing {

TriPoly TriPoly::constant(const Rat& c) { return term(c, 0, 0, 0); }

TriPoly TriPoly::term(const Rat& c, int ex, int ey, int et)
{
    if (ex < 0 || ey < 0 || et < 0) throw std::invalid_argument("negative exponent");
    TriPoly p;
    if (c != 0) p.terms_.emplace(Exponent{ex, ey, et}, c);
    return p;
}

TriPoly TriPoly::variable(Var v)
{
    switch (v) {
    case Var::X: return term(1, 1, 0, 0);
    case Var::Y: return term(1, 0, 1, 0);
    default: return term(1, 0, 0, 1);
    }
}

TriPoly TriPoly::from_uni(const UniPoly& p, Var v)
{
    TriPoly r;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rat& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Exponent e;
        if (v == Var::X) e.x = i;
        else if (v == Var::Y) e.y = i;
        else e.t = i;
        r.terms_.emplace(e, c);
    }
    return r;
}

TriPoly TriPoly::from_t_coeffs(const std::vector<TriPoly>& coeffs)
{
    TriPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (const auto& [e, c] : coeffs[k].terms_) {
            if (e.t != 0) throw std::invalid_argument("t-coefficient depends on t");
            r.add_term(Exponent{e.x, e.y, static_cast<int>(k)}, c);
        }
    return r;
}

bool TriPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rat TriPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const Exponent, Rat>& TriPoly::leading_term() const
{
    if (terms_.empty()) throw InvariantError("leading term of zero polynomial");
    return *terms_.rbegin();
}

void TriPoly::add_term(const Exponent& e, const Rat& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TriPoly TriPoly::operator-() const
{
    TriPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TriPoly& TriPoly::operator*=(const Rat& k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b)
{
    TriPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(Exponent{ea.x + eb.x, ea.y + eb.y, ea.t + eb.t}, ca * cb);
    return r;
}

TriPoly TriPoly::pow(unsigned e) const
{
    TriPoly result = constant(1);
    TriPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

TriPoly TriPoly::derivative(Var v) const
{
    TriPoly r;
    for (const auto& [e, c] : terms_) {
        int k = e[v];
        if (k == 0) continue;
        Exponent ne = e;
        if (v == Var::X) --ne.x;
        else if (v == Var::Y) --ne.y;
        else --ne.t;
        r.add_term(ne, c * k);
    }
    return r;
}

int TriPoly::degree(Var v) const
{
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

int TriPoly::total_degree_xy() const
{
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
    return d;
}

int TriPoly::total_degree() const
{
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y + e.t);
    return d;
}

TriPoly TriPoly::t_coeff(int k) const
{
    TriPoly r;
    for (const auto& [e, c] : terms_)
        if (e.t == k) r.terms_.emplace(Exponent{e.x, e.y, 0}, c);
    return r;
}

std::vector<TriPoly> TriPoly::t_coeffs() const
{
    std::vector<TriPoly> r(static_cast<std::size_t>(std::max(degree(Var::T) + 1, 0)));
    for (const auto& [e, c] : terms_) r[static_cast<std::size_t>(e.t)].terms_.emplace(Exponent{e.x, e.y, 0}, c);
    return r;
}

namespace {

template <class T>
std::vector<T> powers(const T& base, int n, const T& one)
{
    std::vector<T> p;
    p.reserve(static_cast<std::size_t>(n) + 1);
    p.push_back(one);
    for (int i = 1; i <= n; ++i) p.push_back(p.back() * base);
    return p;
}

}  // namespace

Rat TriPoly::eval(const Rat& x, const Rat& y, const Rat& t) const
{
    if (terms_.empty()) return 0;
    auto px = powers(x, degree(Var::X), Rat(1));
    auto py = powers(y, degree(Var::Y), Rat(1));
    auto pt = powers(t, degree(Var::T), Rat(1));
    Rat r = 0;
    for (const auto& [e, c] : terms_)
        r += c * px[static_cast<std::size_t>(e.x)] * py[static_cast<std::size_t>(e.y)] * pt[static_cast<std::size_t>(e.t)];
    return r;
}

double TriPoly::eval(double x, double y, double t) const
{
    double r = 0.0;
    for (const auto& [e, c] : terms_) r += to_double(c) * std::pow(x, e.x) * std::pow(y, e.y) * std::pow(t, e.t);
    return r;
}

RatInterval TriPoly::eval(const RatInterval& x, const RatInterval& y, const RatInterval& t,
                          unsigned round_bits) const
{
    if (terms_.empty()) return RatInterval::point(0);
    auto round = [&](const RatInterval& v) { return round_bits ? v.round_out(round_bits) : v; };
    auto pw = [&](const RatInterval& base, int n) {
        std::vector<RatInterval> p{RatInterval::point(1)};
        for (int i = 1; i <= n; ++i) p.push_back(round(p.back() * base));
        return p;
    };
    auto px = pw(x, degree(Var::X));
    auto py = pw(y, degree(Var::Y));
    auto pt = pw(t, degree(Var::T));
    RatInterval r = RatInterval::point(0);
    for (const auto& [e, c] : terms_) {
        RatInterval m = px[static_cast<std::size_t>(e.x)] * py[static_cast<std::size_t>(e.y)];
        if (round_bits) m = m.round_out(round_bits);
        m = m * pt[static_cast<std::size_t>(e.t)];
        r = r + m * c;
        if (round_bits) r = r.round_out(round_bits);
    }
    return r;
}

UniPoly TriPoly::eval_xy(const Rat& x, const Rat& y) const
{
    auto px = powers(x, std::max(degree(Var::X), 0), Rat(1));
    auto py = powers(y, std::max(degree(Var::Y), 0), Rat(1));
    std::vector<Rat> c(static_cast<std::size_t>(std::max(degree(Var::T) + 1, 0)));
    for (const auto& [e, v] : terms_)
        c[static_cast<std::size_t>(e.t)] += v * px[static_cast<std::size_t>(e.x)] * py[static_cast<std::size_t>(e.y)];
    return UniPoly(std::move(c));
}

TriPoly TriPoly::eval_t(const Rat& t) const { return substitute(Var::T, t); }

TriPoly TriPoly::substitute(Var v, const Rat& value) const
{
    auto pv = powers(value, std::max(degree(v), 0), Rat(1));
    TriPoly r;
    for (const auto& [e, c] : terms_) {
        Exponent ne = e;
        if (v == Var::X) ne.x = 0;
        else if (v == Var::Y) ne.y = 0;
        else ne.t = 0;
        r.add_term(ne, c * pv[static_cast<std::size_t>(e[v])]);
    }
    return r;
}

bool TriPoly::is_integral() const
{
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

TriPoly TriPoly::primitive_integer() const
{
    if (terms_.empty()) return {};
    Int l = 1, g = 0;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : terms_) {
        Int v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rat scale(l, g);
    scale.canonicalize();
    if (leading_term().second < 0) scale = -scale;
    return *this * scale;
}

std::size_t TriPoly::max_bits() const
{
    std::size_t b = 0;
    for (const auto& [e, c] : terms_)
        b = std::max({b, bit_length(c.get_num()), bit_length(c.get_den())});
    return b;
}

std::string TriPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool has_var = e.x || e.y || e.t;
        bool unit = mag == 1 && has_var;
        if (!unit) os << offsetsing::to_string(mag);
        bool need_star = !unit;
        auto var = [&](char name, int k) {
            if (k == 0) return;
            if (need_star) os << "*";
            os << name;
            if (k > 1) os << "^" << k;
            need_star = true;
        };
        var('x', e.x);
        var('y', e.y);
        var('t', e.t);
    }
    return os.str();
}

std::optional<TriPoly> try_divide(const TriPoly& a, const TriPoly& b)
{
    if (b.is_zero()) throw InvariantError("division by zero polynomial");
    TriPoly q, r = a;
    const auto& [eb, cb] = b.leading_term();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        if (er.x < eb.x || er.y < eb.y || er.t < eb.t) return std::nullopt;
        TriPoly m = TriPoly::term(cr / cb, er.x - eb.x, er.y - eb.y, er.t - eb.t);
        q += m;
        r -= m * b;
    }
    return q;
}

TriPoly divide_exact(const TriPoly& a, const TriPoly& b)
{
    auto q = try_divide(a, b);
    if (!q) throw InvariantError("multivariate division expected to be exact");
    return *q;
}

ContentSplit content_primpart(const TriPoly& p, const std::vector<Var>& vars)
{
    if (p.is_zero()) throw std::invalid_argument("content of the zero polynomial");
    if (vars.size() > 1) throw std::invalid_argument("content over more than one variable is not supported");

    TriPoly prim = p.primitive_integer();
    Rat scalar = p.leading_term().second / prim.leading_term().second;
    if (vars.empty()) return {TriPoly::constant(scalar), prim};

    const Var v = vars.front();
    // Group by the exponents of the other variables; each group is a polynomial in v.
    std::map<std::pair<int, int>, std::vector<Rat>> groups;
    for (const auto& [e, c] : prim.terms()) {
        std::pair<int, int> key = v == Var::X ? std::pair{e.y, e.t} : v == Var::Y ? std::pair{e.x, e.t} : std::pair{e.x, e.y};
        auto& coeffs = groups[key];
        std::size_t k = static_cast<std::size_t>(e[v]);
        if (coeffs.size() <= k) coeffs.resize(k + 1);
        coeffs[k] = c;
    }
    ZPoly g;
    for (const auto& [key, coeffs] : groups) {
        g = gcd(g, UniPoly(coeffs).primitive_integer());
        if (g.degree() == 0) break;
    }
    if (g.degree() <= 0) return {TriPoly::constant(scalar), prim};
    TriPoly gv = TriPoly::from_uni(UniPoly::from_integer(g), v);
    TriPoly q = divide_exact(prim, gv);
    return {gv * scalar, q};
}

}  // namespace offsetsing
