#pragma once

#include "offsetsing/interval.hpp"
#include "offsetsing/numeric.hpp"
#include "offsetsing/unipoly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace offsetsing {

enum class Var { X, Y, T };

struct Exponent {
    int x = 0;
    int y = 0;
    int t = 0;
    auto operator<=>(const Exponent&) const = default;
    int operator[](Var v) const { return v == Var::X ? x : (v == Var::Y ? y : t); }
};

// Sparse polynomial in (x, y, t) over Q. Terms are kept in lex order x > y > t.
class TriPoly {
public:
    using Terms = std::map<Exponent, Rat>;

    TriPoly() = default;
    static TriPoly constant(const Rat& c);
    static TriPoly term(const Rat& c, int ex, int ey, int et);
    static TriPoly variable(Var v);
    // Lift a polynomial in t (or in another variable).
    static TriPoly from_uni(const UniPoly& p, Var v = Var::T);
    // sum_k coeffs[k] * t^k, where coeffs[k] are free of t.
    static TriPoly from_t_coeffs(const std::vector<TriPoly>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    Rat coeff(const Exponent& e) const;
    // Greatest term in lex order.
    const std::pair<const Exponent, Rat>& leading_term() const;

    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    TriPoly& operator*=(const Rat& k);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    friend TriPoly operator*(TriPoly a, const Rat& k) { return a *= k; }
    friend TriPoly operator*(const Rat& k, TriPoly a) { return a *= k; }
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

    TriPoly pow(unsigned e) const;
    TriPoly derivative(Var v) const;

    // -1 for the zero polynomial.
    int degree(Var v) const;
    int total_degree_xy() const;
    int total_degree() const;

    // Coefficient of t^k as a polynomial in x, y.
    TriPoly t_coeff(int k) const;
    std::vector<TriPoly> t_coeffs() const;

    Rat eval(const Rat& x, const Rat& y, const Rat& t) const;
    double eval(double x, double y, double t) const;
    RatInterval eval(const RatInterval& x, const RatInterval& y, const RatInterval& t,
                     unsigned round_bits = 0) const;
    // Bind x and y; result is a polynomial in t.
    UniPoly eval_xy(const Rat& x, const Rat& y) const;
    // Bind t only.
    TriPoly eval_t(const Rat& t) const;
    // Bind one variable; the others stay.
    TriPoly substitute(Var v, const Rat& value) const;

    bool is_integral() const;
    // Denominators cleared, integer content removed, leading coefficient positive.
    TriPoly primitive_integer() const;
    // Max bit length over numerators and denominators.
    std::size_t max_bits() const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Rat& c);
    Terms terms_;
};

// Exact quotient a / b; nullopt if b does not divide a.
std::optional<TriPoly> try_divide(const TriPoly& a, const TriPoly& b);
TriPoly divide_exact(const TriPoly& a, const TriPoly& b);

struct ContentSplit {
    TriPoly content;
    TriPoly primitive;
};

// Content with respect to `vars`: gcd of the coefficients of p viewed as a polynomial
// in the complementary variables with coefficients in Z[vars]. Supported: {} and a
// single variable. The rational scalar goes into the content so that the primitive
// part has coprime integer coefficients and a positive leading coefficient.
ContentSplit content_primpart(const TriPoly& p, const std::vector<Var>& vars);

}  // namespace offsetsing
