#pragma once

#include "offsetsing/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace offsetsing {

// Dense univariate polynomial over Z, ascending coefficients, no trailing zeros.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs);
    static ZPoly constant(const Int& c);
    static ZPoly monomial(const Int& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const;
    const Int& lead() const;

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    ZPoly& operator*=(const Int& k);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(ZPoly a, const Int& k) { return a *= k; }
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    ZPoly derivative() const;
    ZPoly pow(unsigned e) const;
    // Non-negative gcd of the coefficients; 0 for the zero polynomial.
    Int content() const;
    // Divided by content, leading coefficient made positive.
    ZPoly primitive() const;
    // Divide every coefficient by k; k must divide them all.
    ZPoly div_exact_scalar(const Int& k) const;

    Int eval(const Int& x) const;
    // Sign of p(num/den), den > 0.
    int sign_at(const Int& num, const Int& den) const;
    int sign_at(const Rat& x) const { return sign_at(x.get_num(), x.get_den()); }

    // p(t + 1)
    ZPoly taylor_shift_one() const;
    // t^deg * p(1/t)
    ZPoly reversed() const;
    // p(-t)
    ZPoly negate_variable() const;
    // 2^(k*deg) p(t / 2^k) when k >= 0, i.e. coefficient i scaled by 2^(k*(deg-i)).
    ZPoly scale_down_pow2(unsigned k) const;
    // p(2^k t)
    ZPoly scale_up_pow2(unsigned k) const;
    // Drops the factor t^m where m is the lowest nonzero exponent.
    ZPoly strip_zero_roots(int* removed = nullptr) const;

    std::size_t max_bits() const;
    std::size_t sign_variations() const;

private:
    void trim();
    std::vector<Int> c_;
};

// Exact quotient a / b over Z; nullopt when b does not divide a.
std::optional<ZPoly> try_divide(const ZPoly& a, const ZPoly& b);
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);

// lc(b)^(deg a - deg b + 1) * a = q*b + r
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

// Primitive gcd with positive leading coefficient (multi-modular, certified by trial division).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace offsetsing
