#pragma once

#include "offsetsing/numeric.hpp"
#include "offsetsing/zpoly.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace offsetsing {

class RatInterval;

// Dense polynomial in t over Q. Empty coefficient vector is the zero polynomial.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rat> coeffs);
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, int deg);
    static UniPoly t() { return monomial(1, 1); }
    static UniPoly from_integer(const ZPoly& z);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    const Rat& lead() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rat& k);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rat& k) { return a *= k; }
    friend UniPoly operator*(const Rat& k, UniPoly a) { return a *= k; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly pow(unsigned e) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    // p(q(t))
    UniPoly compose(const UniPoly& q) const;

    Rat eval(const Rat& x) const;
    double eval(double x) const;
    RatInterval eval(const RatInterval& x) const;

    // *this = scale * z with z a primitive integer polynomial, positive leading coefficient.
    std::pair<Rat, ZPoly> to_primitive_integer() const;
    ZPoly primitive_integer() const { return to_primitive_integer().second; }

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rat> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Quotient when b | a exactly; throws InvariantError otherwise.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);

// Monic gcd over Q; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeDecomposition {
    Rat unit;                                     // p = unit * prod f_i^i
    std::vector<std::pair<UniPoly, int>> factors; // monic, pairwise coprime, non-constant
    UniPoly squarefree_part;                      // monic product of the factors
};

// Yun's algorithm.
SquarefreeDecomposition squarefree(const UniPoly& p);
// Monic p / gcd(p, p'), without the full decomposition.
UniPoly squarefree_part(const UniPoly& p);

// Max bit length over the coefficients of the primitive integer form.
std::size_t bitsize(const UniPoly& p);

}  // namespace offsetsing
