#pragma once

#include "offsetsing/numeric.hpp"

#include <utility>

namespace offsetsing {

// Closed interval [lo, hi] with rational endpoints.
class RatInterval {
public:
    RatInterval() = default;
    RatInterval(Rat lo, Rat hi);
    static RatInterval point(const Rat& x) { return RatInterval(x, x); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }
    // -1, +1, or 0 when the sign is not decided.
    int certain_sign() const { return positive() ? 1 : (negative() ? -1 : 0); }

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    friend RatInterval operator*(const RatInterval& a, const Rat& k);
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

    RatInterval square() const;
    // Enclosure of sqrt over the non-negative part; throws if hi < 0.
    RatInterval sqrt(unsigned bits) const;
    // Outward rounding of both endpoints to multiples of 2^-bits.
    RatInterval round_out(unsigned bits) const;
    static RatInterval hull(const RatInterval& a, const RatInterval& b);

    std::pair<double, double> to_doubles() const { return {to_double(lo_), to_double(hi_)}; }

private:
    Rat lo_ = 0;
    Rat hi_ = 0;
};

}  // namespace offsetsing
