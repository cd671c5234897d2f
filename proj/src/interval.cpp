#include "offsetsing/interval.hpp"

#include <algorithm>

namespace offsetsing {

RatInterval::RatInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_) throw InvariantError("interval with lo > hi");
}

RatInterval operator+(const RatInterval& a, const RatInterval& b)
{
    return RatInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b)
{
    return RatInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

RatInterval operator*(const RatInterval& a, const RatInterval& b)
{
    if (a.is_point() && b.is_point()) return RatInterval::point(a.lo_ * b.lo_);
    Rat p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return RatInterval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

RatInterval operator*(const RatInterval& a, const Rat& k)
{
    if (k >= 0) return RatInterval(a.lo_ * k, a.hi_ * k);
    return RatInterval(a.hi_ * k, a.lo_ * k);
}

RatInterval operator/(const RatInterval& a, const RatInterval& b)
{
    if (b.contains_zero()) throw InvariantError("interval division by an interval containing zero");
    return a * RatInterval(1 / b.hi_, 1 / b.lo_);
}

RatInterval RatInterval::square() const
{
    Rat l2 = lo_ * lo_, h2 = hi_ * hi_;
    if (contains_zero()) return RatInterval(0, std::max(l2, h2));
    return RatInterval(std::min(l2, h2), std::max(l2, h2));
}

namespace {

// floor(sqrt(q) * 2^bits) / 2^bits and the matching upper bound.
std::pair<Rat, Rat> sqrt_bounds(const Rat& q, unsigned bits)
{
    if (q <= 0) return {Rat(0), Rat(0)};
    Int n = q.get_num() * q.get_den();
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * static_cast<mp_bitcnt_t>(bits));
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    Int den = q.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rat lo(s, den), hi(s + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    if (s * s == n) hi = lo;
    return {round_down(lo, bits), round_up(hi, bits)};
}

}  // namespace

RatInterval RatInterval::sqrt(unsigned bits) const
{
    if (hi_ < 0) throw InvariantError("sqrt of a negative interval");
    Rat lo = lo_ > 0 ? sqrt_bounds(lo_, bits).first : Rat(0);
    Rat hi = sqrt_bounds(hi_, bits).second;
    return RatInterval(lo, hi);
}

RatInterval RatInterval::round_out(unsigned bits) const
{
    return RatInterval(round_down(lo_, bits), round_up(hi_, bits));
}

RatInterval RatInterval::hull(const RatInterval& a, const RatInterval& b)
{
    return RatInterval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

}  // namespace offsetsing
