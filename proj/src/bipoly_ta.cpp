#include "offsetsing/bipoly_ta.hpp"

namespace offsetsing {

BiPolyTA multiply(const BiPolyTA& a, const BiPolyTA& c, const UniPoly& b)
{
    return {a.even * c.even + a.odd * c.odd * b, a.even * c.odd + a.odd * c.even};
}

BiPolyTA reduce_alpha_powers(const std::vector<UniPoly>& coeffs, const UniPoly& b)
{
    BiPolyTA r;
    UniPoly bpow = UniPoly::constant(1);
    for (std::size_t k = 0; k < coeffs.size(); k += 2) {
        r.even += coeffs[k] * bpow;
        if (k + 1 < coeffs.size()) r.odd += coeffs[k + 1] * bpow;
        bpow = bpow * b;
    }
    return r;
}

}  // namespace offsetsing
