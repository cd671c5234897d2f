#pragma once

#include "offsetsing/unipoly.hpp"

#include <vector>

namespace offsetsing {

// even(t) + odd(t) * alpha, with alpha^2 = b(t) applied.
struct BiPolyTA {
    UniPoly even;
    UniPoly odd;

    friend bool operator==(const BiPolyTA&, const BiPolyTA&) = default;
};

BiPolyTA multiply(const BiPolyTA& a, const BiPolyTA& c, const UniPoly& b);

// Reduce sum_k coeffs[k] * alpha^k modulo alpha^2 - b.
BiPolyTA reduce_alpha_powers(const std::vector<UniPoly>& coeffs, const UniPoly& b);

}  // namespace offsetsing
