#pragma once

#include "offsetsing/bipoly_ta.hpp"
#include "offsetsing/offset_builder.hpp"
#include "offsetsing/subresultants.hpp"
#include "offsetsing/zpoly.hpp"

#include <utility>
#include <vector>

namespace offsetsing {

// Numerator of sres1(x(t,alpha), y(t,alpha)) after alpha^2 -> Uhat^2 + Vhat^2, with
// x = X/W + d Vhat/alpha, y = Y/W - d Uhat/alpha and d = p/q. The full denominator is
// (q alpha W)^N.
struct AlphaForm {
    BiPolyTA numerator;
    int N = 0;
};

struct OmegaData {
    UniPoly xi1, eta1;
    UniPoly omega_tilde;  // xi1^2 b - eta1^2
    UniPoly omega_star;   // squarefree part, monic
    UniPoly omega;        // omega_star / gcd(omega_star, W b), monic
    int deg_omega_tilde_raw = 0;  // before cancelling common factors of xi1, eta1 with W b
    int deg_omega_tilde = 0;
    int deg_omega = 0;
    std::size_t tau_omega = 0;
    bool w_gcd_nonconstant = false;  // gcd(omega_star, W) nonconstant
    bool b_gcd_nonconstant = false;  // gcd(omega_star, b) nonconstant
};

struct IsolatedRoot {
    Rat lo, hi;  // lo == hi for exact rational roots
    bool exact() const { return lo == hi; }
    Rat mid() const { return (lo + hi) / 2; }
    double approx() const { return to_double(mid()); }
};

struct RootSet {
    ZPoly poly;  // primitive integer form of the polynomial that was isolated
    std::vector<IsolatedRoot> roots;
    int precision_bits = 53;
};

struct SolverOptions {
    int precision_bits = 53;
    ChainStrategy strategy = ChainStrategy::Auto;
};

// Subres_1(P, Q) = sres1(x, y) t + sr(x, y), with the common integer content removed.
std::pair<TriPoly, TriPoly> first_subresultant_xy(const OffsetSystem& sys,
                                                  ChainStrategy strategy = ChainStrategy::Auto);

AlphaForm substitute_alpha(const TriPoly& sres1, const OffsetSystem& sys, const CurveSpec& c);

// (xi1, eta1) = (odd part, even part) of the reduced alpha polynomial.
std::pair<UniPoly, UniPoly> reduce_alpha(const BiPolyTA& a, const UniPoly& b);
std::pair<UniPoly, UniPoly> reduce_alpha(const std::vector<UniPoly>& alpha_coeffs, const UniPoly& b);

// Common factors of xi1 and eta1 that divide a power of W b are dropped first; these
// only vanish where the denominator does.
OmegaData build_omega(const UniPoly& xi1, const UniPoly& eta1, const OffsetSystem& sys, const CurveSpec& c);

// Descartes bisection on the primitive integer form, then bisection refinement to
// width <= 2^-precision_bits. Throws std::invalid_argument for non-squarefree input.
RootSet isolate_real_roots(const UniPoly& omega, int precision_bits = 53);

// Number of distinct real roots in (a, b], by Sturm sequence. Used as a cross-check.
std::size_t sturm_root_count(const ZPoly& p, const Rat& a, const Rat& b);

// Exact sign of f at the root of `poly` isolated by r; may tighten r.
int sign_at_root(const ZPoly& f, const ZPoly& poly, IsolatedRoot& r);

// Halve the isolating interval once (no-op for exact roots).
void bisect_root(const ZPoly& poly, IsolatedRoot& r);

struct PipelineResult {
    CurveSpec curve;
    OffsetSystem sys;
    TriPoly sres1, sr;
    AlphaForm alpha;
    OmegaData omega;
    RootSet roots;
};

PipelineResult run_offset_sing(const CurveSpec& c, const SolverOptions& opts = {});

}  // namespace offsetsing
