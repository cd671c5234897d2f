#pragma once

#include "offsetsing/interval.hpp"
#include "offsetsing/tripoly.hpp"
#include "offsetsing/unipoly.hpp"

#include <optional>
#include <string>
#include <utility>

namespace offsetsing {

// phi(t) = (X/W, Y/W), offset distance d.
struct CurveSpec {
    std::string name;
    UniPoly X;
    UniPoly Y;
    UniPoly W;
    Rat d = 1;
};

struct NormalData {
    UniPoly U, V;        // X'W - XW', Y'W - YW'
    UniPoly nu;          // U = nu * Uhat, V = nu * Vhat
    UniPoly Uhat, Vhat;  // coprime, jointly primitive integer polynomials
};

struct Contents {
    UniPoly mu, sigma, gamma, beta;  // monic
};

struct OffsetSystem {
    UniPoly U, V, nu, Uhat, Vhat;
    UniPoly mu, sigma, gamma, beta;
    TriPoly Ptilde, Qtilde;
    TriPoly P, Q;  // primitive integer forms of Ptilde/beta and Qtilde/mu
    int degP_t = 0;
    int degQ_t = 0;

    // Uhat^2 + Vhat^2
    UniPoly b() const { return Uhat * Uhat + Vhat * Vhat; }
};

struct InfinityInfo {
    bool p_inf_affine = false;
    std::optional<std::pair<Rat, Rat>> p_inf;
};

// "+" uses the normal (Vhat, -Uhat)/|.|.
enum class Branch { Plus, Minus };
inline int branch_sign(Branch b) { return b == Branch::Plus ? 1 : -1; }
inline const char* branch_name(Branch b) { return b == Branch::Plus ? "+" : "-"; }

CurveSpec normalize_curve(CurveSpec raw);
NormalData derive_normals(const CurveSpec& c);
bool perfect_square_test(const UniPoly& U, const UniPoly& V);
Contents compute_contents(const CurveSpec& c, const UniPoly& U, const UniPoly& V);

struct PQ {
    TriPoly Ptilde, Qtilde, P, Q;
};
PQ build_PQ(const CurveSpec& c, const NormalData& normals, const Contents& contents);

// The full derivation. Throws ReducibleOffsetError when U^2 + V^2 is a perfect square.
OffsetSystem build_offset_system(const CurveSpec& c);

// Advisory: gcd(X - x0 W, Y - y0 W) has degree > 1 at a sample point (x0, y0) of the curve,
// which indicates a parametrization that is not proper.
bool properness_suspect(const CurveSpec& c);

InfinityInfo infinity_info(const CurveSpec& c);

// Compose with t -> (a t + b) / (cc t + e).
CurveSpec mobius_reparametrize(const CurveSpec& c, const Rat& a, const Rat& b, const Rat& cc, const Rat& e);

struct PointEnclosure {
    RatInterval x, y;
};

// Offset point on the given branch. Throws std::domain_error when W may vanish on t.
PointEnclosure eval_offset_point(const CurveSpec& c, const OffsetSystem& sys, const RatInterval& t, Branch br,
                                 unsigned bits = 160);
std::pair<double, double> eval_offset_point(const CurveSpec& c, const OffsetSystem& sys, double t, Branch br);

// Divide every t-coefficient polynomial of p by q exactly.
TriPoly divide_in_t(const TriPoly& p, const UniPoly& q);

}  // namespace offsetsing
