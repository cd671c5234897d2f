#pragma once

#include "offsetsing/classifier.hpp"
#include "offsetsing/offset_builder.hpp"
#include "offsetsing/tripoly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

// Brute-force validators. Apart from poly_core types and the CurveSpec/OffsetSystem
// inputs, nothing here calls into the solver, subresultant, or classifier code.
namespace offsetsing::oracle {

// Determinant of a square matrix by fraction-free elimination.
TriPoly bareiss_determinant(std::vector<std::vector<TriPoly>> M);

// Res_t(f, g) from the full Sylvester matrix, by bareiss_determinant.
TriPoly sylvester_resultant(const TriPoly& f, const TriPoly& g);

// H(x, y) = Res_t(P, Q). Throws std::invalid_argument when deg_t P + deg_t Q > cap.
TriPoly implicit_offset(const OffsetSystem& sys, int cap = 16);

enum class HitKind { Cusp, SelfIntersection };

struct ScanHit {
    HitKind kind;
    double t;
    double s;       // partner parameter for self-intersections, else equal to t
    Branch branch;  // branch at t
    Branch partner_branch;
    double x, y;
};

struct ScanOptions {
    int grid = 20000;  // samples per branch over theta in (-pi/2, pi/2), t = tan(theta)
    double tol = 1e-10;
};

std::vector<ScanHit> numeric_singularity_scan(const CurveSpec& c, const ScanOptions& opts = {});

// All parameter values mentioned by the hits, sorted, near-duplicates merged.
std::vector<double> scan_parameters(const std::vector<ScanHit>& hits);

// Parameters not inside any root interval widened by tol * (1 + |t|).
std::vector<double> uncovered_parameters(const std::vector<double>& params, const std::vector<IsolatedRoot>& roots,
                                         double tol = 1e-6);

// H contains zero over certified enclosures of the offset at `count` random rational t.
bool implicit_vanishes_on_offset(const TriPoly& H, const CurveSpec& c, int count = 20, std::uint64_t seed = 11);

// Random horizontal slices y = y0: the roots of H(x, y0) hit by the offset are simple.
bool squarefree_offset_check(const TriPoly& H, const CurveSpec& c, int trials, std::uint64_t seed = 7);

// Interval evaluation of sres1 at the offset point of every root on its recorded branches
// contains zero. Superfluous roots and roots without a branch need one branch to vanish.
bool verify_sres1_vanishing(const Classification& cls, const TriPoly& sres1, const CurveSpec& c);

}  // namespace offsetsing::oracle
