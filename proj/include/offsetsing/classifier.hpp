#pragma once

#include "offsetsing/singularity_solver.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace offsetsing {

enum class RootKind { SelfIntersection, Local, CuspGenerated, Superfluous, Unresolved };
const char* kind_name(RootKind k);

struct RootRecord {
    IsolatedRoot interval;
    RootKind kind = RootKind::Unresolved;
    // Branches carrying the singularity (pairing branch, curvature branch, or both for cusps).
    std::vector<Branch> branches;
    std::vector<std::size_t> partners;
    // Offset point approximations on (+, -).
    std::pair<double, double> point_plus{0, 0};
    std::pair<double, double> point_minus{0, 0};
    bool nu_zero = false;          // t0 is a root of nu = gcd(U, V)
    bool local = false;            // curvature criterion holds
    std::optional<Branch> local_branch;
    bool cusp_generated = false;   // Uhat Vhat' - Vhat Uhat' vanishes at a root of nu
    bool near_coincident = false;  // paired with a parameter closer than kNearCoincidentT
};

struct Classification {
    std::vector<RootRecord> roots;
    double tol = 1e-9;
    bool superfluous_present = false;
    bool unresolved_present = false;
};

struct PairMember {
    std::size_t root;
    Branch branch;
};
using PairGroup = std::vector<PairMember>;

inline constexpr double kDefaultPairTol = 1e-9;
inline constexpr double kNearCoincidentT = 1e-4;

// Groups of (root, branch) whose offset points agree within tol; groups span at least two
// roots. Root intervals are refined (halved, up to 8 rounds) when enclosures are wider
// than tol.
// Roots whose comparison stayed undecided after refinement are appended to `undecided`.
std::vector<PairGroup> pair_self_intersections(RootSet& B, const OffsetSystem& sys, const CurveSpec& c,
                                               double tol = kDefaultPairTol,
                                               std::vector<std::size_t>* undecided = nullptr);

struct LocalTestResult {
    bool singular = false;
    std::optional<Branch> branch;
};

// Curvature criterion k(t0) = -1/d on some branch, decided exactly.
// Throws std::invalid_argument when nu(t0) = 0 (use the cusp test there).
LocalTestResult local_singularity_test(const ZPoly& omega, IsolatedRoot& t0, const OffsetSystem& sys,
                                       const CurveSpec& c);

// Uhat V̂' - Vhat Uhat' = 0 at t0; requires nu(t0) = 0, else std::invalid_argument.
bool cusp_generated_test(const ZPoly& omega, IsolatedRoot& t0, const OffsetSystem& sys);

// Combine pairing and local flags into kinds. With constant mu no root may be superfluous;
// such roots are reported unresolved instead.
Classification superfluous_filter(const RootSet& B, const std::vector<PairGroup>& groups,
                                  const std::vector<RootRecord>& local_flags, const OffsetSystem& sys,
                                  const CurveSpec& c);

// Full classification of a pipeline result; refines res.roots in place.
Classification classify(PipelineResult& res, double tol = kDefaultPairTol);

}  // namespace offsetsing
