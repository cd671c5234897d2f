#pragma once

#include "offsetsing/classifier.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace offsetsing {

// Curve files are JSON: {"name", "X", "Y", "W", "d"}, integer arrays in ascending degree.
// Throws InputError with the offending field in the message.
CurveSpec parse_curve_text(std::string_view text);
CurveSpec parse_curve_file(const std::string& path);
// Canonical form; parse_curve_text(emit_curve_file(c)) == c for normalized c.
std::string emit_curve_file(const CurveSpec& c);

struct ReportRoot {
    std::string lo, hi;  // rational endpoints
    bool exact = false;
    std::string approx;
    std::string kind;
    std::vector<std::string> branches;
    std::vector<std::size_t> partners;
    bool near_coincident = false;
    bool nu_zero = false;
    std::array<double, 2> point_plus{0, 0};
    std::array<double, 2> point_minus{0, 0};
};

struct ReportFlags {
    bool reducible_rejected = false;
    bool superfluous_present = false;
    bool unresolved_present = false;
    bool w_gcd_nonconstant = false;
    bool b_gcd_nonconstant = false;
};

struct Report {
    std::string name;
    std::string d;
    int precision_bits = 53;
    std::size_t n_p = 0;
    std::optional<int> delta_t;
    std::optional<std::size_t> tau;
    std::optional<int> deg_t_P;
    std::optional<int> deg_t_Q;
    std::optional<int> deg_omega_tilde;
    std::vector<ReportRoot> roots;
    ReportFlags flags;
    std::optional<double> wall_time_ms;
};

struct AnalyzeOptions {
    int precision_bits = 53;
    std::optional<std::array<Rat, 4>> mobius;  // t -> (a t + b) / (c t + e)
    double pair_tol = kDefaultPairTol;
    bool timing = false;
};

struct Analysis {
    CurveSpec curve;  // after the optional reparametrization
    Report report;
    std::optional<PipelineResult> result;  // absent when the offset is reducible
    std::optional<Classification> classification;
};

// Runs solver and classifier. A reducible offset yields a report with the flag set and no
// roots; other errors propagate.
Analysis analyze(const CurveSpec& c, const AnalyzeOptions& opts = {});

// Decimal rendering of q with `digits` digits after the point, rounded to nearest.
std::string decimal_string(const Rat& q, int digits);

// Deterministic JSON: fixed key order, roots sorted by midpoint.
std::string emit_report(const Report& r);

struct Window {
    double x0, y0, x1, y1;
};

// Standalone SVG 1.1 plot of the generator, both offset branches and the classified roots.
// Throws InputError on an empty window. Without a window one is fitted to the generator.
std::string emit_svg(const CurveSpec& c, const OffsetSystem& sys, const Report& r, std::optional<Window> window,
                     int samples = 2000);

}  // namespace offsetsing
