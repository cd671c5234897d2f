#pragma once

#include "offsetsing/tripoly.hpp"

#include <vector>

namespace offsetsing {

// How determinant polynomials over Z[x,y] are computed.
//   Interpolation: evaluate on an integer (x, y) grid, eliminate over Z, interpolate.
//   Direct: fraction-free elimination with polynomial entries.
enum class ChainStrategy { Auto, Interpolation, Direct };

struct SylvesterMatrix {
    int n = 0;
    int m = 0;
    int index = 0;
    // Entries are free of t.
    std::vector<std::vector<TriPoly>> entries;

    int rows() const { return n + m - 2 * index; }
    int cols() const { return n + m - index; }
};

// f has t-degree <= n and g has t-degree <= m; 0 <= i < min(n, m), or i = 0 when
// min(n, m) = 0 is not allowed either.
SylvesterMatrix sylvester(const TriPoly& f, int n, const TriPoly& g, int m, int i);

// sum_k det(Delta_k) t^(cols-rows-k), Delta_k = first rows-1 columns plus column k+rows-1
// (0-based). Requires rows <= cols.
TriPoly detpol(const std::vector<std::vector<TriPoly>>& M, ChainStrategy strategy = ChainStrategy::Auto);

struct SubresultantChain {
    int n = 0;
    int m = 0;
    std::vector<TriPoly> polys;      // Subres_0 ... Subres_{min(n,m)-1}
    std::vector<TriPoly> principal;  // sres_i, coefficient of t^i in Subres_i
};

TriPoly subresultant(const TriPoly& f, int n, const TriPoly& g, int m, int i,
                     ChainStrategy strategy = ChainStrategy::Auto);
SubresultantChain chain(const TriPoly& f, int n, const TriPoly& g, int m,
                        ChainStrategy strategy = ChainStrategy::Auto);
// Determinant of the index-0 Sylvester matrix for the actual t-degrees.
TriPoly resultant(const TriPoly& f, const TriPoly& g, ChainStrategy strategy = ChainStrategy::Auto);

// Grid evaluation statistics for the last detpol call on this thread (instrumentation).
struct DetpolStats {
    int grid_x = 0;
    int grid_y = 0;
    bool direct = false;
};
DetpolStats last_detpol_stats();

}  // namespace offsetsing
