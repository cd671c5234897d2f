#pragma once

// Shared fixtures and hand-rolled random generators for the test binaries.

#include "offsetsing/report.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace offsetsing;

inline std::string source_path(const std::string& rel) { return std::string(OFFSETSING_SOURCE_DIR) + "/" + rel; }

inline CurveSpec corpus_curve(const std::string& stem) { return parse_curve_file(source_path("corpus/" + stem + ".json")); }

// Canonical p/q.
inline Rat frac(long p, long q)
{
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline UniPoly ints(std::initializer_list<long> cs)
{
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

inline CurveSpec make_curve(UniPoly X, UniPoly Y, UniPoly W, Rat d, std::string name = "test")
{
    CurveSpec c;
    c.name = std::move(name);
    c.X = std::move(X);
    c.Y = std::move(Y);
    c.W = std::move(W);
    c.d = d;
    return c;
}

inline CurveSpec parabola() { return make_curve(ints({0, 1}), ints({0, 0, 1}), ints({1}), 1, "parabola"); }
inline CurveSpec cardioid()
{
    return make_curve(ints({0, 0, 0, -1024}), ints({0, 0, 128, 0, -2048}), ints({1, 0, 32, 0, 256}), 1, "cardioid");
}
inline CurveSpec circle() { return make_curve(ints({1, 0, -1}), ints({0, 2}), ints({1, 0, 1}), 1, "circle"); }

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    long nonzero(long bound)
    {
        long v = 0;
        while (v == 0) v = integer(-bound, bound);
        return v;
    }
    bool coin() { return integer(0, 1) == 1; }

    Rat rational(long num_bound, long den_bound)
    {
        Rat q(integer(-num_bound, num_bound), integer(1, den_bound));
        q.canonicalize();
        return q;
    }

    // Integer coefficients, exact degree `deg`.
    UniPoly uni(int deg, long bound)
    {
        std::vector<Rat> v;
        for (int i = 0; i < deg; ++i) v.emplace_back(integer(-bound, bound));
        v.emplace_back(nonzero(bound));
        return UniPoly(std::move(v));
    }

    UniPoly rat_uni(int deg, long bound)
    {
        std::vector<Rat> v;
        for (int i = 0; i < deg; ++i) v.push_back(rational(bound, bound));
        Rat lead = 0;
        while (lead == 0) lead = rational(bound, bound);
        v.push_back(lead);
        return UniPoly(std::move(v));
    }

    ZPoly zpoly(int deg, long bound) { return uni(deg, bound).primitive_integer(); }

    // Integer polynomial in x, y of total degree <= dxy.
    TriPoly xy(int dxy, long bound, int terms)
    {
        TriPoly p;
        for (int k = 0; k < terms; ++k) {
            int ex = static_cast<int>(integer(0, dxy));
            int ey = static_cast<int>(integer(0, dxy - ex));
            p += TriPoly::term(integer(-bound, bound), ex, ey, 0);
        }
        return p;
    }

    // Exact t-degree `deg`, coefficients in Z[x, y].
    TriPoly in_t(int deg, int dxy, long bound)
    {
        std::vector<TriPoly> cs;
        for (int k = 0; k <= deg; ++k) cs.push_back(xy(dxy, bound, 3));
        while (cs.back().is_zero()) cs.back() = xy(dxy, bound, 3);
        return TriPoly::from_t_coeffs(cs);
    }

    TriPoly tri(int dx, int dy, int dt, long bound, int terms)
    {
        TriPoly p;
        for (int k = 0; k < terms; ++k)
            p += TriPoly::term(rational(bound, 4), static_cast<int>(integer(0, dx)), static_cast<int>(integer(0, dy)),
                               static_cast<int>(integer(0, dt)));
        return p;
    }

    // A proper-looking random rational curve; W has no real roots.
    CurveSpec curve()
    {
        for (;;) {
            int n = static_cast<int>(integer(1, 3));
            UniPoly X = uni(static_cast<int>(integer(1, n + 1)), 5);
            UniPoly Y = uni(static_cast<int>(integer(1, n + 1)), 5);
            UniPoly W = coin() ? ints({1}) : ints({integer(1, 4), 0, integer(1, 4)});
            Rat d(integer(1, 9), integer(1, 4));
            d.canonicalize();
            try {
                CurveSpec c = normalize_curve(make_curve(X, Y, W, d, "random"));
                build_offset_system(c);
                return c;
            } catch (const std::exception&) {
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
