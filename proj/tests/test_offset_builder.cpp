#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace offsetsing;
using testsupport::Gen;
using testsupport::ints;

namespace {

UniPoly U_of(const CurveSpec& c) { return c.X.derivative() * c.W - c.X * c.W.derivative(); }
UniPoly V_of(const CurveSpec& c) { return c.Y.derivative() * c.W - c.Y * c.W.derivative(); }

bool proportional(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a * (b.lead() / a.lead()) == b;
}

bool proportional(const TriPoly& a, const TriPoly& b)
{
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a * (b.leading_term().second / a.leading_term().second) == b;
}

TriPoly x() { return TriPoly::variable(Var::X); }
TriPoly y() { return TriPoly::variable(Var::Y); }
TriPoly t() { return TriPoly::variable(Var::T); }
TriPoly k(long v) { return TriPoly::constant(v); }

}  // namespace

TEST_CASE("normalize_curve")
{
    auto c = testsupport::cardioid();
    CurveSpec n = normalize_curve(c);
    CHECK(n.X == c.X);
    CHECK(n.Y == c.Y);
    CHECK(n.W == c.W);

    UniPoly tt = ints({0, 1});
    CurveSpec scaled = testsupport::make_curve(c.X * tt, c.Y * tt, c.W * tt, 1);
    CurveSpec back = normalize_curve(scaled);
    CHECK(back.X == c.X);
    CHECK(back.W == c.W);

    CHECK_THROWS_AS(normalize_curve(testsupport::make_curve(ints({0, 1}), ints({1}), UniPoly{}, 1)), InputError);
    CHECK_THROWS_AS(normalize_curve(testsupport::make_curve(ints({0, 1}), ints({1}), ints({1}), 0)), InputError);
    CHECK_THROWS_AS(normalize_curve(testsupport::make_curve(ints({3}), ints({1}), ints({2}), 1)), InputError);
}

TEST_CASE("derive_normals examples")
{
    auto card = derive_normals(testsupport::cardioid());
    UniPoly t2 = UniPoly::monomial(1, 2);
    CHECK(card.U == UniPoly::monomial(1024, 2) * ints({-3, 0, 16}) * ints({1, 0, 16}));
    CHECK(card.V == UniPoly::monomial(-256, 1) * ints({-1, 0, 48}) * ints({1, 0, 16}));
    CHECK(proportional(card.Uhat, UniPoly::monomial(4, 1) * ints({-3, 0, 16})));
    CHECK(proportional(card.Vhat, ints({1, 0, -48})));
    CHECK(card.Uhat * card.nu == card.U);
    CHECK(card.Vhat * card.nu == card.V);
    CHECK(gcd(card.Uhat, card.Vhat) == ints({1}));

    auto par = derive_normals(testsupport::parabola());
    CHECK(par.U == ints({1}));
    CHECK(par.V == ints({0, 2}));
    CHECK(par.Uhat == ints({1}));
    CHECK(par.Vhat == ints({0, 2}));

    CurveSpec circ = testsupport::circle();
    CHECK(U_of(circ) == ints({0, -4}));
    CHECK(V_of(circ) == ints({2, 0, -2}));
    CHECK(U_of(circ) * U_of(circ) + V_of(circ) * V_of(circ) == ints({2, 0, 2}).pow(2));
    (void)t2;
}

TEST_CASE("perfect_square_test")
{
    CurveSpec circ = testsupport::circle();
    CHECK(perfect_square_test(U_of(circ), V_of(circ)));
    auto c = testsupport::cardioid();
    UniPoly S = U_of(c) * U_of(c) + V_of(c) * V_of(c);
    CHECK(S == UniPoly::monomial(65536, 2) * ints({1, 0, 16}).pow(5));
    CHECK(!perfect_square_test(U_of(c), V_of(c)));
    CHECK(!perfect_square_test(ints({1}), ints({0, 2})));
    // Positive constants count as squares.
    CHECK(perfect_square_test(ints({3}), ints({4})));
    CHECK_THROWS_AS(build_offset_system(circ), ReducibleOffsetError);
}

TEST_CASE("properness heuristic")
{
    CHECK(!properness_suspect(testsupport::cardioid()));
    CHECK(!properness_suspect(testsupport::parabola()));
    // (t^2, t^4) traces the parabola twice.
    CHECK(properness_suspect(testsupport::make_curve(ints({0, 0, 1}), ints({0, 0, 0, 0, 1}), ints({1}), 1)));
}

TEST_CASE("contents")
{
    auto par = testsupport::parabola();
    auto cp = compute_contents(par, U_of(par), V_of(par));
    CHECK(cp.mu == ints({1}));
    CHECK(cp.sigma == ints({1}));
    CHECK(cp.beta == gcd(U_of(par), V_of(par)));
    CHECK(cp.gamma == cp.beta);

    auto c = testsupport::cardioid();
    auto cc = compute_contents(c, U_of(c), V_of(c));
    CHECK(cc.mu == c.W.monic());
    CHECK(proportional(cc.beta, cc.sigma * cc.gamma * cc.mu));

    // sigma = 1 whenever W is squarefree
    auto c7 = testsupport::corpus_curve("c07");
    CHECK(compute_contents(c7, U_of(c7), V_of(c7)).sigma == ints({1}));
}

TEST_CASE("build_PQ examples")
{
    auto sys = build_offset_system(testsupport::cardioid());
    TriPoly P = k(64) * x() * t().pow(3) - (k(128) + k(48) * y()) * t().pow(2) - k(12) * t() * x() + y();
    TriPoly r2 = x().pow(2) + y().pow(2);
    TriPoly Q = k(256) * (r2 + k(16) * y() + k(63)) * t().pow(4) + k(2048) * x() * t().pow(3) +
                k(32) * (r2 - k(8) * y() - k(1)) * t().pow(2) + (r2 - k(1));
    CHECK(proportional(sys.P, P));
    CHECK(proportional(sys.Q, Q));
    CHECK(sys.degP_t == 3);
    CHECK(sys.degQ_t == 4);

    auto par = build_offset_system(testsupport::parabola());
    CHECK(proportional(par.Ptilde, (x() - t()) + k(2) * t() * (y() - t().pow(2))));
    CHECK(proportional(par.P, par.Ptilde));

    auto c1 = build_offset_system(testsupport::corpus_curve("c01_lemniscate"));
    CHECK(c1.degP_t == 6);
    CHECK(c1.degQ_t == 4);
}

TEST_CASE("infinity_info")
{
    CHECK(!infinity_info(testsupport::parabola()).p_inf_affine);
    auto ci = infinity_info(testsupport::cardioid());
    REQUIRE(ci.p_inf_affine);
    CHECK(ci.p_inf->first == 0);
    CHECK(ci.p_inf->second == -8);
    auto eq = infinity_info(testsupport::make_curve(ints({1, 2, 3}), ints({0, 1, -5}), ints({1, 0, 2}), 1));
    REQUIRE(eq.p_inf_affine);
    CHECK(eq.p_inf->first == Rat(3, 2));
    CHECK(eq.p_inf->second == Rat(-5, 2));
}

TEST_CASE("mobius_reparametrize")
{
    auto par = testsupport::parabola();
    CurveSpec same = mobius_reparametrize(par, 1, 0, 0, 1);
    CHECK(same.X == par.X);
    CHECK(same.Y == par.Y);
    CHECK(same.W == par.W);

    CurveSpec inv = mobius_reparametrize(par, 0, 1, 1, 0);
    CHECK(proportional(inv.X, ints({0, 1})));
    CHECK(proportional(inv.Y, ints({1})));
    CHECK(proportional(inv.W, ints({0, 0, 1})));
    for (int s = 1; s <= 10; ++s) {
        Rat sv = testsupport::frac(s, 3);
        Rat t = 1 / sv;
        CHECK(inv.X.eval(sv) / inv.W.eval(sv) == par.X.eval(t) / par.W.eval(t));
        CHECK(inv.Y.eval(sv) / inv.W.eval(sv) == par.Y.eval(t) / par.W.eval(t));
    }

    auto c = testsupport::cardioid();
    CurveSpec there = mobius_reparametrize(c, 2, 1, 1, 1);
    CurveSpec back = mobius_reparametrize(there, 1, -1, -1, 2);
    CHECK(back.X == c.X);
    CHECK(back.Y == c.Y);
    CHECK(back.W == c.W);
    CHECK_THROWS_AS(mobius_reparametrize(c, 1, 2, 2, 4), InputError);

    Gen g(9);
    for (int k2 = 0; k2 < 10; ++k2) {
        Rat a(g.integer(1, 5)), b(g.integer(-5, 5)), cc(g.integer(-3, 3)), e(g.integer(1, 5));
        if (a * e - b * cc == 0) continue;
        CurveSpec m = mobius_reparametrize(c, a, b, cc, e);
        Rat s = g.rational(9, 4);
        if (cc * s + e == 0 || m.W.eval(s) == 0) continue;
        Rat t = (a * s + b) / (cc * s + e);
        CHECK(m.X.eval(s) / m.W.eval(s) == c.X.eval(t) / c.W.eval(t));
        CHECK(m.Y.eval(s) / m.W.eval(s) == c.Y.eval(t) / c.W.eval(t));
    }
}

TEST_CASE("offset point examples")
{
    auto par = testsupport::parabola();
    auto ps = build_offset_system(par);
    // The interior (concave side) branch at the vertex is (0, 1).
    auto plus = eval_offset_point(par, ps, 0.0, Branch::Plus);
    auto minus = eval_offset_point(par, ps, 0.0, Branch::Minus);
    CHECK(((plus.first == doctest::Approx(0) && plus.second == doctest::Approx(1)) ||
           (minus.first == doctest::Approx(0) && minus.second == doctest::Approx(1))));

    // Axis self-intersection: t (1 - 2 / sqrt(1 + 4 t^2)) = 0 at t = sqrt(3)/2.
    double lo = 0.5, hi = 1.5;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (1 - 2 / std::sqrt(1 + 4 * mid * mid) < 0 ? lo : hi) = mid;
    }
    double ts = 0.5 * (lo + hi);
    CHECK(ts == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-14));
    bool hit = false;
    for (Branch b : {Branch::Plus, Branch::Minus}) {
        auto p = eval_offset_point(par, ps, ts, b), q = eval_offset_point(par, ps, -ts, b);
        if (std::hypot(p.first - q.first, p.second - q.second) < 1e-12) hit = true;
    }
    CHECK(hit);

    auto c = testsupport::cardioid();
    auto cs = build_offset_system(c);
    auto a = eval_offset_point(c, cs, 0.0, Branch::Plus), b = eval_offset_point(c, cs, 0.0, Branch::Minus);
    CHECK(a.first == doctest::Approx(1));
    CHECK(a.second == doctest::Approx(0));
    CHECK(b.first == doctest::Approx(-1));
    CHECK(b.second == doctest::Approx(0));
    auto enc = eval_offset_point(c, cs, RatInterval::point(0), Branch::Plus);
    CHECK(enc.x.contains(1));
    CHECK(enc.y.contains(0));

    CHECK_THROWS_AS(eval_offset_point(testsupport::corpus_curve("c08"), build_offset_system(testsupport::corpus_curve("c08")),
                                      RatInterval(-100, 100), Branch::Plus),
                    std::domain_error);
}

TEST_CASE("random curves: distance, normal line and circle (50 curves x 20 parameters)")
{
    Gen g(77);
    int failures = 0;
    for (int k2 = 0; k2 < 50; ++k2) {
        CurveSpec c = g.curve();
        OffsetSystem sys = build_offset_system(c);
        failures += gcd(sys.Uhat, sys.Vhat).degree() != 0;
        failures += !(sys.Uhat * sys.nu == sys.U && sys.Vhat * sys.nu == sys.V);
        failures += !proportional(sys.beta, sys.sigma * sys.gamma * sys.mu);
        failures += !proportional(sys.P * TriPoly::from_uni(sys.beta), sys.Ptilde);
        failures += !proportional(sys.Q * TriPoly::from_uni(sys.mu), sys.Qtilde);
        for (int j = 0; j < 20; ++j) {
            Rat t = g.rational(40, 9);
            if (c.W.eval(t) == 0) continue;
            if (sys.Uhat.eval(t) == 0 && sys.Vhat.eval(t) == 0) continue;
            RatInterval ti = RatInterval::point(t);
            for (Branch br : {Branch::Plus, Branch::Minus}) {
                auto p = eval_offset_point(c, sys, ti, br, 200);
                Rat gx = c.X.eval(t) / c.W.eval(t), gy = c.Y.eval(t) / c.W.eval(t);
                RatInterval dist2 = (p.x - RatInterval::point(gx)).square() + (p.y - RatInterval::point(gy)).square();
                failures += !dist2.contains(c.d * c.d);
                failures += !sys.Ptilde.eval(p.x, p.y, ti, 200).contains_zero();
                failures += !sys.Qtilde.eval(p.x, p.y, ti, 200).contains_zero();
            }
        }
    }
    CHECK(failures == 0);
}
