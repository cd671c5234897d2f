#include "support.hpp"

#include <doctest.h>

using namespace offsetsing;
using testsupport::Gen;
using testsupport::ints;

namespace {

// Plain Euclid over Q, independent of the modular gcd.
UniPoly euclid_gcd(UniPoly a, UniPoly b)
{
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

}  // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rat("3/10") == Rat(3, 10));
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("0.3") == Rat(3, 10));
    CHECK(parse_rat("12") == Rat(12));
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("abc"), InputError);
    CHECK_THROWS_AS(parse_rat(""), InputError);
    CHECK(to_string(Rat(-7, 3)) == "-7/3");
    CHECK(bit_length(Int(0)) == 0);
    CHECK(bit_length(Int(-8)) == 4);
}

TEST_CASE("arithmetic examples")
{
    CHECK(ints({-1, 0, 1}) * ints({1, 1}) == ints({-1, -1, 1, 1}));
    CHECK((ints({3, 1, 4}) * UniPoly{}).is_zero());
    CHECK(ints({1, 1}).pow(2) == ints({1, 2, 1}));
    CHECK(ints({0, 0, 0, 1}).derivative() == ints({0, 0, 3}));
    CHECK(ints({5}).derivative().is_zero());

    UniPoly W = ints({1, 0, 32, 0, 256});
    CHECK(W.derivative() == ints({0, 64, 0, 1024}));
    const double h = 1e-6;
    double fd = (W.eval(1.0 + h) - W.eval(1.0 - h)) / (2 * h);
    CHECK(fd == doctest::Approx(1088.0).epsilon(1e-6));
    CHECK(W.eval(Rat(0)) == 1);
    CHECK(ints({1, 0, 1}).eval(Rat(2)) == 5);
}

TEST_CASE("gcd examples")
{
    CHECK(gcd(ints({-1, 0, 1}), ints({-1, 1})) == ints({-1, 1}));
    CHECK(gcd(ints({2, 4}), UniPoly{}) == UniPoly{Rat(1, 2), 1});

    auto c = testsupport::cardioid();
    UniPoly U = c.X.derivative() * c.W - c.X * c.W.derivative();
    UniPoly V = c.Y.derivative() * c.W - c.Y * c.W.derivative();
    // 256 t (16 t^2 + 1), made monic
    CHECK(gcd(U, V) == UniPoly{0, Rat(1, 16), 0, 1});
}

TEST_CASE("content and primitive part")
{
    // 6 t^2 x + 9 t x: the only coefficient in x is 6t^2 + 9t, which is all content.
    TriPoly p = TriPoly::term(6, 1, 0, 2) + TriPoly::term(9, 1, 0, 1);
    auto s = content_primpart(p, {Var::T});
    CHECK(s.content * s.primitive == p);
    CHECK(s.primitive == TriPoly::variable(Var::X));
    CHECK(s.content == TriPoly::term(6, 0, 0, 2) + TriPoly::term(9, 0, 0, 1));

    // Integer content only.
    auto z = content_primpart(p, {});
    CHECK(z.content == TriPoly::constant(3));
    CHECK(z.primitive == TriPoly::term(2, 1, 0, 2) + TriPoly::term(3, 1, 0, 1));

    // Idempotence on a primitive polynomial.
    auto again = content_primpart(z.primitive, {});
    CHECK(again.content == TriPoly::constant(1));

    // Cardioid: X^2 + Y^2 = 16384 t^4 W, so mu = gcd(W, X^2 + Y^2) is W itself.
    auto c = testsupport::cardioid();
    CHECK(c.X * c.X + c.Y * c.Y == UniPoly::monomial(16384, 4) * c.W);
    CHECK(gcd(c.W, c.X * c.X + c.Y * c.Y) == c.W.monic());

    CHECK_THROWS(content_primpart(TriPoly{}, {}));
    CHECK_THROWS_AS(content_primpart(p, {Var::X, Var::T}), std::invalid_argument);
}

TEST_CASE("content reconstructs the input (100 random)")
{
    Gen g(101);
    for (int k = 0; k < 100; ++k) {
        TriPoly p;
        while (p.is_zero()) p = g.tri(2, 2, 3, 12, 5);
        std::vector<Var> vars;
        switch (k % 4) {
        case 1: vars = {Var::T}; break;
        case 2: vars = {Var::X}; break;
        case 3: vars = {Var::Y}; break;
        default: break;
        }
        if (k % 3 == 0) p = p * TriPoly::from_uni(g.uni(1, 3), vars.empty() ? Var::T : vars[0]);
        auto s = content_primpart(p, vars);
        CHECK(s.content * s.primitive == p);
        CHECK(s.primitive.is_integral());
        if (!vars.empty()) {
            auto inner = content_primpart(s.primitive, vars);
            CHECK(inner.content.is_constant());
        }
    }
}

TEST_CASE("squarefree examples and properties")
{
    UniPoly a = ints({-1, 1}).pow(2) * ints({2, 1});
    CHECK(squarefree(a).squarefree_part == ints({-1, 1}) * ints({2, 1}));
    CHECK(squarefree_part(ints({-2, 1, 1}) * Rat(3)) == ints({-2, 1, 1}));
    CHECK(squarefree_part(UniPoly::monomial(1, 6)) == ints({0, 1}));

    Gen g(202);
    for (int k = 0; k < 60; ++k) {
        UniPoly p = g.uni(static_cast<int>(g.integer(1, 3)), 6);
        for (int e = 0; e < 3; ++e) p = p * g.uni(static_cast<int>(g.integer(1, 2)), 4).pow(static_cast<unsigned>(g.integer(1, 3)));
        auto dec = squarefree(p);
        UniPoly prod = UniPoly::constant(dec.unit);
        for (const auto& [f, m] : dec.factors) prod = prod * f.pow(static_cast<unsigned>(m));
        CHECK(prod == p);
        CHECK(divides(dec.squarefree_part, p));
        CHECK(gcd(dec.squarefree_part, dec.squarefree_part.derivative()) == ints({1}));
        CHECK(dec.squarefree_part == squarefree_part(p));
    }
}

TEST_CASE("modular gcd agrees with Euclid; planted common factor")
{
    Gen g(303);
    for (int k = 0; k < 100; ++k) {
        UniPoly f = g.uni(static_cast<int>(g.integer(0, 5)), 20);
        UniPoly h = g.uni(static_cast<int>(g.integer(0, 4)), 20);
        UniPoly q = g.uni(static_cast<int>(g.integer(0, 5)), 20);
        UniPoly expect = (h * euclid_gcd(f, q)).monic();
        CHECK(gcd(f * h, q * h) == expect);
        CHECK(gcd(f * h, q * h) == euclid_gcd(f * h, q * h));
        ZPoly zf = (f * h).primitive_integer(), zq = (q * h).primitive_integer();
        CHECK(gcd(zf, zq) == euclid_gcd(f * h, q * h).primitive_integer());
    }
}

TEST_CASE("evaluation distributes over arithmetic (100 random)")
{
    Gen g(404);
    for (int k = 0; k < 100; ++k) {
        UniPoly a = g.rat_uni(static_cast<int>(g.integer(0, 6)), 9);
        UniPoly b = g.rat_uni(static_cast<int>(g.integer(0, 6)), 9);
        Rat r = g.rational(20, 7);
        CHECK((a * b).eval(r) == a.eval(r) * b.eval(r));
        CHECK((a + b).eval(r) == a.eval(r) + b.eval(r));
        CHECK(a.pow(3).eval(r) == a.eval(r) * a.eval(r) * a.eval(r));
        CHECK(a.compose(b).eval(r) == a.eval(b.eval(r)));

        TriPoly p = g.tri(2, 2, 2, 6, 4), q = g.tri(2, 2, 2, 6, 4);
        Rat x = g.rational(5, 3), y = g.rational(5, 3), t = g.rational(5, 3);
        CHECK((p * q).eval(x, y, t) == p.eval(x, y, t) * q.eval(x, y, t));
        CHECK((p - q).eval(x, y, t) == p.eval(x, y, t) - q.eval(x, y, t));
        if (!q.is_zero()) {
            auto quotient = try_divide(p * q, q);
            REQUIRE(quotient.has_value());
            CHECK(*quotient == p);
        }
    }
}

TEST_CASE("interval evaluation encloses")
{
    UniPoly sq = ints({0, 0, 1});
    RatInterval e = sq.eval(RatInterval(1, 2));
    CHECK(e.lo() <= 1);
    CHECK(e.hi() >= 4);

    Gen g(505);
    for (int k = 0; k < 50; ++k) {
        UniPoly p = g.rat_uni(static_cast<int>(g.integer(1, 6)), 9);
        Rat lo = g.rational(10, 5), w = testsupport::frac(g.integer(0, 8), 16);
        RatInterval I(lo, lo + w);
        RatInterval v = p.eval(I);
        for (int j = 0; j <= 4; ++j) CHECK(v.contains(p.eval(lo + w * j / 4)));
        RatInterval s = RatInterval(Rat(2), Rat(3)).sqrt(40);
        CHECK(s.lo() * s.lo() <= 2);
        CHECK(s.hi() * s.hi() >= 3);
    }
}

TEST_CASE("bitsize")
{
    CHECK(bitsize(ints({1, 3})) == 2);
    CHECK(bitsize(UniPoly{}) == 0);
    CHECK(bitsize(UniPoly{Rat(1, 2), Rat(3, 4)}) == 2);  // 2 + 3t
}

TEST_CASE("integer polynomial transforms")
{
    Gen g(606);
    for (int k = 0; k < 50; ++k) {
        ZPoly p = g.zpoly(static_cast<int>(g.integer(1, 7)), 30);
        Int x(g.integer(-9, 9));
        CHECK(p.taylor_shift_one().eval(x) == p.eval(x + 1));
        CHECK(p.negate_variable().eval(x) == p.eval(Int(-x)));
        if (x != 0) {
            // t^n p(1/t) at x equals x^n p(1/x)
            Rat lhs(p.reversed().eval(x));
            Rat rhs = UniPoly::from_integer(p).eval(Rat(1) / Rat(x));
            Int xn;
            mpz_pow_ui(xn.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p.degree()));
            CHECK(lhs == rhs * Rat(xn));
        }
        CHECK(p.sign_at(Rat(x)) == sign(p.eval(x)));
        CHECK(divide_exact(p * g.zpoly(2, 5), p).degree() == 2);
    }
}
