#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jacinf/mapio.hpp"
#include "oracles.hpp"

using namespace jacinf;

TEST_CASE("parse the elementary map") {
    PolyMap f = parse_map("x + y^3; y");
    auto vs = PolyMap::xy();
    Poly x = Poly::variable(vs, 0), y = Poly::variable(vs, 1);
    CHECK(f.P == x + y * y * y);
    CHECK(f.Q == y);
    CHECK(f.d == 3);
}

TEST_CASE("parse the cusp example") {
    PolyMap f = parse_map("2x^3 + x*y; 3x^2 + y");
    auto vs = PolyMap::xy();
    Poly x = Poly::variable(vs, 0), y = Poly::variable(vs, 1);
    CHECK(f.P == x * x * x.mul_scalar(Rat(2)) + x * y);
    CHECK(f.Q == x * x.mul_scalar(Rat(3)) + y);
}

TEST_CASE("unknown variable is rejected with position") {
    CHECK_THROWS_AS(parse_map("x + z; y"), ParseError);
    try {
        parse_map("x + z; y");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
        CHECK(e.col == 5);
    }
}

TEST_CASE("parser accepts rationals, parens, implicit multiplication") {
    auto vs = PolyMap::xy();
    Poly x = Poly::variable(vs, 0), y = Poly::variable(vs, 1);
    CHECK(parse_poly_xy("1/2 x y") == x * y.mul_scalar(make_rat(1, 2)));
    CHECK(parse_poly_xy("(x+y)^2") == x * x + x * y.mul_scalar(Rat(2)) + y * y);
    CHECK(parse_poly_xy("-x + 3") == Poly::constant(vs, Rat(3)) - x);
    CHECK(parse_poly_xy("2(x)(y)") == x * y.mul_scalar(Rat(2)));
    CHECK(parse_poly_xy(" x\n+\ty ") == x + y);
}

TEST_CASE("parser error cases") {
    CHECK_THROWS_AS(parse_poly_xy("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly_xy("x^y"), ParseError);        // exponent not a literal
    CHECK_THROWS_AS(parse_poly_xy("x^(2)"), ParseError);      // exponent not a literal
    CHECK_THROWS_AS(parse_poly_xy("(x"), ParseError);         // unbalanced
    CHECK_THROWS_AS(parse_poly_xy("x +"), ParseError);        // dangling operator
    CHECK_THROWS_AS(parse_poly_xy("x / y"), ParseError);      // no division operator
    CHECK_THROWS_AS(parse_poly_xy(""), ParseError);
    CHECK_THROWS_AS(parse_map("x + y"), ParseError);          // missing ';'
    CHECK_THROWS_AS(parse_map("x; y; x"), ParseError);        // too many ';'
    CHECK_THROWS_AS(parse_map("1; 2"), ParseError);           // constant map
}

TEST_CASE("parse / print round trip on random polynomials") {
    auto vs = PolyMap::xy();
    std::mt19937_64 rng(101);
    for (int i = 0; i < 60; ++i) {
        Poly p = jacinf::testing::random_poly(rng, vs, 5, 5);
        Poly back = parse_poly_xy(p.str());
        CHECK(back == p);
    }
    // with genuinely rational coefficients
    Poly p = parse_poly_xy("1/3 x^4 - 7/2 y + 5");
    CHECK(parse_poly_xy(p.str()) == p);
}

TEST_CASE("map round trip") {
    PolyMap f = parse_map("x + 2y^2 - 1/2; y - x^3");
    PolyMap g = parse_map(f.str());
    CHECK(g.P == f.P);
    CHECK(g.Q == f.Q);
}

TEST_CASE("jacobian examples") {
    auto vs = PolyMap::xy();
    Poly x = Poly::variable(vs, 0), y = Poly::variable(vs, 1);
    CHECK(jacobian(parse_map("x + y^2; y")) == Poly::constant(vs, Rat(1)));
    CHECK(jacobian(parse_map("2x^3 + xy; 3x^2 + y")) == y);
    CHECK(jacobian(parse_map("x; x*y")) == x);
}

TEST_CASE("composition examples") {
    PolyMap a = parse_map("x + y^2; y");
    PolyMap b = parse_map("x; y + 1");
    CHECK(compose(a, b).str() == parse_map("x + (y+1)^2; y + 1").str());
    PolyMap id = identity_map();
    CHECK(compose(a, id).str() == a.str());
    CHECK(compose(id, a).str() == a.str());
    PolyMap swap = parse_map("y; x");
    CHECK(compose(a, swap).str() == parse_map("y + x^2; x").str());
}
