#include <catch2/catch_amalgamated.hpp>

#include "skewdna/gf.hpp"
#include "skewdna/parse.hpp"
#include "skewdna/ring.hpp"
#include "skewdna/skewpoly.hpp"

using namespace skewdna;

TEST_CASE("field expressions", "[parse]") {
    FieldContext f(1);
    REQUIRE(parse_field_expr("0", f) == f.zero());
    REQUIRE(parse_field_expr("1", f) == f.one());
    REQUIRE(parse_field_expr("b", f) == f.generator());
    REQUIRE(parse_field_expr("b^7", f) == f.exp(7));
    REQUIRE(parse_field_expr("b^15", f) == f.one());
    REQUIRE(parse_field_expr("b*b*b", f) == f.exp(3));
    REQUIRE(parse_field_expr("(b + 1) * b", f) == f.exp(5));
    REQUIRE(parse_field_expr("b + b", f) == f.zero());
    REQUIRE(parse_field_expr(" b ^ 7 ", f) == f.exp(7));

    REQUIRE_THROWS_AS(parse_field_expr("2", f), ParseError);
    REQUIRE_THROWS_AS(parse_field_expr("b^", f), ParseError);
    REQUIRE_THROWS_AS(parse_field_expr("u1", f), ParseError);
    REQUIRE_THROWS_AS(parse_field_expr("", f), ParseError);
    REQUIRE_THROWS_AS(parse_field_expr("b 1", f), ParseError);
    REQUIRE_THROWS_AS(parse_field_expr("b^99999999999999999999", f), ParseError);
}

TEST_CASE("ring expressions", "[parse]") {
    FieldContext f(1);
    RingContext r3(f, 3);

    const RingElement delta =
        r3.constant(f.exp(7)) + r3.constant(f.generator()) * (r3.variable(2) + r3.variable(3));
    REQUIRE(parse_ring_expr("b^7 + b*(u2+u3)", r3) == delta);
    REQUIRE(parse_ring_expr("b*(u2+u3) + b^7", r3) == delta);
    REQUIRE(parse_ring_expr("u1*u1", r3) == r3.variable(1));  // idempotent collapse
    REQUIRE(parse_ring_expr("(u1+1)*u2*u3", r3) == r3.idempotent(1));
    REQUIRE(parse_ring_expr("1 + 1", r3) == r3.zero());

    RingContext r1(f, 1);
    REQUIRE(parse_ring_expr("crt(1, 0)", r1) == r1.from_components({f.one(), f.zero()}));
    REQUIRE(parse_ring_expr("crt(b^5, b)", r1) == r1.from_components({f.exp(5), f.exp(1)}));
    REQUIRE(parse_ring_expr("crt(1,0) * u1", r1) == r1.variable(1) * r1.variable(1));

    REQUIRE_THROWS_AS(parse_ring_expr("crt(1)", r1), ParseError);
    REQUIRE_THROWS_AS(parse_ring_expr("crt(1, 0, 1, 0)", r1), ParseError);
    REQUIRE_THROWS_AS(parse_ring_expr("crt(u1, 0)", r1), ParseError);
    REQUIRE_THROWS_AS(parse_ring_expr("crt(1, 0", r1), ParseError);
    REQUIRE_THROWS_AS(parse_ring_expr("x + 1", r1), ParseError);
    REQUIRE_THROWS_AS(parse_ring_expr("b @ 1", r1), ParseError);
}

TEST_CASE("undefined variables carry their position", "[parse]") {
    FieldContext f(1);
    RingContext r(f, 3);
    try {
        parse_ring_expr("1 + u9", r);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.position() == 4);
        REQUIRE(std::string(e.what()).find("u9") != std::string::npos);
        REQUIRE(std::string(e.what()).find("position 4") != std::string::npos);
    }
}

TEST_CASE("polynomial list form", "[parse]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewPoly g = parse_poly_expr("poly[1; u1; 1]", r);
    REQUIRE(g == SkewPoly(r, {r.one(), r.variable(1), r.one()}));
    REQUIRE(parse_poly_expr("poly[0]", r).is_zero());
    REQUIRE(parse_poly_expr("poly[b^3 + u1; 0; 1]", r).degree() == 2);

    REQUIRE_THROWS_AS(parse_poly_expr("poly[]", r), ParseError);
    REQUIRE_THROWS_AS(parse_poly_expr("poly[1; u1", r), ParseError);
    REQUIRE_THROWS_AS(parse_poly_expr("poly(1; 2)", r), ParseError);
}

TEST_CASE("polynomial sparse form", "[parse]") {
    FieldContext f(1);
    RingContext r3(f, 3);
    const RingElement delta =
        r3.constant(f.exp(7)) + r3.constant(f.generator()) * (r3.variable(2) + r3.variable(3));
    const SkewPoly g = SkewPoly(r3, {r3.one(), delta, delta.theta(), r3.one()});
    REQUIRE(parse_poly_expr("1 + (b^7 + b*(u2+u3))*x + (b^13 + b^4*(u2+u3))*x^2 + x^3", r3) == g);

    RingContext r1(f, 1);
    REQUIRE(parse_poly_expr("x", r1) == SkewPoly::monomial(r1, r1.one(), 1));
    REQUIRE(parse_poly_expr("x^4 + 1", r1) == SkewPoly::x_pow_n_minus_1(r1, 4));
    REQUIRE(parse_poly_expr("b^5*x", r1) ==
            SkewPoly::monomial(r1, r1.constant(f.exp(5)), 1));
    REQUIRE(parse_poly_expr("u1*b*x^2", r1) ==
            SkewPoly::monomial(r1, r1.variable(1) * r1.constant(f.generator()), 2));
    REQUIRE(parse_poly_expr("0", r1).is_zero());
    REQUIRE(parse_poly_expr("0*x^3 + 1", r1).degree() == 0);
    REQUIRE(parse_poly_expr("x^0", r1) == SkewPoly(r1, {r1.one()}));

    REQUIRE_THROWS_AS(parse_poly_expr("x^2 + x^2", r1), ParseError);
    REQUIRE_THROWS_AS(parse_poly_expr("1 + b", r1), ParseError);     // two degree-0 terms
    REQUIRE_THROWS_AS(parse_poly_expr("b*x*u1", r1), ParseError);    // x must end the term
    REQUIRE_THROWS_AS(parse_poly_expr("x*x", r1), ParseError);
    REQUIRE_THROWS_AS(parse_poly_expr("x^", r1), ParseError);
    REQUIRE_THROWS_AS(parse_poly_expr("", r1), ParseError);
}

TEST_CASE("trailing input is rejected with its offset", "[parse]") {
    FieldContext f(1);
    RingContext r(f, 1);
    try {
        parse_ring_expr("b^7 )", r);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.position() == 4);
    }
}

TEST_CASE("print-parse round trip on random elements", "[parse]") {
    FieldContext f(1);
    std::uint64_t state = 0x853c49e6748fea9bULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int s : {1, 3}) {
        RingContext r(f, s);
        for (int trial = 0; trial < 500; ++trial) {
            const RingElement e = r.at(next() & 0xffffffffULL);
            REQUIRE(parse_ring_expr(to_string(e), r) == e);
        }
    }
}

TEST_CASE("print-parse round trip on random polynomials", "[parse]") {
    FieldContext f(1);
    std::uint64_t state = 0xda3e39cb94b95bdbULL;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int s : {1, 3}) {
        RingContext r(f, s);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<RingElement> coeffs;
            const int deg = static_cast<int>(next() % 6);
            for (int i = 0; i <= deg; ++i) {
                // bias towards sparse polynomials to exercise zero gaps
                coeffs.push_back((next() % 3 == 0) ? r.zero() : r.at(next() & 0xffffffffULL));
            }
            const SkewPoly p(r, std::move(coeffs));
            REQUIRE(parse_poly_expr(to_string(p), r) == p);
        }
    }
}
