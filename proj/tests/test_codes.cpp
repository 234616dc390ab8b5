#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "oracles.hpp"
#include "skewdna/codes.hpp"
#include "skewdna/dna.hpp"
#include "skewdna/gf.hpp"
#include "skewdna/ring.hpp"
#include "skewdna/skewpoly.hpp"

using namespace skewdna;

namespace {

SkewPoly poly(const RingContext& r, std::vector<RingElement> cs) {
    return SkewPoly(r, std::move(cs));
}

}  // namespace

TEST_CASE("code construction validates its inputs", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewPoly g = poly(r, {r.one(), r.variable(1), r.one()});  // x^2 + u1 x + 1

    const SkewCyclicCode code(r, g, 4);
    REQUIRE(code.n() == 4);
    REQUIRE(code.t() == 2);
    REQUIRE(code.symmetry_class() == "palindromic-even-degree");
    REQUIRE(code.cardinality_string() == "4^8");
    REQUIRE(code.cardinality() == 65536);

    REQUIRE_THROWS_AS(SkewCyclicCode(r, g, 5), std::invalid_argument);   // odd n
    REQUIRE_THROWS_AS(SkewCyclicCode(r, g, 2), std::invalid_argument);   // deg >= n
    const SkewPoly nonmonic = poly(r, {r.one(), r.variable(1)});
    REQUIRE_THROWS_AS(SkewCyclicCode(r, nonmonic, 4), std::invalid_argument);
    const SkewPoly nondiv = poly(r, {r.constant(f.generator()), r.one()});  // x + b
    REQUIRE_THROWS_AS(SkewCyclicCode(r, nondiv, 2), std::invalid_argument);
    const SkewPoly constant = poly(r, {r.one()});
    REQUIRE_THROWS_AS(SkewCyclicCode(r, constant, 4), std::invalid_argument);  // deg < 1
}

TEST_CASE("symmetry classification follows degree parity", "[codes]") {
    FieldContext f(1);
    RingContext r3(f, 3);
    const RingElement delta =
        r3.constant(f.exp(7)) + r3.constant(f.generator()) * (r3.variable(2) + r3.variable(3));
    const SkewPoly g4 = poly(r3, {r3.one(), delta, delta.theta(), r3.one()});
    const SkewCyclicCode ex4(r3, g4, 6);
    REQUIRE(ex4.t() == 3);
    REQUIRE(ex4.symmetry_class() == "theta-palindromic-odd-degree");
    REQUIRE(ex4.cardinality_string() == "4^48");
    REQUIRE(ex4.cardinality_exceeds(std::uint64_t{1} << 62));

    RingContext r1(f, 1);
    const SkewPoly xp1 = poly(r1, {r1.one(), r1.one()});
    const SkewCyclicCode c2(r1, xp1, 2);
    REQUIRE(c2.symmetry_class() == "theta-palindromic-odd-degree");
    REQUIRE(c2.cardinality() == 256);
}

TEST_CASE("encoding matches the defining sum", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewPoly xp1 = poly(r, {r.one(), r.one()});
    const SkewCyclicCode c2(r, xp1, 2);

    const RingElement m = r.constant(f.exp(9)) + r.variable(1);
    const Codeword cw = c2.encode({m});
    REQUIRE(cw.word == std::vector<RingElement>{m, m});  // m (1 + x)
    REQUIRE(cw.message == std::vector<RingElement>{m});

    const SkewCyclicCode c4(r, poly(r, {r.one(), r.variable(1), r.one()}), 4);
    const Codeword zero = c4.encode({r.zero(), r.zero()});
    REQUIRE(zero.word == std::vector<RingElement>(4, r.zero()));

    // unit message picks out the generator's own coefficients
    const Codeword gen = c4.encode({r.one(), r.zero()});
    REQUIRE(gen.word == std::vector<RingElement>{r.one(), r.variable(1), r.one(), r.zero()});

    REQUIRE_THROWS_AS(c4.encode({r.one()}), std::invalid_argument);
}

TEST_CASE("membership is the zero right remainder", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewCyclicCode c2(r, poly(r, {r.one(), r.one()}), 2);
    REQUIRE(c2.contains({r.one(), r.one()}));
    REQUIRE(!c2.contains({r.one(), r.constant(f.generator())}));  // (1, b): remainder 1 + b
    REQUIRE_THROWS_AS(c2.contains({r.one()}), std::invalid_argument);

    const SkewCyclicCode c4(r, poly(r, {r.one(), r.variable(1), r.one()}), 4);
    for (std::uint64_t i : {0ull, 77ull, 5000ull, 65535ull})
        REQUIRE(c4.contains(c4.encode(c4.message_at(i)).word));
}

TEST_CASE("skew shift definition and closure", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const RingElement a = r.constant(f.exp(3)), b = r.variable(1);
    REQUIRE(skew_shift({a, b}) == std::vector<RingElement>{b.theta(), a.theta()});

    // n applications restore the word for even n
    const SkewCyclicCode c4(r, poly(r, {r.one(), r.variable(1), r.one()}), 4);
    const std::vector<RingElement> w = c4.encode(c4.message_at(12345)).word;
    std::vector<RingElement> cur = w;
    for (int i = 0; i < 4; ++i) cur = skew_shift(cur);
    REQUIRE(cur == w);

    // the defining closure property on a fully enumerated code
    const SkewCyclicCode c2(r, poly(r, {r.one(), r.one()}), 2);
    c2.enumerate(1 << 10, [&](const Codeword& cw) {
        REQUIRE(c2.contains(skew_shift(cw.word)));
    });
}

TEST_CASE("enumeration is exhaustive, distinct, and capped", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewCyclicCode c2(r, poly(r, {r.one(), r.one()}), 2);
    std::set<std::vector<std::uint32_t>> seen;
    c2.enumerate(256, [&](const Codeword& cw) {
        std::vector<std::uint32_t> key;
        for (const auto& c : cw.word)
            for (const auto& comp : c.components()) key.push_back(comp.bits());
        seen.insert(key);
    });
    REQUIRE(seen.size() == 256);  // encode is injective

    const SkewCyclicCode c4(r, poly(r, {r.one(), r.variable(1), r.one()}), 4);
    REQUIRE_THROWS_AS(c4.enumerate(10, [](const Codeword&) {}), std::invalid_argument);

    // linearity spot checks on enumerated pairs
    for (std::uint64_t i : {3ull, 99ull, 65000ull}) {
        for (std::uint64_t j : {12ull, 255ull, 32768ull}) {
            const auto wi = c4.encode(c4.message_at(i)).word;
            const auto wj = c4.encode(c4.message_at(j)).word;
            std::vector<RingElement> sum;
            for (std::size_t p = 0; p < wi.size(); ++p) sum.push_back(wi[p] + wj[p]);
            REQUIRE(c4.contains(sum));
        }
    }
}

TEST_CASE("sampled messages are reproducible", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 2);
    const SkewPoly xp1 = poly(r, {r.one(), r.one()});
    const SkewCyclicCode code(r, xp1, 4);
    const auto a = code.sample_messages(20, 42);
    const auto b = code.sample_messages(20, 42);
    const auto c = code.sample_messages(20, 43);
    REQUIRE(a == b);
    REQUIRE(a != c);
    REQUIRE(a.size() == 20);
    REQUIRE(a[0].size() == 3);  // t = 3
}

TEST_CASE("reverse codeword construction", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewCyclicCode c4(r, poly(r, {r.one(), r.variable(1), r.one()}), 4);
    const DnaCodebook book = DnaCodebook::embedded_reference(f);

    const std::vector<RingElement> msg = c4.message_at(0xBEEF);
    const Codeword c = c4.encode(msg);
    const Codeword cr = c4.reverse_codeword(msg);
    REQUIRE(c4.contains(cr.word));
    REQUIRE(cr.message == msg);

    // DNA image of the reverse codeword is the reversed image
    REQUIRE(encode_codeword(book, r, cr.word) ==
            dna_reverse(encode_codeword(book, r, c.word)));

    // applying the construction to the theta-reversed message returns to c
    std::vector<RingElement> back;
    for (std::size_t i = 0; i < msg.size(); ++i)
        back.push_back(msg[msg.size() - 1 - i].theta());
    REQUIRE(c4.reverse_codeword(back).word == c.word);

    REQUIRE(c4.reverse_codeword({r.zero(), r.zero()}).word ==
            std::vector<RingElement>(4, r.zero()));
}

TEST_CASE("divisor search reproduces the analytic count", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);

    // all 256 ring elements as the coefficient set, canonical order
    std::vector<RingElement> all;
    for (std::uint64_t i = 0; i < 256; ++i) all.push_back(r.at(i));

    const auto found = search_divisors(r, 4, 2, "palindromic", all, 1 << 10);

    // oracle: x^2 + a x + 1 right-divides x^4 - 1 exactly when a theta(a) = 0
    std::set<std::uint64_t> expect;
    for (std::uint64_t i = 0; i < 256; ++i) {
        const RingElement a = r.at(i);
        if ((a * a.theta()).is_zero()) expect.insert(i);
    }
    REQUIRE(expect.size() == 31);
    REQUIRE(found.size() == 31);
    for (const auto& g : found) {
        REQUIRE(g.degree() == 2);
        REQUIRE(g.coeff(0) == r.one());
        REQUIRE(g.is_monic());
        bool known = false;
        for (std::uint64_t i : expect)
            if (r.at(i) == g.coeff(1)) known = true;
        REQUIRE(known);
    }
}

TEST_CASE("divisor search edge cases", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    std::vector<RingElement> all;
    for (std::uint64_t i = 0; i < 256; ++i) all.push_back(r.at(i));

    // degree-1 theta-palindromic leaves no free slot; the lone candidate is x + 1
    std::vector<RingElement> consts;
    for (std::size_t i = 0; i < 16; ++i) consts.push_back(r.constant(f.at(i)));
    const auto lin = search_divisors(r, 2, 1, "theta-palindromic", consts, 100);
    REQUIRE(lin.size() == 1);
    REQUIRE(lin[0] == poly(r, {r.one(), r.one()}));

    REQUIRE(search_divisors(r, 4, 2, "palindromic", {}, 100).empty());
    REQUIRE_THROWS_AS(search_divisors(r, 4, 2, "any", all, 1000), std::invalid_argument);
    REQUIRE_THROWS_AS(search_divisors(r, 4, 2, "weird", all, 1000), std::invalid_argument);
    REQUIRE_THROWS_AS(search_divisors(r, 3, 1, "any", all, 1000), std::invalid_argument);

    // tiny "any" sweep: only x + 1 survives from {0, 1}
    const auto tiny = search_divisors(r, 2, 1, "any", {r.zero(), r.one()}, 10);
    REQUIRE(tiny.size() == 1);
    REQUIRE(tiny[0] == poly(r, {r.one(), r.one()}));
}

TEST_CASE("reversibility verification passes on symmetric generators", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const DnaCodebook book = DnaCodebook::embedded_reference(f);

    const SkewCyclicCode c2(r, poly(r, {r.one(), r.one()}), 2);
    const Report ex = verify_reversible(c2, book, "exhaustive", 0, 0);
    REQUIRE(ex.ok());

    const SkewCyclicCode c4(r, poly(r, {r.one(), r.variable(1), r.one()}), 4);
    const Report sam = verify_reversible(c4, book, "sampled", 200, 7);
    REQUIRE(sam.ok());
    bool has_seed = false;
    for (const auto& row : sam.rows())
        if (row.counterexample.find("seed=7") != std::string::npos) has_seed = true;
    REQUIRE(has_seed);

    REQUIRE_THROWS_AS(verify_reversible(c4, book, "nope", 1, 1), std::invalid_argument);
}

TEST_CASE("a non-symmetric divisor yields a non-reversible code", "[codes]") {
    /* Over R_{1,1} with CRT components (a0, a1): take a = (1, b^13) and
       c = (b, b^11). Then a theta(a) = c + theta(c) and theta(c) = c^{-1},
       which makes x^2 + a x + c a right divisor of x^4 - 1 even though it
       is neither palindromic nor theta-palindromic. Its DNA image is not
       closed under reversal. */
    FieldContext f(1);
    RingContext r(f, 1);
    const RingElement a = r.from_components({f.one(), f.exp(13)});
    const RingElement c = r.from_components({f.exp(1), f.exp(11)});
    const SkewPoly g = poly(r, {c, a, r.one()});

    const SkewCyclicCode code(r, g, 4);
    REQUIRE(code.symmetry_class() == "none");

    const DnaCodebook book = DnaCodebook::embedded_reference(f);
    const Report rep = verify_reversible(code, book, "exhaustive", 0, 0);
    REQUIRE(!rep.ok());
    bool has_counterexample = false;
    for (const auto& row : rep.rows())
        if (row.status == "fail" && !row.counterexample.empty()) has_counterexample = true;
    REQUIRE(has_counterexample);
}

TEST_CASE("dna distance statistic agrees with the brute-force oracle", "[codes]") {
    FieldContext f(1);
    RingContext r(f, 1);
    const SkewCyclicCode c2(r, poly(r, {r.one(), r.one()}), 2);
    const DnaCodebook book = DnaCodebook::embedded_reference(f);

    std::vector<std::string> words;
    c2.enumerate(256, [&](const Codeword& cw) {
        words.push_back(encode_codeword(book, r, cw.word).str());
    });
    REQUIRE(dna_min_distance(c2, book) == oracles::min_pairwise_distance(words));
}

TEST_CASE("report serialization", "[codes]") {
    Report rep;
    rep.add_pass("alpha", "first");
    rep.add_fail("alpha", "second", "value, with comma");
    rep.add_info("beta", "third", "note");
    REQUIRE(!rep.ok());

    std::ostringstream csv;
    rep.write_csv(csv);
    const std::string text = csv.str();
    REQUIRE(text.find("check,name,status,counterexample\n") == 0);
    REQUIRE(text.find("alpha,first,pass,\n") != std::string::npos);
    REQUIRE(text.find("alpha,second,fail,\"value, with comma\"\n") != std::string::npos);

    std::ostringstream human;
    rep.write_human(human);
    REQUIRE(human.str().find("[FAIL] alpha: second") != std::string::npos);

    Report okrep;
    okrep.add_info("x", "y");
    REQUIRE(okrep.ok());  // info rows never fail a run
}
