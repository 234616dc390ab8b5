#ifndef SKEWDNA_PARSE_HPP
#define SKEWDNA_PARSE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdna/gf.hpp"
#include "skewdna/ring.hpp"
#include "skewdna/skewpoly.hpp"

namespace skewdna {

// Syntax error with the 0-based character offset it was raised at.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

namespace parse_detail {

struct Token {
    enum Kind { Plus, Star, Caret, LParen, RParen, Comma, Semicolon, LBracket, RBracket,
                Number, Ident, End };
    Kind kind;
    std::uint64_t number = 0;
    std::string ident;
    std::size_t pos = 0;
};

inline std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        switch (c) {
            case '+': t.kind = Token::Plus; ++i; break;
            case '*': t.kind = Token::Star; ++i; break;
            case '^': t.kind = Token::Caret; ++i; break;
            case '(': t.kind = Token::LParen; ++i; break;
            case ')': t.kind = Token::RParen; ++i; break;
            case ',': t.kind = Token::Comma; ++i; break;
            case ';': t.kind = Token::Semicolon; ++i; break;
            case '[': t.kind = Token::LBracket; ++i; break;
            case ']': t.kind = Token::RBracket; ++i; break;
            default:
                if (c >= '0' && c <= '9') {
                    t.kind = Token::Number;
                    std::uint64_t v = 0;
                    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                        const std::uint64_t d = static_cast<std::uint64_t>(text[i] - '0');
                        if (v > (~std::uint64_t{0} - d) / 10)
                            throw ParseError("number too large", t.pos);
                        v = v * 10 + d;
                        ++i;
                    }
                    t.number = v;
                } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
                    t.kind = Token::Ident;
                    while (i < text.size() && ((text[i] >= 'a' && text[i] <= 'z') ||
                                               (text[i] >= 'A' && text[i] <= 'Z')))
                        t.ident += text[i++];
                } else {
                    throw ParseError(std::string("unexpected character '") + c + "'", i);
                }
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::End;
    end.pos = text.size();
    out.push_back(end);
    return out;
}

/* Recursive-descent parser over the shared grammar
     expr   := term ('+' term)*
     term   := factor ('*' factor)*
     factor := 'b' ['^' uint] | 'u' uint | '0' | '1' | '(' expr ')'
             | 'crt' '(' field-expr {',' field-expr} ')'
   restricted as needed: field expressions forbid 'u' and 'crt';
   polynomial terms admit one trailing 'x' ['^' uint] factor. */
class Parser {
   public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    FieldElement field_expr(const FieldContext& field) {
        FieldElement acc = field_term(field);
        while (peek().kind == Token::Plus) {
            next();
            acc += field_term(field);
        }
        return acc;
    }

    RingElement ring_expr(const RingContext& ring) {
        RingElement acc = ring_term(ring);
        while (peek().kind == Token::Plus) {
            next();
            acc += ring_term(ring);
        }
        return acc;
    }

    SkewPoly poly_expr(const RingContext& ring) {
        if (peek().kind == Token::Ident && peek().ident == "poly") return poly_list(ring);
        return poly_sparse(ring);
    }

    void expect_end() const {
        if (peek().kind != Token::End) throw ParseError("unexpected trailing input", peek().pos);
    }

   private:
    FieldElement field_term(const FieldContext& field) {
        FieldElement acc = field_factor(field);
        while (peek().kind == Token::Star) {
            next();
            acc *= field_factor(field);
        }
        return acc;
    }

    FieldElement field_factor(const FieldContext& field) {
        const Token t = next();
        if (t.kind == Token::Number && t.number == 0) return field.zero();
        if (t.kind == Token::Number && t.number == 1) return field.one();
        if (t.kind == Token::Number) throw ParseError("only the constants 0 and 1 exist", t.pos);
        if (t.kind == Token::LParen) {
            FieldElement e = field_expr(field);
            expect(Token::RParen, "expected ')'");
            return e;
        }
        if (t.kind == Token::Ident && t.ident == "b") {
            if (peek().kind == Token::Caret) {
                next();
                const Token n = next();
                if (n.kind != Token::Number) throw ParseError("expected an exponent", n.pos);
                if (n.number > (std::uint64_t{1} << 62))
                    throw ParseError("exponent too large", n.pos);
                return field.exp(static_cast<long long>(n.number));
            }
            return field.generator();
        }
        if (t.kind == Token::Ident && (t.ident == "u" || t.ident == "crt"))
            throw ParseError("'" + t.ident + "' is not allowed in a field expression", t.pos);
        throw ParseError("expected a field factor", t.pos);
    }

    RingElement ring_term(const RingContext& ring) {
        RingElement acc = ring_factor(ring);
        while (peek().kind == Token::Star) {
            next();
            acc = acc * ring_factor(ring);
        }
        return acc;
    }

    RingElement ring_factor(const RingContext& ring) {
        const Token t = next();
        if (t.kind == Token::Number && t.number == 0) return ring.zero();
        if (t.kind == Token::Number && t.number == 1) return ring.one();
        if (t.kind == Token::Number) throw ParseError("only the constants 0 and 1 exist", t.pos);
        if (t.kind == Token::LParen) {
            RingElement e = ring_expr(ring);
            expect(Token::RParen, "expected ')'");
            return e;
        }
        if (t.kind == Token::Ident && t.ident == "b") {
            if (peek().kind == Token::Caret) {
                next();
                const Token n = next();
                if (n.kind != Token::Number) throw ParseError("expected an exponent", n.pos);
                if (n.number > (std::uint64_t{1} << 62))
                    throw ParseError("exponent too large", n.pos);
                return ring.constant(ring.field().exp(static_cast<long long>(n.number)));
            }
            return ring.constant(ring.field().generator());
        }
        if (t.kind == Token::Ident && t.ident == "u") {
            const Token n = next();
            if (n.kind != Token::Number) throw ParseError("expected a variable index", n.pos);
            if (n.number < 1 || n.number > static_cast<std::uint64_t>(ring.s()))
                throw ParseError("variable u" + std::to_string(n.number) +
                                     " is out of range for s = " + std::to_string(ring.s()),
                                 t.pos);
            return ring.variable(static_cast<int>(n.number));
        }
        if (t.kind == Token::Ident && t.ident == "crt") {
            expect(Token::LParen, "expected '(' after crt");
            std::vector<FieldElement> comps;
            comps.push_back(field_expr(ring.field()));
            while (peek().kind == Token::Comma) {
                next();
                comps.push_back(field_expr(ring.field()));
            }
            const Token close = next();
            if (close.kind != Token::RParen) throw ParseError("expected ')'", close.pos);
            if (static_cast<int>(comps.size()) != ring.num_components())
                throw ParseError("crt literal needs exactly " +
                                     std::to_string(ring.num_components()) + " components",
                                 t.pos);
            return ring.from_components(std::move(comps));
        }
        if (t.kind == Token::Ident && t.ident == "x")
            throw ParseError("'x' is not allowed in a ring-element expression", t.pos);
        throw ParseError("expected a ring factor", t.pos);
    }

    SkewPoly poly_list(const RingContext& ring) {
        next();  // 'poly'
        expect(Token::LBracket, "expected '[' after poly");
        std::vector<RingElement> coeffs;
        coeffs.push_back(ring_expr(ring));
        while (peek().kind == Token::Semicolon) {
            next();
            coeffs.push_back(ring_expr(ring));
        }
        expect(Token::RBracket, "expected ']'");
        return SkewPoly(ring, std::move(coeffs));
    }

    SkewPoly poly_sparse(const RingContext& ring) {
        std::map<int, RingElement> terms;
        while (true) {
            const std::size_t term_pos = peek().pos;
            RingElement coeff = ring.one();
            int degree = 0;
            bool saw_x = false, saw_coeff = false;
            while (true) {
                if (peek().kind == Token::Ident && peek().ident == "x") {
                    const Token xt = next();
                    saw_x = true;
                    degree = 1;
                    if (peek().kind == Token::Caret) {
                        next();
                        const Token n = next();
                        if (n.kind != Token::Number) throw ParseError("expected an exponent", n.pos);
                        if (n.number > 4096) throw ParseError("degree too large", n.pos);
                        degree = static_cast<int>(n.number);
                    }
                    if (peek().kind == Token::Star)
                        throw ParseError("the x part must be the final factor of a term", xt.pos);
                    break;
                }
                coeff = coeff * ring_factor(ring);
                saw_coeff = true;
                if (peek().kind != Token::Star) break;
                next();
            }
            if (!saw_x && !saw_coeff) throw ParseError("expected a term", term_pos);
            if (terms.count(degree))
                throw ParseError("duplicate degree " + std::to_string(degree), term_pos);
            terms.emplace(degree, coeff);
            if (peek().kind != Token::Plus) break;
            next();
        }
        std::vector<RingElement> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1,
                                        ring.zero());
        for (const auto& [deg, c] : terms) coeffs[static_cast<std::size_t>(deg)] = c;
        return SkewPoly(ring, std::move(coeffs));
    }

    const Token& peek() const { return toks_[cur_]; }
    const Token& next() {
        const Token& t = toks_[cur_];
        if (t.kind != Token::End) ++cur_;
        return t;
    }
    void expect(Token::Kind kind, const char* msg) {
        const Token& t = next();
        if (t.kind != kind) throw ParseError(msg, t.pos);
    }

    std::vector<Token> toks_;
    std::size_t cur_ = 0;
};

}  // namespace parse_detail

inline FieldElement parse_field_expr(const std::string& text, const FieldContext& field) {
    parse_detail::Parser p(text);
    FieldElement e = p.field_expr(field);
    p.expect_end();
    return e;
}

inline RingElement parse_ring_expr(const std::string& text, const RingContext& ring) {
    parse_detail::Parser p(text);
    RingElement e = p.ring_expr(ring);
    p.expect_end();
    return e;
}

inline SkewPoly parse_poly_expr(const std::string& text, const RingContext& ring) {
    parse_detail::Parser p(text);
    SkewPoly e = p.poly_expr(ring);
    p.expect_end();
    return e;
}

}  // namespace skewdna

#endif  // SKEWDNA_PARSE_HPP
