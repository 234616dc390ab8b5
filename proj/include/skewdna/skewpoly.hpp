#ifndef SKEWDNA_SKEWPOLY_HPP
#define SKEWDNA_SKEWPOLY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewdna/ring.hpp"

namespace skewdna {

/* Polynomials in R[x; theta], where multiplication twists coefficients
   past powers of x: (a x^i)(b x^j) = a theta^i(b) x^{i+j}. theta has
   order 2, so theta^i only depends on the parity of i. Coefficients are
   stored low degree first and kept trimmed. */
class SkewPoly {
   public:
    explicit SkewPoly(const RingContext& ring) : ring_(&ring) {}

    SkewPoly(const RingContext& ring, std::vector<RingElement> coeffs)
        : ring_(&ring), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) ring_->require_same(c);
        trim();
    }

    static SkewPoly monomial(const RingContext& ring, const RingElement& coeff, int degree) {
        ring.require_same(coeff);
        if (degree < 0) throw std::invalid_argument("skewpoly: negative degree");
        std::vector<RingElement> c(static_cast<std::size_t>(degree) + 1, ring.zero());
        c.back() = coeff;
        return {ring, std::move(c)};
    }

    static SkewPoly x_pow_n_minus_1(const RingContext& ring, int n) {
        if (n < 1) throw std::invalid_argument("skewpoly: n must be positive");
        std::vector<RingElement> c(static_cast<std::size_t>(n) + 1, ring.zero());
        c.front() = ring.one();  // -1 = 1 in characteristic 2
        c.back() = ring.one();
        return {ring, std::move(c)};
    }

    const RingContext& ring() const { return *ring_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<RingElement>& coeffs() const { return coeffs_; }

    RingElement coeff(int i) const {
        if (i < 0 || i > degree()) return ring_->zero();
        return coeffs_[static_cast<std::size_t>(i)];
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    SkewPoly operator+(const SkewPoly& other) const {
        if (other.ring_ != ring_) throw std::invalid_argument("skewpoly: context mismatch");
        std::vector<RingElement> c;
        const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i)));
        return {*ring_, std::move(c)};
    }

    SkewPoly operator*(const SkewPoly& other) const {
        if (other.ring_ != ring_) throw std::invalid_argument("skewpoly: context mismatch");
        if (is_zero() || other.is_zero()) return SkewPoly(*ring_);
        std::vector<RingElement> c(coeffs_.size() + other.coeffs_.size() - 1, ring_->zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
                const RingElement& b = other.coeffs_[j];
                if (b.is_zero()) continue;
                c[i + j] += coeffs_[i] * ((i & 1) ? b.theta() : b);
            }
        }
        return {*ring_, std::move(c)};
    }

    // theta applied to every coefficient (degrees unchanged)
    SkewPoly theta_map() const {
        std::vector<RingElement> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_) c.push_back(a.theta());
        return {*ring_, std::move(c)};
    }

    /* Right division: this = q * g + r with deg r < deg g. Only monic
       divisors are supported, which keeps the quotient step exact; the
       eliminating term is lead(r) * x^d because theta^d(1) = 1. */
    std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& g) const {
        if (g.ring_ != ring_) throw std::invalid_argument("skewpoly: context mismatch");
        if (g.is_zero()) throw std::invalid_argument("skewpoly: division by zero polynomial");
        if (!g.is_monic()) throw std::invalid_argument("skewpoly: divisor must be monic");
        SkewPoly r = *this;
        SkewPoly q(*ring_);
        const int m = g.degree();
        while (r.degree() >= m) {
            const int d = r.degree() - m;
            const RingElement c = r.coeffs_.back();
            q = q + monomial(*ring_, c, d);
            r = r + monomial(*ring_, c, d) * g;  // subtraction = addition here
        }
        return {std::move(q), std::move(r)};
    }

    bool right_divides(const SkewPoly& dividend) const {
        return dividend.right_divmod(*this).second.is_zero();
    }

    /* Whether this polynomial right-divides x^n - 1. The ambient code
       length must be even: theta has order 2, so x^n - 1 is central
       (and the quotient construction is well-formed) only for even n. */
    bool right_divides_xn_minus_1(int n) const {
        if (n < 2 || (n & 1))
            throw std::invalid_argument("skewpoly: code length must be even and >= 2");
        return right_divides(x_pow_n_minus_1(*ring_, n));
    }

    // a_i = a_{t-i} for all i, where t = degree
    bool is_palindromic() const {
        if (is_zero()) throw std::domain_error("skewpoly: zero polynomial has no symmetry class");
        const int t = degree();
        for (int i = 0; 2 * i <= t; ++i)
            if (coeff(i) != coeff(t - i)) return false;
        return true;
    }

    // a_i = theta(a_{t-i}) for all i, including the middle one when t is even
    bool is_theta_palindromic() const {
        if (is_zero()) throw std::domain_error("skewpoly: zero polynomial has no symmetry class");
        const int t = degree();
        for (int i = 0; 2 * i <= t; ++i)
            if (coeff(i) != coeff(t - i).theta()) return false;
        return true;
    }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    const RingContext* ring_;
    std::vector<RingElement> coeffs_;
};

/* Low-to-high rendering with one term per degree so the output parses
   back unambiguously: multi-term coefficients are parenthesized, unit
   coefficients are dropped in front of x, and x^1 prints as "x". */
inline std::string to_string(const SkewPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const RingElement c = p.coeff(i);
        if (c.is_zero()) continue;
        const std::string cs = to_string(c);
        const bool multi = cs.find(" + ") != std::string::npos;
        std::string xs;
        if (i == 1)
            xs = "x";
        else if (i > 1)
            xs = "x^" + std::to_string(i);
        std::string term;
        if (i == 0)
            term = multi ? "(" + cs + ")" : cs;
        else if (c.is_one())
            term = xs;
        else
            term = (multi ? "(" + cs + ")" : cs) + "*" + xs;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

}  // namespace skewdna

#endif  // SKEWDNA_SKEWPOLY_HPP
