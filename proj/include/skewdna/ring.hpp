#ifndef SKEWDNA_RING_HPP
#define SKEWDNA_RING_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdna/gf.hpp"

namespace skewdna {

class RingContext;

/* An element of R_{k,s} = GF(2^{4k})[u_1..u_s]/(u_i^2 - u_i), stored in
   CRT coordinates: comps_[i] is the coefficient of the idempotent I_i.
   Addition and multiplication are componentwise in these coordinates. */
class RingElement {
   public:
    const RingContext& ring() const { return *ring_; }
    const std::vector<FieldElement>& components() const { return comps_; }
    const FieldElement& component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    // unit iff no CRT component vanishes
    bool is_unit() const {
        for (const auto& c : comps_)
            if (c.is_zero()) return false;
        return true;
    }

    bool is_one() const {
        for (const auto& c : comps_)
            if (!c.is_one()) return false;
        return true;
    }

    RingElement operator+(const RingElement& other) const;
    RingElement& operator+=(const RingElement& other);
    RingElement operator*(const RingElement& other) const;
    RingElement theta() const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

   private:
    friend class RingContext;
    RingElement(std::vector<FieldElement> comps, const RingContext* ring)
        : comps_(std::move(comps)), ring_(ring) {}

    std::vector<FieldElement> comps_;
    const RingContext* ring_;
};

/* The ring context holds the ordered monomial table of Eq-style tuples
   T_0..T_{2^s-1} (blocks of ascending weight, each block in descending
   lexicographic order) and the basis transform between the monomial
   coefficients b_j of sum b_j U_j and the CRT coordinates. */
class RingContext {
   public:
    RingContext(const FieldContext& field, int s) : field_(&field), s_(s) {
        if (s < 1 || s > 8) throw std::invalid_argument("ring: s must be in [1, 8]");
        build_tuples();
        check_transform();
    }

    RingContext(const RingContext&) = delete;
    RingContext& operator=(const RingContext&) = delete;

    const FieldContext& field() const { return *field_; }
    int s() const { return s_; }
    int num_components() const { return 1 << s_; }

    // T_i as a vector (r_1, ..., r_s)
    std::vector<int> tuple(int i) const {
        const std::uint32_t m = mask(i);
        std::vector<int> t(static_cast<std::size_t>(s_));
        for (int e = 0; e < s_; ++e) t[static_cast<std::size_t>(e)] = (m >> e) & 1u;
        return t;
    }

    // bit e-1 of the result is r_e
    std::uint32_t mask(int i) const { return tuples_.at(static_cast<std::size_t>(i)); }

    // |R_{k,s}| = 4^{2^{s+1} k}
    int cardinality_log4() const { return (1 << (s_ + 1)) * field_->k(); }
    std::string cardinality_string() const { return "4^" + std::to_string(cardinality_log4()); }

    RingElement zero() const {
        return {std::vector<FieldElement>(static_cast<std::size_t>(num_components()), field_->zero()),
                this};
    }

    RingElement one() const {
        return {std::vector<FieldElement>(static_cast<std::size_t>(num_components()), field_->one()),
                this};
    }

    // embed a field constant: c * 1 has every CRT component equal to c
    RingElement constant(const FieldElement& c) const {
        field_->require_same(c);
        return {std::vector<FieldElement>(static_cast<std::size_t>(num_components()), c), this};
    }

    // the generator u_e (1-based); component i is 1 exactly when T_i has r_e = 0
    RingElement variable(int e) const {
        if (e < 1 || e > s_) throw std::invalid_argument("ring: variable index out of range");
        std::vector<FieldElement> comps;
        comps.reserve(static_cast<std::size_t>(num_components()));
        for (int i = 0; i < num_components(); ++i)
            comps.push_back(((mask(i) >> (e - 1)) & 1u) ? field_->zero() : field_->one());
        return {std::move(comps), this};
    }

    // I_i in CRT coordinates: the i-th unit vector
    RingElement idempotent(int i) const {
        range_check(i);
        std::vector<FieldElement> comps(static_cast<std::size_t>(num_components()), field_->zero());
        comps[static_cast<std::size_t>(i)] = field_->one();
        return {std::move(comps), this};
    }

    // monomial product form, e.g. "(u1+1)*u2*u3" for T_i = (1,0,0), s = 3
    std::string idempotent_text(int i) const {
        range_check(i);
        const std::uint32_t m = mask(i);
        std::string out;
        for (int e = 1; e <= s_; ++e) {
            if (!out.empty()) out += "*";
            if ((m >> (e - 1)) & 1u)
                out += "(u" + std::to_string(e) + "+1)";
            else
                out += "u" + std::to_string(e);
        }
        return out;
    }

    RingElement from_components(std::vector<FieldElement> comps) const {
        if (static_cast<int>(comps.size()) != num_components())
            throw std::invalid_argument("ring: expected " + std::to_string(num_components()) +
                                        " components");
        for (const auto& c : comps) field_->require_same(c);
        return {std::move(comps), this};
    }

    /* Monomial coefficients b_0..b_{2^s-1} of sum b_j U_j to CRT
       coordinates: alpha_i collects the b_j with T_i . T_j = (0,...,0). */
    RingElement from_monomial(const std::vector<FieldElement>& b) const {
        if (static_cast<int>(b.size()) != num_components())
            throw std::invalid_argument("ring: expected " + std::to_string(num_components()) +
                                        " monomial coefficients");
        std::vector<FieldElement> comps;
        comps.reserve(static_cast<std::size_t>(num_components()));
        for (int i = 0; i < num_components(); ++i) {
            FieldElement acc = field_->zero();
            for (int j = 0; j < num_components(); ++j)
                if ((mask(i) & mask(j)) == 0) acc += b[static_cast<std::size_t>(j)];
            comps.push_back(acc);
        }
        return {std::move(comps), this};
    }

    /* Exact inverse of from_monomial. The forward matrix factors through
       the per-variable 2x2 matrix [[1,1],[1,0]], whose GF(2) inverse is
       [[0,1],[1,1]]; entrywise the inverse condition reads
       T_j OR T_i = (1,...,1). */
    std::vector<FieldElement> to_monomial(const RingElement& a) const {
        require_same(a);
        const std::uint32_t full = static_cast<std::uint32_t>(num_components() - 1);
        std::vector<FieldElement> b;
        b.reserve(static_cast<std::size_t>(num_components()));
        for (int j = 0; j < num_components(); ++j) {
            FieldElement acc = field_->zero();
            for (int i = 0; i < num_components(); ++i)
                if ((mask(j) | mask(i)) == full) acc += a.component(i);
            b.push_back(acc);
        }
        return b;
    }

    /* Canonical enumeration order: component 0 is the least significant
       digit, each digit running through the field's enumeration order.
       The index width is 4k bits per component. */
    RingElement at(std::uint64_t index) const {
        const int w = field_->extension_degree();
        std::vector<FieldElement> comps;
        comps.reserve(static_cast<std::size_t>(num_components()));
        for (int j = 0; j < num_components(); ++j) {
            const std::uint64_t digit =
                (w * j < 64) ? ((index >> (w * j)) & ((std::uint64_t{1} << w) - 1)) : 0;
            comps.push_back(field_->at(static_cast<std::size_t>(digit)));
        }
        return {std::move(comps), this};
    }

    void require_same(const RingElement& a) const {
        if (a.ring_ != this) throw std::invalid_argument("ring: context mismatch");
    }

   private:
    void range_check(int i) const {
        if (i < 0 || i >= num_components()) throw std::invalid_argument("ring: index out of range");
    }

    void build_tuples() {
        tuples_.clear();
        tuples_.reserve(std::size_t{1} << s_);
        for (int weight = 0; weight <= s_; ++weight) {
            std::vector<std::uint32_t> block;
            for (std::uint32_t m = 0; m < (1u << s_); ++m)
                if (__builtin_popcount(m) == weight) block.push_back(m);
            // descending lexicographic order on (r_1, ..., r_s)
            std::sort(block.begin(), block.end(), [this](std::uint32_t a, std::uint32_t b) {
                for (int e = 0; e < s_; ++e) {
                    const int ra = (a >> e) & 1u, rb = (b >> e) & 1u;
                    if (ra != rb) return ra > rb;
                }
                return false;
            });
            tuples_.insert(tuples_.end(), block.begin(), block.end());
        }
    }

    // the two transforms must compose to the identity over GF(2)
    void check_transform() {
        const int n = num_components();
        const std::uint32_t full = static_cast<std::uint32_t>(n - 1);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int parity = 0;
                for (int l = 0; l < n; ++l)
                    if ((mask(i) & mask(l)) == 0 && (mask(l) | mask(j)) == full) parity ^= 1;
                if (parity != (i == j ? 1 : 0))
                    throw std::logic_error("ring: basis transform is not invertible");
            }
        }
    }

    const FieldContext* field_;
    int s_;
    std::vector<std::uint32_t> tuples_;
};

inline RingElement RingElement::operator+(const RingElement& other) const {
    ring_->require_same(other);
    std::vector<FieldElement> comps;
    comps.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] + other.comps_[i]);
    return {std::move(comps), ring_};
}

inline RingElement& RingElement::operator+=(const RingElement& other) {
    *this = *this + other;
    return *this;
}

inline RingElement RingElement::operator*(const RingElement& other) const {
    ring_->require_same(other);
    std::vector<FieldElement> comps;
    comps.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] * other.comps_[i]);
    return {std::move(comps), ring_};
}

/* theta maps I_j to I_{2^s-1-j} and acts on field coefficients as the
   Frobenius-square a -> a^{4^k}: component i of the image is the field
   theta of component 2^s-1-i. */
inline RingElement RingElement::theta() const {
    const std::size_t n = comps_.size();
    std::vector<FieldElement> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comps.push_back(comps_[n - 1 - i].theta());
    return {std::move(comps), ring_};
}

// Gray map: the CRT coordinate tuple
inline std::vector<FieldElement> gray(const RingElement& a) { return a.components(); }

inline RingElement ungray(const RingContext& ctx, std::vector<FieldElement> comps) {
    return ctx.from_components(std::move(comps));
}

/* Rendered in the monomial basis as a sum of coefficient * u-monomial
   terms, e.g. "b^7 + b*u2 + b*u3"; parseable by the expression parser. */
inline std::string to_string(const RingElement& a) {
    const RingContext& ctx = a.ring();
    const std::vector<FieldElement> b = ctx.to_monomial(a);
    std::string out;
    for (int j = 0; j < ctx.num_components(); ++j) {
        const FieldElement& c = b[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        std::string term;
        const std::uint32_t m = ctx.mask(j);
        if (m == 0) {
            term = to_string(c);
        } else {
            std::string mono;
            for (int e = 1; e <= ctx.s(); ++e) {
                if (!((m >> (e - 1)) & 1u)) continue;
                if (!mono.empty()) mono += "*";
                mono += "u" + std::to_string(e);
            }
            term = c.is_one() ? mono : to_string(c) + "*" + mono;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace skewdna

#endif  // SKEWDNA_RING_HPP
