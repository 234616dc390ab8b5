#ifndef SKEWDNA_GF_HPP
#define SKEWDNA_GF_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewdna {

/* Bit-packed polynomials over GF(2): bit i is the coefficient of y^i.
   These helpers back the extension-field arithmetic and the modulus
   validation below. */
namespace gf2poly {

inline int degree(std::uint64_t p) {
    if (p == 0) return -1;
    int d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// carry-less schoolbook product
inline std::uint64_t mul(std::uint32_t a, std::uint32_t b) {
    std::uint64_t r = 0;
    std::uint64_t x = a;
    while (b) {
        if (b & 1u) r ^= x;
        x <<= 1;
        b >>= 1;
    }
    return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
    const int dm = degree(m);
    int da = degree(a);
    while (da >= dm && a) {
        a ^= m << (da - dm);
        da = degree(a);
    }
    return a;
}

inline std::uint64_t mulmod(std::uint32_t a, std::uint32_t b, std::uint64_t m) {
    return mod(mul(a, b), m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    base = mod(base, m);
    while (e) {
        if (e & 1u) r = mod(mul(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(base)), m);
        base = mod(mul(static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base)), m);
        e >>= 1;
    }
    return r;
}

// trial division by every polynomial of degree 1 .. deg(f)/2
inline bool is_irreducible(std::uint64_t f) {
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        for (std::uint64_t lo = 0; lo < (std::uint64_t{1} << d); ++lo) {
            const std::uint64_t cand = (std::uint64_t{1} << d) | lo;
            if (mod(f, cand) == 0) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// f is primitive iff it is irreducible and the residue class of y
// generates the full multiplicative group of order 2^deg(f) - 1.
inline bool is_primitive(std::uint64_t f) {
    if (!is_irreducible(f)) return false;
    const int n = degree(f);
    const std::uint64_t group = (std::uint64_t{1} << n) - 1;
    if (powmod(2, group, f) != 1) return false;
    for (std::uint64_t p : prime_factors(group))
        if (powmod(2, group / p, f) == 1) return false;
    return true;
}

inline std::string to_string(std::uint64_t p) {
    if (p == 0) return "0";
    std::string out;
    for (int d = degree(p); d >= 0; --d) {
        if (!((p >> d) & 1u)) continue;
        if (!out.empty()) out += " + ";
        if (d == 0)
            out += "1";
        else if (d == 1)
            out += "y";
        else
            out += "y^" + std::to_string(d);
    }
    return out;
}

}  // namespace gf2poly

class FieldContext;

/* An element of GF(2^{4k}), fully reduced; the low 4k bits are the
   coefficients of the residue class. Elements remember their context so
   mixed-context arithmetic is rejected instead of silently wrong. */
class FieldElement {
   public:
    std::uint32_t bits() const { return bits_; }
    const FieldContext& field() const { return *field_; }
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement& operator+=(const FieldElement& other);
    FieldElement operator*(const FieldElement& other) const;
    FieldElement& operator*=(const FieldElement& other);
    FieldElement inverse() const;
    FieldElement squared() const;
    FieldElement theta() const;  // a -> a^{4^k}, the order-2 automorphism

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

   private:
    friend class FieldContext;
    FieldElement(std::uint32_t bits, const FieldContext* field) : bits_(bits), field_(field) {}

    std::uint32_t bits_;
    const FieldContext* field_;
};

/* GF(2^{4k}) for 1 <= k <= 4, with a primitive modulus so that the
   residue class of y generates the multiplicative group. Full exp/log
   tables are produced while proving primitivity; multiplication uses
   them for k <= 2 and falls back to carry-less reduction for k >= 3,
   where table lookups no longer dominate the workloads. */
class FieldContext {
   public:
    explicit FieldContext(int k) : FieldContext(k, default_modulus(k)) {}

    FieldContext(int k, std::uint64_t modulus) : k_(k), modulus_(modulus) {
        if (k < 1 || k > 4) throw std::invalid_argument("field: k must be in [1, 4]");
        const int n = 4 * k;
        if (gf2poly::degree(modulus) != n)
            throw std::invalid_argument("field: modulus must have degree " + std::to_string(n));
        if (!gf2poly::is_irreducible(modulus))
            throw std::invalid_argument("field: modulus " + gf2poly::to_string(modulus) +
                                        " is not irreducible");
        if (!gf2poly::is_primitive(modulus))
            throw std::invalid_argument("field: modulus " + gf2poly::to_string(modulus) +
                                        " is irreducible but not primitive");
        build_tables();
    }

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    int k() const { return k_; }
    int extension_degree() const { return 4 * k_; }  // over GF(2)
    std::uint64_t modulus() const { return modulus_; }
    std::size_t size() const { return std::size_t{1} << (4 * k_); }
    std::size_t group_order() const { return size() - 1; }

    FieldElement zero() const { return {0, this}; }
    FieldElement one() const { return {1, this}; }
    FieldElement generator() const { return {2, this}; }  // the class of y, written b

    FieldElement element(std::uint32_t bits) const {
        if (bits >= size()) throw std::invalid_argument("field: element bits out of range");
        return {bits, this};
    }

    // b^i with the exponent reduced modulo the group order
    FieldElement exp(long long i) const {
        const long long m = static_cast<long long>(group_order());
        long long r = i % m;
        if (r < 0) r += m;
        return {exp_[static_cast<std::size_t>(r)], this};
    }

    std::size_t log(const FieldElement& a) const {
        require_same(a);
        if (a.is_zero()) throw std::domain_error("field: log of zero");
        return log_[a.bits_];
    }

    /* Canonical enumeration order: 0 first, then b^0, b^1, ...  Used by
       codeword enumeration so that sweeps are reproducible. */
    FieldElement at(std::size_t index) const {
        if (index >= size()) throw std::invalid_argument("field: enumeration index out of range");
        if (index == 0) return zero();
        return {exp_[index - 1], this};
    }

    static std::uint64_t default_modulus(int k) {
        switch (k) {
            case 1: return 0x13;     // y^4 + y + 1
            case 2: return 0x11d;    // y^8 + y^4 + y^3 + y^2 + 1
            case 3: return 0x1053;   // y^12 + y^6 + y^4 + y + 1
            case 4: return 0x1002d;  // y^16 + y^5 + y^3 + y^2 + 1
            default: throw std::invalid_argument("field: k must be in [1, 4]");
        }
    }

    // raw-bit arithmetic; FieldElement wraps these
    std::uint32_t add_bits(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

    std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (k_ <= 2) {
            const std::size_t m = group_order();
            return exp_[(log_[a] + log_[b]) % m];
        }
        return static_cast<std::uint32_t>(gf2poly::mulmod(a, b, modulus_));
    }

    std::uint32_t inv_bits(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("field: inverse of zero");
        const std::size_t m = group_order();
        if (k_ <= 2) return exp_[(m - log_[a]) % m];
        return pow_bits(a, m - 1);  // a^{2^{4k}-2}
    }

    std::uint32_t pow_bits(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1u) r = mul_bits(r, a);
            a = mul_bits(a, a);
            e >>= 1;
        }
        return r;
    }

    // 2k successive squarings: a^{2^{2k}} = a^{4^k}
    std::uint32_t theta_bits(std::uint32_t a) const {
        for (int i = 0; i < 2 * k_; ++i) a = mul_bits(a, a);
        return a;
    }

    void require_same(const FieldElement& a) const {
        if (a.field_ != this) throw std::invalid_argument("field: context mismatch");
    }

   private:
    void build_tables() {
        const std::size_t m = group_order();
        exp_.assign(m, 0);
        log_.assign(size(), 0);
        std::uint32_t cur = 1;
        for (std::size_t i = 0; i < m; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = static_cast<std::uint32_t>(gf2poly::mulmod(cur, 2, modulus_));
        }
        if (cur != 1) throw std::logic_error("field: table walk did not close");
    }

    int k_;
    std::uint64_t modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = bits of b^i, i in [0, 2^{4k}-2]
    std::vector<std::uint32_t> log_;  // inverse lookup, log_[0] unused
};

inline FieldElement FieldElement::operator+(const FieldElement& other) const {
    field_->require_same(other);
    return {field_->add_bits(bits_, other.bits_), field_};
}

inline FieldElement& FieldElement::operator+=(const FieldElement& other) {
    *this = *this + other;
    return *this;
}

inline FieldElement FieldElement::operator*(const FieldElement& other) const {
    field_->require_same(other);
    return {field_->mul_bits(bits_, other.bits_), field_};
}

inline FieldElement& FieldElement::operator*=(const FieldElement& other) {
    *this = *this * other;
    return *this;
}

inline FieldElement FieldElement::inverse() const { return {field_->inv_bits(bits_), field_}; }

inline FieldElement FieldElement::squared() const { return {field_->mul_bits(bits_, bits_), field_}; }

inline FieldElement FieldElement::theta() const { return {field_->theta_bits(bits_), field_}; }

// "0", "1", "b", or "b^i" in discrete-log notation
inline std::string to_string(const FieldElement& a) {
    if (a.is_zero()) return "0";
    const std::size_t i = a.field().log(a);
    if (i == 0) return "1";
    if (i == 1) return "b";
    return "b^" + std::to_string(i);
}

// every primitive modulus of the given degree, ascending by bit pattern
inline std::vector<std::uint64_t> primitive_moduli(int degree) {
    if (degree < 2 || degree > 16) throw std::invalid_argument("primitive_moduli: degree out of range");
    std::vector<std::uint64_t> out;
    const std::uint64_t top = std::uint64_t{1} << degree;
    // constant term must be 1, else divisible by y
    for (std::uint64_t lo = 1; lo < top; lo += 2)
        if (gf2poly::is_primitive(top | lo)) out.push_back(top | lo);
    return out;
}

}  // namespace skewdna

#endif  // SKEWDNA_GF_HPP
