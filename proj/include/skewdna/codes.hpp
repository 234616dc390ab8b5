#ifndef SKEWDNA_CODES_HPP
#define SKEWDNA_CODES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdna/dna.hpp"
#include "skewdna/report.hpp"
#include "skewdna/ring.hpp"
#include "skewdna/skewpoly.hpp"

namespace skewdna {

struct Codeword {
    std::vector<RingElement> word;     // length n
    std::vector<RingElement> message;  // provenance: the t encoding coefficients
};

// sigma(c) = (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2}))
inline std::vector<RingElement> skew_shift(const std::vector<RingElement>& word) {
    if (word.empty()) throw std::invalid_argument("codes: empty word");
    std::vector<RingElement> out;
    out.reserve(word.size());
    out.push_back(word.back().theta());
    for (std::size_t i = 0; i + 1 < word.size(); ++i) out.push_back(word[i].theta());
    return out;
}

/* A skew cyclic code C = (g(x)) of even length n, principally generated
   by a monic right divisor g of x^n - 1. Messages have dimension
   t = n - deg g; |C| = |R_{k,s}|^t. */
class SkewCyclicCode {
   public:
    SkewCyclicCode(const RingContext& ring, SkewPoly g, int n)
        : ring_(&ring), g_(std::move(g)), n_(n) {
        if (n < 2 || (n & 1)) throw std::invalid_argument("codes: length must be even and >= 2");
        if (!g_.is_monic()) throw std::invalid_argument("codes: generator must be monic");
        if (g_.degree() < 1 || g_.degree() >= n)
            throw std::invalid_argument("codes: generator degree must be in [1, n)");
        if (!g_.right_divides_xn_minus_1(n))
            throw std::invalid_argument("codes: generator is not a right divisor of x^n - 1");

        if (g_.degree() % 2 == 1 && g_.is_theta_palindromic())
            symmetry_class_ = "theta-palindromic-odd-degree";
        else if (g_.degree() % 2 == 0 && g_.is_palindromic())
            symmetry_class_ = "palindromic-even-degree";
        else
            symmetry_class_ = "none";
    }

    const RingContext& ring() const { return *ring_; }
    const SkewPoly& generator() const { return g_; }
    int n() const { return n_; }
    int t() const { return n_ - g_.degree(); }
    const std::string& symmetry_class() const { return symmetry_class_; }

    // |C| = |R|^t = 4^{2^{s+1} k t} = 2^{cardinality_log2()}
    long long cardinality_log2() const {
        return 2LL * cardinality_log4();
    }
    long long cardinality_log4() const {
        return static_cast<long long>(ring_->cardinality_log4()) * t();
    }
    std::string cardinality_string() const { return "4^" + std::to_string(cardinality_log4()); }

    Codeword encode(const std::vector<RingElement>& msg) const {
        check_message(msg);
        const SkewPoly c = SkewPoly(*ring_, msg) * g_;
        return {pad(c), msg};
    }

    /* c'(x) = sum_i theta(beta_i) x^{t-1-i} g(x): the codeword whose DNA
       image reverses the image of encode(msg) when the generator meets a
       symmetry hypothesis. Always a codeword. */
    Codeword reverse_codeword(const std::vector<RingElement>& msg) const {
        check_message(msg);
        std::vector<RingElement> rev;
        rev.reserve(msg.size());
        for (std::size_t i = 0; i < msg.size(); ++i)
            rev.push_back(msg[msg.size() - 1 - i].theta());
        Codeword cw = encode(rev);
        cw.message = msg;  // provenance stays with the original message
        return cw;
    }

    bool contains(const std::vector<RingElement>& word) const {
        if (static_cast<int>(word.size()) != n_)
            throw std::invalid_argument("codes: word length must be n");
        for (const auto& c : word) ring_->require_same(c);
        return SkewPoly(*ring_, word).right_divmod(g_).second.is_zero();
    }

    bool cardinality_exceeds(std::uint64_t cap) const {
        const long long l2 = cardinality_log2();
        return l2 >= 64 || (std::uint64_t{1} << l2) > cap;
    }

    std::uint64_t cardinality() const {
        if (cardinality_log2() >= 64)
            throw std::invalid_argument("codes: cardinality exceeds 2^63");
        return std::uint64_t{1} << cardinality_log2();
    }

    /* Message with a given enumeration index: a mixed-radix counter,
       symbol 0 in the least significant position, each symbol drawn from
       the ring's canonical element order. All radices are powers of two,
       so the counter is a bit slice. */
    std::vector<RingElement> message_at(std::uint64_t index) const {
        // bits per symbol: 4k per component, 2^s components
        const int w = ring_->field().extension_degree() * ring_->num_components();
        const std::uint64_t mask =
            (w < 64) ? ((std::uint64_t{1} << w) - 1) : ~std::uint64_t{0};
        std::vector<RingElement> msg;
        msg.reserve(static_cast<std::size_t>(t()));
        for (int j = 0; j < t(); ++j) {
            const int shift = w * j;
            msg.push_back(ring_->at(shift < 64 ? (index >> shift) & mask : 0));
        }
        return msg;
    }

    // exhaustive stream; throws if |C| > cap
    void enumerate(std::uint64_t cap, const std::function<void(const Codeword&)>& fn) const {
        if (cardinality_exceeds(cap))
            throw std::invalid_argument("codes: cardinality " + cardinality_string() +
                                        " exceeds the enumeration cap");
        const std::uint64_t total = cardinality();
        for (std::uint64_t i = 0; i < total; ++i) fn(encode(message_at(i)));
    }

    // reproducible uniform messages (every radix is a power of two)
    std::vector<std::vector<RingElement>> sample_messages(std::size_t trials,
                                                          std::uint64_t seed) const {
        std::mt19937_64 rng(seed);
        const std::uint64_t mask = ring_->field().size() - 1;
        std::vector<std::vector<RingElement>> out;
        out.reserve(trials);
        for (std::size_t trial = 0; trial < trials; ++trial) {
            std::vector<RingElement> msg;
            msg.reserve(static_cast<std::size_t>(t()));
            for (int j = 0; j < t(); ++j) {
                std::vector<FieldElement> comps;
                comps.reserve(static_cast<std::size_t>(ring_->num_components()));
                for (int c = 0; c < ring_->num_components(); ++c)
                    comps.push_back(ring_->field().at(rng() & mask));
                msg.push_back(ring_->from_components(std::move(comps)));
            }
            out.push_back(std::move(msg));
        }
        return out;
    }

   private:
    void check_message(const std::vector<RingElement>& msg) const {
        if (static_cast<int>(msg.size()) != t())
            throw std::invalid_argument("codes: message length must be " + std::to_string(t()));
        for (const auto& m : msg) ring_->require_same(m);
    }

    std::vector<RingElement> pad(const SkewPoly& p) const {
        std::vector<RingElement> w(static_cast<std::size_t>(n_), ring_->zero());
        for (int i = 0; i <= p.degree(); ++i) w[static_cast<std::size_t>(i)] = p.coeff(i);
        return w;
    }

    const RingContext* ring_;
    SkewPoly g_;
    int n_;
    std::string symmetry_class_;
};

/* All monic degree-`degree` polynomials over the given coefficient set
   that satisfy the requested symmetry and right-divide x^n - 1.
   Candidates enumerate deterministically: free coefficient slots are
   a mixed-radix counter with the lowest-degree slot varying fastest,
   each slot running through coeff_set in its given order. */
inline std::vector<SkewPoly> search_divisors(const RingContext& ring, int n, int degree,
                                             const std::string& symmetry,
                                             const std::vector<RingElement>& coeff_set,
                                             std::uint64_t budget) {
    if (n < 2 || (n & 1)) throw std::invalid_argument("codes: length must be even and >= 2");
    if (degree < 1 || degree >= n)
        throw std::invalid_argument("codes: divisor degree must be in [1, n)");
    if (symmetry != "palindromic" && symmetry != "theta-palindromic" && symmetry != "any")
        throw std::invalid_argument("codes: unknown symmetry '" + symmetry + "'");
    for (const auto& c : coeff_set) ring.require_same(c);
    if (coeff_set.empty()) return {};

    /* Free slots under the constraint; the rest is forced. Monicity
       fixes c_deg = 1, hence c_0 = 1 for palindromic and c_0 = theta(1)
       = 1 for theta-palindromic generators. A theta-palindromic middle
       slot (even degree) must be a theta fixed point. */
    std::vector<int> slots;           // degrees of free coefficients
    std::vector<int> fixed_middle;    // slots restricted to theta-fixed values
    if (symmetry == "any") {
        for (int i = 0; i < degree; ++i) slots.push_back(i);
    } else {
        for (int i = 1; 2 * i < degree; ++i) slots.push_back(i);
        if (degree % 2 == 0) {
            slots.push_back(degree / 2);
            if (symmetry == "theta-palindromic") fixed_middle.push_back(degree / 2);
        }
    }

    std::vector<std::vector<RingElement>> domains;
    for (int slot : slots) {
        if (std::find(fixed_middle.begin(), fixed_middle.end(), slot) != fixed_middle.end()) {
            std::vector<RingElement> fixed;
            for (const auto& c : coeff_set)
                if (c.theta() == c) fixed.push_back(c);
            domains.push_back(std::move(fixed));
        } else {
            domains.push_back(coeff_set);
        }
    }

    std::uint64_t total = 1;
    for (const auto& d : domains) {
        if (d.empty()) return {};
        if (total > budget / d.size())
            throw std::invalid_argument("codes: candidate count exceeds the search budget");
        total *= d.size();
    }

    std::vector<SkewPoly> found;
    std::vector<std::size_t> odo(domains.size(), 0);
    const SkewPoly target = SkewPoly::x_pow_n_minus_1(ring, n);
    while (true) {
        std::vector<RingElement> coeffs(static_cast<std::size_t>(degree) + 1, ring.zero());
        coeffs[static_cast<std::size_t>(degree)] = ring.one();
        if (symmetry != "any") coeffs[0] = ring.one();
        for (std::size_t si = 0; si < slots.size(); ++si) {
            const int d = slots[si];
            const RingElement& v = domains[si][odo[si]];
            coeffs[static_cast<std::size_t>(d)] = v;
            if (symmetry == "palindromic")
                coeffs[static_cast<std::size_t>(degree - d)] = v;
            else if (symmetry == "theta-palindromic")
                coeffs[static_cast<std::size_t>(degree - d)] = v.theta();
        }
        SkewPoly g(ring, std::move(coeffs));
        if (g.degree() == degree && g.right_divides(target)) found.push_back(std::move(g));

        // advance the odometer, lowest slot fastest
        std::size_t pos = 0;
        while (pos < odo.size()) {
            if (++odo[pos] < domains[pos].size()) break;
            odo[pos] = 0;
            ++pos;
        }
        if (pos == odo.size()) break;
    }
    return found;
}

/* Reversibility verification. Exhaustive mode enumerates the whole code
   and checks that its DNA image is closed under string reversal; sampled
   mode checks the constructive reverse codeword against the string
   reverse for `trials` seeded random messages. Failure is reported, not
   thrown. */
inline Report verify_reversible(const SkewCyclicCode& code, const DnaCodebook& book,
                                const std::string& mode, std::size_t trials, std::uint64_t seed,
                                std::uint64_t cap = (std::uint64_t{1} << 20)) {
    Report rep;
    const RingContext& ring = code.ring();
    if (mode == "exhaustive") {
        rep.add_info("verify-reversible", "mode",
                     "exhaustive cardinality=" + code.cardinality_string());
        std::set<std::string> images;
        code.enumerate(cap, [&](const Codeword& cw) {
            images.insert(encode_codeword(book, ring, cw.word).str());
        });
        for (const auto& s : images) {
            std::string rev(s.rbegin(), s.rend());
            if (!images.count(rev)) {
                rep.add_fail("verify-reversible", "dna-set-reversal-closed",
                             "reverse of " + s + " is missing");
                return rep;
            }
        }
        rep.add_pass("verify-reversible", "dna-set-reversal-closed",
                     std::to_string(images.size()) + " distinct strings");
        return rep;
    }
    if (mode != "sampled") throw std::invalid_argument("codes: unknown mode '" + mode + "'");

    rep.add_info("verify-reversible", "mode",
                 "sampled trials=" + std::to_string(trials) + " seed=" + std::to_string(seed));
    bool strings_ok = true, membership_ok = true;
    for (const auto& msg : code.sample_messages(trials, seed)) {
        const Codeword c = code.encode(msg);
        const Codeword r = code.reverse_codeword(msg);
        const DnaString img = encode_codeword(book, ring, c.word);
        const DnaString rimg = encode_codeword(book, ring, r.word);
        if (strings_ok && rimg != dna_reverse(img)) {
            strings_ok = false;
            rep.add_fail("verify-reversible", "reverse-codeword-dna-match",
                         "message image " + img.str());
        }
        if (membership_ok && !code.contains(r.word)) {
            membership_ok = false;
            rep.add_fail("verify-reversible", "reverse-codeword-membership",
                         "image " + rimg.str());
        }
        if (!strings_ok && !membership_ok) break;
    }
    if (strings_ok)
        rep.add_pass("verify-reversible", "reverse-codeword-dna-match",
                     std::to_string(trials) + " trials");
    if (membership_ok)
        rep.add_pass("verify-reversible", "reverse-codeword-membership",
                     std::to_string(trials) + " trials");
    return rep;
}

// minimum pairwise Hamming distance between distinct DNA codeword images
inline int dna_min_distance(const SkewCyclicCode& code, const DnaCodebook& book,
                            std::uint64_t cap = (std::uint64_t{1} << 16)) {
    std::vector<std::string> words;
    code.enumerate(cap, [&](const Codeword& cw) {
        words.push_back(encode_codeword(book, code.ring(), cw.word).str());
    });
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (words.size() < 2) throw std::domain_error("codes: need at least two distinct codewords");
    int best = -1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            int d = 0;
            for (std::size_t p = 0; p < words[i].size(); ++p)
                if (words[i][p] != words[j][p]) ++d;
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

}  // namespace skewdna

#endif  // SKEWDNA_CODES_HPP
