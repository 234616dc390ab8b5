#ifndef SKEWDNA_DNA_HPP
#define SKEWDNA_DNA_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewdna/gf.hpp"
#include "skewdna/ring.hpp"

namespace skewdna {

// A string over the nucleotide alphabet {A, C, G, T}, validated on entry.
class DnaString {
   public:
    DnaString() = default;

    explicit DnaString(std::string bases) : bases_(std::move(bases)) {
        for (char c : bases_)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
                throw std::invalid_argument("dna: invalid base '" + std::string(1, c) + "'");
    }

    const std::string& str() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    bool empty() const { return bases_.empty(); }

    friend bool operator==(const DnaString& a, const DnaString& b) { return a.bases_ == b.bases_; }
    friend bool operator!=(const DnaString& a, const DnaString& b) { return !(a == b); }
    friend bool operator<(const DnaString& a, const DnaString& b) { return a.bases_ < b.bases_; }

   private:
    std::string bases_;
};

inline DnaString dna_reverse(const DnaString& d) {
    std::string s = d.str();
    std::reverse(s.begin(), s.end());
    return DnaString(std::move(s));
}

// Watson-Crick complement: A <-> T, C <-> G, per base
inline DnaString wcc_complement(const DnaString& d) {
    std::string s = d.str();
    for (char& c : s) {
        switch (c) {
            case 'A': c = 'T'; break;
            case 'T': c = 'A'; break;
            case 'C': c = 'G'; break;
            case 'G': c = 'C'; break;
        }
    }
    return DnaString(std::move(s));
}

inline bool is_dna_palindrome(const DnaString& d) { return d == dna_reverse(d); }

/* The bijection tau between GF(2^{4k}) and the 4^{2k} DNA strings of
   length 2k, constrained by the reverse-pairing law
   tau(theta(a)) = reverse(tau(a)): theta-fixed elements take palindromic
   strings, theta-orbits take reversal pairs. */
class DnaCodebook {
   public:
    /* Deterministic orbit matching. Elements are visited in canonical
       order (0, then ascending powers of the generator); a theta-fixed
       element takes the lexicographically smallest unused palindrome
       (A < C < G < T), any other element takes the smallest unused
       non-palindrome and hands its reverse to its theta image. */
    static DnaCodebook generated(const FieldContext& field) {
        const int len = 2 * field.k();
        const std::size_t total = field.size();
        std::vector<std::string> fwd(total);
        std::vector<bool> used(total, false);
        std::size_t pal_cursor = 0, npal_cursor = 0;
        auto advance = [&](std::size_t& cur, bool pal) {
            while (cur < total && (used[cur] || is_palindrome_index(cur, len) != pal)) ++cur;
            if (cur >= total) throw std::logic_error("dna: codebook matching ran out of strings");
            return cur;
        };
        for (std::size_t i = 0; i < total; ++i) {
            const FieldElement a = field.at(i);
            if (!fwd[a.bits()].empty()) continue;
            const FieldElement th = a.theta();
            if (th == a) {
                const std::size_t s = advance(pal_cursor, true);
                used[s] = true;
                fwd[a.bits()] = index_to_string(s, len);
            } else {
                const std::size_t s = advance(npal_cursor, false);
                std::string str = index_to_string(s, len);
                std::string rev = str;
                std::reverse(rev.begin(), rev.end());
                used[s] = true;
                used[string_to_index(rev)] = true;
                fwd[a.bits()] = std::move(str);
                fwd[th.bits()] = std::move(rev);
            }
        }
        return DnaCodebook(&field, std::move(fwd), "generated");
    }

    /* The fixed reference table for GF(16), indexed by discrete log.
       Eleven entries are pinned by the worked 16-mer pair; the rest is
       the forced completion (GG is the last free palindrome; the orbit
       pairs take {AC, CA} and {TC, CT} in discrete-log order). */
    static DnaCodebook embedded_reference(const FieldContext& field) {
        if (field.k() != 1)
            throw std::invalid_argument("dna: embedded-reference codebook requires k = 1");
        static const char* const kByLog[15] = {"TT", "AT", "GC", "AG", "TA", "CC", "AC", "GT",
                                               "CG", "CA", "GG", "TC", "GA", "TG", "CT"};
        std::vector<std::string> fwd(field.size());
        fwd[0] = "AA";
        for (int i = 0; i < 15; ++i) fwd[field.exp(i).bits()] = kByLog[i];
        return DnaCodebook(&field, std::move(fwd), "embedded-reference");
    }

    static DnaCodebook build(const FieldContext& field, const std::string& source) {
        if (source == "generated") return generated(field);
        if (source == "embedded-reference") return embedded_reference(field);
        throw std::invalid_argument("dna: unknown codebook source '" + source + "'");
    }

    const FieldContext& field() const { return *field_; }
    const std::string& source() const { return source_; }
    int kmer_length() const { return 2 * field_->k(); }

    DnaString tau(const FieldElement& a) const {
        field_->require_same(a);
        return DnaString(fwd_[a.bits()]);
    }

    FieldElement tau_inv(const DnaString& d) const {
        if (static_cast<int>(d.size()) != kmer_length())
            throw std::invalid_argument("dna: expected a string of length " +
                                        std::to_string(kmer_length()));
        const auto it = bwd_.find(d.str());
        if (it == bwd_.end()) throw std::invalid_argument("dna: string not in codebook");
        return field_->element(it->second);
    }

    // two-column dump, discrete-log order with 0 first
    void write(std::ostream& os) const {
        os << "0\t" << fwd_[0] << "\n";
        for (std::size_t i = 0; i < field_->group_order(); ++i) {
            const FieldElement a = field_->exp(static_cast<long long>(i));
            os << to_string(a) << "\t" << fwd_[a.bits()] << "\n";
        }
    }

   private:
    DnaCodebook(const FieldContext* field, std::vector<std::string> fwd, std::string source)
        : field_(field), fwd_(std::move(fwd)), source_(std::move(source)) {
        for (std::size_t bits = 0; bits < fwd_.size(); ++bits) {
            if (fwd_[bits].empty()) throw std::logic_error("dna: incomplete codebook");
            bwd_.emplace(fwd_[bits], static_cast<std::uint32_t>(bits));
        }
        if (bwd_.size() != fwd_.size()) throw std::logic_error("dna: codebook is not injective");
    }

    // strings of one length enumerate lexicographically as base-4 integers
    static std::string index_to_string(std::size_t idx, int len) {
        static const char kAlpha[4] = {'A', 'C', 'G', 'T'};
        std::string s(static_cast<std::size_t>(len), 'A');
        for (int pos = len - 1; pos >= 0; --pos) {
            s[static_cast<std::size_t>(pos)] = kAlpha[idx & 3];
            idx >>= 2;
        }
        return s;
    }

    static std::size_t string_to_index(const std::string& s) {
        std::size_t idx = 0;
        for (char c : s) {
            idx <<= 2;
            switch (c) {
                case 'A': break;
                case 'C': idx |= 1; break;
                case 'G': idx |= 2; break;
                default: idx |= 3; break;
            }
        }
        return idx;
    }

    static bool is_palindrome_index(std::size_t idx, int len) {
        const std::string s = index_to_string(idx, len);
        std::string r = s;
        std::reverse(r.begin(), r.end());
        return s == r;
    }

    const FieldContext* field_;
    std::vector<std::string> fwd_;  // indexed by element bits
    std::unordered_map<std::string, std::uint32_t> bwd_;
    std::string source_;
};

/* tau_2: a Gray coordinate tuple (alpha_0, ..., alpha_{2^s-1}) becomes
   the concatenation of the per-component 2k-mers, length 2^{s+1} k. */
inline DnaString encode_gray_tuple(const DnaCodebook& book, const RingContext& ring,
                                   const std::vector<FieldElement>& tuple) {
    if (&book.field() != &ring.field())
        throw std::invalid_argument("dna: codebook and ring use different fields");
    if (static_cast<int>(tuple.size()) != ring.num_components())
        throw std::invalid_argument("dna: expected a tuple of " +
                                    std::to_string(ring.num_components()) + " components");
    std::string out;
    out.reserve(tuple.size() * static_cast<std::size_t>(book.kmer_length()));
    for (const auto& a : tuple) out += book.tau(a).str();
    return DnaString(std::move(out));
}

inline DnaString encode_ring_element(const DnaCodebook& book, const RingElement& a) {
    return encode_gray_tuple(book, a.ring(), gray(a));
}

// full codeword image, length n * 2^{s+1} k
inline DnaString encode_codeword(const DnaCodebook& book, const RingContext& ring,
                                 const std::vector<RingElement>& word) {
    std::string out;
    for (const auto& c : word) {
        ring.require_same(c);
        out += encode_gray_tuple(book, ring, gray(c)).str();
    }
    return DnaString(std::move(out));
}

/* One FASTA record per codeword: the header carries the codeword index and the
   message it encodes (pre-rendered by the caller), the body is the DNA image. */
inline void write_fasta_record(std::ostream& os, std::uint64_t index,
                               const std::string& message_text, const DnaString& seq) {
    os << ">cw" << index << " msg=" << message_text << '\n' << seq.str() << '\n';
}

}  // namespace skewdna

#endif  // SKEWDNA_DNA_HPP
