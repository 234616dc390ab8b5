// Command-line front end: construct, verify, and export reversible DNA codes
// built from skew cyclic codes over F_{4^{2k}}[u_1..u_s] / (u_i^2 - u_i).
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewdna/codes.hpp"
#include "skewdna/dna.hpp"
#include "skewdna/gf.hpp"
#include "skewdna/parse.hpp"
#include "skewdna/report.hpp"
#include "skewdna/ring.hpp"
#include "skewdna/skewpoly.hpp"

namespace {

using namespace skewdna;

// ---------------------------------------------------------------------------
// shared plumbing

std::uint64_t parse_modulus_bits(const std::string& text) {
    std::size_t pos = 0;
    unsigned long long bits = 0;
    try {
        bits = std::stoull(text, &pos, 0);  // decimal or 0x/0b prefixed
    } catch (const std::exception&) {
        throw std::invalid_argument("modulus: cannot parse bit pattern '" + text + "'");
    }
    if (pos != text.size())
        throw std::invalid_argument("modulus: trailing characters in '" + text + "'");
    return bits;
}

FieldContext make_field(int k, const std::string& modulus_text) {
    if (modulus_text.empty()) return FieldContext(k);
    return FieldContext(k, parse_modulus_bits(modulus_text));
}

// Print the human report, write the CSV copy if requested, map ok() to exit 0.
int finish(const Report& rep, const std::string& csv_path) {
    rep.write_human(std::cout);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
        rep.write_csv(out);
    }
    return rep.ok() ? 0 : 1;
}

std::string render_message(const std::vector<RingElement>& msg) {
    std::string out = "[";
    for (std::size_t i = 0; i < msg.size(); ++i) {
        if (i) out += "; ";
        out += to_string(msg[i]);
    }
    out += "]";
    return out;
}

std::string render_tuple(const std::vector<int>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    out += ")";
    return out;
}

std::string trim(const std::string& s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// ---------------------------------------------------------------------------
// plain commands (data output, no pass/fail rows)

int cmd_field_table(int k, const std::string& modulus_text) {
    const FieldContext field = make_field(k, modulus_text);
    std::cout << "GF(2^" << field.extension_degree() << "), modulus " << gf2poly::to_string(field.modulus())
              << ", " << field.size() << " elements, theta(a) = a^" << (1ull << (2 * k))
              << "\n";
    std::cout << "index\telement\tbits\ttheta\n";
    for (std::uint64_t i = 0; i < field.size(); ++i) {
        const FieldElement a = field.at(i);
        std::ostringstream bits;
        bits << "0x" << std::hex << a.bits();
        std::cout << i << "\t" << to_string(a) << "\t" << bits.str() << "\t" << to_string(a.theta())
                  << "\n";
    }
    return 0;
}

int cmd_ring_info(int k, int s, const std::string& modulus_text) {
    const FieldContext field = make_field(k, modulus_text);
    const RingContext ring(field, s);
    const int m = ring.num_components();
    std::cout << "R_{" << k << "," << s << "} = GF(2^" << field.extension_degree() << ")[u1..u" << s
              << "]/(u_i^2 - u_i), modulus " << gf2poly::to_string(field.modulus()) << "\n";
    std::cout << "components: " << m << ", cardinality " << ring.cardinality_string() << "\n";
    std::cout << "component order (weight-major) and idempotents:\n";
    for (int i = 0; i < m; ++i) {
        std::cout << "  T" << i << " = " << render_tuple(ring.tuple(i)) << "\tI" << i << " = "
                  << ring.idempotent_text(i) << "\n";
    }
    std::cout << "theta pairs component i with component " << (m - 1) << "-i\n";
    return 0;
}

int cmd_codebook(int k, const std::string& modulus_text, const std::string& source,
                 const std::string& out_path) {
    const FieldContext field = make_field(k, modulus_text);
    const DnaCodebook book = DnaCodebook::build(field, source);
    if (out_path.empty()) {
        book.write(std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        book.write(out);
        std::cout << "wrote " << field.size() << " codebook entries to " << out_path << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check-divisor

int cmd_check_divisor(int k, int s, const std::string& modulus_text, int n,
                      const std::string& g_text, const std::string& csv_path) {
    const FieldContext field = make_field(k, modulus_text);
    const RingContext ring(field, s);
    const SkewPoly g = parse_poly_expr(g_text, ring);

    Report rep;
    rep.add_info("check-divisor", "generator", to_string(g));
    if (!g.is_monic()) {
        rep.add_fail("check-divisor", "generator-monic", "leading coefficient is not 1");
        return finish(rep, csv_path);
    }
    rep.add_pass("check-divisor", "generator-monic");

    const bool divides = g.right_divides_xn_minus_1(n);
    if (!divides) {
        const SkewPoly rem = SkewPoly::x_pow_n_minus_1(ring, n).right_divmod(g).second;
        rep.add_fail("check-divisor", "right-divides-x^" + std::to_string(n) + "-1",
                     "remainder " + to_string(rem));
        return finish(rep, csv_path);
    }
    rep.add_pass("check-divisor", "right-divides-x^" + std::to_string(n) + "-1");

    const SkewCyclicCode code(ring, g, n);
    rep.add_info("check-divisor", "symmetry-class", code.symmetry_class());
    rep.add_info("check-divisor", "message-length", std::to_string(code.t()));
    rep.add_info("check-divisor", "cardinality", code.cardinality_string());
    return finish(rep, csv_path);
}

// ---------------------------------------------------------------------------
// verify-example: regression checks for the five worked constructions

// Worked construction 1/2: component order and idempotent factorizations of
// the eight-component ring over GF(16).
const char* const kExpectedTuples[8] = {"(0,0,0)", "(1,0,0)", "(0,1,0)", "(0,0,1)",
                                        "(1,1,0)", "(1,0,1)", "(0,1,1)", "(1,1,1)"};
const char* const kExpectedIdempotents[8] = {
    "u1*u2*u3",        "(u1+1)*u2*u3",      "u1*(u2+1)*u3",      "u1*u2*(u3+1)",
    "(u1+1)*(u2+1)*u3", "(u1+1)*u2*(u3+1)", "u1*(u2+1)*(u3+1)", "(u1+1)*(u2+1)*(u3+1)"};

// Worked construction 3: a Gray tuple over GF(16) and its theta image map to
// mutually reversed 16-mers under the reference codebook.
const char* const kExpected16merFwd = "GCATCCAGTTAAGTTT";
const char* const kExpected16merRev = "TTTGAATTGACCTACG";

// Worked construction 4: a theta-palindromic cubic whose product with its
// palindromic cofactor collapses to x^6 - 1.
const char* const kEx4H = "1 + (b^7 + b*(u2+u3))*x + (b^7 + b*(u2+u3))*x^2 + x^3";
const char* const kEx4G = "1 + (b^7 + b*(u2+u3))*x + (b^13 + b^4*(u2+u3))*x^2 + x^3";

// Worked construction 5: the degree-4 palindromic candidate; the analogous
// product identity is recomputed and reported, never asserted.
const char* const kEx5H = "1 + (b^14 + u1 + u2)*x + x^2";
const char* const kEx5G = "1 + (b^14 + u1 + u2)*x + (b^14 + u1 + u2)*x^3 + x^4";

void run_ex1(Report& rep, std::uint64_t modulus, const std::string& prefix) {
    const FieldContext field(1, modulus);
    const RingContext ring(field, 3);
    std::string tuples;
    for (int i = 0; i < ring.num_components(); ++i) {
        if (i) tuples += ", ";
        tuples += render_tuple(ring.tuple(i));
    }
    std::string expected;
    for (int i = 0; i < 8; ++i) {
        if (i) expected += ", ";
        expected += kExpectedTuples[i];
    }
    rep.add_info("ex1", prefix + "component-order", tuples);
    if (tuples == expected)
        rep.add_pass("ex1", prefix + "component-order-matches");
    else
        rep.add_fail("ex1", prefix + "component-order-matches", "expected " + expected);
    if (ring.cardinality_string() == "4^16")
        rep.add_pass("ex1", prefix + "cardinality-4^16");
    else
        rep.add_fail("ex1", prefix + "cardinality-4^16", "got " + ring.cardinality_string());
}

void run_ex2(Report& rep, std::uint64_t modulus, const std::string& prefix) {
    const FieldContext field(1, modulus);
    const RingContext ring(field, 3);
    bool texts_ok = true;
    for (int i = 0; i < ring.num_components(); ++i) {
        const std::string text = ring.idempotent_text(i);
        rep.add_info("ex2", prefix + "I" + std::to_string(i), text);
        if (text != kExpectedIdempotents[i]) {
            texts_ok = false;
            rep.add_fail("ex2", prefix + "idempotent-factorizations",
                         "I" + std::to_string(i) + " = " + text + ", expected " +
                             kExpectedIdempotents[i]);
            break;
        }
    }
    if (texts_ok) rep.add_pass("ex2", prefix + "idempotent-factorizations");

    // algebra: orthogonal idempotents, resolution of one, theta pairing
    const int m = ring.num_components();
    bool laws_ok = true;
    RingElement sum = ring.zero();
    for (int i = 0; i < m && laws_ok; ++i) {
        const RingElement Ii = ring.idempotent(i);
        sum += Ii;
        if (!(Ii * Ii == Ii)) laws_ok = false;
        if (!(Ii.theta() == ring.idempotent(m - 1 - i))) laws_ok = false;
        for (int j = i + 1; j < m && laws_ok; ++j)
            if (!(Ii * ring.idempotent(j)).is_zero()) laws_ok = false;
    }
    if (!(sum == ring.one())) laws_ok = false;
    if (laws_ok)
        rep.add_pass("ex2", prefix + "idempotent-laws");
    else
        rep.add_fail("ex2", prefix + "idempotent-laws");
}

void run_ex3(Report& rep, std::uint64_t modulus, const std::string& prefix) {
    const FieldContext field(1, modulus);
    const RingContext ring(field, 3);
    const DnaCodebook book = DnaCodebook::embedded_reference(field);
    const std::vector<FieldElement> tuple = {field.exp(2), field.exp(1), field.exp(5),
                                             field.exp(3), field.one(),  field.zero(),
                                             field.exp(7), field.one()};
    const RingElement alpha = ring.from_components(tuple);
    const DnaString img = encode_ring_element(book, alpha);
    const DnaString rev_img = encode_ring_element(book, alpha.theta());
    rep.add_info("ex3", prefix + "image", img.str());
    rep.add_info("ex3", prefix + "theta-image", rev_img.str());
    if (img.str() == kExpected16merFwd)
        rep.add_pass("ex3", prefix + "image-matches");
    else
        rep.add_fail("ex3", prefix + "image-matches", "expected " + std::string(kExpected16merFwd));
    if (rev_img.str() == kExpected16merRev)
        rep.add_pass("ex3", prefix + "theta-image-matches");
    else
        rep.add_fail("ex3", prefix + "theta-image-matches",
                     "expected " + std::string(kExpected16merRev));
    if (rev_img == dna_reverse(img))
        rep.add_pass("ex3", prefix + "images-are-mutual-reverses");
    else
        rep.add_fail("ex3", prefix + "images-are-mutual-reverses");
}

void run_ex4(Report& rep, std::uint64_t modulus, const std::string& prefix) {
    const FieldContext field(1, modulus);
    const RingContext ring(field, 3);
    const SkewPoly h = parse_poly_expr(kEx4H, ring);
    const SkewPoly g = parse_poly_expr(kEx4G, ring);
    const SkewPoly prod = h * g;
    const SkewPoly target = SkewPoly::x_pow_n_minus_1(ring, 6);

    if (prod == target)
        rep.add_pass("ex4", prefix + "h*g-is-x^6-1");
    else
        rep.add_fail("ex4", prefix + "h*g-is-x^6-1", "got " + to_string(prod));
    if (g.degree() == 3)
        rep.add_pass("ex4", prefix + "g-has-degree-3");
    else
        rep.add_fail("ex4", prefix + "g-has-degree-3", "degree " + std::to_string(g.degree()));
    if (g.is_theta_palindromic())
        rep.add_pass("ex4", prefix + "g-theta-palindromic");
    else
        rep.add_fail("ex4", prefix + "g-theta-palindromic", to_string(g));

    if (!g.right_divides_xn_minus_1(6)) {
        rep.add_fail("ex4", prefix + "g-right-divides-x^6-1");
        return;
    }
    rep.add_pass("ex4", prefix + "g-right-divides-x^6-1");
    const SkewCyclicCode code(ring, g, 6);
    rep.add_info("ex4", prefix + "symmetry-class", code.symmetry_class());
    rep.add_info("ex4", prefix + "cardinality", code.cardinality_string());
    const DnaCodebook book = DnaCodebook::embedded_reference(field);
    Report sub = verify_reversible(code, book, "sampled", 64, 1);
    for (const auto& row : sub.rows()) rep.add(row.check, prefix + row.name, row.status, row.counterexample);
}

void run_ex5(Report& rep, std::uint64_t modulus, const std::string& prefix) {
    const FieldContext field(1, modulus);
    const RingContext ring(field, 2);
    const SkewPoly h = parse_poly_expr(kEx5H, ring);
    const SkewPoly g = parse_poly_expr(kEx5G, ring);
    const SkewPoly prod = h * g;
    const SkewPoly target = SkewPoly::x_pow_n_minus_1(ring, 6);
    const SkewPoly diff = prod + target;  // characteristic 2: difference = sum

    if (g.is_palindromic() && g.degree() == 4)
        rep.add_pass("ex5", prefix + "g-palindromic-degree-4");
    else
        rep.add_fail("ex5", prefix + "g-palindromic-degree-4", to_string(g));

    // The product identity is recomputed and reported as data, not asserted:
    // whether it holds is exactly what this command exists to measure.
    rep.add_info("ex5", prefix + "computed-h*g", to_string(prod));
    rep.add_info("ex5", prefix + "difference-from-x^6-1", diff.is_zero() ? "0" : to_string(diff));
    rep.add_info("ex5", prefix + "claimed-identity-h*g=x^6-1",
                 diff.is_zero() ? "holds" : "does not hold");
    rep.add_info("ex5", prefix + "g-right-divides-x^6-1",
                 g.right_divides_xn_minus_1(6) ? "yes" : "no");
}

int cmd_verify_example(const std::string& name, bool sweep, const std::string& modulus_text,
                       const std::string& csv_path) {
    void (*runner)(Report&, std::uint64_t, const std::string&) = nullptr;
    if (name == "ex1") runner = run_ex1;
    else if (name == "ex2") runner = run_ex2;
    else if (name == "ex3") runner = run_ex3;
    else if (name == "ex4") runner = run_ex4;
    else if (name == "ex5") runner = run_ex5;
    else throw std::invalid_argument("unknown example '" + name + "' (expected ex1..ex5)");

    std::vector<std::uint64_t> moduli;
    if (sweep) {
        moduli = primitive_moduli(4);  // every worked construction lives over GF(2^4)
    } else if (!modulus_text.empty()) {
        moduli.push_back(parse_modulus_bits(modulus_text));
    } else {
        moduli.push_back(FieldContext::default_modulus(1));
    }

    Report rep;
    for (std::uint64_t m : moduli) {
        const std::string prefix =
            moduli.size() > 1 ? "[" + gf2poly::to_string(m) + "] " : std::string();
        rep.add_info(name, prefix + "modulus", gf2poly::to_string(m));
        runner(rep, m, prefix);
    }
    return finish(rep, csv_path);
}

// ---------------------------------------------------------------------------
// search

std::vector<RingElement> build_coeff_set(const RingContext& ring, const std::string& selector) {
    std::vector<RingElement> set;
    if (selector == "all") {
        const int log4 = ring.cardinality_log4();
        if (2 * log4 > 20)
            throw std::invalid_argument(
                "coefficient set 'all' would hold " + ring.cardinality_string() +
                " elements; use 'field' or an explicit ';'-separated list");
        const std::uint64_t count = std::uint64_t{1} << (2 * log4);
        set.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) set.push_back(ring.at(i));
    } else if (selector == "field") {
        const FieldContext& field = ring.field();
        set.reserve(field.size());
        for (std::uint64_t i = 0; i < field.size(); ++i) set.push_back(ring.constant(field.at(i)));
    } else {
        std::stringstream ss(selector);
        std::string item;
        while (std::getline(ss, item, ';')) {
            item = trim(item);
            if (item.empty()) continue;
            set.push_back(parse_ring_expr(item, ring));
        }
        if (set.empty())
            throw std::invalid_argument("empty coefficient list '" + selector + "'");
    }
    return set;
}

int cmd_search(int k, int s, const std::string& modulus_text, int n, int deg,
               const std::string& symmetry, const std::string& coeffs, std::uint64_t budget) {
    const FieldContext field = make_field(k, modulus_text);
    const RingContext ring(field, s);
    const std::vector<RingElement> set = build_coeff_set(ring, coeffs);
    const std::vector<SkewPoly> found = search_divisors(ring, n, deg, symmetry, set, budget);
    for (const auto& g : found) std::cout << to_string(g) << "\n";
    std::cout << "found " << found.size() << " generator" << (found.size() == 1 ? "" : "s")
              << " of degree " << deg << " (symmetry: " << symmetry << ", n = " << n << ")\n";
    return 0;
}

// ---------------------------------------------------------------------------
// export

int cmd_export(int k, int s, const std::string& modulus_text, int n, const std::string& g_text,
               const std::string& fasta_path, const std::string& source, std::uint64_t cap,
               std::uint64_t sample, std::uint64_t seed) {
    const FieldContext field = make_field(k, modulus_text);
    const RingContext ring(field, s);
    const SkewPoly g = parse_poly_expr(g_text, ring);
    const SkewCyclicCode code(ring, g, n);
    const DnaCodebook book = DnaCodebook::build(field, source);

    std::ofstream fa(fasta_path);
    if (!fa) throw std::runtime_error("cannot open '" + fasta_path + "' for writing");

    std::uint64_t count = 0;
    if (sample > 0) {
        const auto msgs = code.sample_messages(sample, seed);
        for (const auto& m : msgs) {
            const Codeword cw = code.encode(m);
            write_fasta_record(fa, count++, render_message(cw.message),
                               encode_codeword(book, ring, cw.word));
        }
    } else {
        code.enumerate(cap, [&](const Codeword& cw) {
            write_fasta_record(fa, count++, render_message(cw.message),
                               encode_codeword(book, ring, cw.word));
        });
    }
    std::cout << "wrote " << count << " records to " << fasta_path << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify-reversible

int cmd_verify_reversible(int k, int s, const std::string& modulus_text, int n,
                          const std::string& g_text, const std::string& mode, std::uint64_t trials,
                          std::uint64_t seed, std::uint64_t cap, const std::string& source,
                          const std::string& csv_path) {
    const FieldContext field = make_field(k, modulus_text);
    const RingContext ring(field, s);
    const SkewPoly g = parse_poly_expr(g_text, ring);
    const SkewCyclicCode code(ring, g, n);
    const DnaCodebook book = DnaCodebook::build(field, source);
    Report rep = verify_reversible(code, book, mode, static_cast<std::size_t>(trials), seed, cap);
    rep.add_info("verify-reversible", "generator", to_string(g));
    rep.add_info("verify-reversible", "symmetry-class", code.symmetry_class());
    return finish(rep, csv_path);
}

// ---------------------------------------------------------------------------
// JobConfig file: plain `key = value` lines, '#' comments; explicit
// command-line flags win over file values.

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = val;
    }
    return kv;
}

const std::vector<std::string> kCommands = {"field-table", "ring-info",        "check-divisor",
                                            "verify-example", "search",        "export",
                                            "verify-reversible", "codebook"};

// Fold config values into the arg vector: inject the subcommand if none was
// given, then append any `--key=value` whose flag is absent from the CLI.
void apply_config(std::vector<std::string>& args, const std::map<std::string, std::string>& kv) {
    const bool has_cmd = std::any_of(args.begin(), args.end(), [](const std::string& a) {
        return std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
    });
    if (!has_cmd) {
        const auto cmd = kv.find("command");
        if (cmd != kv.end()) args.insert(args.begin(), cmd->second);
    }
    for (const auto& [key, val] : kv) {
        if (key == "command") continue;
        const std::string flag = "--" + key;
        const bool present = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!present) args.push_back(flag + "=" + val);
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    CLI::App app{"reversible DNA codes from skew cyclic codes over F_{4^(2k)}[u1..us]/(u_i^2-u_i)"};
    app.require_subcommand(1);

    // ---- common option storage ----
    int k = 1, s = 1, n = 4, deg = 2;
    std::string modulus, g_text, csv_path, fasta_path, out_path;
    std::string name, symmetry = "any", coeffs = "all", mode = "sampled", source = "generated";
    std::uint64_t budget = std::uint64_t{1} << 20, cap = std::uint64_t{1} << 20;
    std::uint64_t trials = 1000, seed = 0, sample = 0;
    bool sweep = false;
    int exit_code = 0;

    const std::string kdoc = "field parameter k (GF(2^4k)), in [1,4]";
    const std::string sdoc = "number of ring variables u1..us, in [1,8]";
    const std::string mdoc = "field modulus bit pattern (decimal or 0x hex); default is built in";

    auto* ft = app.add_subcommand("field-table", "print the field's elements, bits, and theta images");
    ft->add_option("--k", k, kdoc);
    ft->add_option("--modulus", modulus, mdoc);
    ft->callback([&] { exit_code = cmd_field_table(k, modulus); });

    auto* ri = app.add_subcommand("ring-info", "print component order, idempotents, and cardinality");
    ri->add_option("--k", k, kdoc);
    ri->add_option("--s", s, sdoc);
    ri->add_option("--modulus", modulus, mdoc);
    ri->callback([&] { exit_code = cmd_ring_info(k, s, modulus); });

    auto* cd = app.add_subcommand("check-divisor",
                                  "check that g right-divides x^n - 1 and classify its symmetry");
    cd->add_option("--k", k, kdoc);
    cd->add_option("--s", s, sdoc);
    cd->add_option("--modulus", modulus, mdoc);
    cd->add_option("--n", n, "code length (even)")->required();
    cd->add_option("--g", g_text, "generator polynomial expression")->required();
    cd->add_option("--csv", csv_path, "also write report rows to this CSV file");
    cd->callback([&] { exit_code = cmd_check_divisor(k, s, modulus, n, g_text, csv_path); });

    auto* ve = app.add_subcommand("verify-example",
                                  "re-run one of the five built-in worked constructions");
    ve->add_option("--name,name", name, "which construction: ex1..ex5")
        ->required()
        ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4", "ex5"}));
    ve->add_flag("--modulus-sweep", sweep,
                 "re-run under every primitive modulus of the field degree");
    ve->add_option("--modulus", modulus, mdoc);
    ve->add_option("--csv", csv_path, "also write report rows to this CSV file");
    ve->callback([&] { exit_code = cmd_verify_example(name, sweep, modulus, csv_path); });

    auto* se = app.add_subcommand("search", "enumerate monic generators of x^n - 1 by symmetry");
    se->add_option("--k", k, kdoc);
    se->add_option("--s", s, sdoc);
    se->add_option("--modulus", modulus, mdoc);
    se->add_option("--n", n, "code length (even)")->required();
    se->add_option("--deg", deg, "generator degree")->required();
    se->add_option("--symmetry", symmetry, "palindromic | theta-palindromic | any");
    se->add_option("--coeffs", coeffs, "all | field | ';'-separated element list");
    se->add_option("--budget", budget, "candidate-count ceiling");
    se->callback([&] { exit_code = cmd_search(k, s, modulus, n, deg, symmetry, coeffs, budget); });

    auto* ex = app.add_subcommand("export", "write the code's DNA images as FASTA records");
    ex->add_option("--k", k, kdoc);
    ex->add_option("--s", s, sdoc);
    ex->add_option("--modulus", modulus, mdoc);
    ex->add_option("--n", n, "code length (even)")->required();
    ex->add_option("--g", g_text, "generator polynomial expression")->required();
    ex->add_option("--fasta", fasta_path, "output FASTA path")->required();
    ex->add_option("--source", source, "codebook source: generated | embedded-reference");
    ex->add_option("--cap", cap, "refuse full enumeration beyond this many codewords");
    ex->add_option("--sample", sample, "write this many seeded random codewords instead");
    ex->add_option("--seed", seed, "sampling seed");
    ex->callback([&] {
        exit_code = cmd_export(k, s, modulus, n, g_text, fasta_path, source, cap, sample, seed);
    });

    auto* vr = app.add_subcommand("verify-reversible",
                                  "check that the code's DNA image is closed under reversal");
    vr->add_option("--k", k, kdoc);
    vr->add_option("--s", s, sdoc);
    vr->add_option("--modulus", modulus, mdoc);
    vr->add_option("--n", n, "code length (even)")->required();
    vr->add_option("--g", g_text, "generator polynomial expression")->required();
    vr->add_option("--mode", mode, "exhaustive | sampled");
    vr->add_option("--trials", trials, "sampled mode: number of random messages");
    vr->add_option("--seed", seed, "sampled mode: RNG seed (recorded in the report)");
    vr->add_option("--cap", cap, "exhaustive mode: refuse enumeration beyond this size");
    vr->add_option("--source", source, "codebook source: generated | embedded-reference");
    vr->add_option("--csv", csv_path, "also write report rows to this CSV file");
    vr->callback([&] {
        exit_code = cmd_verify_reversible(k, s, modulus, n, g_text, mode, trials, seed, cap,
                                          source, csv_path);
    });

    auto* cb = app.add_subcommand("codebook", "dump a codebook as element<TAB>kmer lines");
    cb->add_option("--k", k, kdoc);
    cb->add_option("--modulus", modulus, mdoc);
    cb->add_option("--source", source, "generated | embedded-reference");
    cb->add_option("--out", out_path, "write to this file instead of stdout");
    cb->callback([&] { exit_code = cmd_codebook(k, modulus, source, out_path); });

    try {
        // --config FILE pre-pass: pull it out of the raw args, then fold the
        // file's key = value pairs in as defaults.
        std::string config_path;
        for (auto it = args.begin(); it != args.end();) {
            if (*it == "--config") {
                if (it + 1 == args.end()) throw std::runtime_error("--config requires a file path");
                config_path = *(it + 1);
                it = args.erase(it, it + 2);
            } else if (it->rfind("--config=", 0) == 0) {
                config_path = it->substr(9);
                it = args.erase(it);
            } else {
                ++it;
            }
        }
        if (!config_path.empty()) apply_config(args, read_config(config_path));

        std::reverse(args.begin(), args.end());  // CLI11's vector overload pops from the back
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
