#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rmlab/common.hpp"
#include "rmlab/torus.hpp"
#include "rmlab/word.hpp"

namespace rmlab {

/// prod_i |x_i|^{e_i} / p^{depth+1}. Exponents are at most p-1.
struct Monomial {
    std::vector<std::uint32_t> exponents;
    int depth = 0;

    int total_exponent() const;
    /// sum_i e_i + depth (p-1).
    int degree(std::uint32_t p) const { return total_exponent() + depth * static_cast<int>(p - 1); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Term order of the text format: depth descending, then exponents lexicographic.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.depth != b.depth) return a.depth > b.depth;
        return a.exponents < b.exponents;
    }
};

/// Zero-shift polynomial F_p^n -> T in canonical form. Constant terms appear only at depth 0
/// (a constant at depth >= 1 would be a shift)
///   f(x) = sum c_{e,k} prod |x_i|^{e_i} / p^{k+1}  (mod 1),  c in {1, ..., p-1}.
/// The canonical form is unique, so structural equality is functional equality.
class NonclassicalPoly {
public:
    using TermMap = std::map<Monomial, std::uint32_t, MonomialOrder>;

    NonclassicalPoly() = default;
    /// Zero polynomial.
    NonclassicalPoly(std::uint32_t p, int n);

    /// Canonicalizes an integer combination of monomials: coefficients are reduced mod p
    /// with carries c/p^{k+1} = (c mod p)/p^{k+1} + floor(c/p)/p^k pushed to lower depth.
    static NonclassicalPoly from_integer_terms(std::uint32_t p, int n,
                                               const std::vector<std::pair<Monomial, std::int64_t>>& terms);
    static NonclassicalPoly monomial(std::uint32_t p, std::vector<std::uint32_t> exponents, int depth = 0,
                                     std::int64_t coeff = 1);
    /// Classical x_i (0-based i).
    static NonclassicalPoly variable(std::uint32_t p, int n, int i);
    /// Classical constant c mod p.
    static NonclassicalPoly constant(std::uint32_t p, int n, std::int64_t c);

    std::uint32_t prime() const { return p_; }
    int num_vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_classical() const;

    friend bool operator==(const NonclassicalPoly&, const NonclassicalPoly&) = default;
    friend NonclassicalPoly operator+(const NonclassicalPoly& a, const NonclassicalPoly& b);
    friend NonclassicalPoly operator-(const NonclassicalPoly& a, const NonclassicalPoly& b);

private:
    std::uint32_t p_ = 2;
    int n_ = 0;
    TermMap terms_;
};

/// Max over terms of sum e_i + k(p-1); the zero polynomial has degree 0.
int degree(const NonclassicalPoly& f);
/// Max depth index over terms; 0 for classical and zero polynomials.
int depth(const NonclassicalPoly& f);

TorusValue evaluate(const NonclassicalPoly& f, std::span<const std::uint32_t> x);
/// Table of f at torus depth depth(f).
Word to_word(const NonclassicalPoly& f, const Limits& limits = {});
/// Classical polynomial as an F_p table (P rather than iota o P).
Word to_field_word(const NonclassicalPoly& f, const Limits& limits = {});

/// Canonical form of c f for an integer c >= 0.
NonclassicalPoly scalar_multiply(const NonclassicalPoly& f, std::uint64_t c);
/// Product of classical polynomials as functions (x^p = x).
NonclassicalPoly multiply_classical(const NonclassicalPoly& a, const NonclassicalPoly& b);
/// The same polynomial in `total_vars` variables, variable i renamed to i + offset.
NonclassicalPoly embed_variables(const NonclassicalPoly& f, int total_vars, int offset);

/// Table of D_a f(x) = f(x+a) - f(x). Field words are differenced mod p.
Word derivative_table(const Word& f, std::size_t direction);
Word derivative_table(const Word& f, std::span<const std::uint32_t> direction);

enum class DerivativeMode { Exhaustive, Sampled };

struct DegreeCheck {
    bool holds = true;
    /// On failure: direction indices a_1..a_{d+1} and a point with nonzero derivative.
    std::vector<std::size_t> directions;
    std::size_t point = 0;
    std::uint64_t cases = 0;
};

/// Whether all (d+1)-fold derivatives of f vanish. Exhaustive mode requires
/// p^{n(d+1)} <= max_exhaustive_cases; sampled mode draws `trials` direction tuples.
DegreeCheck verify_degree_by_derivatives(const Word& f, int d, DerivativeMode mode, std::uint64_t trials = 10'000,
                                         std::uint64_t seed = 0, const Limits& limits = {});
bool exhaustive_derivatives_feasible(std::uint32_t p, int n, int d, const Limits& limits = {});
/// Exhaustive when feasible, sampled otherwise.
DegreeCheck verify_degree_auto(const Word& f, int d, std::uint64_t trials = 10'000, std::uint64_t seed = 0,
                               const Limits& limits = {});

/// The unique canonical polynomial whose table is f. Throws NotAPolynomial if the
/// representation needs depth > maxDepth.
NonclassicalPoly canonical_fit(const Word& f, int maxDepth, const Limits& limits = {});
/// Same, from exact table values mod 1 (entries outside U_{maxDepth+1} throw NotAPolynomial).
NonclassicalPoly canonical_fit(std::uint32_t p, int n, std::span<const Rational> values, int maxDepth,
                               const Limits& limits = {});

/// Unique classical polynomial with exponents <= p-1 matching an F_p table.
NonclassicalPoly interpolate_classical(const Word& f, const Limits& limits = {});

/// Replaces every positive exponent with 1 and combines like terms mod p.
NonclassicalPoly multilinearize(const NonclassicalPoly& P);

/// S_ell(Z_1..Z_r) = sum over ell-subsets of the product, classical in r variables.
NonclassicalPoly symmetric_poly(int ell, int r, std::uint32_t p);

/// Variables z_{i,j} (block i in [0,r), j in [0,A)) sit at index i*A + j.
/// digits[i](z) = i-th base-p digit of (sum_i prod_j |z_{i,j}|) mod p^{k+1};
/// symmetric[i](z) = S_{p^i}(Z) mod p with Z_i = prod_j z_{i,j} in F_p.
struct LucasWords {
    std::vector<Word> digits;
    std::vector<Word> symmetric;
};
LucasWords lucas_digit_words(int r, int A, int k, std::uint32_t p, const Limits& limits = {});
/// Pointwise versions of the two digit families.
std::vector<std::uint32_t> lucas_digits_at(std::span<const std::uint32_t> z, int r, int A, int k, std::uint32_t p);
std::vector<std::uint32_t> symmetric_digits_at(std::span<const std::uint32_t> z, int r, int A, int k,
                                               std::uint32_t p);

/// Table of (sum_i prod_j z_{i,j}) / p^{k+1} over F_p^{rA}, at torus depth k.
Word build_htilde(int r, int A, int k, std::uint32_t p, const Limits& limits = {});
/// The same function as a canonical polynomial (degree A + (p-1)k, depth k).
NonclassicalPoly htilde_poly(int r, int A, int k, std::uint32_t p);

/// Canonical monomials in n variables of degree <= maxDegree, up to depth maxDepth.
std::vector<Monomial> canonical_monomials(std::uint32_t p, int n, int maxDegree, int maxDepth);
/// Random nonzero canonical polynomial built from 1..maxTerms random terms with depth <= maxDepth.
NonclassicalPoly random_canonical_poly(std::uint32_t p, int n, int maxDepth, int maxTerms, Rng& rng);

/// Text format: "p=<p> n=<n>" then one "c=<c> e=<e_1>,...,<e_n> k=<k>" line per term in
/// MonomialOrder.
void write_poly(std::ostream& os, const NonclassicalPoly& f);
NonclassicalPoly read_poly(std::istream& is);
std::string to_text(const NonclassicalPoly& f);
NonclassicalPoly poly_from_text(const std::string& text);
/// Human-readable rendering, e.g. "x1*x2 + |x1|/4".
std::string pretty(const NonclassicalPoly& f);

}  // namespace rmlab
