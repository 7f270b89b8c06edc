#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmlab/common.hpp"
#include "rmlab/polynomial.hpp"
#include "rmlab/word.hpp"

#include "json.hpp"

namespace rmlab {

/// Point of the probability simplex over the alphabet {0, ..., size-1}.
struct SimplexValue {
    std::vector<Rational> weights;

    static SimplexValue point_mass(std::uint32_t letter, std::size_t alphabet);
    static SimplexValue uniform(std::size_t alphabet);
    /// Weights nonnegative and summing to exactly 1.
    bool is_valid() const;
    /// The letter carrying weight 1, if any.
    std::optional<std::uint32_t> letter() const;
    friend bool operator==(const SimplexValue&, const SimplexValue&) = default;
    friend auto operator<=>(const SimplexValue& a, const SimplexValue& b) { return a.weights <=> b.weights; }
};

/// Randomized function X -> P(Y), X indexed 0..|X|-1.
class SimplexFunction {
public:
    SimplexFunction() = default;
    SimplexFunction(std::size_t alphabet, std::vector<SimplexValue> table);
    /// Deterministic embedding of a word; letters are the word's entries.
    static SimplexFunction from_word(const Word& w);
    static SimplexFunction deterministic(std::span<const std::uint32_t> letters, std::size_t alphabet);

    std::size_t domain_size() const { return table_.size(); }
    std::size_t alphabet_size() const { return alphabet_; }
    const SimplexValue& operator[](std::size_t x) const { return table_[x]; }
    const std::vector<SimplexValue>& table() const { return table_; }
    bool is_deterministic() const;

    friend bool operator==(const SimplexFunction&, const SimplexFunction&) = default;

private:
    std::size_t alphabet_ = 1;
    std::vector<SimplexValue> table_;
};

/// Pr_x[f(x) = g(x)] = E_x <f(x), g(x)>.
Rational agreement_prob(const SimplexFunction& f, const SimplexFunction& g);
/// E_x ||f(x)||_2^2.
Rational energy(const SimplexFunction& f);

/// Partition of a finite domain by the value tuple of its definers. Atoms are the attained
/// tuples, numbered in lexicographic tuple order.
class Factor {
public:
    /// Trivial factor (one atom) on a domain of the given size.
    explicit Factor(std::size_t domain_size = 1);
    /// Definers given as letter tables with their alphabet sizes.
    Factor(std::vector<std::vector<std::uint32_t>> definers, std::vector<std::uint64_t> alphabets);
    /// Word definers; each contributes its own alphabet (p for field words, p^{k+1} for torus:k).
    static Factor from_words(const std::vector<Word>& definers);
    /// Definers are the distinct values of each randomized function, numbered in SimplexValue order.
    static Factor from_simplex(const std::vector<const SimplexFunction*>& definers, std::size_t domain_size);

    std::size_t domain_size() const { return atom_of_.size(); }
    /// |B|: number of definers.
    std::size_t num_definers() const { return definers_.size(); }
    /// ||B||: product of definer alphabet sizes.
    BigInt nominal_atoms() const;
    const std::vector<std::uint64_t>& alphabets() const { return alphabets_; }
    const std::vector<std::vector<std::uint32_t>>& definers() const { return definers_; }

    std::size_t num_atoms() const { return tuples_.size(); }
    std::size_t atom_of(std::size_t x) const { return atom_of_[x]; }
    const std::vector<std::uint32_t>& tuple(std::size_t atom) const { return tuples_[atom]; }
    std::size_t atom_size(std::size_t atom) const { return sizes_[atom]; }
    /// Atom id of a tuple, or nullopt if no point attains it.
    std::optional<std::size_t> find_atom(const std::vector<std::uint32_t>& tuple) const;

    /// Whether the letter table is constant on every atom.
    bool is_measurable(std::span<const std::uint32_t> values) const;
    /// Every atom of *this lies inside an atom of other.
    bool refines(const Factor& other) const;

private:
    void build();

    std::vector<std::vector<std::uint32_t>> definers_;
    std::vector<std::uint64_t> alphabets_;
    std::vector<std::size_t> atom_of_;
    std::vector<std::vector<std::uint32_t>> tuples_;
    std::vector<std::size_t> sizes_;
};

/// E[g|B]: atom averages, constant on atoms.
SimplexFunction conditional_expectation(const SimplexFunction& g, const Factor& B);

/// Pr[B(x) = b] for every attained atom b.
std::map<std::vector<std::uint32_t>, Rational> atom_distribution(const Factor& B);

struct AtomUniformity {
    Rational max_deviation;
    std::vector<std::uint32_t> worst_atom;
};
/// max over nominal atoms b of |Pr[B(x) = b] - 1/||B|||; ties keep the lexicographically first atom.
AtomUniformity atom_uniformity(const Factor& B);

struct TraceStep {
    Rational energy;  // energy of g_H after adding the violator
    std::size_t violator = 0;
};

struct DecompositionResult {
    Rational eps;
    std::vector<std::size_t> chosen;
    Rational initial_energy;
    std::vector<TraceStep> trace;
    Factor factor;                         // B_H
    SimplexFunction expectation;           // g_H = E[g|B_H]
    std::vector<SimplexValue> gamma;       // Gamma on attained atoms, indexed like factor's atoms
    std::vector<std::vector<SimplexValue>> atom_values;  // (h_1(x), ..., h_c(x)) per atom
};

/// Weak regularity: starting from H empty, repeatedly adds the first f in F (in the given
/// order) with |Pr[g_H = f] - Pr[g = f]| > eps until none remains.
DecompositionResult weak_regularize(const SimplexFunction& g, const std::vector<SimplexFunction>& F,
                                    const Rational& eps);

struct Certificate {
    Rational max_gap;
    std::size_t worst = 0;
    bool holds = true;
};
/// Independent re-check of a decomposition: recomputes E[g|B_H] from the chosen indices and
/// scans every f in F.
Certificate certify_decomposition(const SimplexFunction& g, const std::vector<SimplexFunction>& F,
                                  const DecompositionResult& result);

struct OneSidedResult {
    DecompositionResult decomposition;
    /// gamma_f[i][atom]: plurality value of F[i] on the atom (ties to the smallest letter).
    std::vector<std::vector<std::uint32_t>> gamma_f;
    /// Gamma_f composed with B_H, as deterministic tables.
    std::vector<Word> composed;

    /// Gamma_f at a value tuple; unattained (empty) atoms map to 0.
    std::uint32_t gamma_value(std::size_t f, const std::vector<std::uint32_t>& tuple) const;
};
OneSidedResult one_sided_regularize(const Word& g, const std::vector<Word>& F, const Rational& eps);

/// Per-atom plurality of f, ties to the smallest letter.
std::vector<std::uint32_t> plurality_table(const Factor& B, std::span<const std::uint32_t> f, std::size_t alphabet);

struct RankValue {
    enum class Kind { Exact, Infinity, LowerBound };
    Kind kind = Kind::Exact;
    /// Exact: the rank. LowerBound: the rank exceeds this value (the searched budget).
    int value = 0;
    /// For Exact ranks: polynomials of degree <= d-1 through which f factors.
    std::vector<NonclassicalPoly> witnesses;
    std::uint64_t cases = 0;

    std::string to_string() const;
};

/// rank_d(f): the least r such that f is a function of r polynomials of degree <= d-1
/// (classical or not); searched exhaustively for r <= budget.
RankValue rank_bruteforce(const Word& f, int d, int budget, const Limits& limits = {});

/// A factor defined by explicit polynomials.
struct PolyFactor {
    std::uint32_t p = 2;
    int n = 0;
    std::vector<NonclassicalPoly> polys;

    Factor factor(const Limits& limits = {}) const;
};

struct FactorRank {
    RankValue rank;
    /// Minimizing combination, a_i mod p^{k_i+1}; empty when B has no definers.
    std::vector<std::uint64_t> combination;
    int degree = 0;
};
/// min over nonzero (a_i mod p^{k_i+1}) of rank_d(sum a_i h_i), d = max deg(a_i h_i).
FactorRank factor_rank_bruteforce(const PolyFactor& B, int budget, const Limits& limits = {});

struct RefineReport {
    PolyFactor factor;
    bool achieved = false;
    Rational deviation;
    int iterations = 0;
    std::vector<std::string> steps;
};
/// Desk-scale uniformity-driven refinement: while atom deviation > eps, finds a low-rank
/// combination and replaces one of its definers (one with a unit coefficient) by the rank
/// witnesses; every step is a semantic refinement.
RefineReport refine_to_uniform(const PolyFactor& B, const Rational& eps, int maxIter, int rankBudget = 2,
                               const Limits& limits = {});

/// i-th polynomial moved to variables [i n, (i+1) n) of m n variables.
std::vector<NonclassicalPoly> tensorize(const std::vector<NonclassicalPoly>& polys);

nlohmann::json to_json(const DecompositionResult& result);
nlohmann::json to_json(const SimplexValue& v);

}  // namespace rmlab
