#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rmlab/common.hpp"
#include "rmlab/polynomial.hpp"
#include "rmlab/word.hpp"

#include "json.hpp"

namespace rmlab {

/// RM_{F_p}(n, d): evaluations of degree <= d polynomials (exponents <= p-1) on F_p^n.
struct CodeParams {
    std::uint32_t p = 2;
    int n = 1;
    int d = 0;

    void validate() const;
};

/// Monomial basis, ordered by total degree, then exponent vectors lexicographically
/// descending (so 1, x_1, x_2, ..., x_1^2, x_1 x_2, ...).
std::vector<std::vector<std::uint32_t>> monomial_basis(std::uint32_t p, int n, int d);
/// M(n, d, p): number of basis monomials.
std::uint64_t code_dimension(const CodeParams& params);
/// p^M, saturating at UINT64_MAX.
std::uint64_t code_size(const CodeParams& params);

/// Codeword enumeration. Codeword `index` has coefficient vector given by the base-p digits
/// of index, the first basis monomial being the most significant digit; this is
/// lexicographic order on coefficient vectors.
class CodeEnumerator {
public:
    /// Requires p^n within the table cap and code_size * p^n within the case cap.
    explicit CodeEnumerator(CodeParams params, const Limits& limits = {});

    const CodeParams& params() const { return params_; }
    std::uint64_t size() const { return size_; }
    std::size_t length() const { return length_; }
    const std::vector<std::vector<std::uint32_t>>& basis() const { return basis_; }

    std::vector<std::uint32_t> coefficients(std::uint64_t index) const;
    NonclassicalPoly polynomial(std::uint64_t index) const;
    /// F_p table of codeword `index`.
    Word word(std::uint64_t index) const;

    /// Calls fn(index, table) for every codeword in [begin, end), tables updated
    /// incrementally (each digit step adds one basis table).
    void for_range(std::uint64_t begin, std::uint64_t end,
                   const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn) const;

private:
    CodeParams params_;
    std::vector<std::vector<std::uint32_t>> basis_;
    std::vector<std::vector<std::uint32_t>> basis_tables_;
    std::uint64_t size_ = 0;
    std::size_t length_ = 0;
};

/// Streams every codeword as (index, polynomial, table) in enumeration order.
void enumerate_code(const CodeParams& params,
                    const std::function<void(std::uint64_t, const NonclassicalPoly&, const Word&)>& fn,
                    const Limits& limits = {});

/// delta_F(d) = p^{-a} (1 - b/p) with d = a(p-1) + b, 0 <= b < p-1.
Rational delta(std::uint32_t p, int d);
/// The same formula with floor division, defined for every integer d (d < 0 gives values > 1).
Rational delta_extended(std::uint32_t p, std::int64_t d);

/// J_q(delta) = (1 - 1/q)(1 - sqrt(1 - q delta/(q-1))).
double johnson_radius(std::uint64_t q, const Rational& delta);

std::size_t disagreements(std::span<const std::uint32_t> u, std::span<const std::uint32_t> v);
/// Normalized Hamming distance, exact.
Rational distance(const Word& u, const Word& v);

/// Minimum normalized weight over nonzero codewords (the code is linear).
Rational min_distance_bruteforce(const CodeParams& params, const Limits& limits = {}, unsigned jobs = 1);
/// Minimum over all distinct codeword pairs; quadratic, for cross-checking at tiny sizes.
Rational min_distance_pairwise(const CodeParams& params, const Limits& limits = {});

struct ListResult {
    CodeParams params;
    Word center;
    Rational radius;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> indices;  // sorted codeword indices
    std::vector<NonclassicalPoly> members;
};

/// Largest number of disagreements allowed at normalized radius eta on p^n points.
std::uint64_t radius_threshold(const Rational& eta, std::size_t length);

/// All codewords within distance eta of g.
ListResult list_in_ball(const CodeParams& params, const Word& g, const Rational& eta, const Limits& limits = {},
                        unsigned jobs = 1);
/// Count only, without materializing members.
std::uint64_t count_in_ball(const CodeEnumerator& code, std::span<const std::uint32_t> g, std::uint64_t threshold,
                            unsigned jobs = 1);

/// Uniformly random F_p word: entries drawn in index order with rng.below(p).
Word random_word(std::uint32_t p, int n, Rng& rng);

struct MaxListResult {
    std::uint64_t max_count = 0;
    Word argmax;
    bool argmax_is_codeword = false;
    std::uint64_t argmax_id = 0;               // sample index or codeword index
    std::vector<std::uint64_t> sample_counts;  // per random center
    std::vector<std::uint64_t> codeword_counts;
};

/// Max of list counts over `samples` random centers drawn from Rng(seed), and over every
/// codeword's own table when codeword_centers is set. Ties keep the first center (random
/// samples first, then codewords in enumeration order).
MaxListResult sampled_max_list_size(const CodeParams& params, const Rational& eta, std::uint64_t samples,
                                    std::uint64_t seed, bool codeword_centers = false, const Limits& limits = {},
                                    unsigned jobs = 1);

/// e = a(p-1) + b with 0 <= b < p-1.
struct TightnessShape {
    int a = 0;
    int b = 0;
};
TightnessShape tightness_shape(std::uint32_t p, int e);
/// Number of polynomials Q of degree <= d-e in the trailing n-a-2 variables.
std::uint64_t tightness_family_size(std::uint32_t p, int d, int e, int n);
/// P(x) = prod_{i<=a}(x_i^{p-1} - 1) prod_{j<=b}(x_{a+1} - j) (x_{a+2} + Q(x_{a+3..n})),
/// one member per Q in enumeration order.
std::vector<NonclassicalPoly> tightness_family(std::uint32_t p, int d, int e, int n, const Limits& limits = {});

nlohmann::json to_json(const ListResult& result);

}  // namespace rmlab
