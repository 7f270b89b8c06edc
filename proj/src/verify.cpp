#include "rmlab/verify.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <set>
#include <sstream>

#include "rmlab/parallel.hpp"
#include "rmlab/polynomial.hpp"
#include "rmlab/regularity.hpp"
#include "rmlab/rmcode.hpp"

namespace rmlab {

namespace {

const std::vector<std::pair<ClaimId, std::string_view>> kClaimNames = {
    {ClaimId::SZ1, "SZ1"},
    {ClaimId::DELTA_PRODUCT, "DELTA_PRODUCT"},
    {ClaimId::LUCAS, "LUCAS"},
    {ClaimId::ML_UNIQUE, "ML_UNIQUE"},
    {ClaimId::SCALAR_DEGREE, "SCALAR_DEGREE"},
    {ClaimId::HTILDE_UNIFORM, "HTILDE_UNIFORM"},
    {ClaimId::DEG_COEF, "DEG_COEF"},
    {ClaimId::APK, "APK"},
    {ClaimId::THM1_DESK, "THM1_DESK"},
    {ClaimId::THM2_FAMILY, "THM2_FAMILY"},
    {ClaimId::JOHNSON_GAP, "JOHNSON_GAP"},
};

}  // namespace

std::string to_string(ClaimId id) {
    for (const auto& [c, name] : kClaimNames)
        if (c == id) return std::string(name);
    throw std::invalid_argument("unknown claim id");
}

ClaimId parse_claim(std::string_view name) {
    for (const auto& [c, n] : kClaimNames)
        if (n == name) return c;
    throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> v;
        for (const auto& [c, n] : kClaimNames) v.push_back(c);
        return v;
    }();
    return ids;
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::Infeasible: return "infeasible";
    }
    return {};
}

namespace {

using nlohmann::json;

std::int64_t parse_int(std::string_view key, std::string_view text) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("parameter " + std::string(key) + ": expected an integer, got '" +
                                    std::string(text) + "'");
    return v;
}

/// Typed access to a claim's parameters; records the effective values.
class Params {
public:
    Params(const ParamMap& given, std::initializer_list<std::string_view> keys) : given_(given) {
        std::set<std::string_view> allowed(keys.begin(), keys.end());
        allowed.insert("tag");
        for (const auto& [k, v] : given_)
            if (!allowed.count(k)) throw std::invalid_argument("unknown parameter '" + k + "'");
    }

    std::int64_t integer(const std::string& key, std::int64_t fallback, std::int64_t lo = INT64_MIN,
                         std::int64_t hi = INT64_MAX) {
        const auto it = given_.find(key);
        const std::int64_t v = it == given_.end() ? fallback : parse_int(key, it->second);
        if (v < lo || v > hi)
            throw std::invalid_argument("parameter " + key + " = " + std::to_string(v) + " out of range [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
        effective_[key] = std::to_string(v);
        return v;
    }
    int small(const std::string& key, int fallback, int lo = 0, int hi = 1 << 20) {
        return static_cast<int>(integer(key, fallback, lo, hi));
    }
    std::uint32_t prime(const std::string& key, std::uint32_t fallback) {
        const auto v = static_cast<std::uint32_t>(integer(key, fallback, 2, 1 << 16));
        require_prime(v);
        return v;
    }
    Rational rational(const std::string& key, const Rational& fallback) {
        const auto it = given_.find(key);
        const Rational v = it == given_.end() ? fallback : parse_rational(it->second);
        effective_[key] = to_string(v);
        return v;
    }
    std::vector<std::int64_t> list(const std::string& key, std::string_view fallback) {
        const auto it = given_.find(key);
        const std::string text = it == given_.end() ? std::string(fallback) : it->second;
        std::vector<std::int64_t> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item));
        if (out.empty()) throw std::invalid_argument("parameter " + key + ": empty list");
        effective_[key] = text;
        return out;
    }
    std::optional<std::int64_t> optional_integer(const std::string& key) {
        const auto it = given_.find(key);
        if (it == given_.end()) return std::nullopt;
        return integer(key, 0);
    }
    std::string tag() const {
        const auto it = given_.find("tag");
        return it == given_.end() ? std::string() : it->second;
    }
    const ParamMap& effective() const { return effective_; }

private:
    const ParamMap& given_;
    ParamMap effective_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

void fail(ClaimReport& rep, json cx, std::string message) {
    if (rep.status == ClaimStatus::Fail) return;  // keep the first counterexample
    rep.status = ClaimStatus::Fail;
    rep.counterexample = std::move(cx);
    rep.message = std::move(message);
}

std::vector<std::uint32_t> digits_of(std::uint64_t index, std::uint32_t p, std::size_t count) {
    std::vector<std::uint32_t> out(count);
    for (std::size_t i = count; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return out;
}

// ---- SZ1 -------------------------------------------------------------------

struct SzCase {
    std::uint32_t p;
    int d, n1, n2;
};

bool depends_on_tail(std::span<const std::uint32_t> t, std::size_t block) {
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t[x] != t[x - x % block]) return true;
    return false;
}

std::size_t sz_agreements(std::span<const std::uint32_t> f1, std::span<const std::uint32_t> f2, std::size_t block) {
    std::size_t count = 0;
    for (std::size_t x = 0; x < f1.size(); ++x) count += f1[x] == f2[x / block];
    return count;
}

void check_sz1(Params& P, const Limits& L, ClaimReport& rep) {
    const SzCase c{P.prime("p", 2), P.small("d", 1), P.small("n1", 1, 1), P.small("n2", 1, 1)};
    const CodeParams cp{c.p, c.n1 + c.n2, c.d};
    const std::size_t N = table_size(c.p, cp.n, L);
    const std::size_t head = table_size(c.p, c.n1, L);
    const std::size_t block = N / head;
    const auto functions = saturating_pow(c.p, head);
    CodeEnumerator code(cp, L);
    L.require_cases(checked_mul(checked_mul(code.size(), functions), N), "SZ1 (codewords x functions x points)");
    // agreement A/N > 1 - delta  <=>  A > N - delta*N
    const Rational limit = Rational(static_cast<long long>(N)) * (Rational(1) - delta(c.p, c.d));
    std::vector<std::uint32_t> f2(head);
    std::uint64_t flagged = 0;
    code.for_range(0, code.size(), [&](std::uint64_t index, std::span<const std::uint32_t> t) {
        const bool depends = depends_on_tail(t, block);
        for (std::uint64_t g = 0; g < functions; ++g) {
            f2 = digits_of(g, c.p, head);
            ++rep.cases_checked;
            const auto agree = sz_agreements(t, f2, block);
            if (Rational(static_cast<long long>(agree)) <= limit) continue;
            ++flagged;
            if (depends)
                fail(rep,
                     {{"f1", to_text(code.polynomial(index))},
                      {"f1_index", index},
                      {"f2", f2},
                      {"agreement", to_string(Rational(static_cast<long long>(agree), static_cast<long long>(N)))}},
                     "f1 agrees with f2 above 1 - delta(d) but depends on the trailing variables");
        }
    });
    rep.details = {{"pairs_above_threshold", flagged}, {"threshold", to_string(Rational(1) - delta(c.p, c.d))}};
}

bool recheck_sz1(const ClaimReport& rep, const Limits& L) {
    const auto& cx = rep.counterexample;
    const auto f1 = poly_from_text(cx.at("f1").get<std::string>());
    const auto w = to_field_word(f1, L);
    const auto f2 = cx.at("f2").get<std::vector<std::uint32_t>>();
    const int n1 = static_cast<int>(parse_int("n1", rep.parameters.at("n1")));
    const int d = static_cast<int>(parse_int("d", rep.parameters.at("d")));
    if (degree(f1) > d) return false;
    const std::size_t head = saturating_pow(f1.prime(), static_cast<std::uint64_t>(n1));
    const std::size_t block = w.size() / head;
    const Rational agree(static_cast<long long>(sz_agreements(w.values(), f2, block)), static_cast<long long>(w.size()));
    return agree > Rational(1) - delta(f1.prime(), d) && depends_on_tail(w.values(), block);
}

// ---- DELTA_PRODUCT ---------------------------------------------------------

void check_delta_product(Params& P, const Limits&, ClaimReport& rep) {
    const auto p = P.prime("p", 3);
    const int dmax = P.small("dmax", 20, 1, 100000);
    std::uint64_t case1 = 0, case2 = 0;
    for (int d = 1; d <= dmax; ++d) {
        const int b = d % static_cast<int>(p - 1);
        for (int c = 1; c <= static_cast<int>(p) - 1; ++c) {
            ++rep.cases_checked;
            (c <= b ? case1 : case2)++;
            const Rational lhs = delta(p, c) * delta_extended(p, d - c);
            const Rational rhs = delta(p, d);
            if (lhs < rhs)
                fail(rep, {{"c", c}, {"d", d}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}},
                     "delta(c) delta(d-c) < delta(d)");
        }
    }
    rep.details = {{"case_c_le_b", case1}, {"case_c_gt_b", case2}};
}

bool recheck_delta_product(const ClaimReport& rep, const Limits&) {
    const auto p = static_cast<std::uint32_t>(parse_int("p", rep.parameters.at("p")));
    const int c = rep.counterexample.at("c");
    const int d = rep.counterexample.at("d");
    return delta(p, c) * delta_extended(p, d - c) < delta(p, d);
}

// ---- LUCAS -----------------------------------------------------------------

std::vector<std::uint32_t> cube_point(std::uint64_t mask, int n) {
    std::vector<std::uint32_t> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(mask >> (n - 1 - i) & 1);
    return z;
}

void check_lucas(Params& P, const Limits& L, ClaimReport& rep) {
    const auto p = P.prime("p", 2);
    const int r = P.small("r", 3, 1, 4096);
    const int A = P.small("A", 1, 1, 4096);
    const int k = P.small("k", 1, 0, 30);
    const int n = r * A;
    const auto points = n >= 64 ? UINT64_MAX : std::uint64_t{1} << n;
    L.require_cases(checked_mul(points, static_cast<std::uint64_t>(k + 1)), "LUCAS (2^{rA} points x digits)");
    for (std::uint64_t mask = 0; mask < points; ++mask) {
        const auto z = cube_point(mask, n);
        const auto w = lucas_digits_at(z, r, A, k, p);
        const auto s = symmetric_digits_at(z, r, A, k, p);
        rep.cases_checked += static_cast<std::uint64_t>(k + 1);
        for (int i = 0; i <= k; ++i)
            if (w[static_cast<std::size_t>(i)] != s[static_cast<std::size_t>(i)])
                fail(rep, {{"z", z}, {"i", i}, {"W", w[static_cast<std::size_t>(i)]}, {"W_prime", s[static_cast<std::size_t>(i)]}},
                     "digit polynomial differs from the symmetric polynomial on the cube");
    }
}

bool recheck_lucas(const ClaimReport& rep, const Limits&) {
    const auto p = static_cast<std::uint32_t>(parse_int("p", rep.parameters.at("p")));
    const int r = static_cast<int>(parse_int("r", rep.parameters.at("r")));
    const int A = static_cast<int>(parse_int("A", rep.parameters.at("A")));
    const int k = static_cast<int>(parse_int("k", rep.parameters.at("k")));
    const auto z = rep.counterexample.at("z").get<std::vector<std::uint32_t>>();
    const std::size_t i = rep.counterexample.at("i");
    return lucas_digits_at(z, r, A, k, p)[i] != symmetric_digits_at(z, r, A, k, p)[i];
}

// ---- ML_UNIQUE -------------------------------------------------------------

bool agree_on_cube(const NonclassicalPoly& P, const NonclassicalPoly& Q) {
    const int n = P.num_vars();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto z = cube_point(mask, n);
        if (!(evaluate(P, z) == evaluate(Q, z))) return false;
    }
    return true;
}

void check_ml_unique(Params& P, const Limits& L, ClaimReport& rep) {
    const auto p = P.prime("p", 3);
    const int n = P.small("n", 3, 1, 20);
    const auto trials = P.integer("trials", 200, 0);
    const auto seed = P.integer("seed", 0);
    const int terms = P.small("terms", 6, 1);
    const int exhaustive_n = P.small("exhaustive_n", p == 2 ? 2 : 1, 0, 8);
    L.require_cases(checked_mul(static_cast<std::uint64_t>(trials), std::uint64_t{1} << n), "ML_UNIQUE random trials");
    Rng rng(static_cast<std::uint64_t>(seed));
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto Pp = random_canonical_poly(p, n, 0, terms, rng);
        auto Q = Pp;
        if (p > 2) {
            // add multiples of z_i^2 - z_i, which vanish on {0,1}
            const int adds = 1 + static_cast<int>(rng.below(3));
            for (int a = 0; a < adds; ++a) {
                const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                std::vector<std::uint32_t> sq(static_cast<std::size_t>(n), 0);
                sq[static_cast<std::size_t>(i)] = 2;
                const auto vanishing = NonclassicalPoly::monomial(p, sq) - NonclassicalPoly::variable(p, n, i);
                Q = Q + multiply_classical(random_canonical_poly(p, n, 0, terms, rng), vanishing);
            }
        }
        if (!agree_on_cube(Pp, Q)) throw std::logic_error("ML_UNIQUE: constructed pair does not agree on the cube");
        ++rep.cases_checked;
        if (!(multilinearize(Pp) == multilinearize(Q)))
            fail(rep, {{"P", to_text(Pp)}, {"Q", to_text(Q)}}, "P and Q agree on the cube but ML(P) != ML(Q)");
    }
    if (exhaustive_n > 0) {
        const auto monos = canonical_monomials(p, exhaustive_n, exhaustive_n * static_cast<int>(p - 1), 0);
        const auto total = saturating_pow(p, monos.size());
        L.require_cases(total, "ML_UNIQUE exhaustive polynomials");
        std::map<std::vector<std::uint32_t>, std::pair<NonclassicalPoly, NonclassicalPoly>> by_restriction;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::pair<Monomial, std::int64_t>> t;
            const auto c = digits_of(code, p, monos.size());
            for (std::size_t j = 0; j < monos.size(); ++j)
                if (c[j]) t.emplace_back(monos[j], c[j]);
            const auto Pp = NonclassicalPoly::from_integer_terms(p, exhaustive_n, t);
            std::vector<std::uint32_t> restriction;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << exhaustive_n); ++mask)
                restriction.push_back(static_cast<std::uint32_t>(evaluate(Pp, cube_point(mask, exhaustive_n)).numerator()));
            const auto ml = multilinearize(Pp);
            ++rep.cases_checked;
            const auto [it, fresh] = by_restriction.emplace(restriction, std::pair{Pp, ml});
            if (!fresh && !(it->second.second == ml))
                fail(rep, {{"P", to_text(it->second.first)}, {"Q", to_text(Pp)}},
                     "P and Q agree on the cube but ML(P) != ML(Q)");
        }
        rep.details["exhaustive_classes"] = by_restriction.size();
    }
}

bool recheck_ml_unique(const ClaimReport& rep, const Limits&) {
    const auto Pp = poly_from_text(rep.counterexample.at("P").get<std::string>());
    const auto Q = poly_from_text(rep.counterexample.at("Q").get<std::string>());
    return agree_on_cube(Pp, Q) && !(multilinearize(Pp) == multilinearize(Q));
}

// ---- SCALAR_DEGREE ---------------------------------------------------------

// deg(pf) predicted from the terms that survive multiplication by p.
int corrected_scaled_degree(const NonclassicalPoly& f) {
    int best = 0;
    for (const auto& [m, c] : f.terms())
        if (m.depth >= 1) best = std::max(best, m.degree(f.prime()) - static_cast<int>(f.prime() - 1));
    return best;
}

int literal_scaled_degree(const NonclassicalPoly& f) {
    return std::max(degree(f) - static_cast<int>(f.prime()) + 1, 0);
}

/// Degree measured by derivatives alone: the least d for which all (d+1)-fold derivatives vanish.
int derivative_degree(const Word& w, int upper, std::uint64_t trials, std::uint64_t seed, const Limits& L) {
    for (int d = 0; d < upper; ++d)
        if (verify_degree_auto(w, d, trials, seed, L).holds) return d;
    return upper;
}

void check_scalar_degree(Params& P, const Limits& L, ClaimReport& rep) {
    const auto primes = P.list("p", "2,3");
    for (auto p : primes) require_prime(static_cast<std::uint64_t>(p));
    const int nmax = P.small("nmax", 3, 1, 12);
    const int maxDepth = P.small("depth", 2, 0, 6);
    const auto count = P.integer("count", 1000, 0);
    const auto seed = P.integer("seed", 0);
    const int terms = P.small("terms", 4, 1);
    const auto trials = static_cast<std::uint64_t>(P.integer("trials", 10000, 1));
    Rng rng(static_cast<std::uint64_t>(seed));
    std::uint64_t literal_fail = 0, corrected_fail = 0, derivative_mismatch = 0, unit_fail = 0, sampled = 0;
    json first_derivative_mismatch;
    for (std::int64_t i = 0; i < count; ++i) {
        const auto p = static_cast<std::uint32_t>(primes[rng.below(primes.size())]);
        const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(nmax)));
        const auto f = random_canonical_poly(p, n, maxDepth, terms, rng);
        const int d = degree(f);
        const auto w = to_word(f, L);
        ++rep.cases_checked;

        const std::uint64_t s = static_cast<std::uint64_t>(seed) * 1000003u + static_cast<std::uint64_t>(i);
        if (!exhaustive_derivatives_feasible(p, n, d, L)) ++sampled;
        const bool holds = verify_degree_auto(w, d, trials, s, L).holds;
        const bool below = d >= 1 && verify_degree_auto(w, d - 1, trials, s, L).holds;
        if (!holds || below) {
            ++derivative_mismatch;
            if (first_derivative_mismatch.is_null()) first_derivative_mismatch = {{"f", to_text(f)}, {"degree", d}};
        }
        for (std::uint64_t c = 1; c < p; ++c) {
            const auto cf = scalar_multiply(f, c);
            if (degree(cf) != d || depth(cf) != depth(f)) ++unit_fail;
        }
        const auto pf = scalar_multiply(f, p);
        if (corrected_scaled_degree(f) != degree(pf)) ++corrected_fail;
        const bool literal_ok = depth(f) >= 1 ? degree(pf) == literal_scaled_degree(f) && depth(pf) == depth(f) - 1
                                              : pf.is_zero();
        if (!literal_ok) {
            ++literal_fail;
            fail(rep,
                 {{"f", to_text(f)},
                  {"degree", d},
                  {"depth", depth(f)},
                  {"pf", to_text(pf)},
                  {"pf_degree", degree(pf)},
                  {"pf_depth", depth(pf)},
                  {"expected_degree", literal_scaled_degree(f)}},
                 "deg(pf) != max(deg(f) - p + 1, 0)");
        }
    }
    if (derivative_mismatch > 0)
        fail(rep, first_derivative_mismatch, "derivative degree differs from representation degree");
    if (unit_fail > 0) fail(rep, {{"unit_multiple_failures", unit_fail}}, "unit multiple changed degree or depth");
    rep.details = {{"literal_law_failures", literal_fail},
                   {"corrected_law_failures", corrected_fail},
                   {"derivative_degree_mismatches", derivative_mismatch},
                   {"unit_multiple_failures", unit_fail},
                   {"sampled_derivative_checks", sampled}};
    if (corrected_fail > 0 && rep.status != ClaimStatus::Fail)
        fail(rep, {{"corrected_law_failures", corrected_fail}}, "corrected scalar law failed");
}

bool recheck_scalar_degree(const ClaimReport& rep, const Limits& L) {
    const auto& cx = rep.counterexample;
    if (!cx.contains("pf")) return false;
    const auto f = poly_from_text(cx.at("f").get<std::string>());
    const auto pf_table = to_word(scalar_multiply(f, f.prime()), L);
    // measure both degrees from tables only
    const int upper = degree(f) + 1;
    const int df = derivative_degree(to_word(f, L), upper, 10000, 1, L);
    const int dpf = derivative_degree(pf_table, upper, 10000, 1, L);
    return dpf != std::max(df - static_cast<int>(f.prime()) + 1, 0);
}

// ---- HTILDE_UNIFORM --------------------------------------------------------

struct HtildeDistribution {
    std::uint32_t p;
    int k, A;
    std::uint64_t modulus;
    std::vector<BigInt> block;  // counts of prod_j |z_j| mod p^{k+1} over F_p^A

    HtildeDistribution(std::uint32_t p_, int k_, int A_) : p(p_), k(k_), A(A_) {
        modulus = saturating_pow(p, static_cast<std::uint64_t>(k + 1));
        if (modulus > (1u << 20)) throw InfeasibleError("HTILDE_UNIFORM: p^{k+1} too large");
        block.assign(modulus, 0);
        const auto points = saturating_pow(p, static_cast<std::uint64_t>(A));
        if (points > 10'000'000) throw InfeasibleError("HTILDE_UNIFORM: p^A too large");
        for (std::uint64_t idx = 0; idx < points; ++idx) {
            std::uint64_t v = 1;
            for (auto z : digits_of(idx, p, static_cast<std::size_t>(A))) v = v * z % modulus;
            block[v] += 1;
        }
    }

    std::vector<BigInt> convolve(const std::vector<BigInt>& dist) const {
        std::vector<BigInt> out(modulus, 0);
        for (std::uint64_t a = 0; a < modulus; ++a) {
            if (dist[a] == 0) continue;
            for (std::uint64_t b = 0; b < modulus; ++b)
                if (block[b] != 0) out[(a + b) % modulus] += dist[a] * block[b];
        }
        return out;
    }

    /// max_alpha |p^{k+1} Pr[htilde = alpha] - 1|
    Rational deviation(const std::vector<BigInt>& dist) const {
        BigInt total = 0;
        for (const auto& c : dist) total += c;
        Rational worst = 0;
        for (const auto& c : dist) worst = std::max(worst, abs_q(Rational(c * modulus, total) - 1));
        return worst;
    }

    /// sum_{c != 0} |E omega^{c Z}|^r
    double fourier_bound(int r) const {
        BigInt total = 0;
        for (const auto& c : block) total += c;
        const double t = total.convert_to<double>();
        double bound = 0;
        for (std::uint64_t c = 1; c < modulus; ++c) {
            std::complex<double> e = 0;
            for (std::uint64_t v = 0; v < modulus; ++v) {
                const double angle = 2 * M_PI * static_cast<double>(c * v % modulus) / static_cast<double>(modulus);
                e += block[v].convert_to<double>() / t * std::polar(1.0, angle);
            }
            bound += std::pow(std::abs(e), r);
        }
        return bound;
    }
};

void check_htilde(Params& P, const Limits&, ClaimReport& rep) {
    const auto p = P.prime("p", 2);
    const int k = P.small("k", 1, 0, 12);
    const int A = P.small("A", 1, 1, 24);
    const auto rs = P.list("r", "2,4,8,16");
    const int rmax = P.small("rmax", 64, 1, 100000);
    const Rational target = P.rational("target", Rational(1, 10));
    for (auto r : rs)
        if (r < 1) throw std::invalid_argument("parameter r: entries must be >= 1");
    HtildeDistribution h(p, k, A);
    const int top = std::max<int>(rmax, static_cast<int>(*std::max_element(rs.begin(), rs.end())));
    std::vector<BigInt> dist(h.modulus, 0);
    dist[0] = 1;
    std::map<int, Rational> devs;
    std::optional<int> below;
    for (int r = 1; r <= top; ++r) {
        dist = h.convolve(dist);
        ++rep.cases_checked;
        const auto dev = h.deviation(dist);
        if (std::find(rs.begin(), rs.end(), r) != rs.end()) devs[r] = dev;
        if (!below && r <= rmax && dev < target) below = r;
    }
    json listed = json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const int r = static_cast<int>(rs[i]);
        const double bound = h.fourier_bound(r);
        listed.push_back({{"r", r},
                          {"deviation", to_string(devs[r])},
                          {"approx", std::round(devs[r].convert_to<double>() * 1e9) / 1e9}});
        if (devs[r].convert_to<double>() > bound + 1e-12)
            fail(rep, {{"r", r}, {"deviation", to_string(devs[r])}, {"fourier_bound", bound}},
                 "deviation exceeds the Fourier bound");
        if (i > 0 && !(devs[r] < devs[static_cast<int>(rs[i - 1])]))
            fail(rep, {{"r_prev", rs[i - 1]}, {"r", r}, {"deviation_prev", to_string(devs[static_cast<int>(rs[i - 1])])},
                       {"deviation", to_string(devs[r])}},
                 "deviation does not strictly decrease along r");
    }
    if (!below)
        fail(rep, {{"rmax", rmax}, {"target", to_string(target)}, {"deviation_at_rmax", to_string(h.deviation(dist))}},
             "deviation never falls below the target");
    rep.details = {{"deviations", listed}, {"first_r_below_target", below ? json(*below) : json(nullptr)}};
}

bool recheck_htilde(const ClaimReport& rep, const Limits& L) {
    const auto p = static_cast<std::uint32_t>(parse_int("p", rep.parameters.at("p")));
    const int k = static_cast<int>(parse_int("k", rep.parameters.at("k")));
    const int A = static_cast<int>(parse_int("A", rep.parameters.at("A")));
    const auto& cx = rep.counterexample;
    // independent path: the exact table from the polynomial module when it fits
    auto dev_at = [&](int r) {
        const auto w = build_htilde(r, A, k, p, L);
        std::map<std::uint64_t, std::uint64_t> counts;
        for (std::size_t i = 0; i < w.size(); ++i) counts[w.torus_at(i).numerator_at(k)] += 1;
        const auto M = saturating_pow(p, static_cast<std::uint64_t>(k + 1));
        Rational worst = counts.size() < M ? Rational(1) : Rational(0);
        for (const auto& [v, c] : counts)
            worst = std::max(worst, abs_q(Rational(static_cast<long long>(c * M), static_cast<long long>(w.size())) - 1));
        return worst;
    };
    if (cx.contains("r_prev")) return !(dev_at(cx.at("r")) < dev_at(cx.at("r_prev")));
    if (cx.contains("fourier_bound"))
        return dev_at(cx.at("r")).convert_to<double>() > cx.at("fourier_bound").get<double>() + 1e-12;
    return false;
}

// ---- DEG_COEF --------------------------------------------------------------

struct DegCoefSetup {
    std::uint32_t p;
    int k, A, r, d, n1;
    std::uint64_t modulus;
};

struct CoefViolation {
    std::vector<std::uint32_t> digits;
    int degree;
    int bound;
};

// f~1(x, z) = Gamma(x, htilde(z)), x first.
Word f1_tilde(const DegCoefSetup& s, const std::vector<std::uint32_t>& gamma, const Limits& L) {
    const int nz = s.r * s.A;
    const std::size_t zs = table_size(s.p, nz, L);
    const std::size_t xs = table_size(s.p, s.n1, L);
    table_size(s.p, s.n1 + nz, L);
    std::vector<std::uint64_t> weight(zs);
    for (std::size_t zi = 0; zi < zs; ++zi) {
        const auto digits = lucas_digits_at(point_of(zi, s.p, nz), s.r, s.A, s.k, s.p);
        std::uint64_t w = 0;
        for (std::size_t i = digits.size(); i-- > 0;) w = w * s.p + digits[i];
        weight[zi] = w;
    }
    std::vector<std::uint32_t> table(xs * zs);
    for (std::size_t x = 0; x < xs; ++x)
        for (std::size_t zi = 0; zi < zs; ++zi) table[x * zs + zi] = gamma[x * s.modulus + weight[zi]];
    return Word(s.p, s.n1 + nz, Alphabet::field(), std::move(table));
}

// Gamma'(x, w_0..w_k) = Gamma(x, sum w_i p^i), x first, then w_0, ..., w_k.
Word gamma_prime(const DegCoefSetup& s, const std::vector<std::uint32_t>& gamma) {
    const std::size_t xs = saturating_pow(s.p, static_cast<std::uint64_t>(s.n1));
    std::vector<std::uint32_t> table(xs * s.modulus);
    for (std::size_t x = 0; x < xs; ++x)
        for (std::uint64_t wi = 0; wi < s.modulus; ++wi) {
            const auto w = digits_of(wi, s.p, static_cast<std::size_t>(s.k + 1));  // w_0 first
            std::uint64_t value = 0;
            for (std::size_t i = w.size(); i-- > 0;) value = value * s.p + w[i];
            table[x * s.modulus + wi] = gamma[x * s.modulus + value];
        }
    return Word(s.p, s.n1 + s.k + 1, Alphabet::field(), std::move(table));
}

std::optional<CoefViolation> coefficient_violation(const DegCoefSetup& s, const NonclassicalPoly& expansion) {
    std::map<std::vector<std::uint32_t>, int> degrees;
    for (const auto& [m, c] : expansion.terms()) {
        std::vector<std::uint32_t> dw(m.exponents.begin() + s.n1, m.exponents.end());
        int dx = 0;
        for (int i = 0; i < s.n1; ++i) dx += static_cast<int>(m.exponents[static_cast<std::size_t>(i)]);
        auto [it, fresh] = degrees.emplace(dw, dx);
        if (!fresh) it->second = std::max(it->second, dx);
    }
    for (const auto& [dw, dx] : degrees) {
        std::int64_t D = 0, pi = 1;
        for (auto di : dw) {
            D += pi * di;
            pi *= s.p;
        }
        const auto bound = static_cast<int>(s.d - s.A * D);
        if (dx > bound) return CoefViolation{dw, dx, bound};
    }
    return std::nullopt;
}

void check_deg_coef(Params& P, const Limits& L, ClaimReport& rep) {
    DegCoefSetup s{P.prime("p", 2), P.small("k", 1, 0, 8), P.small("A", 1, 1, 16), P.small("r", 4, 1, 64),
                   P.small("d", 4, 0, 1000), P.small("n1", 2, 1, 16), 0};
    const auto count = P.integer("count", 50, 0);
    const auto seed = P.integer("seed", 0);
    const auto attempts = P.integer("max_attempts", 2000, 0);
    const auto trials = static_cast<std::uint64_t>(P.integer("trials", 2000, 0));
    s.modulus = saturating_pow(s.p, static_cast<std::uint64_t>(s.k + 1));
    const std::size_t xs = table_size(s.p, s.n1, L);
    const auto size = table_size(s.p, s.n1 + s.r * s.A, L);
    L.require_cases(checked_mul(static_cast<std::uint64_t>(attempts), checked_mul(size, size)),
                    "DEG_COEF attempts x interpolation");
    Rng rng(static_cast<std::uint64_t>(seed));
    std::int64_t certified = 0, skipped = 0, attempt = 0;
    std::uint64_t bounds = 0;
    for (; attempt < attempts && certified < count; ++attempt) {
        std::vector<std::uint32_t> gamma(xs * s.modulus);
        for (auto& g : gamma) g = static_cast<std::uint32_t>(rng.below(s.p));
        const auto f1 = f1_tilde(s, gamma, L);
        const auto poly = interpolate_classical(f1, L);
        if (degree(poly) > s.d) {
            ++skipped;
            continue;
        }
        ++certified;
        if (trials > 0 &&
            !verify_degree_by_derivatives(f1, s.d, DerivativeMode::Sampled, trials, static_cast<std::uint64_t>(attempt), L)
                 .holds)
            fail(rep, {{"gamma", gamma}, {"reason", "sampled derivatives contradict the interpolated degree"}},
                 "degree certificate disagrees with derivatives");
        const auto expansion = interpolate_classical(gamma_prime(s, gamma), L);
        bounds += saturating_pow(s.p, static_cast<std::uint64_t>(s.k + 1));
        ++rep.cases_checked;
        if (const auto v = coefficient_violation(s, expansion))
            fail(rep, {{"gamma", gamma}, {"digits", v->digits}, {"coefficient_degree", v->degree}, {"bound", v->bound}},
                 "coefficient polynomial exceeds d - A sum p^i d_i");
    }
    rep.details = {{"certified", certified}, {"skipped", skipped}, {"attempts", attempt}, {"bounds_checked", bounds}};
    if (certified < count && rep.status != ClaimStatus::Fail) {
        rep.status = ClaimStatus::Infeasible;
        rep.message = "only " + std::to_string(certified) + " certified samples within max_attempts";
    }
}

bool recheck_deg_coef(const ClaimReport& rep, const Limits& L) {
    auto get = [&](const char* key) { return static_cast<int>(parse_int(key, rep.parameters.at(key))); };
    DegCoefSetup s{static_cast<std::uint32_t>(get("p")), get("k"), get("A"), get("r"), get("d"), get("n1"), 0};
    s.modulus = saturating_pow(s.p, static_cast<std::uint64_t>(s.k + 1));
    const auto gamma = rep.counterexample.at("gamma").get<std::vector<std::uint32_t>>();
    const auto f1 = f1_tilde(s, gamma, L);
    if (degree(interpolate_classical(f1, L)) > s.d) return false;
    if (!verify_degree_auto(f1, s.d, 20000, 5, L).holds) return true;
    return coefficient_violation(s, interpolate_classical(gamma_prime(s, gamma), L)).has_value();
}

// ---- APK -------------------------------------------------------------------

void check_apk(Params& P, const Limits& L, ClaimReport& rep) {
    const auto Amax = P.integer("Amax", 100, 1, 1'000'000);
    const auto kmax = P.integer("kmax", 20, 0, 10'000);
    const auto pmax = P.integer("pmax", 97, 2, 1'000'000);
    std::uint64_t primes = 0;
    for (std::int64_t p = 2; p <= pmax; ++p) primes += is_prime(static_cast<std::uint64_t>(p));
    L.require_cases(checked_mul(checked_mul(primes, static_cast<std::uint64_t>(Amax)), static_cast<std::uint64_t>(kmax + 1)),
                    "APK grid");
    for (std::int64_t p = 2; p <= pmax; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        BigInt pk = 1;
        for (std::int64_t k = 0; k <= kmax; ++k, pk *= p)
            for (std::int64_t A = 1; A <= Amax; ++A) {
                ++rep.cases_checked;
                if (BigInt(A) + BigInt(p - 1) * k > BigInt(A) * pk)
                    fail(rep, {{"A", A}, {"k", k}, {"p", p}}, "A + (p-1)k > A p^k");
            }
    }
}

bool recheck_apk(const ClaimReport& rep, const Limits&) {
    const std::int64_t A = rep.counterexample.at("A"), k = rep.counterexample.at("k"), p = rep.counterexample.at("p");
    return BigInt(A) + BigInt(p - 1) * k > BigInt(A) * boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
}

// ---- THM1_DESK -------------------------------------------------------------

Rational below_half_delta(std::uint32_t p, int n, int d) {
    // largest t/p^n strictly below delta/2
    const auto N = saturating_pow(p, static_cast<std::uint64_t>(n));
    const Rational half = delta(p, d) / 2 * Rational(static_cast<long long>(N));
    BigInt t = boost::multiprecision::numerator(half) / boost::multiprecision::denominator(half);
    if (Rational(t) == half) t -= 1;
    return Rational(t, BigInt(N));
}

void check_thm1(Params& P, const Limits& L, ClaimReport& rep) {
    const auto p = P.prime("p", 2);
    const int d = P.small("d", 1, 0, 64);
    const Rational eps = P.rational("eps", Rational(1, 16));
    const int nmin = P.small("nmin", 3, 1, 64);
    const int nmax = P.small("nmax", 5, nmin, 64);
    const auto samples = static_cast<std::uint64_t>(P.integer("samples", 200, 0));
    const auto seed = static_cast<std::uint64_t>(P.integer("seed", 0));
    const Rational radius = delta(p, d) - eps;
    if (radius < 0) throw std::invalid_argument("THM1_DESK: eps exceeds delta(d)");
    json maxima = json::array();
    std::optional<std::uint64_t> prev;
    for (int n = nmin; n <= nmax; ++n) {
        const CodeParams cp{p, n, d};
        const auto m = sampled_max_list_size(cp, radius, samples, seed, false, L);
        const auto u = sampled_max_list_size(cp, below_half_delta(p, n, d), 0, seed, true, L);
        rep.cases_checked += samples + code_size(cp);
        maxima.push_back({{"n", n}, {"max_list", m.max_count}, {"unique_radius", to_string(below_half_delta(p, n, d))},
                          {"unique_max", u.max_count}});
        if (u.max_count != 1)
            fail(rep, {{"kind", "unique"}, {"n", n}, {"radius", to_string(below_half_delta(p, n, d))}, {"count", u.max_count}},
                 "codeword-centered ball below delta/2 holds more than one codeword");
        if (prev && m.max_count > *prev)
            fail(rep,
                 {{"kind", "increase"},
                  {"n", n - 1},
                  {"count", *prev},
                  {"n_next", n},
                  {"count_next", m.max_count},
                  {"radius", to_string(radius)}},
                 "sampled max list size increases with n");
        prev = m.max_count;
    }
    rep.details = {{"radius", to_string(radius)}, {"maxima", maxima}};
}

bool recheck_thm1(const ClaimReport& rep, const Limits& L) {
    const auto p = static_cast<std::uint32_t>(parse_int("p", rep.parameters.at("p")));
    const int d = static_cast<int>(parse_int("d", rep.parameters.at("d")));
    const auto samples = static_cast<std::uint64_t>(parse_int("samples", rep.parameters.at("samples")));
    const auto seed = static_cast<std::uint64_t>(parse_int("seed", rep.parameters.at("seed")));
    const auto& cx = rep.counterexample;
    const Rational radius = parse_rational(cx.at("radius").get<std::string>());
    if (cx.at("kind") == "unique") {
        const int n = cx.at("n");
        return list_in_ball({p, n, d}, CodeEnumerator({p, n, d}, L).word(0), radius, L).count > 1 ||
               sampled_max_list_size({p, n, d}, radius, 0, seed, true, L).max_count > 1;
    }
    // recount the larger list directly from its argmax center
    const int n = cx.at("n"), n2 = cx.at("n_next");
    const auto a = sampled_max_list_size({p, n, d}, radius, samples, seed, false, L);
    const auto b = sampled_max_list_size({p, n2, d}, radius, samples, seed, false, L);
    return list_in_ball({p, n2, d}, b.argmax, radius, L).count > a.max_count;
}

// ---- THM2_FAMILY -----------------------------------------------------------

void check_thm2(Params& P, const Limits& L, ClaimReport& rep) {
    const auto p = P.prime("p", 2);
    const int d = P.small("d", 2, 0, 64);
    const int e = P.small("e", 1, 0, 64);
    const int n = P.small("n", 5, 1, 64);
    const auto expect = P.optional_integer("expect");
    const auto family = tightness_family(p, d, e, n, L);
    const auto formula = tightness_family_size(p, d, e, n);
    const Rational radius = delta(p, e) * (Rational(1) - Rational(1, p));
    const auto zero = Word::zeros(p, n, Alphabet::field());
    std::set<std::vector<std::uint32_t>> distinct;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto w = to_field_word(family[i], L);
        ++rep.cases_checked;
        distinct.emplace(w.values().begin(), w.values().end());
        const auto dist = distance(w, zero);
        const int deg = degree(interpolate_classical(w, L));
        if (dist != radius || deg > d)
            fail(rep, {{"member", to_text(family[i])}, {"distance", to_string(dist)}, {"degree", deg}},
                 "family member off the radius or above degree d");
    }
    if (distinct.size() != formula || family.size() != formula)
        fail(rep, {{"size", distinct.size()}, {"expected", formula}}, "family size differs from p^{M(n-a-2, d-e)}");
    if (expect && family.size() != static_cast<std::uint64_t>(*expect))
        fail(rep, {{"size", family.size()}, {"expected", *expect}}, "family size differs from the expected count");
    rep.details = {{"size", family.size()}, {"formula", formula}, {"radius", to_string(radius)},
                   {"shape", {{"a", tightness_shape(p, e).a}, {"b", tightness_shape(p, e).b}}}};
}

bool recheck_thm2(const ClaimReport& rep, const Limits& L) {
    auto get = [&](const char* key) { return static_cast<int>(parse_int(key, rep.parameters.at(key))); };
    const auto p = static_cast<std::uint32_t>(get("p"));
    const auto& cx = rep.counterexample;
    if (cx.contains("member")) {
        const auto f = poly_from_text(cx.at("member").get<std::string>());
        const auto w = to_field_word(f, L);
        return distance(w, Word::zeros(p, get("n"), Alphabet::field())) !=
                   delta(p, get("e")) * (Rational(1) - Rational(1, p)) ||
               !verify_degree_auto(w.as_torus(0), get("d")).holds;
    }
    // count distinct tables again
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& f : tightness_family(p, get("d"), get("e"), get("n"), L)) {
        const auto w = to_field_word(f, L);
        distinct.emplace(w.values().begin(), w.values().end());
    }
    return distinct.size() != cx.at("expected").get<std::uint64_t>();
}

// ---- JOHNSON_GAP -----------------------------------------------------------

void check_johnson(Params& P, const Limits&, ClaimReport& rep) {
    const auto p = P.prime("p", 2);
    const int dmin = P.small("dmin", 2, 1, 10000);
    const int dmax = P.small("dmax", 10, dmin, 10000);
    json gaps = json::array();
    for (int d = dmin; d <= dmax; ++d) {
        const Rational dl = delta(p, d);
        const double j = johnson_radius(p, dl);
        const double gap = dl.convert_to<double>() - j;
        ++rep.cases_checked;
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(9);
        os << gap;
        gaps.push_back({{"d", d}, {"delta", to_string(dl)}, {"gap", os.str()}});
        if (!(gap > 1e-9)) fail(rep, {{"d", d}, {"delta", to_string(dl)}, {"johnson", j}}, "delta does not exceed J(delta)");
    }
    rep.details = {{"gaps", gaps}};
}

bool recheck_johnson(const ClaimReport& rep, const Limits&) {
    const auto p = static_cast<std::uint32_t>(parse_int("p", rep.parameters.at("p")));
    const Rational dl = delta(p, rep.counterexample.at("d"));
    return !(dl.convert_to<double>() - johnson_radius(p, dl) > 1e-9);
}

}  // namespace

ClaimReport run_check(ClaimId id, const ParamMap& params, const Limits& limits) {
    ClaimReport rep;
    rep.claim = id;
    const auto start = std::chrono::steady_clock::now();
    std::optional<Params> reader;
    switch (id) {
        case ClaimId::SZ1: reader.emplace(params, std::initializer_list<std::string_view>{"p", "d", "n1", "n2"}); break;
        case ClaimId::DELTA_PRODUCT: reader.emplace(params, std::initializer_list<std::string_view>{"p", "dmax"}); break;
        case ClaimId::LUCAS: reader.emplace(params, std::initializer_list<std::string_view>{"p", "r", "A", "k"}); break;
        case ClaimId::ML_UNIQUE:
            reader.emplace(params, std::initializer_list<std::string_view>{"p", "n", "trials", "seed", "terms", "exhaustive_n"});
            break;
        case ClaimId::SCALAR_DEGREE:
            reader.emplace(params,
                           std::initializer_list<std::string_view>{"p", "nmax", "depth", "count", "seed", "terms", "trials"});
            break;
        case ClaimId::HTILDE_UNIFORM:
            reader.emplace(params, std::initializer_list<std::string_view>{"p", "k", "A", "r", "rmax", "target"});
            break;
        case ClaimId::DEG_COEF:
            reader.emplace(params, std::initializer_list<std::string_view>{"p", "k", "A", "r", "d", "n1", "count", "seed",
                                                                           "max_attempts", "trials"});
            break;
        case ClaimId::APK: reader.emplace(params, std::initializer_list<std::string_view>{"Amax", "kmax", "pmax"}); break;
        case ClaimId::THM1_DESK:
            reader.emplace(params,
                           std::initializer_list<std::string_view>{"p", "d", "eps", "nmin", "nmax", "samples", "seed"});
            break;
        case ClaimId::THM2_FAMILY:
            reader.emplace(params, std::initializer_list<std::string_view>{"p", "d", "e", "n", "expect"});
            break;
        case ClaimId::JOHNSON_GAP: reader.emplace(params, std::initializer_list<std::string_view>{"p", "dmin", "dmax"}); break;
    }
    rep.tag = reader->tag();
    try {
        switch (id) {
            case ClaimId::SZ1: check_sz1(*reader, limits, rep); break;
            case ClaimId::DELTA_PRODUCT: check_delta_product(*reader, limits, rep); break;
            case ClaimId::LUCAS: check_lucas(*reader, limits, rep); break;
            case ClaimId::ML_UNIQUE: check_ml_unique(*reader, limits, rep); break;
            case ClaimId::SCALAR_DEGREE: check_scalar_degree(*reader, limits, rep); break;
            case ClaimId::HTILDE_UNIFORM: check_htilde(*reader, limits, rep); break;
            case ClaimId::DEG_COEF: check_deg_coef(*reader, limits, rep); break;
            case ClaimId::APK: check_apk(*reader, limits, rep); break;
            case ClaimId::THM1_DESK: check_thm1(*reader, limits, rep); break;
            case ClaimId::THM2_FAMILY: check_thm2(*reader, limits, rep); break;
            case ClaimId::JOHNSON_GAP: check_johnson(*reader, limits, rep); break;
        }
    } catch (const InfeasibleError& e) {
        rep.status = ClaimStatus::Infeasible;
        rep.counterexample = nullptr;
        rep.message = e.what();
    }
    rep.parameters = reader->effective();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

bool recheck_counterexample(const ClaimReport& rep, const Limits& limits) {
    if (rep.status != ClaimStatus::Fail || rep.counterexample.is_null()) return false;
    switch (rep.claim) {
        case ClaimId::SZ1: return recheck_sz1(rep, limits);
        case ClaimId::DELTA_PRODUCT: return recheck_delta_product(rep, limits);
        case ClaimId::LUCAS: return recheck_lucas(rep, limits);
        case ClaimId::ML_UNIQUE: return recheck_ml_unique(rep, limits);
        case ClaimId::SCALAR_DEGREE: return recheck_scalar_degree(rep, limits);
        case ClaimId::HTILDE_UNIFORM: return recheck_htilde(rep, limits);
        case ClaimId::DEG_COEF: return recheck_deg_coef(rep, limits);
        case ClaimId::APK: return recheck_apk(rep, limits);
        case ClaimId::THM1_DESK: return recheck_thm1(rep, limits);
        case ClaimId::THM2_FAMILY: return recheck_thm2(rep, limits);
        case ClaimId::JOHNSON_GAP: return recheck_johnson(rep, limits);
    }
    return false;
}

RunConfig parse_config(std::string_view text, Limits base) {
    RunConfig config;
    config.limits = base;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string directive;
        if (!(words >> directive)) continue;
        auto where = [&] { return "config line " + std::to_string(lineno) + ": "; };
        if (directive == "limits") {
            std::string item, joined;
            while (words >> item) joined += (joined.empty() ? "" : ",") + item;
            config.limits = parse_limits(joined, config.limits);
        } else if (directive == "run") {
            std::string name;
            if (!(words >> name)) throw std::invalid_argument(where() + "run needs a claim id");
            ConfiguredRun run{parse_claim(name), {}};
            std::string item;
            while (words >> item) {
                const auto eq = item.find('=');
                if (eq == std::string::npos || eq == 0)
                    throw std::invalid_argument(where() + "expected key=value, got '" + item + "'");
                run.params[item.substr(0, eq)] = item.substr(eq + 1);
            }
            config.runs.push_back(std::move(run));
        } else {
            throw std::invalid_argument(where() + "unknown directive '" + directive + "'");
        }
    }
    return config;
}

RunConfig load_config(const std::string& path, Limits base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), base);
}

std::string_view default_config_text() {
    return R"(# desk-scale parameters for every claim
run SZ1 p=2 d=1 n1=1 n2=1
run SZ1 p=2 d=2 n1=2 n2=2
run SZ1 p=3 d=2 n1=1 n2=1
run DELTA_PRODUCT p=2 dmax=30
run DELTA_PRODUCT p=3 dmax=30
run DELTA_PRODUCT p=5 dmax=30
run DELTA_PRODUCT p=7 dmax=30
run LUCAS p=2 r=14 A=1 k=2
run LUCAS p=2 r=7 A=2 k=2
run LUCAS p=3 r=9 A=1 k=1
run ML_UNIQUE p=3 n=3 trials=200 seed=1 exhaustive_n=2
run SCALAR_DEGREE p=2,3 nmax=3 depth=2 count=1000 seed=0
run HTILDE_UNIFORM p=2 k=1 A=1 r=2,4,8,16 rmax=64 target=1/10
run DEG_COEF p=2 k=1 A=1 r=4 d=4 n1=2 count=50 seed=0
run APK Amax=100 kmax=20 pmax=97
run THM1_DESK p=2 d=1 eps=1/16 nmin=3 nmax=5 samples=200 seed=0
run THM2_FAMILY p=2 d=2 e=1 n=5
run THM2_FAMILY p=3 d=3 e=2 n=4
run JOHNSON_GAP p=2 dmin=2 dmax=12
)";
}

std::vector<ClaimReport> run_all(const RunConfig& config, unsigned jobs) {
    std::vector<ClaimReport> reports(config.runs.size());
    parallel_chunks(config.runs.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            reports[i] = run_check(config.runs[i].claim, config.runs[i].params, config.limits);
    });
    return reports;
}

nlohmann::json to_json(const ClaimReport& report, bool timing) {
    nlohmann::json j = {{"claimId", to_string(report.claim)},
                        {"status", to_string(report.status)},
                        {"parameters", report.parameters},
                        {"casesChecked", report.cases_checked},
                        {"counterexample", report.counterexample},
                        {"details", report.details}};
    if (!report.message.empty()) j["message"] = report.message;
    if (!report.tag.empty()) j["tag"] = report.tag;
    if (timing) j["elapsedMs"] = report.elapsed_ms;
    return j;
}

std::string csv_summary(const std::vector<ClaimReport>& reports) {
    std::ostringstream os;
    os << "claimId,status,casesChecked,elapsedMs\n";
    os.setf(std::ios::fixed);
    os.precision(3);
    for (const auto& r : reports)
        os << to_string(r.claim) << ',' << to_string(r.status) << ',' << r.cases_checked << ',' << r.elapsed_ms << '\n';
    return os.str();
}

}  // namespace rmlab
