#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rmlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a requested computation exceeds the configured feasibility caps.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a table cannot be represented as a zero-shift polynomial of the requested depth.
class NotAPolynomial : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Feasibility caps. Every exhaustive operation checks its size against these before running.
struct Limits {
    std::uint64_t max_table_entries = 1'000'000;
    std::uint64_t max_exhaustive_cases = 10'000'000;

    void require_table(std::uint64_t entries, std::string_view what) const;
    void require_cases(std::uint64_t cases, std::string_view what) const;
};

/// Overrides fields from a "key=value,key=value" string (keys max_table, max_cases).
Limits parse_limits(std::string_view text, Limits base = {});

bool is_prime(std::uint64_t p);
void require_prime(std::uint64_t p);

/// base^exp, or UINT64_MAX when the result does not fit.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Exact rational formatted as "num/den" (always with a denominator).
std::string to_string(const Rational& r);
/// Parses "num/den", an integer, or a finite decimal such as "0.375" exactly.
Rational parse_rational(std::string_view text);

/// Deterministic PRNG: std::mt19937_64 seeded with the 64-bit seed, bounded draws by
/// rejection on the raw 64-bit output so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

}  // namespace rmlab
