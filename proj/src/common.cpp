#include "rmlab/common.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace rmlab {

void Limits::require_table(std::uint64_t entries, std::string_view what) const {
    if (entries > max_table_entries)
        throw InfeasibleError(std::string(what) + ": table of " + std::to_string(entries) +
                              " entries exceeds max_table=" + std::to_string(max_table_entries));
}

void Limits::require_cases(std::uint64_t cases, std::string_view what) const {
    if (cases > max_exhaustive_cases)
        throw InfeasibleError(std::string(what) + ": " + std::to_string(cases) +
                              " cases exceed max_cases=" + std::to_string(max_exhaustive_cases));
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("not a nonnegative integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Limits parse_limits(std::string_view text, Limits base) {
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("limits entry without '=': " + std::string(item));
        const auto key = item.substr(0, eq);
        const auto value = parse_u64(item.substr(eq + 1));
        if (key == "max_table")
            base.max_table_entries = value;
        else if (key == "max_cases")
            base.max_exhaustive_cases = value;
        else
            throw std::invalid_argument("unknown limits key: " + std::string(key));
    }
    return base;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > kMax / base) return kMax;
        result *= base;
    }
    return result;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    bool negative = false;
    if (text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    auto digits = [](std::string_view s) {
        if (s.empty()) throw std::invalid_argument("malformed rational");
        for (char c : s)
            if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
        return BigInt(std::string(s));
    };
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt den = digits(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        value = Rational(digits(text.substr(0, slash)), den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt num = (whole.empty() ? BigInt(0) : digits(whole)) * scale + (frac.empty() ? BigInt(0) : digits(frac));
        value = Rational(num, scale);
    } else {
        value = Rational(digits(text));
    }
    return negative ? Rational(-value) : value;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

}  // namespace rmlab
