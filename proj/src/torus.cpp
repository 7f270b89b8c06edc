#include "rmlab/torus.hpp"

#include <algorithm>

namespace rmlab {

FieldElement::FieldElement(std::uint64_t v, std::uint32_t p) : value(static_cast<std::uint32_t>(v % p)), modulus(p) {}

namespace {
void same_field(FieldElement a, FieldElement b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("field elements over different primes");
}
}  // namespace

FieldElement operator+(FieldElement a, FieldElement b) {
    same_field(a, b);
    return {std::uint64_t{a.value} + b.value, a.modulus};
}

FieldElement operator-(FieldElement a, FieldElement b) {
    same_field(a, b);
    return {std::uint64_t{a.value} + a.modulus - b.value, a.modulus};
}

FieldElement operator*(FieldElement a, FieldElement b) {
    same_field(a, b);
    return {std::uint64_t{a.value} * b.value, a.modulus};
}

TorusValue::TorusValue(std::uint64_t numerator, int depth, std::uint32_t p) : depth_(depth), p_(p) {
    if (depth < 0) throw std::invalid_argument("negative torus depth");
    const std::uint64_t modulus = saturating_pow(p, static_cast<std::uint64_t>(depth) + 1);
    if (modulus == UINT64_MAX) throw std::overflow_error("torus depth too large");
    numerator_ = numerator % modulus;
    while (depth_ > 0 && numerator_ % p_ == 0) {
        numerator_ /= p_;
        --depth_;
    }
}

TorusValue TorusValue::from_rational(const Rational& r, std::uint32_t p, int maxDepth) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    int j = 0;
    BigInt rest = den;
    while (rest % p == 0) {
        rest /= p;
        ++j;
    }
    if (rest != 1 || j > maxDepth + 1)
        throw NotAPolynomial("value " + rmlab::to_string(r) + " is not in U_" + std::to_string(maxDepth + 1) +
                             " for p=" + std::to_string(p));
    const int depth = std::max(j - 1, 0);
    const BigInt modulus = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(depth + 1));
    // scale to denominator p^(depth+1)
    BigInt scaled = num * (modulus / den);
    scaled %= modulus;
    if (scaled < 0) scaled += modulus;
    return TorusValue(static_cast<std::uint64_t>(scaled), depth, p);
}

std::uint64_t TorusValue::numerator_at(int depth) const {
    if (depth < depth_) throw std::invalid_argument("numerator_at: target depth below value depth");
    return numerator_ * saturating_pow(p_, static_cast<std::uint64_t>(depth - depth_));
}

Rational TorusValue::to_rational() const {
    return Rational(BigInt(numerator_), boost::multiprecision::pow(BigInt(p_), static_cast<unsigned>(depth_ + 1)));
}

std::string TorusValue::to_string() const { return rmlab::to_string(to_rational()); }

namespace {
TorusValue combine(const TorusValue& a, const TorusValue& b, bool subtract) {
    if (a.prime() != b.prime()) throw std::invalid_argument("torus values over different primes");
    const int depth = std::max(a.depth(), b.depth());
    const std::uint64_t modulus = saturating_pow(a.prime(), static_cast<std::uint64_t>(depth) + 1);
    const std::uint64_t x = a.numerator_at(depth);
    const std::uint64_t y = b.numerator_at(depth);
    return TorusValue(subtract ? x + modulus - y : x + y, depth, a.prime());
}
}  // namespace

TorusValue operator+(const TorusValue& a, const TorusValue& b) { return combine(a, b, false); }
TorusValue operator-(const TorusValue& a, const TorusValue& b) { return combine(a, b, true); }
TorusValue TorusValue::operator-() const { return TorusValue(0, 0, p_) - *this; }

}  // namespace rmlab
