#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "rmlab/common.hpp"

namespace rmlab {

/// An element of F_p, stored as its representative |a| in {0, ..., p-1}.
struct FieldElement {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;

    FieldElement() = default;
    FieldElement(std::uint64_t v, std::uint32_t p);

    friend FieldElement operator+(FieldElement a, FieldElement b);
    friend FieldElement operator-(FieldElement a, FieldElement b);
    friend FieldElement operator*(FieldElement a, FieldElement b);
    friend bool operator==(FieldElement a, FieldElement b) = default;
};

/// numerator / p^(depth+1) mod 1, an element of U_{depth+1} inside the torus R/Z.
/// Values built through the factory functions are canonical: depth 0 or numerator not
/// divisible by p.
class TorusValue {
public:
    TorusValue() = default;
    /// Reduces numerator mod p^(depth+1) and canonicalizes.
    TorusValue(std::uint64_t numerator, int depth, std::uint32_t p);

    /// The embedding iota(a) = |a|/p.
    static TorusValue iota(FieldElement a) { return TorusValue(a.value, 0, a.modulus); }
    /// Exact conversion from a rational; throws NotAPolynomial unless the fractional part
    /// has denominator p^j with j <= maxDepth + 1.
    static TorusValue from_rational(const Rational& r, std::uint32_t p, int maxDepth);

    std::uint64_t numerator() const { return numerator_; }
    int depth() const { return depth_; }
    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return numerator_ == 0; }

    /// Numerator of the same value written over p^(depth+1); requires depth >= this->depth().
    std::uint64_t numerator_at(int depth) const;
    Rational to_rational() const;
    std::string to_string() const;

    friend TorusValue operator+(const TorusValue& a, const TorusValue& b);
    friend TorusValue operator-(const TorusValue& a, const TorusValue& b);
    TorusValue operator-() const;
    friend bool operator==(const TorusValue&, const TorusValue&) = default;

private:
    std::uint64_t numerator_ = 0;
    int depth_ = 0;
    std::uint32_t p_ = 2;
};

}  // namespace rmlab
