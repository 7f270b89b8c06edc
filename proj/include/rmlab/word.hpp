#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rmlab/common.hpp"
#include "rmlab/torus.hpp"

namespace rmlab {

/// Alphabet of a Word: F_p itself, or U_{depth+1} stored as numerators over p^(depth+1).
struct Alphabet {
    enum class Kind { Field, Torus };
    Kind kind = Kind::Field;
    int depth = 0;  // torus only

    static Alphabet field() { return {Kind::Field, 0}; }
    static Alphabet torus(int depth) { return {Kind::Torus, depth}; }
    bool is_field() const { return kind == Kind::Field; }
    /// Number of letters: p for the field, p^(depth+1) for the torus.
    std::uint64_t size(std::uint32_t p) const;
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Dense evaluation table over F_p^n. Index of (x_1,...,x_n) is sum x_i p^(n-i): base-p
/// row-major with x_1 the most significant digit.
class Word {
public:
    Word() = default;
    Word(std::uint32_t p, int n, Alphabet alphabet, std::vector<std::uint32_t> values);
    /// All-zero table.
    static Word zeros(std::uint32_t p, int n, Alphabet alphabet);

    std::uint32_t prime() const { return p_; }
    int num_vars() const { return n_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return values_.size(); }
    std::uint64_t alphabet_size() const { return alphabet_.size(p_); }

    std::uint32_t operator[](std::size_t i) const { return values_[i]; }
    std::uint32_t& operator[](std::size_t i) { return values_[i]; }
    std::span<const std::uint32_t> values() const { return values_; }

    /// Entry as a torus value (field entries go through iota).
    TorusValue torus_at(std::size_t i) const;
    /// Same table lifted to torus depth `depth` (field words are first embedded by iota).
    Word as_torus(int depth) const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::uint32_t p_ = 2;
    int n_ = 0;
    Alphabet alphabet_{};
    std::vector<std::uint32_t> values_;
};

/// p^n as a table length, checked against the table cap.
std::size_t table_size(std::uint32_t p, int n, const Limits& limits = {});

/// Digits of index i (x_1 first).
std::vector<std::uint32_t> point_of(std::size_t index, std::uint32_t p, int n);
std::size_t index_of(std::span<const std::uint32_t> point, std::uint32_t p);
/// Index of x + a, coordinatewise mod p.
std::size_t add_points(std::size_t x, std::size_t a, std::uint32_t p, int n);

/// Text format: header "p n field" or "p n torus:<k>", then the p^n entries row-major,
/// whitespace separated.
void write_word(std::ostream& os, const Word& w);
Word read_word(std::istream& is);
std::string to_text(const Word& w);
Word word_from_text(const std::string& text);

}  // namespace rmlab
