#include "rmlab/word.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace rmlab {

std::uint64_t Alphabet::size(std::uint32_t p) const {
    return is_field() ? p : saturating_pow(p, static_cast<std::uint64_t>(depth) + 1);
}

Word::Word(std::uint32_t p, int n, Alphabet alphabet, std::vector<std::uint32_t> values)
    : p_(p), n_(n), alphabet_(alphabet), values_(std::move(values)) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("negative number of variables");
    if (alphabet.kind == Alphabet::Kind::Torus && alphabet.depth < 0)
        throw std::invalid_argument("negative torus depth");
    if (values_.size() != saturating_pow(p, static_cast<std::uint64_t>(n)))
        throw std::invalid_argument("word length " + std::to_string(values_.size()) + " != p^n");
    const std::uint64_t q = alphabet_.size(p);
    for (auto v : values_)
        if (v >= q) throw std::invalid_argument("word entry " + std::to_string(v) + " outside alphabet");
}

Word Word::zeros(std::uint32_t p, int n, Alphabet alphabet) {
    return Word(p, n, alphabet, std::vector<std::uint32_t>(saturating_pow(p, static_cast<std::uint64_t>(n)), 0));
}

TorusValue Word::torus_at(std::size_t i) const {
    return TorusValue(values_[i], alphabet_.is_field() ? 0 : alphabet_.depth, p_);
}

Word Word::as_torus(int depth) const {
    const int from = alphabet_.is_field() ? 0 : alphabet_.depth;
    if (depth < from) throw std::invalid_argument("as_torus: cannot lower depth");
    const auto scale = static_cast<std::uint32_t>(saturating_pow(p_, static_cast<std::uint64_t>(depth - from)));
    std::vector<std::uint32_t> out(values_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * scale;
    return Word(p_, n_, Alphabet::torus(depth), std::move(out));
}

std::size_t table_size(std::uint32_t p, int n, const Limits& limits) {
    const auto size = saturating_pow(p, static_cast<std::uint64_t>(n));
    limits.require_table(size, "table p^n");
    return static_cast<std::size_t>(size);
}

std::vector<std::uint32_t> point_of(std::size_t index, std::uint32_t p, int n) {
    std::vector<std::uint32_t> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        x[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return x;
}

std::size_t index_of(std::span<const std::uint32_t> point, std::uint32_t p) {
    std::size_t index = 0;
    for (auto v : point) {
        if (v >= p) throw std::invalid_argument("point coordinate outside F_p");
        index = index * p + v;
    }
    return index;
}

std::size_t add_points(std::size_t x, std::size_t a, std::uint32_t p, int n) {
    std::size_t result = 0, scale = 1;
    for (int i = 0; i < n; ++i) {
        const std::size_t digit = (x % p + a % p) % p;
        result += digit * scale;
        scale *= p;
        x /= p;
        a /= p;
    }
    return result;
}

void write_word(std::ostream& os, const Word& w) {
    os << w.prime() << ' ' << w.num_vars() << ' ';
    if (w.alphabet().is_field())
        os << "field";
    else
        os << "torus:" << w.alphabet().depth;
    os << '\n';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    os << '\n';
}

Word read_word(std::istream& is) {
    std::uint32_t p = 0;
    int n = 0;
    std::string alphabet;
    if (!(is >> p >> n >> alphabet)) throw std::invalid_argument("malformed word header");
    Alphabet a;
    if (alphabet == "field") {
        a = Alphabet::field();
    } else if (alphabet.rfind("torus:", 0) == 0) {
        a = Alphabet::torus(std::stoi(alphabet.substr(6)));
    } else {
        throw std::invalid_argument("unknown word alphabet '" + alphabet + "'");
    }
    require_prime(p);
    const auto count = saturating_pow(p, static_cast<std::uint64_t>(n));
    Limits{}.require_table(count, "read_word");
    std::vector<std::uint32_t> values(count);
    for (auto& v : values)
        if (!(is >> v)) throw std::invalid_argument("word has fewer than p^n entries");
    return Word(p, n, a, std::move(values));
}

std::string to_text(const Word& w) {
    std::ostringstream os;
    write_word(os, w);
    return os.str();
}

Word word_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_word(is);
}

}  // namespace rmlab
