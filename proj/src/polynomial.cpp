#include "rmlab/polynomial.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace rmlab {

namespace {

std::uint64_t checked_modulus(std::uint32_t p, int depth) {
    const auto m = saturating_pow(p, static_cast<std::uint64_t>(depth) + 1);
    if (m >= (std::uint64_t{1} << 32)) throw std::overflow_error("torus modulus p^(k+1) exceeds 32 bits");
    return m;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
    std::uint64_t result = 1 % modulus;
    base %= modulus;
    while (exp) {
        if (exp & 1) result = result * base % modulus;
        base = base * base % modulus;
        exp >>= 1;
    }
    return result;
}

using Matrix = std::vector<std::vector<std::uint64_t>>;

/// V[x][e] = x^e mod modulus with 0^0 = 1.
Matrix power_matrix(std::uint32_t p, std::uint64_t modulus) {
    Matrix v(p, std::vector<std::uint64_t>(p));
    for (std::uint32_t x = 0; x < p; ++x)
        for (std::uint32_t e = 0; e < p; ++e) v[x][e] = pow_mod(x, e, modulus);
    return v;
}

/// Inverse of the Vandermonde matrix on nodes 0..p-1 over F_p.
Matrix inverse_vandermonde(std::uint32_t p) {
    Matrix a = power_matrix(p, p);
    Matrix inv(p, std::vector<std::uint64_t>(p, 0));
    for (std::uint32_t i = 0; i < p; ++i) inv[i][i] = 1;
    for (std::uint32_t col = 0; col < p; ++col) {
        std::uint32_t pivot = col;
        while (a[pivot][col] == 0) ++pivot;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const std::uint64_t scale = pow_mod(a[col][col], p - 2, p);
        for (std::uint32_t j = 0; j < p; ++j) {
            a[col][j] = a[col][j] * scale % p;
            inv[col][j] = inv[col][j] * scale % p;
        }
        for (std::uint32_t row = 0; row < p; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const std::uint64_t factor = a[row][col];
            for (std::uint32_t j = 0; j < p; ++j) {
                a[row][j] = (a[row][j] + (p - factor) * a[col][j]) % p;
                inv[row][j] = (inv[row][j] + (p - factor) * inv[col][j]) % p;
            }
        }
    }
    return inv;
}

/// Applies m along every axis of a p^n tensor (out[x] = sum_e m[x][e] in[e] per axis).
std::vector<std::uint64_t> axis_transform(std::vector<std::uint64_t> data, std::uint32_t p, int n, const Matrix& m,
                                          std::uint64_t modulus) {
    std::vector<std::uint64_t> line(p), out(p);
    std::size_t stride = 1;
    for (int axis = 0; axis < n; ++axis) {
        const std::size_t block = stride * p;
        for (std::size_t base = 0; base < data.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::uint32_t t = 0; t < p; ++t) line[t] = data[base + off + t * stride];
                for (std::uint32_t x = 0; x < p; ++x) {
                    std::uint64_t acc = 0;
                    for (std::uint32_t e = 0; e < p; ++e) acc = (acc + m[x][e] * line[e]) % modulus;
                    out[x] = acc;
                }
                for (std::uint32_t t = 0; t < p; ++t) data[base + off + t * stride] = out[t];
            }
        }
        stride = block;
    }
    return data;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_monomial(const Monomial& m, std::uint32_t p, int n) {
    if (static_cast<int>(m.exponents.size()) != n)
        throw std::invalid_argument("monomial has " + std::to_string(m.exponents.size()) + " exponents, expected " +
                                    std::to_string(n));
    if (m.depth < 0) throw std::invalid_argument("negative depth index");
    for (auto e : m.exponents)
        if (e > p - 1) throw std::invalid_argument("exponent exceeds p-1");
    if (m.depth > 0 && m.total_exponent() == 0)
        throw std::invalid_argument("constant term at depth >= 1 is a shift; shifts are fixed to zero");
}

std::size_t exponent_index(const std::vector<std::uint32_t>& e, std::uint32_t p) {
    std::size_t idx = 0;
    for (auto v : e) idx = idx * p + v;
    return idx;
}

std::vector<std::pair<Monomial, std::int64_t>> signed_terms(const NonclassicalPoly& f, std::int64_t sign) {
    std::vector<std::pair<Monomial, std::int64_t>> out;
    for (const auto& [m, c] : f.terms()) out.emplace_back(m, sign * static_cast<std::int64_t>(c));
    return out;
}

void same_space(const NonclassicalPoly& a, const NonclassicalPoly& b) {
    if (a.prime() != b.prime() || a.num_vars() != b.num_vars())
        throw std::invalid_argument("polynomials over different spaces");
}

}  // namespace

int Monomial::total_exponent() const {
    int s = 0;
    for (auto e : exponents) s += static_cast<int>(e);
    return s;
}

NonclassicalPoly::NonclassicalPoly(std::uint32_t p, int n) : p_(p), n_(n) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("negative number of variables");
}

NonclassicalPoly NonclassicalPoly::from_integer_terms(std::uint32_t p, int n,
                                                      const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
    NonclassicalPoly f(p, n);
    std::map<Monomial, std::int64_t, MonomialOrder> acc;
    for (const auto& [m, c] : terms) {
        check_monomial(m, p, n);
        acc[m] += c;
    }
    const auto prime = static_cast<std::int64_t>(p);
    // depth-descending order: carries land on entries not yet visited
    for (auto it = acc.begin(); it != acc.end(); ++it) {
        const std::int64_t c = it->second;
        const std::int64_t keep = c - floor_div(c, prime) * prime;
        const std::int64_t carry = floor_div(c, prime);
        if (carry != 0 && it->first.depth > 0) {
            Monomial lower{it->first.exponents, it->first.depth - 1};
            acc[lower] += carry;
        }
        if (keep != 0) f.terms_.emplace(it->first, static_cast<std::uint32_t>(keep));
    }
    return f;
}

NonclassicalPoly NonclassicalPoly::monomial(std::uint32_t p, std::vector<std::uint32_t> exponents, int depth,
                                            std::int64_t coeff) {
    const int n = static_cast<int>(exponents.size());
    return from_integer_terms(p, n, {{Monomial{std::move(exponents), depth}, coeff}});
}

NonclassicalPoly NonclassicalPoly::variable(std::uint32_t p, int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return from_integer_terms(p, n, {{Monomial{e, 0}, 1}});
}

NonclassicalPoly NonclassicalPoly::constant(std::uint32_t p, int n, std::int64_t c) {
    return from_integer_terms(p, n, {{Monomial{std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0), 0}, c}});
}

bool NonclassicalPoly::is_classical() const { return depth(*this) == 0; }

NonclassicalPoly operator+(const NonclassicalPoly& a, const NonclassicalPoly& b) {
    same_space(a, b);
    auto terms = signed_terms(a, 1);
    auto more = signed_terms(b, 1);
    terms.insert(terms.end(), more.begin(), more.end());
    return NonclassicalPoly::from_integer_terms(a.prime(), a.num_vars(), terms);
}

NonclassicalPoly operator-(const NonclassicalPoly& a, const NonclassicalPoly& b) {
    same_space(a, b);
    auto terms = signed_terms(a, 1);
    auto more = signed_terms(b, -1);
    terms.insert(terms.end(), more.begin(), more.end());
    return NonclassicalPoly::from_integer_terms(a.prime(), a.num_vars(), terms);
}

int degree(const NonclassicalPoly& f) {
    int d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.degree(f.prime()));
    return d;
}

int depth(const NonclassicalPoly& f) {
    // MonomialOrder puts the deepest term first
    return f.terms().empty() ? 0 : f.terms().begin()->first.depth;
}

TorusValue evaluate(const NonclassicalPoly& f, std::span<const std::uint32_t> x) {
    if (static_cast<int>(x.size()) != f.num_vars())
        throw std::invalid_argument("evaluate: point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                                    std::to_string(f.num_vars()) + " variables");
    const std::uint32_t p = f.prime();
    for (auto v : x)
        if (v >= p) throw std::invalid_argument("evaluate: coordinate outside F_p");
    const int top = depth(f);
    const std::uint64_t modulus = checked_modulus(p, top);
    std::uint64_t acc = 0;
    for (const auto& [m, c] : f.terms()) {
        std::uint64_t v = c * saturating_pow(p, static_cast<std::uint64_t>(top - m.depth)) % modulus;
        for (std::size_t i = 0; i < x.size(); ++i) v = v * pow_mod(x[i], m.exponents[i], modulus) % modulus;
        acc = (acc + v) % modulus;
    }
    return TorusValue(acc, top, p);
}

Word to_word(const NonclassicalPoly& f, const Limits& limits) {
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    const std::size_t size = table_size(p, n, limits);
    const int top = depth(f);
    const std::uint64_t modulus = checked_modulus(p, top);
    std::vector<std::uint64_t> coeffs(size, 0);
    for (const auto& [m, c] : f.terms()) {
        auto& slot = coeffs[exponent_index(m.exponents, p)];
        slot = (slot + c * saturating_pow(p, static_cast<std::uint64_t>(top - m.depth))) % modulus;
    }
    auto values = axis_transform(std::move(coeffs), p, n, power_matrix(p, modulus), modulus);
    return Word(p, n, Alphabet::torus(top), std::vector<std::uint32_t>(values.begin(), values.end()));
}

Word to_field_word(const NonclassicalPoly& f, const Limits& limits) {
    if (!f.is_classical()) throw std::invalid_argument("to_field_word: polynomial is not classical");
    Word w = to_word(f, limits);
    return Word(w.prime(), w.num_vars(), Alphabet::field(), std::vector<std::uint32_t>(w.values().begin(), w.values().end()));
}

NonclassicalPoly scalar_multiply(const NonclassicalPoly& f, std::uint64_t c) {
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& [m, coeff] : f.terms()) {
        // reduce c mod p^{k+1} first, the term only sees that residue
        const std::uint64_t modulus = checked_modulus(f.prime(), m.depth);
        terms.emplace_back(m, static_cast<std::int64_t>((c % modulus) * coeff));
    }
    return NonclassicalPoly::from_integer_terms(f.prime(), f.num_vars(), terms);
}

NonclassicalPoly multiply_classical(const NonclassicalPoly& a, const NonclassicalPoly& b) {
    same_space(a, b);
    if (!a.is_classical() || !b.is_classical())
        throw std::invalid_argument("multiply_classical: inputs must be classical");
    const std::uint32_t p = a.prime();
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m{ma.exponents, 0};
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                std::uint32_t e = ma.exponents[i] + mb.exponents[i];
                while (e > p - 1) e -= p - 1;  // x^p = x
                m.exponents[i] = e;
            }
            terms.emplace_back(std::move(m), static_cast<std::int64_t>(std::uint64_t{ca} * cb % p));
        }
    }
    return NonclassicalPoly::from_integer_terms(p, a.num_vars(), terms);
}

NonclassicalPoly embed_variables(const NonclassicalPoly& f, int total_vars, int offset) {
    if (offset < 0 || offset + f.num_vars() > total_vars) throw std::invalid_argument("embed_variables: out of range");
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& [m, c] : f.terms()) {
        Monomial out{std::vector<std::uint32_t>(static_cast<std::size_t>(total_vars), 0), m.depth};
        std::copy(m.exponents.begin(), m.exponents.end(), out.exponents.begin() + offset);
        terms.emplace_back(std::move(out), c);
    }
    return NonclassicalPoly::from_integer_terms(f.prime(), total_vars, terms);
}

Word derivative_table(const Word& f, std::size_t direction) {
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    if (direction >= f.size()) throw std::invalid_argument("derivative direction outside F_p^n");
    const std::uint64_t q = f.alphabet_size();
    std::vector<std::uint32_t> out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        const std::size_t shifted = add_points(x, direction, p, n);
        out[x] = static_cast<std::uint32_t>((f[shifted] + q - f[x]) % q);
    }
    return Word(p, n, f.alphabet(), std::move(out));
}

Word derivative_table(const Word& f, std::span<const std::uint32_t> direction) {
    if (static_cast<int>(direction.size()) != f.num_vars())
        throw std::invalid_argument("derivative direction has wrong dimension");
    return derivative_table(f, index_of(direction, f.prime()));
}

bool exhaustive_derivatives_feasible(std::uint32_t p, int n, int d, const Limits& limits) {
    const auto cases = saturating_pow(p, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d + 1));
    return cases <= limits.max_exhaustive_cases;
}

namespace {

bool all_zero(const Word& w) {
    return std::all_of(w.values().begin(), w.values().end(), [](std::uint32_t v) { return v == 0; });
}

std::size_t first_nonzero(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) return i;
    return w.size();
}

struct DerivativeSearch {
    int order;
    DegreeCheck result;
    std::vector<std::size_t> path;

    // Directions are taken as non-decreasing multisets over nonzero points: derivatives
    // commute and D_0 vanishes.
    bool descend(const Word& table, std::size_t start) {
        if (static_cast<int>(path.size()) == order) {
            ++result.cases;
            if (!all_zero(table)) {
                result.holds = false;
                result.directions = path;
                result.point = first_nonzero(table);
                return false;
            }
            return true;
        }
        for (std::size_t a = start; a < table.size(); ++a) {
            Word next = derivative_table(table, a);
            if (all_zero(next)) {
                ++result.cases;
                continue;
            }
            path.push_back(a);
            if (!descend(next, a)) return false;
            path.pop_back();
        }
        return true;
    }
};

}  // namespace

DegreeCheck verify_degree_by_derivatives(const Word& f, int d, DerivativeMode mode, std::uint64_t trials,
                                         std::uint64_t seed, const Limits& limits) {
    if (d < 0) throw std::invalid_argument("negative degree bound");
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    if (mode == DerivativeMode::Exhaustive) {
        if (!exhaustive_derivatives_feasible(p, n, d, limits))
            throw InfeasibleError("exhaustive derivative check needs p^{n(d+1)} = " + std::to_string(p) + "^" +
                                  std::to_string(n * (d + 1)) + " cases");
        DerivativeSearch search{d + 1, {}, {}};
        search.descend(f, 1);
        return search.result;
    }
    DegreeCheck result;
    Rng rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<std::size_t> dirs(static_cast<std::size_t>(d + 1));
        for (auto& a : dirs) a = static_cast<std::size_t>(rng.below(f.size()));
        Word table = f;
        for (auto a : dirs) {
            table = derivative_table(table, a);
            if (all_zero(table)) break;
        }
        ++result.cases;
        if (!all_zero(table)) {
            result.holds = false;
            result.directions = std::move(dirs);
            result.point = first_nonzero(table);
            return result;
        }
    }
    return result;
}

DegreeCheck verify_degree_auto(const Word& f, int d, std::uint64_t trials, std::uint64_t seed, const Limits& limits) {
    const bool exhaustive = exhaustive_derivatives_feasible(f.prime(), f.num_vars(), d, limits);
    return verify_degree_by_derivatives(f, d, exhaustive ? DerivativeMode::Exhaustive : DerivativeMode::Sampled,
                                        trials, seed, limits);
}

NonclassicalPoly canonical_fit(const Word& f, int maxDepth, const Limits& limits) {
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    table_size(p, n, limits);
    const int top = f.alphabet().is_field() ? 0 : f.alphabet().depth;
    std::uint64_t modulus = checked_modulus(p, top);
    std::vector<std::uint64_t> residual(f.values().begin(), f.values().end());
    const Matrix inverse = inverse_vandermonde(p);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    // f * p^{top+1} = sum_k p^{top-k} G_k with G_k integer-valued; mod p only G_top survives.
    for (int level = top; level >= 0; --level) {
        std::vector<std::uint64_t> low(residual.size());
        for (std::size_t i = 0; i < low.size(); ++i) low[i] = residual[i] % p;
        const auto coeffs = axis_transform(low, p, n, inverse, p);
        const auto evaluated = axis_transform(coeffs, p, n, power_matrix(p, modulus), modulus);
        for (std::size_t i = 0; i < residual.size(); ++i) {
            const std::uint64_t diff = (residual[i] + modulus - evaluated[i]) % modulus;
            residual[i] = diff / p;  // divisible by p by construction
        }
        modulus /= p;
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e] == 0) continue;
            if (e == 0 && level > 0) throw NotAPolynomial("table needs a nonzero shift");
            if (level > maxDepth)
                throw NotAPolynomial("table needs depth " + std::to_string(level) + " > maxDepth " +
                                     std::to_string(maxDepth));
            terms.emplace_back(Monomial{point_of(e, p, n), level}, static_cast<std::int64_t>(coeffs[e]));
        }
    }
    return NonclassicalPoly::from_integer_terms(p, n, terms);
}

NonclassicalPoly canonical_fit(std::uint32_t p, int n, std::span<const Rational> values, int maxDepth,
                               const Limits& limits) {
    const std::size_t size = table_size(p, n, limits);
    if (values.size() != size) throw std::invalid_argument("canonical_fit: table length != p^n");
    std::vector<TorusValue> torus;
    torus.reserve(size);
    int top = 0;
    for (const auto& v : values) {
        torus.push_back(TorusValue::from_rational(v, p, maxDepth));
        top = std::max(top, torus.back().depth());
    }
    std::vector<std::uint32_t> numerators(size);
    for (std::size_t i = 0; i < size; ++i) numerators[i] = static_cast<std::uint32_t>(torus[i].numerator_at(top));
    return canonical_fit(Word(p, n, Alphabet::torus(top), std::move(numerators)), maxDepth, limits);
}

NonclassicalPoly interpolate_classical(const Word& f, const Limits& limits) {
    if (!f.alphabet().is_field()) throw std::invalid_argument("interpolate_classical: word must be over F_p");
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    table_size(p, n, limits);
    const auto coeffs =
        axis_transform(std::vector<std::uint64_t>(f.values().begin(), f.values().end()), p, n, inverse_vandermonde(p), p);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != 0) terms.emplace_back(Monomial{point_of(e, p, n), 0}, static_cast<std::int64_t>(coeffs[e]));
    return NonclassicalPoly::from_integer_terms(p, n, terms);
}

NonclassicalPoly multilinearize(const NonclassicalPoly& P) {
    if (!P.is_classical()) throw std::invalid_argument("multilinearize: polynomial is not classical");
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& [m, c] : P.terms()) {
        Monomial ml{m.exponents, 0};
        for (auto& e : ml.exponents) e = e > 0 ? 1 : 0;
        terms.emplace_back(std::move(ml), c);
    }
    return NonclassicalPoly::from_integer_terms(P.prime(), P.num_vars(), terms);
}

NonclassicalPoly symmetric_poly(int ell, int r, std::uint32_t p) {
    if (ell < 1 || ell > r) throw std::invalid_argument("symmetric_poly: need 1 <= ell <= r");
    require_prime(p);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    std::vector<bool> chosen(static_cast<std::size_t>(r), false);
    std::fill(chosen.begin(), chosen.begin() + ell, true);
    do {
        Monomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(r), 0), 0};
        for (int i = 0; i < r; ++i)
            if (chosen[static_cast<std::size_t>(i)]) m.exponents[static_cast<std::size_t>(i)] = 1;
        terms.emplace_back(std::move(m), 1);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return NonclassicalPoly::from_integer_terms(p, r, terms);
}

std::vector<std::uint32_t> lucas_digits_at(std::span<const std::uint32_t> z, int r, int A, int k, std::uint32_t p) {
    if (static_cast<int>(z.size()) != r * A) throw std::invalid_argument("lucas: point must have r*A coordinates");
    const std::uint64_t modulus = checked_modulus(p, k);
    std::uint64_t w = 0;
    for (int i = 0; i < r; ++i) {
        std::uint64_t block = 1;
        for (int j = 0; j < A; ++j) block = block * z[static_cast<std::size_t>(i * A + j)] % modulus;
        w = (w + block) % modulus;
    }
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k + 1));
    for (auto& d : digits) {
        d = static_cast<std::uint32_t>(w % p);
        w /= p;
    }
    return digits;
}

std::vector<std::uint32_t> symmetric_digits_at(std::span<const std::uint32_t> z, int r, int A, int k,
                                               std::uint32_t p) {
    if (static_cast<int>(z.size()) != r * A) throw std::invalid_argument("lucas: point must have r*A coordinates");
    const auto top = static_cast<std::size_t>(saturating_pow(p, static_cast<std::uint64_t>(k)));
    // elementary symmetric values e_0..e_top of Z mod p
    std::vector<std::uint64_t> e(top + 1, 0);
    e[0] = 1;
    for (int i = 0; i < r; ++i) {
        std::uint64_t Z = 1;
        for (int j = 0; j < A; ++j) Z = Z * z[static_cast<std::size_t>(i * A + j)] % p;
        if (Z == 0) continue;
        for (std::size_t l = top; l >= 1; --l) e[l] = (e[l] + e[l - 1] * Z) % p;
    }
    std::vector<std::uint32_t> out(static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i)
        out[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(e[static_cast<std::size_t>(saturating_pow(p, static_cast<std::uint64_t>(i)))]);
    return out;
}

LucasWords lucas_digit_words(int r, int A, int k, std::uint32_t p, const Limits& limits) {
    require_prime(p);
    if (r < 1 || A < 1 || k < 0) throw std::invalid_argument("lucas: need r, A >= 1 and k >= 0");
    const int n = r * A;
    const std::size_t size = table_size(p, n, limits);
    LucasWords out;
    std::vector<std::vector<std::uint32_t>> digits(static_cast<std::size_t>(k + 1), std::vector<std::uint32_t>(size));
    auto symmetric = digits;
    for (std::size_t idx = 0; idx < size; ++idx) {
        const auto z = point_of(idx, p, n);
        const auto w = lucas_digits_at(z, r, A, k, p);
        const auto s = symmetric_digits_at(z, r, A, k, p);
        for (int i = 0; i <= k; ++i) {
            digits[static_cast<std::size_t>(i)][idx] = w[static_cast<std::size_t>(i)];
            symmetric[static_cast<std::size_t>(i)][idx] = s[static_cast<std::size_t>(i)];
        }
    }
    for (int i = 0; i <= k; ++i) {
        out.digits.emplace_back(p, n, Alphabet::field(), std::move(digits[static_cast<std::size_t>(i)]));
        out.symmetric.emplace_back(p, n, Alphabet::field(), std::move(symmetric[static_cast<std::size_t>(i)]));
    }
    return out;
}

Word build_htilde(int r, int A, int k, std::uint32_t p, const Limits& limits) {
    require_prime(p);
    if (r < 1 || A < 1 || k < 0) throw std::invalid_argument("htilde: need r, A >= 1 and k >= 0");
    const int n = r * A;
    const std::size_t size = table_size(p, n, limits);
    const std::uint64_t modulus = checked_modulus(p, k);
    std::vector<std::uint32_t> values(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
        const auto z = point_of(idx, p, n);
        std::uint64_t w = 0;
        for (int i = 0; i < r; ++i) {
            std::uint64_t block = 1;
            for (int j = 0; j < A; ++j) block = block * z[static_cast<std::size_t>(i * A + j)] % modulus;
            w = (w + block) % modulus;
        }
        values[idx] = static_cast<std::uint32_t>(w);
    }
    return Word(p, n, Alphabet::torus(k), std::move(values));
}

NonclassicalPoly htilde_poly(int r, int A, int k, std::uint32_t p) {
    if (r < 1 || A < 1 || k < 0) throw std::invalid_argument("htilde: need r, A >= 1 and k >= 0");
    if (p < 2) require_prime(p);
    const int n = r * A;
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (int i = 0; i < r; ++i) {
        Monomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0), k};
        for (int j = 0; j < A; ++j) m.exponents[static_cast<std::size_t>(i * A + j)] = 1;
        terms.emplace_back(std::move(m), 1);
    }
    return NonclassicalPoly::from_integer_terms(p, n, terms);
}

std::vector<Monomial> canonical_monomials(std::uint32_t p, int n, int maxDegree, int maxDepth) {
    std::vector<Monomial> out;
    const auto count = saturating_pow(p, static_cast<std::uint64_t>(n));
    for (int k = 0; k <= maxDepth; ++k) {
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Monomial m{point_of(static_cast<std::size_t>(idx), p, n), k};
            if (k > 0 && idx == 0) continue;  // would be a shift
            if (m.degree(p) <= maxDegree) out.push_back(std::move(m));
        }
    }
    return out;
}

NonclassicalPoly random_canonical_poly(std::uint32_t p, int n, int maxDepth, int maxTerms, Rng& rng) {
    for (;;) {
        const auto count = 1 + rng.below(static_cast<std::uint64_t>(maxTerms));
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        for (std::uint64_t t = 0; t < count; ++t) {
            Monomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(n)), 0};
            for (auto& e : m.exponents) e = static_cast<std::uint32_t>(rng.below(p));
            m.depth = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxDepth) + 1));
            if (m.total_exponent() == 0) m.depth = 0;
            terms.emplace_back(std::move(m), static_cast<std::int64_t>(1 + rng.below(p - 1)));
        }
        auto f = NonclassicalPoly::from_integer_terms(p, n, terms);
        if (!f.is_zero()) return f;
    }
}

void write_poly(std::ostream& os, const NonclassicalPoly& f) {
    os << "p=" << f.prime() << " n=" << f.num_vars() << '\n';
    for (const auto& [m, c] : f.terms()) {
        os << "c=" << c << " e=";
        for (std::size_t i = 0; i < m.exponents.size(); ++i) os << (i ? "," : "") << m.exponents[i];
        os << " k=" << m.depth << '\n';
    }
}

namespace {

std::string_view field_value(std::string_view token, std::string_view key) {
    if (token.substr(0, key.size()) != key)
        throw std::invalid_argument("expected '" + std::string(key) + "' in polynomial text, got '" +
                                    std::string(token) + "'");
    return token.substr(key.size());
}

std::int64_t to_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in polynomial text");
    std::size_t used = 0;
    const long long v = std::stoll(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

NonclassicalPoly read_poly(std::istream& is) {
    std::string line;
    while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream header(line);
    std::string pt, nt;
    if (!(header >> pt >> nt)) throw std::invalid_argument("malformed polynomial header");
    const auto p = static_cast<std::uint32_t>(to_int(field_value(pt, "p=")));
    const int n = static_cast<int>(to_int(field_value(nt, "n=")));
    require_prime(p);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    while (is.peek() != EOF && std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) break;
        std::istringstream ls(line);
        std::string ct, et, kt;
        if (!(ls >> ct >> et >> kt)) throw std::invalid_argument("malformed polynomial term: " + line);
        const auto c = to_int(field_value(ct, "c="));
        if (c < 1 || c > static_cast<std::int64_t>(p) - 1) throw std::invalid_argument("coefficient outside {1..p-1}");
        Monomial m;
        std::string_view ev = field_value(et, "e=");
        while (!ev.empty()) {
            auto comma = ev.find(',');
            m.exponents.push_back(static_cast<std::uint32_t>(to_int(ev.substr(0, comma))));
            ev = comma == std::string_view::npos ? std::string_view{} : ev.substr(comma + 1);
        }
        m.depth = static_cast<int>(to_int(field_value(kt, "k=")));
        terms.emplace_back(std::move(m), c);
    }
    return NonclassicalPoly::from_integer_terms(p, n, terms);
}

std::string to_text(const NonclassicalPoly& f) {
    std::ostringstream os;
    write_poly(os, f);
    return os.str();
}

NonclassicalPoly poly_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_poly(is);
}

std::string pretty(const NonclassicalPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream body;
        bool any = false;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (any) body << '*';
            any = true;
            if (m.depth > 0)
                body << "|x" << i + 1 << '|';
            else
                body << 'x' << i + 1;
            if (m.exponents[i] > 1) body << '^' << m.exponents[i];
        }
        if (c != 1 || !any) os << c << (any ? "*" : "");
        os << body.str();
        if (m.depth > 0) os << '/' << saturating_pow(f.prime(), static_cast<std::uint64_t>(m.depth) + 1);
    }
    return os.str();
}

}  // namespace rmlab
