#include "rmlab/rmcode.hpp"

#include <algorithm>
#include <cmath>

#include "rmlab/parallel.hpp"

namespace rmlab {

void CodeParams::validate() const {
    require_prime(p);
    if (n < 1) throw std::invalid_argument("code needs n >= 1");
    if (d < 0) throw std::invalid_argument("code needs d >= 0");
}

std::vector<std::vector<std::uint32_t>> monomial_basis(std::uint32_t p, int n, int d) {
    std::vector<std::vector<std::uint32_t>> out;
    const auto count = saturating_pow(p, static_cast<std::uint64_t>(n));
    if (count == UINT64_MAX) throw InfeasibleError("monomial basis: p^n overflows");
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto e = point_of(static_cast<std::size_t>(idx), p, n);
        int total = 0;
        for (auto v : e) total += static_cast<int>(v);
        if (total <= d) out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (auto v : a) ta += static_cast<int>(v);
        for (auto v : b) tb += static_cast<int>(v);
        if (ta != tb) return ta < tb;
        return a > b;
    });
    return out;
}

std::uint64_t code_dimension(const CodeParams& params) {
    params.validate();
    return monomial_basis(params.p, params.n, params.d).size();
}

std::uint64_t code_size(const CodeParams& params) { return saturating_pow(params.p, code_dimension(params)); }

CodeEnumerator::CodeEnumerator(CodeParams params, const Limits& limits) : params_(params) {
    params_.validate();
    length_ = table_size(params_.p, params_.n, limits);
    basis_ = monomial_basis(params_.p, params_.n, params_.d);
    size_ = saturating_pow(params_.p, basis_.size());
    const auto work = size_ == UINT64_MAX || size_ > UINT64_MAX / length_ ? UINT64_MAX : size_ * length_;
    limits.require_cases(work, "codeword enumeration (code size x p^n)");
    for (const auto& e : basis_) {
        auto f = NonclassicalPoly::monomial(params_.p, e, 0, 1);
        auto w = to_field_word(f, limits);
        basis_tables_.emplace_back(w.values().begin(), w.values().end());
    }
}

std::vector<std::uint32_t> CodeEnumerator::coefficients(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("codeword index out of range");
    std::vector<std::uint32_t> c(basis_.size());
    for (std::size_t j = basis_.size(); j-- > 0;) {
        c[j] = static_cast<std::uint32_t>(index % params_.p);
        index /= params_.p;
    }
    return c;
}

NonclassicalPoly CodeEnumerator::polynomial(std::uint64_t index) const {
    const auto c = coefficients(index);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j]) terms.emplace_back(Monomial{basis_[j], 0}, c[j]);
    return NonclassicalPoly::from_integer_terms(params_.p, params_.n, terms);
}

Word CodeEnumerator::word(std::uint64_t index) const {
    const auto c = coefficients(index);
    std::vector<std::uint32_t> table(length_, 0);
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t x = 0; x < length_; ++x) table[x] = (table[x] + c[j] * basis_tables_[j][x]) % params_.p;
    return Word(params_.p, params_.n, Alphabet::field(), std::move(table));
}

void CodeEnumerator::for_range(std::uint64_t begin, std::uint64_t end,
                               const std::function<void(std::uint64_t, std::span<const std::uint32_t>)>& fn) const {
    end = std::min(end, size_);
    if (begin >= end) return;
    auto digits = coefficients(begin);
    auto table = word(begin);
    std::vector<std::uint32_t> values(table.values().begin(), table.values().end());
    const std::uint32_t p = params_.p;
    for (std::uint64_t index = begin;; ) {
        fn(index, values);
        if (++index == end) break;
        // odometer step; adding one more copy of a basis table also handles the wrap p-1 -> 0
        for (std::size_t j = digits.size(); j-- > 0;) {
            const auto& b = basis_tables_[j];
            for (std::size_t x = 0; x < length_; ++x) {
                const std::uint32_t v = values[x] + b[x];
                values[x] = v >= p ? v - p : v;
            }
            if (++digits[j] < p) break;
            digits[j] = 0;
        }
    }
}

void enumerate_code(const CodeParams& params,
                    const std::function<void(std::uint64_t, const NonclassicalPoly&, const Word&)>& fn,
                    const Limits& limits) {
    CodeEnumerator code(params, limits);
    code.for_range(0, code.size(), [&](std::uint64_t index, std::span<const std::uint32_t> table) {
        fn(index, code.polynomial(index),
           Word(params.p, params.n, Alphabet::field(), std::vector<std::uint32_t>(table.begin(), table.end())));
    });
}

Rational delta_extended(std::uint32_t p, std::int64_t d) {
    require_prime(p);
    const std::int64_t q = p - 1;
    std::int64_t a = d / q;
    if (d % q != 0 && d < 0) --a;
    const std::int64_t b = d - a * q;
    const Rational base = Rational(1) - Rational(b, p);
    if (a >= 0) return base / Rational(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(a)));
    return base * Rational(boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-a)));
}

Rational delta(std::uint32_t p, int d) {
    if (d < 0) throw std::invalid_argument("delta: degree must be >= 0");
    return delta_extended(p, d);
}

double johnson_radius(std::uint64_t q, const Rational& delta) {
    if (q < 2) throw std::invalid_argument("johnson_radius: alphabet size must be >= 2");
    const Rational top(static_cast<long long>(q - 1), static_cast<long long>(q));
    if (delta < 0 || delta > top) throw std::invalid_argument("johnson_radius: delta outside [0, (q-1)/q]");
    const Rational radicand = Rational(1) - Rational(static_cast<long long>(q)) * delta / Rational(static_cast<long long>(q - 1));
    const double qd = static_cast<double>(q);
    return (1.0 - 1.0 / qd) * (1.0 - std::sqrt(radicand.convert_to<double>()));
}

std::size_t disagreements(std::span<const std::uint32_t> u, std::span<const std::uint32_t> v) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < u.size(); ++i) count += u[i] != v[i];
    return count;
}

Rational distance(const Word& u, const Word& v) {
    if (u.prime() != v.prime() || u.num_vars() != v.num_vars() || !(u.alphabet() == v.alphabet()))
        throw std::invalid_argument("distance: words of different shape");
    return Rational(static_cast<long long>(disagreements(u.values(), v.values())), static_cast<long long>(u.size()));
}

Rational min_distance_bruteforce(const CodeParams& params, const Limits& limits, unsigned jobs) {
    CodeEnumerator code(params, limits);
    if (code.size() < 2) throw std::invalid_argument("min distance of a code with one codeword");
    const std::size_t chunks = chunk_count(code.size() - 1, jobs);
    std::vector<std::size_t> best(chunks, code.length());
    parallel_chunks(code.size() - 1, jobs, [&](std::size_t c, std::size_t begin, std::size_t end) {
        code.for_range(begin + 1, end + 1, [&](std::uint64_t, std::span<const std::uint32_t> t) {
            const auto w = static_cast<std::size_t>(std::count_if(t.begin(), t.end(), [](auto v) { return v != 0; }));
            best[c] = std::min(best[c], w);
        });
    });
    return Rational(static_cast<long long>(*std::min_element(best.begin(), best.end())),
                    static_cast<long long>(code.length()));
}

Rational min_distance_pairwise(const CodeParams& params, const Limits& limits) {
    CodeEnumerator code(params, limits);
    limits.require_cases(code.size() * code.size(), "pairwise min distance");
    std::vector<Word> words;
    for (std::uint64_t i = 0; i < code.size(); ++i) words.push_back(code.word(i));
    std::size_t best = code.length();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, disagreements(words[i].values(), words[j].values()));
    return Rational(static_cast<long long>(best), static_cast<long long>(code.length()));
}

std::uint64_t radius_threshold(const Rational& eta, std::size_t length) {
    if (eta < 0) throw std::invalid_argument("radius must be >= 0");
    const Rational scaled = eta * Rational(static_cast<long long>(length));
    const BigInt whole = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    return whole > BigInt(length) ? length : static_cast<std::uint64_t>(whole);
}

namespace {

void require_center(const CodeParams& params, const Word& g) {
    if (g.prime() != params.p || g.num_vars() != params.n || !g.alphabet().is_field())
        throw std::invalid_argument("center word must be an F_p word on F_p^n of the code");
}

}  // namespace

std::uint64_t count_in_ball(const CodeEnumerator& code, std::span<const std::uint32_t> g, std::uint64_t threshold,
                            unsigned jobs) {
    std::vector<std::uint64_t> counts(chunk_count(code.size(), jobs), 0);
    parallel_chunks(code.size(), jobs, [&](std::size_t c, std::size_t begin, std::size_t end) {
        code.for_range(begin, end, [&](std::uint64_t, std::span<const std::uint32_t> t) {
            if (disagreements(t, g) <= threshold) ++counts[c];
        });
    });
    std::uint64_t total = 0;
    for (auto v : counts) total += v;
    return total;
}

ListResult list_in_ball(const CodeParams& params, const Word& g, const Rational& eta, const Limits& limits,
                        unsigned jobs) {
    require_center(params, g);
    CodeEnumerator code(params, limits);
    const auto threshold = radius_threshold(eta, code.length());
    std::vector<std::vector<std::uint64_t>> found(chunk_count(code.size(), jobs));
    parallel_chunks(code.size(), jobs, [&](std::size_t c, std::size_t begin, std::size_t end) {
        code.for_range(begin, end, [&](std::uint64_t index, std::span<const std::uint32_t> t) {
            if (disagreements(t, g.values()) <= threshold) found[c].push_back(index);
        });
    });
    ListResult result{params, g, eta, 0, {}, {}};
    for (const auto& chunk : found) result.indices.insert(result.indices.end(), chunk.begin(), chunk.end());
    result.count = result.indices.size();
    for (auto index : result.indices) result.members.push_back(code.polynomial(index));
    return result;
}

Word random_word(std::uint32_t p, int n, Rng& rng) {
    Word w = Word::zeros(p, n, Alphabet::field());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::uint32_t>(rng.below(p));
    return w;
}

MaxListResult sampled_max_list_size(const CodeParams& params, const Rational& eta, std::uint64_t samples,
                                    std::uint64_t seed, bool codeword_centers, const Limits& limits, unsigned jobs) {
    CodeEnumerator code(params, limits);
    const auto threshold = radius_threshold(eta, code.length());
    std::vector<Word> centers;
    Rng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) centers.push_back(random_word(params.p, params.n, rng));
    if (codeword_centers) {
        const auto work = code.size() > UINT64_MAX / std::max<std::uint64_t>(code.size(), 1) ? UINT64_MAX : code.size() * code.size();
        limits.require_cases(work, "codeword-centered list sizes (code size^2)");
        for (std::uint64_t i = 0; i < code.size(); ++i) centers.push_back(code.word(i));
    }
    std::vector<std::uint64_t> counts(centers.size(), 0);
    parallel_chunks(centers.size(), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) counts[i] = count_in_ball(code, centers[i].values(), threshold, 1);
    });
    MaxListResult result;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (i == 0 || counts[i] > result.max_count) {
            result.max_count = counts[i];
            result.argmax = centers[i];
            result.argmax_is_codeword = i >= samples;
            result.argmax_id = i >= samples ? i - samples : i;
        }
    }
    result.sample_counts.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(samples));
    result.codeword_counts.assign(counts.begin() + static_cast<std::ptrdiff_t>(samples), counts.end());
    return result;
}

TightnessShape tightness_shape(std::uint32_t p, int e) {
    require_prime(p);
    if (e < 0) throw std::invalid_argument("tightness: e must be >= 0");
    const int q = static_cast<int>(p) - 1;
    return {e / q, e % q};
}

namespace {

void check_tightness(std::uint32_t p, int d, int e, int n) {
    if (e > d) throw std::invalid_argument("tightness: need e <= d");
    const auto shape = tightness_shape(p, e);
    if (n < shape.a + 2) throw std::invalid_argument("tightness: need n >= a + 2");
}

}  // namespace

std::uint64_t tightness_family_size(std::uint32_t p, int d, int e, int n) {
    check_tightness(p, d, e, n);
    const auto shape = tightness_shape(p, e);
    const int trailing = n - shape.a - 2;
    return saturating_pow(p, monomial_basis(p, trailing, d - e).size());
}

std::vector<NonclassicalPoly> tightness_family(std::uint32_t p, int d, int e, int n, const Limits& limits) {
    check_tightness(p, d, e, n);
    const auto [a, b] = tightness_shape(p, e);
    const int trailing = n - a - 2;
    const auto size = tightness_family_size(p, d, e, n);
    limits.require_cases(size, "tightness family size");

    auto prefix = NonclassicalPoly::constant(p, n, 1);
    for (int i = 0; i < a; ++i) {
        std::vector<std::uint32_t> ex(static_cast<std::size_t>(n), 0);
        ex[static_cast<std::size_t>(i)] = p - 1;
        prefix = multiply_classical(prefix, NonclassicalPoly::monomial(p, ex, 0, 1) - NonclassicalPoly::constant(p, n, 1));
    }
    for (int j = 1; j <= b; ++j)
        prefix = multiply_classical(prefix, NonclassicalPoly::variable(p, n, a) - NonclassicalPoly::constant(p, n, j));
    const auto lead = NonclassicalPoly::variable(p, n, a + 1);

    const auto basis = monomial_basis(p, trailing, d - e);
    std::vector<NonclassicalPoly> family;
    family.reserve(static_cast<std::size_t>(size));
    for (std::uint64_t index = 0; index < size; ++index) {
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        std::uint64_t rest = index;
        for (std::size_t j = basis.size(); j-- > 0;) {
            const auto c = rest % p;
            rest /= p;
            if (c == 0) continue;
            Monomial m{std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0), 0};
            std::copy(basis[j].begin(), basis[j].end(), m.exponents.begin() + a + 2);
            terms.emplace_back(std::move(m), static_cast<std::int64_t>(c));
        }
        const auto Q = NonclassicalPoly::from_integer_terms(p, n, terms);
        family.push_back(multiply_classical(prefix, lead + Q));
    }
    return family;
}

nlohmann::json to_json(const ListResult& result) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : result.members) members.push_back(to_text(m));
    return {{"p", result.params.p},           {"n", result.params.n},   {"d", result.params.d},
            {"eta", to_string(result.radius)}, {"count", result.count}, {"members", members}};
}

}  // namespace rmlab
