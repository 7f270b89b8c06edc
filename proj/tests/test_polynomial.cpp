#include "doctest.h"

#include <functional>
#include <set>

#include "rmlab/polynomial.hpp"

using namespace rmlab;

namespace {

Monomial mono(std::vector<std::uint32_t> e, int k) { return Monomial{std::move(e), k}; }

// Direct evaluation of the canonical sum as an exact rational mod 1.
Rational naive_value(const NonclassicalPoly& f, std::span<const std::uint32_t> x) {
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        BigInt prod = c;
        for (std::size_t i = 0; i < x.size(); ++i) prod *= boost::multiprecision::pow(BigInt(x[i]), m.exponents[i]);
        sum += Rational(prod, boost::multiprecision::pow(BigInt(f.prime()), static_cast<unsigned>(m.depth + 1)));
    }
    const BigInt whole = boost::multiprecision::numerator(sum) / boost::multiprecision::denominator(sum);
    return sum - Rational(whole);
}

// Brute force: every (d+1)-tuple of directions, every point.
bool naive_degree_at_most(const Word& f, int d) {
    const std::size_t N = f.size();
    std::vector<std::size_t> dirs(static_cast<std::size_t>(d + 1), 0);
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
        if (pos == dirs.size()) {
            for (std::size_t x = 0; x < N; ++x) {
                Rational total = 0;
                for (std::size_t mask = 0; mask < (std::size_t{1} << dirs.size()); ++mask) {
                    std::size_t y = x;
                    int bits = 0;
                    for (std::size_t j = 0; j < dirs.size(); ++j)
                        if (mask >> j & 1) {
                            y = add_points(y, dirs[j], p, n);
                            ++bits;
                        }
                    const auto v = f.torus_at(y).to_rational();
                    total += ((dirs.size() - bits) % 2 == 0) ? v : -v;
                }
                if (boost::multiprecision::denominator(total) != 1) return false;
            }
            return true;
        }
        for (std::size_t a = 0; a < N; ++a) {
            dirs[pos] = a;
            if (!rec(pos + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

}  // namespace

TEST_CASE("torus values canonicalize and embed") {
    CHECK(TorusValue(2, 1, 2) == TorusValue(1, 0, 2));
    CHECK(TorusValue(4, 1, 2).is_zero());
    CHECK(TorusValue(1, 1, 2).to_rational() == Rational(1, 4));
    CHECK((-TorusValue(1, 1, 2)).to_rational() == Rational(3, 4));
    CHECK(TorusValue::from_rational(Rational(3, 8), 2, 2).to_rational() == Rational(3, 8));
    CHECK_THROWS_AS(TorusValue::from_rational(Rational(1, 3), 2, 3), NotAPolynomial);
    CHECK_THROWS_AS(TorusValue::from_rational(Rational(1, 8), 2, 1), NotAPolynomial);

    // mod 1, iota is additive; on representatives in [0, 1) the sum stays below 1
    // (no wrap) exactly when |a| + |b| < p
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                const auto ia = TorusValue::iota({a, p});
                const auto ib = TorusValue::iota({b, p});
                const auto sum = TorusValue::iota(FieldElement(a, p) + FieldElement(b, p));
                CHECK(ia + ib == sum);
                CHECK((ia.to_rational() + ib.to_rational() == sum.to_rational()) == (a + b < p));
            }
}

TEST_CASE("evaluate, degree and depth on small polynomials") {
    const auto x1x2 = NonclassicalPoly::monomial(2, {1, 1});
    const std::vector<std::uint32_t> one_one{1, 1};
    CHECK(evaluate(x1x2, one_one).to_rational() == Rational(1, 2));
    CHECK(degree(x1x2) == 2);
    CHECK(depth(x1x2) == 0);

    const auto quarter = NonclassicalPoly::monomial(2, {1}, 1);
    const std::vector<std::uint32_t> one{1};
    CHECK(evaluate(quarter, one).to_rational() == Rational(1, 4));
    CHECK(degree(quarter) == 2);
    CHECK(depth(quarter) == 1);

    const NonclassicalPoly zero(3, 2);
    CHECK(evaluate(zero, one_one).is_zero());
    CHECK(degree(zero) == 0);
    CHECK(depth(zero) == 0);
    CHECK_THROWS_AS(evaluate(zero, one), std::invalid_argument);
}

TEST_CASE("to_word tables") {
    CHECK(to_word(NonclassicalPoly::variable(2, 1, 0)).torus_at(1).to_rational() == Rational(1, 2));
    const auto w = to_word(NonclassicalPoly::monomial(2, {1}, 1));
    CHECK(w.alphabet() == Alphabet::torus(1));
    CHECK(w.torus_at(0).is_zero());
    CHECK(w.torus_at(1).to_rational() == Rational(1, 4));
    const auto z = to_word(NonclassicalPoly(3, 2));
    CHECK(z.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(z.torus_at(i).is_zero());

    Limits tight;
    tight.max_table_entries = 8;
    CHECK_THROWS_AS(to_word(NonclassicalPoly(2, 4), tight), InfeasibleError);
}

TEST_CASE("to_word agrees with pointwise rational evaluation") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t p = trial % 2 ? 3 : 2;
        const int n = 1 + trial % 3;
        const auto f = random_canonical_poly(p, n, 2, 4, rng);
        const auto w = to_word(f);
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto x = point_of(i, p, n);
            CHECK(w.torus_at(i).to_rational() == naive_value(f, x));
        }
    }
}

TEST_CASE("integer combinations carry into lower depth") {
    // 2 * |x|/4 over F_2 is |x|/2
    const auto f = NonclassicalPoly::from_integer_terms(2, 1, {{mono({1}, 1), 2}});
    CHECK(f == NonclassicalPoly::variable(2, 1, 0));
    // 3 * |x|/2 = |x|/2 (mod 1)
    CHECK(NonclassicalPoly::from_integer_terms(2, 1, {{mono({1}, 0), 3}}) == NonclassicalPoly::variable(2, 1, 0));
    // -1 * x over F_3 is 2x
    CHECK(NonclassicalPoly::from_integer_terms(3, 1, {{mono({1}, 0), -1}}) == NonclassicalPoly::monomial(3, {1}, 0, 2));
    // additive inverse round trip
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto g = random_canonical_poly(t % 2 ? 3 : 2, 2, 2, 5, rng);
        CHECK((g - g).is_zero());
        CHECK(to_word(g + g) == to_word(scalar_multiply(g, 2)));
    }
}

TEST_CASE("scalar_multiply examples") {
    const auto quarter = NonclassicalPoly::monomial(2, {1}, 1);
    const auto twice = scalar_multiply(quarter, 2);
    CHECK(twice == NonclassicalPoly::variable(2, 1, 0));
    CHECK(degree(twice) == 1);
    CHECK(depth(twice) == 0);
    CHECK(scalar_multiply(quarter, 1) == quarter);
    CHECK(scalar_multiply(NonclassicalPoly::variable(3, 1, 0), 3).is_zero());
}

TEST_CASE("scalar multiples by units keep degree and depth") {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const std::uint32_t p = t % 2 ? 3 : 2;
        const auto f = random_canonical_poly(p, 1 + t % 3, 2, 4, rng);
        for (std::uint64_t c = 1; c < p; ++c) {
            const auto g = scalar_multiply(f, c);
            CHECK(degree(g) == degree(f));
            CHECK(depth(g) == depth(f));
        }
        // p*f drops exactly one depth level when f is nonclassical
        const auto pf = scalar_multiply(f, p);
        if (depth(f) >= 1) CHECK(depth(pf) == depth(f) - 1);
        else CHECK(pf.is_zero());
    }
}

TEST_CASE("derivative tables") {
    const auto x1x2 = to_word(NonclassicalPoly::monomial(2, {1, 1}));
    const std::vector<std::uint32_t> a{1, 0};
    CHECK(derivative_table(x1x2, a) == to_word(NonclassicalPoly::variable(2, 2, 1)));
    const std::vector<std::uint32_t> zero{0, 0};
    const auto d0 = derivative_table(x1x2, zero);
    for (auto v : d0.values()) CHECK(v == 0);

    const auto q = to_word(NonclassicalPoly::monomial(2, {1}, 1));
    const auto dq = derivative_table(q, std::size_t{1});
    CHECK(dq.torus_at(0).to_rational() == Rational(1, 4));
    CHECK(dq.torus_at(1).to_rational() == Rational(3, 4));
    CHECK_THROWS_AS(derivative_table(q, a), std::invalid_argument);
}

TEST_CASE("degree by derivatives on the documented examples") {
    const auto q = to_word(NonclassicalPoly::monomial(2, {1}, 1));
    CHECK(verify_degree_by_derivatives(q, 2, DerivativeMode::Exhaustive).holds);
    const auto fail = verify_degree_by_derivatives(q, 1, DerivativeMode::Exhaustive);
    CHECK_FALSE(fail.holds);
    CHECK(fail.directions.size() == 2);
    const auto c = to_word(NonclassicalPoly::constant(3, 2, 2));
    CHECK(verify_degree_by_derivatives(c, 0, DerivativeMode::Exhaustive).holds);
    CHECK(verify_degree_by_derivatives(c, 0, DerivativeMode::Sampled, 200, 3).holds);

    Limits tight;
    tight.max_exhaustive_cases = 10;
    CHECK_THROWS_AS(verify_degree_by_derivatives(q, 5, DerivativeMode::Exhaustive, 0, 0, tight), InfeasibleError);
}

TEST_CASE("failure witnesses re-verify") {
    const auto q = to_word(NonclassicalPoly::monomial(3, {2, 1}, 1));
    const auto r = verify_degree_by_derivatives(q, 4, DerivativeMode::Exhaustive);
    REQUIRE_FALSE(r.holds);
    Word w = q;
    for (auto dir : r.directions) w = derivative_table(w, dir);
    CHECK_FALSE(w.torus_at(r.point).is_zero());
}

TEST_CASE("derivative degree agrees with a brute-force oracle") {
    Rng rng(23);
    for (int t = 0; t < 30; ++t) {
        const std::uint32_t p = t % 3 == 0 ? 3 : 2;
        const int n = p == 3 ? 1 : 1 + t % 2;
        const auto f = random_canonical_poly(p, n, 1, 3, rng);
        const auto w = to_word(f);
        for (int d = 0; d <= degree(f) && d <= 3; ++d) {
            const bool expect = naive_degree_at_most(w, d);
            CHECK(verify_degree_by_derivatives(w, d, DerivativeMode::Exhaustive).holds == expect);
            INFO(pretty(f), " d=", d);
            CHECK(expect == (d >= degree(f)));
        }
    }
}

TEST_CASE("degree law on random canonical polynomials") {
    Rng rng(31);
    for (int t = 0; t < 80; ++t) {
        const std::uint32_t p = t % 2 ? 3 : 2;
        const int n = 1 + t % 3;
        const auto f = random_canonical_poly(p, n, 2, 4, rng);
        if (f.is_zero()) continue;
        const auto w = to_word(f);
        const int d = degree(f);
        CHECK(verify_degree_auto(w, d).holds);
        if (d >= 1) CHECK_FALSE(verify_degree_auto(w, d - 1).holds);
    }
}

TEST_CASE("canonical_fit examples and round trip") {
    std::vector<Rational> table{0, Rational(1, 4)};
    const auto f = canonical_fit(2, 1, table, 1);
    CHECK(f == NonclassicalPoly::monomial(2, {1}, 1));
    const auto x1x2 = NonclassicalPoly::monomial(2, {1, 1});
    CHECK(canonical_fit(to_word(x1x2), 0) == x1x2);
    std::vector<Rational> third{0, Rational(1, 3)};
    CHECK_THROWS_AS(canonical_fit(2, 1, third, 3), NotAPolynomial);
    // constant 1/4 is a shift
    std::vector<Rational> shifted{Rational(1, 4), Rational(1, 4)};
    CHECK_THROWS_AS(canonical_fit(2, 1, shifted, 3), NotAPolynomial);
    // A depth-1 table cannot be fitted at depth 0.
    CHECK_THROWS_AS(canonical_fit(to_word(NonclassicalPoly::monomial(2, {1}, 1)), 0), NotAPolynomial);

    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const std::uint32_t p = t % 2 ? 3 : 2;
        const int n = 1 + t % 3;
        const auto g = random_canonical_poly(p, n, 2, 5, rng);
        CHECK(canonical_fit(to_word(g), 2) == g);
    }
}

TEST_CASE("derivatives of classical polynomials drop degree") {
    Rng rng(43);
    for (int t = 0; t < 40; ++t) {
        const std::uint32_t p = t % 2 ? 3 : 2;
        const int n = 1 + t % 3;
        const auto f = random_canonical_poly(p, n, 0, 4, rng);
        if (degree(f) < 1) continue;
        const auto w = to_word(f);
        for (std::size_t a = 0; a < w.size(); ++a) CHECK(degree(canonical_fit(derivative_table(w, a), 0)) <= degree(f) - 1);
    }
}

TEST_CASE("interpolate_classical") {
    const Word and_table(2, 2, Alphabet::field(), {0, 0, 0, 1});
    CHECK(interpolate_classical(and_table) == NonclassicalPoly::monomial(2, {1, 1}));
    CHECK(interpolate_classical(Word::zeros(3, 2, Alphabet::field())).is_zero());
    const Word origin(3, 1, Alphabet::field(), {1, 0, 0});
    const auto f = interpolate_classical(origin);
    CHECK(f == NonclassicalPoly::constant(3, 1, 1) + NonclassicalPoly::monomial(3, {2}, 0, 2));

    // brute-force oracle: the interpolant is the unique polynomial among all p^{p^n}
    for (std::uint32_t p : {2u, 3u}) {
        const int n = p == 2 ? 2 : 1;
        const auto monos = canonical_monomials(p, n, n * static_cast<int>(p - 1), 0);
        const auto total = saturating_pow(p, monos.size());
        std::set<std::vector<std::uint32_t>> tables;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::pair<Monomial, std::int64_t>> terms;
            std::uint64_t rest = code;
            for (const auto& m : monos) {
                terms.emplace_back(m, static_cast<std::int64_t>(rest % p));
                rest /= p;
            }
            const auto g = NonclassicalPoly::from_integer_terms(p, n, terms);
            const auto w = to_field_word(g);
            tables.emplace(w.values().begin(), w.values().end());
            CHECK(interpolate_classical(w) == g);
        }
        CHECK(tables.size() == total);
    }
}

TEST_CASE("multilinearize") {
    CHECK(multilinearize(NonclassicalPoly::monomial(3, {2})) == NonclassicalPoly::variable(3, 1, 0));
    const auto P = NonclassicalPoly::monomial(3, {2, 1}) + NonclassicalPoly::variable(3, 2, 0);
    const auto expect = NonclassicalPoly::monomial(3, {1, 1}) + NonclassicalPoly::variable(3, 2, 0);
    CHECK(multilinearize(P) == expect);
    CHECK(multilinearize(expect) == expect);
    CHECK_THROWS_AS(multilinearize(NonclassicalPoly::monomial(2, {1}, 1)), std::invalid_argument);
    CHECK_THROWS_AS(NonclassicalPoly::monomial(2, {0}, 1), std::invalid_argument);

    Rng rng(47);
    for (int t = 0; t < 50; ++t) {
        const auto Q = random_canonical_poly(3, 3, 0, 6, rng);
        const auto ml = multilinearize(Q);
        CHECK(multilinearize(ml) == ml);
        for (std::size_t mask = 0; mask < 8; ++mask) {
            const std::vector<std::uint32_t> z{static_cast<std::uint32_t>(mask >> 2 & 1),
                                               static_cast<std::uint32_t>(mask >> 1 & 1),
                                               static_cast<std::uint32_t>(mask & 1)};
            CHECK(evaluate(ml, z) == evaluate(Q, z));
        }
    }
}

TEST_CASE("symmetric polynomials") {
    const auto s1 = symmetric_poly(1, 3, 2);
    CHECK(s1 == NonclassicalPoly::variable(2, 3, 0) + NonclassicalPoly::variable(2, 3, 1) +
                    NonclassicalPoly::variable(2, 3, 2));
    const auto s2 = symmetric_poly(2, 3, 5);
    CHECK(s2.terms().size() == 3);
    for (const auto& [m, c] : s2.terms()) {
        CHECK(m.total_exponent() == 2);
        CHECK(c == 1);
    }
    CHECK(symmetric_poly(3, 3, 2) == NonclassicalPoly::monomial(2, {1, 1, 1}));
    CHECK_THROWS_AS(symmetric_poly(0, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_poly(4, 3, 2), std::invalid_argument);
}

TEST_CASE("Lucas digit words") {
    const std::vector<std::uint32_t> ones3{1, 1, 1};
    CHECK(lucas_digits_at(ones3, 3, 1, 1, 2) == std::vector<std::uint32_t>{1, 1});
    CHECK(symmetric_digits_at(ones3, 3, 1, 1, 2) == std::vector<std::uint32_t>{1, 1});
    const std::vector<std::uint32_t> zeros3{0, 0, 0};
    CHECK(lucas_digits_at(zeros3, 3, 1, 1, 2) == std::vector<std::uint32_t>{0, 0});
    CHECK(symmetric_digits_at(zeros3, 3, 1, 1, 2) == std::vector<std::uint32_t>{0, 0});
    const std::vector<std::uint32_t> ones4{1, 1, 1, 1};
    CHECK(lucas_digits_at(ones4, 4, 1, 1, 3) == std::vector<std::uint32_t>{1, 1});
    CHECK(symmetric_digits_at(ones4, 4, 1, 1, 3) == std::vector<std::uint32_t>{1, 1});

    const auto words = lucas_digit_words(3, 2, 1, 2);
    REQUIRE(words.digits.size() == 2);
    CHECK(words.digits[0].size() == 64);
    // on the Boolean cube both families agree
    for (std::size_t i = 0; i < 64; ++i) {
        for (int j = 0; j < 2; ++j) CHECK(words.digits[j][i] == words.symmetric[j][i]);
    }
}

TEST_CASE("htilde tables and polynomial") {
    const auto h = build_htilde(2, 1, 0, 2);
    CHECK(h.torus_at(0).is_zero());
    CHECK(h.torus_at(1).to_rational() == Rational(1, 2));
    CHECK(h.torus_at(2).to_rational() == Rational(1, 2));
    CHECK(h.torus_at(3).is_zero());
    const auto h1 = build_htilde(1, 1, 1, 2);
    CHECK(h1.torus_at(1).to_rational() == Rational(1, 4));

    for (auto [r, A, k, p] : {std::tuple{2, 2, 1, 2u}, std::tuple{3, 1, 1, 3u}, std::tuple{2, 2, 2, 2u}}) {
        const auto poly = htilde_poly(r, A, k, p);
        CHECK(degree(poly) == A + static_cast<int>(p - 1) * k);
        CHECK(depth(poly) == k);
        CHECK(to_word(poly) == build_htilde(r, A, k, p).as_torus(depth(poly)));
        CHECK(canonical_fit(build_htilde(r, A, k, p), k) == poly);
    }
}

TEST_CASE("tensor-free helpers: embed and classical product") {
    const auto x = NonclassicalPoly::variable(2, 1, 0);
    const auto e = embed_variables(x, 3, 2);
    CHECK(e == NonclassicalPoly::variable(2, 3, 2));
    const auto sq = multiply_classical(NonclassicalPoly::variable(3, 1, 0), NonclassicalPoly::monomial(3, {2}));
    // x^3 = x on F_3
    CHECK(sq == NonclassicalPoly::variable(3, 1, 0));
}

TEST_CASE("polynomial text format round trips") {
    Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        const auto f = random_canonical_poly(t % 2 ? 3 : 2, 3, 2, 5, rng);
        CHECK(poly_from_text(to_text(f)) == f);
    }
    const auto f = NonclassicalPoly::monomial(2, {1, 0}, 1) + NonclassicalPoly::monomial(2, {1, 1});
    CHECK(to_text(f) == "p=2 n=2\nc=1 e=1,0 k=1\nc=1 e=1,1 k=0\n");
    CHECK(pretty(f) == "|x1|/4 + x1*x2");
    CHECK_THROWS_AS(poly_from_text("p=2 n=1\nc=2 e=1 k=0\n"), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_text("p=4 n=1\n"), std::invalid_argument);
}

TEST_CASE("word text format") {
    const Word w(3, 1, Alphabet::torus(1), {0, 4, 8});
    CHECK(word_from_text(to_text(w)) == w);
    CHECK_THROWS_AS(word_from_text("2 2 field\n0 1 0"), std::invalid_argument);
    CHECK_THROWS_AS(word_from_text("2 1 field\n0 2"), std::invalid_argument);
}
