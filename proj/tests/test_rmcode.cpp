#include "doctest.h"

#include <set>

#include "rmlab/rmcode.hpp"

using namespace rmlab;

namespace {

// Independent oracle: evaluate every coefficient vector pointwise.
std::vector<std::vector<std::uint32_t>> naive_codewords(const CodeParams& cp) {
    const auto basis = monomial_basis(cp.p, cp.n, cp.d);
    const auto N = saturating_pow(cp.p, static_cast<std::uint64_t>(cp.n));
    const auto total = saturating_pow(cp.p, basis.size());
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> coeff(basis.size());
        std::uint64_t rest = idx;
        for (std::size_t j = basis.size(); j-- > 0;) {
            coeff[j] = static_cast<std::uint32_t>(rest % cp.p);
            rest /= cp.p;
        }
        std::vector<std::uint32_t> table(N);
        for (std::uint64_t x = 0; x < N; ++x) {
            const auto pt = point_of(x, cp.p, cp.n);
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                std::uint64_t m = coeff[j];
                for (int i = 0; i < cp.n; ++i)
                    for (std::uint32_t e = 0; e < basis[j][i]; ++e) m = m * pt[i] % cp.p;
                v = (v + m) % cp.p;
            }
            table[x] = static_cast<std::uint32_t>(v);
        }
        out.push_back(std::move(table));
    }
    return out;
}

Word table_of(const NonclassicalPoly& f) { return to_field_word(f); }

}  // namespace

TEST_CASE("delta formula") {
    CHECK(delta(2, 2) == Rational(1, 4));
    CHECK(delta(3, 3) == Rational(2, 9));
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(delta(p, 0) == 1);
    CHECK(delta(5, 1) == Rational(4, 5));
    CHECK(delta_extended(3, -1) == Rational(3, 1) * Rational(2, 3));
    CHECK_THROWS_AS(delta(2, -1), std::invalid_argument);
}

TEST_CASE("Johnson radius") {
    CHECK(johnson_radius(2, 0) == doctest::Approx(0.0));
    CHECK(johnson_radius(2, Rational(1, 2)) == doctest::Approx(0.5));
    CHECK(johnson_radius(2, Rational(1, 4)) == doctest::Approx(0.146446609).epsilon(1e-9));
    CHECK_THROWS_AS(johnson_radius(2, Rational(3, 4)), std::invalid_argument);
    double prev = 0;
    for (int i = 0; i <= 20; ++i) {
        const double j = johnson_radius(3, Rational(i, 30));
        CHECK(j >= prev);
        prev = j;
    }
    for (int d = 2; d <= 12; ++d) CHECK(delta(2, d).convert_to<double>() > johnson_radius(2, delta(2, d)) + 1e-9);
}

TEST_CASE("monomial basis order and code sizes") {
    const auto b = monomial_basis(2, 2, 1);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == std::vector<std::uint32_t>{0, 0});
    CHECK(b[1] == std::vector<std::uint32_t>{1, 0});
    CHECK(b[2] == std::vector<std::uint32_t>{0, 1});
    CHECK(code_size({2, 2, 1}) == 8);
    CHECK(code_size({2, 3, 2}) == 128);
    CHECK(code_size({3, 1, 2}) == 27);
    const auto b3 = monomial_basis(3, 1, 2);
    CHECK(b3 == std::vector<std::vector<std::uint32_t>>{{0}, {1}, {2}});
    CHECK_THROWS_AS(CodeParams({4, 2, 1}).validate(), std::invalid_argument);
}

TEST_CASE("enumeration matches a pointwise oracle") {
    for (CodeParams cp : {CodeParams{2, 2, 1}, CodeParams{2, 3, 2}, CodeParams{3, 1, 2}, CodeParams{3, 2, 2}}) {
        const auto expect = naive_codewords(cp);
        std::vector<std::vector<std::uint32_t>> got;
        std::set<std::vector<std::uint32_t>> distinct;
        enumerate_code(cp, [&](std::uint64_t index, const NonclassicalPoly& f, const Word& w) {
            CHECK(index == got.size());
            CHECK(table_of(f) == w);
            CHECK(degree(f) <= cp.d);
            got.emplace_back(w.values().begin(), w.values().end());
            distinct.emplace(w.values().begin(), w.values().end());
        });
        CHECK(got == expect);
        CHECK(distinct.size() == got.size());
        CodeEnumerator code(cp);
        // partial ranges agree with the full enumeration
        code.for_range(3, 7, [&](std::uint64_t i, std::span<const std::uint32_t> t) {
            CHECK(std::vector<std::uint32_t>(t.begin(), t.end()) == expect[i]);
        });
    }
}

TEST_CASE("distance") {
    const auto x1 = table_of(NonclassicalPoly::variable(2, 1, 0));
    const auto x1p1 = table_of(NonclassicalPoly::variable(2, 1, 0) + NonclassicalPoly::constant(2, 1, 1));
    CHECK(distance(x1, x1) == 0);
    CHECK(distance(x1, x1p1) == 1);
    CHECK(distance(table_of(NonclassicalPoly::variable(2, 2, 0)), table_of(NonclassicalPoly::variable(2, 2, 1))) ==
          Rational(1, 2));
    CHECK_THROWS_AS(distance(x1, Word::zeros(2, 2, Alphabet::field())), std::invalid_argument);
}

TEST_CASE("minimum distance") {
    CHECK(min_distance_bruteforce({2, 3, 1}) == Rational(1, 2));
    CHECK(min_distance_bruteforce({2, 4, 2}) == Rational(1, 4));
    CHECK(min_distance_bruteforce({3, 2, 2}) == Rational(1, 3));
    for (CodeParams cp : {CodeParams{2, 3, 1}, CodeParams{2, 3, 2}, CodeParams{3, 2, 1}, CodeParams{3, 1, 2}}) {
        CHECK(min_distance_pairwise(cp) == min_distance_bruteforce(cp));
        CHECK(min_distance_bruteforce(cp, {}, 4) == min_distance_bruteforce(cp));
    }
    // (x1-1)(x1-2) has weight 1/3 on F_3^2
    const auto w = table_of(multiply_classical(
        NonclassicalPoly::variable(3, 2, 0) - NonclassicalPoly::constant(3, 2, 1),
        NonclassicalPoly::variable(3, 2, 0) - NonclassicalPoly::constant(3, 2, 2)));
    CHECK(distance(w, Word::zeros(3, 2, Alphabet::field())) == Rational(1, 3));

    Limits tight;
    tight.max_exhaustive_cases = 1000;
    CHECK_THROWS_AS(min_distance_bruteforce({2, 4, 2}, tight), InfeasibleError);
}

TEST_CASE("list_in_ball") {
    const CodeParams cp{2, 3, 1};
    CodeEnumerator code(cp);
    const auto g = code.word(5);
    const auto unique = list_in_ball(cp, g, Rational(1, 5));
    CHECK(unique.count == 1);
    CHECK(unique.indices == std::vector<std::uint64_t>{5});
    CHECK(list_in_ball(cp, g, 1).count == code.size());

    // majority of three bits: oracle count by direct scan
    Word maj = Word::zeros(2, 3, Alphabet::field());
    for (std::size_t i = 0; i < 8; ++i) {
        const auto x = point_of(i, 2, 3);
        maj[i] = x[0] + x[1] + x[2] >= 2 ? 1 : 0;
    }
    std::uint64_t oracle = 0;
    for (const auto& t : naive_codewords(cp)) {
        std::size_t dis = 0;
        for (std::size_t i = 0; i < 8; ++i) dis += t[i] != maj[i];
        oracle += dis * 8 <= 3 * 8 ? 1 : 0;  // dis / 8 <= 3 / 8
    }
    const auto res = list_in_ball(cp, maj, Rational(3, 8));
    CHECK(res.count == oracle);
    CHECK(res.count == 4);
    for (const auto& m : res.members) CHECK(distance(table_of(m), maj) <= Rational(3, 8));
    CHECK(list_in_ball(cp, maj, Rational(3, 8), {}, 3).indices == res.indices);

    const auto j = to_json(res);
    CHECK(j["eta"] == "3/8");
    CHECK(j["count"] == 4);
    CHECK(j["members"].size() == 4);
}

TEST_CASE("list counts are monotone in the radius") {
    const CodeParams cp{3, 2, 1};
    Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        const auto g = random_word(3, 2, rng);
        std::uint64_t prev = 0;
        for (int k = 0; k <= 9; ++k) {
            const auto c = list_in_ball(cp, g, Rational(k, 9)).count;
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("radius threshold is exact at the boundary") {
    CHECK(radius_threshold(Rational(3, 8), 8) == 3);
    CHECK(radius_threshold(parse_rational("0.375"), 8) == 3);
    CHECK(radius_threshold(Rational(3, 8) - Rational(1, 1000000), 8) == 2);
    CHECK(radius_threshold(Rational(5), 8) == 8);
}

TEST_CASE("sampled max list size") {
    const CodeParams cp{2, 3, 1};
    const auto a = sampled_max_list_size(cp, Rational(1, 2) - Rational(1, 8), 100, 7);
    const auto b = sampled_max_list_size(cp, Rational(1, 2) - Rational(1, 8), 100, 7, false, {}, 8);
    CHECK(a.max_count == b.max_count);
    CHECK(a.sample_counts == b.sample_counts);
    CHECK(a.argmax == b.argmax);
    CHECK(a.max_count <= code_size(cp));
    CHECK(a.sample_counts.size() == 100);
    CHECK(a.sample_counts[a.argmax_id] == a.max_count);

    const auto unique = sampled_max_list_size(cp, Rational(1, 8), 20, 1, true);
    CHECK(unique.max_count == 1);
    const auto cw_only = sampled_max_list_size(cp, Rational(1, 8), 0, 1, true);
    CHECK(cw_only.sample_counts.empty());
    CHECK(cw_only.codeword_counts.size() == 16);
    for (auto c : cw_only.codeword_counts) CHECK(c == 1);
    CHECK(cw_only.argmax_is_codeword);
}

TEST_CASE("tightness family") {
    const auto fam = tightness_family(3, 3, 2, 4);
    CHECK(fam.size() == 9);
    CHECK(tightness_family_size(3, 3, 2, 4) == 9);
    for (const auto& f : fam) {
        CHECK(degree(f) <= 3);
        CHECK(distance(table_of(f), Word::zeros(3, 4, Alphabet::field())) == Rational(2, 9));
    }
    const auto two = tightness_family(2, 2, 2, 4);
    CHECK(two.size() == 2);
    const auto fam5 = tightness_family(2, 2, 1, 5);
    CHECK(fam5.size() == tightness_family_size(2, 2, 1, 5));
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& f : fam5) {
        CHECK(degree(f) <= 2);
        const auto w = table_of(f);
        distinct.emplace(w.values().begin(), w.values().end());
        CHECK(distance(w, Word::zeros(2, 5, Alphabet::field())) == delta(2, 1) * Rational(1, 2));
    }
    CHECK(distinct.size() == fam5.size());
    CHECK_THROWS_AS(tightness_family(2, 1, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(tightness_family(3, 4, 4, 3), std::invalid_argument);
}
