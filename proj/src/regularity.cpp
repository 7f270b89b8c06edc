#include "rmlab/regularity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rmlab {

SimplexValue SimplexValue::point_mass(std::uint32_t letter, std::size_t alphabet) {
    if (letter >= alphabet) throw std::invalid_argument("point mass letter outside the alphabet");
    SimplexValue v{std::vector<Rational>(alphabet, Rational(0))};
    v.weights[letter] = 1;
    return v;
}

SimplexValue SimplexValue::uniform(std::size_t alphabet) {
    if (alphabet == 0) throw std::invalid_argument("empty alphabet");
    return {std::vector<Rational>(alphabet, Rational(1, static_cast<long long>(alphabet)))};
}

bool SimplexValue::is_valid() const {
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) return false;
        total += w;
    }
    return total == 1;
}

std::optional<std::uint32_t> SimplexValue::letter() const {
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights[i] == 1) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

SimplexFunction::SimplexFunction(std::size_t alphabet, std::vector<SimplexValue> table)
    : alphabet_(alphabet), table_(std::move(table)) {
    if (alphabet_ == 0) throw std::invalid_argument("empty alphabet");
    for (const auto& v : table_) {
        if (v.weights.size() != alphabet_) throw std::invalid_argument("simplex value over the wrong alphabet");
        if (!v.is_valid()) throw std::invalid_argument("simplex value weights must be >= 0 and sum to 1");
    }
}

SimplexFunction SimplexFunction::deterministic(std::span<const std::uint32_t> letters, std::size_t alphabet) {
    std::vector<SimplexValue> table;
    table.reserve(letters.size());
    for (auto l : letters) table.push_back(SimplexValue::point_mass(l, alphabet));
    return SimplexFunction(alphabet, std::move(table));
}

SimplexFunction SimplexFunction::from_word(const Word& w) {
    return deterministic(w.values(), static_cast<std::size_t>(w.alphabet_size()));
}

bool SimplexFunction::is_deterministic() const {
    return std::all_of(table_.begin(), table_.end(), [](const SimplexValue& v) { return v.letter().has_value(); });
}

namespace {

void require_same_shape(const SimplexFunction& f, const SimplexFunction& g) {
    if (f.domain_size() != g.domain_size() || f.alphabet_size() != g.alphabet_size())
        throw std::invalid_argument("simplex functions of different shape");
}

Rational inner(const SimplexValue& a, const SimplexValue& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.weights.size(); ++i)
        if (a.weights[i] != 0 && b.weights[i] != 0) s += a.weights[i] * b.weights[i];
    return s;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

Rational agreement_prob(const SimplexFunction& f, const SimplexFunction& g) {
    require_same_shape(f, g);
    if (f.domain_size() == 0) throw std::invalid_argument("empty domain");
    Rational s = 0;
    for (std::size_t x = 0; x < f.domain_size(); ++x) s += inner(f[x], g[x]);
    return s / Rational(static_cast<long long>(f.domain_size()));
}

Rational energy(const SimplexFunction& f) {
    if (f.domain_size() == 0) throw std::invalid_argument("empty domain");
    Rational s = 0;
    for (std::size_t x = 0; x < f.domain_size(); ++x) s += inner(f[x], f[x]);
    return s / Rational(static_cast<long long>(f.domain_size()));
}

Factor::Factor(std::size_t domain_size) : atom_of_(domain_size, 0) { build(); }

Factor::Factor(std::vector<std::vector<std::uint32_t>> definers, std::vector<std::uint64_t> alphabets)
    : definers_(std::move(definers)), alphabets_(std::move(alphabets)) {
    if (definers_.size() != alphabets_.size()) throw std::invalid_argument("one alphabet per definer");
    if (definers_.empty()) throw std::invalid_argument("use Factor(domain_size) for the trivial factor");
    const std::size_t size = definers_.front().size();
    for (std::size_t i = 0; i < definers_.size(); ++i) {
        if (definers_[i].size() != size) throw std::invalid_argument("definers on different domains");
        for (auto v : definers_[i])
            if (v >= alphabets_[i]) throw std::invalid_argument("definer value outside its alphabet");
    }
    atom_of_.assign(size, 0);
    build();
}

Factor Factor::from_words(const std::vector<Word>& definers) {
    if (definers.empty()) throw std::invalid_argument("from_words needs at least one definer");
    std::vector<std::vector<std::uint32_t>> tables;
    std::vector<std::uint64_t> alphabets;
    for (const auto& w : definers) {
        if (w.prime() != definers.front().prime() || w.num_vars() != definers.front().num_vars())
            throw std::invalid_argument("definers on different domains");
        tables.emplace_back(w.values().begin(), w.values().end());
        alphabets.push_back(w.alphabet_size());
    }
    return Factor(std::move(tables), std::move(alphabets));
}

Factor Factor::from_simplex(const std::vector<const SimplexFunction*>& definers, std::size_t domain_size) {
    if (definers.empty()) return Factor(domain_size);
    std::vector<std::vector<std::uint32_t>> tables;
    std::vector<std::uint64_t> alphabets;
    for (const auto* h : definers) {
        if (h->domain_size() != domain_size) throw std::invalid_argument("definer on a different domain");
        std::set<SimplexValue> distinct(h->table().begin(), h->table().end());
        std::vector<SimplexValue> ordered(distinct.begin(), distinct.end());
        std::vector<std::uint32_t> letters(domain_size);
        for (std::size_t x = 0; x < domain_size; ++x)
            letters[x] = static_cast<std::uint32_t>(
                std::lower_bound(ordered.begin(), ordered.end(), (*h)[x]) - ordered.begin());
        tables.push_back(std::move(letters));
        alphabets.push_back(ordered.size());
    }
    return Factor(std::move(tables), std::move(alphabets));
}

void Factor::build() {
    const std::size_t size = atom_of_.size();
    std::map<std::vector<std::uint32_t>, std::size_t> ids;
    std::vector<std::vector<std::uint32_t>> keys(size);
    for (std::size_t x = 0; x < size; ++x) {
        keys[x].reserve(definers_.size());
        for (const auto& d : definers_) keys[x].push_back(d[x]);
        ids.emplace(keys[x], 0);
    }
    tuples_.clear();
    std::size_t next = 0;
    for (auto& [key, id] : ids) {
        id = next++;
        tuples_.push_back(key);
    }
    sizes_.assign(tuples_.size(), 0);
    for (std::size_t x = 0; x < size; ++x) {
        atom_of_[x] = ids[keys[x]];
        ++sizes_[atom_of_[x]];
    }
}

BigInt Factor::nominal_atoms() const {
    BigInt n = 1;
    for (auto a : alphabets_) n *= a;
    return n;
}

std::optional<std::size_t> Factor::find_atom(const std::vector<std::uint32_t>& tuple) const {
    const auto it = std::lower_bound(tuples_.begin(), tuples_.end(), tuple);
    if (it == tuples_.end() || *it != tuple) return std::nullopt;
    return static_cast<std::size_t>(it - tuples_.begin());
}

bool Factor::is_measurable(std::span<const std::uint32_t> values) const {
    if (values.size() != domain_size()) throw std::invalid_argument("table on a different domain");
    std::vector<std::int64_t> seen(num_atoms(), -1);
    for (std::size_t x = 0; x < values.size(); ++x) {
        auto& s = seen[atom_of_[x]];
        if (s < 0) s = values[x];
        else if (s != static_cast<std::int64_t>(values[x])) return false;
    }
    return true;
}

bool Factor::refines(const Factor& other) const {
    if (other.domain_size() != domain_size()) throw std::invalid_argument("factors on different domains");
    std::vector<std::int64_t> image(num_atoms(), -1);
    for (std::size_t x = 0; x < domain_size(); ++x) {
        auto& s = image[atom_of_[x]];
        const auto o = static_cast<std::int64_t>(other.atom_of(x));
        if (s < 0) s = o;
        else if (s != o) return false;
    }
    return true;
}

SimplexFunction conditional_expectation(const SimplexFunction& g, const Factor& B) {
    if (g.domain_size() != B.domain_size()) throw std::invalid_argument("factor on a different domain");
    const std::size_t Y = g.alphabet_size();
    std::vector<std::vector<Rational>> sums(B.num_atoms(), std::vector<Rational>(Y, Rational(0)));
    for (std::size_t x = 0; x < g.domain_size(); ++x)
        for (std::size_t y = 0; y < Y; ++y)
            if (g[x].weights[y] != 0) sums[B.atom_of(x)][y] += g[x].weights[y];
    std::vector<SimplexValue> averages(B.num_atoms());
    for (std::size_t a = 0; a < B.num_atoms(); ++a) {
        const Rational size(static_cast<long long>(B.atom_size(a)));
        for (auto& w : sums[a]) w /= size;
        averages[a].weights = std::move(sums[a]);
    }
    std::vector<SimplexValue> table;
    table.reserve(g.domain_size());
    for (std::size_t x = 0; x < g.domain_size(); ++x) table.push_back(averages[B.atom_of(x)]);
    return SimplexFunction(Y, std::move(table));
}

std::map<std::vector<std::uint32_t>, Rational> atom_distribution(const Factor& B) {
    std::map<std::vector<std::uint32_t>, Rational> out;
    const Rational N(static_cast<long long>(B.domain_size()));
    for (std::size_t a = 0; a < B.num_atoms(); ++a)
        out.emplace(B.tuple(a), Rational(static_cast<long long>(B.atom_size(a))) / N);
    return out;
}

AtomUniformity atom_uniformity(const Factor& B) {
    const Rational nominal = Rational(1) / Rational(B.nominal_atoms());
    const Rational N(static_cast<long long>(B.domain_size()));
    AtomUniformity best{Rational(-1), {}};
    auto consider = [&](const std::vector<std::uint32_t>& tuple, const Rational& dev) {
        if (dev > best.max_deviation || (dev == best.max_deviation && tuple < best.worst_atom)) {
            best.max_deviation = dev;
            best.worst_atom = tuple;
        }
    };
    for (std::size_t a = 0; a < B.num_atoms(); ++a)
        consider(B.tuple(a), abs(Rational(static_cast<long long>(B.atom_size(a))) / N - nominal));
    if (BigInt(B.num_atoms()) < B.nominal_atoms()) {
        // first empty nominal atom in lexicographic order
        std::vector<std::uint32_t> t(B.num_definers(), 0);
        for (;;) {
            if (!B.find_atom(t)) break;
            std::size_t i = t.size();
            while (i-- > 0) {
                if (++t[i] < B.alphabets()[i]) break;
                t[i] = 0;
            }
        }
        consider(t, nominal);
    }
    return best;
}

namespace {

Factor factor_of(const std::vector<SimplexFunction>& F, const std::vector<std::size_t>& chosen, std::size_t size) {
    std::vector<const SimplexFunction*> defs;
    for (auto i : chosen) defs.push_back(&F[i]);
    return Factor::from_simplex(defs, size);
}

}  // namespace

DecompositionResult weak_regularize(const SimplexFunction& g, const std::vector<SimplexFunction>& F,
                                    const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be > 0");
    for (const auto& f : F) require_same_shape(f, g);
    DecompositionResult result;
    result.eps = eps;
    std::vector<Rational> base(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) base[i] = agreement_prob(g, F[i]);

    result.factor = Factor(g.domain_size());
    result.expectation = conditional_expectation(g, result.factor);
    result.initial_energy = energy(result.expectation);
    for (;;) {
        std::optional<std::size_t> violator;
        for (std::size_t i = 0; i < F.size() && !violator; ++i)
            if (abs(agreement_prob(result.expectation, F[i]) - base[i]) > eps) violator = i;
        if (!violator) break;
        result.chosen.push_back(*violator);
        result.factor = factor_of(F, result.chosen, g.domain_size());
        result.expectation = conditional_expectation(g, result.factor);
        result.trace.push_back({energy(result.expectation), *violator});
    }
    result.gamma.resize(result.factor.num_atoms());
    result.atom_values.resize(result.factor.num_atoms());
    std::vector<bool> filled(result.factor.num_atoms(), false);
    for (std::size_t x = 0; x < g.domain_size(); ++x) {
        const auto a = result.factor.atom_of(x);
        if (filled[a]) continue;
        filled[a] = true;
        result.gamma[a] = result.expectation[x];
        for (auto i : result.chosen) result.atom_values[a].push_back(F[i][x]);
    }
    return result;
}

Certificate certify_decomposition(const SimplexFunction& g, const std::vector<SimplexFunction>& F,
                                  const DecompositionResult& result) {
    const auto gh = conditional_expectation(g, factor_of(F, result.chosen, g.domain_size()));
    Certificate cert{Rational(0), 0, true};
    for (std::size_t i = 0; i < F.size(); ++i) {
        const auto gap = abs(agreement_prob(gh, F[i]) - agreement_prob(g, F[i]));
        if (gap > cert.max_gap) {
            cert.max_gap = gap;
            cert.worst = i;
        }
    }
    cert.holds = cert.max_gap <= result.eps;
    return cert;
}

std::vector<std::uint32_t> plurality_table(const Factor& B, std::span<const std::uint32_t> f, std::size_t alphabet) {
    if (f.size() != B.domain_size()) throw std::invalid_argument("table on a different domain");
    std::vector<std::vector<std::size_t>> counts(B.num_atoms(), std::vector<std::size_t>(alphabet, 0));
    for (std::size_t x = 0; x < f.size(); ++x) ++counts[B.atom_of(x)][f[x]];
    std::vector<std::uint32_t> out(B.num_atoms());
    for (std::size_t a = 0; a < B.num_atoms(); ++a)
        out[a] = static_cast<std::uint32_t>(std::max_element(counts[a].begin(), counts[a].end()) - counts[a].begin());
    return out;
}

std::uint32_t OneSidedResult::gamma_value(std::size_t f, const std::vector<std::uint32_t>& tuple) const {
    const auto atom = decomposition.factor.find_atom(tuple);
    return atom ? gamma_f.at(f)[*atom] : 0;
}

OneSidedResult one_sided_regularize(const Word& g, const std::vector<Word>& F, const Rational& eps) {
    if (!g.alphabet().is_field()) throw std::invalid_argument("one-sided regularity needs F_p words");
    std::vector<SimplexFunction> family;
    for (const auto& f : F) {
        if (f.prime() != g.prime() || f.num_vars() != g.num_vars() || !(f.alphabet() == g.alphabet()))
            throw std::invalid_argument("family word of a different shape");
        family.push_back(SimplexFunction::from_word(f));
    }
    OneSidedResult out;
    out.decomposition = weak_regularize(SimplexFunction::from_word(g), family, eps);
    const auto& B = out.decomposition.factor;
    for (const auto& f : F) {
        auto table = plurality_table(B, f.values(), g.alphabet_size());
        std::vector<std::uint32_t> composed(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) composed[x] = table[B.atom_of(x)];
        out.composed.emplace_back(g.prime(), g.num_vars(), g.alphabet(), std::move(composed));
        out.gamma_f.push_back(std::move(table));
    }
    return out;
}

std::string RankValue::to_string() const {
    switch (kind) {
        case Kind::Exact: return std::to_string(value);
        case Kind::Infinity: return "inf";
        case Kind::LowerBound: return ">" + std::to_string(value);
    }
    return {};
}

namespace {

// First-occurrence relabeling: equal iff the tables induce the same partition.
std::vector<std::uint32_t> partition_labels(std::span<const std::uint32_t> t) {
    std::map<std::uint32_t, std::uint32_t> ids;
    std::vector<std::uint32_t> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = ids.emplace(t[i], static_cast<std::uint32_t>(ids.size())).first->second;
    return out;
}

std::vector<std::uint32_t> join(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = ids.emplace(std::pair{a[i], b[i]}, static_cast<std::uint32_t>(ids.size())).first->second;
    return out;
}

bool measurable(const std::vector<std::uint32_t>& labels, std::span<const std::uint32_t> f) {
    std::map<std::uint32_t, std::uint32_t> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto [it, fresh] = seen.emplace(labels[i], f[i]);
        if (!fresh && it->second != f[i]) return false;
    }
    return true;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

struct Candidate {
    std::vector<std::uint32_t> labels;
    NonclassicalPoly poly;
};

}  // namespace

RankValue rank_bruteforce(const Word& f, int d, int budget, const Limits& limits) {
    if (d < 1) throw std::invalid_argument("rank needs d >= 1");
    if (budget < 0) throw std::invalid_argument("rank budget must be >= 0");
    const std::uint32_t p = f.prime();
    const int n = f.num_vars();
    RankValue out;
    const bool constant =
        std::all_of(f.values().begin(), f.values().end(), [&](std::uint32_t v) { return v == f[0]; });
    if (constant) return out;  // rank 0
    if (d == 1) {
        out.kind = RankValue::Kind::Infinity;
        return out;
    }
    // all polynomials of degree <= d-1, deduplicated by the partition they induce
    const int maxDepth = (d - 1) / static_cast<int>(p - 1);
    const auto monos = canonical_monomials(p, n, d - 1, maxDepth);
    const auto polys = saturating_pow(p, monos.size());
    const auto work = polys == UINT64_MAX || polys > UINT64_MAX / f.size() ? UINT64_MAX : polys * f.size();
    limits.require_cases(work, "rank search candidate tables");
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    std::vector<Candidate> candidates;
    for (std::uint64_t code = 1; code < polys; ++code) {
        std::vector<std::pair<Monomial, std::int64_t>> terms;
        std::uint64_t rest = code;
        for (const auto& m : monos) {
            if (rest % p) terms.emplace_back(m, static_cast<std::int64_t>(rest % p));
            rest /= p;
        }
        auto poly = NonclassicalPoly::from_integer_terms(p, n, terms);
        auto labels = partition_labels(to_word(poly, limits).values());
        if (std::all_of(labels.begin(), labels.end(), [](auto v) { return v == 0; })) continue;
        if (index.emplace(labels, candidates.size()).second) candidates.push_back({std::move(labels), std::move(poly)});
    }
    out.cases = polys;
    // measurable w.r.t. the join of everything, or the rank is infinite
    std::vector<std::uint32_t> all(f.size(), 0);
    for (const auto& c : candidates) all = join(all, c.labels);
    if (!measurable(all, f.values())) {
        out.kind = RankValue::Kind::Infinity;
        return out;
    }
    BigInt combos = 0;
    for (int r = 1; r <= budget; ++r) combos += binomial(candidates.size(), static_cast<std::size_t>(r));
    combos *= f.size();
    limits.require_cases(combos > BigInt(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(combos),
                         "rank search combinations");

    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, const std::vector<std::uint32_t>&, int)> search =
        [&](std::size_t start, const std::vector<std::uint32_t>& labels, int left) -> bool {
        if (left == 0) {
            ++out.cases;
            return measurable(labels, f.values());
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(left) <= candidates.size(); ++i) {
            pick.push_back(i);
            if (search(i + 1, join(labels, candidates[i].labels), left - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int r = 1; r <= budget; ++r) {
        pick.clear();
        if (search(0, std::vector<std::uint32_t>(f.size(), 0), r)) {
            out.value = r;
            for (auto i : pick) out.witnesses.push_back(candidates[i].poly);
            return out;
        }
    }
    out.kind = RankValue::Kind::LowerBound;
    out.value = budget;
    return out;
}

Factor PolyFactor::factor(const Limits& limits) const {
    if (polys.empty()) return Factor(table_size(p, n, limits));
    std::vector<Word> words;
    for (const auto& f : polys) words.push_back(to_word(f, limits));
    return Factor::from_words(words);
}

namespace {

void check_poly_factor(const PolyFactor& B) {
    for (const auto& f : B.polys)
        if (f.prime() != B.p || f.num_vars() != B.n) throw std::invalid_argument("factor polynomial of a different shape");
}

}  // namespace

FactorRank factor_rank_bruteforce(const PolyFactor& B, int budget, const Limits& limits) {
    check_poly_factor(B);
    FactorRank best;
    best.rank.kind = RankValue::Kind::Infinity;
    if (B.polys.empty()) return best;
    std::vector<std::uint64_t> moduli;
    std::uint64_t total = 1;
    for (const auto& f : B.polys) {
        moduli.push_back(saturating_pow(B.p, static_cast<std::uint64_t>(depth(f) + 1)));
        total = total > UINT64_MAX / moduli.back() ? UINT64_MAX : total * moduli.back();
    }
    limits.require_cases(total, "factor rank coefficient combinations");
    auto better = [](const RankValue& a, const RankValue& b) {
        auto key = [](const RankValue& r) {
            // Exact r < LowerBound(budget) < Infinity
            if (r.kind == RankValue::Kind::Exact) return std::pair{0, r.value};
            if (r.kind == RankValue::Kind::LowerBound) return std::pair{1, r.value};
            return std::pair{2, 0};
        };
        return key(a) < key(b);
    };
    bool first = true;
    std::vector<std::uint64_t> a(B.polys.size(), 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::size_t i = a.size(); i-- > 0;) {
            a[i] = rest % moduli[i];
            rest /= moduli[i];
        }
        NonclassicalPoly h(B.p, B.n);
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto term = scalar_multiply(B.polys[i], a[i]);
            d = std::max(d, degree(term));
            h = h + term;
        }
        RankValue r;
        if (h.is_zero() || d == 0) {
            r.kind = RankValue::Kind::Exact;
            r.value = 0;
        } else {
            r = rank_bruteforce(to_word(h, limits), d, budget, limits);
        }
        if (first || better(r, best.rank)) {
            best.rank = r;
            best.combination = a;
            best.degree = d;
            first = false;
        }
        if (best.rank.kind == RankValue::Kind::Exact && best.rank.value == 0) break;
    }
    return best;
}

RefineReport refine_to_uniform(const PolyFactor& B, const Rational& eps, int maxIter, int rankBudget,
                               const Limits& limits) {
    if (eps <= 0) throw std::invalid_argument("eps must be > 0");
    check_poly_factor(B);
    RefineReport report;
    report.factor = B;
    for (;;) {
        report.deviation = atom_uniformity(report.factor.factor(limits)).max_deviation;
        if (report.deviation <= eps) {
            report.achieved = true;
            return report;
        }
        if (report.iterations >= maxIter) {
            report.steps.push_back("iteration limit reached");
            return report;
        }
        ++report.iterations;
        const auto fr = factor_rank_bruteforce(report.factor, rankBudget, limits);
        if (fr.rank.kind != RankValue::Kind::Exact) {
            report.steps.push_back("no low-rank combination found (rank " + fr.rank.to_string() + ")");
            return report;
        }
        std::optional<std::size_t> replace;
        for (std::size_t i = fr.combination.size(); i-- > 0;)
            if (fr.combination[i] % B.p != 0) {
                replace = i;
                break;
            }
        if (!replace) {
            report.steps.push_back("low-rank combination has no unit coefficient");
            return report;
        }
        auto& polys = report.factor.polys;
        std::string step = "replaced definer " + std::to_string(*replace) + " (rank " + fr.rank.to_string() +
                           " combination) by " + std::to_string(fr.rank.witnesses.size()) + " witness(es)";
        polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(*replace));
        for (const auto& w : fr.rank.witnesses) polys.push_back(w);
        report.steps.push_back(std::move(step));
    }
}

std::vector<NonclassicalPoly> tensorize(const std::vector<NonclassicalPoly>& polys) {
    std::vector<NonclassicalPoly> out;
    if (polys.empty()) return out;
    const int n = polys.front().num_vars();
    const int total = n * static_cast<int>(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].prime() != polys.front().prime() || polys[i].num_vars() != n)
            throw std::invalid_argument("tensorize needs polynomials over one p and n");
        out.push_back(embed_variables(polys[i], total, static_cast<int>(i) * n));
    }
    return out;
}

nlohmann::json to_json(const SimplexValue& v) {
    if (auto l = v.letter()) return *l;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : v.weights) w.push_back(to_string(x));
    return w;
}

nlohmann::json to_json(const DecompositionResult& result) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& s : result.trace) trace.push_back({{"energy", to_string(s.energy)}, {"violator", s.violator}});
    nlohmann::json gamma = nlohmann::json::array();
    for (std::size_t a = 0; a < result.gamma.size(); ++a) {
        nlohmann::json atom = nlohmann::json::array();
        for (const auto& v : result.atom_values[a]) atom.push_back(to_json(v));
        nlohmann::json dist = nlohmann::json::array();
        for (const auto& w : result.gamma[a].weights) dist.push_back(to_string(w));
        gamma.push_back({{"atom", atom}, {"dist", dist}});
    }
    return {{"eps", to_string(result.eps)},
            {"chosen", result.chosen},
            {"initial_energy", to_string(result.initial_energy)},
            {"trace", trace},
            {"gamma", gamma}};
}

}  // namespace rmlab
