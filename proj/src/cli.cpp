#include "rmlab/cli.hpp"

#include <chrono>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rmlab/polynomial.hpp"
#include "rmlab/regularity.hpp"
#include "rmlab/rmcode.hpp"
#include "rmlab/verify.hpp"

namespace rmlab::cli {

namespace {

using nlohmann::json;

struct Common {
    std::string format = "text";
    unsigned jobs = 1;
    std::string limits;
    std::string config;
    bool timing = false;
};

struct CodeOpts {
    std::uint32_t p = 2;
    int n = 1;
    int d = 0;
    CodeParams params() const {
        CodeParams cp{p, n, d};
        cp.validate();
        return cp;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--limits", c.limits, "Feasibility caps, e.g. max_table=1000000,max_cases=10000000");
    sub->add_option("--config", c.config, "Config file (run and limits directives)");
    sub->add_flag("--timing", c.timing, "Include elapsed times in reports");
}

void add_code(CLI::App* sub, CodeOpts& c) {
    sub->add_option("--p", c.p, "Field size (prime)")->required();
    sub->add_option("--n", c.n, "Number of variables")->required();
    sub->add_option("--d", c.d, "Degree")->required();
}

// Limits precedence: defaults < RMLAB_LIMITS < config file < --limits.
RunConfig resolve(const Common& c) {
    Limits limits;
    if (const char* env = std::getenv("RMLAB_LIMITS"); env && *env) limits = parse_limits(env, limits);
    RunConfig config = c.config.empty() ? RunConfig{limits, {}} : load_config(c.config, limits);
    if (!c.limits.empty()) config.limits = parse_limits(c.limits, config.limits);
    return config;
}

void csv_header(std::ostream& out, std::string_view command, std::string_view columns) {
    out << "# rm-list-lab v1 " << command << '\n' << columns << '\n';
}

std::string fixed9(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(9) << v;
    return os.str();
}

// Inline polynomial text uses ';' for line breaks.
NonclassicalPoly inline_poly(std::string text) {
    std::replace(text.begin(), text.end(), ';', '\n');
    return poly_from_text(text);
}

Word load_word(const std::string& inline_text, const std::string& path, const std::string& poly, const Limits& L) {
    if (!inline_text.empty()) return word_from_text(inline_text);
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open word file " + path);
        return read_word(in);
    }
    if (!poly.empty()) return to_word(inline_poly(poly), L);
    throw std::invalid_argument("one of --word, --word-file or --poly is required");
}

// ---- subcommands ------------------------------------------------------------

int min_distance_cmd(const Common& c, const CodeOpts& o, bool pairwise, std::ostream& out) {
    const auto cfg = resolve(c);
    const auto cp = o.params();
    const Rational md = pairwise ? min_distance_pairwise(cp, cfg.limits) : min_distance_bruteforce(cp, cfg.limits, c.jobs);
    const Rational dl = delta(cp.p, cp.d);
    const std::string j = dl <= Rational(cp.p - 1, cp.p) ? fixed9(johnson_radius(cp.p, dl)) : "";
    if (c.format == "text") {
        out << to_string(md) << '\n';
    } else if (c.format == "csv") {
        csv_header(out, "min-distance", "p,n,d,min_distance,delta,johnson_radius");
        out << cp.p << ',' << cp.n << ',' << cp.d << ',' << to_string(md) << ',' << to_string(dl) << ',' << j << '\n';
    } else {
        json r = {{"p", cp.p}, {"n", cp.n}, {"d", cp.d}, {"min_distance", to_string(md)}, {"delta", to_string(dl)}};
        r["johnson_radius"] = j.empty() ? json(nullptr) : json(j);
        out << r.dump() << '\n';
    }
    return Success;
}

struct ListOpts {
    std::string radius;
    std::string center = "random";
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    std::uint64_t codeword = 0;
    std::string word;
    bool members = false;
};

int list_size_cmd(const Common& c, const CodeOpts& o, const ListOpts& l, std::ostream& out) {
    const auto cfg = resolve(c);
    const auto cp = o.params();
    const Rational eta = parse_rational(l.radius);
    std::vector<std::pair<std::uint64_t, Word>> centers;
    if (l.center == "random") {
        Rng rng(l.seed);
        for (std::uint64_t s = 0; s < l.samples; ++s) centers.emplace_back(s, random_word(cp.p, cp.n, rng));
    } else if (l.center == "zero") {
        centers.emplace_back(0, Word::zeros(cp.p, cp.n, Alphabet::field()));
    } else if (l.center == "codeword") {
        const CodeEnumerator code(cp, cfg.limits);
        if (l.codeword >= code.size()) throw std::invalid_argument("--codeword index out of range");
        centers.emplace_back(l.codeword, code.word(l.codeword));
    } else {
        const auto w = word_from_text(l.word);
        if (w.prime() != cp.p || w.num_vars() != cp.n || !w.alphabet().is_field())
            throw std::invalid_argument("--word does not match the code parameters");
        centers.emplace_back(0, w);
    }
    if (c.format == "csv") csv_header(out, "list-size", "p,n,d,radius,center_id,count");
    for (const auto& [id, center] : centers) {
        const auto r = list_in_ball(cp, center, eta, cfg.limits, c.jobs);
        if (c.format == "text") {
            out << "center " << id << ": " << r.count << '\n';
            if (l.members)
                for (const auto& m : r.members) out << "  " << pretty(m) << '\n';
        } else if (c.format == "csv") {
            out << cp.p << ',' << cp.n << ',' << cp.d << ',' << to_string(eta) << ',' << id << ',' << r.count << '\n';
        } else {
            auto j = to_json(r);
            j["center_id"] = id;
            if (!l.members) j.erase("members");
            out << j.dump() << '\n';
        }
    }
    return Success;
}

int max_list_cmd(const Common& c, const CodeOpts& o, const ListOpts& l, bool codeword_centers, std::ostream& out) {
    const auto cfg = resolve(c);
    const auto cp = o.params();
    const Rational eta = parse_rational(l.radius);
    const auto r = sampled_max_list_size(cp, eta, l.samples, l.seed, codeword_centers, cfg.limits, c.jobs);
    const std::string kind = r.argmax_is_codeword ? "codeword" : "sample";
    if (c.format == "text") {
        out << r.max_count << '\n';
    } else if (c.format == "csv") {
        csv_header(out, "max-list", "p,n,d,radius,samples,codeword_centers,max_count,argmax_kind,argmax_id");
        out << cp.p << ',' << cp.n << ',' << cp.d << ',' << to_string(eta) << ',' << l.samples << ','
            << (codeword_centers ? 1 : 0) << ',' << r.max_count << ',' << kind << ',' << r.argmax_id << '\n';
    } else {
        out << json{{"p", cp.p},
                    {"n", cp.n},
                    {"d", cp.d},
                    {"eta", to_string(eta)},
                    {"samples", l.samples},
                    {"seed", l.seed},
                    {"codeword_centers", codeword_centers},
                    {"max_count", r.max_count},
                    {"argmax_kind", kind},
                    {"argmax_id", r.argmax_id},
                    {"sample_counts", r.sample_counts},
                    {"codeword_counts", r.codeword_counts}}
                   .dump()
            << '\n';
    }
    return Success;
}

int tightness_cmd(const Common& c, std::uint32_t p, int d, int e, int n, bool members, std::ostream& out) {
    const auto cfg = resolve(c);
    require_prime(p);
    const auto family = tightness_family(p, d, e, n, cfg.limits);
    const auto formula = tightness_family_size(p, d, e, n);
    const Rational target = delta(p, e) * (Rational(1) - Rational(1, p));
    const auto zero = Word::zeros(p, n, Alphabet::field());
    std::vector<Rational> dists;
    bool on_radius = true;
    for (const auto& f : family) {
        dists.push_back(distance(to_field_word(f, cfg.limits), zero));
        on_radius = on_radius && dists.back() == target;
    }
    if (c.format == "text") {
        out << "members " << family.size() << "\nformula " << formula << "\nradius " << to_string(target)
            << "\nall_on_radius " << (on_radius ? "yes" : "no") << '\n';
        if (members)
            for (std::size_t i = 0; i < family.size(); ++i)
                out << to_string(dists[i]) << "  " << pretty(family[i]) << '\n';
    } else if (c.format == "csv") {
        if (members) {
            csv_header(out, "tightness", "member,distance,polynomial");
            for (std::size_t i = 0; i < family.size(); ++i)
                out << i << ',' << to_string(dists[i]) << ',' << pretty(family[i]) << '\n';
        } else {
            csv_header(out, "tightness", "p,d,e,n,members,formula,radius,all_on_radius");
            out << p << ',' << d << ',' << e << ',' << n << ',' << family.size() << ',' << formula << ','
                << to_string(target) << ',' << (on_radius ? 1 : 0) << '\n';
        }
    } else {
        json j = {{"p", p}, {"d", d}, {"e", e}, {"n", n}, {"members", family.size()}, {"formula", formula},
                  {"radius", to_string(target)}, {"all_on_radius", on_radius}};
        if (members) {
            j["polynomials"] = json::array();
            for (const auto& f : family) j["polynomials"].push_back(to_text(f));
        }
        out << j.dump() << '\n';
    }
    return Success;
}

struct WeakRegOpts {
    std::string eps;
    std::uint64_t seed = 0;
    std::string word;
    bool one_sided = false;
};

int weak_reg_cmd(const Common& c, const CodeOpts& o, const WeakRegOpts& w, std::ostream& out) {
    const auto cfg = resolve(c);
    const auto cp = o.params();
    const Rational eps = parse_rational(w.eps);
    Rng rng(w.seed);
    const Word g = w.word.empty() ? random_word(cp.p, cp.n, rng) : word_from_text(w.word);
    if (g.prime() != cp.p || g.num_vars() != cp.n) throw std::invalid_argument("--word does not match --p/--n");
    const CodeEnumerator code(cp, cfg.limits);
    std::vector<Word> F;
    for (std::uint64_t i = 0; i < code.size(); ++i) F.push_back(code.word(i));
    DecompositionResult dec;
    json extra = json::object();
    if (w.one_sided) {
        const auto r = one_sided_regularize(g, F, eps);
        dec = r.decomposition;
        // worst margin agreement(Gamma_f o B_H, f) - agreement(g, f) + eps over all f
        Rational worst = 0;
        std::size_t worst_f = 0;
        for (std::size_t i = 0; i < F.size(); ++i) {
            const Rational lhs = Rational(1) - distance(r.composed[i], F[i]);
            const Rational margin = lhs - (Rational(1) - distance(g, F[i])) + eps;
            if (i == 0 || margin < worst) worst = margin, worst_f = i;
        }
        extra = {{"min_margin", to_string(worst)}, {"min_margin_f", worst_f}, {"holds", worst >= 0}};
    } else {
        std::vector<SimplexFunction> Fs;
        for (const auto& f : F) Fs.push_back(SimplexFunction::from_word(f));
        const auto gs = SimplexFunction::from_word(g);
        dec = weak_regularize(gs, Fs, eps);
        const auto cert = certify_decomposition(gs, Fs, dec);
        extra = {{"max_gap", to_string(cert.max_gap)}, {"worst", cert.worst}, {"holds", cert.holds}};
    }
    if (c.format == "text") {
        out << "chosen";
        for (auto i : dec.chosen) out << ' ' << i;
        if (dec.chosen.empty()) out << " none";
        out << "\natoms " << dec.factor.num_atoms() << "\nenergy " << to_string(dec.initial_energy);
        for (const auto& s : dec.trace) out << " -> " << to_string(s.energy);
        out << '\n';
        for (const auto& [k, v] : extra.items()) out << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else if (c.format == "csv") {
        csv_header(out, "weak-reg", "step,violator,energy");
        out << "0,," << to_string(dec.initial_energy) << '\n';
        for (std::size_t i = 0; i < dec.trace.size(); ++i)
            out << i + 1 << ',' << dec.trace[i].violator << ',' << to_string(dec.trace[i].energy) << '\n';
    } else {
        auto j = to_json(dec);
        j["check"] = extra;
        j["one_sided"] = w.one_sided;
        out << j.dump() << '\n';
    }
    return Success;
}

int rank_cmd(const Common& c, const std::string& word, const std::string& word_file, const std::string& poly, int d,
             int budget, std::ostream& out) {
    const auto cfg = resolve(c);
    const auto f = load_word(word, word_file, poly, cfg.limits);
    const auto r = rank_bruteforce(f, d, budget, cfg.limits);
    const char* kind = r.kind == RankValue::Kind::Exact ? "exact" : r.kind == RankValue::Kind::Infinity ? "infinity" : "lower_bound";
    if (c.format == "text") {
        out << r.to_string() << '\n';
        for (const auto& w : r.witnesses) out << "  " << pretty(w) << '\n';
    } else if (c.format == "csv") {
        csv_header(out, "rank", "d,budget,rank,kind,cases");
        out << d << ',' << budget << ',' << r.to_string() << ',' << kind << ',' << r.cases << '\n';
    } else {
        json j = {{"d", d}, {"budget", budget}, {"rank", r.to_string()}, {"kind", kind}, {"cases", r.cases},
                  {"witnesses", json::array()}};
        for (const auto& w : r.witnesses) j["witnesses"].push_back(to_text(w));
        out << j.dump() << '\n';
    }
    return Success;
}

struct AtomsOpts {
    std::vector<std::string> polys;
    std::string refine;
    int max_iter = 5;
    int rank_budget = 2;
};

int atoms_cmd(const Common& c, const AtomsOpts& a, std::ostream& out) {
    const auto cfg = resolve(c);
    PolyFactor B;
    for (const auto& text : a.polys) B.polys.push_back(inline_poly(text));
    B.p = B.polys.front().prime();
    B.n = B.polys.front().num_vars();
    for (const auto& f : B.polys)
        if (f.prime() != B.p || f.num_vars() != B.n) throw std::invalid_argument("--poly arguments disagree on p or n");
    std::optional<RefineReport> refined;
    if (!a.refine.empty()) {
        refined = refine_to_uniform(B, parse_rational(a.refine), a.max_iter, a.rank_budget, cfg.limits);
        B = refined->factor;
    }
    const auto factor = B.factor(cfg.limits);
    const auto dist = atom_distribution(factor);
    const auto uni = atom_uniformity(factor);
    auto tuple_text = [](const std::vector<std::uint32_t>& t) {
        std::string s;
        for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
        return s;
    };
    if (c.format == "text") {
        out << "definers " << factor.num_definers() << "\nnominal_atoms " << factor.nominal_atoms() << "\natoms "
            << factor.num_atoms() << "\nmax_deviation " << to_string(uni.max_deviation) << '\n';
        for (const auto& [t, pr] : dist) out << "  (" << tuple_text(t) << ") " << to_string(pr) << '\n';
        if (refined) {
            out << "refined " << (refined->achieved ? "yes" : "no") << " after " << refined->iterations << " iterations\n";
            for (const auto& s : refined->steps) out << "  " << s << '\n';
            for (const auto& f : B.polys) out << "  definer " << pretty(f) << '\n';
        }
    } else if (c.format == "csv") {
        csv_header(out, "atoms", "atom,probability");
        for (const auto& [t, pr] : dist) out << tuple_text(t) << ',' << to_string(pr) << '\n';
    } else {
        json j = {{"definers", factor.num_definers()},
                  {"nominal_atoms", factor.nominal_atoms().str()},
                  {"atoms", json::array()},
                  {"max_deviation", to_string(uni.max_deviation)},
                  {"worst_atom", uni.worst_atom}};
        for (const auto& [t, pr] : dist) j["atoms"].push_back({{"atom", t}, {"probability", to_string(pr)}});
        if (refined) {
            j["refine"] = {{"achieved", refined->achieved}, {"iterations", refined->iterations}, {"steps", refined->steps}};
            j["polynomials"] = json::array();
            for (const auto& f : B.polys) j["polynomials"].push_back(to_text(f));
        }
        out << j.dump() << '\n';
    }
    return Success;
}

int status_code(const std::vector<ClaimReport>& reports) {
    bool infeasible = false;
    for (const auto& r : reports) {
        if (r.status == ClaimStatus::Fail) return ClaimFailed;
        infeasible = infeasible || r.status == ClaimStatus::Infeasible;
    }
    return infeasible ? Infeasible : Success;
}

void emit_reports(const Common& c, std::string_view command, const std::vector<ClaimReport>& reports,
                  std::ostream& out) {
    if (c.format == "csv") {
        csv_header(out, command, "claimId,status,casesChecked,elapsedMs,tag");
        for (const auto& r : reports) {
            out << to_string(r.claim) << ',' << to_string(r.status) << ',' << r.cases_checked << ',';
            if (c.timing) out << std::fixed << std::setprecision(3) << r.elapsed_ms << std::defaultfloat;
            out << ',' << r.tag << '\n';
        }
    } else if (c.format == "json") {
        for (const auto& r : reports) out << to_json(r, c.timing).dump() << '\n';
    } else {
        for (const auto& r : reports) {
            out << to_string(r.claim) << ' ' << to_string(r.status) << " cases=" << r.cases_checked;
            if (!r.tag.empty()) out << " tag=" << r.tag;
            if (c.timing) out << " elapsed_ms=" << std::fixed << std::setprecision(3) << r.elapsed_ms << std::defaultfloat;
            out << '\n';
            if (!r.message.empty()) out << "  " << r.message << '\n';
            if (!r.counterexample.is_null()) out << "  counterexample " << r.counterexample.dump() << '\n';
        }
    }
}

// Extra "--key value" / "--key=value" pairs become claim parameters.
ParamMap claim_params(const std::vector<std::string>& extras) {
    ParamMap params;
    for (std::size_t i = 0; i < extras.size(); ++i) {
        const auto& a = extras[i];
        if (a.rfind("--", 0) != 0 || a.size() == 2) throw CLI::ExtrasError({a});
        std::string key = a.substr(2), value;
        if (const auto eq = key.find('='); eq != std::string::npos) {
            value = key.substr(eq + 1);
            key.erase(eq);
        } else {
            if (i + 1 == extras.size()) throw CLI::ArgumentMismatch("--" + key + " needs a value");
            value = extras[++i];
        }
        params[key] = value;
    }
    return params;
}

int verify_cmd(const Common& c, const std::string& claim, const std::vector<std::string>& extras, std::ostream& out,
               std::ostream& err) {
    const auto cfg = resolve(c);
    const auto params = claim_params(extras);
    const auto report = run_check(parse_claim(claim), params, cfg.limits);
    emit_reports(c, "verify", {report}, out);
    if (report.status == ClaimStatus::Fail && !recheck_counterexample(report, cfg.limits))
        err << "warning: counterexample did not recheck\n";
    return status_code({report});
}

int verify_all_cmd(const Common& c, std::ostream& out, std::ostream& err) {
    auto cfg = resolve(c);
    if (cfg.runs.empty()) cfg.runs = parse_config(default_config_text()).runs;
    const auto reports = run_all(cfg, c.jobs);
    emit_reports(c, "verify-all", reports, out);
    err << csv_summary(reports);
    return status_code(reports);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reed-Muller list-decoding lab", "rm-list-lab"};
    app.require_subcommand(1);
    Common common;
    CodeOpts code;
    ListOpts list;
    WeakRegOpts weak;
    AtomsOpts atoms;
    bool pairwise = false, codeword_centers = false, members = false;
    std::uint32_t tp = 2;
    int td = 1, te = 1, tn = 1, rank_d = 1, budget = 2;
    std::string word, word_file, poly, claim;

    auto* md = app.add_subcommand("min-distance", "Exhaustive minimum distance of RM(p,n,d)");
    add_common(md, common);
    add_code(md, code);
    md->add_flag("--pairwise", pairwise, "Use the quadratic pairwise search");

    auto* ls = app.add_subcommand("list-size", "Codewords within a radius of chosen centers");
    add_common(ls, common);
    add_code(ls, code);
    ls->add_option("--radius", list.radius, "Normalized radius num/den")->required();
    ls->add_option("--center", list.center, "Center kind")->check(CLI::IsMember({"random", "zero", "codeword", "word"}));
    ls->add_option("--samples", list.samples, "Random centers");
    ls->add_option("--seed", list.seed, "Seed for random centers");
    ls->add_option("--codeword", list.codeword, "Codeword index for --center codeword");
    ls->add_option("--word", list.word, "Word text for --center word");
    ls->add_flag("--members", list.members, "Print list members");

    auto* ml = app.add_subcommand("max-list", "Sampled maximum list size");
    add_common(ml, common);
    add_code(ml, code);
    ml->add_option("--radius", list.radius, "Normalized radius num/den")->required();
    ml->add_option("--samples", list.samples, "Random centers");
    ml->add_option("--seed", list.seed, "Seed for random centers");
    ml->add_flag("--codeword-centers", codeword_centers, "Also center a ball at every codeword");

    auto* tg = app.add_subcommand("tightness", "Lower-bound family at radius delta(e)(1-1/p)");
    add_common(tg, common);
    tg->add_option("--p", tp, "Field size (prime)")->required();
    tg->add_option("--d", td, "Code degree")->required();
    tg->add_option("--e", te, "Family degree e <= d")->required();
    tg->add_option("--n", tn, "Number of variables")->required();
    tg->add_flag("--members", members, "List the members");

    auto* wr = app.add_subcommand("weak-reg", "Weak regularity against all codewords of RM(p,n,d)");
    add_common(wr, common);
    add_code(wr, code);
    wr->add_option("--eps", weak.eps, "Accuracy num/den")->required();
    wr->add_option("--seed", weak.seed, "Seed for the random word g");
    wr->add_option("--word", weak.word, "Explicit word text for g");
    wr->add_flag("--one-sided", weak.one_sided, "Run the one-sided variant");

    auto* rk = app.add_subcommand("rank", "Exhaustive degree-d rank of a function");
    add_common(rk, common);
    rk->add_option("--word", word, "Word text");
    rk->add_option("--word-file", word_file, "Word file");
    rk->add_option("--poly", poly, "Polynomial text, ';' separating lines");
    rk->add_option("--d", rank_d, "Rank degree d")->required();
    rk->add_option("--budget", budget, "Largest rank searched");

    auto* at = app.add_subcommand("atoms", "Atom distribution of a polynomial factor");
    add_common(at, common);
    at->add_option("--poly", atoms.polys, "Definer polynomial, ';' separating lines (repeatable)")->required();
    at->add_option("--refine", atoms.refine, "Refine toward uniformity with this eps");
    at->add_option("--max-iter", atoms.max_iter, "Refinement iterations");
    at->add_option("--rank-budget", atoms.rank_budget, "Rank budget for refinement");

    auto* vf = app.add_subcommand("verify", "Run one claim checker; other --key value pairs are its parameters");
    add_common(vf, common);
    vf->add_option("--claim", claim, "Claim id")->required();
    vf->allow_extras();

    auto* va = app.add_subcommand("verify-all", "Run every configured claim checker");
    add_common(va, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return UsageError;
    }
    auto* sub = app.get_subcommands().front();
    try {
        if (sub == md) return min_distance_cmd(common, code, pairwise, out);
        if (sub == ls) return list_size_cmd(common, code, list, out);
        if (sub == ml) return max_list_cmd(common, code, list, codeword_centers, out);
        if (sub == tg) return tightness_cmd(common, tp, td, te, tn, members, out);
        if (sub == wr) return weak_reg_cmd(common, code, weak, out);
        if (sub == rk) return rank_cmd(common, word, word_file, poly, rank_d, budget, out);
        if (sub == at) return atoms_cmd(common, atoms, out);
        if (sub == vf) return verify_cmd(common, claim, vf->remaining(), out, err);
        if (sub == va) return verify_all_cmd(common, out, err);
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return Infeasible;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << sub->help();
        return UsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n' << sub->help();
        return UsageError;
    } catch (const NotAPolynomial& e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
    return UsageError;
}

}  // namespace rmlab::cli
