// Acceptance criteria: one PASS/FAIL line each. Usage: acceptance [--criterion N]
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "rmlab/cli.hpp"
#include "rmlab/regularity.hpp"
#include "rmlab/rmcode.hpp"
#include "rmlab/verify.hpp"

using namespace rmlab;

namespace {

// Pinned tolerances and budgets.
constexpr double kMinDistanceSeconds = 60.0;
constexpr double kSz1Seconds = 600.0;
constexpr double kDeltaProductSeconds = 1.0;
constexpr double kJohnsonGap = 0.10;
constexpr double kJohnsonTolerance = 1e-9;
const Rational kRegularityEps(2, 5);
const Rational kEnergyStep(4, 25);
constexpr std::size_t kMaxChosen = 6;
constexpr int kRegularitySeeds = 100;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            else detail.str("");
            pass = false;
            detail << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string status_of(const ClaimReport& r) { return to_string(r.claim) + " " + to_string(r.status); }

void require_pass(Verdict& v, const ClaimReport& r, const std::string& label) {
    v.require(r.status == ClaimStatus::Pass, label + ": " + status_of(r) + (r.message.empty() ? "" : " (" + r.message + ")") +
                                                 (r.counterexample.is_null() ? "" : " cx=" + r.counterexample.dump()));
    if (r.status == ClaimStatus::Fail) v.require(recheck_counterexample(r), label + ": counterexample does not recheck");
}

void c1(Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CodeParams> cases{{2, 3, 1}, {2, 4, 1}, {2, 4, 2}, {2, 4, 3}, {3, 2, 1}, {3, 3, 2}, {3, 2, 2}, {5, 2, 1}};
    for (const auto& cp : cases) {
        const auto md = min_distance_bruteforce(cp, {}, 1);
        v.require(md == delta(cp.p, cp.d), "RM(" + std::to_string(cp.p) + "," + std::to_string(cp.n) + "," +
                                               std::to_string(cp.d) + ") gives " + to_string(md));
    }
    const double s = seconds_since(start);
    v.require(s < kMinDistanceSeconds, "took " + std::to_string(s) + " s");
    v.detail << cases.size() << " codes match delta(p,d) in " << s << " s";
}

std::vector<Word> rm_words(const CodeParams& cp) {
    const CodeEnumerator code(cp);
    std::vector<Word> F;
    for (std::uint64_t i = 0; i < code.size(); ++i) F.push_back(code.word(i));
    return F;
}

void c2(Verdict& v) {
    const auto F = rm_words({2, 3, 1});
    std::vector<SimplexFunction> Fs;
    for (const auto& f : F) Fs.push_back(SimplexFunction::from_word(f));
    std::size_t largest = 0;
    Rational smallest_step = 1;
    for (int seed = 0; seed < kRegularitySeeds; ++seed) {
        Rng rng(static_cast<std::uint64_t>(seed));
        const auto g = SimplexFunction::from_word(random_word(2, 3, rng));
        const auto r = weak_regularize(g, Fs, kRegularityEps);
        const auto cert = certify_decomposition(g, Fs, r);
        largest = std::max(largest, r.chosen.size());
        v.require(r.chosen.size() <= kMaxChosen, "seed " + std::to_string(seed) + ": |H| = " + std::to_string(r.chosen.size()));
        v.require(cert.holds && cert.max_gap <= kRegularityEps,
                  "seed " + std::to_string(seed) + ": full scan gap " + to_string(cert.max_gap));
        Rational prev = r.initial_energy;
        for (const auto& step : r.trace) {
            smallest_step = std::min(smallest_step, Rational(step.energy - prev));
            v.require(step.energy - prev >= kEnergyStep, "seed " + std::to_string(seed) + ": energy step " +
                                                             to_string(step.energy - prev));
            prev = step.energy;
        }
    }
    v.detail << kRegularitySeeds << " seeds, max |H| = " << largest << ", all 16 distinguishers within 2/5, min energy step "
             << to_string(smallest_step);
}

void c3(Verdict& v) {
    const auto F = rm_words({2, 3, 1});
    std::uint64_t violations = 0;
    Rational worst = 1;
    for (int seed = 0; seed < kRegularitySeeds; ++seed) {
        Rng rng(static_cast<std::uint64_t>(seed));
        const auto g = random_word(2, 3, rng);
        const auto r = one_sided_regularize(g, F, kRegularityEps);
        for (std::size_t i = 0; i < F.size(); ++i) {
            const Rational lhs = Rational(1) - distance(r.composed[i], F[i]);
            const Rational rhs = Rational(1) - distance(g, F[i]) - kRegularityEps;
            worst = std::min(worst, Rational(lhs - rhs));
            if (lhs < rhs) ++violations;
        }
    }
    v.require(violations == 0, std::to_string(violations) + " violations");
    v.detail << "0 violations over " << kRegularitySeeds << " seeds x 16 f, min slack " << to_string(worst);
}

void c4(Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t cases = 0;
    int runs = 0;
    auto one = [&](int p, int d, int n1, int n2) {
        const auto r = run_check(ClaimId::SZ1, {{"p", std::to_string(p)}, {"d", std::to_string(d)},
                                                {"n1", std::to_string(n1)}, {"n2", std::to_string(n2)}});
        require_pass(v, r, "p=" + std::to_string(p) + " d=" + std::to_string(d) + " n1=" + std::to_string(n1) +
                               " n2=" + std::to_string(n2));
        cases += r.cases_checked;
        ++runs;
    };
    for (int d = 0; d <= 2; ++d)
        for (int n1 = 1; n1 <= 2; ++n1)
            for (int n2 = 1; n2 <= 2; ++n2) one(2, d, n1, n2);
    for (int d = 0; d <= 2; ++d) one(3, d, 1, 1);
    const double s = seconds_since(start);
    v.require(s < kSz1Seconds, "took " + std::to_string(s) + " s");
    if (v.pass) v.detail << runs << " settings, " << cases << " (f1, f2) pairs in " << s << " s";
}

void c5(Verdict& v) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t cases = 0;
    for (int p : {2, 3, 5, 7}) {
        const auto r = run_check(ClaimId::DELTA_PRODUCT, {{"p", std::to_string(p)}, {"dmax", "30"}});
        require_pass(v, r, "p=" + std::to_string(p));
        cases += r.cases_checked;
    }
    const double s = seconds_since(start);
    v.require(s < kDeltaProductSeconds, "took " + std::to_string(s) + " s");
    if (v.pass) v.detail << cases << " exact checks in " << s << " s";
}

void c6(Verdict& v) {
    std::uint64_t cases = 0;
    int runs = 0;
    auto sweep = [&](int p, int maxRA, int kmax) {
        for (int r = 1; r <= maxRA; ++r)
            for (int A = 1; r * A <= maxRA; ++A)
                for (int k = 0; k <= kmax; ++k) {
                    const auto rep = run_check(ClaimId::LUCAS, {{"p", std::to_string(p)}, {"r", std::to_string(r)},
                                                                {"A", std::to_string(A)}, {"k", std::to_string(k)}});
                    require_pass(v, rep, "p=" + std::to_string(p) + " r=" + std::to_string(r) + " A=" + std::to_string(A) +
                                             " k=" + std::to_string(k));
                    cases += rep.cases_checked;
                    ++runs;
                }
    };
    sweep(2, 14, 2);
    sweep(3, 9, 1);
    if (v.pass) v.detail << runs << " settings, " << cases << " digit comparisons";
}

void c7(Verdict& v) {
    const auto r = run_check(ClaimId::SCALAR_DEGREE, {{"p", "2,3"}, {"nmax", "3"}, {"depth", "2"}, {"count", "1000"},
                                                      {"seed", "0"}, {"trials", "10000"}});
    require_pass(v, r, "SCALAR_DEGREE");
    v.detail << " | " << r.details.dump();
}

void c8(Verdict& v) {
    struct Case {
        int p, d, e, n, members;
        Rational radius;
    };
    for (const auto& c : {Case{2, 2, 1, 5, 16, Rational(1, 4)}, Case{3, 3, 2, 4, 9, Rational(2, 9)}}) {
        const auto r = run_check(ClaimId::THM2_FAMILY, {{"p", std::to_string(c.p)}, {"d", std::to_string(c.d)},
                                                        {"e", std::to_string(c.e)}, {"n", std::to_string(c.n)},
                                                        {"expect", std::to_string(c.members)}});
        const std::string label = "(" + std::to_string(c.p) + "," + std::to_string(c.d) + "," + std::to_string(c.e) +
                                  "," + std::to_string(c.n) + ")";
        require_pass(v, r, label);
        v.require(r.details["radius"] == to_string(c.radius), label + ": radius " + r.details["radius"].dump());
        v.detail << " | " << label << " members=" << r.details["size"] << " radius=" << r.details["radius"].get<std::string>();
    }
}

void c9(Verdict& v) {
    const auto r = run_check(ClaimId::THM1_DESK, {{"p", "2"}, {"d", "1"}, {"eps", "1/16"}, {"nmin", "3"}, {"nmax", "5"},
                                                  {"samples", "200"}, {"seed", "0"}});
    require_pass(v, r, "THM1_DESK");
    v.detail << " | " << r.details["maxima"].dump();
}

void c10(Verdict& v) {
    const double j = johnson_radius(2, Rational(1, 4));
    const double gap = delta(2, 2).convert_to<double>() - j;
    const double closed = 0.25 - 0.5 * (1 - std::sqrt(0.5));
    v.require(gap > kJohnsonGap, "gap " + std::to_string(gap));
    v.require(std::abs(gap - closed) <= kJohnsonTolerance, "gap differs from closed form");
    const auto r = run_check(ClaimId::JOHNSON_GAP, {{"p", "2"}, {"dmin", "2"}, {"dmax", "12"}});
    require_pass(v, r, "JOHNSON_GAP");
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(9);
    os << "delta(2,2) - J = 0.25 - " << j << " = " << gap;
    if (v.pass) v.detail << os.str();
}

void c11(Verdict& v) {
    const auto r = run_check(ClaimId::HTILDE_UNIFORM, {{"p", "2"}, {"k", "1"}, {"A", "1"}, {"r", "2,4,8,16"},
                                                       {"rmax", "64"}, {"target", "1/10"}});
    require_pass(v, r, "HTILDE_UNIFORM");
    if (v.pass) {
        for (const auto& d : r.details["deviations"]) v.detail << "r=" << d["r"] << ":" << d["deviation"].get<std::string>() << " ";
        v.detail << "first r below 1/10: " << r.details["first_r_below_target"];
    }
}

void c12(Verdict& v) {
    const auto r = run_check(ClaimId::DEG_COEF, {{"p", "2"}, {"k", "1"}, {"A", "1"}, {"r", "4"}, {"d", "4"},
                                                 {"count", "50"}, {"seed", "0"}});
    require_pass(v, r, "DEG_COEF");
    if (v.pass)
        v.detail << r.details["certified"] << " certified, " << r.details["skipped"] << " skipped, "
                 << r.details["bounds_checked"] << " coefficient bounds";
}

void c13(Verdict& v) {
    const auto r = run_check(ClaimId::APK, {{"Amax", "100"}, {"kmax", "20"}, {"pmax", "97"}});
    require_pass(v, r, "APK");
    if (v.pass) v.detail << r.cases_checked << " (A, k, p) triples";
}

void c14(Verdict& v) {
    const std::vector<std::vector<std::string>> runs{
        {"min-distance", "--p", "2", "--n", "4", "--d", "2"},
        {"min-distance", "--p", "3", "--n", "3", "--d", "2", "--format", "json"},
        {"list-size", "--p", "2", "--n", "3", "--d", "1", "--radius", "3/8", "--center", "random", "--samples", "10", "--seed", "7"},
        {"list-size", "--p", "2", "--n", "4", "--d", "2", "--radius", "1/4", "--samples", "25", "--seed", "3", "--format", "json", "--members"},
        {"max-list", "--p", "2", "--n", "5", "--d", "1", "--radius", "7/16", "--samples", "200", "--format", "csv"},
        {"max-list", "--p", "2", "--n", "4", "--d", "1", "--radius", "3/16", "--samples", "0", "--codeword-centers", "--format", "json"},
        {"tightness", "--p", "2", "--d", "2", "--e", "1", "--n", "5", "--members"},
        {"weak-reg", "--p", "2", "--n", "3", "--d", "1", "--eps", "2/5", "--seed", "5", "--format", "json"},
        {"weak-reg", "--p", "2", "--n", "3", "--d", "1", "--eps", "2/5", "--seed", "5", "--one-sided", "--format", "json"},
        {"rank", "--poly", "p=2 n=3; c=1 e=1,1,0 k=0; c=1 e=0,0,1 k=0", "--d", "2", "--budget", "3"},
        {"atoms", "--poly", "p=2 n=2; c=1 e=1,0 k=1", "--poly", "p=2 n=2; c=1 e=1,1 k=0", "--refine", "1/10", "--format", "json"},
        {"verify", "--claim", "DELTA_PRODUCT", "--p", "3", "--dmax", "20", "--format", "json"},
        {"verify-all", "--format", "json"},
    };
    int identical = 0;
    for (const auto& base : runs) {
        std::string outs[2];
        int codes[2];
        for (int i = 0; i < 2; ++i) {
            auto args = base;
            args.insert(args.end(), {"--jobs", i == 0 ? "1" : "8"});
            std::ostringstream out, err;
            codes[i] = cli::run(args, out, err);
            outs[i] = out.str();
        }
        const bool same = outs[0] == outs[1] && codes[0] == codes[1] && !outs[0].empty();
        v.require(same, "differs: " + base[0]);
        identical += same;
    }
    if (v.pass) v.detail << identical << " CLI runs byte-identical under --jobs 1 and --jobs 8";
}

const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> kCriteria{
    {"minimum-distance reproduction", c1}, {"weak regularity contract", c2},   {"one-sided contract", c3},
    {"SZ1 exhaustive", c4},                 {"delta-product inequality", c5},   {"Lucas digits", c6},
    {"nonclassical scalar law", c7},        {"tightness family", c8},           {"list-size desk evidence", c9},
    {"Johnson gap", c10},                   {"h~ uniformity decay", c11},       {"coefficient degree bound", c12},
    {"APK inequality", c13},                {"CLI determinism", c14},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            only = std::stoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--criterion N]\n";
            return 2;
        }
    }
    if (only < 0 || only > static_cast<int>(kCriteria.size())) {
        std::cerr << "no criterion " << only << '\n';
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i) + 1 != only) continue;
        Verdict v;
        try {
            kCriteria[i].second(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << kCriteria[i].first << "): "
                  << v.detail.str() << std::endl;
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
