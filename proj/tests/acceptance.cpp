// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.  Conjecture entries are reported separately and never
// affect the exit code.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "mzvlab/asymptotics.hpp"
#include "mzvlab/identities.hpp"
#include "mzvlab/index_algebra.hpp"
#include "mzvlab/series.hpp"
#include "mzvlab/words.hpp"

using namespace mzvlab;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(int criterion, bool ok, const std::string& what) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string diffstr(const HPReal& d) { return d.str(3); }

// largest |lhs-rhs| over a filtered suite run
HPReal max_diff(const std::vector<VerificationReport>& reports) {
    HPReal m = 0;
    for (const auto& r : reports)
        if (r.abs_diff > m) m = r.abs_diff;
    return m;
}

bool all_within(const std::vector<VerificationReport>& reports,
                const HPReal& tol) {
    for (const auto& r : reports)
        if (r.abs_diff > tol) return false;
    return true;
}

}  // namespace

int main() {
    PrecisionConfig cfg;
    cfg.digits = 40;
    setup_precision(cfg);

    // 1. backend sanity
    {
        const auto t0 = std::chrono::steady_clock::now();
        const HPReal z2 = mzv_holder(Index{2}, cfg).value;
        const HPReal z21 = mzv_holder(Index{2, 1}, cfg).value;
        const HPReal z3 = mzv_holder(Index{3}, cfg).value;
        const double secs = seconds_since(t0);
        const bool ok = abs(z2 - hp_pi() * hp_pi() / 6) < pow10(-30) &&
                        abs(z21 - z3) < pow10(-30) && secs < 1.0;
        report(1, ok,
               "backend sanity: zeta(2) vs pi^2/6 and zeta(2,1) vs zeta(3) at "
               "1e-30 in " + std::to_string(secs) + " s");
    }

    // 2. duality, every admissible index of weight <= 8 (127 words)
    {
        const auto t0 = std::chrono::steady_clock::now();
        int count = 0;
        HPReal worst = 0;
        for (int w = 2; w <= 8; ++w)
            for (const Index& k : all_indices_of_weight(w)) {
                if (!admissible(k)) continue;
                ++count;
                const Index dual = word_to_index(tau(index_to_word(k)));
                const HPReal diff = abs(mzv_holder(k, cfg).value -
                                        mzv_holder(dual, cfg).value);
                if (diff > worst) worst = diff;
            }
        const double secs = seconds_since(t0);
        const bool ok = count == 127 && worst < pow10(-25) && secs < 60.0;
        report(2, ok,
               "duality on " + std::to_string(count) +
                   " words, worst |zeta(k)-zeta(dual k)| = " + diffstr(worst) +
                   " in " + std::to_string(secs) + " s");
    }

    // 3. quasi-shuffle on 50 random admissible pairs of weight <= 5
    {
        const auto reports = run_suite("STUFFLE", cfg);
        const bool ok =
            reports.size() == 50 && all_within(reports, pow10(-25));
        report(3, ok,
               "quasi-shuffle relation on 50 pairs, worst diff = " +
                   diffstr(max_diff(reports)));
    }

    // 4. zeta*(2,{1}^m) = (m+1) zeta(m+2), m = 0..5
    {
        const auto reports = run_suite("STAR-2-ONES", cfg);
        const bool ok = reports.size() == 6 && all_within(reports, pow10(-25));
        report(4, ok, "star 2-ones reduction, worst diff = " +
                          diffstr(max_diff(reports)));
    }

    // 5. zeta*(2,2,{1}^m) formula, m = 0..3
    {
        const auto reports = run_suite("STAR-22-ONES", cfg);
        const bool ok = reports.size() == 4 && all_within(reports, pow10(-20));
        report(5, ok, "star 2,2-ones reduction, worst diff = " +
                          diffstr(max_diff(reports)));
    }

    // 6. EQ3.5 grid, 12 instances
    {
        const auto reports = run_suite("EQ3.5", cfg);
        const bool ok = reports.size() == 12 && all_within(reports, pow10(-20));
        report(6, ok,
               "bumped-zeta reduction on 12 instances, worst diff = " +
                   diffstr(max_diff(reports)));
    }

    // 7. EQ3.4 / EC2 with the K-Y side summed directly to N = 1e5
    {
        PrecisionConfig ky_cfg = cfg;
        ky_cfg.max_terms = 100000;
        bool ok = true;
        double worst_secs = 0;
        HPReal worst = 0;
        for (const char* id : {"EQ3.4", "EC2"}) {
            const auto reports = run_suite(id, ky_cfg);
            ok = ok && !reports.empty();
            for (const auto& r : reports) {
                if (r.abs_diff > worst) worst = r.abs_diff;
                if (r.seconds > worst_secs) worst_secs = r.seconds;
                if (r.abs_diff > pow10(-6) || r.seconds > 30.0) ok = false;
            }
        }
        report(7, ok,
               "x=0 reductions, K-Y side at N=1e5, worst diff = " +
                   diffstr(worst) + ", slowest instance " +
                   std::to_string(worst_secs) + " s");
    }

    // 8. COR3.2-X and EC1-X at x = 1/2 (8 instances)
    {
        const auto a = run_suite("COR3.2-X", cfg);
        const auto b = run_suite("EC1-X", cfg);
        HPReal worst = max_diff(a);
        if (max_diff(b) > worst) worst = max_diff(b);
        const bool ok = a.size() + b.size() == 8 &&
                        all_within(a, pow10(-5)) && all_within(b, pow10(-5));
        report(8, ok, "interior-x checks on 8 instances, worst diff = " +
                          diffstr(worst));
    }

    // 9. composition sums vs the partition form at a = 0
    {
        const auto reports = run_suite("E3-E5", cfg);
        const bool ok = reports.size() == 24 && all_within(reports, pow10(-8));
        report(9, ok,
               "composition/partition cross-checks on 24 instances, worst "
               "diff = " + diffstr(max_diff(reports)));
    }

    // 10. RC2, RC3, EC5
    {
        HPReal worst = 0;
        bool ok = true;
        size_t total = 0;
        for (const char* id : {"RC2", "RC3", "EC5"}) {
            const auto reports = run_suite(id, cfg);
            total += reports.size();
            ok = ok && all_within(reports, pow10(-8));
            if (max_diff(reports) > worst) worst = max_diff(reports);
        }
        ok = ok && total == 18;
        report(10, ok,
               "K-Y reducibility instances (" + std::to_string(total) +
                   "), worst diff = " + diffstr(worst));
    }

    // 11. zeta*_B(2,2,1) closed form at N <= 1e6
    {
        const auto reports = run_suite("GOLD-ZB221", cfg);
        const bool ok = reports.size() == 1 &&
                        reports[0].abs_diff < pow10(-8) &&
                        reports[0].terms_used <= 2000000;
        report(11, ok, "zeta*_B(2,2,1) golden value, diff = " +
                           diffstr(reports[0].abs_diff));
    }

    // 12. squared-harmonic binomial sum with Li_4(1/2)
    {
        const auto reports = run_suite("GOLD-HN2", cfg);
        const bool ok = reports.size() == 1 && reports[0].abs_diff < pow10(-8);
        report(12, ok, "H_n^2 binomial sum golden value, diff = " +
                           diffstr(reports[0].abs_diff));
    }

    // 13. the pinned THM4.3 / THM4.4 instances
    {
        Params a;
        a["p"] = {1};
        a["m"] = {1};
        a["r"] = {0};
        const auto r43 = verify("THM4.3", a, cfg);
        Params b;
        b["p"] = {1};
        b["m"] = {1};
        b["r"] = {1};
        const auto r44 = verify("THM4.4", b, cfg);
        const bool ok =
            r43.abs_diff < pow10(-7) && r44.abs_diff < pow10(-7);
        report(13, ok,
               "binomial/alternating theorems at (p=1,m=1,r=0) and "
               "(p=1,m=1,r=1), diffs = " + diffstr(r43.abs_diff) + ", " +
                   diffstr(r44.abs_diff));
    }

    // 14. generating functions at t in {1/4, 1/2, 3/4}
    {
        const auto a = run_suite("GF-1", cfg);
        const auto b = run_suite("GF-2", cfg);
        HPReal worst = max_diff(a);
        if (max_diff(b) > worst) worst = max_diff(b);
        const bool ok = a.size() == 3 && b.size() == 3 &&
                        all_within(a, pow10(-10)) && all_within(b, pow10(-10));
        report(14, ok, "generating-function partial sums, worst diff = " +
                           diffstr(worst));
    }

    // 15. Bell polynomial implementations agree exactly, p <= 8
    {
        std::mt19937 rng(321u);
        bool ok = true;
        for (int p = 0; p <= 8; ++p) {
            std::vector<Rational> xs;
            for (int i = 0; i < p; ++i)
                xs.emplace_back(static_cast<int>(rng() % 21) - 10,
                                static_cast<int>(rng() % 9) + 1);
            if (bell_complete_recurrence(xs) != bell_complete_explicit(xs))
                ok = false;
        }
        report(15, ok, "Bell recurrence and explicit sum agree exactly, p <= 8");
    }

    // 16. combinatorial properties, exhaustive
    {
        bool ok = true;
        for (int w = 1; w <= 10 && ok; ++w)
            for (const Index& k : all_indices_of_weight(w)) {
                const Index d = hoffman_dual(k);
                if (d.weight() != w || hoffman_dual(d) != k) {
                    ok = false;
                    break;
                }
                const auto s = star_expand(k);
                if (s.size() != (1ul << (k.depth() - 1))) {
                    ok = false;
                    break;
                }
            }
        // depth-8 star expansions with parts up to 2
        for (unsigned long mask = 0; mask < (1ul << 8) && ok; ++mask) {
            std::vector<int> parts(8);
            for (int i = 0; i < 8; ++i) parts[static_cast<size_t>(i)] =
                (mask >> i & 1) ? 2 : 1;
            if (star_expand(Index{parts}).size() != (1ul << 7)) ok = false;
        }
        report(16, ok,
               "dual involution to weight 10, star term counts to depth 8");
    }

    // 17. tail honesty at doubled cutoffs
    {
        bool ok = true;
        std::string note;
        auto check_pair = [&](const char* name, const ValueWithError& lo,
                              const ValueWithError& hi) {
            const HPReal diff = abs(lo.value - hi.value);
            const HPReal allowed =
                lo.kind == BoundKind::rigorous ? lo.bound : 10 * lo.bound;
            if (diff > allowed) {
                ok = false;
                note += std::string(" ") + name;
            }
        };
        PrecisionConfig lo_cfg = cfg, hi_cfg = cfg;
        lo_cfg.max_terms = 10000;
        hi_cfg.max_terms = 20000;
        for (const Index& k : {Index{2}, Index{2, 1}, Index{3, 1, 2}})
            check_pair("zeta-direct", mzv_direct(k, lo_cfg), mzv_direct(k, hi_cfg));
        {
            PrecisionConfig a = lo_cfg, b = hi_cfg;
            a.max_terms = 1000;
            b.max_terms = 2000;
            check_pair("li", mpl(Index{2, 1}, HPReal(3) / 4, a),
                       mpl(Index{2, 1}, HPReal(3) / 4, b));
        }
        {
            PrecisionConfig a = lo_cfg, b = hi_cfg;
            a.backend = Backend::direct;
            b.backend = Backend::direct;
            check_pair("alt-direct", amzv(SignedIndex{3, -2}, a),
                       amzv(SignedIndex{3, -2}, b));
            check_pair("alt-averaged", amzv(SignedIndex{-2, 1}, a),
                       amzv(SignedIndex{-2, 1}, b));
            check_pair("binomial-direct", mzbsv(Index{2, 1}, a),
                       mzbsv(Index{2, 1}, b));
        }
        check_pair("ky", kyzv(Index{1, 1}, Index{1, 2}, lo_cfg),
                   kyzv(Index{1, 1}, Index{1, 2}, hi_cfg));
        check_pair("binomial", mzbsv(Index{2, 1}, lo_cfg),
                   mzbsv(Index{2, 1}, hi_cfg));
        check_pair("binomial-h", mzbsv_hweighted(Index{1}, 1, lo_cfg),
                    mzbsv_hweighted(Index{1}, 1, hi_cfg));
        check_pair("hurwitz", hurwitz_mzv(Index{3, 2}, HPReal(1) / 2, lo_cfg),
                   hurwitz_mzv(Index{3, 2}, HPReal(1) / 2, hi_cfg));
        report(17, ok, ok ? "tail bounds cover the doubled-cutoff differences"
                          : "tail honesty violated by:" + note);
    }

    // conjecture entries: reported, excluded from pass/fail
    for (const char* id : {"CON-RC4", "CON-ZB"}) {
        const auto reports = run_suite(id, cfg);
        std::printf("[info] conjecture %s: %zu instances, max |lhs-rhs| = %s\n",
                    id, reports.size(), diffstr(max_diff(reports)).c_str());
    }

    if (failures == 0) {
        std::printf("acceptance: all 17 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
