#include "mzvlab/series.hpp"

#include <algorithm>

#include "mzvlab/asymptotics.hpp"
#include "mzvlab/index_algebra.hpp"
#include "mzvlab/words.hpp"

namespace mzvlab {

namespace {

HPReal heuristic_floor(const PrecisionConfig& cfg, const HPReal& value) {
    return pow10(-(cfg.digits + 5)) * (1 + abs(value));
}

HPReal factorial_hp(int n) {
    HPReal r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// heuristic error scale of an asymptotic tail model evaluated at n
HPReal model_bound(const asym::Series& tail, long n, const PrecisionConfig& cfg,
                   const HPReal& value) {
    return tail.top_order_estimate(n) * 10 + heuristic_floor(cfg, value);
}

long direct_cutoff(const PrecisionConfig& cfg, long preferred) {
    return std::min(cfg.max_terms, preferred);
}

}  // namespace

HPReal log_power_integral_tail(int j, const HPReal& s, long n) {
    const HPReal a = s - 1;
    if (a <= 0) throw domain_error("integral tail needs exponent > 1");
    const HPReal c = 1 + log(HPReal(n));
    HPReal sum = 0;
    HPReal pow_ac = 1;  // (a c)^i / i!
    for (int i = 0; i <= j; ++i) {
        sum += pow_ac;
        pow_ac *= a * c / (i + 1);
    }
    return pow(HPReal(n), -a) * factorial_hp(j) /
           pow(a, static_cast<unsigned>(j + 1)) * sum;
}

ValueWithError mzv_direct(const Index& k, const PrecisionConfig& cfg) {
    if (k.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (!admissible(k))
        throw divergence_error("zeta: index is not admissible (leading entry 1)");
    const long n = cfg.max_terms;
    HarmonicStream s(k, StreamKind::strict);
    while (s.n() < n) s.advance();
    // summand bounded by (1+log t)^(r-1) t^(-k1) / (r-1)!, decreasing on
    // the tail range at these cutoffs
    const HPReal bound =
        log_power_integral_tail(k.depth() - 1, HPReal(k.first()), n) /
        factorial_hp(k.depth() - 1);
    return {s.value(), bound, BoundKind::rigorous, n};
}

ValueWithError zeta_value(const Index& k, const PrecisionConfig& cfg) {
    if (k.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (cfg.backend == Backend::direct) return mzv_direct(k, cfg);
    return mzv_holder(k, cfg);
}

ValueWithError zeta_value(const FormalIndexSum& sum, const PrecisionConfig& cfg) {
    ValueWithError out;
    for (const auto& [k, c] : sum.terms()) {
        ValueWithError v = zeta_value(k, cfg);
        v.scale(to_hpreal(c));
        out += v;
    }
    return out;
}

ValueWithError mzsv_value(const Index& k, const PrecisionConfig& cfg) {
    if (k.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (!admissible(k))
        throw divergence_error("zeta*: index is not admissible (leading entry 1)");
    return zeta_value(star_expand(k), cfg);
}

ValueWithError mpl(const Index& k, const HPReal& x, const PrecisionConfig& cfg) {
    if (k.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (abs(x) > 1) throw domain_error("Li: |x| must be <= 1");
    if (x == 1) {
        if (!admissible(k))
            throw divergence_error("Li: (k_1, x) = (1, 1) diverges");
        return zeta_value(k, cfg);
    }
    if (x == -1) {
        std::vector<int> parts = k.parts();
        parts[0] = -parts[0];
        const SignedIndex s{parts};
        if (!convergent(s))
            throw divergence_error("Li(-1): signed index violates convergence");
        return amzv(s, cfg);
    }
    const int r = k.depth();
    const HPReal rho = abs(x);
    const HPReal stop = pow10(-(cfg.digits + guard_digits()));
    HarmonicStream inner(k.tail(), StreamKind::strict);
    HPReal sum = 0, xpow = 1;
    long n = 0;
    while (n < cfg.max_terms) {
        ++n;
        xpow *= x;
        // inner stream sits at n-1
        sum += xpow * inner.value() /
               pow(HPReal(n), static_cast<unsigned>(k.first()));
        inner.advance();
        if (n > 30 && n % 8 == 0) {
            const HPReal crude =
                pow(rho, static_cast<unsigned>(n)) / (1 - rho) *
                pow(1 + log(HPReal(n)), static_cast<unsigned>(r - 1)) /
                factorial_hp(r - 1);
            if (crude < stop) break;
        }
    }
    // |term_m| <= rho^m (1+log m)^(r-1)/(r-1)!, and for m > n the log
    // factor grows slower than e^((r-1)(m-n)/n)
    const HPReal q = rho * exp(HPReal(r - 1) / n);
    ValueWithError out;
    out.value = sum;
    out.terms_used = n;
    if (q < 1) {
        out.bound = pow(1 + log(HPReal(n)), static_cast<unsigned>(r - 1)) /
                        factorial_hp(r - 1) *
                        pow(rho, static_cast<unsigned>(n)) * q / (1 - q) +
                    heuristic_floor(cfg, sum);
        out.kind = BoundKind::rigorous;
    } else {
        out.bound = abs(xpow) * n * 10 + heuristic_floor(cfg, sum);
        out.kind = BoundKind::heuristic;
    }
    return out;
}

namespace {

ValueWithError amzv_direct_backend(const SignedIndex& s,
                                   const PrecisionConfig& cfg) {
    const int r = s.depth();
    if (s.sign(0) > 0) {
        const long n = direct_cutoff(cfg, 200000);
        HarmonicStream stream(s, StreamKind::strict);
        while (stream.n() < n) stream.advance();
        // inner signed factors are bounded by the all-positive case
        const HPReal bound =
            log_power_integral_tail(r - 1, HPReal(s.magnitude(0)), n) /
            factorial_hp(r - 1);
        return {stream.value(), bound, BoundKind::rigorous, n};
    }
    // alternating outer sum: iterated averaging over a window of
    // partial sums, estimate compared against the half-cutoff run
    const long window = 4L * cfg.digits;
    const int passes = static_cast<int>(cfg.digits * 17L / 10);
    const long n_full = std::max<long>(direct_cutoff(cfg, 200000), 4 * window);
    const long n_half = n_full / 2;
    HarmonicStream stream(s, StreamKind::strict);
    std::vector<HPReal> win_half, win_full;
    while (stream.n() < n_full) {
        stream.advance();
        if (stream.n() > n_half - window && stream.n() <= n_half)
            win_half.push_back(stream.value());
        if (stream.n() > n_full - window) win_full.push_back(stream.value());
    }
    const HPReal est_full = asym::euler_transform_limit(win_full, passes);
    const HPReal est_half = asym::euler_transform_limit(win_half, passes);
    const HPReal bound =
        abs(est_full - est_half) * 10 + heuristic_floor(cfg, est_full);
    return {est_full, bound, BoundKind::heuristic, n_full};
}

}  // namespace

ValueWithError amzv(const SignedIndex& s, const PrecisionConfig& cfg) {
    if (s.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (!convergent(s))
        throw divergence_error(
            "alternating zeta: |k_1|+...+|k_j| > j fails (leading -1 excepted)");
    if (cfg.backend == Backend::direct) return amzv_direct_backend(s, cfg);
    const asym::Series e =
        asym::harmonic_expansion(StreamKind::strict, s, cfg.digits);
    const long n0 = asym::bootstrap_cutoff(cfg.digits);
    const HPReal value = e.coeff(0, 0, 0);
    for (int d = 1; d <= asym::Series::kMaxLogDegree; ++d)
        if (e.coeff(0, 0, d) != 0)
            throw divergence_error("alternating zeta: series does not converge");
    return {value, model_bound(e, n0, cfg, value), BoundKind::heuristic, n0};
}

ValueWithError amzsv(const SignedIndex& s, const PrecisionConfig& cfg) {
    if (s.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (!convergent(s))
        throw divergence_error(
            "alternating zeta*: |k_1|+...+|k_j| > j fails (leading -1 excepted)");
    ValueWithError out;
    const FormalSignedSum expansion = star_expand_signed(s);
    for (const auto& [term, c] : expansion.terms()) {
        ValueWithError v = amzv(term, cfg);
        v.scale(to_hpreal(c));
        out += v;
    }
    return out;
}

ValueWithError kyzv(const Index& k, const Index& l, const PrecisionConfig& cfg) {
    if (k.empty() || l.empty())
        throw domain_error("K-Y value needs nonempty indices");
    const int q = k.first() + l.first();
    // q >= 2 for positive indices and the inner factors grow at most
    // polylogarithmically, so the defining series converges
    const SignedIndex kt(k.tail());
    const SignedIndex lt(l.tail());
    const asym::Series model =
        (asym::harmonic_expansion(StreamKind::strict, kt, cfg.digits)
             .shifted_argument(-1) *
         asym::harmonic_expansion(StreamKind::star, lt, cfg.digits))
            .shifted_exponent(2 * q);
    const asym::Series tail = model.tail_sum();

    const long n = direct_cutoff(cfg, 100000);
    HarmonicStream strict_stream(kt, StreamKind::strict);
    HarmonicStream star_stream(lt, StreamKind::star);
    HPReal sum = 0;
    for (long m = 1; m <= n; ++m) {
        star_stream.advance();
        sum += strict_stream.value() * star_stream.value() /
               pow(HPReal(m), static_cast<unsigned>(q));
        strict_stream.advance();
    }
    const HPReal value = sum + tail.evaluate(n);
    return {value, model_bound(tail, n, cfg, value), BoundKind::heuristic, n};
}

ValueWithError kyzv_param(const Index& k, const Index& l, const HPReal& x,
                          const PrecisionConfig& cfg) {
    if (k.empty() || l.empty())
        throw domain_error("parametric K-Y value needs nonempty indices");
    if (x == 1) return kyzv(k, l, cfg);
    if (abs(x) > HPReal(9) / 10)
        throw domain_error("parametric K-Y value supports |x| <= 0.9 (or x = 1)");
    const int q = k.first() + l.first();
    const SignedIndex kt(k.tail());
    const asym::Series model =
        (asym::harmonic_expansion(StreamKind::strict, kt, cfg.digits)
             .shifted_argument(-1) *
         asym::parametric_star_expansion(l.tail(), x, cfg.digits))
            .shifted_exponent(2 * q);
    const asym::Series tail = model.tail_sum();

    const long n = direct_cutoff(cfg, 20000);
    HarmonicStream strict_stream(kt, StreamKind::strict);
    HarmonicStream star_stream(l.tail(), StreamKind::star_param, x);
    HPReal sum = 0;
    for (long m = 1; m <= n; ++m) {
        star_stream.advance();
        sum += strict_stream.value() * star_stream.value() /
               pow(HPReal(m), static_cast<unsigned>(q));
        strict_stream.advance();
    }
    const HPReal value = sum + tail.evaluate(n);
    HPReal bound = model_bound(tail, n, cfg, value);
    bound += pow(abs(x), static_cast<unsigned>(n)) * n;  // x^m residue
    return {value, bound, BoundKind::heuristic, n};
}

namespace {

struct BinomialWeightedSpec {
    Index star_index;      // zeta*_n factor
    bool harmonic_weight;  // extra H_n factor
    int power;             // n^-power
};

ValueWithError binomial_weighted_sum(const BinomialWeightedSpec& spec,
                                     const PrecisionConfig& cfg) {
    const SignedIndex st(spec.star_index);
    if (cfg.backend == Backend::direct) {
        // plain partial sums; rigorous bound from C(2n,n)/4^n <= 1/sqrt(pi n)
        const long n = cfg.max_terms;
        HarmonicStream star_stream(st, StreamKind::star);
        HarmonicStream h_stream(Index{1}, StreamKind::star);
        HPReal b = 1, sum = 0;
        for (long m = 1; m <= n; ++m) {
            b *= HPReal(2 * m - 1) / (2 * m);
            star_stream.advance();
            HPReal term = star_stream.value() * b /
                          pow(HPReal(m), static_cast<unsigned>(spec.power));
            if (spec.harmonic_weight) {
                h_stream.advance();
                term *= h_stream.value();
            }
            sum += term;
        }
        const int logs =
            spec.star_index.depth() + (spec.harmonic_weight ? 1 : 0);
        const HPReal bound =
            log_power_integral_tail(logs, HPReal(spec.power) + HPReal(1) / 2, n) /
            sqrt(hp_pi());
        return {sum, bound, BoundKind::rigorous, n};
    }
    asym::Series model =
        asym::harmonic_expansion(StreamKind::star, st, cfg.digits) *
        asym::central_binomial_expansion(cfg.digits);
    if (spec.harmonic_weight)
        model = model * asym::harmonic_expansion(StreamKind::star, SignedIndex{1},
                                                 cfg.digits);
    model = model.shifted_exponent(2 * spec.power);
    const asym::Series tail = model.tail_sum();

    const long n = direct_cutoff(cfg, 20000);
    HarmonicStream star_stream(st, StreamKind::star);
    HarmonicStream h_stream(Index{1}, StreamKind::star);
    HPReal b = 1, sum = 0;
    for (long m = 1; m <= n; ++m) {
        b *= HPReal(2 * m - 1) / (2 * m);
        star_stream.advance();
        HPReal term = star_stream.value() * b /
                      pow(HPReal(m), static_cast<unsigned>(spec.power));
        if (spec.harmonic_weight) {
            h_stream.advance();
            term *= h_stream.value();
        }
        sum += term;
    }
    const HPReal value = sum + tail.evaluate(n);
    return {value, model_bound(tail, n, cfg, value), BoundKind::heuristic, n};
}

}  // namespace

ValueWithError mzbsv(const Index& k, const PrecisionConfig& cfg) {
    if (k.empty()) throw domain_error("zeta*_B needs a nonempty index");
    return binomial_weighted_sum({k.tail(), false, k.first()}, cfg);
}

ValueWithError mzbsv_hweighted(const Index& m, int r, const PrecisionConfig& cfg) {
    if (r < 0) throw domain_error("zeta*_B harmonic weight: r must be >= 0");
    return binomial_weighted_sum({m, true, r + 1}, cfg);
}

ValueWithError hurwitz_mzv(const Index& m, const HPReal& a,
                           const PrecisionConfig& cfg) {
    if (m.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (!(a > -1)) throw domain_error("Hurwitz zeta: a must exceed -1");
    if (!admissible(m))
        throw divergence_error("Hurwitz zeta: index is not admissible");
    const asym::Series e = asym::hurwitz_expansion(m, a, cfg.digits);
    const long n0 = asym::bootstrap_cutoff(cfg.digits);
    const HPReal value = e.coeff(0, 0, 0);
    return {value, model_bound(e, n0, cfg, value), BoundKind::heuristic, n0};
}

ValueWithError hurwitz_single(int s, const HPReal& a, const PrecisionConfig& cfg) {
    return hurwitz_mzv(Index{s}, a, cfg);
}

Rational bell_complete_recurrence(const std::vector<Rational>& xs) {
    const int p = static_cast<int>(xs.size());
    std::vector<Rational> y(static_cast<size_t>(p) + 1);
    y[0] = 1;
    for (int t = 1; t <= p; ++t) {
        Rational acc = 0;
        for (int j = 0; j <= t - 1; ++j)
            acc += Rational(binomial(t - 1, j)) *
                   xs[static_cast<size_t>(t - j - 1)] * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(t)] = acc;
    }
    return y[static_cast<size_t>(p)];
}

Rational bell_complete_explicit(const std::vector<Rational>& xs) {
    const int p = static_cast<int>(xs.size());
    if (p == 0) return 1;
    Rational total = 0;
    for (const auto& c : c_partitions(p)) {
        Rational coeff(factorial(p));
        Rational prod = 1;
        for (int j = 1; j <= p; ++j) {
            const int cj = c[static_cast<size_t>(j - 1)];
            if (cj == 0) continue;
            coeff /= Rational(factorial(cj));
            const Rational xfac =
                xs[static_cast<size_t>(j - 1)] / Rational(factorial(j));
            for (int t = 0; t < cj; ++t) prod *= xfac;
        }
        total += coeff * prod;
    }
    return total;
}

HPReal bell_complete(const std::vector<HPReal>& xs) {
    const int p = static_cast<int>(xs.size());
    std::vector<HPReal> y(static_cast<size_t>(p) + 1);
    y[0] = 1;
    for (int t = 1; t <= p; ++t) {
        HPReal acc = 0;
        HPReal binom = 1;  // C(t-1, j)
        for (int j = 0; j <= t - 1; ++j) {
            acc += binom * xs[static_cast<size_t>(t - j - 1)] *
                   y[static_cast<size_t>(j)];
            binom *= HPReal(t - 1 - j) / (j + 1);
        }
        y[static_cast<size_t>(t)] = acc;
    }
    return y[static_cast<size_t>(p)];
}

HPReal gf_binomial(const HPReal& t) {
    if (t < 0 || t > 1) throw domain_error("gf_binomial: t must be in [0, 1]");
    if (t == 0) return HPReal(0);
    if (t == 1) return 2 * hp_log2();
    return 2 * log(2 / (1 + sqrt(1 - t)));
}

HPReal gf_binomial_h(const HPReal& t) {
    if (t < 0 || t >= 1) throw domain_error("gf_binomial_h: t must be in [0, 1)");
    const HPReal u = sqrt(1 - t);
    return 2 / u * log((1 + u) / (2 * u));
}

HPReal gf_binomial_series(const HPReal& t, long terms) {
    HPReal b = 1, tp = 1, sum = 0;
    for (long n = 1; n <= terms; ++n) {
        b *= HPReal(2 * n - 1) / (2 * n);
        tp *= t;
        sum += b * tp / n;
    }
    return sum;
}

HPReal gf_binomial_h_series(const HPReal& t, long terms) {
    HPReal b = 1, tp = 1, h = 0, sum = 0;
    for (long n = 1; n <= terms; ++n) {
        b *= HPReal(2 * n - 1) / (2 * n);
        tp *= t;
        h += HPReal(1) / n;
        sum += h * b * tp;
    }
    return sum;
}

ValueWithError composition_mzv_sum(const std::vector<int>& m, int k,
                                   const PrecisionConfig& cfg) {
    if (m.empty()) throw domain_error("composition sum: m must be nonempty");
    if (m.front() < 1 || m.back() < 1)
        throw domain_error("composition sum: m_1 and m_p must be >= 1");
    for (int v : m)
        if (v < 0) throw domain_error("composition sum: entries must be >= 0");
    if (k < 0) throw domain_error("composition sum: k must be >= 0");
    const int p = static_cast<int>(m.size());
    ValueWithError out;
    for (const auto& comp : compositions(k, p)) {
        BigInt coeff = 1;
        std::vector<int> delta(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j) {
            coeff *= binomial(
                m[static_cast<size_t>(j)] + comp[static_cast<size_t>(j)],
                comp[static_cast<size_t>(j)]);
            delta[static_cast<size_t>(j)] = comp[static_cast<size_t>(j)] + 1;
        }
        ValueWithError v = zeta_value(rev_slice_plus(m, 1, p, delta), cfg);
        v.scale(to_hpreal(Rational(coeff)));
        out += v;
    }
    return out;
}

}  // namespace mzvlab
