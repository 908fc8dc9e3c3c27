#include "doctest.h"

#include "mzvlab/asymptotics.hpp"
#include "mzvlab/harmonic.hpp"
#include "mzvlab/index_algebra.hpp"

using namespace mzvlab;
using asym::Series;

namespace {

HPReal exact_stream_value(const SignedIndex& k, StreamKind kind, long n,
                          const HPReal& x = HPReal(1)) {
    HarmonicStream s(k, kind, x);
    while (s.n() < n) s.advance();
    return s.value();
}

}  // namespace

TEST_CASE("euler-maclaurin tail of 1/m^2") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    Series f;
    f.add_coeff(0, 4, 0, HPReal(1));  // n^-2
    Series tail = f.tail_sum();
    // sum_{m>n} 1/m^2 = zeta(2) - zeta_n(2), exactly
    const HPReal zeta2 = hp_pi() * hp_pi() / 6;
    for (long n : {100, 200, 400}) {
        const HPReal exact = zeta2 - to_hpreal(mhs(static_cast<int>(n), Index{2}));
        CHECK(abs(tail.evaluate(n) - exact) < pow10(-30));
    }
}

TEST_CASE("euler-maclaurin tail with a log factor") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    Series f;
    f.add_coeff(0, 6, 1, HPReal(1));  // log(m)/m^3
    Series tail = f.tail_sum();
    for (long n : {60, 150}) {
        HPReal brute = 0;
        for (long m = 400000; m > n; --m)
            brute += log(HPReal(m)) / pow(HPReal(m), 3u);
        // the brute-force truncation itself is ~ 4e-11
        CHECK(abs(tail.evaluate(n) - brute) < pow10(-9));
    }
}

TEST_CASE("boole tail of (-1)^m/m^2") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    Series f;
    f.add_coeff(1, 4, 0, HPReal(1));  // (-1)^m m^-2
    Series tail = f.tail_sum();
    const HPReal eta2 = hp_pi() * hp_pi() / 12;  // sum (-1)^(m-1)/m^2
    for (long n : {100, 101, 200}) {
        const HPReal exact =
            -eta2 - to_hpreal(mhs_signed(static_cast<int>(n), SignedIndex{-2}));
        CHECK(abs(tail.evaluate(n) - exact) < pow10(-30));
    }
}

TEST_CASE("running sum reproduces harmonic numbers") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    Series term;
    term.add_coeff(0, 2, 0, HPReal(1));  // 1/m
    Series g = term.running_sum();
    // H_n - g(n) -> gamma
    for (long n : {400, 900}) {
        const HPReal hn = to_hpreal(mhs(static_cast<int>(n), Index{1}));
        CHECK(abs(hn - g.evaluate(n) - hp_euler()) < pow10(-30));
    }
}

TEST_CASE("harmonic expansions match exact streams far beyond the bootstrap") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    struct Case {
        SignedIndex k;
        StreamKind kind;
    };
    const Case cases[] = {
        {SignedIndex{1}, StreamKind::strict},
        {SignedIndex{2}, StreamKind::strict},
        {SignedIndex{1, 1}, StreamKind::strict},
        {SignedIndex{2, 1}, StreamKind::star},
        {SignedIndex{1}, StreamKind::star},
        {SignedIndex{1, 1}, StreamKind::star},
        {SignedIndex{-1}, StreamKind::strict},
        {SignedIndex{-2}, StreamKind::strict},
        {SignedIndex{2, -1}, StreamKind::strict},
        {SignedIndex{-2, 1}, StreamKind::strict},
        {SignedIndex{-1, -2}, StreamKind::star},
    };
    for (const auto& c : cases) {
        const Series e = asym::harmonic_expansion(c.kind, c.k, cfg.digits);
        for (long n : {6000, 6001}) {  // both parities
            const HPReal exact = exact_stream_value(c.k, c.kind, n);
            CHECK(abs(e.evaluate(n) - exact) < pow10(-30));
        }
    }
}

TEST_CASE("bootstrapped constants recover classical limits") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    const Series h =
        asym::harmonic_expansion(StreamKind::strict, SignedIndex{1}, cfg.digits);
    CHECK(abs(h.coeff(0, 0, 0) - hp_euler()) < pow10(-30));
    CHECK(abs(h.coeff(0, 0, 1) - 1) < pow10(-35));  // coefficient of log n
    const Series z2 =
        asym::harmonic_expansion(StreamKind::strict, SignedIndex{2}, cfg.digits);
    CHECK(abs(z2.coeff(0, 0, 0) - hp_pi() * hp_pi() / 6) < pow10(-30));
    const Series alt =
        asym::harmonic_expansion(StreamKind::strict, SignedIndex{-1}, cfg.digits);
    CHECK(abs(alt.coeff(0, 0, 0) + hp_log2()) < pow10(-30));
}

TEST_CASE("central binomial expansion") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    const Series b = asym::central_binomial_expansion(cfg.digits);
    // (pi n)^(-1/2) (1 - 1/(8n) + 1/(128 n^2) + ...)
    const HPReal invsqrtpi = 1 / sqrt(hp_pi());
    CHECK(abs(b.coeff(0, 1, 0) - invsqrtpi) < pow10(-35));
    CHECK(abs(b.coeff(0, 3, 0) + invsqrtpi / 8) < pow10(-35));
    CHECK(abs(b.coeff(0, 5, 0) - invsqrtpi / 128) < pow10(-35));
    HPReal bn = 1;
    for (long m = 1; m <= 500; ++m) bn *= HPReal(2 * m - 1) / (2 * m);
    CHECK(abs(b.evaluate(500) - bn) < pow10(-32));
}

TEST_CASE("parametric star expansion at x = 1/2") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    for (const Index& k : {Index{2, 1}, Index{1, 1}, Index{1, 2}}) {
        const Series e =
            asym::parametric_star_expansion(k, HPReal(1) / 2, cfg.digits);
        const HPReal exact = exact_stream_value(SignedIndex(k),
                                                StreamKind::star_param, 7000,
                                                HPReal(1) / 2);
        CHECK(abs(e.evaluate(7000) - exact) < pow10(-30));
    }
}

TEST_CASE("hurwitz expansion") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    // sum (n+1/2)^-2 = pi^2/2 - 4 (trigamma at 3/2)
    const HPReal half = HPReal(1) / 2;
    const Series e = asym::hurwitz_expansion(Index{2}, half, cfg.digits);
    CHECK(abs(e.coeff(0, 0, 0) - (hp_pi() * hp_pi() / 2 - 4)) < pow10(-30));
    // a = 0 reduces to the plain strict sums
    const Series e0 = asym::hurwitz_expansion(Index{2, 1}, HPReal(0), cfg.digits);
    const HPReal exact =
        exact_stream_value(SignedIndex{2, 1}, StreamKind::strict, 5000);
    CHECK(abs(e0.evaluate(5000) - exact) < pow10(-30));
}

TEST_CASE("euler transform accelerates the alternating harmonic series") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    std::vector<HPReal> window;
    HPReal s = 0;
    for (long m = 1; m <= 200; ++m) {
        s += (m % 2 ? HPReal(1) : HPReal(-1)) / m;
        if (m > 40) window.push_back(s);
    }
    const HPReal est = asym::euler_transform_limit(window, 68);
    CHECK(abs(est - hp_log2()) < pow10(-18));
}
