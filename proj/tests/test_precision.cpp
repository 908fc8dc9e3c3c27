#include "doctest.h"

#include "mzvlab/precision.hpp"

using namespace mzvlab;

namespace {
// Published digits, used as cross-checks for the constant generators.
const char* kPi60 =
    "3.14159265358979323846264338327950288419716939937510582097494";
const char* kLog2_60 =
    "0.693147180559945309417232121458176568075500134360255254120680";
}  // namespace

TEST_CASE("fundamental constants at several precisions") {
    for (int digits : {20, 40, 50}) {
        PrecisionConfig cfg;
        cfg.digits = digits;
        setup_precision(cfg);
        auto consts = fundamental_constants(cfg);
        const HPReal tol = pow10(3 - digits);
        CHECK(abs(consts.pi - HPReal(kPi60)) < tol);
        CHECK(abs(consts.log2 - HPReal(kLog2_60)) < tol);
    }
    // raising P never worsens the constants
    setup_precision_digits(50);
    HPReal ref_pi(kPi60);
    setup_precision_digits(40);
    HPReal err40 = abs(hp_pi() - HPReal(kPi60));
    setup_precision_digits(50);
    HPReal err50 = abs(hp_pi() - ref_pi);
    CHECK(err50 <= err40 + pow10(-55));
}

TEST_CASE("approx_equal") {
    PrecisionConfig cfg;
    cfg.digits = 50;
    setup_precision(cfg);
    CHECK(approx_equal(HPReal(1), HPReal(1), pow10(-30)));
    CHECK(!approx_equal(HPReal(1), HPReal("1.1"), pow10(-3)));
    HPReal x = 3;
    CHECK(approx_equal(x, x + pow10(-41), pow10(-40)));
}

TEST_CASE("rendering is deterministic") {
    PrecisionConfig cfg;
    setup_precision(cfg);
    HPReal x = hp_pi() / 6;
    std::string a = render(x, 30);
    std::string b = render(hp_pi() / 6, 30);
    CHECK(a == b);
}

TEST_CASE("config validation") {
    PrecisionConfig bad;
    bad.digits = 5;
    CHECK_THROWS_AS(setup_precision(bad), domain_error);
    PrecisionConfig bad2;
    bad2.max_terms = 10;
    CHECK_THROWS_AS(setup_precision(bad2), domain_error);
}

TEST_CASE("rational conversion") {
    setup_precision_digits(40);
    CHECK(abs(to_hpreal(Rational(1, 3)) * 3 - 1) < pow10(-45));
}
