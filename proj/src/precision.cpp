#include "mzvlab/precision.hpp"

#include <limits>

namespace mzvlab {

namespace {
constexpr int kGuardDigits = 10;
}

int guard_digits() { return kGuardDigits; }

void PrecisionConfig::validate() const {
    if (digits < 10) throw domain_error("digits must be >= 10");
    if (max_terms < 1000) throw domain_error("max_terms must be >= 1000");
}

void setup_precision_digits(int digits) {
    HPReal::default_precision(static_cast<unsigned>(digits + kGuardDigits));
}

void setup_precision(const PrecisionConfig& cfg) {
    cfg.validate();
    setup_precision_digits(cfg.digits);
}

HPReal hp_pi() {
    HPReal x;
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

HPReal hp_log2() {
    HPReal x;
    mpfr_const_log2(x.backend().data(), MPFR_RNDN);
    return x;
}

HPReal hp_euler() {
    HPReal x;
    mpfr_const_euler(x.backend().data(), MPFR_RNDN);
    return x;
}

FundamentalConstants fundamental_constants(const PrecisionConfig& cfg) {
    (void)cfg;
    return {hp_pi(), hp_log2()};
}

HPReal to_hpreal(const Rational& q) {
    // Avoid the cpp_int -> mpfr interconversion: it adjusts the shared
    // default precision while converting, which perturbs concurrent
    // evaluations on other threads.  Integral and string constructions
    // stay within one thread.
    const BigInt& num = numerator(q);
    const BigInt& den = denominator(q);
    const auto fits = [](const BigInt& v) {
        return v >= std::numeric_limits<long long>::min() &&
               v <= std::numeric_limits<long long>::max();
    };
    const HPReal hnum = fits(num) ? HPReal(num.convert_to<long long>())
                                  : HPReal(num.str());
    const HPReal hden = fits(den) ? HPReal(den.convert_to<long long>())
                                  : HPReal(den.str());
    return hnum / hden;
}

HPReal pow10(int e) {
    HPReal ten = 10;
    return pow(ten, e);
}

std::string render(const HPReal& x, int digits) {
    return x.str(digits);
}

}  // namespace mzvlab
