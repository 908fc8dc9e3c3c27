#ifndef MZVLAB_PRECISION_HPP
#define MZVLAB_PRECISION_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>

#include "mzvlab/errors.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

namespace bmp = boost::multiprecision;

// Arbitrary-precision real at the process working precision.  Values
// are immutable once computed; sharing across threads is safe.
using HPReal = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

enum class BoundKind { rigorous, heuristic };

enum class Backend { automatic, direct, holder };

struct PrecisionConfig {
    int digits = 40;            // requested decimal digits P
    long max_terms = 1000000;   // cap on direct-summation cutoffs
    Backend backend = Backend::automatic;
    std::optional<HPReal> tolerance;  // CLI override for verify/suite

    void validate() const;
};

// Sets the working precision to digits + a small guard; per-operation
// rounding is absorbed by the guard rather than tracked per op.
void setup_precision(const PrecisionConfig& cfg);
void setup_precision_digits(int digits);
int guard_digits();

struct ValueWithError {
    HPReal value{};
    HPReal bound{};
    BoundKind kind = BoundKind::rigorous;
    long terms_used = 0;

    ValueWithError() = default;
    ValueWithError(HPReal v, HPReal b, BoundKind k, long n = 0)
        : value(std::move(v)), bound(std::move(b)), kind(k), terms_used(n) {}

    ValueWithError& operator+=(const ValueWithError& o) {
        value += o.value;
        bound += o.bound;
        if (o.kind == BoundKind::heuristic) kind = BoundKind::heuristic;
        terms_used += o.terms_used;
        return *this;
    }
    ValueWithError& scale(const HPReal& c) {
        value *= c;
        bound *= abs(c);
        return *this;
    }
};

struct FundamentalConstants {
    HPReal pi;
    HPReal log2;
};

FundamentalConstants fundamental_constants(const PrecisionConfig& cfg);

// Constants at the current working precision.
HPReal hp_pi();
HPReal hp_log2();
HPReal hp_euler();   // Euler-Mascheroni

inline bool approx_equal(const HPReal& a, const HPReal& b, const HPReal& tol) {
    return abs(a - b) <= tol;
}

HPReal to_hpreal(const Rational& q);
HPReal pow10(int e);  // 10^e at working precision

// Decimal rendering with an explicit significant-digit count.
std::string render(const HPReal& x, int digits);

}  // namespace mzvlab

#endif
