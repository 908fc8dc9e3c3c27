#ifndef MZVLAB_ASYMPTOTICS_HPP
#define MZVLAB_ASYMPTOTICS_HPP

#include <functional>
#include <vector>

#include "mzvlab/harmonic.hpp"
#include "mzvlab/index.hpp"
#include "mzvlab/precision.hpp"

namespace mzvlab::asym {

// Large-n model of a sequence:
//
//   f(n)  ~  sum_h n^(-h/2) * [ A_h(log n) + (-1)^n * B_h(log n) ]
//
// with polynomial log parts.  Exponents run in half-integer steps so
// central-binomial weights fit the same basis.  This is the common
// currency behind every tail estimate in the series engine: terms of a
// convergent series are modelled here, then summed past the direct
// cutoff by Euler-Maclaurin (plain part) and Boole summation
// (alternating part).
class Series {
  public:
    static constexpr int kMaxHalfExponent = 36;  // exponents up to 18
    static constexpr int kMaxLogDegree = 14;

    Series();
    static Series constant(const HPReal& c);

    bool is_zero() const;
    void clear();

    // coefficient access; h = twice the 1/n exponent, parity 0 = plain,
    // parity 1 = the (-1)^n part
    const HPReal& coeff(int parity, int h, int d) const;
    const std::vector<HPReal>& coeff_row(int parity, int h) const;
    void add_coeff(int parity, int h, int d, const HPReal& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series operator*(const Series& o) const;
    Series& scale(const HPReal& c);

    // multiply by n^(-k)
    Series shifted_exponent(int twice_k) const;
    // multiply by (-1)^n
    Series flipped_parity() const;
    // multiply by (1 + a/n)^(-s); the expansion of (n+a)^(-s) is
    // n^(-s) * this factor
    Series times_binomial_shift(const HPReal& a, int s) const;

    // f(n + delta) as a series in n, delta = +1 or -1 (tracks the
    // parity flip of the (-1)^n part)
    Series shifted_argument(int delta) const;

    // d/dn, termwise
    Series derivative() const;

    // sum_{m > n} f(m): Euler-Maclaurin on the plain part (requires
    // exponents > 1 there), Boole summation on the alternating part
    Series tail_sum() const;

    // sum_{m <= n} f(m) up to an additive constant; plain rows at
    // exponent exactly 1 produce log-power growth
    Series running_sum() const;

    HPReal evaluate(long n) const;

    // magnitude of the highest-order retained rows at n, used as the
    // heuristic error scale of a truncated model
    HPReal top_order_estimate(long n) const;

  private:
    // data_[parity][h] is the log-polynomial at exponent h/2
    std::vector<std::vector<HPReal>> data_[2];
};

// Asymptotic expansion of the (signed) multiple harmonic sum of the
// given kind, constants bootstrapped numerically from an exact stream.
// Cached per (kind, index, working digits).
Series harmonic_expansion(StreamKind kind, const SignedIndex& k, int digits);

// Expansion of the parametric star sum for |x| < 1: exponentially
// small parts collapse into the bootstrapped constants.
Series parametric_star_expansion(const Index& k, const HPReal& x, int digits);

// Expansion of C(2n,n)/4^n in half-integer powers, derived from the
// term ratio (2n-1)/(2n) and the Wallis limit.
Series central_binomial_expansion(int digits);

// Nested Hurwitz sum expansion for shift a > -1 (strict inequalities,
// summands (n_j + a)^(-m_j)).
Series hurwitz_expansion(const Index& m, const HPReal& a, int digits);

void clear_expansion_cache();

// Direct-summation length used when bootstrapping expansion constants.
long bootstrap_cutoff(int digits);

// Iterated averaging of a window of consecutive partial sums; the
// classic Euler-transform estimate for alternating series.  Used as an
// independent oracle and by the plain `direct` backend.
HPReal euler_transform_limit(std::vector<HPReal> window, int passes);

}  // namespace mzvlab::asym

#endif
