#ifndef MZVLAB_HARMONIC_HPP
#define MZVLAB_HARMONIC_HPP

#include <vector>

#include "mzvlab/index.hpp"
#include "mzvlab/precision.hpp"

namespace mzvlab {

// Multiple harmonic sum with strict inequalities, exact.  Zero when
// n is below the depth (no admissible tuple), one for the empty index.
Rational mhs(int n, const Index& k);

// Weak-inequality (star) variant; one for the empty index.
Rational mhss(int n, const Index& k);

// Parametric star sum with weight x^(innermost variable); the empty
// index gives x^n.
Rational pmhss(int n, const Index& k, const Rational& x);
HPReal pmhss(int n, const Index& k, const HPReal& x);

// Signed variant (sign(k_j)^(n_j) factors), exact.
Rational mhs_signed(int n, const SignedIndex& k);

enum class StreamKind { strict, star, star_param };

// Incremental evaluation of the suffix sums of a (possibly signed)
// index as n advances; cost O(depth) per step.  value() is the full
// sum at the current n; prev_value() is the value at n-1, which the
// Kaneko-Yamamoto series needs for its strict factor.
class HarmonicStream {
  public:
    HarmonicStream(SignedIndex k, StreamKind kind, HPReal x = HPReal(1));
    HarmonicStream(const Index& k, StreamKind kind, HPReal x = HPReal(1));

    void advance();                 // n -> n+1
    long n() const { return n_; }
    const HPReal& value() const {
        if (!acc_.empty()) return acc_.front();
        return kind_ == StreamKind::star_param ? xpow_ : one_;
    }
    const HPReal& prev_value() const { return prev_; }

  private:
    SignedIndex k_;
    StreamKind kind_;
    HPReal x_;
    long n_ = 0;
    std::vector<HPReal> acc_;   // acc_[j] = suffix sum starting at slot j
    std::vector<int> sgnpow_;   // sign(k_j)^n, updated incrementally
    HPReal xpow_;               // x^n for the parametric kind
    HPReal prev_;
    HPReal one_;
};

}  // namespace mzvlab

#endif
