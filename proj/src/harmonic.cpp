#include "mzvlab/harmonic.hpp"

namespace mzvlab {

namespace {

BigInt ipow(long base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

HPReal hpow(long base, int e) {
    return pow(HPReal(base), static_cast<unsigned>(e));
}

}  // namespace

Rational mhs(int n, const Index& k) {
    if (k.empty()) return 1;
    const int r = k.depth();
    if (n < r) return 0;
    // acc[j] = strict suffix sum starting at slot j, at the current m.
    std::vector<Rational> acc(static_cast<size_t>(r), Rational(0));
    for (long m = 1; m <= n; ++m) {
        for (int j = 0; j < r; ++j) {
            const Rational inner =
                (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : Rational(1);
            if (inner != 0)
                acc[static_cast<size_t>(j)] += inner / Rational(ipow(m, k[j]));
        }
    }
    return acc[0];
}

Rational mhs_signed(int n, const SignedIndex& k) {
    if (k.empty()) return 1;
    const int r = k.depth();
    if (n < r) return 0;
    std::vector<Rational> acc(static_cast<size_t>(r), Rational(0));
    std::vector<int> sgn(static_cast<size_t>(r), 1);
    for (long m = 1; m <= n; ++m) {
        for (int j = 0; j < r; ++j) sgn[static_cast<size_t>(j)] *= k.sign(j);
        for (int j = 0; j < r; ++j) {
            const Rational inner =
                (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : Rational(1);
            if (inner != 0)
                acc[static_cast<size_t>(j)] +=
                    Rational(sgn[static_cast<size_t>(j)]) * inner /
                    Rational(ipow(m, k.magnitude(j)));
        }
    }
    return acc[0];
}

Rational mhss(int n, const Index& k) {
    if (k.empty()) return 1;
    const int r = k.depth();
    if (n < 1) return 0;
    std::vector<Rational> acc(static_cast<size_t>(r), Rational(0));
    for (long m = 1; m <= n; ++m) {
        for (int j = r - 1; j >= 0; --j) {
            const Rational inner =
                (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : Rational(1);
            acc[static_cast<size_t>(j)] += inner / Rational(ipow(m, k[j]));
        }
    }
    return acc[0];
}

Rational pmhss(int n, const Index& k, const Rational& x) {
    if (k.empty()) {
        Rational r = 1;
        for (int i = 0; i < n; ++i) r *= x;
        return r;
    }
    const int r = k.depth();
    if (n < 1) return 0;
    std::vector<Rational> acc(static_cast<size_t>(r), Rational(0));
    Rational xpow = 1;
    for (long m = 1; m <= n; ++m) {
        xpow *= x;
        for (int j = r - 1; j >= 0; --j) {
            const Rational inner =
                (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : xpow;
            acc[static_cast<size_t>(j)] += inner / Rational(ipow(m, k[j]));
        }
    }
    return acc[0];
}

HPReal pmhss(int n, const Index& k, const HPReal& x) {
    HarmonicStream s(k, StreamKind::star_param, x);
    while (s.n() < n) s.advance();
    return s.value();
}

HarmonicStream::HarmonicStream(SignedIndex k, StreamKind kind, HPReal x)
    : k_(std::move(k)), kind_(kind), x_(std::move(x)),
      acc_(static_cast<size_t>(k_.depth()), HPReal(0)),
      xpow_(1), prev_(0), one_(1) {
    if (kind_ == StreamKind::star_param && !k_.all_positive())
        throw domain_error("parametric star stream takes an unsigned index");
    sgnpow_.assign(static_cast<size_t>(k_.depth()), 1);
    prev_ = k_.empty() ? HPReal(1) : HPReal(0);
}

HarmonicStream::HarmonicStream(const Index& k, StreamKind kind, HPReal x)
    : HarmonicStream(SignedIndex(k), kind, std::move(x)) {}

void HarmonicStream::advance() {
    const long m = n_ + 1;
    const int r = k_.depth();
    prev_ = value();
    if (kind_ == StreamKind::star_param) xpow_ *= x_;
    for (int j = 0; j < r; ++j) sgnpow_[static_cast<size_t>(j)] *= k_.sign(j);
    if (r > 0) {
        if (kind_ == StreamKind::strict) {
            // ascending order: acc_[j+1] still holds the value at m-1
            for (int j = 0; j < r; ++j) {
                const HPReal& inner =
                    (j + 1 < r) ? acc_[static_cast<size_t>(j + 1)] : one_;
                HPReal t = inner / hpow(m, k_.magnitude(j));
                if (sgnpow_[static_cast<size_t>(j)] < 0)
                    acc_[static_cast<size_t>(j)] -= t;
                else
                    acc_[static_cast<size_t>(j)] += t;
            }
        } else {
            // star kinds: descending order so the inner suffix is at m
            for (int j = r - 1; j >= 0; --j) {
                const HPReal& inner = (j + 1 < r) ? acc_[static_cast<size_t>(j + 1)]
                                     : (kind_ == StreamKind::star_param) ? xpow_
                                                                         : one_;
                HPReal t = inner / hpow(m, k_.magnitude(j));
                if (sgnpow_[static_cast<size_t>(j)] < 0)
                    acc_[static_cast<size_t>(j)] -= t;
                else
                    acc_[static_cast<size_t>(j)] += t;
            }
        }
    }
    n_ = m;
}

}  // namespace mzvlab
