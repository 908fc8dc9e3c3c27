#ifndef MZVLAB_SERIES_HPP
#define MZVLAB_SERIES_HPP

#include <vector>

#include "mzvlab/harmonic.hpp"
#include "mzvlab/index.hpp"
#include "mzvlab/precision.hpp"

namespace mzvlab {

// Rigorous comparison bound: integral over (N, inf) of
// (1+log t)^j t^(-s) dt, in closed form.
HPReal log_power_integral_tail(int j, const HPReal& s, long n);

// zeta(k) by direct partial sums with the rigorous integral-comparison
// tail bound; cutoff is cfg.max_terms.
ValueWithError mzv_direct(const Index& k, const PrecisionConfig& cfg);

// zeta(k) routed through the configured backend (holder by default);
// the empty index evaluates to 1 exactly.
ValueWithError zeta_value(const Index& k, const PrecisionConfig& cfg);
ValueWithError zeta_value(const FormalIndexSum& sum, const PrecisionConfig& cfg);

// zeta*(k) as the star expansion pushed through the backend.
ValueWithError mzsv_value(const Index& k, const PrecisionConfig& cfg);

// Multiple polylogarithm Li_k(x) for |x| <= 1; x = 1 requires an
// admissible index, (k_1, x) = (1, 1) diverges, x = -1 routes to the
// alternating evaluator.
ValueWithError mpl(const Index& k, const HPReal& x, const PrecisionConfig& cfg);

// Alternating multiple zeta (star) values.
ValueWithError amzv(const SignedIndex& s, const PrecisionConfig& cfg);
ValueWithError amzsv(const SignedIndex& s, const PrecisionConfig& cfg);

// Kaneko-Yamamoto values: sum_n zeta_(n-1)(k_2..) zeta*_n(l_2..) / n^(k1+l1),
// and the parametric variant carrying x^(n_s) on the star factor.
ValueWithError kyzv(const Index& k, const Index& l, const PrecisionConfig& cfg);
ValueWithError kyzv_param(const Index& k, const Index& l, const HPReal& x,
                          const PrecisionConfig& cfg);

// Apery-type star values weighted by C(2n,n)/4^n, and the
// harmonic-weighted variant sum_n zeta*_n(m) H_n C(2n,n) / (n^(r+1) 4^n).
ValueWithError mzbsv(const Index& k, const PrecisionConfig& cfg);
ValueWithError mzbsv_hweighted(const Index& m, int r, const PrecisionConfig& cfg);

// Multiple Hurwitz zeta with all summation variables shifted by a.
ValueWithError hurwitz_mzv(const Index& m, const HPReal& a,
                           const PrecisionConfig& cfg);

// Complete Bell polynomials: recurrence form and the explicit
// partition sum; exact on rationals.
Rational bell_complete_recurrence(const std::vector<Rational>& xs);
Rational bell_complete_explicit(const std::vector<Rational>& xs);
HPReal bell_complete(const std::vector<HPReal>& xs);

// Closed forms of the central-binomial generating functions
//   sum C(2n,n) t^n / (4^n n)   and   sum H_n C(2n,n) t^n / 4^n
// together with plain partial sums for cross-checks.
HPReal gf_binomial(const HPReal& t);
HPReal gf_binomial_h(const HPReal& t);
HPReal gf_binomial_series(const HPReal& t, long terms);
HPReal gf_binomial_h_series(const HPReal& t, long terms);

// sum over compositions i of k into p parts of
// prod C(m_j + i_j, i_j) * zeta(reversed (m+i+1)); the MZVs come from
// the configured backend.
ValueWithError composition_mzv_sum(const std::vector<int>& m, int k,
                                   const PrecisionConfig& cfg);

// Single Hurwitz zeta (depth 1) helper used by the reducibility
// formulas: sum (n+a)^(-s).
ValueWithError hurwitz_single(int s, const HPReal& a, const PrecisionConfig& cfg);

}  // namespace mzvlab

#endif
