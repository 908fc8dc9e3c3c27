#include "mzvlab/asymptotics.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace mzvlab::asym {

namespace {

constexpr int HMAX = Series::kMaxHalfExponent;
constexpr int DMAX = Series::kMaxLogDegree;

// B_2k/(2k)! for the Euler-Maclaurin correction terms
const std::pair<int, Rational> kBernoulliOverFact[] = {
    {1, Rational(1, 12)},
    {2, Rational(-1, 720)},
    {3, Rational(1, 30240)},
    {4, Rational(-1, 1209600)},
    {5, Rational(1, 47900160)},
    {6, Rational(-691, 1307674368000)},
    {7, Rational(7, 523069747200)},
    {8, Rational(-3617, 10670622842880000)},
};

// Taylor coefficients of 1/(1+e^x), the operator summing
// (-1)^j g(a+j) over j >= 0 (Boole summation)
const std::pair<int, Rational> kBooleCoeffs[] = {
    {0, Rational(1, 2)},
    {1, Rational(-1, 4)},
    {3, Rational(1, 48)},
    {5, Rational(-1, 480)},
    {7, Rational(17, 80640)},
    {9, Rational(-31, 1451520)},
    {11, Rational(691, 319334400)},
    {13, Rational(-5461, 24908083200)},
    {15, Rational(929569, 41849192448000)},
};

const HPReal& zero_value() {
    static const HPReal z(0);
    return z;
}

}  // namespace

Series::Series() {
    data_[0].resize(HMAX + 1);
    data_[1].resize(HMAX + 1);
}

Series Series::constant(const HPReal& c) {
    Series s;
    s.add_coeff(0, 0, 0, c);
    return s;
}

bool Series::is_zero() const {
    for (int p = 0; p < 2; ++p)
        for (const auto& row : data_[p])
            for (const auto& c : row)
                if (c != 0) return false;
    return true;
}

void Series::clear() {
    for (int p = 0; p < 2; ++p)
        for (auto& row : data_[p]) row.clear();
}

const HPReal& Series::coeff(int parity, int h, int d) const {
    if (h < 0 || h > HMAX) return zero_value();
    const auto& row = data_[parity][static_cast<size_t>(h)];
    if (d < 0 || d >= static_cast<int>(row.size())) return zero_value();
    return row[static_cast<size_t>(d)];
}

const std::vector<HPReal>& Series::coeff_row(int parity, int h) const {
    return data_[parity][static_cast<size_t>(h)];
}

void Series::add_coeff(int parity, int h, int d, const HPReal& c) {
    if (c == 0) return;
    if (h > HMAX) return;  // beyond the modelled order
    if (h < 0) throw domain_error("asym::Series: negative power of 1/n");
    if (d > DMAX) throw domain_error("asym::Series: log degree overflow");
    auto& row = data_[parity][static_cast<size_t>(h)];
    if (d >= static_cast<int>(row.size())) row.resize(static_cast<size_t>(d) + 1);
    row[static_cast<size_t>(d)] += c;
}

Series& Series::operator+=(const Series& o) {
    for (int p = 0; p < 2; ++p)
        for (int h = 0; h <= HMAX; ++h) {
            const auto& row = o.data_[p][static_cast<size_t>(h)];
            for (int d = 0; d < static_cast<int>(row.size()); ++d)
                add_coeff(p, h, d, row[static_cast<size_t>(d)]);
        }
    return *this;
}

Series& Series::operator-=(const Series& o) {
    for (int p = 0; p < 2; ++p)
        for (int h = 0; h <= HMAX; ++h) {
            const auto& row = o.data_[p][static_cast<size_t>(h)];
            for (int d = 0; d < static_cast<int>(row.size()); ++d)
                add_coeff(p, h, d, -row[static_cast<size_t>(d)]);
        }
    return *this;
}

Series Series::operator*(const Series& o) const {
    Series out;
    // (A1 + sB1)(A2 + sB2) = (A1A2 + B1B2) + s(A1B2 + B1A2),  s = (-1)^n
    for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2) {
            const int pout = p1 ^ p2;
            for (int h1 = 0; h1 <= HMAX; ++h1) {
                const auto& r1 = data_[p1][static_cast<size_t>(h1)];
                if (r1.empty()) continue;
                for (int h2 = 0; h1 + h2 <= HMAX; ++h2) {
                    const auto& r2 = o.data_[p2][static_cast<size_t>(h2)];
                    if (r2.empty()) continue;
                    for (int d1 = 0; d1 < static_cast<int>(r1.size()); ++d1) {
                        const HPReal& c1 = r1[static_cast<size_t>(d1)];
                        if (c1 == 0) continue;
                        for (int d2 = 0; d2 < static_cast<int>(r2.size()); ++d2) {
                            const HPReal& c2 = r2[static_cast<size_t>(d2)];
                            if (c2 == 0) continue;
                            out.add_coeff(pout, h1 + h2, d1 + d2, c1 * c2);
                        }
                    }
                }
            }
        }
    return out;
}

Series& Series::scale(const HPReal& c) {
    for (int p = 0; p < 2; ++p)
        for (auto& row : data_[p])
            for (auto& v : row) v *= c;
    return *this;
}

Series Series::shifted_exponent(int twice_k) const {
    Series out;
    for (int p = 0; p < 2; ++p)
        for (int h = 0; h + twice_k <= HMAX; ++h) {
            const auto& row = data_[p][static_cast<size_t>(h)];
            for (int d = 0; d < static_cast<int>(row.size()); ++d)
                out.add_coeff(p, h + twice_k, d, row[static_cast<size_t>(d)]);
        }
    return out;
}

Series Series::flipped_parity() const {
    Series out;
    for (int p = 0; p < 2; ++p)
        for (int h = 0; h <= HMAX; ++h) {
            const auto& row = data_[p][static_cast<size_t>(h)];
            for (int d = 0; d < static_cast<int>(row.size()); ++d)
                out.add_coeff(p ^ 1, h, d, row[static_cast<size_t>(d)]);
        }
    return out;
}

Series Series::times_binomial_shift(const HPReal& a, int s) const {
    // (1 + a/n)^(-s) = sum_i C(-s,i) a^i n^(-i)
    Series factor;
    HPReal c = 1;
    for (int i = 0; 2 * i <= HMAX; ++i) {
        factor.add_coeff(0, 2 * i, 0, c);
        c *= -(HPReal(s) + i) / (i + 1);
        c *= a;
    }
    return (*this) * factor;
}

namespace {

// powers of eps = log(1 + delta/n) as plain integer-row series
std::vector<Series> epsilon_powers(int delta, int count) {
    Series eps;
    HPReal num = delta;
    for (int k = 1; 2 * k <= HMAX; ++k) {
        eps.add_coeff(0, 2 * k, 0, num / k);
        num *= -delta;
    }
    std::vector<Series> pows;
    pows.push_back(Series::constant(HPReal(1)));
    for (int i = 1; i <= count; ++i) pows.push_back(pows.back() * eps);
    return pows;
}

}  // namespace

Series Series::shifted_argument(int delta) const {
    if (delta != 1 && delta != -1)
        throw domain_error("shifted_argument: delta must be +1 or -1");
    const auto eps_pows = epsilon_powers(delta, DMAX);
    Series out;
    for (int p = 0; p < 2; ++p) {
        for (int h = 0; h <= HMAX; ++h) {
            const auto& row = data_[p][static_cast<size_t>(h)];
            if (row.empty()) continue;
            const HPReal e = HPReal(h) / 2;
            // (n+delta)^(-e) = n^(-e) (1 + delta/n)^(-e)
            Series radial;
            {
                HPReal c = 1;
                for (int i = 0; 2 * i + h <= HMAX; ++i) {
                    radial.add_coeff(0, 2 * i, 0, c);
                    c *= -(e + i) / (i + 1);
                    c *= delta;
                }
            }
            // P(L + eps)
            Series poly_shifted;
            for (int d = 0; d < static_cast<int>(row.size()); ++d) {
                const HPReal& cd = row[static_cast<size_t>(d)];
                if (cd == 0) continue;
                HPReal binom = 1;  // C(d, i)
                for (int i = 0; i <= d; ++i) {
                    const Series& ep = eps_pows[static_cast<size_t>(i)];
                    for (int hh = 0; hh <= HMAX; ++hh) {
                        const auto& er = ep.data_[0][static_cast<size_t>(hh)];
                        for (int dd = 0; dd < static_cast<int>(er.size()); ++dd) {
                            const HPReal& ec = er[static_cast<size_t>(dd)];
                            if (ec != 0)
                                poly_shifted.add_coeff(0, hh, d - i + dd,
                                                       cd * binom * ec);
                        }
                    }
                    binom *= HPReal(d - i) / (i + 1);
                }
            }
            Series contrib = (poly_shifted * radial).shifted_exponent(h);
            for (int hh = 0; hh <= HMAX; ++hh) {
                const auto& rr = contrib.data_[0][static_cast<size_t>(hh)];
                for (int dd = 0; dd < static_cast<int>(rr.size()); ++dd) {
                    const HPReal& cc = rr[static_cast<size_t>(dd)];
                    if (cc == 0) continue;
                    // (-1)^(n+delta) = -(-1)^n for odd delta
                    out.add_coeff(p, hh, dd, p == 1 ? -cc : cc);
                }
            }
        }
    }
    return out;
}

Series Series::derivative() const {
    // termwise on the smooth factor of each parity block
    Series out;
    for (int p = 0; p < 2; ++p)
        for (int h = 0; h <= HMAX; ++h) {
            const auto& row = data_[p][static_cast<size_t>(h)];
            const HPReal e = HPReal(h) / 2;
            for (int d = 0; d < static_cast<int>(row.size()); ++d) {
                const HPReal& c = row[static_cast<size_t>(d)];
                if (c == 0) continue;
                out.add_coeff(p, h + 2, d, -e * c);
                if (d >= 1) out.add_coeff(p, h + 2, d - 1, HPReal(d) * c);
            }
        }
    return out;
}

namespace {

// int_n^inf of a plain series whose rows all have exponent > 1
Series integral_to_inf(const Series& plain) {
    Series out;
    for (int h = 0; h <= HMAX; ++h) {
        const auto& row = plain.coeff_row(0, h);
        if (row.empty()) continue;
        bool nonzero = false;
        for (const auto& c : row)
            if (c != 0) nonzero = true;
        if (!nonzero) continue;
        if (h <= 2) throw divergence_error("integral_to_inf: exponent <= 1");
        const HPReal em1 = HPReal(h) / 2 - 1;
        for (int d = 0; d < static_cast<int>(row.size()); ++d) {
            const HPReal& c = row[static_cast<size_t>(d)];
            if (c == 0) continue;
            // int_n^inf t^-e L^d dt = n^(1-e) sum_i d!/(d-i)! L^(d-i)/(e-1)^(i+1)
            HPReal fall = 1;
            HPReal denom = em1;
            for (int i = 0; i <= d; ++i) {
                out.add_coeff(0, h - 2, d - i, c * fall / denom);
                fall *= (d - i);
                denom *= em1;
            }
        }
    }
    return out;
}

// sum_{m>n} f(m) = int - f(n)/2 - sum B_2k/(2k)! f^(2k-1)(n)
Series em_tail_plain(const Series& plain) {
    Series out = integral_to_inf(plain);
    Series half = plain;
    half.scale(HPReal(-1) / 2);
    out += half;
    Series deriv = plain;
    int order = 0;
    for (const auto& [k, b] : kBernoulliOverFact) {
        while (order < 2 * k - 1) {
            deriv = deriv.derivative();
            ++order;
        }
        Series t = deriv;
        t.scale(-to_hpreal(b));
        out += t;
    }
    return out;
}

// sum_{m>n} (-1)^m g(m) = (-1)^(n+1) pile(n+1),
// pile = sum_k c_k g^(k) with c from 1/(1+e^x)
Series boole_tail_plain(const Series& g) {
    if (g.is_zero()) return Series();
    Series pile;
    Series deriv = g;
    int order = 0;
    for (const auto& [k, c] : kBooleCoeffs) {
        while (order < k) {
            deriv = deriv.derivative();
            ++order;
        }
        Series t = deriv;
        t.scale(to_hpreal(c));
        pile += t;
    }
    Series shifted = pile.shifted_argument(+1);
    shifted.scale(HPReal(-1));
    return shifted.flipped_parity();
}

}  // namespace

Series Series::tail_sum() const {
    Series plain, alt;
    for (int h = 0; h <= HMAX; ++h) {
        const auto& r0 = data_[0][static_cast<size_t>(h)];
        for (int d = 0; d < static_cast<int>(r0.size()); ++d) {
            const HPReal& c = r0[static_cast<size_t>(d)];
            if (c == 0) continue;
            if (h <= 2)
                throw divergence_error(
                    "tail_sum: non-alternating part decays too slowly");
            plain.add_coeff(0, h, d, c);
        }
        const auto& r1 = data_[1][static_cast<size_t>(h)];
        for (int d = 0; d < static_cast<int>(r1.size()); ++d)
            alt.add_coeff(0, h, d, r1[static_cast<size_t>(d)]);
    }
    Series out = em_tail_plain(plain);
    out += boole_tail_plain(alt);
    return out;
}

Series Series::running_sum() const {
    Series decaying, at_one, alt;
    for (int h = 0; h <= HMAX; ++h) {
        const auto& r0 = data_[0][static_cast<size_t>(h)];
        for (int d = 0; d < static_cast<int>(r0.size()); ++d) {
            const HPReal& c = r0[static_cast<size_t>(d)];
            if (c == 0) continue;
            if (h < 2) throw domain_error("running_sum: polynomially growing sum");
            if (h == 2)
                at_one.add_coeff(0, h, d, c);
            else
                decaying.add_coeff(0, h, d, c);
        }
        const auto& r1 = data_[1][static_cast<size_t>(h)];
        for (int d = 0; d < static_cast<int>(r1.size()); ++d)
            alt.add_coeff(0, h, d, r1[static_cast<size_t>(d)]);
    }
    Series out;
    // exponent > 1: partial sum = const - tail
    out -= em_tail_plain(decaying);
    // exponent exactly 1: log-power growth + Euler-Maclaurin corrections
    if (!at_one.is_zero()) {
        const auto& row = at_one.coeff_row(0, 2);
        for (int d = 0; d < static_cast<int>(row.size()); ++d) {
            const HPReal& c = row[static_cast<size_t>(d)];
            if (c == 0) continue;
            out.add_coeff(0, 0, d + 1, c / (d + 1));
        }
        Series half = at_one;
        half.scale(HPReal(1) / 2);
        out += half;
        Series deriv = at_one;
        int order = 0;
        for (const auto& [k, b] : kBernoulliOverFact) {
            while (order < 2 * k - 1) {
                deriv = deriv.derivative();
                ++order;
            }
            Series t = deriv;
            t.scale(to_hpreal(b));
            out += t;
        }
    }
    // alternating rows: partial sum = const - alternating tail
    out -= boole_tail_plain(alt);
    return out;
}

HPReal Series::evaluate(long n) const {
    const HPReal L = log(HPReal(n));
    const HPReal u = 1 / sqrt(HPReal(n));
    HPReal result = 0;
    HPReal upow = 1;
    for (int h = 0; h <= HMAX; ++h) {
        for (int p = 0; p < 2; ++p) {
            const auto& row = data_[p][static_cast<size_t>(h)];
            if (row.empty()) continue;
            HPReal poly = 0;
            for (int d = static_cast<int>(row.size()) - 1; d >= 0; --d)
                poly = poly * L + row[static_cast<size_t>(d)];
            if (p == 1 && (n % 2 != 0)) poly = -poly;
            result += poly * upow;
        }
        upow *= u;
    }
    return result;
}

HPReal Series::top_order_estimate(long n) const {
    const HPReal L = log(HPReal(n));
    HPReal scale = 0;
    for (int h = HMAX - 3; h <= HMAX; ++h) {
        for (int p = 0; p < 2; ++p) {
            const auto& row = data_[p][static_cast<size_t>(h)];
            if (row.empty()) continue;
            HPReal poly = 0;
            for (int d = static_cast<int>(row.size()) - 1; d >= 0; --d)
                poly = poly * L + abs(row[static_cast<size_t>(d)]);
            scale += poly * pow(HPReal(n), -HPReal(h) / 2);
        }
    }
    return scale;
}

namespace {

struct ExpansionCache {
    std::shared_mutex mutex;
    std::map<std::tuple<int, std::string, int>, Series> values;
};

ExpansionCache& expansion_cache() {
    static ExpansionCache cache;
    return cache;
}

}  // namespace

long bootstrap_cutoff(int digits) {
    const long n = 80L * digits;
    return n < 3000 ? 3000 : n;
}

Series harmonic_expansion(StreamKind kind, const SignedIndex& k, int digits) {
    if (kind == StreamKind::star_param)
        throw domain_error("harmonic_expansion: use parametric_star_expansion");
    if (k.empty()) return Series::constant(HPReal(1));
    const auto key = std::make_tuple(static_cast<int>(kind), k.str(), digits);
    auto& cache = expansion_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }

    const Series inner = harmonic_expansion(kind, k.tail(), digits);
    Series term = (kind == StreamKind::strict) ? inner.shifted_argument(-1) : inner;
    term = term.shifted_exponent(2 * k.magnitude(0));
    if (k.sign(0) < 0) term = term.flipped_parity();
    Series expansion = term.running_sum();

    const long n0 = bootstrap_cutoff(digits);
    HarmonicStream stream(k, kind);
    while (stream.n() < n0) stream.advance();
    const HPReal c = stream.value() - expansion.evaluate(n0);
    expansion.add_coeff(0, 0, 0, c);

    {
        std::unique_lock lock(cache.mutex);
        cache.values.emplace(key, expansion);
    }
    return expansion;
}

Series parametric_star_expansion(const Index& k, const HPReal& x, int digits) {
    if (abs(x) > HPReal(9) / 10)
        throw domain_error("parametric_star_expansion: |x| must be <= 0.9");
    if (k.empty()) return Series();  // x^n is exponentially small
    const Series inner = parametric_star_expansion(k.tail(), x, digits);
    Series term = inner.shifted_exponent(2 * k.first());
    Series expansion = term.running_sum();

    const long n0 = bootstrap_cutoff(digits);
    HarmonicStream stream(k, StreamKind::star_param, x);
    while (stream.n() < n0) stream.advance();
    const HPReal c = stream.value() - expansion.evaluate(n0);
    expansion.add_coeff(0, 0, 0, c);
    return expansion;
}

Series central_binomial_expansion(int digits) {
    const auto key = std::make_tuple(99, std::string("central-binomial"), digits);
    auto& cache = expansion_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    // ansatz sum_i a_i n^(-1/2-i) with a_0 = 1/sqrt(pi) from the Wallis
    // limit; the term ratio b_n/b_(n-1) = 1 - 1/(2n) pins a_i order by
    // order (a_i enters the residual at exponent 3/2+i with weight -i)
    Series b;
    b.add_coeff(0, 1, 0, 1 / sqrt(hp_pi()));
    Series ratio = Series::constant(HPReal(1));
    ratio.add_coeff(0, 2, 0, HPReal(-1) / 2);
    const int imax = (HMAX - 3) / 2;
    for (int i = 1; i <= imax; ++i) {
        Series residual = b;
        residual -= b.shifted_argument(-1) * ratio;
        const HPReal r = residual.coeff(0, 3 + 2 * (i - 1) + 2, 0);
        b.add_coeff(0, 1 + 2 * i, 0, r / i);
    }
    {
        std::unique_lock lock(cache.mutex);
        cache.values.emplace(key, b);
    }
    return b;
}

Series hurwitz_expansion(const Index& m, const HPReal& a, int digits) {
    if (m.empty()) return Series::constant(HPReal(1));
    const Series inner = hurwitz_expansion(m.tail(), a, digits);
    Series term = inner.shifted_argument(-1)
                      .shifted_exponent(2 * m.first())
                      .times_binomial_shift(a, m.first());
    Series expansion = term.running_sum();

    const long n0 = bootstrap_cutoff(digits);
    std::vector<HPReal> acc(static_cast<size_t>(m.depth()), HPReal(0));
    const int r = m.depth();
    for (long n = 1; n <= n0; ++n) {
        const HPReal base = HPReal(n) + a;
        for (int j = 0; j < r; ++j) {
            const HPReal inner_val =
                (j + 1 < r) ? acc[static_cast<size_t>(j + 1)] : HPReal(1);
            if (inner_val != 0)
                acc[static_cast<size_t>(j)] +=
                    inner_val / pow(base, static_cast<unsigned>(m[j]));
        }
    }
    const HPReal c = acc[0] - expansion.evaluate(n0);
    expansion.add_coeff(0, 0, 0, c);
    return expansion;
}

void clear_expansion_cache() {
    auto& cache = expansion_cache();
    std::unique_lock lock(cache.mutex);
    cache.values.clear();
}

HPReal euler_transform_limit(std::vector<HPReal> window, int passes) {
    if (window.empty())
        throw domain_error("euler_transform_limit: empty window");
    if (passes >= static_cast<int>(window.size()))
        passes = static_cast<int>(window.size()) - 1;
    size_t len = window.size();
    for (int p = 0; p < passes; ++p) {
        for (size_t i = 0; i + 1 < len; ++i)
            window[i] = (window[i] + window[i + 1]) / 2;
        --len;
    }
    return window[len - 1];
}

}  // namespace mzvlab::asym
