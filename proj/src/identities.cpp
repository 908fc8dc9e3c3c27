#include "mzvlab/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "mzvlab/index_algebra.hpp"
#include "mzvlab/words.hpp"

namespace mzvlab {

namespace {

int geti(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end() || it->second.size() != 1)
        throw domain_error("missing scalar parameter " + name);
    return it->second[0];
}

std::vector<int> getv(const Params& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw domain_error("missing parameter " + name);
    return it->second;
}

Params scalars(std::initializer_list<std::pair<const char*, int>> vals) {
    Params p;
    for (const auto& [name, v] : vals) p[name] = {v};
    return p;
}

Index ones(int m) { return repeat(1, m); }

Index cat(const Index& a, const Index& b) { return a.append(b); }

// ({s...}_d) repetition
Index repeat_index(const Index& block, int d) {
    Index out;
    for (int i = 0; i < d; ++i) out = out.append(block);
    return out;
}

ValueWithError exact_vw(const HPReal& v) {
    return {v, HPReal(0), BoundKind::rigorous, 0};
}

ValueWithError li_half_vw(const Index& k, const PrecisionConfig& cfg) {
    // partial-integral evaluation carries a geometric tail below the
    // working precision
    return {li_half(k, cfg), pow10(-(cfg.digits + 3)), BoundKind::rigorous, 0};
}

HPReal binom_hp(int n, int k) { return to_hpreal(Rational(binomial(n, k))); }

// signed index with the given magnitudes and per-slot signs
SignedIndex with_signs(const Index& mags, const std::vector<int>& signs) {
    std::vector<int> parts(static_cast<size_t>(mags.depth()));
    for (int i = 0; i < mags.depth(); ++i)
        parts[static_cast<size_t>(i)] = signs[static_cast<size_t>(i)] * mags[i];
    return SignedIndex(parts);
}

// sign arguments (sigma_q, sigma_q sigma_(q-1), ..., sigma_2 sigma_1)
// for a sign vector sigma_1..sigma_q
std::vector<int> cascade_signs(const std::vector<int>& sigma) {
    const int q = static_cast<int>(sigma.size());
    std::vector<int> out;
    out.reserve(static_cast<size_t>(q));
    out.push_back(sigma[static_cast<size_t>(q - 1)]);
    for (int i = 1; i <= q - 1; ++i)
        out.push_back(sigma[static_cast<size_t>(q - i)] *
                      sigma[static_cast<size_t>(q - i - 1)]);
    return out;
}

// all sign vectors of length q
std::vector<std::vector<int>> sign_vectors(int q) {
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1ul << q); ++mask) {
        std::vector<int> sigma(static_cast<size_t>(q));
        for (int j = 0; j < q; ++j)
            sigma[static_cast<size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
        out.push_back(std::move(sigma));
    }
    return out;
}

// the Hoffman dual of the transform (m_1, m_2+1, ..., m_j+1)
Index transform_dual(const std::vector<int>& m, int j) {
    return hoffman_dual(index_transform_mj(m, j));
}

// index of eq (3.5)'s right side: (m_p+1,...,m_(j+1)+1, m_j+2,
// m_(j-1)+1,...,m_1+1)
Index bump_at(const std::vector<int>& m, int j) {
    const int p = static_cast<int>(m.size());
    std::vector<int> parts;
    for (int t = p; t >= 1; --t)
        parts.push_back(m[static_cast<size_t>(t - 1)] + (t == j ? 2 : 1));
    return Index(parts);
}

// ---- side builders ------------------------------------------------

// Bell-side of the reducibility theorems: derivatives of the
// equal-entry Hurwitz product expressed through partitions; at a = 0
// the single factors are Riemann zeta values.
ValueWithError e5_side(int m, int p, int k, const HPReal& a,
                       const PrecisionConfig& cfg) {
    ValueWithError total;
    auto zeta_single = [&](int s) {
        return (a == 0) ? zeta_value(Index{s}, cfg) : hurwitz_single(s, a, cfg);
    };
    for (const auto& c : c_partitions(p)) {
        Rational coeff = 1;
        int blocks = 0;
        std::vector<int> sizes;
        for (int j = 1; j <= p; ++j) {
            const int cj = c[static_cast<size_t>(j - 1)];
            if (cj == 0) continue;
            blocks += cj;
            for (int t = 0; t < cj; ++t) sizes.push_back(j);
            // (-1)^((j-1) c_j) / (c_j! j^(c_j))
            if (((j - 1) * cj) % 2) coeff = -coeff;
            coeff /= Rational(factorial(cj));
            for (int t = 0; t < cj; ++t) coeff /= j;
        }
        ValueWithError inner;
        for (const auto& comp : compositions(k, blocks)) {
            ValueWithError prod = exact_vw(HPReal(1));
            BigInt cbin = 1;
            for (int slot = 0; slot < blocks; ++slot) {
                const int i = sizes[static_cast<size_t>(slot)];
                const int ks = comp[static_cast<size_t>(slot)];
                cbin *= binomial(i * m + i - 1 + ks, ks);
                const ValueWithError z = zeta_single(i * (m + 1) + ks);
                // multiply value-with-error pairs
                const HPReal nb = abs(prod.value) * z.bound +
                                  abs(z.value) * prod.bound + prod.bound * z.bound;
                prod.value *= z.value;
                prod.bound = nb;
                if (z.kind == BoundKind::heuristic) prod.kind = BoundKind::heuristic;
            }
            prod.scale(to_hpreal(Rational(cbin)));
            inner += prod;
        }
        inner.scale(to_hpreal(coeff));
        total += inner;
    }
    return total;
}

ValueWithError product_vw(const ValueWithError& a, const ValueWithError& b) {
    ValueWithError out;
    out.value = a.value * b.value;
    out.bound = abs(a.value) * b.bound + abs(b.value) * a.bound + a.bound * b.bound;
    out.kind = (a.kind == BoundKind::rigorous && b.kind == BoundKind::rigorous)
                   ? BoundKind::rigorous
                   : BoundKind::heuristic;
    out.terms_used = a.terms_used + b.terms_used;
    return out;
}

// shared sign-vector sum: coeff * sum_sigma [sigma_1] Li_(mags)(args)
ValueWithError signed_li_sum(const Index& mags, int q, bool extra_arg,
                             bool weight_sigma1, const PrecisionConfig& cfg) {
    ValueWithError total;
    for (const auto& sigma : sign_vectors(q)) {
        std::vector<int> args = cascade_signs(sigma);
        if (extra_arg) args.push_back(-sigma[0]);
        ValueWithError v = amzv(with_signs(mags, args), cfg);
        if (weight_sigma1 && sigma[0] < 0) v.scale(HPReal(-1));
        total += v;
    }
    return total;
}

std::vector<Identity> build_catalog();

}  // namespace

const std::vector<Identity>& catalog() {
    static const std::vector<Identity> entries = build_catalog();
    return entries;
}

namespace {

std::vector<Identity> build_catalog() {
    std::vector<Identity> out;

    // LI-ONES: Li at all-ones indices is a pure log power
    {
        Identity e;
        e.id = "LI-ONES";
        e.description = "all-ones polylogarithm reduces to a log power";
        e.tol_pow = 20;
        e.params = {{"r", false, 1, 5}, {"xden", false, 2, 4}};
        for (int r = 1; r <= 5; ++r)
            for (int xden : {2, 4})
                e.grid.push_back(scalars({{"r", r}, {"xden", xden}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return mpl(ones(geti(p, "r")), HPReal(1) / geti(p, "xden"), cfg);
        };
        // (-1)^r log^r(1-x) / r!
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            (void)cfg;
            const int r = geti(p, "r");
            const HPReal l1x = log(1 - HPReal(1) / geti(p, "xden"));
            HPReal v = pow(l1x, static_cast<unsigned>(r));
            for (int i = 2; i <= r; ++i) v /= i;
            if (r % 2) v = -v;
            return exact_vw(v);
        };
        out.push_back(std::move(e));
    }

    // EQ2.5: Li_(k,1^(r-1)) at x in terms of values at 1-x
    {
        Identity e;
        e.id = "EQ2.5";
        e.description = "depth-peeling of Li_(k,{1}^(r-1)) across x -> 1-x";
        e.tol_pow = 5;
        e.params = {{"k", false, 1, 4}, {"r", false, 1, 3}};
        for (int k = 1; k <= 4; ++k)
            for (int r = 1; r <= 3; ++r)
                e.grid.push_back(scalars({{"k", k}, {"r", r}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return mpl(cat(Index{geti(p, "k")}, ones(geti(p, "r") - 1)),
                       HPReal(1) / 2, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            const HPReal lx = -hp_log2();   // log(1/2)
            const HPReal l1x = -hp_log2();  // log(1 - 1/2)
            ValueWithError total;
            for (int j = 1; j <= k - 1; ++j) {
                HPReal outer = pow(lx, static_cast<unsigned>(k - 1 - j));
                for (int i = 2; i <= k - 1 - j; ++i) outer /= i;
                ValueWithError brace = zeta_value(cat(Index{r + 1}, ones(j - 1)), cfg);
                for (int i = 0; i <= r - 1; ++i) {
                    HPReal c = pow(l1x, static_cast<unsigned>(i));
                    for (int t = 2; t <= i; ++t) c /= t;
                    if (i % 2) c = -c;
                    ValueWithError li =
                        li_half_vw(cat(Index{r + 1 - i}, ones(j - 1)), cfg);
                    li.scale(-c);
                    brace += li;
                }
                brace.scale(outer);
                total += brace;
            }
            HPReal last = pow(lx, static_cast<unsigned>(k - 1)) *
                          pow(l1x, static_cast<unsigned>(r));
            for (int i = 2; i <= k - 1; ++i) last /= i;
            for (int i = 2; i <= r; ++i) last /= i;
            if (r % 2) last = -last;
            total += exact_vw(last);
            return total;
        };
        out.push_back(std::move(e));
    }

    // EQ2.9: the composition-sum form of the same polylogarithm
    {
        Identity e;
        e.id = "EQ2.9";
        e.description = "composition-sum form of Li_(k,{1}^(r-1)) across x -> 1-x";
        e.tol_pow = 5;
        e.params = {{"k", false, 1, 4}, {"r", false, 1, 3}};
        for (int k = 1; k <= 4; ++k)
            for (int r = 1; r <= 3; ++r)
                e.grid.push_back(scalars({{"k", k}, {"r", r}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return mpl(cat(Index{geti(p, "k")}, ones(geti(p, "r") - 1)),
                       HPReal(1) / 2, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            ValueWithError total;
            for (const auto& comp : compositions_positive(r + k, k)) {
                std::vector<int> head(comp.begin(), comp.end() - 1);
                ValueWithError v =
                    product_vw(li_half_vw(ones(comp.back() - 1), cfg),
                               li_half_vw(Index(head), cfg));
                if (k % 2 == 0) v.scale(HPReal(-1));  // (-1)^(k-1)
                total += v;
            }
            for (int j = 0; j <= k - 2; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(cat(Index{k - j}, ones(r - 1)), cfg),
                    li_half_vw(ones(j), cfg));
                if (j % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EQ2.10: difference of the two expansions
    {
        Identity e;
        e.id = "EQ2.10";
        e.description = "composition sum of polylogarithms vs log-weighted column";
        e.tol_pow = 5;
        e.params = {{"k", false, 2, 4}, {"r", false, 0, 2}};
        for (int k = 2; k <= 4; ++k)
            for (int r = 0; r <= 2; ++r)
                e.grid.push_back(scalars({{"k", k}, {"r", r}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            ValueWithError total;
            for (const auto& comp : compositions_positive(r + k, k - 1))
                total += li_half_vw(Index(comp), cfg);
            if (k % 2) total.scale(HPReal(-1));  // (-1)^k
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            const HPReal lx = -hp_log2();
            ValueWithError total;
            for (int j = 1; j <= k - 1; ++j) {
                ValueWithError li =
                    li_half_vw(cat(Index{r + 2}, ones(j - 1)), cfg);
                HPReal c = pow(lx, static_cast<unsigned>(k - 1 - j));
                for (int i = 2; i <= k - 1 - j; ++i) c /= i;
                li.scale(c);
                total += li;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EB1: Li_({1}^a, 2, {1}^b) at 1-x
    {
        Identity e;
        e.id = "EB1";
        e.description = "expansion of Li_({1}^a,2,{1}^b) across x -> 1-x";
        e.tol_pow = 5;
        e.params = {{"a", false, 0, 2}, {"b", false, 0, 2}};
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                e.grid.push_back(scalars({{"a", a}, {"b", b}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int a = geti(p, "a"), b = geti(p, "b");
            return li_half_vw(cat(cat(ones(a), Index{2}), ones(b)), cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int a = geti(p, "a"), b = geti(p, "b");
            ValueWithError total;
            for (int j = 0; j <= a; ++j) {
                ValueWithError v = product_vw(zeta_value(Index{j + b + 2}, cfg),
                                              li_half_vw(ones(a - j), cfg));
                v.scale(binom_hp(j + b + 1, j));
                if (j % 2) v.scale(HPReal(-1));
                total += v;
            }
            for (int j = 0; j <= b + 1; ++j) {
                ValueWithError v = product_vw(li_half_vw(ones(b + 1 - j), cfg),
                                              li_half_vw(Index{a + 1 + j}, cfg));
                v.scale(binom_hp(j + a, j));
                if (a % 2 == 0) v.scale(HPReal(-1));  // -(-1)^a
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // COR3.2-X: parametric series against polylogarithms at 1-x
    {
        Identity e;
        e.id = "COR3.2-X";
        e.description =
            "interior-x series of zeta_(n-1)({1}^(r-1)) zeta*_n(m_p-dual; x)";
        e.tol_pow = 5;
        e.params = {{"k", false, 1, 3},
                    {"r", false, 1, 2},
                    {"m", true, 0, 2, 1, 2},
                    {"p", false, 1, 2, 1, 1, true}};
        auto inst = [](int k, int r, std::vector<int> m) {
            Params p = scalars({{"k", k}, {"r", r}});
            p["m"] = std::move(m);
            return p;
        };
        e.grid = {inst(1, 1, {1}), inst(2, 1, {2}), inst(1, 2, {1, 1}),
                  inst(3, 1, {1}), inst(2, 2, {1, 2})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            return kyzv_param(cat(Index{k}, ones(r - 1)),
                              Index{1}.append(transform_dual(m, pp)),
                              HPReal(1) / 2, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            const HPReal l1x = -hp_log2();
            ValueWithError total;
            // composition block
            for (const auto& jc : compositions(r, k)) {
                const int jk = jc.back();
                std::vector<int> jhead(jc.begin(), jc.end() - 1);
                for (auto& v : jhead) v += 1;  // forward (j+1) tail
                for (const auto& ic : compositions(jk, pp + 1)) {
                    const int i0 = ic.front();
                    std::vector<int> irest(ic.begin() + 1, ic.end());
                    HPReal c = pow(l1x, static_cast<unsigned>(i0));
                    for (int t = 2; t <= i0; ++t) c /= t;
                    if (i0 % 2) c = -c;
                    std::vector<int> delta = irest;
                    for (auto& v : delta) v += 1;
                    Index li_index =
                        cat(rev_slice_plus(m, 1, pp, delta), Index(jhead));
                    ValueWithError li = li_half_vw(li_index, cfg);
                    BigInt bc = 1;
                    for (int l = 0; l < pp; ++l)
                        bc *= binomial(m[static_cast<size_t>(l)] +
                                           irest[static_cast<size_t>(l)],
                                       irest[static_cast<size_t>(l)]);
                    li.scale(c * to_hpreal(Rational(bc)));
                    if ((pp + k - 1) % 2) li.scale(HPReal(-1));
                    total += li;
                }
            }
            // zeta block
            for (int j = 0; j <= k - 2; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(cat(Index{k - j}, ones(r - 1)), cfg),
                    li_half_vw(cat(rev_slice_plus1(m, 1, pp), ones(j)), cfg));
                if ((pp + j) % 2) v.scale(HPReal(-1));
                total += v;
            }
            // K-Y block
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    kyzv(cat(Index{k}, ones(r - 1)),
                         Index{1}.append(transform_dual(m, j)), cfg),
                    li_half_vw(rev_slice_plus1(m, j + 1, pp), cfg));
                if ((pp - j) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EC1-X
    {
        Identity e;
        e.id = "EC1-X";
        e.description =
            "interior-x series of zeta_(n-1)({1}^(a-1),2,{1}^b) zeta*_n(...; x)";
        e.tol_pow = 5;
        e.params = {{"a", false, 1, 2},
                    {"b", false, 0, 1},
                    {"m", true, 0, 2, 1, 2},
                    {"p", false, 1, 2, 1, 1, true}};
        auto inst = [](int a, int b, std::vector<int> m) {
            Params p = scalars({{"a", a}, {"b", b}});
            p["m"] = std::move(m);
            return p;
        };
        e.grid = {inst(1, 0, {1}), inst(2, 1, {2}), inst(1, 1, {1, 1})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int a = geti(p, "a"), b = geti(p, "b");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            return kyzv_param(cat(cat(ones(a), Index{2}), ones(b)),
                              Index{1}.append(transform_dual(m, pp)),
                              HPReal(1) / 2, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int a = geti(p, "a"), b = geti(p, "b");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            const HPReal l1x = -hp_log2();
            ValueWithError total;
            auto weighted_block = [&](int top, const Index& suffix)
                -> ValueWithError {
                // sum over i_0+...+i_p = top of the binomial-log weights
                ValueWithError block;
                for (const auto& ic : compositions(top, pp + 1)) {
                    const int i0 = ic.front();
                    std::vector<int> irest(ic.begin() + 1, ic.end());
                    HPReal c = pow(l1x, static_cast<unsigned>(i0));
                    for (int t = 2; t <= i0; ++t) c /= t;
                    if (i0 % 2) c = -c;
                    std::vector<int> delta = irest;
                    for (auto& v : delta) v += 1;
                    ValueWithError li = li_half_vw(
                        cat(rev_slice_plus(m, 1, pp, delta), suffix), cfg);
                    BigInt bc = 1;
                    for (int l = 0; l < pp; ++l)
                        bc *= binomial(m[static_cast<size_t>(l)] +
                                           irest[static_cast<size_t>(l)],
                                       irest[static_cast<size_t>(l)]);
                    li.scale(c * to_hpreal(Rational(bc)));
                    block += li;
                }
                return block;
            };
            for (int j = 0; j <= a; ++j) {
                ValueWithError v = product_vw(zeta_value(Index{j + b + 2}, cfg),
                                              weighted_block(a - j, Index{}));
                v.scale(binom_hp(j + b + 1, j));
                if ((j + pp) % 2) v.scale(HPReal(-1));
                total += v;
            }
            for (int j = 0; j <= b + 1; ++j) {
                ValueWithError v = weighted_block(b + 1 - j, Index{a + 1 + j});
                v.scale(binom_hp(j + a, j));
                if ((a + pp) % 2 == 0) v.scale(HPReal(-1));  // -(-1)^(a+p)
                total += v;
            }
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    kyzv(cat(cat(ones(a), Index{2}), ones(b)),
                         Index{1}.append(transform_dual(m, j)), cfg),
                    li_half_vw(rev_slice_plus1(m, j + 1, pp), cfg));
                if ((pp - j) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EQ3.4: x = 0 specialization, K-Y side against zeta sums
    {
        Identity e;
        e.id = "EQ3.4";
        e.description = "x = 0 reduction: K-Y values against zeta compositions";
        e.tol_pow = 6;
        e.params = {{"k", false, 1, 3},
                    {"r", false, 1, 2},
                    {"m", true, 1, 2, 1, 2},
                    {"p", false, 1, 2, 1, 1, true}};
        auto inst = [](int k, int r, std::vector<int> m) {
            Params p = scalars({{"k", k}, {"r", r}});
            p["m"] = std::move(m);
            return p;
        };
        e.grid = {inst(1, 1, {2}),    inst(2, 1, {2}), inst(1, 2, {2}),
                  inst(2, 1, {1, 2}), inst(3, 1, {2}), inst(1, 2, {1, 2}),
                  inst(1, 1, {2, 2}), inst(2, 2, {2})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    kyzv(cat(Index{k}, ones(r - 1)),
                         Index{1}.append(transform_dual(m, j)), cfg),
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg));
                if ((j + 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int k = geti(p, "k"), r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (const auto& jc : compositions(r, k)) {
                const int jk = jc.back();
                std::vector<int> jhead(jc.begin(), jc.end() - 1);
                for (auto& v : jhead) v += 1;
                for (const auto& ic : compositions(jk, pp)) {
                    std::vector<int> delta = ic;
                    for (auto& v : delta) v += 1;
                    ValueWithError z = zeta_value(
                        cat(rev_slice_plus(m, 1, pp, delta), Index(jhead)), cfg);
                    BigInt bc = 1;
                    for (int l = 0; l < pp; ++l)
                        bc *= binomial(
                            m[static_cast<size_t>(l)] + ic[static_cast<size_t>(l)],
                            ic[static_cast<size_t>(l)]);
                    z.scale(to_hpreal(Rational(bc)));
                    if (k % 2 == 0) z.scale(HPReal(-1));  // (-1)^(k-1)
                    total += z;
                }
            }
            for (int j = 0; j <= k - 2; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(cat(Index{k - j}, ones(r - 1)), cfg),
                    zeta_value(cat(rev_slice_plus1(m, 1, pp), ones(j)), cfg));
                if (j % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EC2
    {
        Identity e;
        e.id = "EC2";
        e.description = "x = 0 reduction with the ({1}^a,2,{1}^b) strict factor";
        e.tol_pow = 6;
        e.params = {{"a", false, 1, 2},
                    {"b", false, 0, 1},
                    {"m", true, 1, 2, 1, 2},
                    {"p", false, 1, 2, 1, 1, true}};
        auto inst = [](int a, int b, std::vector<int> m) {
            Params p = scalars({{"a", a}, {"b", b}});
            p["m"] = std::move(m);
            return p;
        };
        e.grid = {inst(1, 0, {2}),    inst(1, 1, {2}), inst(2, 0, {2}),
                  inst(1, 0, {1, 2}), inst(2, 1, {2}), inst(1, 1, {2, 2})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int a = geti(p, "a"), b = geti(p, "b");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    kyzv(cat(cat(ones(a), Index{2}), ones(b)),
                         Index{1}.append(transform_dual(m, j)), cfg),
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg));
                if ((j + 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int a = geti(p, "a"), b = geti(p, "b");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            auto weighted = [&](int top, const Index& suffix) {
                ValueWithError block;
                for (const auto& ic : compositions(top, pp)) {
                    std::vector<int> delta = ic;
                    for (auto& v : delta) v += 1;
                    ValueWithError z = zeta_value(
                        cat(rev_slice_plus(m, 1, pp, delta), suffix), cfg);
                    BigInt bc = 1;
                    for (int l = 0; l < pp; ++l)
                        bc *= binomial(
                            m[static_cast<size_t>(l)] + ic[static_cast<size_t>(l)],
                            ic[static_cast<size_t>(l)]);
                    z.scale(to_hpreal(Rational(bc)));
                    block += z;
                }
                return block;
            };
            for (int j = 0; j <= a; ++j) {
                ValueWithError v = product_vw(zeta_value(Index{j + b + 2}, cfg),
                                              weighted(a - j, Index{}));
                v.scale(binom_hp(j + b + 1, j));
                if (j % 2) v.scale(HPReal(-1));
                total += v;
            }
            for (int j = 0; j <= b + 1; ++j) {
                ValueWithError v = weighted(b + 1 - j, Index{a + 1 + j});
                v.scale(binom_hp(j + a, j));
                if (a % 2 == 0) v.scale(HPReal(-1));  // -(-1)^a
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EQ3.5: star-vs-zeta reduction
    {
        Identity e;
        e.id = "EQ3.5";
        e.description = "alternating sum of zeta*(2, dual) against bumped zetas";
        e.tol_pow = 20;
        e.params = {{"m", true, 1, 2, 1, 3}, {"p", false, 1, 3, 1, 1, true}};
        for (std::vector<int> m :
             {std::vector<int>{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {2, 2},
              {1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}, {2, 1, 2}}) {
            Params p;
            p["m"] = m;
            e.grid.push_back(p);
        }
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg),
                    mzsv_value(Index{2}.append(transform_dual(m, j)), cfg));
                if ((j + 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = zeta_value(bump_at(m, j), cfg);
                v.scale(HPReal(m[static_cast<size_t>(j - 1)] + 1));
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EC3
    {
        Identity e;
        e.id = "EC3";
        e.description = "double-star variant of the bumped-zeta reduction";
        e.tol_pow = 20;
        e.params = {{"m", true, 1, 2, 1, 2}, {"p", false, 1, 2, 1, 1, true}};
        for (std::vector<int> m :
             {std::vector<int>{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            Params p;
            p["m"] = m;
            e.grid.push_back(p);
        }
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            const ValueWithError z2 = zeta_value(Index{2}, cfg);
            for (int j = 1; j <= pp; ++j) {
                const Index dual = transform_dual(m, j);
                ValueWithError brace =
                    product_vw(z2, mzsv_value(Index{2}.append(dual), cfg));
                ValueWithError sub = mzsv_value(cat(Index{2, 2}, dual), cfg);
                sub.scale(HPReal(-1));
                brace += sub;
                ValueWithError v = product_vw(
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg), brace);
                if ((j + 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            const ValueWithError z2 = zeta_value(Index{2}, cfg);
            const ValueWithError z3 = zeta_value(Index{3}, cfg);
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(z2, zeta_value(bump_at(m, j), cfg));
                v.scale(HPReal(m[static_cast<size_t>(j - 1)] + 1));
                total += v;
                ValueWithError w =
                    zeta_value(cat(bump_at(m, j), Index{2}), cfg);
                w.scale(HPReal(m[static_cast<size_t>(j - 1)] + 1));
                total += w;
            }
            ValueWithError t3 =
                product_vw(z3, zeta_value(rev_slice_plus1(m, 1, pp), cfg));
            t3.scale(HPReal(-2));
            total += t3;
            ValueWithError t4 =
                zeta_value(cat(rev_slice_plus1(m, 1, pp), Index{3}), cfg);
            t4.scale(HPReal(2));
            total += t4;
            return total;
        };
        out.push_back(std::move(e));
    }

    // ECD1
    {
        Identity e;
        e.id = "ECD1";
        e.description = "zeta*(2,2,dual) reduction assembled from the pair above";
        e.tol_pow = 20;
        e.params = {{"m", true, 1, 2, 1, 2}, {"p", false, 1, 2, 1, 1, true}};
        for (std::vector<int> m :
             {std::vector<int>{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            Params p;
            p["m"] = m;
            e.grid.push_back(p);
        }
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg),
                    mzsv_value(cat(Index{2, 2}, transform_dual(m, j)), cfg));
                if ((j + 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            const ValueWithError z3 = zeta_value(Index{3}, cfg);
            ValueWithError total =
                product_vw(z3, zeta_value(rev_slice_plus1(m, 1, pp), cfg));
            total.scale(HPReal(2));
            ValueWithError t2 =
                zeta_value(cat(rev_slice_plus1(m, 1, pp), Index{3}), cfg);
            t2.scale(HPReal(-2));
            total += t2;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v =
                    zeta_value(cat(bump_at(m, j), Index{2}), cfg);
                v.scale(HPReal(-(m[static_cast<size_t>(j - 1)] + 1)));
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // STAR-2-ONES
    {
        Identity e;
        e.id = "STAR-2-ONES";
        e.description = "zeta*(2,{1}^m) = (m+1) zeta(m+2)";
        e.tol_pow = 25;
        e.params = {{"m", false, 0, 5}};
        for (int m = 0; m <= 5; ++m) e.grid.push_back(scalars({{"m", m}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return mzsv_value(cat(Index{2}, ones(geti(p, "m"))), cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m");
            ValueWithError v = zeta_value(Index{m + 2}, cfg);
            v.scale(HPReal(m + 1));
            return v;
        };
        out.push_back(std::move(e));
    }

    // STAR-22-ONES
    {
        Identity e;
        e.id = "STAR-22-ONES";
        e.description = "zeta*(2,2,{1}^m) in double zeta values";
        e.tol_pow = 20;
        e.params = {{"m", false, 0, 3}};
        for (int m = 0; m <= 3; ++m) e.grid.push_back(scalars({{"m", m}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return mzsv_value(cat(Index{2, 2}, ones(geti(p, "m"))), cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m");
            ValueWithError v = zeta_value(Index{3, m + 1}, cfg);
            v.scale(HPReal(2));
            ValueWithError w = zeta_value(Index{m + 4}, cfg);
            w.scale(HPReal(2));
            v += w;
            ValueWithError u = zeta_value(Index{m + 2, 2}, cfg);
            u.scale(HPReal(-(m + 1)));
            v += u;
            return v;
        };
        out.push_back(std::move(e));
    }

    // CITED-21-1
    {
        Identity e;
        e.id = "CITED-21-1";
        e.description = "zeta*({2,{1}^(m-1)}^n, 1) = (m+1) zeta((m+1)n+1)";
        e.status = IdentityStatus::cited;
        e.tol_pow = 20;
        e.params = {{"m", false, 1, 3}, {"n", false, 1, 3}};
        for (auto [m, n] : {std::pair<int, int>{1, 1}, {1, 2}, {1, 3},
                            {2, 1}, {2, 2}, {3, 1}})
            e.grid.push_back(scalars({{"m", m}, {"n", n}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), n = geti(p, "n");
            const Index block = cat(Index{2}, ones(m - 1));
            return mzsv_value(cat(repeat_index(block, n), Index{1}), cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), n = geti(p, "n");
            ValueWithError v = zeta_value(Index{(m + 1) * n + 1}, cfg);
            v.scale(HPReal(m + 1));
            return v;
        };
        out.push_back(std::move(e));
    }

    // CITED-OZ
    {
        Identity e;
        e.id = "CITED-OZ";
        e.description =
            "zeta*({2}^m1,1,{2}^m2,1) against double star values";
        e.status = IdentityStatus::cited;
        e.tol_pow = 20;
        e.params = {{"m1", false, 1, 2}, {"m2", false, 1, 2}};
        for (int m1 = 1; m1 <= 2; ++m1)
            for (int m2 = 1; m2 <= 2; ++m2)
                e.grid.push_back(scalars({{"m1", m1}, {"m2", m2}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m1 = geti(p, "m1"), m2 = geti(p, "m2");
            Index idx = repeat(2, m1);
            idx = cat(idx, Index{1});
            idx = cat(idx, repeat(2, m2));
            idx = cat(idx, Index{1});
            return mzsv_value(idx, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m1 = geti(p, "m1"), m2 = geti(p, "m2");
            ValueWithError v = mzsv_value(Index{2 * m1 + 1, 2 * m2 + 1}, cfg);
            v.scale(HPReal(4));
            ValueWithError w = zeta_value(Index{2 * m1 + 2 * m2 + 2}, cfg);
            w.scale(HPReal(-2));
            v += w;
            return v;
        };
        out.push_back(std::move(e));
    }

    // E3-E5
    {
        Identity e;
        e.id = "E3-E5";
        e.description =
            "composition-weighted zeta sums against the partition form";
        e.tol_pow = 8;
        e.params = {{"m", false, 1, 2}, {"p", false, 1, 3}, {"k", false, 0, 3}};
        for (int m = 1; m <= 2; ++m)
            for (int p = 1; p <= 3; ++p)
                for (int k = 0; k <= 3; ++k)
                    e.grid.push_back(scalars({{"m", m}, {"p", p}, {"k", k}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), pp = geti(p, "p"), k = geti(p, "k");
            return composition_mzv_sum(std::vector<int>(pp, m), k, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            return e5_side(geti(p, "m"), geti(p, "p"), geti(p, "k"), HPReal(0),
                           cfg);
        };
        out.push_back(std::move(e));
    }

    // E6-REC
    {
        Identity e;
        e.id = "E6-REC";
        e.description = "equal-entry Hurwitz recurrence";
        e.tol_pow = 8;
        e.params = {{"m", false, 1, 2}, {"p", false, 2, 3}, {"a2", false, 0, 1}};
        for (auto [m, p, a2] :
             {std::tuple<int, int, int>{1, 2, 0}, {1, 2, 1}, {2, 2, 1},
              {1, 3, 1}, {2, 3, 0}, {1, 3, 0}})
            e.grid.push_back(scalars({{"m", m}, {"p", p}, {"a2", a2}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), pp = geti(p, "p");
            const HPReal a = HPReal(geti(p, "a2")) / 2;
            return hurwitz_mzv(repeat(m + 1, pp), a, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), pp = geti(p, "p");
            const HPReal a = HPReal(geti(p, "a2")) / 2;
            ValueWithError total;
            for (int i = 0; i <= pp - 1; ++i) {
                ValueWithError v =
                    product_vw(hurwitz_single((pp - i) * (m + 1), a, cfg),
                               hurwitz_mzv(repeat(m + 1, i), a, cfg));
                if (i % 2) v.scale(HPReal(-1));
                total += v;
            }
            total.scale(HPReal(pp % 2 ? 1 : -1) / pp);
            return total;
        };
        out.push_back(std::move(e));
    }

    // RC2
    {
        Identity e;
        e.id = "RC2";
        e.description = "K-Y value over ({1}^m,2,{1}^m) in zeta products";
        e.tol_pow = 8;
        e.params = {{"r", false, 1, 3}, {"m", false, 1, 2}};
        for (int r = 1; r <= 3; ++r)
            for (int m = 1; m <= 2; ++m)
                e.grid.push_back(scalars({{"r", r}, {"m", m}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r"), m = geti(p, "m");
            return kyzv(ones(r), cat(cat(ones(m), Index{2}), ones(m)), cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r"), m = geti(p, "m");
            ValueWithError total = zeta_value(Index{2 * m + r + 2}, cfg);
            total.scale(binom_hp(2 * m + r + 1, r) / 2);
            for (const auto& ks : compositions_positive(r, 2)) {
                ValueWithError v =
                    product_vw(zeta_value(Index{m + ks[0] + 1}, cfg),
                               zeta_value(Index{m + ks[1] + 1}, cfg));
                v.scale(-binom_hp(m + ks[0], ks[0]) * binom_hp(m + ks[1], ks[1]) /
                        2);
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // RC3
    {
        Identity e;
        e.id = "RC3";
        e.description =
            "K-Y value over ({1}^m,2,{1}^(m-1),2,{1}^m) in zeta products";
        e.tol_pow = 8;
        e.params = {{"r", false, 1, 3}, {"m", false, 1, 2}};
        for (int r = 1; r <= 3; ++r)
            for (int m = 1; m <= 2; ++m)
                e.grid.push_back(scalars({{"r", r}, {"m", m}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r"), m = geti(p, "m");
            Index l = cat(cat(ones(m), Index{2}), ones(m - 1));
            l = cat(cat(l, Index{2}), ones(m));
            return kyzv(ones(r), l, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r"), m = geti(p, "m");
            ValueWithError total = zeta_value(Index{3 * m + r + 3}, cfg);
            total.scale(binom_hp(3 * m + r + 2, r) / 3);
            for (const auto& ks : compositions_positive(r, 2)) {
                ValueWithError v =
                    product_vw(zeta_value(Index{m + ks[0] + 1}, cfg),
                               zeta_value(Index{2 * m + ks[1] + 2}, cfg));
                v.scale(-binom_hp(m + ks[0], ks[0]) *
                        binom_hp(2 * m + ks[1] + 1, ks[1]) / 2);
                total += v;
            }
            for (const auto& ks : compositions_positive(r, 3)) {
                ValueWithError v = product_vw(
                    product_vw(zeta_value(Index{m + ks[0] + 1}, cfg),
                               zeta_value(Index{m + ks[1] + 1}, cfg)),
                    zeta_value(Index{m + ks[2] + 1}, cfg));
                v.scale(binom_hp(m + ks[0], ks[0]) * binom_hp(m + ks[1], ks[1]) *
                        binom_hp(m + ks[2], ks[2]) / 6);
                total += v;
            }
            return total;
        };
        out.push_back(std::move(e));
    }

    // EC5
    {
        Identity e;
        e.id = "EC5";
        e.description = "K-Y value of ({1}^m,2,{1}^b) with an all-ones star side";
        e.tol_pow = 8;
        e.params = {{"m", false, 1, 2}, {"b", false, 0, 2}};
        for (int m = 1; m <= 2; ++m)
            for (int b = 0; b <= 2; ++b)
                e.grid.push_back(scalars({{"m", m}, {"b", b}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), b = geti(p, "b");
            return kyzv(cat(cat(ones(m), Index{2}), ones(b)), ones(m + 1), cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int m = geti(p, "m"), b = geti(p, "b");
            ValueWithError total;
            for (int j = 0; j <= m - 1; ++j) {
                ValueWithError v =
                    product_vw(zeta_value(Index{j + b + 2}, cfg),
                               zeta_value(Index{2 * m + 1 - j}, cfg));
                v.scale(binom_hp(j + b + 1, j) * binom_hp(2 * m - j, m));
                if (j % 2) v.scale(HPReal(-1));
                total += v;
            }
            for (const auto& ks : compositions_positive(b + 1, 2)) {
                ValueWithError v =
                    product_vw(zeta_value(Index{m + ks[0] + 1}, cfg),
                               zeta_value(Index{m + ks[1] + 1}, cfg));
                v.scale(binom_hp(m + ks[0], m) * binom_hp(m + ks[1], m) / 2);
                if (m % 2 == 0) v.scale(HPReal(-1));  // -(-1)^m / 2
                total += v;
            }
            ValueWithError last = zeta_value(Index{2 * m + b + 3}, cfg);
            last.scale(binom_hp(2 * m + b + 2, b + 1) / 2);
            if (m % 2) last.scale(HPReal(-1));  // +(-1)^m / 2
            total += last;
            return total;
        };
        out.push_back(std::move(e));
    }

    // CON-RC4 (conjecture)
    {
        Identity e;
        e.id = "CON-RC4";
        e.description =
            "conjectured partition form of the all-ones K-Y values";
        e.status = IdentityStatus::conjecture;
        e.tol_pow = 8;
        e.params = {{"r", false, 1, 3}, {"m", false, 1, 2}, {"p", false, 1, 3}};
        for (auto [r, m, p] :
             {std::tuple<int, int, int>{1, 1, 2}, {2, 1, 2}, {1, 1, 3},
              {2, 2, 2}, {3, 1, 3}, {1, 2, 3}})
            e.grid.push_back(scalars({{"r", r}, {"m", m}, {"p", p}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r"), m = geti(p, "m"), pp = geti(p, "p");
            Index l{1};
            l = cat(l, repeat_index(cat(ones(m - 1), Index{2}), pp - 1));
            l = cat(l, ones(m));
            return kyzv(ones(r), l, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r"), m = geti(p, "m"), pp = geti(p, "p");
            ValueWithError total;
            for (const auto& c : c_partitions(pp)) {
                Rational coeff = 1;
                int blocks = 0;
                std::vector<int> sizes;
                for (int j = 1; j <= pp; ++j) {
                    const int cj = c[static_cast<size_t>(j - 1)];
                    if (cj == 0) continue;
                    blocks += cj;
                    for (int t = 0; t < cj; ++t) sizes.push_back(j);
                    if (((j - 1) * cj) % 2) coeff = -coeff;
                    coeff /= Rational(factorial(cj));
                    for (int t = 0; t < cj; ++t) coeff /= j;
                }
                ValueWithError inner;
                for (const auto& comp : compositions_positive(r, blocks)) {
                    ValueWithError prod = exact_vw(HPReal(1));
                    BigInt cbin = 1;
                    for (int slot = 0; slot < blocks; ++slot) {
                        const int i = sizes[static_cast<size_t>(slot)];
                        const int ks = comp[static_cast<size_t>(slot)];
                        cbin *= binomial(i * m + i - 1 + ks, ks);
                        prod = product_vw(prod,
                                          zeta_value(Index{i * (m + 1) + ks}, cfg));
                    }
                    prod.scale(to_hpreal(Rational(cbin)));
                    inner += prod;
                }
                inner.scale(to_hpreal(coeff));
                total += inner;
            }
            if (pp % 2 == 0) total.scale(HPReal(-1));  // (-1)^(p+1)
            return total;
        };
        out.push_back(std::move(e));
    }

    // THM4.3
    {
        Identity e;
        e.id = "THM4.3";
        e.description =
            "binomial star values against alternating zeta combinations";
        e.tol_pow = 8;
        e.params = {{"p", false, 1, 2}, {"r", false, 0, 1},
                    {"m", true, 1, 1, 1, 2}};
        auto inst = [](int p, int r, std::vector<int> m) {
            Params q = scalars({{"p", p}, {"r", r}});
            q["m"] = std::move(m);
            return q;
        };
        e.grid = {inst(1, 0, {1}), inst(1, 1, {1}), inst(2, 0, {1, 1}),
                  inst(2, 1, {1, 1})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg),
                    mzbsv(Index{r + 2}.append(transform_dual(m, j)), cfg));
                if ((j - 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            int mw = 0;
            for (int v : m) mw += v;
            const HPReal two_pow = pow(HPReal(2), static_cast<unsigned>(mw + 1));
            ValueWithError total;
            for (int j = 1; j <= r; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(cat(rev_slice_plus1(m, 1, pp), ones(r - j)), cfg),
                    mzbsv(Index{j + 1}, cfg));
                if ((r - j) % 2) v.scale(HPReal(-1));
                total += v;
            }
            ValueWithError li1 = signed_li_sum(
                cat(rev_slice_plus1(m, 1, pp), ones(r)), pp + r, false, false, cfg);
            li1.scale(two_pow * hp_log2());
            if (r % 2) li1.scale(HPReal(-1));
            total += li1;
            // both integral pieces inherit the (-1)^r of the n^(r+1)
            // prefactor, trailing-one block included
            ValueWithError li2 =
                signed_li_sum(cat(rev_slice_plus1(m, 1, pp), ones(r + 1)),
                              pp + r, true, false, cfg);
            li2.scale(two_pow);
            if (r % 2) li2.scale(HPReal(-1));
            total += li2;
            return total;
        };
        out.push_back(std::move(e));
    }

    // THM4.4
    {
        Identity e;
        e.id = "THM4.4";
        e.description =
            "harmonic-weighted binomial sums against alternating zetas";
        e.tol_pow = 8;
        e.params = {{"p", false, 1, 2}, {"r", false, 0, 1},
                    {"m", true, 1, 1, 1, 2}};
        auto inst = [](int p, int r, std::vector<int> m) {
            Params q = scalars({{"p", p}, {"r", r}});
            q["m"] = std::move(m);
            return q;
        };
        e.grid = {inst(1, 0, {1}), inst(1, 1, {1}), inst(2, 0, {1, 1}),
                  inst(2, 1, {1, 1})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            ValueWithError total;
            for (int j = 1; j <= pp; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(rev_slice_plus1(m, j + 1, pp), cfg),
                    mzbsv_hweighted(transform_dual(m, j), r, cfg));
                if ((j - 1) % 2) v.scale(HPReal(-1));
                total += v;
            }
            return total;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r");
            const auto m = getv(p, "m");
            const int pp = static_cast<int>(m.size());
            int mw = 0;
            for (int v : m) mw += v;
            const HPReal two_pow = pow(HPReal(2), static_cast<unsigned>(mw + 1));
            ValueWithError total;
            for (int j = 1; j <= r; ++j) {
                ValueWithError v = product_vw(
                    zeta_value(cat(rev_slice_plus1(m, 1, pp), ones(r - j)), cfg),
                    mzbsv(Index{j, 1}, cfg));
                if ((r - j) % 2) v.scale(HPReal(-1));
                total += v;
            }
            // composition block: |i|_r + |j|_p = 1
            ValueWithError comp_block;
            for (const auto& c : compositions(1, r + pp)) {
                std::vector<int> iv(c.begin(), c.begin() + r);
                std::vector<int> jv(c.begin() + r, c.end());
                BigInt bc = 1;
                for (int l = 0; l < pp; ++l)
                    bc *= binomial(
                        m[static_cast<size_t>(l)] + jv[static_cast<size_t>(l)],
                        jv[static_cast<size_t>(l)]);
                std::vector<int> jdelta = jv;
                for (auto& v : jdelta) v += 1;
                Index mags = rev_slice_plus(m, 1, pp, jdelta);
                if (r > 0)
                    mags = cat(mags, rev_slice_plus(
                                         iv, 1, r,
                                         std::vector<int>(static_cast<size_t>(r), 1)));
                ValueWithError v =
                    signed_li_sum(mags, pp + r, false, true, cfg);
                v.scale(to_hpreal(Rational(bc)));
                comp_block += v;
            }
            comp_block.scale(two_pow);
            if (r % 2) comp_block.scale(HPReal(-1));
            total += comp_block;
            ValueWithError li1 = signed_li_sum(
                cat(rev_slice_plus1(m, 1, pp), ones(r)), pp + r, false, true, cfg);
            li1.scale(-two_pow * hp_log2());
            if (r % 2) li1.scale(HPReal(-1));
            total += li1;
            ValueWithError li2 =
                signed_li_sum(cat(rev_slice_plus1(m, 1, pp), ones(r + 1)),
                              pp + r, true, true, cfg);
            li2.scale(-two_pow);
            if (r % 2) li2.scale(HPReal(-1));
            total += li2;
            return total;
        };
        out.push_back(std::move(e));
    }

    // GOLD-ZB221
    {
        Identity e;
        e.id = "GOLD-ZB221";
        e.description = "zeta*_B(2,2,1) closed form";
        e.tol_pow = 8;
        e.grid.push_back(Params{});
        e.lhs = [](const Params&, const PrecisionConfig& cfg) {
            return mzbsv(Index{2, 2, 1}, cfg);
        };
        e.rhs = [](const Params&, const PrecisionConfig& cfg) {
            ValueWithError v = zeta_value(Index{5}, cfg);
            v.scale(HPReal(75) / 8);
            ValueWithError w = zeta_value(Index{4}, cfg);
            w.scale(-4 * hp_log2());
            v += w;
            ValueWithError u =
                product_vw(zeta_value(Index{2}, cfg), zeta_value(Index{3}, cfg));
            u.scale(HPReal(-3));
            v += u;
            return v;
        };
        out.push_back(std::move(e));
    }

    // GOLD-HN2
    {
        Identity e;
        e.id = "GOLD-HN2";
        e.description = "squared-harmonic central-binomial sum closed form";
        e.tol_pow = 8;
        e.grid.push_back(Params{});
        e.lhs = [](const Params&, const PrecisionConfig& cfg) {
            return mzbsv_hweighted(Index{1}, 1, cfg);
        };
        e.rhs = [](const Params&, const PrecisionConfig& cfg) {
            const HPReal log2 = hp_log2();
            ValueWithError v = li_half_vw(Index{4}, cfg);
            v.scale(HPReal(32));
            ValueWithError z4 = zeta_value(Index{4}, cfg);
            z4.scale(HPReal(-14));
            v += z4;
            ValueWithError z3 = zeta_value(Index{3}, cfg);
            z3.scale(7 * log2);
            v += z3;
            ValueWithError z2 = zeta_value(Index{2}, cfg);
            z2.scale(-8 * log2 * log2);
            v += z2;
            v += exact_vw(HPReal(4) / 3 * pow(log2, 4u));
            return v;
        };
        out.push_back(std::move(e));
    }

    // GF-1 / GF-2
    {
        Identity e;
        e.id = "GF-1";
        e.description = "central-binomial generating function, weight 1/n";
        e.tol_pow = 10;
        e.params = {{"tnum", false, 1, 3}};
        for (int t = 1; t <= 3; ++t) e.grid.push_back(scalars({{"tnum", t}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            (void)cfg;
            const HPReal t = HPReal(geti(p, "tnum")) / 4;
            ValueWithError v = exact_vw(gf_binomial_series(t, 10000));
            v.terms_used = 10000;
            return v;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            (void)cfg;
            return exact_vw(gf_binomial(HPReal(geti(p, "tnum")) / 4));
        };
        out.push_back(std::move(e));
    }
    {
        Identity e;
        e.id = "GF-2";
        e.description = "central-binomial generating function, harmonic weight";
        e.tol_pow = 10;
        e.params = {{"tnum", false, 1, 3}};
        for (int t = 1; t <= 3; ++t) e.grid.push_back(scalars({{"tnum", t}}));
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            (void)cfg;
            const HPReal t = HPReal(geti(p, "tnum")) / 4;
            ValueWithError v = exact_vw(gf_binomial_h_series(t, 10000));
            v.terms_used = 10000;
            return v;
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            (void)cfg;
            return exact_vw(gf_binomial_h(HPReal(geti(p, "tnum")) / 4));
        };
        out.push_back(std::move(e));
    }

    // KY-SPECIAL
    {
        Identity e;
        e.id = "KY-SPECIAL";
        e.description = "K-Y values collapse to zeta / zeta* at unit sides";
        e.tol_pow = 8;
        e.params = {{"side", false, 0, 1}, {"v", true, 1, 3, 1, 2}};
        auto inst = [](int side, std::vector<int> v) {
            Params p = scalars({{"side", side}});
            p["v"] = std::move(v);
            return p;
        };
        e.grid = {inst(0, {2}),    inst(0, {1, 1}), inst(0, {2, 1}),
                  inst(0, {3}),    inst(1, {1}),    inst(1, {2}),
                  inst(1, {1, 1}), inst(1, {2, 1})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            const Index v{getv(p, "v")};
            return geti(p, "side") == 0 ? kyzv(v, Index{1}, cfg)
                                        : kyzv(Index{1}, v, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const Index v{getv(p, "v")};
            std::vector<int> lifted = v.parts();
            lifted[0] += 1;
            return geti(p, "side") == 0 ? zeta_value(Index{lifted}, cfg)
                                        : mzsv_value(Index{lifted}, cfg);
        };
        out.push_back(std::move(e));
    }

    // CON-ZB (conjecture spot checks)
    {
        Identity e;
        e.id = "CON-ZB";
        e.description =
            "depth-2 binomial star values expressed in alternating zetas";
        e.status = IdentityStatus::conjecture;
        e.tol_pow = 8;
        e.params = {{"r", false, 0, 1}};
        e.grid = {scalars({{"r", 0}}), scalars({{"r", 1}})};
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return mzbsv(Index{geti(p, "r") + 2, 1}, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const int r = geti(p, "r");
            // instance of the binomial/alternating relation at p = 1, m = (1)
            ValueWithError total;
            for (int j = 1; j <= r; ++j) {
                ValueWithError v =
                    product_vw(zeta_value(cat(Index{2}, ones(r - j)), cfg),
                               mzbsv(Index{j + 1}, cfg));
                if ((r - j) % 2) v.scale(HPReal(-1));
                total += v;
            }
            ValueWithError li1 =
                signed_li_sum(cat(Index{2}, ones(r)), 1 + r, false, false, cfg);
            li1.scale(4 * hp_log2());
            if (r % 2) li1.scale(HPReal(-1));
            total += li1;
            ValueWithError li2 =
                signed_li_sum(cat(Index{2}, ones(r + 1)), 1 + r, true, false, cfg);
            li2.scale(HPReal(4));
            if (r % 2) li2.scale(HPReal(-1));
            total += li2;
            return total;
        };
        out.push_back(std::move(e));
    }

    // DUALITY
    {
        Identity e;
        e.id = "DUALITY";
        e.description = "zeta(k) = zeta(dual k) through the word involution";
        e.tol_pow = 25;
        e.params = {{"k", true, 1, 7, 1, 7}};
        for (int w = 2; w <= 7; ++w)
            for (const Index& k : all_indices_of_weight(w))
                if (admissible(k)) {
                    Params p;
                    p["k"] = k.parts();
                    e.grid.push_back(p);
                }
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return zeta_value(Index{getv(p, "k")}, cfg);
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            const Index k{getv(p, "k")};
            return zeta_value(word_to_index(tau(index_to_word(k))), cfg);
        };
        out.push_back(std::move(e));
    }

    // STUFFLE
    {
        Identity e;
        e.id = "STUFFLE";
        e.description = "quasi-shuffle relation zeta(a)zeta(b) = stuffle sum";
        e.tol_pow = 25;
        e.params = {{"a", true, 1, 5, 1, 5}, {"b", true, 1, 5, 1, 5}};
        std::vector<Index> pool;
        for (int w = 2; w <= 5; ++w)
            for (const Index& k : all_indices_of_weight(w))
                if (admissible(k)) pool.push_back(k);
        std::mt19937 rng(424242u);
        for (int i = 0; i < 50; ++i) {
            Params p;
            p["a"] = pool[rng() % pool.size()].parts();
            p["b"] = pool[rng() % pool.size()].parts();
            e.grid.push_back(p);
        }
        e.lhs = [](const Params& p, const PrecisionConfig& cfg) {
            return product_vw(zeta_value(Index{getv(p, "a")}, cfg),
                              zeta_value(Index{getv(p, "b")}, cfg));
        };
        e.rhs = [](const Params& p, const PrecisionConfig& cfg) {
            return zeta_value(stuffle(Index{getv(p, "a")}, Index{getv(p, "b")}),
                              cfg);
        };
        out.push_back(std::move(e));
    }

    std::sort(out.begin(), out.end(),
              [](const Identity& a, const Identity& b) { return a.id < b.id; });
    return out;
}

}  // namespace

std::vector<const Identity*> list_identities(const std::string& filter) {
    std::string prefix = filter;
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    std::vector<const Identity*> out;
    for (const Identity& e : catalog())
        if (prefix.empty() || e.id.rfind(prefix, 0) == 0) out.push_back(&e);
    return out;
}

std::string format_params(const Params& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, vals] : p) {
        if (!first) os << ' ';
        first = false;
        os << name << '=';
        for (size_t i = 0; i < vals.size(); ++i) {
            if (i) os << ',';
            os << vals[i];
        }
    }
    return os.str();
}

Params parse_param_assignments(const std::vector<std::string>& assignments) {
    Params out;
    for (const std::string& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos)
            throw domain_error("parameter must look like name=value: " + a);
        const std::string name = a.substr(0, eq);
        std::vector<int> vals;
        std::string rest = a.substr(eq + 1);
        if (rest.empty()) throw domain_error("empty value for parameter " + name);
        size_t pos = 0;
        while (pos <= rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string tok =
                rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
            try {
                vals.push_back(std::stoi(tok));
            } catch (...) {
                throw domain_error("bad integer '" + tok + "' in parameter " + name);
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        out[name] = std::move(vals);
    }
    return out;
}

namespace {

void validate_params(const Identity& e, const Params& p) {
    for (const ParamSpec& spec : e.params) {
        auto it = p.find(spec.name);
        if (it == p.end()) {
            if (spec.optional) continue;
            throw domain_error("identity " + e.id + ": missing parameter '" +
                               spec.name + "'");
        }
        const auto& vals = it->second;
        const int len = static_cast<int>(vals.size());
        if (len < spec.min_len || len > spec.max_len)
            throw domain_error("identity " + e.id + ": parameter '" + spec.name +
                               "' must have length in [" +
                               std::to_string(spec.min_len) + ", " +
                               std::to_string(spec.max_len) + "]");
        for (int v : vals)
            if (v < spec.min_value || v > spec.max_value)
                throw domain_error("identity " + e.id + ": parameter '" +
                                   spec.name + "' must lie in [" +
                                   std::to_string(spec.min_value) + ", " +
                                   std::to_string(spec.max_value) + "]");
    }
    for (const auto& [name, vals] : p) {
        (void)vals;
        bool known = false;
        for (const ParamSpec& spec : e.params)
            if (spec.name == name) known = true;
        if (!known)
            throw domain_error("identity " + e.id + ": unknown parameter '" +
                               name + "'");
    }
    // a redundant depth parameter must agree with the vector it describes
    bool m_is_vector = false;
    for (const ParamSpec& spec : e.params)
        if (spec.name == "m" && spec.is_vector) m_is_vector = true;
    const auto pit = p.find("p");
    const auto mit = p.find("m");
    if (m_is_vector && pit != p.end() && mit != p.end() &&
        pit->second.size() == 1 &&
        mit->second.size() != static_cast<size_t>(pit->second[0]))
        throw domain_error("identity " + e.id + ": p must equal the length of m");
}

VerificationReport run_instance(const Identity& e, const Params& p,
                                const PrecisionConfig& cfg) {
    validate_params(e, p);
    const auto t0 = std::chrono::steady_clock::now();
    const ValueWithError lhs = e.lhs(p, cfg);
    const ValueWithError rhs = e.rhs(p, cfg);
    const auto t1 = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.id = e.id;
    rep.params = format_params(p);
    rep.lhs = lhs.value;
    rep.rhs = rhs.value;
    rep.abs_diff = abs(lhs.value - rhs.value);
    rep.tolerance = cfg.tolerance ? *cfg.tolerance : pow10(-e.tol_pow);
    rep.bound = lhs.bound + rhs.bound;
    rep.passed = rep.abs_diff <= (rep.tolerance > rep.bound ? rep.tolerance
                                                            : rep.bound);
    rep.conjecture = e.status == IdentityStatus::conjecture;
    rep.terms_used = lhs.terms_used + rhs.terms_used;
    rep.seconds = std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

}  // namespace

VerificationReport verify(const std::string& id, const Params& params,
                          const PrecisionConfig& cfg) {
    for (const Identity& e : catalog())
        if (e.id == id) return run_instance(e, params, cfg);
    throw domain_error("unknown identity id: " + id);
}

std::vector<VerificationReport> run_suite(const std::string& filter,
                                          const PrecisionConfig& cfg, int jobs) {
    struct Task {
        const Identity* e;
        const Params* p;
    };
    std::vector<Task> tasks;
    for (const Identity* e : list_identities(filter))
        for (const Params& p : e->grid) tasks.push_back({e, &p});
    std::vector<VerificationReport> reports(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            reports[i] = run_instance(*tasks[i].e, *tasks[i].p, cfg);
        return reports;
    }
    // entries are independent; reports keep catalog order
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            reports[i] = run_instance(*tasks[i].e, *tasks[i].p, cfg);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return reports;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.conjecture && !r.passed) return false;
    return true;
}

}  // namespace mzvlab
