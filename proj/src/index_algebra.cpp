#include "mzvlab/index_algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mzvlab {

Index hoffman_dual(const Index& k) {
    if (k.empty()) throw domain_error("hoffman_dual: empty index");
    const int w = k.weight();
    std::vector<bool> cut(static_cast<size_t>(w), false);  // cut[s] for s in 1..w-1
    int acc = 0;
    for (int i = 0; i + 1 < k.depth(); ++i) {
        acc += k[i];
        cut[static_cast<size_t>(acc)] = true;
    }
    std::vector<int> dual;
    int prev = 0;
    for (int s = 1; s <= w - 1; ++s) {
        if (!cut[static_cast<size_t>(s)]) {
            dual.push_back(s - prev);
            prev = s;
        }
    }
    dual.push_back(w - prev);
    return Index(std::move(dual));
}

FormalIndexSum star_expand(const Index& k) {
    if (k.empty()) throw domain_error("star_expand: empty index");
    const int r = k.depth();
    FormalIndexSum out;
    for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
        std::vector<int> parts;
        int cur = k[0];
        for (int i = 1; i < r; ++i) {
            if (mask & (1ul << (i - 1))) {
                cur += k[i];  // '+' chosen at separator i
            } else {
                parts.push_back(cur);
                cur = k[i];
            }
        }
        parts.push_back(cur);
        out.add(Index(std::move(parts)), 1);
    }
    return out;
}

FormalSignedSum star_expand_signed(const SignedIndex& s) {
    if (s.empty()) throw domain_error("star_expand_signed: empty index");
    const int r = s.depth();
    FormalSignedSum out;
    for (unsigned long mask = 0; mask < (1ul << (r - 1)); ++mask) {
        std::vector<int> parts;
        int mag = s.magnitude(0);
        int sgn = s.sign(0);
        for (int i = 1; i < r; ++i) {
            if (mask & (1ul << (i - 1))) {
                mag += s.magnitude(i);
                sgn *= s.sign(i);
            } else {
                parts.push_back(sgn * mag);
                mag = s.magnitude(i);
                sgn = s.sign(i);
            }
        }
        parts.push_back(sgn * mag);
        out.add(SignedIndex(std::move(parts)), 1);
    }
    return out;
}

namespace {

// Memoized top-down recursion on the pair of suffixes.
using StufflePair = std::pair<Index, Index>;
std::map<StufflePair, FormalIndexSum>& stuffle_cache() {
    static std::map<StufflePair, FormalIndexSum> cache;
    return cache;
}

}  // namespace

FormalIndexSum stuffle(const Index& a, const Index& b) {
    if (a.empty()) return FormalIndexSum::single(b);
    if (b.empty()) return FormalIndexSum::single(a);
    const StufflePair key = a <= b ? StufflePair{a, b} : StufflePair{b, a};
    {
        auto& cache = stuffle_cache();
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FormalIndexSum out;
    const FormalIndexSum left = stuffle(a.tail(), b);
    for (const auto& [k, c] : left.terms()) out.add(k.prepend(a.first()), c);
    const FormalIndexSum right = stuffle(a, b.tail());
    for (const auto& [k, c] : right.terms()) out.add(k.prepend(b.first()), c);
    const FormalIndexSum both = stuffle(a.tail(), b.tail());
    for (const auto& [k, c] : both.terms())
        out.add(k.prepend(a.first() + b.first()), c);
    stuffle_cache().emplace(key, out);
    return out;
}

FormalIndexSum stuffle(const FormalIndexSum& a, const FormalIndexSum& b) {
    FormalIndexSum out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add(stuffle(ka, kb), ca * cb);
    return out;
}

FormalIndexSum circled_product(const Index& a, const Index& b) {
    if (a.empty() || b.empty())
        throw domain_error("circled_product: operands must be nonempty");
    FormalIndexSum out;
    const FormalIndexSum tails = stuffle(a.tail(), b.tail());
    for (const auto& [k, c] : tails.terms())
        out.add(k.prepend(a.first() + b.first()), c);
    return out;
}

Index index_transform_mj(const std::vector<int>& m, int j) {
    if (j < 1 || j > static_cast<int>(m.size()))
        throw domain_error("index_transform_mj: j out of range");
    if (m.empty() || m[0] < 1)
        throw domain_error("index_transform_mj: m_1 must be >= 1");
    for (size_t i = 1; i < m.size(); ++i)
        if (m[i] < 0) throw domain_error("index_transform_mj: m_i must be >= 0");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(j));
    out.push_back(m[0]);
    for (int i = 2; i <= j; ++i) out.push_back(m[static_cast<size_t>(i - 1)] + 1);
    return Index(std::move(out));
}

Index rev_slice_plus(const std::vector<int>& m, int i, int j,
                     const std::vector<int>& delta) {
    if (i > j) return Index{};
    if (i < 1 || j > static_cast<int>(m.size()))
        throw domain_error("rev_slice_plus: slice out of range");
    if (static_cast<int>(delta.size()) != j - i + 1)
        throw domain_error("rev_slice_plus: delta length mismatch");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(j - i + 1));
    for (int t = j; t >= i; --t)
        out.push_back(m[static_cast<size_t>(t - 1)] +
                      delta[static_cast<size_t>(t - i)]);
    return Index(std::move(out));
}

Index rev_slice_plus1(const std::vector<int>& m, int i, int j) {
    if (i > j) return Index{};
    return rev_slice_plus(m, i, j, std::vector<int>(static_cast<size_t>(j - i + 1), 1));
}

namespace {

void compositions_rec(int total, int parts, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = total; first >= 0; --first) {
        cur.push_back(first);
        compositions_rec(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    compositions_rec(total, parts, cur, out);
    return out;
}

std::vector<std::vector<int>> compositions_positive(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    if (total < parts) return out;
    for (auto& c : compositions(total - parts, parts)) {
        for (auto& v : c) v += 1;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::vector<int>> c_partitions(int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(p), 0);
    // Choose c_p, c_{p-1}, ..., c_1 so that sum j*c_j = p.
    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == 1) {
            cur[0] = remaining;
            out.push_back(cur);
            cur[0] = 0;
            return;
        }
        for (int c = 0; c * j <= remaining; ++c) {
            cur[static_cast<size_t>(j - 1)] = c;
            self(self, j - 1, remaining - c * j);
        }
        cur[static_cast<size_t>(j - 1)] = 0;
    };
    if (p >= 1) rec(rec, p, p);
    return out;
}

std::vector<Index> all_indices_of_weight(int w) {
    std::vector<Index> out;
    if (w <= 0) return out;
    for (unsigned long mask = 0; mask < (1ul << (w - 1)); ++mask) {
        std::vector<int> parts;
        int cur = 1;
        for (int i = 1; i < w; ++i) {
            if (mask & (1ul << (i - 1))) {
                cur += 1;
            } else {
                parts.push_back(cur);
                cur = 1;
            }
        }
        parts.push_back(cur);
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace mzvlab
