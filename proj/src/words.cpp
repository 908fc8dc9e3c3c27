#include "mzvlab/words.hpp"

#include "mzvlab/index_algebra.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace mzvlab {

Word Word::from_string(const std::string& s) {
    std::vector<uint8_t> letters;
    letters.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            letters.push_back(0);
        else if (c == '1')
            letters.push_back(1);
        else
            throw domain_error("word letters must be 0 or 1");
    }
    return Word(std::move(letters));
}

Word Word::prefix(int len) const {
    return Word(std::vector<uint8_t>(letters_.begin(), letters_.begin() + len));
}

Word Word::suffix_from(int pos) const {
    return Word(std::vector<uint8_t>(letters_.begin() + pos, letters_.end()));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (uint8_t l : letters_) s += static_cast<char>('0' + l);
    return s;
}

Word index_to_word(const Index& k) {
    if (k.empty()) return Word{};
    if (!admissible(k))
        throw domain_error("index_to_word: index must be admissible");
    std::vector<uint8_t> letters;
    letters.reserve(static_cast<size_t>(k.weight()));
    for (int j = 0; j < k.depth(); ++j) {
        for (int i = 0; i < k[j] - 1; ++i) letters.push_back(0);
        letters.push_back(1);
    }
    return Word(std::move(letters));
}

Index word_to_index(const Word& w) {
    if (w.empty()) return Index{};
    if (w[0] != 0 || w[w.size() - 1] != 1)
        throw domain_error("word_to_index: word must start with 0 and end with 1");
    std::vector<int> parts;
    int zeros = 0;
    for (int i = 0; i < w.size(); ++i) {
        if (w[i] == 0) {
            ++zeros;
        } else {
            parts.push_back(zeros + 1);
            zeros = 0;
        }
    }
    return Index(std::move(parts));
}

Word tau(const Word& w) {
    std::vector<uint8_t> letters(w.letters().rbegin(), w.letters().rend());
    for (auto& l : letters) l = static_cast<uint8_t>(1 - l);
    return Word(std::move(letters));
}

namespace {

struct ZHalfCache {
    std::shared_mutex mutex;
    std::map<std::pair<std::string, int>, HPReal> values;
};

ZHalfCache& z_half_cache() {
    static ZHalfCache cache;
    return cache;
}

int series_terms(int digits) {
    // 2^-M below 10^-P plus margin
    return static_cast<int>(
               std::ceil(static_cast<double>(digits) * 3.3219280948873623)) +
           10;
}

HPReal z_half_compute(const Word& w, int digits) {
    const int terms = series_terms(digits + guard_digits() / 2);
    // Power-series coefficients of the partial integral, built from the
    // innermost letter outward.  Letter 1 maps c -> prefix-sums/n,
    // letter 0 divides by n; |c_n| <= 1 throughout, so the value at 1/2
    // has a geometric tail below 2^-terms.
    std::vector<HPReal> c(static_cast<size_t>(terms + 1), HPReal(0));
    c[0] = 1;
    for (int pos = w.size() - 1; pos >= 0; --pos) {
        if (w[pos] == 1) {
            HPReal run = 0;
            std::vector<HPReal> next(static_cast<size_t>(terms + 1), HPReal(0));
            for (int n = 1; n <= terms; ++n) {
                run += c[static_cast<size_t>(n - 1)];
                next[static_cast<size_t>(n)] = run / n;
            }
            c = std::move(next);
        } else {
            if (c[0] != 0)
                throw divergence_error(
                    "z_half: word has a trailing dt/t form (divergent at 0)");
            for (int n = 1; n <= terms; ++n)
                c[static_cast<size_t>(n)] /= n;
        }
    }
    // Horner evaluation at 1/2
    HPReal value = 0;
    for (int n = terms; n >= 1; --n) {
        value += c[static_cast<size_t>(n)];
        value /= 2;
    }
    if (w.empty()) value = 1;
    return value;
}

}  // namespace

HPReal z_half(const Word& w, const PrecisionConfig& cfg) {
    if (w.empty()) return HPReal(1);
    if (w[w.size() - 1] != 1)
        throw divergence_error("z_half: word must end with letter 1");
    const auto key = std::make_pair(w.str(), cfg.digits);
    auto& cache = z_half_cache();
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.values.find(key);
        if (it != cache.values.end()) return it->second;
    }
    HPReal value = z_half_compute(w, cfg.digits);
    {
        std::unique_lock lock(cache.mutex);
        cache.values.emplace(key, value);
    }
    return value;
}

void clear_word_cache() {
    auto& cache = z_half_cache();
    std::unique_lock lock(cache.mutex);
    cache.values.clear();
}

ValueWithError mzv_holder(const Index& k, const PrecisionConfig& cfg) {
    if (k.empty()) return {HPReal(1), HPReal(0), BoundKind::rigorous, 0};
    if (!admissible(k))
        throw divergence_error("mzv_holder: index is not admissible");
    const Word w = index_to_word(k);
    const int n = w.size();
    HPReal value = 0;
    for (int j = 0; j <= n; ++j) {
        // tau of the prefix ends with 1 because w starts with 0; every
        // suffix ends with 1 because w does.
        const Word left = tau(w.prefix(j));
        const Word right = w.suffix_from(j);
        value += z_half(left, cfg) * z_half(right, cfg);
    }
    const int terms = series_terms(cfg.digits + guard_digits() / 2);
    // |z_half| <= 1 and each factor carries a tail below 2^-terms.
    HPReal eps = pow(HPReal(2), -terms);
    HPReal bound = 3 * (n + 1) * (eps + pow10(-(cfg.digits + guard_digits() - 2)));
    return {value, bound, BoundKind::rigorous, terms};
}

HPReal li_half(const Index& k, const PrecisionConfig& cfg) {
    if (k.empty()) return HPReal(1);
    std::vector<uint8_t> letters;
    for (int j = 0; j < k.depth(); ++j) {
        for (int i = 0; i < k[j] - 1; ++i) letters.push_back(0);
        letters.push_back(1);
    }
    return z_half(Word(std::move(letters)), cfg);
}

}  // namespace mzvlab
