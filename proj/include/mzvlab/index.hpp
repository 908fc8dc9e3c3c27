#ifndef MZVLAB_INDEX_HPP
#define MZVLAB_INDEX_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzvlab/errors.hpp"
#include "mzvlab/rational.hpp"

namespace mzvlab {

// A finite sequence of positive integers.  The empty index is a valid
// value of weight 0 and depth 0.
class Index {
  public:
    Index() = default;
    explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw domain_error("index parts must be >= 1");
    }
    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    bool empty() const { return parts_.empty(); }
    int depth() const { return static_cast<int>(parts_.size()); }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    int first() const { return parts_.front(); }
    Index tail() const {
        return empty() ? Index{}
                       : Index(std::vector<int>(parts_.begin() + 1, parts_.end()));
    }
    Index prepend(int k) const {
        std::vector<int> v;
        v.reserve(parts_.size() + 1);
        v.push_back(k);
        v.insert(v.end(), parts_.begin(), parts_.end());
        return Index(std::move(v));
    }
    Index append(const Index& other) const {
        std::vector<int> v = parts_;
        v.insert(v.end(), other.parts_.begin(), other.parts_.end());
        return Index(std::move(v));
    }

    auto operator<=>(const Index&) const = default;

    // Canonical text form: comma-separated parts, "" for the empty index.
    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

  private:
    std::vector<int> parts_;
};

inline Index repeat(int value, int times) {
    return Index(std::vector<int>(static_cast<size_t>(times), value));
}

// A finite sequence of nonzero integers; negative entries are the
// "barred" (alternating) slots.
class SignedIndex {
  public:
    SignedIndex() = default;
    explicit SignedIndex(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p == 0) throw domain_error("signed index parts must be nonzero");
    }
    SignedIndex(std::initializer_list<int> parts)
        : SignedIndex(std::vector<int>(parts)) {}
    // All-positive view of a plain index.
    explicit SignedIndex(const Index& k) : parts_(k.parts()) {}

    bool empty() const { return parts_.empty(); }
    int depth() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int magnitude(int i) const { return parts_[static_cast<size_t>(i)] < 0
                                      ? -parts_[static_cast<size_t>(i)]
                                      : parts_[static_cast<size_t>(i)]; }
    int sign(int i) const { return parts_[static_cast<size_t>(i)] < 0 ? -1 : 1; }
    int weight() const {
        int w = 0;
        for (int i = 0; i < depth(); ++i) w += magnitude(i);
        return w;
    }
    bool all_positive() const {
        for (int p : parts_)
            if (p < 0) return false;
        return true;
    }
    Index magnitudes() const {
        std::vector<int> v;
        v.reserve(parts_.size());
        for (int i = 0; i < depth(); ++i) v.push_back(magnitude(i));
        return Index(std::move(v));
    }
    int first() const { return parts_.front(); }
    SignedIndex tail() const {
        return empty() ? SignedIndex{}
                       : SignedIndex(std::vector<int>(parts_.begin() + 1, parts_.end()));
    }
    SignedIndex prepend(int k) const {
        std::vector<int> v;
        v.reserve(parts_.size() + 1);
        v.push_back(k);
        v.insert(v.end(), parts_.begin(), parts_.end());
        return SignedIndex(std::move(v));
    }

    auto operator<=>(const SignedIndex&) const = default;

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

  private:
    std::vector<int> parts_;
};

// Convergence of the signed series: partial weights must exceed the
// slot count at every prefix, except that a leading -1 is permitted.
inline bool convergent(const SignedIndex& s) {
    int w = 0;
    for (int j = 0; j < s.depth(); ++j) {
        w += s.magnitude(j);
        if (w <= j + 1) {
            if (j == 0 && s[0] == -1) continue;
            return false;
        }
    }
    return true;
}

// Exact linear combination of indices.  Zero coefficients are never
// stored, so map equality is the right notion of equality.
template <typename Idx>
class FormalSum {
  public:
    using Terms = std::map<Idx, Rational>;

    FormalSum() = default;
    static FormalSum single(const Idx& k, const Rational& c = 1) {
        FormalSum s;
        s.add(k, c);
        return s;
    }

    void add(const Idx& k, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const FormalSum& other, const Rational& scale = 1) {
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool operator==(const FormalSum&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            s += "*(";
            s += k.str();
            s += ")";
        }
        return s;
    }

  private:
    Terms terms_;
};

using FormalIndexSum = FormalSum<Index>;
using FormalSignedSum = FormalSum<SignedIndex>;

}  // namespace mzvlab

#endif
