#ifndef MZVLAB_WORDS_HPP
#define MZVLAB_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mzvlab/index.hpp"
#include "mzvlab/precision.hpp"

namespace mzvlab {

// Two-letter encoding of an iterated integral, outermost form first:
// letter 0 is dt/t, letter 1 is dt/(1-t).
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<uint8_t> letters) : letters_(std::move(letters)) {}
    static Word from_string(const std::string& s);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    uint8_t operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
    const std::vector<uint8_t>& letters() const { return letters_; }

    Word prefix(int len) const;
    Word suffix_from(int pos) const;

    auto operator<=>(const Word&) const = default;
    std::string str() const;

  private:
    std::vector<uint8_t> letters_;
};

// Each part k_j contributes k_j-1 zeros and a one.  Admissible indices
// give words that start with 0 and end with 1.
Word index_to_word(const Index& k);
Index word_to_index(const Word& w);

// Duality: reverse the letters and swap 0 <-> 1 (an involution).
Word tau(const Word& w);

// Partial iterated integral from 0 to 1/2, by the power-series
// coefficient recurrences; the word must end with letter 1 (or be
// empty, value 1).  Correct to well below 10^(3-P).
HPReal z_half(const Word& w, const PrecisionConfig& cfg);

// zeta(k) as the convolution of partial integrals split at 1/2, with
// the prefix transported through tau.  Rigorous geometric tail bound.
ValueWithError mzv_holder(const Index& k, const PrecisionConfig& cfg);

// Li_k(1/2); admissibility not required.
HPReal li_half(const Index& k, const PrecisionConfig& cfg);

// Drops memoized partial integrals (used when precision changes).
void clear_word_cache();

}  // namespace mzvlab

#endif
