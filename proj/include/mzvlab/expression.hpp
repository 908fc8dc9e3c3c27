#ifndef MZVLAB_EXPRESSION_HPP
#define MZVLAB_EXPRESSION_HPP

#include <string>

#include "mzvlab/index.hpp"
#include "mzvlab/precision.hpp"

namespace mzvlab {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)),
          position(pos) {}
};

enum class ExprKind {
    zeta,
    zetastar,
    azeta,
    azetastar,
    li,
    ky,
    zbstar,
    hz,
    dual,
    stuffle,
    starexpand,
};

struct Expression {
    ExprKind kind;
    std::vector<int> first;   // primary argument list
    std::vector<int> second;  // secondary list (ky, stuffle)
    Rational point;           // li evaluation point / hz shift

    // normalized text form, used as the cache key
    std::string canonical() const;
};

// Grammar: zeta(2,1) zetastar(2,1,1) azeta(-2,3) azetastar(-1,2)
// li(2,1; 1/2) ky(2,1 | 1,2) zbstar(2,2,1) hz(3,2; a=1/4)
// dual(1,1,2,1) stuffle(2,1 | 1) starexpand(2,1,1)
Expression parse_expression(const std::string& text);

struct EvalOutput {
    bool is_value = true;
    ValueWithError value;
    std::string text;  // combinatorial result for dual/stuffle/starexpand
};

EvalOutput evaluate_expression(const Expression& e, const PrecisionConfig& cfg);

}  // namespace mzvlab

#endif
