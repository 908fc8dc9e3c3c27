#ifndef MZVLAB_ERRORS_HPP
#define MZVLAB_ERRORS_HPP

#include <stdexcept>

namespace mzvlab {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised eagerly when a requested series violates its convergence
// condition; the message names the violated predicate.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mzvlab

#endif
