#ifndef MZVLAB_IDENTITIES_HPP
#define MZVLAB_IDENTITIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mzvlab/precision.hpp"
#include "mzvlab/series.hpp"

namespace mzvlab {

enum class IdentityStatus { theorem, cited, conjecture };

// Parameter assignment: scalars are single-element vectors.
using Params = std::map<std::string, std::vector<int>>;

struct ParamSpec {
    std::string name;
    bool is_vector = false;
    int min_value = 0;
    int max_value = 0;
    int min_len = 1;
    int max_len = 1;
    bool optional = false;
};

struct Identity {
    std::string id;
    std::string description;
    IdentityStatus status = IdentityStatus::theorem;
    int tol_pow = 20;  // default tolerance 10^-tol_pow
    std::vector<ParamSpec> params;
    std::vector<Params> grid;  // fixed, versioned instance list
    std::function<ValueWithError(const Params&, const PrecisionConfig&)> lhs;
    std::function<ValueWithError(const Params&, const PrecisionConfig&)> rhs;
};

struct VerificationReport {
    std::string id;
    std::string params;
    HPReal lhs;
    HPReal rhs;
    HPReal abs_diff;
    HPReal tolerance;
    HPReal bound;     // combined error bound of both sides
    bool passed = false;
    bool conjecture = false;
    long terms_used = 0;
    double seconds = 0;
};

const std::vector<Identity>& catalog();

// Descriptors matching the filter (prefix match, trailing '*' allowed),
// in id order.
std::vector<const Identity*> list_identities(const std::string& filter);

VerificationReport verify(const std::string& id, const Params& params,
                          const PrecisionConfig& cfg);

// Runs every matching entry over its default grid; reports come back
// in catalog order regardless of worker scheduling.
std::vector<VerificationReport> run_suite(const std::string& filter,
                                          const PrecisionConfig& cfg,
                                          int jobs = 1);

// True when every non-conjecture report passed.
bool suite_passed(const std::vector<VerificationReport>& reports);

std::string format_params(const Params& p);
Params parse_param_assignments(const std::vector<std::string>& assignments);

}  // namespace mzvlab

#endif
