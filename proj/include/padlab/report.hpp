#pragma once

// Report objects and their JSON forms.  All serialization goes through
// ordered_json so identical runs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "padlab/padic.hpp"
#include "padlab/valuation.hpp"

namespace padlab {

using json = nlohmann::ordered_json;

json to_json(const Valuation& v);
json to_json(const PadicApprox& x);  // {prime, valuation, unit, precision}

struct VerificationReport {
    std::string check;  // gauss | diamond | logsym | reduction
    long p = 0;
    long r = -1;        // -1: not applicable
    long f = -1;        // conductor (or q for diamond)
    long N = 0;
    long k_used = -1;   // -1: no limit involved
    Valuation achieved = Valuation::infinite();
    bool pass = false;
    std::string route;  // e.g. "Eq1", "Eq2 mu=4", "limit", "recursion"

    json to_json() const;
};

struct RunConfig {
    long prime = 3;
    long precision = 6;
    long stabilization_cap = 8;
    long oracle_bound = 3;
    long embedding_digits = 40;
    std::string format = "text";  // text | json
    unsigned long long seed = 0x9e3779b97f4a7c15ULL;

    json to_json() const;
};

// wraps a report stream into the versioned envelope {"schema":1, ...}
json envelope(const std::string& command, json body);

}  // namespace padlab
