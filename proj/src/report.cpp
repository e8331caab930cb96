#include "padlab/report.hpp"

namespace padlab {

json to_json(const Valuation& v) {
    if (v.inf) return json("inf");
    if (v.den == 1) return json(v.num);
    return json(v.str());
}

json to_json(const PadicApprox& x) {
    json j;
    j["prime"] = x.prime();
    if (x.distinguishable_from_zero()) {
        j["valuation"] = x.val();
        j["unit"] = x.unit().get_str();
        j["precision"] = x.abs_precision();
    } else if (x.is_zero_at_precision()) {
        j["valuation"] = "inf";
        j["unit"] = nullptr;
        j["precision"] = x.abs_precision();
    } else {
        j["valuation"] = "inf";
        j["unit"] = nullptr;
        j["precision"] = nullptr;
    }
    return j;
}

json VerificationReport::to_json() const {
    json j;
    j["check"] = check;
    j["p"] = p;
    if (r >= 0) j["r"] = r;
    if (f >= 0) j[check == "diamond" ? "q" : "f"] = f;
    j["N"] = N;
    if (k_used >= 0) j["k_used"] = k_used;
    j["achieved_valuation"] = padlab::to_json(achieved);
    j["pass"] = pass;
    if (!route.empty()) j["route"] = route;
    return j;
}

json RunConfig::to_json() const {
    json j;
    j["prime"] = prime;
    j["precision"] = precision;
    j["stabilization_cap"] = stabilization_cap;
    j["oracle_bound"] = oracle_bound;
    j["embedding_digits"] = embedding_digits;
    j["format"] = format;
    j["seed"] = seed;
    return j;
}

json envelope(const std::string& command, json body) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["result"] = std::move(body);
    return j;
}

}  // namespace padlab
