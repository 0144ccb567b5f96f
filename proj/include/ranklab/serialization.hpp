#ifndef RANKLAB_SERIALIZATION_HPP
#define RANKLAB_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "ranklab/identities.hpp"

// JSON forms consumed by the CLI and the golden-file tests. Counts are
// serialized as decimal strings: they outgrow 64-bit (and double) quickly.

namespace ranklab {

inline void to_json(nlohmann::ordered_json& j, const IdentityTuple& t) {
    j = nlohmann::ordered_json{{"m", t.m}, {"a", t.a}, {"r", t.r}};
}

inline void from_json(const nlohmann::json& j, IdentityTuple& t) {
    j.at("m").get_to(t.m);
    j.at("a").get_to(t.a);
    j.at("r").get_to(t.r);
}

inline std::string to_string(const ExactCount& v) {
    return v.get_str();
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    if (report.tuple) {
        nlohmann::ordered_json t;
        to_json(t, *report.tuple);
        j["tuple"] = std::move(t);
        j["conditions_ok"] = report.conditions_ok;
    }
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json jr{{"n", row.n},
                                  {"lhs", to_string(row.lhs)},
                                  {"rhs", to_string(row.rhs)},
                                  {"method", row.method},
                                  {"pass", row.pass}};
        if (!row.note.empty()) jr["note"] = row.note;
        j["rows"].push_back(std::move(jr));
    }
    j["verdict"] = report.verdict();
    if (auto n = report.counterexample_n()) j["counterexample_n"] = *n;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

} // namespace ranklab

#endif
