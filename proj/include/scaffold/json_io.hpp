#pragma once

#include <json.hpp>

#include "scaffold/realization.hpp"
#include "scaffold/structure.hpp"

namespace scaffold {

inline nlohmann::json to_json(const StructureReport& r) {
    return nlohmann::json{{"p", r.p},
                          {"n", r.n},
                          {"b", r.shifts},
                          {"h", r.h},
                          {"b_exponent", r.b_exponent},
                          {"d", r.d},
                          {"w", r.w},
                          {"free", r.free},
                          {"dd", r.dd},
                          {"ee", r.ee},
                          {"min_generators", r.min_generators},
                          {"embedding_dimension", r.embedding_dimension},
                          {"tolerance_required", r.tolerance_required}};
}

inline StructureReport report_from_json(const nlohmann::json& j) {
    StructureReport r;
    r.p = j.at("p").get<Int>();
    r.n = j.at("n").get<Int>();
    r.shifts = j.at("b").get<std::vector<Int>>();
    r.h = j.at("h").get<Int>();
    r.b_exponent = j.at("b_exponent").get<Int>();
    r.d = j.at("d").get<std::vector<Int>>();
    r.w = j.at("w").get<std::vector<Int>>();
    r.free = j.at("free").get<bool>();
    r.dd = j.at("dd").get<std::vector<Int>>();
    r.ee = j.at("ee").get<std::vector<Int>>();
    r.min_generators = j.at("min_generators").get<Int>();
    r.embedding_dimension = j.at("embedding_dimension").get<Int>();
    r.tolerance_required = j.at("tolerance_required").get<Int>();
    return r;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"kind", f.kind},
                            {"i", f.i},
                            {"s", f.s},
                            {"t", f.t},
                            {"expected", f.expected},
                            {"got", f.got}});
    return nlohmann::json{{"checks_run", r.checks_run}, {"failures", failures}};
}

} // namespace scaffold
