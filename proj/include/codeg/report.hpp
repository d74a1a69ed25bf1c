#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace codeg {

// cod(G) with per-value provenance and the method that produced it.
struct CodegreeReport {
    int p = 0;
    std::int64_t order = 0;
    std::string method;           // "bruteforce", "abelian", "vz_general", "vz_case_i", ...
    std::vector<std::int64_t> cod;  // sorted, deduplicated
    struct Provenance {
        std::int64_t value = 0;
        std::string note;
    };
    std::vector<Provenance> provenance;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["order"] = order;
        j["method"] = method;
        j["cod"] = cod;
        auto prov = nlohmann::ordered_json::array();
        for (const auto& pr : provenance) prov.push_back({{"value", pr.value}, {"note", pr.note}});
        j["provenance"] = std::move(prov);
        return j;
    }
};

}  // namespace codeg
