#include "codeg/tables.hpp"

#include "codeg/common.hpp"

#include "json.hpp"

namespace codeg {

namespace detail {
const char* embedded_classification_json();  // embedded_tables.cpp (generated)
}

const char* classification_rows_json() { return detail::embedded_classification_json(); }

const std::vector<ClassificationRow>& classification_rows() {
    static const std::vector<ClassificationRow> rows = [] {
        nlohmann::json j = nlohmann::json::parse(classification_rows_json());
        std::vector<ClassificationRow> out;
        for (const auto& r : j.at("rows")) {
            ClassificationRow row;
            row.suite = r.at("suite").get<std::string>();
            row.name = r.at("name").get<std::string>();
            row.order_exp = r.at("order_exp").get<int>();
            row.cod_exps = r.at("cod_exps").get<std::vector<int>>();
            row.builds = r.at("builds").get<std::vector<std::string>>();
            if (r.contains("exp_gg")) row.exp_gg = r.at("exp_gg").get<int>();
            if (r.contains("note")) row.note = r.at("note").get<std::string>();
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

}  // namespace codeg
