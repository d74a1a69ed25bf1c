#pragma once

#include <optional>
#include <string>
#include <vector>

namespace codeg {

// One row of the embedded classification tables: the expected codegree set
// (as exponents of p) for a named group of order p^4 or p^5, or for an
// order-3^n SmallGroups row.  Rows without published presentations carry an
// empty `builds` list and are documentation only.
struct ClassificationRow {
    std::string suite;            // "p4", "p5" or "3groups"
    std::string name;             // classification label or SmallGroup ids
    int order_exp = 0;            // |G| = p^order_exp
    std::vector<int> cod_exps;    // cod(G) = { p^e : e in cod_exps }
    std::vector<std::string> builds;  // catalog spec strings realizing the row
    std::optional<int> exp_gg;    // exp(G/G') as a power of p, when tabulated
    std::string note;
};

const std::vector<ClassificationRow>& classification_rows();

// Raw embedded JSON (diffable copy lives in data/expected_codegrees.json).
const char* classification_rows_json();

}  // namespace codeg
