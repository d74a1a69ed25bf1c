#pragma once

#include <string>
#include <vector>

#include "codeg/presentation.hpp"
#include "codeg/subgroup.hpp"

namespace codeg {

enum class Family {
    abelian,
    heisenberg,
    extraspecial_exp_p,
    extraspecial_exp_p2,
    phi2_31,
    phi2_211b,
    phi3_2111c,
    phi4_221a,
    phi4_221c,
    phi4_221f0,
    user_json,
};

std::string family_name(Family f);

// A buildable group: family plus parameters.  The phi names follow the
// standard classification of groups of order p^4 and p^5 (R. James, 1980);
// those presentations are valid for primes p >= 5.
struct GroupId {
    Family family{};
    int p = 0;
    std::vector<int> partition;  // abelian
    int rank = 1;                // extraspecial p^{1+2n}
    std::string path;            // user_json

    // "heisenberg", "abelian:2,1", "extraspecial_exp_p:2", "user_json:file".
    static GroupId parse(const std::string& spec, int p);
    std::string name() const;
};

// Smallest nu >= 2 that is not a square mod p; rejects p = 2 and composites.
int quadratic_nonresidue(int p);

struct BuildOptions {
    std::int64_t order_guard = kDefaultOrderGuard;
    // Structural self-test against the classification profile (center type,
    // derived type, class).  Skipped automatically above the guard.
    bool self_test = true;
    // The phi presentations are classification entries for p > 3 only; this
    // flag permits p = 3 instantiation (expectation lookups then decline).
    bool allow_small_prime_phi = false;
};

PcPresentation build(const GroupId& id, const BuildOptions& opts = {});

struct CatalogEntry {
    std::string name;         // classification label, e.g. "phi2_31"
    std::string spec;         // parseable spec string ("" for documentation rows)
    bool constructible = false;
    std::string description;
    std::string expected_cod;  // formula in p, e.g. "{1, p, p^2, p^3}"
    std::string group_order;   // e.g. "p^4"
};

// Stable listing: parameterized families first, then every classification
// table row (order p^4 and p^5), including rows that ship as documentation
// only because no presentation is published for them.
std::vector<CatalogEntry> list_catalog();

// Generator indices of the canonical chain heads of an abelian presentation
// built from `partition` (one pc chain per cyclic factor).
std::vector<int> abelian_chain_heads(const std::vector<int>& partition);

}  // namespace codeg
