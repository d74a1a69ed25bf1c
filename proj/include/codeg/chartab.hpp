#pragma once

#include <cstdint>
#include <vector>

#include "codeg/presentation.hpp"
#include "codeg/report.hpp"
#include "codeg/subgroup.hpp"

namespace codeg {

struct ConjugacyClasses {
    std::vector<GroupElement> reps;        // reps[0] is the identity
    std::vector<std::int64_t> sizes;
    std::vector<std::int32_t> class_of;    // indexed by encoded element id
    std::int64_t exponent = 1;             // exp(G)
    // power_class[c][m] = class of reps[c]^m, for all m in [0, exp).
    std::vector<std::vector<std::int32_t>> power_class;
    std::vector<std::int32_t> inverse_class;

    int count() const { return static_cast<int>(reps.size()); }
};

ConjugacyClasses conjugacy_classes(const PcPresentation& pres,
                                   std::int64_t order_guard = kDefaultOrderGuard);

// Class-algebra structure constants for a fixed first class:
// a[j][k] = #{(x, y) in C_i x C_j : x y = z_k}, z_k the representative of C_k.
// Column sums over j equal |C_i|.
struct ClassMatrix {
    int index = 0;
    std::vector<std::vector<std::int64_t>> a;
};

ClassMatrix class_matrix(const PcPresentation& pres, const ConjugacyClasses& classes, int i);

// Character value as exact eigenvalue multiplicities: sum of terms
// mult * zeta_e^k over the stored (k, mult) pairs, with zeta_e a fixed
// primitive e-th root of unity, e = exp(G).  The multiset of eigenvalues of a
// representation matrix is canonical, so equality of values is equality of
// these vectors.
struct CyclotomicValue {
    std::vector<std::pair<std::int32_t, std::int64_t>> terms;  // sorted by root power

    std::int64_t total() const {
        std::int64_t s = 0;
        for (auto& [k, m] : terms) s += m;
        return s;
    }
    // True iff the value equals degree * zeta^0 (all eigenvalues trivial).
    bool is_full_at_zero(std::int64_t degree) const {
        return terms.size() == 1 && terms[0].first == 0 && terms[0].second == degree;
    }
    std::vector<std::int64_t> dense(std::int64_t e) const {
        std::vector<std::int64_t> v(static_cast<std::size_t>(e), 0);
        for (auto& [k, m] : terms) v[k] = m;
        return v;
    }
};

struct CharacterRow {
    std::int64_t degree = 1;
    std::vector<CyclotomicValue> values;  // one per class
    Subgroup kernel;
    std::int64_t codegree = 1;
};

struct CharacterTable {
    ConjugacyClasses classes;
    std::vector<CharacterRow> rows;  // rows[0] is the trivial character
    std::int64_t dixon_ell = 0;
    std::uint64_t theta = 0;          // fixed primitive e-th root of unity mod ell
    std::uint64_t primitive_root = 0; // theta = primitive_root^((ell-1)/e)
    std::uint64_t seed = 0;
};

// Burnside-Dixon-Schneider table over GF(ell) with exact cyclotomic lifting.
// Deterministic for a fixed seed (the seed only feeds the random-combination
// fallback of the eigenspace splitting).
CharacterTable character_table(const PcPresentation& pres, std::uint64_t seed = 0,
                               std::int64_t order_guard = kDefaultOrderGuard);

CodegreeReport codegrees_bruteforce(const PcPresentation& pres, std::uint64_t seed = 0,
                                    std::int64_t order_guard = kDefaultOrderGuard);

// Exact cyclotomic inner product sum_i |C_i| chi(g_i) chi'(g_i^-1), reduced in
// Z[zeta_e]; equals |G| * delta for irreducible rows.
bool rows_orthogonal(const CharacterTable& table, int row_a, int row_b, std::int64_t group_order);

nlohmann::ordered_json table_to_json(const PcPresentation& pres, const CharacterTable& table);

}  // namespace codeg
