#pragma once

#include <optional>
#include <vector>

#include "codeg/presentation.hpp"

namespace codeg {

// Subgroup with its full element set (sorted encoded ids).  Encodings are
// relative to the ambient presentation; the spec-scale orders make explicit
// enumeration the simplest correct representation.
struct Subgroup {
    std::vector<GroupElement> gens;
    std::vector<std::uint64_t> elems;  // sorted

    std::int64_t order() const { return static_cast<std::int64_t>(elems.size()); }
    bool contains(std::uint64_t id) const;
    bool contains(const PcPresentation& pres, const GroupElement& x) const;
    bool same_elements(const Subgroup& other) const { return elems == other.elems; }
};

// Center type / derived type / exponents and generator counts used by the
// codegree classifiers.
struct StructuralProfile {
    std::int64_t order = 1;
    int nilpotency_class = 0;
    std::vector<int> center_type;   // partition, largest part first
    std::vector<int> derived_type;  // partition when G' is abelian, else empty
    std::int64_t exp_g = 1;
    std::int64_t exp_g_over_derived = 1;
    int d_center = 0;
    int d_derived = 0;
    bool is_abelian = true;
    bool is_extraspecial = false;
    // Filled by the codegree classifiers (they need character degrees).
    std::optional<bool> is_vz;
    std::optional<bool> is_camina;
};

std::vector<GroupElement> enumerate_elements(const PcPresentation& pres,
                                             std::int64_t order_guard = kDefaultOrderGuard);

Subgroup trivial_subgroup(const PcPresentation& pres);
Subgroup whole_group(const PcPresentation& pres, std::int64_t order_guard = kDefaultOrderGuard);
Subgroup closure(const PcPresentation& pres, const std::vector<GroupElement>& gens,
                 std::int64_t order_guard = kDefaultOrderGuard);

Subgroup center(const PcPresentation& pres, std::int64_t order_guard = kDefaultOrderGuard);
Subgroup derived_subgroup(const PcPresentation& pres, std::int64_t order_guard = kDefaultOrderGuard);
std::vector<Subgroup> lower_central_series(const PcPresentation& pres,
                                           std::int64_t order_guard = kDefaultOrderGuard);
int nilpotency_class(const PcPresentation& pres, std::int64_t order_guard = kDefaultOrderGuard);

bool is_normal(const PcPresentation& pres, const Subgroup& sub);
bool is_abelian_subgroup(const PcPresentation& pres, const Subgroup& sub);

// Type partition [l_1 >= l_2 >= ...] of an abelian subgroup, recovered from
// the order counts |{x in H : x^{p^k} = 1}|.  Rejects non-abelian input.
std::vector<int> abelian_type(const PcPresentation& pres, const Subgroup& sub);

// Type partition of the abelian quotient G/N (requires G' <= N).
std::vector<int> abelian_quotient_type(const PcPresentation& pres, const Subgroup& normal,
                                       std::int64_t order_guard = kDefaultOrderGuard);

// exp(G/N) = max_g min{p^k : g^{p^k} in N}; rejects non-normal N.
std::int64_t quotient_exponent(const PcPresentation& pres, const Subgroup& normal,
                               std::int64_t order_guard = kDefaultOrderGuard);

std::int64_t group_exponent(const PcPresentation& pres, std::int64_t order_guard = kDefaultOrderGuard);

// Minimal generator count d(H) = log_p |H : Phi(H)|.
int min_generators(const PcPresentation& pres, const Subgroup& sub);

// Everything except the is_vz / is_camina flags, which need character-degree
// data (see formulas).
StructuralProfile structural_profile(const PcPresentation& pres,
                                     std::int64_t order_guard = kDefaultOrderGuard);

}  // namespace codeg
