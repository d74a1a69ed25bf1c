#pragma once

#include <optional>

#include "codeg/catalog.hpp"
#include "codeg/chartab.hpp"
#include "codeg/report.hpp"

namespace codeg {

/// Lazily computed per-group data (center, derived subgroup, classes,
/// character table, structural profile) shared by the codegree routines so a
/// group is only analyzed once.
class GroupAnalysis {
  public:
    explicit GroupAnalysis(const PcPresentation& pres, std::uint64_t seed = 0,
                           std::int64_t order_guard = kDefaultOrderGuard);

    const PcPresentation& pres() const { return *pres_; }
    std::uint64_t seed() const { return seed_; }
    std::int64_t guard() const { return guard_; }

    const Subgroup& center();
    const Subgroup& derived();
    const ConjugacyClasses& classes();
    const CharacterTable& table();
    // Full profile including the is_vz / is_camina flags.
    const StructuralProfile& profile();

  private:
    const PcPresentation* pres_;
    std::uint64_t seed_;
    std::int64_t guard_;
    std::optional<Subgroup> center_;
    std::optional<Subgroup> derived_;
    std::optional<CharacterTable> table_;
    std::optional<StructuralProfile> profile_;
};

// cod(A) = {p^i : 0 <= i <= l_1} for the abelian group of the given type;
// the empty partition is the trivial group, {1}.
CodegreeReport cod_abelian(int p, const std::vector<int>& partition);

// Kernel of a linear character of the abelian group A of the given type:
// N <= A with A/N cyclic of order exactly p^b.  Scans the canonical cyclic
// factors from the smallest upward, replacing the first generator whose part
// is >= b by its p^b-th power.  The construction is re-verified against the
// ambient presentation before returning.
struct CyclicQuotientKernel {
    PcPresentation ambient;       // canonical abelian presentation of the type
    Subgroup kernel;
    int replaced_part = 0;        // 1-based index of the replaced factor
    std::int64_t index = 1;       // |A : N| = p^b
};
CyclicQuotientKernel cyclic_quotient_kernel(int p, const std::vector<int>& partition, int b);

// Codegrees of the linear characters: {p^i : 0 <= i <= log_p exp(G/G')}.
CodegreeReport cod_lin(GroupAnalysis& g);

// A non-abelian group is VZ iff its nonlinear irreducible characters all
// vanish off the center, equivalently cd(G) = {1, |G:Z(G)|^{1/2}}.  Decided
// by the degree criterion on the character table after a cheap structural
// pre-filter; abelian groups report false by convention.
bool is_vz(GroupAnalysis& g);

// The general VZ algorithm: cod_lin union
// { |G:Z|^{1/2} |Z:N| : N < Z(G), G' not<= N, Z/N cyclic },
// by exhaustive enumeration of the subgroups of the center.
CodegreeReport cod_vz_general(GroupAnalysis& g);

// Closed-form VZ branches, selected by center structure.
enum class VzCase {
    cyclic_center,        // Z cyclic:             {p^i} + (|G||Z|)^{1/2}
    elementary_center,    // Z elementary abelian: {p^i} + p |G:Z|^{1/2}
    equal_rank,           // d(G') = d(Z):         {p^i} + p^{l_j} |G:Z|^{1/2}
    two_generated_i,      // d(G') < d(Z) = 2:     {p^i} + p^j |G:Z|^{1/2}, l_2 <= j <= l_1
    two_generated_ii,     //                       {p^i} + exp(Z) |G:Z|^{1/2}
};
const char* vz_case_name(VzCase c);

// nullopt when no branch hypothesis applies (d(G') < d(Z) >= 3): fall back to
// cod_vz_general.
std::optional<std::pair<VzCase, CodegreeReport>> cod_vz_case(GroupAnalysis& g);

// Extraspecial groups of order p^{1+2n}: {1, p, p^{n+1}}.
CodegreeReport cod_extraspecial(int p, std::int64_t order);

struct CaminaProfile {
    bool is_camina = false;
    int nilpotency_class = 0;
    std::optional<int> n;  // |G/G'| = p^{2n} when class 3
};

// Camina test: Cl(g) = g G' for every g outside G'; abelian groups report
// false by convention.
CaminaProfile camina_profile(GroupAnalysis& g);

// Branch formulas from the Camina profile and the three subgroup orders;
// class 3 is accepted symbolically (no desk-scale instance exists).
CodegreeReport cod_camina(const CaminaProfile& profile, int p, std::int64_t order,
                          std::int64_t derived_order, std::int64_t center_order);

// Expected codegree set from the classification tables / family formulas;
// nullopt when the tables do not cover the id (user groups, phi at p = 3).
std::optional<CodegreeReport> expected_codegrees(const GroupId& id);

// Formula dispatcher: abelian -> VZ branch -> VZ general -> Camina; nullopt
// when no closed form from the structure theorems applies.
std::optional<CodegreeReport> cod_formula(GroupAnalysis& g);

// All subgroups of an abelian subgroup: cyclic subgroups, then closure under
// pairwise joins.  Exhaustive, for desk-scale centers.
std::vector<Subgroup> all_subgroups_of_abelian(const PcPresentation& pres, const Subgroup& sub);

// exp(H/N) for N <= H abelian (order of the largest cyclic quotient factor).
std::int64_t section_exponent(const PcPresentation& pres, const Subgroup& sub, const Subgroup& normal);

// Membership of cod(G) in the classified envelope for non-abelian groups of
// order p^3, p^4, p^5.
bool in_summary_envelope(int p, std::int64_t order, const std::vector<std::int64_t>& cod);

}  // namespace codeg
