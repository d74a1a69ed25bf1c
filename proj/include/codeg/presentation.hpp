#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "codeg/common.hpp"

#include "json.hpp"

namespace codeg {

// Element of a pc-presented group in collected normal form
// g_0^{e_0} g_1^{e_1} ... g_{n-1}^{e_{n-1}} with 0 <= e_i < p.
struct GroupElement {
    std::vector<std::uint8_t> exps;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;
    bool is_identity() const {
        for (auto e : exps)
            if (e) return false;
        return true;
    }
};

// One letter of an input word: generator index with an arbitrary integer
// exponent (negative allowed).
struct Letter {
    int gen;
    std::int64_t exp;
};

/// Power-commutator presentation of a finite p-group of order p^n in which
/// every polycyclic generator has relative order exactly p.
///
/// Relations:
///   g_i^p       = power_rhs(i)    (word in generators of index > i)
///   [g_j, g_i]  = comm_rhs(j, i)  (j > i; word in generators of index > j)
/// with [x, y] = x^-1 y^-1 x y and the collection rule
/// g_j g_i = g_i g_j [g_j, g_i] for j > i.
///
/// Construction validates shape (exponent ranges, weight condition), runs the
/// standard consistency test words, and within the order guard additionally
/// enumerates the group to confirm exactly p^n distinct normal forms.
/// Instances are immutable; all operations are safe to call concurrently.
class PcPresentation {
  public:
    PcPresentation(int p, int n,
                   std::vector<std::pair<int, std::vector<int>>> powers,
                   std::vector<std::pair<std::pair<int, int>, std::vector<int>>> commutators,
                   std::int64_t order_guard = kDefaultOrderGuard);

    // Presentation JSON: {"p":5,"n":4,"powers":{"0":[0,0,1,0]},
    // "commutators":{"3,0":[0,0,0,1]}}; absent keys mean trivial relations.
    static PcPresentation from_json(const nlohmann::json& j,
                                    std::int64_t order_guard = kDefaultOrderGuard);
    static PcPresentation from_json_file(const std::filesystem::path& path,
                                         std::int64_t order_guard = kDefaultOrderGuard);
    nlohmann::ordered_json to_json() const;

    int prime() const { return p_; }
    int rank() const { return n_; }
    std::int64_t order() const { return order_; }

    // Empty vector means the relation is trivial (g_i^p = 1, [g_j,g_i] = 1).
    const std::vector<std::uint8_t>& power_rhs(int i) const { return power_[i]; }
    const std::vector<std::uint8_t>& comm_rhs(int j, int i) const;

    GroupElement identity() const { return GroupElement{std::vector<std::uint8_t>(n_, 0)}; }
    GroupElement generator(int i) const;

    std::uint64_t encode(const GroupElement& x) const;
    GroupElement decode(std::uint64_t id) const;

    GroupElement collect(std::span<const Letter> word) const;
    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;
    GroupElement power(const GroupElement& x, std::int64_t m) const;
    // commutator(x, y) = x^-1 y^-1 x y
    GroupElement commutator(const GroupElement& x, const GroupElement& y) const;
    // conjugate(x, y) = y^-1 x y
    GroupElement conjugate(const GroupElement& x, const GroupElement& y) const;
    // Least m >= 1 with x^m = 1; always a p-power.
    std::int64_t order_of(const GroupElement& x) const;

  private:
    void validate_shape() const;
    void check_consistency_words() const;
    void check_element_count() const;

    int p_;
    int n_;
    std::int64_t order_;
    std::vector<std::vector<std::uint8_t>> power_;  // n entries
    std::vector<std::vector<std::uint8_t>> comm_;   // index j*(j-1)/2 + i
};

}  // namespace codeg
