#include "codeg/subgroup.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace codeg {

namespace {

void check_guard(const PcPresentation& pres, std::int64_t guard) {
    if (pres.order() > guard)
        throw guard_error("group order " + std::to_string(pres.order()) +
                          " exceeds the order guard " + std::to_string(guard));
}

std::vector<GroupElement> generator_inverses(const PcPresentation& pres) {
    std::vector<GroupElement> inv;
    inv.reserve(pres.rank());
    for (int i = 0; i < pres.rank(); ++i) inv.push_back(pres.inverse(pres.generator(i)));
    return inv;
}

}  // namespace

bool Subgroup::contains(std::uint64_t id) const {
    return std::binary_search(elems.begin(), elems.end(), id);
}

bool Subgroup::contains(const PcPresentation& pres, const GroupElement& x) const {
    return contains(pres.encode(x));
}

std::vector<GroupElement> enumerate_elements(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(pres.order()));
    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(pres.order()); ++id)
        out.push_back(pres.decode(id));
    return out;
}

Subgroup trivial_subgroup(const PcPresentation& pres) {
    return Subgroup{{}, {pres.encode(pres.identity())}};
}

Subgroup whole_group(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    Subgroup g;
    for (int i = 0; i < pres.rank(); ++i) g.gens.push_back(pres.generator(i));
    g.elems.resize(static_cast<std::size_t>(pres.order()));
    for (std::uint64_t id = 0; id < g.elems.size(); ++id) g.elems[id] = id;
    return g;
}

Subgroup closure(const PcPresentation& pres, const std::vector<GroupElement>& gens, std::int64_t guard) {
    check_guard(pres, guard);
    std::vector<GroupElement> distinct;
    {
        std::unordered_set<std::uint64_t> ids;
        for (const auto& g : gens)
            if (!g.is_identity() && ids.insert(pres.encode(g)).second) distinct.push_back(g);
    }
    // Finite group: products of the generators alone reach the whole subgroup.
    std::unordered_set<std::uint64_t> seen{pres.encode(pres.identity())};
    std::vector<GroupElement> frontier{pres.identity()};
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& x : frontier)
            for (const auto& g : distinct) {
                GroupElement y = pres.multiply(x, g);
                if (seen.insert(pres.encode(y)).second) next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    Subgroup s;
    s.gens = std::move(distinct);
    s.elems.assign(seen.begin(), seen.end());
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

Subgroup center(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    // x is central iff it commutes with every generator.
    Subgroup z;
    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(pres.order()); ++id) {
        GroupElement x = pres.decode(id);
        bool central = true;
        for (int i = 0; i < pres.rank() && central; ++i) {
            GroupElement g = pres.generator(i);
            central = pres.multiply(x, g) == pres.multiply(g, x);
        }
        if (central) z.elems.push_back(id);
    }
    // A generating set, built greedily, keeps later computations cheap.
    Subgroup span = trivial_subgroup(pres);
    for (auto id : z.elems)
        if (!span.contains(id)) {
            z.gens.push_back(pres.decode(id));
            span = closure(pres, z.gens, guard);
            if (span.order() == z.order()) break;
        }
    return z;
}

namespace {

// Normal closure of the subgroup generated by `seed` (conjugation-saturated).
Subgroup normal_closure(const PcPresentation& pres, std::vector<GroupElement> seed, std::int64_t guard) {
    auto gen_inv = generator_inverses(pres);
    Subgroup sub = closure(pres, seed, guard);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<GroupElement> extra;
        for (auto id : sub.elems) {
            GroupElement x = pres.decode(id);
            for (int i = 0; i < pres.rank(); ++i) {
                GroupElement c = pres.multiply(pres.multiply(gen_inv[i], x), pres.generator(i));
                if (!sub.contains(pres, c)) extra.push_back(std::move(c));
            }
        }
        if (!extra.empty()) {
            grew = true;
            for (auto& x : extra) seed.push_back(std::move(x));
            sub = closure(pres, seed, guard);
        }
    }
    return sub;
}

}  // namespace

Subgroup derived_subgroup(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    std::vector<GroupElement> seed;
    for (int j = 1; j < pres.rank(); ++j)
        for (int i = 0; i < j; ++i) {
            GroupElement c = pres.commutator(pres.generator(j), pres.generator(i));
            if (!c.is_identity()) seed.push_back(std::move(c));
        }
    if (seed.empty()) return trivial_subgroup(pres);
    return normal_closure(pres, std::move(seed), guard);
}

std::vector<Subgroup> lower_central_series(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    std::vector<Subgroup> series{whole_group(pres, guard)};
    while (series.back().order() > 1) {
        const Subgroup& prev = series.back();
        // [H, G] is the normal closure of {[s, g] : s generating H, g
        // generating G} (commutator identities reduce arbitrary [h, g]).
        std::vector<GroupElement> seed;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& s : prev.gens) {
            for (int i = 0; i < pres.rank(); ++i) {
                GroupElement c = pres.commutator(s, pres.generator(i));
                if (!c.is_identity() && seen.insert(pres.encode(c)).second) seed.push_back(std::move(c));
            }
        }
        Subgroup next = seed.empty() ? trivial_subgroup(pres) : normal_closure(pres, std::move(seed), guard);
        if (next.order() == prev.order())
            throw error("lower central series did not descend (non-nilpotent input?)");
        series.push_back(std::move(next));
    }
    return series;
}

int nilpotency_class(const PcPresentation& pres, std::int64_t guard) {
    return static_cast<int>(lower_central_series(pres, guard).size()) - 1;
}

bool is_normal(const PcPresentation& pres, const Subgroup& sub) {
    auto gen_inv = generator_inverses(pres);
    for (auto id : sub.elems) {
        GroupElement x = pres.decode(id);
        for (int i = 0; i < pres.rank(); ++i) {
            GroupElement c = pres.multiply(pres.multiply(gen_inv[i], x), pres.generator(i));
            if (!sub.contains(pres, c)) return false;
        }
    }
    return true;
}

bool is_abelian_subgroup(const PcPresentation& pres, const Subgroup& sub) {
    std::vector<GroupElement> xs;
    xs.reserve(sub.elems.size());
    for (auto id : sub.elems) xs.push_back(pres.decode(id));
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b)
            if (pres.multiply(xs[a], xs[b]) != pres.multiply(xs[b], xs[a])) return false;
    return true;
}

namespace {

// Partition of an abelian p-group from the census c_k = #{x : x^{p^k} = 1}:
// the number of parts >= k equals log_p(c_k / c_{k-1}).
std::vector<int> partition_from_counts(std::int64_t p, const std::vector<std::int64_t>& counts) {
    std::vector<int> parts_ge;  // parts_ge[k-1] = #parts >= k
    for (std::size_t k = 1; k < counts.size(); ++k) {
        int d = plog(p, counts[k] / counts[k - 1]);
        if (d < 0) throw error("order census is not consistent with an abelian p-group");
        parts_ge.push_back(d);
    }
    std::vector<int> partition;
    for (std::size_t k = 0; k < parts_ge.size(); ++k) {
        int here = parts_ge[k] - (k + 1 < parts_ge.size() ? parts_ge[k + 1] : 0);
        for (int t = 0; t < here; ++t) partition.push_back(static_cast<int>(k) + 1);
    }
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

}  // namespace

std::vector<int> abelian_type(const PcPresentation& pres, const Subgroup& sub) {
    if (!is_abelian_subgroup(pres, sub)) throw input_error("abelian_type: subgroup is not abelian");
    std::vector<std::int64_t> counts;
    std::int64_t pk = 1;
    while (true) {
        std::int64_t c = 0;
        for (auto id : sub.elems)
            if (pres.power(pres.decode(id), pk).is_identity()) ++c;
        counts.push_back(c);
        if (c == sub.order()) break;
        pk *= pres.prime();
    }
    return partition_from_counts(pres.prime(), counts);
}

std::vector<int> abelian_quotient_type(const PcPresentation& pres, const Subgroup& normal, std::int64_t guard) {
    check_guard(pres, guard);
    if (!is_normal(pres, normal)) throw input_error("abelian_quotient_type: subgroup is not normal");
    // G/N abelian <=> all generator commutators lie in N.
    for (int j = 1; j < pres.rank(); ++j)
        for (int i = 0; i < j; ++i)
            if (!normal.contains(pres, pres.commutator(pres.generator(j), pres.generator(i))))
                throw input_error("abelian_quotient_type: quotient is not abelian");
    std::vector<std::int64_t> counts;
    std::int64_t pk = 1;
    std::int64_t qorder = pres.order() / normal.order();
    while (true) {
        std::int64_t c = 0;
        for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(pres.order()); ++id)
            if (normal.contains(pres, pres.power(pres.decode(id), pk))) ++c;
        counts.push_back(c / normal.order());
        if (counts.back() == qorder) break;
        pk *= pres.prime();
    }
    return partition_from_counts(pres.prime(), counts);
}

std::int64_t quotient_exponent(const PcPresentation& pres, const Subgroup& normal, std::int64_t guard) {
    check_guard(pres, guard);
    if (!is_normal(pres, normal)) throw input_error("quotient_exponent: subgroup is not normal");
    std::int64_t best = 1;
    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(pres.order()); ++id) {
        GroupElement x = pres.decode(id);
        std::int64_t pk = 1;
        while (!normal.contains(pres, pres.power(x, pk))) pk *= pres.prime();
        best = std::max(best, pk);
    }
    return best;
}

std::int64_t group_exponent(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    std::int64_t e = 1;
    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(pres.order()); ++id)
        e = std::max(e, pres.order_of(pres.decode(id)));
    return e;
}

int min_generators(const PcPresentation& pres, const Subgroup& sub) {
    if (sub.order() == 1) return 0;
    // d(H) = log_p |H : Phi(H)| with Phi(H) = H^p [H, H].
    std::vector<GroupElement> xs;
    xs.reserve(sub.elems.size());
    for (auto id : sub.elems) xs.push_back(pres.decode(id));
    std::vector<GroupElement> seed;
    for (const auto& x : xs) {
        GroupElement xp = pres.power(x, pres.prime());
        if (!xp.is_identity()) seed.push_back(std::move(xp));
    }
    for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
            GroupElement c = pres.commutator(xs[a], xs[b]);
            if (!c.is_identity()) seed.push_back(std::move(c));
        }
    Subgroup frattini = seed.empty() ? trivial_subgroup(pres) : closure(pres, seed, pres.order());
    int d = plog(pres.prime(), sub.order() / frattini.order());
    if (d < 0) throw error("Frattini index is not a p-power");
    return d;
}

StructuralProfile structural_profile(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    StructuralProfile prof;
    prof.order = pres.order();
    prof.nilpotency_class = nilpotency_class(pres, guard);
    prof.is_abelian = prof.nilpotency_class <= 1;

    Subgroup z = center(pres, guard);
    Subgroup der = derived_subgroup(pres, guard);
    prof.center_type = abelian_type(pres, z);
    prof.d_center = static_cast<int>(prof.center_type.size());
    if (is_abelian_subgroup(pres, der)) {
        prof.derived_type = abelian_type(pres, der);
        prof.d_derived = static_cast<int>(prof.derived_type.size());
    } else {
        prof.d_derived = min_generators(pres, der);
    }
    prof.exp_g = group_exponent(pres, guard);
    prof.exp_g_over_derived = quotient_exponent(pres, der, guard);
    prof.is_extraspecial = !prof.is_abelian && z.order() == pres.prime() &&
                           z.same_elements(der) && quotient_exponent(pres, z, guard) == pres.prime();
    return prof;
}

}  // namespace codeg
