#include "codeg/formulas.hpp"

#include <algorithm>
#include <set>

#include "codeg/tables.hpp"

namespace codeg {

namespace {

void sort_unique(std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::int64_t p_power_sqrt(std::int64_t p, std::int64_t m, const char* what) {
    int k = plog(p, m);
    if (k < 0 || k % 2 != 0) throw error(std::string(what) + ": " + std::to_string(m) + " is not an even power of p");
    return ipow(p, k / 2);
}

CodegreeReport linear_part(int p, std::int64_t order, std::int64_t exp_gg) {
    CodegreeReport r;
    r.p = p;
    r.order = order;
    int m = plog(p, exp_gg);
    for (std::int64_t v = 1;; v *= p) {
        r.cod.push_back(v);
        r.provenance.push_back({v, "linear part"});
        if (plog(p, v) == m) break;
    }
    return r;
}

}  // namespace

GroupAnalysis::GroupAnalysis(const PcPresentation& pres, std::uint64_t seed, std::int64_t guard)
    : pres_(&pres), seed_(seed), guard_(guard) {}

const Subgroup& GroupAnalysis::center() {
    if (!center_) center_ = codeg::center(*pres_, guard_);
    return *center_;
}

const Subgroup& GroupAnalysis::derived() {
    if (!derived_) derived_ = codeg::derived_subgroup(*pres_, guard_);
    return *derived_;
}

const ConjugacyClasses& GroupAnalysis::classes() { return table().classes; }

const CharacterTable& GroupAnalysis::table() {
    if (!table_) table_ = character_table(*pres_, seed_, guard_);
    return *table_;
}

const StructuralProfile& GroupAnalysis::profile() {
    if (!profile_) {
        StructuralProfile prof = structural_profile(*pres_, guard_);
        prof.is_vz = is_vz(*this);
        prof.is_camina = camina_profile(*this).is_camina;
        profile_ = std::move(prof);
    }
    return *profile_;
}

CodegreeReport cod_abelian(int p, const std::vector<int>& partition) {
    if (!is_odd_prime(p)) throw input_error("cod_abelian: p must be an odd prime");
    int n = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] <= 0 || (i > 0 && partition[i] > partition[i - 1]))
            throw input_error("cod_abelian: partition must be non-increasing and positive");
        n += partition[i];
    }
    CodegreeReport r;
    r.p = p;
    r.order = ipow(p, n);
    r.method = "abelian";
    int l1 = partition.empty() ? 0 : partition[0];
    for (int i = 0; i <= l1; ++i) {
        r.cod.push_back(ipow(p, i));
        r.provenance.push_back({r.cod.back(), "linear, kernel of index p^" + std::to_string(i)});
    }
    return r;
}

CyclicQuotientKernel cyclic_quotient_kernel(int p, const std::vector<int>& partition, int b) {
    if (partition.empty()) throw input_error("cyclic_quotient_kernel: empty partition");
    if (b < 0 || b > partition[0])
        throw input_error("cyclic_quotient_kernel: need 0 <= b <= l_1 (a quotient C_{p^b} must embed in the dual)");
    GroupId id;
    id.family = Family::abelian;
    id.p = p;
    id.partition = partition;
    BuildOptions opts;
    opts.self_test = false;
    CyclicQuotientKernel out{build(id, opts), {}, 0, ipow(p, b)};
    const PcPresentation& a = out.ambient;

    auto heads = abelian_chain_heads(partition);
    int s = static_cast<int>(partition.size());
    int chosen = -1;
    for (int i = s; i >= 1; --i)
        if (partition[i - 1] >= b) {
            chosen = i;
            break;
        }
    // b <= l_1 guarantees the scan stops at i = 1 at the latest.
    out.replaced_part = chosen;
    std::vector<GroupElement> gens;
    for (int k = 1; k <= s; ++k) {
        GroupElement head = a.generator(heads[k - 1]);
        gens.push_back(k == chosen ? a.power(head, ipow(p, b)) : head);
    }
    out.kernel = closure(a, gens, a.order());

    // Post-hoc verification: index p^b and cyclic quotient.
    if (a.order() / out.kernel.order() != out.index)
        throw error("cyclic_quotient_kernel: wrong index");
    if (quotient_exponent(a, out.kernel, a.order()) != out.index)
        throw error("cyclic_quotient_kernel: quotient is not cyclic");
    return out;
}

CodegreeReport cod_lin(GroupAnalysis& g) {
    std::int64_t exp_gg = quotient_exponent(g.pres(), g.derived(), g.guard());
    CodegreeReport r = linear_part(g.pres().prime(), g.pres().order(), exp_gg);
    r.method = "linear";
    return r;
}

bool is_vz(GroupAnalysis& g) {
    const PcPresentation& pres = g.pres();
    const Subgroup& z = g.center();
    if (z.order() == pres.order()) return false;  // abelian, by convention
    // Necessary structural conditions: G' <= Z(G), G/Z and G' elementary
    // abelian, |G:Z| an even power of p.
    const Subgroup& der = g.derived();
    for (auto id : der.elems)
        if (!z.contains(id)) return false;
    std::int64_t index = pres.order() / z.order();
    int logidx = plog(pres.prime(), index);
    if (logidx % 2 != 0) return false;
    if (quotient_exponent(pres, z, g.guard()) != pres.prime()) return false;
    for (auto id : der.elems)
        if (!pres.power(pres.decode(id), pres.prime()).is_identity()) return false;
    // Degree criterion: cd(G) = {1, |G:Z|^{1/2}}.
    std::int64_t d = ipow(pres.prime(), logidx / 2);
    bool seen_nonlinear = false;
    for (const auto& row : g.table().rows) {
        if (row.degree == 1) continue;
        if (row.degree != d) return false;
        seen_nonlinear = true;
    }
    return seen_nonlinear;
}

std::vector<Subgroup> all_subgroups_of_abelian(const PcPresentation& pres, const Subgroup& sub) {
    if (sub.order() > 4000)
        throw guard_error("subgroup enumeration limited to abelian groups of order <= 4000");
    if (!is_abelian_subgroup(pres, sub)) throw input_error("subgroup enumeration: input is not abelian");
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Subgroup> out;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.elems).second) out.push_back(std::move(s));
    };
    add(Subgroup{{}, {pres.encode(pres.identity())}});
    for (auto id : sub.elems) add(closure(pres, {pres.decode(id)}, pres.order()));
    // Join closure to a fixpoint.
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            std::vector<GroupElement> gens = out[a].gens;
            gens.insert(gens.end(), out[b].gens.begin(), out[b].gens.end());
            add(closure(pres, gens, pres.order()));
        }
    return out;
}

std::int64_t section_exponent(const PcPresentation& pres, const Subgroup& sub, const Subgroup& normal) {
    std::int64_t best = 1;
    for (auto id : sub.elems) {
        GroupElement x = pres.decode(id);
        std::int64_t pk = 1;
        while (!normal.contains(pres, pres.power(x, pk))) pk *= pres.prime();
        best = std::max(best, pk);
    }
    return best;
}

CodegreeReport cod_vz_general(GroupAnalysis& g) {
    if (!is_vz(g)) throw input_error("cod_vz_general: group is not VZ");
    const PcPresentation& pres = g.pres();
    const Subgroup& z = g.center();
    const Subgroup& der = g.derived();
    std::int64_t root = p_power_sqrt(pres.prime(), pres.order() / z.order(), "cod_vz_general");

    CodegreeReport r = cod_lin(g);
    r.method = "vz_general";
    for (const auto& n : all_subgroups_of_abelian(pres, z)) {
        bool contains_derived = std::includes(n.elems.begin(), n.elems.end(),
                                              der.elems.begin(), der.elems.end());
        if (contains_derived) continue;
        std::int64_t quot = z.order() / n.order();
        if (section_exponent(pres, z, n) != quot) continue;  // Z/N not cyclic
        std::int64_t value = root * quot;
        r.cod.push_back(value);
        r.provenance.push_back({value, "nonlinear, |ker| = " + std::to_string(n.order())});
    }
    sort_unique(r.cod);
    return r;
}

const char* vz_case_name(VzCase c) {
    switch (c) {
        case VzCase::cyclic_center: return "vz_case_cyclic_center";
        case VzCase::elementary_center: return "vz_case_elementary_center";
        case VzCase::equal_rank: return "vz_case_equal_rank";
        case VzCase::two_generated_i: return "vz_case_two_generated_I";
        case VzCase::two_generated_ii: return "vz_case_two_generated_II";
    }
    return "?";
}

std::optional<std::pair<VzCase, CodegreeReport>> cod_vz_case(GroupAnalysis& g) {
    if (!is_vz(g)) throw input_error("cod_vz_case: group is not VZ");
    const PcPresentation& pres = g.pres();
    const std::int64_t p = pres.prime();
    const Subgroup& z = g.center();
    const Subgroup& der = g.derived();
    std::int64_t root = p_power_sqrt(p, pres.order() / z.order(), "cod_vz_case");
    std::vector<int> ztype = abelian_type(pres, z);
    int dz = static_cast<int>(ztype.size());
    int dd = static_cast<int>(abelian_type(pres, der).size());

    auto with_nl = [&](VzCase c, const std::vector<std::int64_t>& nl_values) {
        CodegreeReport r = cod_lin(g);
        r.method = vz_case_name(c);
        for (auto v : nl_values) {
            r.cod.push_back(v);
            r.provenance.push_back({v, "nonlinear"});
        }
        sort_unique(r.cod);
        return std::make_pair(c, std::move(r));
    };

    if (dz == 1)
        return with_nl(VzCase::cyclic_center, {root * z.order()});
    if (ztype[0] == 1)
        return with_nl(VzCase::elementary_center, {p * root});
    if (dd == dz) {
        std::vector<std::int64_t> vals;
        for (int lj : ztype) vals.push_back(ipow(p, lj) * root);
        return with_nl(VzCase::equal_rank, vals);
    }
    if (dd < dz && dz == 2) {
        int l1 = ztype[0], l2 = ztype[1];
        // Sub-case II iff G' lies in every cyclic subgroup of Z of order > p^{l2}.
        bool case_ii = true;
        std::int64_t threshold = ipow(p, l2);
        for (auto id : z.elems) {
            GroupElement x = pres.decode(id);
            if (pres.order_of(x) <= threshold) continue;
            Subgroup cyc = closure(pres, {x}, pres.order());
            if (!std::includes(cyc.elems.begin(), cyc.elems.end(), der.elems.begin(), der.elems.end())) {
                case_ii = false;
                break;
            }
        }
        if (case_ii)
            return with_nl(VzCase::two_generated_ii, {ipow(p, l1) * root});
        std::vector<std::int64_t> vals;
        for (int j = l2; j <= l1; ++j) vals.push_back(ipow(p, j) * root);
        return with_nl(VzCase::two_generated_i, vals);
    }
    return std::nullopt;  // d(G') < d(Z) >= 3: only the general algorithm applies
}

CodegreeReport cod_extraspecial(int p, std::int64_t order) {
    if (!is_odd_prime(p)) throw input_error("cod_extraspecial: p must be an odd prime");
    int m = plog(p, order);
    if (m < 3 || m % 2 == 0)
        throw input_error("cod_extraspecial: order must be p^(1+2n) with n >= 1");
    CodegreeReport r;
    r.p = p;
    r.order = order;
    r.method = "extraspecial";
    r.cod = {1, p, ipow(p, (m + 1) / 2)};
    r.provenance = {{1, "trivial character"},
                    {p, "linear part"},
                    {r.cod[2], "nonlinear, faithful"}};
    return r;
}

CaminaProfile camina_profile(GroupAnalysis& g) {
    const PcPresentation& pres = g.pres();
    CaminaProfile prof;
    const Subgroup& der = g.derived();
    if (der.order() == pres.order() || der.order() == 1) {
        // Trivial derived subgroup (abelian): not Camina by convention.
        prof.nilpotency_class = nilpotency_class(pres, g.guard());
        return prof;
    }
    const ConjugacyClasses& cc = g.classes();
    bool camina = true;
    for (int c = 0; c < cc.count() && camina; ++c) {
        std::uint64_t rep_id = pres.encode(cc.reps[c]);
        if (der.contains(rep_id)) continue;
        // Cl(g) = g G': sizes match and the coset lies inside the class.
        if (cc.sizes[c] != der.order()) {
            camina = false;
            break;
        }
        for (auto h : der.elems)
            if (cc.class_of[pres.encode(pres.multiply(cc.reps[c], pres.decode(h)))] != c) {
                camina = false;
                break;
            }
    }
    prof.is_camina = camina;
    prof.nilpotency_class = nilpotency_class(pres, g.guard());
    if (camina && prof.nilpotency_class == 3) {
        int two_n = plog(pres.prime(), pres.order() / der.order());
        if (two_n < 0 || two_n % 2 != 0) throw error("camina_profile: |G/G'| is not an even power of p");
        prof.n = two_n / 2;
    }
    return prof;
}

CodegreeReport cod_camina(const CaminaProfile& profile, int p, std::int64_t order,
                          std::int64_t derived_order, std::int64_t center_order) {
    if (!profile.is_camina) throw input_error("cod_camina: profile is not Camina");
    CodegreeReport r;
    r.p = p;
    r.order = order;
    if (profile.nilpotency_class == 2) {
        r.method = "camina_class2";
        std::int64_t root = p_power_sqrt(p, order / center_order, "cod_camina");
        r.cod = {1, p, p * root};
        r.provenance = {{1, "trivial character"}, {p, "linear part"}, {p * root, "nonlinear"}};
    } else if (profile.nilpotency_class == 3) {
        if (!profile.n) throw input_error("cod_camina: class-3 profile is missing n");
        int n = *profile.n;
        if (n % 2 != 0) throw input_error("cod_camina: class-3 parameter n must be even");
        if (order / derived_order != ipow(p, 2 * n) || order / center_order != ipow(p, 3 * n))
            throw input_error("cod_camina: sizes do not match |G/G'| = p^{2n}, |G/Z| = p^{3n}");
        r.method = "camina_class3";
        std::int64_t v1 = p * ipow(p, n);          // p |G/G'|^{1/2}
        std::int64_t v2 = p * ipow(p, 3 * n / 2);  // p |G/Z|^{1/2}
        r.cod = {1, p, v1, v2};
        r.provenance = {{1, "trivial character"},
                        {p, "linear part"},
                        {v1, "nonlinear, trivial on Z"},
                        {v2, "nonlinear, faithful on Z"}};
    } else {
        throw input_error("cod_camina: Camina p-groups have class 2 or 3");
    }
    return r;
}

std::optional<CodegreeReport> expected_codegrees(const GroupId& id) {
    auto from_exps = [&](const std::vector<int>& exps, std::int64_t order) {
        CodegreeReport r;
        r.p = id.p;
        r.order = order;
        r.method = "expected";
        for (int e : exps) {
            r.cod.push_back(ipow(id.p, e));
            r.provenance.push_back({r.cod.back(), "classification table"});
        }
        sort_unique(r.cod);
        return r;
    };
    switch (id.family) {
        case Family::abelian: {
            CodegreeReport r = cod_abelian(id.p, id.partition);
            r.method = "expected";
            return r;
        }
        case Family::heisenberg:
            return from_exps({0, 1, 2}, ipow(id.p, 3));
        case Family::extraspecial_exp_p:
        case Family::extraspecial_exp_p2:
            return from_exps({0, 1, id.rank + 1}, ipow(id.p, 2 * id.rank + 1));
        case Family::user_json:
            return std::nullopt;
        default:
            break;
    }
    if (id.p <= 3) return std::nullopt;  // phi classification covers p > 3 only
    std::string spec = family_name(id.family);
    for (const auto& row : classification_rows())
        for (const auto& b : row.builds)
            if (b == spec) return from_exps(row.cod_exps, ipow(id.p, row.order_exp));
    return std::nullopt;
}

std::optional<CodegreeReport> cod_formula(GroupAnalysis& g) {
    const PcPresentation& pres = g.pres();
    if (g.center().order() == pres.order()) {
        auto type = abelian_type(pres, whole_group(pres, g.guard()));
        return cod_abelian(pres.prime(), type);
    }
    if (is_vz(g)) {
        if (auto c = cod_vz_case(g)) return c->second;
        return cod_vz_general(g);
    }
    CaminaProfile camina = camina_profile(g);
    if (camina.is_camina)
        return cod_camina(camina, pres.prime(), pres.order(), g.derived().order(),
                          g.center().order());
    return std::nullopt;
}

bool in_summary_envelope(int p, std::int64_t order, const std::vector<std::int64_t>& cod) {
    auto exps = [&](std::initializer_list<int> es) {
        std::vector<std::int64_t> v;
        for (int e : es) v.push_back(ipow(p, e));
        return v;
    };
    int m = plog(p, order);
    std::vector<std::vector<std::int64_t>> allowed;
    if (m == 3) {
        allowed = {exps({0, 1, 2})};
    } else if (m == 4) {
        allowed = {exps({0, 1, 2}), exps({0, 1, 3}), exps({0, 1, 2, 3})};
    } else if (m == 5) {
        allowed = {exps({0, 1, 2}), exps({0, 1, 3}), exps({0, 1, 2, 3}),
                   exps({0, 1, 2, 4}), exps({0, 1, 2, 3, 4})};
    } else {
        throw input_error("summary envelope covers orders p^3, p^4, p^5");
    }
    return std::any_of(allowed.begin(), allowed.end(),
                       [&](const auto& s) { return s == cod; });
}

}  // namespace codeg
