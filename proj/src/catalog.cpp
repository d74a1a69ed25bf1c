#include "codeg/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "codeg/tables.hpp"

namespace codeg {

namespace {

using PowerList = std::vector<std::pair<int, std::vector<int>>>;
using CommList = std::vector<std::pair<std::pair<int, int>, std::vector<int>>>;

std::vector<int> unit(int n, int idx, int val = 1) {
    std::vector<int> v(n, 0);
    v[idx] = val;
    return v;
}

struct ExpectedStructure {
    int order_exp;
    int nilpotency_class;
    std::vector<int> center_type;
    std::vector<int> derived_type;
    std::int64_t exp_gg;  // exp(G/G') as plain integer
    bool derived_equals_center;
};

void self_test(const PcPresentation& pres, const ExpectedStructure& want, const std::string& name) {
    auto fail = [&](const std::string& what) {
        throw presentation_error("catalog self-test failed for " + name + ": " + what);
    };
    if (pres.order() != ipow(pres.prime(), want.order_exp)) fail("wrong order");
    StructuralProfile prof = structural_profile(pres, pres.order());
    if (prof.nilpotency_class != want.nilpotency_class)
        fail("nilpotency class " + std::to_string(prof.nilpotency_class));
    if (prof.center_type != want.center_type) fail("wrong center type");
    if (prof.derived_type != want.derived_type) fail("wrong derived type");
    if (prof.exp_g_over_derived != want.exp_gg)
        fail("exp(G/G') = " + std::to_string(prof.exp_g_over_derived));
    if (want.derived_equals_center &&
        !center(pres, pres.order()).same_elements(derived_subgroup(pres, pres.order())))
        fail("G' != Z(G)");
}

PcPresentation build_abelian(int p, const std::vector<int>& partition, std::int64_t guard) {
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] <= 0) throw input_error("abelian partition parts must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw input_error("abelian partition must be non-increasing");
    }
    int n = 0;
    for (int l : partition) n += l;
    PowerList powers;
    int base = 0;
    for (int l : partition) {
        for (int t = 0; t + 1 < l; ++t) powers.push_back({base + t, unit(n, base + t + 1)});
        base += l;
    }
    return PcPresentation(p, n, std::move(powers), {}, guard);
}

// Extraspecial p^{1+2n}: generators a_1, b_1, ..., a_n, b_n, c with
// [b_i, a_i] = c and c central; the exponent-p^2 variant sets a_1^p = c.
PcPresentation build_extraspecial(int p, int n, bool exponent_p2, std::int64_t guard) {
    if (n < 1) throw input_error("extraspecial rank must be >= 1");
    int gens = 2 * n + 1;
    int c = gens - 1;
    CommList comms;
    for (int t = 0; t < n; ++t) comms.push_back({{2 * t + 1, 2 * t}, unit(gens, c)});
    PowerList powers;
    if (exponent_p2) powers.push_back({0, unit(gens, c)});
    return PcPresentation(p, gens, std::move(powers), std::move(comms), guard);
}

// phi2(31) = < alpha, alpha1 | [alpha1, alpha] = alpha^{p^2}, alpha1^p = alpha^{p^3} = 1 >,
// refined with g2 = alpha^p and g3 = alpha^{p^2}.
PcPresentation build_phi2_31(int p, std::int64_t guard) {
    int n = 4;
    PowerList powers{{0, unit(n, 2)}, {2, unit(n, 3)}};
    CommList comms{{{1, 0}, unit(n, 3)}};
    return PcPresentation(p, n, std::move(powers), std::move(comms), guard);
}

// phi2(211)b = < alpha, alpha1, gamma | [alpha1, alpha] = gamma^p,
// alpha^p = alpha1^p = gamma^{p^2} = 1 >, refined with g3 = gamma^p.
PcPresentation build_phi2_211b(int p, std::int64_t guard) {
    int n = 4;
    PowerList powers{{2, unit(n, 3)}};
    CommList comms{{{1, 0}, unit(n, 3)}};
    return PcPresentation(p, n, std::move(powers), std::move(comms), guard);
}

// phi3(2111)c = < alpha, alpha1, alpha2, gamma | [alpha1, alpha] = alpha2,
// [alpha2, alpha] = gamma^p, alpha^p = alpha1^p = alpha2^p = 1 >,
// refined with g4 = gamma^p.  Generator order: alpha, alpha1, alpha2, gamma, gamma^p.
PcPresentation build_phi3_2111c(int p, std::int64_t guard) {
    int n = 5;
    PowerList powers{{3, unit(n, 4)}};
    CommList comms{{{1, 0}, unit(n, 2)}, {{2, 0}, unit(n, 4)}};
    return PcPresentation(p, n, std::move(powers), std::move(comms), guard);
}

// phi4(221)a = < alpha, alpha1, alpha2 | [alpha1, alpha] = alpha1^p,
// [alpha2, alpha] = alpha^p, alpha2^p = alpha^{p^2} = alpha1^{p^2} = 1 >,
// with beta1 = alpha1^p (g3) and beta2 = alpha^p (g4).
PcPresentation build_phi4_221a(int p, std::int64_t guard) {
    int n = 5;
    PowerList powers{{0, unit(n, 4)}, {1, unit(n, 3)}};
    CommList comms{{{1, 0}, unit(n, 3)}, {{2, 0}, unit(n, 4)}};
    return PcPresentation(p, n, std::move(powers), std::move(comms), guard);
}

// phi4(221)c = < alpha, alpha1, alpha2 | [alpha1, alpha] = alpha1^p,
// [alpha2, alpha] = alpha2^p, alpha^p = 1 >, with beta_i = alpha_i^p.
PcPresentation build_phi4_221c(int p, std::int64_t guard) {
    int n = 5;
    PowerList powers{{1, unit(n, 3)}, {2, unit(n, 4)}};
    CommList comms{{{1, 0}, unit(n, 3)}, {{2, 0}, unit(n, 4)}};
    return PcPresentation(p, n, std::move(powers), std::move(comms), guard);
}

// phi4(221)f_0 = < alpha, alpha1, alpha2 | [alpha1, alpha] = beta1,
// [alpha2, alpha] = beta2 = alpha1^p, alpha2^p = beta1^nu, alpha^p = 1 >,
// nu the smallest quadratic non-residue mod p; beta1 = g3, beta2 = g4.
PcPresentation build_phi4_221f0(int p, std::int64_t guard) {
    int n = 5;
    int nu = quadratic_nonresidue(p);
    PowerList powers{{1, unit(n, 4)}, {2, unit(n, 3, nu)}};
    CommList comms{{{1, 0}, unit(n, 3)}, {{2, 0}, unit(n, 4)}};
    return PcPresentation(p, n, std::move(powers), std::move(comms), guard);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::abelian: return "abelian";
        case Family::heisenberg: return "heisenberg";
        case Family::extraspecial_exp_p: return "extraspecial_exp_p";
        case Family::extraspecial_exp_p2: return "extraspecial_exp_p2";
        case Family::phi2_31: return "phi2_31";
        case Family::phi2_211b: return "phi2_211b";
        case Family::phi3_2111c: return "phi3_2111c";
        case Family::phi4_221a: return "phi4_221a";
        case Family::phi4_221c: return "phi4_221c";
        case Family::phi4_221f0: return "phi4_221f0";
        case Family::user_json: return "user_json";
    }
    return "?";
}

GroupId GroupId::parse(const std::string& spec, int p) {
    GroupId id;
    id.p = p;
    std::string head = spec;
    std::string arg;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        arg = spec.substr(colon + 1);
    }
    auto want_int = [&](const char* what) {
        try {
            std::size_t used = 0;
            int v = std::stoi(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return v;
        } catch (const std::exception&) {
            throw input_error(std::string("group spec: expected an integer ") + what + " after ':'");
        }
    };
    if (head == "abelian") {
        id.family = Family::abelian;
        if (arg.empty()) throw input_error("abelian spec needs a partition, e.g. abelian:2,1");
        std::stringstream ss(arg);
        std::string part;
        while (std::getline(ss, part, ','))
            try {
                id.partition.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw input_error("abelian partition: cannot parse \"" + part + "\"");
            }
    } else if (head == "heisenberg") {
        id.family = Family::heisenberg;
    } else if (head == "extraspecial_exp_p") {
        id.family = Family::extraspecial_exp_p;
        id.rank = arg.empty() ? 1 : want_int("rank");
    } else if (head == "extraspecial_exp_p2") {
        id.family = Family::extraspecial_exp_p2;
        id.rank = arg.empty() ? 1 : want_int("rank");
    } else if (head == "phi2_31") {
        id.family = Family::phi2_31;
    } else if (head == "phi2_211b") {
        id.family = Family::phi2_211b;
    } else if (head == "phi3_2111c") {
        id.family = Family::phi3_2111c;
    } else if (head == "phi4_221a") {
        id.family = Family::phi4_221a;
    } else if (head == "phi4_221c") {
        id.family = Family::phi4_221c;
    } else if (head == "phi4_221f0") {
        id.family = Family::phi4_221f0;
    } else if (head == "user_json") {
        id.family = Family::user_json;
        if (arg.empty()) throw input_error("user_json spec needs a file path");
        id.path = arg;
    } else {
        throw input_error("unknown group family: " + head);
    }
    return id;
}

std::string GroupId::name() const {
    std::string s = family_name(family);
    if (family == Family::abelian) {
        s += ":";
        for (std::size_t i = 0; i < partition.size(); ++i)
            s += (i ? "," : "") + std::to_string(partition[i]);
    } else if (family == Family::extraspecial_exp_p || family == Family::extraspecial_exp_p2) {
        s += ":" + std::to_string(rank);
    } else if (family == Family::user_json) {
        s += ":" + path;
    }
    return s;
}

int quadratic_nonresidue(int p) {
    if (!is_odd_prime(p)) throw input_error("quadratic_nonresidue: p must be an odd prime");
    std::vector<bool> is_square(p, false);
    for (int x = 1; x < p; ++x) is_square[static_cast<int>((static_cast<std::int64_t>(x) * x) % p)] = true;
    for (int nu = 2; nu < p; ++nu)
        if (!is_square[nu]) return nu;
    throw error("no quadratic non-residue found");  // unreachable for odd primes
}

PcPresentation build(const GroupId& id, const BuildOptions& opts) {
    if (id.family != Family::user_json && !is_odd_prime(id.p))
        throw input_error("catalog groups need an odd prime p, got " + std::to_string(id.p));
    bool is_phi = id.family == Family::phi2_31 || id.family == Family::phi2_211b ||
                  id.family == Family::phi3_2111c || id.family == Family::phi4_221a ||
                  id.family == Family::phi4_221c || id.family == Family::phi4_221f0;
    if (is_phi && id.p <= 3 && !opts.allow_small_prime_phi)
        throw input_error("the phi presentations classify groups for p > 3 only "
                          "(pass the small-prime override to instantiate anyway)");

    auto finish = [&](PcPresentation pres, ExpectedStructure want, const std::string& name) {
        if (opts.self_test && pres.order() <= opts.order_guard) self_test(pres, want, name);
        return pres;
    };

    std::int64_t p = id.p;
    switch (id.family) {
        case Family::abelian: {
            PcPresentation pres = build_abelian(id.p, id.partition, opts.order_guard);
            if (opts.self_test && pres.order() <= opts.order_guard) {
                StructuralProfile prof = structural_profile(pres, opts.order_guard);
                if (!prof.is_abelian) throw presentation_error("abelian self-test failed");
                if (abelian_type(pres, whole_group(pres, opts.order_guard)) != id.partition)
                    throw presentation_error("abelian self-test failed: wrong type");
            }
            return pres;
        }
        case Family::heisenberg:
            return finish(build_extraspecial(id.p, 1, false, opts.order_guard),
                          {3, 2, {1}, {1}, p, true}, id.name());
        case Family::extraspecial_exp_p:
            return finish(build_extraspecial(id.p, id.rank, false, opts.order_guard),
                          {2 * id.rank + 1, 2, {1}, {1}, p, true}, id.name());
        case Family::extraspecial_exp_p2:
            return finish(build_extraspecial(id.p, id.rank, true, opts.order_guard),
                          {2 * id.rank + 1, 2, {1}, {1}, p, true}, id.name());
        case Family::phi2_31:
            return finish(build_phi2_31(id.p, opts.order_guard), {4, 2, {2}, {1}, p * p, false}, id.name());
        case Family::phi2_211b:
            return finish(build_phi2_211b(id.p, opts.order_guard), {4, 2, {2}, {1}, p, false}, id.name());
        case Family::phi3_2111c:
            return finish(build_phi3_2111c(id.p, opts.order_guard), {5, 3, {2}, {1, 1}, p, false}, id.name());
        case Family::phi4_221a:
            return finish(build_phi4_221a(id.p, opts.order_guard), {5, 2, {1, 1}, {1, 1}, p, true}, id.name());
        case Family::phi4_221c:
            return finish(build_phi4_221c(id.p, opts.order_guard), {5, 2, {1, 1}, {1, 1}, p, true}, id.name());
        case Family::phi4_221f0:
            return finish(build_phi4_221f0(id.p, opts.order_guard), {5, 2, {1, 1}, {1, 1}, p, true}, id.name());
        case Family::user_json:
            return PcPresentation::from_json_file(id.path, opts.order_guard);
    }
    throw input_error("unknown family");
}

std::vector<int> abelian_chain_heads(const std::vector<int>& partition) {
    std::vector<int> heads;
    int base = 0;
    for (int l : partition) {
        heads.push_back(base);
        base += l;
    }
    return heads;
}

std::vector<CatalogEntry> list_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](std::string name, std::string spec, bool constructible, std::string desc,
                   std::string cod, std::string order) {
        out.push_back({std::move(name), std::move(spec), constructible, std::move(desc),
                       std::move(cod), std::move(order)});
    };
    add("abelian", "abelian:l1,l2,...", true,
        "abelian p-group of type C_{p^l1} x C_{p^l2} x ...",
        "{p^i : 0 <= i <= l1}", "p^(l1+l2+...)");
    add("heisenberg", "heisenberg", true,
        "extraspecial group of order p^3 and exponent p",
        "{1, p, p^2}", "p^3");
    add("extraspecial_exp_p", "extraspecial_exp_p:n", true,
        "extraspecial group of order p^(1+2n) and exponent p",
        "{1, p, p^(n+1)}", "p^(1+2n)");
    add("extraspecial_exp_p2", "extraspecial_exp_p2:n", true,
        "extraspecial group of order p^(1+2n) and exponent p^2",
        "{1, p, p^(n+1)}", "p^(1+2n)");
    for (const auto& row : classification_rows()) {
        if (row.suite == "3groups") continue;  // order-3^n rows repeat families above
        std::string cod = "{";
        for (std::size_t i = 0; i < row.cod_exps.size(); ++i) {
            int e = row.cod_exps[i];
            cod += (i ? ", " : "");
            cod += e == 0 ? "1" : (e == 1 ? "p" : "p^" + std::to_string(e));
        }
        cod += "}";
        std::string desc = row.builds.empty()
                               ? "classification row (no published presentation; supply one via user_json to verify)"
                               : (row.note.empty() ? "classification row" : row.note);
        add(row.name, row.builds.empty() ? "" : row.builds.front(), !row.builds.empty(), desc, cod,
            "p^" + std::to_string(row.order_exp));
    }
    return out;
}

}  // namespace codeg
