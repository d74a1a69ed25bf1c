#include "codeg/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "codeg/gf.hpp"

namespace codeg {

namespace {

void check_guard(const PcPresentation& pres, std::int64_t guard) {
    if (pres.order() > guard)
        throw guard_error("group order " + std::to_string(pres.order()) +
                          " exceeds the order guard " + std::to_string(guard));
}

}  // namespace

ConjugacyClasses conjugacy_classes(const PcPresentation& pres, std::int64_t guard) {
    check_guard(pres, guard);
    const std::int64_t order = pres.order();
    const int n = pres.rank();

    std::vector<GroupElement> gen_inv;
    for (int i = 0; i < n; ++i) gen_inv.push_back(pres.inverse(pres.generator(i)));

    ConjugacyClasses cc;
    cc.class_of.assign(static_cast<std::size_t>(order), -1);
    // Sweep ids in increasing order; each unvisited id starts a new orbit of
    // the conjugation action, so representatives are minimal in their class.
    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(order); ++id) {
        if (cc.class_of[id] != -1) continue;
        std::int32_t cls = static_cast<std::int32_t>(cc.reps.size());
        cc.reps.push_back(pres.decode(id));
        cc.class_of[id] = cls;
        std::int64_t size = 1;
        std::vector<GroupElement> frontier{cc.reps.back()};
        while (!frontier.empty()) {
            std::vector<GroupElement> next;
            for (const auto& x : frontier)
                for (int i = 0; i < n; ++i) {
                    GroupElement y = pres.multiply(pres.multiply(gen_inv[i], x), pres.generator(i));
                    std::uint64_t yid = pres.encode(y);
                    if (cc.class_of[yid] == -1) {
                        cc.class_of[yid] = cls;
                        ++size;
                        next.push_back(std::move(y));
                    }
                }
            frontier = std::move(next);
        }
        cc.sizes.push_back(size);
    }

    cc.exponent = 1;
    for (const auto& rep : cc.reps) cc.exponent = std::max(cc.exponent, pres.order_of(rep));

    cc.power_class.resize(cc.reps.size());
    for (std::size_t c = 0; c < cc.reps.size(); ++c) {
        cc.power_class[c].reserve(static_cast<std::size_t>(cc.exponent));
        GroupElement cur = pres.identity();
        for (std::int64_t m = 0; m < cc.exponent; ++m) {
            cc.power_class[c].push_back(cc.class_of[pres.encode(cur)]);
            cur = pres.multiply(cur, cc.reps[c]);
        }
    }
    cc.inverse_class.resize(cc.reps.size());
    for (std::size_t c = 0; c < cc.reps.size(); ++c)
        cc.inverse_class[c] =
            cc.exponent == 1 ? cc.power_class[c][0] : cc.power_class[c][cc.exponent - 1];
    return cc;
}

ClassMatrix class_matrix(const PcPresentation& pres, const ConjugacyClasses& classes, int i) {
    const int k = classes.count();
    if (i < 0 || i >= k) throw input_error("class_matrix: class index out of range");
    ClassMatrix m;
    m.index = i;
    m.a.assign(k, std::vector<std::int64_t>(k, 0));
    // Collect the elements of C_i once, then count a[j][kk] = #{x in C_i :
    // x^-1 z_kk in C_j}, which equals #{(x,y) in C_i x C_j : x y = z_kk}.
    std::vector<GroupElement> members;
    members.reserve(static_cast<std::size_t>(classes.sizes[i]));
    for (std::uint64_t id = 0; id < classes.class_of.size(); ++id)
        if (classes.class_of[id] == i) members.push_back(pres.decode(id));
    for (const auto& x : members) {
        GroupElement xinv = pres.inverse(x);
        for (int kk = 0; kk < k; ++kk) {
            std::int32_t j = classes.class_of[pres.encode(pres.multiply(xinv, classes.reps[kk]))];
            ++m.a[j][kk];
        }
    }
    return m;
}

namespace {

// One in-progress eigenspace: basis rows over GF(ell), kept reduced with the
// pivot columns remembered so that coordinates can be read off directly.
struct Space {
    GFMatrix basis;
    std::vector<int> pivots;
};

Space make_space(const GF& f, GFMatrix rows) {
    Space s;
    s.pivots = rref(f, rows);
    s.basis = std::move(rows);
    return s;
}

// Class matrices are sparse (the entries of column k sum to |C_i|), so the
// action on a subspace is applied from a triplet list.
struct SparseMatrix {
    std::size_t dim = 0;
    std::vector<std::tuple<std::int32_t, std::int32_t, std::uint64_t>> entries;  // (row, col, value)
};

// Split `space` into the eigenspaces of `mat` (which must leave the space
// invariant and act diagonalizably on it).
std::vector<Space> split_space(const GF& f, const Space& space, const SparseMatrix& mat) {
    const std::size_t m = space.basis.size();
    const std::size_t k = mat.dim;
    // Restriction C: image(B_r) = sum_s C[r][s] B_s, coordinates read off at
    // the pivot columns of the reduced basis.
    GFMatrix images(m, std::vector<std::uint64_t>(k, 0));
    for (auto& [j, t, v] : mat.entries)
        for (std::size_t r = 0; r < m; ++r) {
            std::uint64_t b = space.basis[r][t];
            if (b) images[r][j] = f.add(images[r][j], f.mul(v, b));
        }
    GFMatrix c(m, std::vector<std::uint64_t>(m, 0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) c[r][s] = images[r][space.pivots[s]];

    auto poly = char_poly(f, c);
    auto roots = poly_roots(f, poly);
    if (roots.size() <= 1) return {};  // no split

    int covered = 0;
    for (auto& [lambda, mult] : roots) covered += mult;
    if (covered != static_cast<int>(m))
        throw error("eigenspace splitting: characteristic polynomial did not split");

    std::vector<Space> parts;
    for (auto& [lambda, mult] : roots) {
        // Left eigenvectors of C: right kernel of C^T - lambda I.
        GFMatrix ct(m, std::vector<std::uint64_t>(m, 0));
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) ct[r][s] = c[s][r];
        for (std::size_t r = 0; r < m; ++r) ct[r][r] = f.sub(ct[r][r], lambda);
        GFMatrix coords = kernel_basis(f, std::move(ct));
        if (static_cast<int>(coords.size()) != mult)
            throw error("eigenspace splitting: matrix is not diagonalizable on the space");
        GFMatrix rows;
        for (const auto& x : coords) {
            std::vector<std::uint64_t> v(k, 0);
            for (std::size_t r = 0; r < m; ++r) {
                if (!x[r]) continue;
                for (std::size_t t = 0; t < k; ++t)
                    v[t] = f.add(v[t], f.mul(x[r], space.basis[r][t]));
            }
            rows.push_back(std::move(v));
        }
        parts.push_back(make_space(f, std::move(rows)));
    }
    return parts;
}

SparseMatrix to_sparse(const GF& f, const ClassMatrix& m) {
    SparseMatrix out;
    out.dim = m.a.size();
    for (std::size_t j = 0; j < m.a.size(); ++j)
        for (std::size_t t = 0; t < m.a.size(); ++t)
            if (m.a[j][t]) {
                std::uint64_t v = f.from_int(m.a[j][t]);
                if (v) out.entries.push_back({static_cast<std::int32_t>(j),
                                              static_cast<std::int32_t>(t), v});
            }
    return out;
}

// Common eigenvectors of all class matrices, normalized so the entry at the
// identity class is 1.  These are the central characters mod ell.
std::vector<std::vector<std::uint64_t>> central_characters(const PcPresentation& pres,
                                                           const ConjugacyClasses& classes,
                                                           const GF& f, std::uint64_t seed) {
    const int k = classes.count();
    std::vector<Space> done;
    std::vector<Space> live;
    {
        GFMatrix full(k, std::vector<std::uint64_t>(k, 0));
        for (int i = 0; i < k; ++i) full[i][i] = 1;
        live.push_back(make_space(f, std::move(full)));
    }
    if (k == 1) done = std::move(live), live.clear();

    // Ascending class size; ties broken by the representative's element order
    // (few distinct eigenvalues first), then by class index.  Deterministic.
    std::vector<std::int64_t> rep_order(k);
    for (int c = 0; c < k; ++c) rep_order[c] = pres.order_of(classes.reps[c]);
    std::vector<int> order_idx(k);
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        return std::make_tuple(classes.sizes[a], rep_order[a], a) <
               std::make_tuple(classes.sizes[b], rep_order[b], b);
    });

    auto sweep = [&](const SparseMatrix& mat) {
        std::vector<Space> next;
        for (auto& sp : live) {
            auto parts = split_space(f, sp, mat);
            if (parts.empty()) {
                next.push_back(std::move(sp));
                continue;
            }
            for (auto& part : parts)
                if (part.basis.size() == 1)
                    done.push_back(std::move(part));
                else
                    next.push_back(std::move(part));
        }
        live = std::move(next);
    };

    for (int idx : order_idx) {
        if (live.empty()) break;
        if (idx == 0) continue;  // identity class: scalar matrix, no split
        sweep(to_sparse(f, class_matrix(pres, classes, idx)));
    }

    // Deterministic pass over single matrices separates all characters for the
    // groups in scope; random linear combinations are the documented fallback.
    int attempt = 0;
    std::mt19937_64 rng(seed ^ 0x636f646567ULL);
    while (!live.empty() && attempt < 64) {
        ++attempt;
        GFMatrix combo(k, std::vector<std::uint64_t>(k, 0));
        for (int idx = 1; idx < k; ++idx) {
            std::uint64_t coef = rng() % f.modulus();
            if (!coef) continue;
            SparseMatrix mat = to_sparse(f, class_matrix(pres, classes, idx));
            for (auto& [a, b, v] : mat.entries)
                combo[a][b] = f.add(combo[a][b], f.mul(coef, v));
        }
        SparseMatrix sparse_combo;
        sparse_combo.dim = static_cast<std::size_t>(k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (combo[a][b]) sparse_combo.entries.push_back({a, b, combo[a][b]});
        sweep(sparse_combo);
    }
    if (!live.empty())
        throw error("eigenspace splitting failed after randomized retries (seed " +
                    std::to_string(seed) + ")");

    std::vector<std::vector<std::uint64_t>> omegas;
    omegas.reserve(done.size());
    for (auto& sp : done) {
        auto w = sp.basis[0];
        if (w[0] == 0) throw error("central character vanishes at the identity class");
        std::uint64_t scale = f.inv(w[0]);
        for (auto& x : w) x = f.mul(x, scale);
        omegas.push_back(std::move(w));
    }
    if (static_cast<int>(omegas.size()) != k)
        throw error("wrong number of central characters");
    return omegas;
}

}  // namespace

CharacterTable character_table(const PcPresentation& pres, std::uint64_t seed, std::int64_t guard) {
    check_guard(pres, guard);
    CharacterTable table;
    table.seed = seed;
    table.classes = conjugacy_classes(pres, guard);
    const ConjugacyClasses& cc = table.classes;
    const int k = cc.count();
    const std::int64_t order = pres.order();
    const std::int64_t e = cc.exponent;

    table.dixon_ell = dixon_prime(e, order);
    GF f(static_cast<std::uint64_t>(table.dixon_ell));
    table.primitive_root = smallest_primitive_root(f.modulus());
    table.theta = f.pow(table.primitive_root, (f.modulus() - 1) / static_cast<std::uint64_t>(e));

    auto omegas = central_characters(pres, cc, f, seed);

    // theta^t -> t, for lifting degree-1 values directly.
    std::vector<std::int32_t> dlog(f.modulus(), -1);
    {
        std::uint64_t v = 1;
        for (std::int64_t t = 0; t < e; ++t) {
            dlog[v] = static_cast<std::int32_t>(t);
            v = f.mul(v, table.theta);
        }
    }
    std::vector<std::uint64_t> inv_size(k);
    for (int c = 0; c < k; ++c) inv_size[c] = f.inv(f.from_int(cc.sizes[c]));
    const std::uint64_t theta_inv = f.inv(table.theta);
    const std::uint64_t e_inv = f.inv(f.from_int(e));

    std::int64_t degree_bound = 1;
    while (degree_bound * degree_bound <= order) degree_bound *= pres.prime();
    degree_bound /= pres.prime();  // largest p-power d with d^2 <= order

    std::vector<std::int64_t> degree_check;
    for (const auto& w : omegas) {
        // d^2 = |G| / sum_c w_c w_{c*} / |C_c| in GF(ell); ell > 2 sqrt|G|
        // separates the p-power candidates.
        std::uint64_t s = 0;
        for (int c = 0; c < k; ++c)
            s = f.add(s, f.mul(f.mul(w[c], w[cc.inverse_class[c]]), inv_size[c]));
        std::uint64_t target = f.mul(f.from_int(order), f.inv(s));
        std::int64_t degree = -1;
        for (std::int64_t d = 1; d <= degree_bound; d *= pres.prime())
            if (f.from_int(d * d) == target) {
                degree = d;
                break;
            }
        if (degree < 0) throw error("degree recovery failed");
        degree_check.push_back(degree);
    }

    std::vector<std::vector<std::int32_t>> kernel_classes(omegas.size());
    for (std::size_t r = 0; r < omegas.size(); ++r) {
        const auto& w = omegas[r];
        const std::int64_t d = degree_check[r];
        CharacterRow row;
        row.degree = d;
        std::vector<std::uint64_t> chi_mod(k);
        for (int c = 0; c < k; ++c) chi_mod[c] = f.mul(f.mul(f.from_int(d), w[c]), inv_size[c]);
        row.values.resize(k);
        for (int c = 0; c < k; ++c) {
            CyclotomicValue val;
            if (d == 1) {
                std::int32_t t = dlog[chi_mod[c]];
                if (t < 0) throw std::logic_error("linear character value is not a root of unity");
                val.terms.push_back({t, 1});
            } else {
                // Eigenvalue multiplicities m_t = (1/e) sum_j chi(g^j) theta^{-jt}.
                std::vector<std::uint64_t> fj(static_cast<std::size_t>(e));
                for (std::int64_t j = 0; j < e; ++j) fj[j] = chi_mod[cc.power_class[c][j]];
                auto spectrum = ntt(f, fj, theta_inv, pres.prime());
                std::int64_t total = 0;
                for (std::int64_t t = 0; t < e; ++t) {
                    std::uint64_t mt = f.mul(spectrum[t], e_inv);
                    if (mt == 0) continue;
                    if (static_cast<std::int64_t>(mt) > d)
                        throw std::logic_error("lifted eigenvalue multiplicity exceeds the degree");
                    val.terms.push_back({static_cast<std::int32_t>(t), static_cast<std::int64_t>(mt)});
                    total += static_cast<std::int64_t>(mt);
                }
                if (total != d) throw std::logic_error("lifted multiplicities do not sum to the degree");
            }
            if (val.is_full_at_zero(d)) kernel_classes[r].push_back(c);
            row.values[c] = std::move(val);
        }
        table.rows.push_back(std::move(row));
    }

    // Kernels as explicit subgroups (unions of the trivial-value classes).
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        std::vector<bool> in_kernel(k, false);
        for (auto c : kernel_classes[r]) in_kernel[c] = true;
        Subgroup ker;
        for (std::uint64_t id = 0; id < cc.class_of.size(); ++id)
            if (in_kernel[cc.class_of[id]]) ker.elems.push_back(id);
        std::int64_t ker_order = ker.order();
        if (order % (ker_order * table.rows[r].degree) != 0)
            throw std::logic_error("kernel order does not divide the group order");
        table.rows[r].codegree = order / (ker_order * table.rows[r].degree);
        table.rows[r].kernel = std::move(ker);
    }

    std::sort(table.rows.begin(), table.rows.end(), [](const CharacterRow& a, const CharacterRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (std::size_t c = 0; c < a.values.size(); ++c)
            if (a.values[c].terms != b.values[c].terms) return a.values[c].terms < b.values[c].terms;
        return false;
    });
    return table;
}

CodegreeReport codegrees_bruteforce(const PcPresentation& pres, std::uint64_t seed, std::int64_t guard) {
    CharacterTable table = character_table(pres, seed, guard);
    CodegreeReport report;
    report.p = pres.prime();
    report.order = pres.order();
    report.method = "bruteforce";
    for (const auto& row : table.rows) {
        report.cod.push_back(row.codegree);
        report.provenance.push_back(
            {row.codegree, "degree " + std::to_string(row.degree) + ", |ker| = " +
                               std::to_string(row.kernel.order())});
    }
    std::sort(report.cod.begin(), report.cod.end());
    report.cod.erase(std::unique(report.cod.begin(), report.cod.end()), report.cod.end());
    return report;
}

bool rows_orthogonal(const CharacterTable& table, int row_a, int row_b, std::int64_t group_order) {
    const std::int64_t e = table.classes.exponent;
    const int k = table.classes.count();
    std::vector<std::int64_t> acc(static_cast<std::size_t>(e), 0);
    for (int c = 0; c < k; ++c) {
        const auto& va = table.rows[row_a].values[c].terms;
        const auto& vb = table.rows[row_b].values[table.classes.inverse_class[c]].terms;
        for (auto& [ka, ma] : va)
            for (auto& [kb, mb] : vb)
                acc[(ka + kb) % e] += table.classes.sizes[c] * ma * mb;
    }
    std::int64_t expected = (row_a == row_b) ? group_order : 0;
    acc[0] -= expected;
    if (e == 1) return acc[0] == 0;
    // Reduce in Z[zeta_e], e = p^a: zeta^s = -sum_{t=1}^{p-1} zeta^{s - t e/p}
    // for s >= phi(e) = e - e/p.
    std::int64_t p = 2;
    while (e % p != 0 || !is_prime(p)) ++p;
    std::int64_t chunk = e / p;
    std::int64_t phi = e - chunk;
    for (std::int64_t s = e - 1; s >= phi; --s) {
        std::int64_t v = acc[s];
        if (!v) continue;
        acc[s] = 0;
        for (std::int64_t t = 1; t < p; ++t) acc[s - t * chunk] -= v;
    }
    return std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
}

nlohmann::ordered_json table_to_json(const PcPresentation& pres, const CharacterTable& table) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["p"] = pres.prime();
    j["n"] = pres.rank();
    j["order"] = pres.order();
    j["exponent"] = table.classes.exponent;
    j["dixon_prime"] = table.dixon_ell;
    j["theta"] = {{"primitive_root", table.primitive_root},
                  {"power", (table.dixon_ell - 1) / table.classes.exponent},
                  {"value", table.theta}};
    j["seed"] = table.seed;
    auto reps = nlohmann::ordered_json::array();
    for (const auto& rep : table.classes.reps) {
        std::vector<int> v(rep.exps.begin(), rep.exps.end());
        reps.push_back(v);
    }
    j["classes"] = {{"count", table.classes.count()},
                    {"representatives", std::move(reps)},
                    {"sizes", table.classes.sizes}};
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rj;
        rj["degree"] = row.degree;
        rj["kernel_order"] = row.kernel.order();
        rj["codegree"] = row.codegree;
        auto vals = nlohmann::ordered_json::array();
        for (const auto& v : row.values) vals.push_back(v.dense(table.classes.exponent));
        rj["values"] = std::move(vals);
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace codeg
