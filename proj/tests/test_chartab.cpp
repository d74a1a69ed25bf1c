#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "codeg/catalog.hpp"
#include "codeg/chartab.hpp"
#include "codeg/gf.hpp"

using namespace codeg;

namespace {

// Independent class oracle: conjugate every element by every element.
std::vector<std::set<std::uint64_t>> classes_by_full_conjugation(const PcPresentation& pres) {
    std::vector<std::set<std::uint64_t>> out;
    std::set<std::uint64_t> seen;
    for (std::uint64_t id = 0; id < static_cast<std::uint64_t>(pres.order()); ++id) {
        if (seen.count(id)) continue;
        GroupElement x = pres.decode(id);
        std::set<std::uint64_t> orbit;
        for (std::uint64_t yid = 0; yid < static_cast<std::uint64_t>(pres.order()); ++yid)
            orbit.insert(pres.encode(pres.conjugate(x, pres.decode(yid))));
        seen.insert(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::multiset<std::int64_t> degree_multiset(const CharacterTable& t) {
    std::multiset<std::int64_t> ds;
    for (const auto& row : t.rows) ds.insert(row.degree);
    return ds;
}

}  // namespace

TEST_CASE("dixon_prime picks the smallest admissible prime") {
    CHECK(dixon_prime(3, 27) == 13);
    CHECK(dixon_prime(5, 125) == 31);
    CHECK(dixon_prime(25, 625) == 101);
    // oracle re-check: nothing smaller qualifies
    for (auto [e, order, ell] : std::vector<std::array<std::int64_t, 3>>{
             {3, 27, 13}, {5, 125, 31}, {25, 625, 101}}) {
        for (std::int64_t m = 2; m < ell; ++m)
            CHECK((!is_prime(m) || m % e != 1 || 4 * order >= m * m));
        CHECK(is_prime(ell));
        CHECK(ell % e == 1);
        CHECK(4 * order < ell * ell);
    }
}

TEST_CASE("conjugacy classes of Heisenberg(3) against the full-conjugation oracle") {
    PcPresentation h = build(GroupId::parse("heisenberg", 3));
    ConjugacyClasses cc = conjugacy_classes(h);
    auto oracle = classes_by_full_conjugation(h);
    CHECK(cc.count() == 11);
    CHECK(oracle.size() == 11);
    // identical partitions of the element set
    std::set<std::set<std::uint64_t>> got;
    for (int c = 0; c < cc.count(); ++c) {
        std::set<std::uint64_t> members;
        for (std::uint64_t id = 0; id < 27; ++id)
            if (cc.class_of[id] == c) members.insert(id);
        got.insert(std::move(members));
    }
    CHECK(got == std::set<std::set<std::uint64_t>>(oracle.begin(), oracle.end()));
    std::int64_t total = 0;
    for (auto s : cc.sizes) total += s;
    CHECK(total == 27);
    CHECK(cc.sizes[0] == 1);
    CHECK(cc.reps[0].is_identity());
}

TEST_CASE("abelian groups have singleton classes only") {
    PcPresentation a = build(GroupId::parse("abelian:2,1", 3));
    ConjugacyClasses cc = conjugacy_classes(a);
    CHECK(cc.count() == 27);
    for (auto s : cc.sizes) CHECK(s == 1);
}

TEST_CASE("phi2_211b at p=5: 145 classes of sizes 1 and 5") {
    PcPresentation pres = build(GroupId::parse("phi2_211b", 5));
    ConjugacyClasses cc = conjugacy_classes(pres);
    CHECK(cc.count() == 145);
    int singletons = 0, fives = 0;
    for (auto s : cc.sizes) {
        if (s == 1) ++singletons;
        if (s == 5) ++fives;
    }
    CHECK(singletons == 25);  // = |Z|
    CHECK(fives == 120);
}

TEST_CASE("class matrix facts") {
    PcPresentation h = build(GroupId::parse("heisenberg", 3));
    ConjugacyClasses cc = conjugacy_classes(h);

    // identity class: a[j][k] = delta_jk
    ClassMatrix m0 = class_matrix(h, cc, 0);
    for (int j = 0; j < cc.count(); ++j)
        for (int k = 0; k < cc.count(); ++k) CHECK(m0.a[j][k] == (j == k ? 1 : 0));

    // column sums equal |C_i|
    for (int i = 0; i < cc.count(); ++i) {
        ClassMatrix mi = class_matrix(h, cc, i);
        for (int k = 0; k < cc.count(); ++k) {
            std::int64_t sum = 0;
            for (int j = 0; j < cc.count(); ++j) sum += mi.a[j][k];
            CHECK(sum == cc.sizes[i]);
        }
        // identity column: a[j][0] = |C_i| iff C_j is the inverse class
        for (int j = 0; j < cc.count(); ++j)
            CHECK(mi.a[j][0] == (j == cc.inverse_class[i] ? cc.sizes[i] : 0));
    }

    // direct-count oracle on a non-central class of Heisenberg(3)
    int i = 0;
    while (cc.sizes[i] == 1) ++i;
    ClassMatrix mi = class_matrix(h, cc, i);
    std::vector<std::vector<GroupElement>> members(cc.count());
    for (std::uint64_t id = 0; id < 27; ++id) members[cc.class_of[id]].push_back(h.decode(id));
    for (int j = 0; j < cc.count(); ++j)
        for (int k = 0; k < cc.count(); ++k) {
            std::int64_t count = 0;
            for (const auto& x : members[i])
                for (const auto& y : members[j])
                    if (h.multiply(x, y) == cc.reps[k]) ++count;
            CHECK(mi.a[j][k] == count);
        }

    // abelian: one nonzero entry per column
    PcPresentation a = build(GroupId::parse("abelian:1,1", 3));
    ConjugacyClasses cca = conjugacy_classes(a);
    for (int ii = 0; ii < cca.count(); ++ii) {
        ClassMatrix mm = class_matrix(a, cca, ii);
        for (int k = 0; k < cca.count(); ++k) {
            int nonzero = 0;
            for (int j = 0; j < cca.count(); ++j)
                if (mm.a[j][k]) ++nonzero;
            CHECK(nonzero == 1);
        }
    }
}

TEST_CASE("character table of C_3: three linear characters, codegrees {1,3}") {
    PcPresentation c3 = build(GroupId::parse("abelian:1", 3));
    CharacterTable t = character_table(c3);
    REQUIRE(t.rows.size() == 3);
    for (const auto& row : t.rows) CHECK(row.degree == 1);
    CHECK(t.rows[0].codegree == 1);
    CHECK(t.rows[0].kernel.order() == 3);
    auto report = codegrees_bruteforce(c3);
    CHECK(report.cod == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("trivial group has cod = {1}") {
    PcPresentation triv(3, 0, {}, {});
    auto report = codegrees_bruteforce(triv);
    CHECK(report.cod == std::vector<std::int64_t>{1});
}

TEST_CASE("Heisenberg(5): degrees {1 x 25, 5 x 4}") {
    PcPresentation h = build(GroupId::parse("heisenberg", 5));
    CharacterTable t = character_table(h);
    std::multiset<std::int64_t> want;
    for (int i = 0; i < 25; ++i) want.insert(1);
    for (int i = 0; i < 4; ++i) want.insert(5);
    CHECK(degree_multiset(t) == want);
}

TEST_CASE("Heisenberg(3): codegree set {1, 3, 9}") {
    PcPresentation h = build(GroupId::parse("heisenberg", 3));
    CHECK(codegrees_bruteforce(h).cod == std::vector<std::int64_t>{1, 3, 9});
}

TEST_CASE("phi2_31 at p=5: codegree set {1, 5, 25, 125}") {
    PcPresentation pres = build(GroupId::parse("phi2_31", 5));
    CHECK(codegrees_bruteforce(pres).cod == std::vector<std::int64_t>{1, 5, 25, 125});
}

TEST_CASE("table invariants on small catalog groups") {
    const std::vector<std::pair<const char*, int>> cases{
        {"heisenberg", 3},          {"heisenberg", 5},     {"extraspecial_exp_p2:1", 3},
        {"extraspecial_exp_p2:1", 5}, {"abelian:2,1", 3},  {"abelian:2,1", 5},
        {"phi2_211b", 5}};
    for (auto [spec, p] : cases) {
        {
            PcPresentation pres = build(GroupId::parse(spec, p));
            CharacterTable t = character_table(pres);
            CAPTURE(spec);
            CAPTURE(p);

            // #rows = #classes; sum of squared degrees = |G|
            CHECK(t.rows.size() == static_cast<std::size_t>(t.classes.count()));
            std::int64_t sum = 0;
            for (const auto& row : t.rows) sum += row.degree * row.degree;
            CHECK(sum == pres.order());

            // first row is trivial
            CHECK(t.rows[0].degree == 1);
            CHECK(t.rows[0].kernel.order() == pres.order());

            // #linear rows = |G : G'|
            Subgroup der = derived_subgroup(pres);
            std::int64_t linear = 0;
            for (const auto& row : t.rows)
                if (row.degree == 1) ++linear;
            CHECK(linear == pres.order() / der.order());

            // intersection of kernels is trivial
            std::vector<std::uint64_t> common = t.rows[0].kernel.elems;
            for (const auto& row : t.rows) {
                std::vector<std::uint64_t> next;
                std::set_intersection(common.begin(), common.end(), row.kernel.elems.begin(),
                                      row.kernel.elems.end(), std::back_inserter(next));
                common = std::move(next);
            }
            CHECK(common.size() == 1);

            // exact row orthogonality
            for (std::size_t a = 0; a < t.rows.size(); ++a)
                for (std::size_t b = a; b < t.rows.size(); ++b)
                    REQUIRE(rows_orthogonal(t, static_cast<int>(a), static_cast<int>(b),
                                            pres.order()));

            // codegrees are p-powers
            for (const auto& row : t.rows) CHECK(plog(pres.prime(), row.codegree) >= 0);
        }
    }
}

TEST_CASE("same seed gives identical tables; export is stable") {
    PcPresentation pres = build(GroupId::parse("phi2_211b", 5));
    CharacterTable t1 = character_table(pres, 7);
    CharacterTable t2 = character_table(pres, 7);
    REQUIRE(t1.rows.size() == t2.rows.size());
    for (std::size_t r = 0; r < t1.rows.size(); ++r) {
        CHECK(t1.rows[r].degree == t2.rows[r].degree);
        for (std::size_t c = 0; c < t1.rows[r].values.size(); ++c)
            CHECK(t1.rows[r].values[c].terms == t2.rows[r].values[c].terms);
    }
    CHECK(table_to_json(pres, t1).dump() == table_to_json(pres, t2).dump());
}

TEST_CASE("guard blocks oversized brute force") {
    PcPresentation pres = build(GroupId::parse("phi2_31", 5));
    CHECK_THROWS_AS(character_table(pres, 0, 100), guard_error);
}

TEST_CASE("GF helpers: primitive roots, charpoly, kernel, ntt") {
    GF f(13);
    CHECK(smallest_primitive_root(13) == 2);
    CHECK(f.pow(2, 12) == 1);
    CHECK(f.mul(f.inv(5), 5) == 1);

    // char poly of [[2,1],[0,3]] = (x-2)(x-3) = x^2 - 5x + 6
    GFMatrix m{{2, 1}, {0, 3}};
    auto poly = char_poly(f, m);
    CHECK(poly == std::vector<std::uint64_t>{6, 8, 1});
    auto roots = poly_roots(f, poly);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<std::uint64_t, int>{2, 1});
    CHECK(roots[1] == std::pair<std::uint64_t, int>{3, 1});

    // kernel of [[1,1,0],[0,0,1]] is spanned by (12,1,0)
    GFMatrix k{{1, 1, 0}, {0, 0, 1}};
    auto basis = kernel_basis(f, k);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<std::uint64_t>{12, 1, 0});

    // NTT of length 3 mod 13 with root 3 (3^3 = 27 = 1): round trip
    std::vector<std::uint64_t> data{5, 7, 11};
    auto fwd = ntt(f, data, 3, 3);
    auto back = ntt(f, fwd, f.inv(3), 3);
    for (int i = 0; i < 3; ++i) CHECK(f.mul(back[i], f.inv(3)) == data[i]);
}
