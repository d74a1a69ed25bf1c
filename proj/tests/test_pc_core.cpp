#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "codeg/catalog.hpp"
#include "codeg/presentation.hpp"
#include "codeg/subgroup.hpp"

using namespace codeg;

namespace {

PcPresentation heisenberg(int p) { return build(GroupId::parse("heisenberg", p)); }

GroupElement nf(const PcPresentation& pres, std::initializer_list<int> exps) {
    GroupElement x = pres.identity();
    int i = 0;
    for (int e : exps) x.exps[i++] = static_cast<std::uint8_t>(e);
    return x;
}

}  // namespace

TEST_CASE("collection: Heisenberg b*a lands in normal form a b c") {
    PcPresentation h = heisenberg(3);
    std::vector<Letter> word{{1, 1}, {0, 1}};
    CHECK(h.collect(word) == nf(h, {1, 1, 1}));
}

TEST_CASE("collection: g * g^-1 is the identity") {
    for (const char* spec : {"heisenberg", "phi2_31", "phi4_221f0"}) {
        PcPresentation pres = build(GroupId::parse(spec, 5));
        for (int i = 0; i < pres.rank(); ++i) {
            std::vector<Letter> word{{i, 1}, {i, -1}};
            CHECK(pres.collect(word).is_identity());
        }
    }
}

TEST_CASE("collection: alpha^5 in phi2_31 at p=5 is the designated p-th power generator") {
    PcPresentation pres = build(GroupId::parse("phi2_31", 5));
    std::vector<Letter> word{{0, 5}};
    CHECK(pres.collect(word) == pres.generator(2));
}

TEST_CASE("collect rejects out-of-range generator indices") {
    PcPresentation h = heisenberg(3);
    std::vector<Letter> word{{7, 1}};
    CHECK_THROWS_AS(h.collect(word), input_error);
}

TEST_CASE("multiply by identity; commutator conventions") {
    PcPresentation h = heisenberg(3);
    GroupElement x = nf(h, {1, 2, 0});
    CHECK(h.multiply(x, h.identity()) == x);
    CHECK(h.multiply(h.identity(), x) == x);
    // [b, a] = b^-1 a^-1 b a = c
    CHECK(h.commutator(h.generator(1), h.generator(0)) == h.generator(2));
}

TEST_CASE("phi4_221c at p=5: [alpha1, alpha] equals alpha1^5") {
    PcPresentation pres = build(GroupId::parse("phi4_221c", 5));
    GroupElement c = pres.commutator(pres.generator(1), pres.generator(0));
    CHECK(c == pres.power(pres.generator(1), 5));
    CHECK(c == pres.generator(3));
}

TEST_CASE("order_of") {
    PcPresentation h5 = heisenberg(5);
    CHECK(h5.order_of(h5.identity()) == 1);
    CHECK(h5.order_of(h5.generator(0)) == 5);
    PcPresentation pres = build(GroupId::parse("phi2_31", 5));
    CHECK(pres.order_of(pres.generator(0)) == 125);
}

TEST_CASE("inverse and power agree with repeated multiplication") {
    PcPresentation pres = build(GroupId::parse("phi4_221a", 5));
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        GroupElement x = pres.decode(rng() % pres.order());
        CHECK(pres.multiply(x, pres.inverse(x)).is_identity());
        GroupElement acc = pres.identity();
        for (int m = 0; m < 7; ++m) {
            CHECK(pres.power(x, m) == acc);
            acc = pres.multiply(acc, x);
        }
        CHECK(pres.power(x, -3) == pres.inverse(pres.power(x, 3)));
    }
}

TEST_CASE("associativity spot-check on random triples") {
    for (const char* spec : {"heisenberg", "phi2_211b", "phi3_2111c"}) {
        PcPresentation pres = build(GroupId::parse(spec, 5));
        std::mt19937_64 rng(7);
        for (int t = 0; t < 1000; ++t) {
            GroupElement x = pres.decode(rng() % pres.order());
            GroupElement y = pres.decode(rng() % pres.order());
            GroupElement z = pres.decode(rng() % pres.order());
            REQUIRE(pres.multiply(pres.multiply(x, y), z) == pres.multiply(x, pres.multiply(y, z)));
        }
    }
}

TEST_CASE("enumeration yields exactly p^n elements; closures satisfy Lagrange") {
    PcPresentation pres = build(GroupId::parse("phi2_211b", 5));
    CHECK(static_cast<std::int64_t>(enumerate_elements(pres).size()) == 625);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        Subgroup s = closure(pres, {pres.decode(rng() % 625), pres.decode(rng() % 625)});
        CHECK(625 % s.order() == 0);
    }
}

TEST_CASE("center and derived subgroup of Heisenberg(3)") {
    PcPresentation h = heisenberg(3);
    Subgroup z = center(h);
    CHECK(z.order() == 3);
    CHECK(z.contains(h, h.generator(2)));
    Subgroup der = derived_subgroup(h);
    CHECK(der.same_elements(z));
    CHECK(is_normal(h, z));
    CHECK(nilpotency_class(h) == 2);
}

TEST_CASE("phi3_2111c at p=5 has class 3 and center <gamma> of order 25") {
    PcPresentation pres = build(GroupId::parse("phi3_2111c", 5));
    CHECK(nilpotency_class(pres) == 3);
    Subgroup z = center(pres);
    CHECK(z.order() == 25);
    CHECK(z.contains(pres, pres.generator(3)));  // gamma
    CHECK(abelian_type(pres, z) == std::vector<int>{2});
    auto series = lower_central_series(pres);
    CHECK(series.size() == 4);
    CHECK(series[1].order() == 25);  // G' = <alpha2, gamma^p>
    CHECK(series[2].order() == 5);
    CHECK(series[3].order() == 1);
}

TEST_CASE("phi2_211b at p=5: center is cyclic of order 25 generated by gamma") {
    PcPresentation pres = build(GroupId::parse("phi2_211b", 5));
    Subgroup z = center(pres);
    CHECK(z.order() == 25);
    CHECK(z.contains(pres, pres.generator(2)));  // gamma
    CHECK(z.same_elements(closure(pres, {pres.generator(2)})));
    // Independent census: a cyclic group of order 25 has exactly 20 elements
    // of order 25.
    int order25 = 0;
    for (auto id : z.elems)
        if (pres.order_of(pres.decode(id)) == 25) ++order25;
    CHECK(order25 == 20);
    CHECK(abelian_type(pres, z) == std::vector<int>{2});
}

TEST_CASE("abelian_type of the full group and of quotients") {
    PcPresentation a = build(GroupId::parse("abelian:2,1", 3));
    CHECK(abelian_type(a, whole_group(a)) == std::vector<int>{2, 1});

    PcPresentation h = heisenberg(5);
    CHECK(abelian_type(h, center(h)) == std::vector<int>{1});
    CHECK_THROWS_AS(abelian_type(h, whole_group(h)), input_error);

    PcPresentation pres = build(GroupId::parse("phi2_31", 5));
    Subgroup der = derived_subgroup(pres);
    CHECK(abelian_quotient_type(pres, der) == std::vector<int>{2, 1});
}

TEST_CASE("quotient_exponent") {
    PcPresentation pres31 = build(GroupId::parse("phi2_31", 5));
    PcPresentation pres211b = build(GroupId::parse("phi2_211b", 5));
    CHECK(quotient_exponent(pres31, whole_group(pres31)) == 1);
    CHECK(quotient_exponent(pres31, derived_subgroup(pres31)) == 25);
    CHECK(quotient_exponent(pres211b, derived_subgroup(pres211b)) == 5);
    Subgroup non_normal = closure(pres211b, {pres211b.generator(0)});
    CHECK_THROWS_AS(quotient_exponent(pres211b, non_normal), input_error);
}

TEST_CASE("nilpotency class 1 iff abelian iff center is everything") {
    PcPresentation a = build(GroupId::parse("abelian:1,1", 3));
    CHECK(nilpotency_class(a) == 1);
    CHECK(center(a).order() == a.order());
    StructuralProfile prof = structural_profile(a);
    CHECK(prof.is_abelian);
    CHECK_FALSE(prof.is_extraspecial);
}

TEST_CASE("structural profile of extraspecial groups") {
    for (int p : {3, 5}) {
        PcPresentation e = build(GroupId::parse("extraspecial_exp_p2:1", p));
        StructuralProfile prof = structural_profile(e);
        CHECK(prof.nilpotency_class == 2);
        CHECK(prof.center_type == std::vector<int>{1});
        CHECK(prof.derived_type == std::vector<int>{1});
        CHECK(prof.is_extraspecial);
        CHECK(prof.exp_g == p * p);
        CHECK(prof.exp_g_over_derived == p);
        CHECK(prof.d_center == 1);
    }
}

TEST_CASE("presentation JSON round trip and the documented wire format") {
    nlohmann::json j = {{"p", 5},
                        {"n", 4},
                        {"powers", {{"2", {0, 0, 0, 1}}}},
                        {"commutators", {{"1,0", {0, 0, 0, 1}}}}};
    PcPresentation pres = PcPresentation::from_json(j);
    CHECK(pres.order() == 625);
    PcPresentation round = PcPresentation::from_json(pres.to_json());
    CHECK(round.order() == 625);
    CHECK(round.comm_rhs(1, 0) == pres.comm_rhs(1, 0));
}

TEST_CASE("malformed presentations are rejected") {
    // exponent out of range
    CHECK_THROWS_AS(PcPresentation(3, 2, {{0, {0, 3}}}, {}), presentation_error);
    // weight violation: [g1, g0] names g1
    CHECK_THROWS_AS(PcPresentation(3, 2, {}, {{{1, 0}, {0, 1}}}), presentation_error);
    // p must be an odd prime
    CHECK_THROWS_AS(PcPresentation(4, 1, {}, {}), presentation_error);
    CHECK_THROWS_AS(PcPresentation(2, 1, {}, {}), presentation_error);
}

TEST_CASE("inconsistent relations fail fast") {
    // a^3 = b forces [b, a] = 1, contradicting [b, a] = c.
    CHECK_THROWS_AS(PcPresentation(3, 3, {{0, {0, 1, 0}}, {1, {0, 0, 1}}}, {{{1, 0}, {0, 0, 1}}}),
                    presentation_error);
}

TEST_CASE("order guard blocks enumeration-scale work") {
    PcPresentation pres = build(GroupId::parse("phi2_31", 5));
    CHECK_THROWS_AS(center(pres, 100), guard_error);
    CHECK_THROWS_AS(enumerate_elements(pres, 100), guard_error);
}

TEST_CASE("trivial group edge case") {
    PcPresentation triv(3, 0, {}, {});
    CHECK(triv.order() == 1);
    CHECK(triv.identity().is_identity());
    CHECK(center(triv).order() == 1);
    CHECK(nilpotency_class(triv) == 0);
    CHECK(abelian_type(triv, whole_group(triv)).empty());
}
