#include "sullivan/gottlieb.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sullivan/render.hpp"

#include <doctest.h>

using namespace sullivan;
using namespace sullivan::testing;

namespace {
RationalVector unit_dual(const GenSet& gens, int degree, const std::string& name) {
    auto ambient = gens.indices_of_degree(degree);
    RationalVector v(ambient.size(), Rational(0));
    int idx = gens.index_of(name);
    for (std::size_t k = 0; k < ambient.size(); ++k)
        if (ambient[k] == static_cast<std::size_t>(idx)) v[k] = 1;
    return v;
}
}  // namespace

TEST_CASE("two-cell base: Gottlieb group of the base") {
    auto doc = load_fixture("ex2_2");
    const auto& B = alg(doc);
    auto g3 = gottlieb_group(B, 3);
    CHECK(g3.dim() == 0);
    auto g5 = gottlieb_group(B, 5);
    CHECK(g5.dim() == 1);
    CHECK(g5.space.contains(unit_dual(B.gens(), 5, "u")));
}

TEST_CASE("free algebra on one odd generator is a rational H-space") {
    SullivanAlgebra s3 = SullivanAlgebra::free(GenSet({{"x", 3}}));
    auto g = gottlieb_group(s3, 3);
    CHECK(g.dim() == 1);
    CHECK(g.space.contains(unit_dual(s3.gens(), 3, "x")));
}

TEST_CASE("two-cell base: surviving generators and obstruction") {
    auto doc = load_fixture("ex2_2");
    const auto& E = ext(doc);

    auto q = linear_part(E);
    CHECK(q.value_on(3).to_string() == "w2");   // v1 -> w2
    CHECK(q.value_on(4).to_string() == "u");    // v2 -> u
    auto surv = surviving_base_indices(E);
    REQUIRE(surv.size() == 1);
    CHECK(E.total().gens().name(surv[0]) == "w1");

    auto rep = obstruction_group(E);
    CHECK(rep.o == 1);
    REQUIRE(rep.per_degree.count(3) == 1);
    CHECK(rep.per_degree.at(3).dim() == 1);
    CHECK(rep.per_degree.at(3).space.contains(unit_dual(E.base().gens(), 3, "w1")));
    CHECK(rep.cross_check_ran);
    CHECK_FALSE(rep.cross_check_mismatch);
    CHECK_FALSE(is_rg_map(E));

    auto oracle = oracle_obstruction(E);
    CHECK(oracle.o == 1);
    CHECK(oracle.qualifying.count("w1") == 1);
}

TEST_CASE("two-cell base: evaluation subgroup along the extension") {
    auto doc = load_fixture("ex2_2");
    const auto& E = ext(doc);
    auto e3 = evaluation_subgroup(E, 3);
    CHECK(e3.dim() == 1);
    CHECK(e3.space.contains(unit_dual(E.base().gens(), 3, "w1")));
    auto e5 = evaluation_subgroup(E, 5);
    CHECK(e5.dim() == 1);
    CHECK(e5.space.contains(unit_dual(E.base().gens(), 5, "u")));

    // G(B) is contained in G(B, E; f).
    auto g5 = gottlieb_group(E.base(), 5);
    CHECK(e5.space.contains(g5.space));
}

TEST_CASE("degree-1 requests are refused in the presence of degree-1 generators") {
    auto doc = load_fixture("ex3_6_2");
    const auto& S1 = ext(doc, "S1");
    CHECK_THROWS_AS((void)gottlieb_group(S1.total(), 1), RefusalError);
    CHECK(gottlieb_group(alg(doc), 1).dim() == 0);  // no degree-1 generators here
    // The extension's linear part reads v -> w even in the circle bundle.
    auto q = linear_part(S1);
    auto vi = S1.total().gens().index_of("v");
    CHECK(q.value_on(static_cast<std::size_t>(vi)).to_string() == "w");
}

TEST_CASE("homotopy centers from the quadratic part") {
    auto doc = load_fixture("ex3_7");
    const auto& B = alg(doc);
    auto p5 = homotopy_center(B, 5);
    CHECK(p5.dim() == 1);
    CHECK(p5.contains(unit_dual(B.gens(), 5, "u")));
    CHECK(homotopy_center(B, 3).dim() == 0);

    // Free algebra on one generator: abelian homotopy Lie algebra.
    SullivanAlgebra s3 = SullivanAlgebra::free(GenSet({{"x", 3}}));
    CHECK(homotopy_center(s3, 3).dim() == 1);

    // Whitehead square of an even sphere is nonzero: x* is not central.
    GenSet s4_gens({{"x", 4}, {"y", 7}});
    SullivanAlgebra s4(s4_gens,
                       {Polynomial(s4_gens), Polynomial::gen(s4_gens, 0).pow(2)});
    CHECK(homotopy_center(s4, 4).dim() == 0);
    CHECK(homotopy_center(s4, 7).dim() == 1);

    // Non-minimal algebras are refused.
    auto e22 = load_fixture("ex2_2");
    CHECK_THROWS_AS((void)homotopy_center(ext(e22).total(), 3), RefusalError);
}

TEST_CASE("the center of the minimalized total detects the W-map failure") {
    auto doc = load_fixture("ex3_7");
    const auto& E = ext(doc);
    CHECK(is_rg_map(E));
    auto rep = is_w_map(E);
    CHECK_FALSE(rep.verdict);
    CHECK_FALSE(rep.total_was_minimal);

    // w2* stays central in the minimalized total space model.
    auto red = minimalize(E.total());
    CHECK(red.minimal.is_minimal());
    auto p3 = homotopy_center(red.minimal, 3);
    CHECK(p3.contains(unit_dual(red.minimal.gens(), 3, "w2")));

    // Identity extension: trivially a W-map.
    KsExtension identity_ext(E.base(), {}, E.base().differentials());
    CHECK(is_w_map(identity_ext).verdict);

    // Surjective dual maps are W-maps: minimal total, full restriction.
    auto a = load_fixture("ex3_9_a");
    CHECK(is_w_map(ext(a)).verdict);
}

TEST_CASE("direct morphism-level rational Gottlieb verdicts") {
    auto doc = load_fixture("ex3_6_2");
    CHECK(is_rg_map(doc.morphisms.at("f000")));
    CHECK(is_rg_map(doc.morphisms.at("f001")));
    CHECK_FALSE(is_rg_map(doc.morphisms.at("f101")));
    CHECK_FALSE(is_rg_map(doc.morphisms.at("f011")));
    CHECK_FALSE(is_rg_map(doc.morphisms.at("f111")));
}

TEST_CASE("spherical generator classification") {
    auto n2 = load_fixture("ex3_2_1_n2");
    CHECK(classify_generator(ext(n2), "w3") == SphericalClass::K3);
    CHECK(classify_generator(ext(n2), "u") == SphericalClass::K4);
    CHECK_THROWS_AS((void)classify_generator(ext(n2), "missing"), Error);

    auto rem = load_fixture("rem2_6_1");
    CHECK(classify_generator(ext(rem), "v1") == SphericalClass::K4);
    CHECK(classify_generator(ext(rem), "v2") == SphericalClass::K4);
    // Even-degree duals are refused.
    CHECK_THROWS_AS((void)classify_generator(ext(rem), "x"), RefusalError);

    // Trivial product with an odd-sphere fiber: the fiber dual is K1.
    auto e22 = load_fixture("ex2_2");
    const auto& B = alg(e22);
    std::vector<Generator> fiber{{"s", 7}};
    GenSet tg = GenSet::concat(B.gens(), GenSet(fiber));
    std::vector<Polynomial> d;
    for (std::size_t i = 0; i < B.gen_count(); ++i) {
        Polynomial p(tg);
        for (const auto& [m, c] : B.d_of(i).terms()) p.add_term(m, c);
        d.push_back(std::move(p));
    }
    d.push_back(Polynomial(tg));
    KsExtension product(B, fiber, d);
    CHECK(classify_generator(product, "s") == SphericalClass::K1);
}

TEST_CASE("obstruction reports carry reproducibility data") {
    auto doc = load_fixture("ex3_2_2");
    ObstructionOptions opts;
    opts.check_order_permutations = true;
    auto rep = obstruction_group(ext(doc), opts);
    CHECK(rep.base_order ==
          std::vector<std::string>{"w1", "w3", "w2", "w4", "u"});
    CHECK(rep.permutation_check_ran);
    CHECK(rep.permutation_discrepancies.empty());
    // The report stores the witness: sigma with delta(w1* + sigma) = 0.
    bool found = false;
    for (const auto& d : rep.diagnostics)
        if (d.name == "w1") {
            REQUIRE(d.sigma.has_value());
            found = true;
            auto phi = std::make_shared<Morphism>(Morphism::identity(ext(doc).total()));
            auto theta =
                PhiDerivation::elementary(
                    phi, 3,
                    static_cast<std::size_t>(ext(doc).total().gens().index_of("w1")),
                    Polynomial::constant(ext(doc).total().gens(), 1)) +
                *d.sigma;
            CHECK(delta(theta).is_zero());
        }
    CHECK(found);

    // Unordered bases are refused.
    GenSet bad_gens({{"a", 5}, {"b", 3}});
    auto bad = SullivanAlgebra::free(bad_gens);
    KsExtension bad_ext(bad, {}, bad.differentials());
    CHECK_THROWS_AS((void)obstruction_group(bad_ext), RefusalError);
}

TEST_CASE("Gottlieb homology refuses non-minimal bases") {
    GenSet gens({{"x", 3}, {"z", 4}, {"y", 3}});
    std::vector<Polynomial> d(3, Polynomial(gens));
    d[2] = Polynomial::gen(gens, 1);  // dy = z, a linear term
    SullivanAlgebra base(gens, d);
    CHECK(validate(base, false).valid());
    KsExtension ks(base, {}, base.differentials());
    CHECK_THROWS_AS((void)gottlieb_homology(ks, 3), RefusalError);
    CHECK_THROWS_AS((void)is_w_map(ks), RefusalError);
}
