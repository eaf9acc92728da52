#include <doctest.h>

#include "sphmap/fields.hpp"
#include "sphmap/gallery.hpp"
#include "sphmap/parser.hpp"

using namespace sphmap;

namespace {
Polynomial pp(const std::string& text, int nvars) { return parse_polynomial(text, nvars); }
RadicalScalar rat(long num, long den = 1) { return RadicalScalar(Rational(num, den)); }
}  // namespace

TEST_CASE("tension of homogeneous forms") {
    GalleryEntry veronese = named_form("veronese");
    CHECK(tension_homogeneous(veronese.map, veronese.meta).is_zero_map());
    CHECK(tension_general(veronese.map, veronese.meta).is_zero_map());

    // radial multiples restrict to harmonic maps without being harmonic forms
    for (int p : {1, 2}) {
        PolyMap F = radial_multiple(PolyMap::identity(3), p);
        SphereMapMeta meta = sphere_restriction_check(F);
        CHECK(tension_homogeneous(F, meta).is_zero_map());
        CHECK(!euclidean_laplacian(F).is_zero_map());
    }

    // the degree-(k+1) curve family: tension is -Delta0 F - 2k Phi, nonzero
    for (int k : {1, 2, 3}) {
        PolyMap F = x_times_g(circle_harmonics(k));
        SphereMapMeta meta = sphere_restriction_check(F);
        PolyMap t = tension_homogeneous(F, meta);
        CHECK(t == (-euclidean_laplacian(F) - F.scaled(rat(2 * k))).normal_form());
        CHECK(!t.is_zero_map());
        CHECK(t == tension_general(F, meta));
    }

    CHECK_THROWS_AS(
        tension_homogeneous(veronese.map,
                            sphere_restriction_check(
                                diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(1, 2)).first,
                                [] {
                                    RestrictionHint h;
                                    h.kind = RestrictionHint::Kind::Diagonal;
                                    h.component_split = 2;
                                    return h;
                                }())),
        WrongKind);
}

TEST_CASE("bitension of the curve family vanishes exactly for circles") {
    for (int k = 1; k <= 4; ++k) {
        PolyMap F = x_times_g(circle_harmonics(k));
        SphereMapMeta meta = sphere_restriction_check(F);
        CHECK(bitension_homogeneous(F, meta).is_zero_map());
        auto [general, ws] = bitension_general(F, meta);
        CHECK(general.is_zero_map());
        CHECK(!tension_homogeneous(F, meta).is_zero_map());
    }
    PolyMap F = x_times_g(named_form("veronese").map);
    SphereMapMeta meta = sphere_restriction_check(F);
    CHECK(!bitension_homogeneous(F, meta).is_zero_map());
}

TEST_CASE("diagonal tension matches the mixed example") {
    auto [F, meta] = diagonal_stack(named_form("quad-f1").map, named_form("quart-f2").map);
    PolyMap t = tension_diagonal(F, meta);
    std::vector<Polynomial> expected;
    for (int a = 0; a < 4; ++a) {
        Polynomial c = named_form("quad-f1").map[a].scaled(rat(-4));
        if (a == 2) c -= pp("2*sqrt(2)", 4);
        if (a == 3) c += pp("2*sqrt(2)", 4);
        expected.push_back(c);
    }
    expected.push_back(pp("2", 4));
    CHECK(t == PolyMap(expected).normal_form());
    CHECK(bitension_diagonal(F, meta).is_zero_map());
    CHECK(bitension_general(F, meta).first.is_zero_map());
}

TEST_CASE("diagonal closed forms for harmonic factors") {
    // tension: (k2-k1)(m+k1+k2-1)(r2^2 F1, -r1^2 F2)
    auto [F, meta] = diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
    PolyMap t = tension_diagonal(F, meta);
    PolyMap expected =
        PolyMap({F[0].scaled(rat(3, 2)), F[1].scaled(rat(3, 2)), F[2].scaled(rat(-3, 2)),
                 F[3].scaled(rat(-3, 2))})
            .normal_form();
    CHECK(t == expected);
    CHECK(bitension_diagonal(F, meta).is_zero_map());

    // the spec's independently derived instance at r1^2 = 3/4
    auto [G, gmeta] = diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(3, 4));
    PolyMap b = bitension_diagonal(G, gmeta);
    PolyMap expected_b = PolyMap({G[0].scaled(rat(-9, 8)), G[1].scaled(rat(-9, 8)),
                                  G[2].scaled(rat(27, 8)), G[3].scaled(rat(27, 8))})
                             .normal_form();
    CHECK(b == expected_b);
    CHECK(b == bitension_general(G, gmeta).first);
}

TEST_CASE("veronese-cck diagonal bitension closed form") {
    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}}) {
        auto [F, meta] =
            diagonal_sum(named_form("veronese").map, named_form("cck3").map, rat(num, den));
        const auto& d = meta.diagonal();
        RadicalScalar lead = rat(36) * (rat(1) - rat(2 * num, den));
        std::vector<Polynomial> comps;
        for (int a = 0; a < F.size(); ++a)
            comps.push_back(F[a].scaled(a < d.split ? lead * d.r2_sq : -(lead * d.r1_sq)));
        PolyMap specialized = bitension_diagonal(F, meta);
        CHECK(specialized == PolyMap(comps).normal_form());
        CHECK(specialized == bitension_general(F, meta).first);
    }
}

TEST_CASE("degree-one harmonic identities are trivially zero") {
    PolyMap G1 = circle_harmonics(1);
    auto rep = harmonic_identities_check(G1, sphere_restriction_check(G1));
    CHECK(rep.laplacian_closed_form.is_zero());
    CHECK(rep.hessian_closed_form.is_zero());
    CHECK(rep.laplacian_matches);
    CHECK(rep.hessian_matches);
}

TEST_CASE("classification reports") {
    AnalysisReport harmonic = classify(named_form("veronese").map);
    CHECK(harmonic.is_harmonic);
    CHECK(harmonic.is_biharmonic);
    CHECK(!harmonic.is_proper_biharmonic);
    CHECK(harmonic.route_agreement);
    CHECK(harmonic.energy == pp("3", 3));

    auto [D, dmeta] = diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
    AnalysisReport proper = classify(D, dmeta);
    CHECK(proper.is_proper_biharmonic);
    CHECK(proper.route_agreement);

    auto [N, nmeta] = diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(1, 4));
    AnalysisReport neither = classify(N, nmeta);
    CHECK(!neither.is_harmonic);
    CHECK(!neither.is_biharmonic);

    CHECK_THROWS_AS(classify(PolyMap({pp("x", 3), pp("y", 3), pp("z^2", 3)})), NotASphereMap);
}

TEST_CASE("products need harmonic factors") {
    auto [F, meta] = product_map(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
    AnalysisReport rep = classify(F, meta);
    CHECK(rep.is_proper_biharmonic);

    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}}) {
        auto [V, vmeta] =
            product_map(named_form("veronese").map, PolyMap::identity(7), rat(num, den));
        AnalysisReport vrep = classify(V, vmeta);
        CHECK(vrep.is_harmonic);
        CHECK(vrep.is_biharmonic);
    }

    // a radial multiple is a unit form but not harmonic: the closed forms refuse
    auto [bad, bad_meta] =
        product_map(radial_multiple(PolyMap::identity(2), 1), circle_harmonics(1), rat(1, 2));
    CHECK_THROWS_AS(tension_product(bad, bad_meta), FactorsNotHarmonic);
    auto [Q, qmeta] = product_map(circle_harmonics(2), PolyMap::identity(3), rat(1, 2));
    CHECK_THROWS_AS(tension_general(Q, qmeta), WrongKind);
    CHECK_THROWS_AS(bitension_general(Q, qmeta), WrongKind);
}

TEST_CASE("quadratic identity check") {
    GalleryEntry quad = named_form("quad-f1");
    auto [lhs, rhs] = quadratic_identity_check(quad.map, quad.meta);
    CHECK(rhs == rat(72));
    CHECK(lhs == Polynomial::constant(4, rhs));
    GalleryEntry cck = named_form("cck3");
    CHECK_THROWS_AS(quadratic_identity_check(cck.map, cck.meta), WrongKind);
}

TEST_CASE("harmonic identities check") {
    GalleryEntry cck = named_form("cck3");
    auto rep = harmonic_identities_check(cck.map, cck.meta);
    CHECK(rep.laplacian_matches);
    CHECK(rep.hessian_matches);
    CHECK(rep.laplacian_closed_form == rat(-420));
    CHECK(rep.hessian_closed_form == rat(210));
    GalleryEntry quad = named_form("quad-f1");
    CHECK_THROWS_AS(harmonic_identities_check(quad.map, quad.meta), NotHarmonicForm);
}

TEST_CASE("minimality stripping") {
    auto [minimal, strips] = minimality_check(radial_multiple(PolyMap::identity(3), 3));
    CHECK(strips == 3);
    CHECK(minimal == PolyMap::identity(3));
    auto [m2, s2] = minimality_check(PolyMap({pp("x*(x^2+y^2)", 2), pp("y*(x^2+y^2)", 2)}));
    CHECK(s2 == 1);
    CHECK(m2 == PolyMap::identity(2));
    CHECK_THROWS_AS(minimality_check(PolyMap::zero(2, 2)), ZeroMap);
}

TEST_CASE("small hypersphere slices") {
    GalleryEntry fin = named_form("final-map");
    std::vector<RadicalScalar> axis(5, RadicalScalar(0));
    axis[3] = RadicalScalar(1);
    auto rep = small_hypersphere_check(fin.map, axis);
    CHECK(rep.in_slice);
    CHECK(rep.constant == RadicalScalar::term(Rational(1, 2), 2));

    axis[3] = RadicalScalar(0);
    axis[4] = RadicalScalar(1);
    auto rep2 = small_hypersphere_check(fin.map, axis);
    CHECK(rep2.in_slice);
    CHECK(rep2.constant.is_zero());

    axis[4] = RadicalScalar(0);
    axis[0] = RadicalScalar(1);
    CHECK(!small_hypersphere_check(fin.map, axis).in_slice);

    axis[0] = RadicalScalar(2);
    CHECK_THROWS_AS(small_hypersphere_check(fin.map, axis), Error);
}

TEST_CASE("worksheet fields are the named quantities") {
    GalleryEntry veronese = named_form("veronese");
    auto [tau2, ws] = bitension_general(veronese.map, veronese.meta);
    CHECK(tau2.is_zero_map());
    CHECK(ws.tau == veronese.map.scaled(rat(-6)).normal_form());
    CHECK(ws.tau_norm_sq == pp("36", 3));
    CHECK(ws.dphi_norm_sq == pp("6", 3));
    CHECK(ws.laplacian_energy.is_zero());
    CHECK(ws.div_theta.is_zero());
    CHECK(ws.push_grad.is_zero_map());
}
