#include <doctest.h>

#include "sphmap/gallery.hpp"
#include "sphmap/parser.hpp"

using namespace sphmap;

namespace {
Polynomial pp(const std::string& text, int nvars) { return parse_polynomial(text, nvars); }
}  // namespace

TEST_CASE("circle harmonics recurrence") {
    CHECK(circle_harmonics(1) == PolyMap({pp("x", 2), pp("y", 2)}));
    CHECK(circle_harmonics(3) == PolyMap({pp("x^3 - 3*x*y^2", 2), pp("3*x^2*y - y^3", 2)}));
    for (int k = 1; k <= 8; ++k) {
        PolyMap G = circle_harmonics(k);
        CHECK(euclidean_laplacian(G).is_zero_map());
        CHECK(norm_squared(G) == Polynomial::radius_sq(2).pow(k));
    }
    CHECK_THROWS_AS(circle_harmonics(0), Error);
}

TEST_CASE("named forms verify at construction") {
    CHECK(norm_squared(named_form("veronese").map) == pp("(x^2+y^2+z^2)^2", 3));
    CHECK(norm_squared(named_form("cck3").map) == pp("(x^2+y^2+z^2)^3", 3));
    CHECK(euclidean_laplacian(named_form("cck3").map).is_zero_map());
    CHECK(norm_squared(named_form("quad-f1").map) == pp("3/4*(x^2+y^2+z^2+w^2)^2", 4));
    CHECK(norm_squared(named_form("final-map").map) == pp("(x^2+y^2+z^2+w^2)^2", 4));
    CHECK(named_form("circle:5").meta.homogeneous().k == 5);
    CHECK_THROWS_AS(named_form("bogus"), UnknownName);
    CHECK_THROWS_AS(named_form("circle:x"), UnknownName);
}

TEST_CASE("x_times_g") {
    CHECK(x_times_g(circle_harmonics(1)) ==
          PolyMap({pp("x^2", 2), pp("x*y", 2), pp("x*y", 2), pp("y^2", 2)}));
    PolyMap F = x_times_g(named_form("veronese").map);
    CHECK(F.size() == 15);
    SphereMapMeta meta = sphere_restriction_check(F);
    CHECK(meta.homogeneous().k == 3);
    CHECK(meta.homogeneous().r_sq == RadicalScalar(1));
    CHECK_THROWS_AS(x_times_g(PolyMap({pp("x", 2), pp("y^2", 2)})), NotAForm);
}

TEST_CASE("diagonal and product constructors") {
    auto [F, meta] = diagonal_sum(circle_harmonics(1), circle_harmonics(2),
                                  RadicalScalar(Rational(1, 2)));
    CHECK(meta.diagonal().k1 == 1);
    CHECK(meta.diagonal().k2 == 2);
    CHECK((norm_squared(F) - pp("1", 2)).normal_form().is_zero());
    CHECK(F[0] == pp("1/2*sqrt(2)*x", 2));

    CHECK_THROWS_AS(diagonal_sum(circle_harmonics(1), circle_harmonics(2),
                                 RadicalScalar::sqrt_of(2)),
                    RadiusNotRepresentable);
    CHECK_THROWS_AS(diagonal_sum(circle_harmonics(1), circle_harmonics(2),
                                 RadicalScalar(Rational(3, 2))),
                    RadiusNotRepresentable);
    CHECK_THROWS_AS(diagonal_sum(circle_harmonics(1), PolyMap::identity(3),
                                 RadicalScalar(Rational(1, 2))),
                    DimensionMismatch);
    // scaled inputs are rejected, the stack entry point takes those
    CHECK_THROWS_AS(diagonal_sum(named_form("quad-f1").map, named_form("quart-f2").map,
                                 RadicalScalar(Rational(3, 4))),
                    NotAForm);

    auto [P, pmeta] = product_map(named_form("veronese").map, PolyMap::identity(7),
                                  RadicalScalar(Rational(1, 4)));
    CHECK(pmeta.product().m1 == 2);
    CHECK(pmeta.product().m2 == 6);
    CHECK(pmeta.product().k1 == 2);
    CHECK(pmeta.product().k2 == 1);
    CHECK(P.nvars() == 10);
    // second block really lives on its own variables
    for (int a = pmeta.product().split; a < P.size(); ++a)
        for (const auto& [m, c] : P[a].terms())
            for (int i = 0; i < 3; ++i) CHECK(m[i] == 0);
}

TEST_CASE("radial multiples") {
    PolyMap id3 = PolyMap::identity(3);
    CHECK(radial_multiple(id3, 0) == id3);
    PolyMap F = radial_multiple(id3, 2);
    CHECK(F[0] == pp("(x^2+y^2+z^2)^2*x", 3));
    SphereMapMeta meta = sphere_restriction_check(F);
    CHECK(meta.homogeneous().k == 5);
}

TEST_CASE("curve isometry reproduces the closed form") {
    for (int k = 1; k <= 4; ++k) {
        PolyMap F = t_transform_curve(x_times_g(circle_harmonics(k)));
        RadicalScalar half_sqrt2 = RadicalScalar::term(Rational(1, 2), 2);
        Polynomial rsq = Polynomial::radius_sq(2);
        PolyMap low = k >= 2 ? circle_harmonics(k - 1) : PolyMap({pp("1", 2), pp("0", 2)});
        PolyMap high = circle_harmonics(k + 1);
        CHECK(F == PolyMap({(low[0] * rsq).scaled(half_sqrt2),
                            (low[1] * rsq).scaled(half_sqrt2),
                            high[0].scaled(half_sqrt2), high[1].scaled(half_sqrt2)}));
    }
    // the isometry is orthogonal: norms survive
    PolyMap F = x_times_g(circle_harmonics(2));
    CHECK(norm_squared(t_transform_curve(F)) == norm_squared(F));
    CHECK_THROWS_AS(t_transform_curve(circle_harmonics(2)), DimensionMismatch);
}
