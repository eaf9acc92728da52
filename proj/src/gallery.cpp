#include "sphmap/gallery.hpp"

#include "sphmap/parser.hpp"

namespace sphmap {

namespace {

RadicalScalar rad(long num, long den, std::uint64_t n) {
    return RadicalScalar::term(Rational(num, den), n);
}

PolyMap from_exprs(int nvars, const std::vector<std::string>& exprs) {
    std::vector<Polynomial> comps;
    comps.reserve(exprs.size());
    for (const auto& e : exprs) comps.push_back(parse_polynomial(e, nvars));
    return PolyMap(std::move(comps));
}

}  // namespace

PolyMap circle_harmonics(int k) {
    if (k < 1) throw Error("circle harmonics need k >= 1");
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial y = Polynomial::variable(2, 1);
    Polynomial p = x, q = y;  // Re z, Im z
    for (int i = 1; i < k; ++i) {
        Polynomial pn = x * p - y * q;
        Polynomial qn = x * q + y * p;
        p = std::move(pn);
        q = std::move(qn);
    }
    return PolyMap({p, q});
}

PolyMap x_times_g(const PolyMap& G) {
    try {
        sphere_restriction_check(G);
    } catch (const NotASphereMap& e) {
        throw NotAForm(std::string("x_times_g needs a form: ") + e.what());
    }
    std::vector<Polynomial> comps;
    comps.reserve(static_cast<std::size_t>(G.nvars()) * G.size());
    for (int i = 0; i < G.nvars(); ++i) {
        Polynomial xi = Polynomial::variable(G.nvars(), i);
        for (const auto& g : G.components()) comps.push_back(xi * g);
    }
    return PolyMap(std::move(comps));
}

std::pair<PolyMap, SphereMapMeta> diagonal_sum(const PolyMap& F1, const PolyMap& F2,
                                               const RadicalScalar& r1_sq) {
    if (F1.nvars() != F2.nvars())
        throw DimensionMismatch("diagonal factors need the same domain");
    if (!r1_sq.is_rational() || r1_sq.as_rational() <= 0 || r1_sq.as_rational() >= 1)
        throw RadiusNotRepresentable("r1^2 must be rational in (0,1), got " + r1_sq.str());
    auto m1 = sphere_restriction_check(F1);
    auto m2 = sphere_restriction_check(F2);
    if (m1.homogeneous().r_sq != RadicalScalar(1) || m2.homogeneous().r_sq != RadicalScalar(1))
        throw NotAForm("diagonal_sum scales unit forms; use diagonal_stack otherwise");
    RadicalScalar a = r1_sq.sqrt();
    RadicalScalar b = (RadicalScalar(1) - r1_sq).sqrt();
    std::vector<Polynomial> comps;
    comps.reserve(F1.size() + F2.size());
    for (const auto& p : F1.components()) comps.push_back(p.scaled(a));
    for (const auto& p : F2.components()) comps.push_back(p.scaled(b));
    PolyMap F(std::move(comps));
    RestrictionHint hint;
    hint.kind = RestrictionHint::Kind::Diagonal;
    hint.component_split = F1.size();
    return {F, sphere_restriction_check(F, hint)};
}

std::pair<PolyMap, SphereMapMeta> diagonal_stack(const PolyMap& F1, const PolyMap& F2) {
    if (F1.nvars() != F2.nvars())
        throw DimensionMismatch("diagonal factors need the same domain");
    std::vector<Polynomial> comps;
    comps.reserve(F1.size() + F2.size());
    for (const auto& p : F1.components()) comps.push_back(p);
    for (const auto& p : F2.components()) comps.push_back(p);
    PolyMap F(std::move(comps));
    RestrictionHint hint;
    hint.kind = RestrictionHint::Kind::Diagonal;
    hint.component_split = F1.size();
    return {F, sphere_restriction_check(F, hint)};
}

std::pair<PolyMap, SphereMapMeta> product_map(const PolyMap& F1, const PolyMap& F2,
                                              const RadicalScalar& r1_sq) {
    if (!r1_sq.is_rational() || r1_sq.as_rational() <= 0 || r1_sq.as_rational() >= 1)
        throw RadiusNotRepresentable("r1^2 must be rational in (0,1), got " + r1_sq.str());
    auto m1 = sphere_restriction_check(F1);
    auto m2 = sphere_restriction_check(F2);
    if (m1.homogeneous().r_sq != RadicalScalar(1) || m2.homogeneous().r_sq != RadicalScalar(1))
        throw NotAForm("product_map scales unit forms");
    RadicalScalar a = r1_sq.sqrt();
    RadicalScalar b = (RadicalScalar(1) - r1_sq).sqrt();

    int n1 = F1.nvars(), n2 = F2.nvars();
    int nvars = n1 + n2;
    std::vector<Polynomial> comps;
    comps.reserve(F1.size() + F2.size());
    auto embed = [&](const Polynomial& p, int shift) {
        Polynomial out(nvars);
        for (const auto& [m, c] : p.terms()) {
            Monomial wide(nvars, 0);
            for (std::size_t i = 0; i < m.size(); ++i) wide[i + shift] = m[i];
            out += Polynomial::monomial(nvars, wide, c);
        }
        return out;
    };
    for (const auto& p : F1.components()) comps.push_back(embed(p, 0).scaled(a));
    for (const auto& p : F2.components()) comps.push_back(embed(p, n1).scaled(b));
    PolyMap F(std::move(comps));
    RestrictionHint hint;
    hint.kind = RestrictionHint::Kind::Product;
    hint.component_split = F1.size();
    hint.variable_split = n1;
    return {F, sphere_restriction_check(F, hint)};
}

PolyMap radial_multiple(const PolyMap& F, int p) {
    if (p < 0) throw Error("radial_multiple needs p >= 0");
    if (p == 0) return F;
    Polynomial factor = Polynomial::radius_sq(F.nvars()).pow(static_cast<unsigned>(p));
    return F.scaled(factor);
}

std::vector<std::vector<RadicalScalar>> curve_isometry() {
    RadicalScalar h = rad(1, 2, 2);  // 1/sqrt(2)
    RadicalScalar z(0);
    return {
        {h, z, z, h},
        {z, h, h, z},
        {z, h, -h, z},
        {h, z, z, -h},
    };
}

PolyMap t_transform_curve(const PolyMap& F) {
    if (F.size() != 4) throw DimensionMismatch("the curve isometry acts on 4 components");
    PolyMap tf = apply_linear_map(F, curve_isometry());
    // (F1, F3, F4, F2): pairs (Re, Im) of (1/sqrt2)|z|^2 z^{k-1} and (1/sqrt2) z^{k+1}
    return PolyMap({tf[0], tf[2], tf[3], tf[1]});
}

GalleryEntry named_form(const std::string& name) {
    if (name.rfind("circle:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(name.substr(7));
        } catch (...) {
            throw UnknownName("bad circle harmonic degree in '" + name + "'");
        }
        PolyMap G = circle_harmonics(k);
        return {name, G, sphere_restriction_check(G),
                "harmonic basis pair of degree " + std::to_string(k) + " on the circle"};
    }
    if (name == "veronese") {
        PolyMap F = from_exprs(3, {
            "1/2*(x^2 + y^2 - 2*z^2)",
            "1/2*sqrt(3)*(x^2 - y^2)",
            "sqrt(3)*x*y",
            "sqrt(3)*x*z",
            "sqrt(3)*y*z",
        });
        return {name, F, sphere_restriction_check(F), "the classical quadratic eigenmap"};
    }
    if (name == "cck3") {
        PolyMap F = from_exprs(3, {
            "1/2*z*(-3*x^2 - 3*y^2 + 2*z^2)",
            "1/4*sqrt(6)*x*(-1*x^2 - y^2 + 4*z^2)",
            "1/2*sqrt(15)*z*(x^2 - y^2)",
            "1/4*sqrt(10)*x*(x^2 - 3*y^2)",
            "1/4*sqrt(6)*y*(-1*x^2 - y^2 + 4*z^2)",
            "sqrt(15)*x*y*z",
            "1/4*sqrt(10)*y*(3*x^2 - y^2)",
        });
        return {name, F, sphere_restriction_check(F), "cubic harmonic eigenmap"};
    }
    if (name == "quad-f1") {
        PolyMap F = from_exprs(4, {
            "1/2*sqrt(2)*(x^2 + y^2 - z^2 - w^2)",
            "sqrt(2)*(x*z - y*w)",
            "x*w + y*z - 1/4*sqrt(2)*(x^2 + y^2 + z^2 + w^2)",
            "x*w + y*z + 1/4*sqrt(2)*(x^2 + y^2 + z^2 + w^2)",
        });
        return {name, F, sphere_restriction_check(F),
                "quadratic factor of the quadratic/quartic diagonal example"};
    }
    if (name == "quart-f2") {
        PolyMap F = from_exprs(4, {"1/2*(x^2 + y^2 + z^2 + w^2)^2"});
        return {name, F, sphere_restriction_check(F),
                "quartic factor of the quadratic/quartic diagonal example"};
    }
    if (name == "final-map") {
        PolyMap F = from_exprs(4, {
            "1/2*sqrt(2)*(x^2 + y^2 - z^2 - w^2)",
            "sqrt(2)*(x*z - y*w)",
            "sqrt(2)*(x*w + y*z)",
            "1/2*sqrt(2)*(x^2 + y^2 + z^2 + w^2)",
            "0",
        });
        return {name, F, sphere_restriction_check(F),
                "quadratic map through the small hypersphere of radius 1/sqrt(2)"};
    }
    throw UnknownName("unknown gallery name '" + name + "'");
}

std::vector<std::string> gallery_names() {
    return {"veronese", "cck3", "quad-f1", "quart-f2", "final-map", "circle:<k>"};
}

}  // namespace sphmap
