#include "sphmap/battery.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "sphmap/gallery.hpp"
#include "sphmap/numcheck.hpp"
#include "sphmap/parser.hpp"

namespace sphmap {

namespace {

constexpr std::uint64_t kSeed = 20240810;
constexpr int kPoints = 200;
constexpr double kZeroTol = 1e-9;
constexpr double kWitnessFloor = 1e-6;

RadicalScalar rat(long num, long den = 1) { return RadicalScalar(Rational(num, den)); }

}  // namespace

// --- independent product referee ----------------------------------------------

namespace {

PolyMap product_sphere_laplacian(const PolyMap& F, const ProductMeta& p, int nvars) {
    int v = p.m1 + 1;
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (const auto& q : F.components())
        comps.push_back(sphere_laplacian_block(q, 0, v) +
                        sphere_laplacian_block(q, v, nvars));
    return PolyMap(std::move(comps));
}

Polynomial product_sphere_laplacian(const Polynomial& q, const ProductMeta& p, int nvars) {
    int v = p.m1 + 1;
    return sphere_laplacian_block(q, 0, v) + sphere_laplacian_block(q, v, nvars);
}

PolyMap block_radial(const PolyMap& F, int lo, int hi) {
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (const auto& q : F.components()) comps.push_back(radial_derivative_block(q, lo, hi));
    return PolyMap(std::move(comps));
}

}  // namespace

PolyMap product_reference_tension(const PolyMap& F, const SphereMapMeta& meta) {
    const auto& p = meta.product();
    auto blocks = meta.variable_blocks();
    PolyMap tau_phi = -product_sphere_laplacian(F, p, meta.nvars);
    int v = p.m1 + 1;
    Polynomial dphi_sq = (grad_norm_squared(F) - norm_squared(block_radial(F, 0, v)) -
                          norm_squared(block_radial(F, v, meta.nvars)))
                             .normal_form(blocks);
    return (tau_phi + F.scaled(dphi_sq)).normal_form(blocks);
}

PolyMap product_reference_bitension(const PolyMap& F, const SphereMapMeta& meta) {
    const auto& p = meta.product();
    auto blocks = meta.variable_blocks();
    int nv = meta.nvars;
    int v = p.m1 + 1;

    PolyMap T = (-product_sphere_laplacian(F, p, nv)).normal_form(blocks);
    PolyMap r1F = block_radial(F, 0, v), r2F = block_radial(F, v, nv);
    Polynomial h = (grad_norm_squared(F) - norm_squared(r1F) - norm_squared(r2F))
                       .normal_form(blocks);

    Polynomial tau_norm = norm_squared(T).normal_form(blocks);
    Polynomial lap_h = product_sphere_laplacian(h, p, nv).normal_form(blocks);
    Polynomial div_theta = (tau_norm + grad_inner(F, T) -
                            pointwise_inner(r1F, block_radial(T, 0, v)) -
                            pointwise_inner(r2F, block_radial(T, v, nv)))
                               .normal_form(blocks);
    PolyMap push = (push_gradient(F, h) - r1F.scaled(radial_derivative_block(h, 0, v)) -
                    r2F.scaled(radial_derivative_block(h, v, nv)))
                       .normal_form(blocks);
    PolyMap tau2_phi = product_sphere_laplacian(product_sphere_laplacian(F, p, nv), p, nv);

    Polynomial phi_coeff = -lap_h + div_theta.scaled(rat(2)) - tau_norm + (h * h).scaled(rat(2));
    return (tau2_phi + F.scaled(phi_coeff) + T.scaled(h.scaled(rat(2))) + push.scaled(rat(2)))
        .normal_form(blocks);
}

// --- battery -------------------------------------------------------------------

std::string format_check(const CheckResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  expected " << r.expected
       << "  got " << r.got;
    if (!r.note.empty()) os << "  [" << r.note << "]";
    return os.str();
}

namespace {

class Battery {
public:
    Battery(std::vector<CheckResult>& out, const std::string& filter)
        : out_(out), filter_(filter) {}

    bool wanted(const std::string& id) const {
        return filter_.empty() || id.find(filter_) != std::string::npos;
    }

    void add(const std::string& id, const std::string& expected, const std::string& got,
             bool pass, const std::string& note = "") {
        if (!wanted(id)) return;
        out_.push_back({id, expected, got, pass, note});
    }

    void run(const std::string& id, const std::string& expected,
             const std::function<std::pair<std::string, bool>()>& body,
             const std::string& note = "") {
        if (!wanted(id)) return;
        try {
            auto [got, pass] = body();
            add(id, expected, got, pass, note);
        } catch (const std::exception& e) {
            add(id, expected, std::string("exception: ") + e.what(), false, note);
        }
    }

    void poly_eq(const std::string& id, const Polynomial& got, const Polynomial& expected,
                 const std::string& note = "") {
        run(id, expected.normal_form().str(), [&]() {
            Polynomial g = got.normal_form();
            return std::pair{g.str(), g == expected.normal_form()};
        }, note);
    }

    void map_eq(const std::string& id, const PolyMap& got, const PolyMap& expected,
                const SphereMapMeta& meta, const std::string& note = "") {
        run(id, "componentwise equality", [&]() {
            auto blocks = meta.variable_blocks();
            PolyMap g = got.normal_form(blocks);
            PolyMap e = expected.normal_form(blocks);
            if (g == e) {
                // the two expressions must also agree numerically
                auto zr = numeric_zero_check(g - e, samples_for(meta), kZeroTol);
                return std::pair{std::string("equal (numeric residual ") +
                                     std::to_string(zr.max_abs) + ")",
                                 zr.pass};
            }
            return std::pair{std::string("maps differ"), false};
        }, note);
    }

    void map_zero(const std::string& id, const PolyMap& field, const SphereMapMeta& meta,
                  const std::string& note = "") {
        run(id, "0", [&]() {
            PolyMap nf = field.normal_form(meta.variable_blocks());
            if (!nf.is_zero_map()) return std::pair{std::string("nonzero map"), false};
            auto zr = numeric_zero_check(nf, samples_for(meta), kZeroTol);
            return std::pair{"0 (numeric residual " + std::to_string(zr.max_abs) + ")",
                             zr.pass};
        }, note);
    }

    void map_nonzero(const std::string& id, const PolyMap& field, const SphereMapMeta& meta,
                     const std::string& note = "") {
        run(id, "nonzero, witnessed numerically", [&]() {
            PolyMap nf = field.normal_form(meta.variable_blocks());
            if (nf.is_zero_map()) return std::pair{std::string("zero map"), false};
            auto zr = numeric_zero_check(nf, samples_for(meta), kZeroTol);
            return std::pair{"nonzero (witness " + std::to_string(zr.max_abs) + ")",
                             zr.max_abs > kWitnessFloor};
        }, note);
    }

    const SampleSet& samples_for(const SphereMapMeta& meta) {
        std::vector<int> key;
        for (auto [lo, hi] : meta.variable_blocks()) key.push_back(hi - lo);
        auto it = samples_.find(key);
        if (it == samples_.end())
            it = samples_.emplace(key, sample_for(meta, kPoints, kSeed)).first;
        return it->second;
    }

private:
    std::vector<CheckResult>& out_;
    std::string filter_;
    std::map<std::vector<int>, SampleSet> samples_;
};

Polynomial pp(const std::string& text, int nvars) { return parse_polynomial(text, nvars); }

// (c1 * F1-block || c2 * F2-block) with scalar weights
PolyMap weighted_blocks(const PolyMap& F, int split, const RadicalScalar& c1,
                        const RadicalScalar& c2) {
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (int a = 0; a < F.size(); ++a) comps.push_back(F[a].scaled(a < split ? c1 : c2));
    return PolyMap(std::move(comps));
}

void check_operator_values(Battery& b) {
    GalleryEntry veronese = named_form("veronese");
    GalleryEntry cck = named_form("cck3");
    GalleryEntry quad = named_form("quad-f1");
    GalleryEntry quart = named_form("quart-f2");

    b.poly_eq("grad-sq/veronese", grad_norm_squared(veronese.map),
              pp("10*(x^2+y^2+z^2)", 3));
    for (int k = 1; k <= 8; ++k) {
        std::string exp = std::to_string(2 * k * k) + "*(x^2+y^2)^" + std::to_string(k - 1);
        b.poly_eq("grad-sq/circle-" + std::to_string(k),
                  grad_norm_squared(circle_harmonics(k)), pp(exp, 2));
    }
    b.poly_eq("grad-sq/quad-f1", grad_norm_squared(quad.map),
              pp("7*(x^2+y^2+z^2+w^2)", 4));
    b.poly_eq("grad-sq/quart-f2", grad_norm_squared(quart.map),
              pp("4*(x^2+y^2+z^2+w^2)^3", 4));
    b.poly_eq("grad-sq/cck3", grad_norm_squared(cck.map), pp("21*(x^2+y^2+z^2)^2", 3));

    b.poly_eq("laplacian/quart-f2", euclidean_laplacian(quart.map)[0].normal_form(),
              pp("-12", 4));
    b.poly_eq("bilaplacian/quart-f2",
              euclidean_laplacian(euclidean_laplacian(quart.map))[0].normal_form(),
              pp("96", 4));
    b.map_eq("laplacian/quad-f1", euclidean_laplacian(quad.map),
             PolyMap({pp("0", 4), pp("0", 4), pp("2*sqrt(2)", 4), pp("-2*sqrt(2)", 4)}),
             quad.meta);

    for (int k : {1, 2}) {
        PolyMap F = x_times_g(circle_harmonics(k));
        std::string exp = std::to_string(8 * k * k + 4 * k * k * k * k);
        b.poly_eq("hessian/xg-circle-" + std::to_string(k),
                  hessian_norm_squared(F).normal_form(), pp(exp, 2));
    }
    b.poly_eq("hessian/veronese", hessian_norm_squared(veronese.map).normal_form(),
              pp("30", 3));
    for (int k = 2; k <= 5; ++k) {
        long v = 4L * k * k * (k - 1) * (k - 1);
        b.poly_eq("hessian/circle-" + std::to_string(k),
                  hessian_norm_squared(circle_harmonics(k)).normal_form(),
                  pp(std::to_string(v), 2),
                  "matches the harmonic-form closed form; the candidate 8k^2(2k-1) does not");
        long w = -8L * k * k * (k - 1) * (k - 1);
        b.poly_eq("lap-energy/circle-" + std::to_string(k),
                  euclidean_laplacian(grad_norm_squared(circle_harmonics(k))).normal_form(),
                  pp(std::to_string(w), 2),
                  "matches -8k^2(k-1)^2; the candidate -8k^2(k-1) does not");
    }

    // eigenfunction law: degree-k harmonic components satisfy L = k(m+k-1)
    auto eigen_check = [&](const std::string& id, const PolyMap& F, int m, long nu) {
        b.run(id, "L = " + std::to_string(nu) + " * component", [&]() {
            for (const auto& comp : F.components()) {
                Polynomial lhs = sphere_laplacian(comp, m).normal_form();
                Polynomial rhs = comp.scaled(rat(nu)).normal_form();
                if (lhs != rhs) return std::pair{std::string("eigen law fails"), false};
            }
            return std::pair{std::string("eigen law holds"), true};
        });
    };
    eigen_check("sphere-laplacian/veronese-eigen", veronese.map, 2, 6);
    eigen_check("sphere-laplacian/cck3-eigen", cck.map, 2, 12);
    for (int k = 1; k <= 4; ++k)
        eigen_check("sphere-laplacian/circle-" + std::to_string(k) + "-eigen",
                    circle_harmonics(k), 1, static_cast<long>(k) * k);
}

void check_xg_family(Battery& b) {
    for (int k = 1; k <= 4; ++k) {
        PolyMap G = circle_harmonics(k);
        PolyMap F = x_times_g(G);
        SphereMapMeta meta = sphere_restriction_check(F);
        std::string tag = "xg-circle-" + std::to_string(k);

        std::string exp = std::to_string(2 * (k * k + k + 1)) + "*(x^2+y^2)^" + std::to_string(k);
        b.poly_eq("xg/grad-sq-" + tag, grad_norm_squared(F), pp(exp, 2));

        std::vector<Polynomial> stacked;
        for (int i = 0; i < 2; ++i)
            for (const auto& g : G.components())
                stacked.push_back(g.partial_derivative(i).scaled(rat(-2)));
        b.map_eq("xg/laplacian-" + tag, euclidean_laplacian(F), PolyMap(stacked), meta);

        long c = 2L * k * (k + 1) * (1 + 2 * k + 1 + k * (1 + 2 * k - 1));
        b.map_eq("xg/push-grad-" + tag, push_gradient(F, grad_norm_squared(F)),
                 F.scaled(rat(c)), meta);

        b.map_zero("bitension/" + tag, bitension_homogeneous(F, meta), meta);
        auto [general, ws] = bitension_general(F, meta);
        b.map_zero("bitension-general/" + tag, general, meta);
        b.map_nonzero("tension/" + tag, tension_homogeneous(F, meta), meta);
        PolyMap expected_tension =
            (-euclidean_laplacian(F) - F.scaled(rat(2 * k))).normal_form();
        b.map_eq("tension-display/" + tag, tension_homogeneous(F, meta), expected_tension,
                 meta);
    }

    // the same construction over the Veronese map is not biharmonic (m = 2)
    PolyMap F = x_times_g(named_form("veronese").map);
    SphereMapMeta meta = sphere_restriction_check(F);
    b.poly_eq("xg/grad-sq-veronese", grad_norm_squared(F), pp("17*(x^2+y^2+z^2)^2", 3));
    b.map_nonzero("bitension/xg-veronese-m2", bitension_homogeneous(F, meta), meta);
    b.map_nonzero("tension/xg-veronese-m2", tension_homogeneous(F, meta), meta);
}

void check_radial_multiples(Battery& b) {
    for (int p : {1, 2}) {
        PolyMap base = PolyMap::identity(3);
        PolyMap F = radial_multiple(base, p);
        SphereMapMeta meta = sphere_restriction_check(F);
        std::string tag = "radial-multiple-p" + std::to_string(p);

        b.map_eq("laplacian/" + tag, euclidean_laplacian(F),
                 F.scaled(rat(-2L * p * (2 * p + 3))), meta);
        long e = 4L * p * p + 4 * p + 3;
        b.poly_eq("grad-sq/" + tag, grad_norm_squared(F).normal_form(),
                  pp(std::to_string(e), 3));
        b.map_zero("tension/" + tag, tension_homogeneous(F, meta), meta,
                   "harmonic map from a non-harmonic form");
        auto [minimal, strips] = minimality_check(F);
        b.run("minimality/" + tag, "(x, y, z) after " + std::to_string(p) + " strips", [&]() {
            bool ok = strips == p && minimal == base;
            return std::pair{std::string(ok ? "recovered" : "wrong minimal form"), ok};
        });
    }
    auto [minimal, strips] = minimality_check(named_form("veronese").map);
    b.run("minimality/veronese", "0 strips", [&]() {
        bool ok = strips == 0;
        return std::pair{std::to_string(strips) + " strips", ok};
    });
}

void check_quadratic_identities(Battery& b) {
    auto quad_check = [&](const std::string& id, const PolyMap& F, const std::string& note = "") {
        SphereMapMeta meta = sphere_restriction_check(F);
        auto [lhs, rhs] = quadratic_identity_check(F, meta);
        b.run(id, rhs.str(), [&]() {
            bool ok = lhs == Polynomial::constant(F.nvars(), rhs);
            return std::pair{lhs.str(), ok};
        }, note);
    };
    quad_check("quadratic-identity/quad-f1", named_form("quad-f1").map, "4r^2(m+1)(m+3) = 72");
    quad_check("quadratic-identity/veronese", named_form("veronese").map, "= 60");
    quad_check("quadratic-identity/circle-2", circle_harmonics(2), "= 32");
    quad_check("quadratic-identity/final-map", named_form("final-map").map);

    // harmonic-form closed forms
    auto harm_check = [&](const std::string& id, const PolyMap& F) {
        SphereMapMeta meta = sphere_restriction_check(F);
        auto rep = harmonic_identities_check(F, meta);
        b.run(id, rep.laplacian_closed_form.str() + " and " + rep.hessian_closed_form.str(),
              [&]() {
                  bool ok = rep.laplacian_matches && rep.hessian_matches;
                  return std::pair{rep.laplacian_of_energy.str() + " and " +
                                       rep.hessian_sq.str(),
                                   ok};
              });
    };
    harm_check("harmonic-identities/veronese", named_form("veronese").map);
    harm_check("harmonic-identities/cck3", named_form("cck3").map);
    harm_check("harmonic-identities/circle-3", circle_harmonics(3));

    // the degree-3 identity value 420 r2^2 for the scaled form
    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 1}, {3, 4}, {1, 2}, {1, 4}}) {
        RadicalScalar r2_sq = rat(num, den);
        PolyMap F2 = named_form("cck3").map.scaled(r2_sq.sqrt());
        Polynomial dsq = grad_norm_squared(F2);
        PolyMap lap = euclidean_laplacian(F2);
        Polynomial lhs = (euclidean_laplacian(dsq).scaled(rat(-2)) -
                          hessian_norm_squared(F2).scaled(rat(2)) + norm_squared(lap))
                             .normal_form();
        RadicalScalar rhs = r2_sq * rat(420);
        b.run("cck-identity/r2sq-" + std::to_string(num) + "-" + std::to_string(den),
              "420*r2^2 = " + rhs.str(), [&]() {
                  bool ok = lhs == Polynomial::constant(3, rhs);
                  return std::pair{lhs.str(), ok};
              });
    }
}

void check_energies(Battery& b) {
    GalleryEntry veronese = named_form("veronese");
    b.poly_eq("energy/veronese", energy_density(veronese.map, veronese.meta), pp("3", 3),
              "k(k+m-1)/2 with k=2, m=2; also equals m+1");
    for (int k = 1; k <= 4; ++k) {
        PolyMap F = x_times_g(circle_harmonics(k));
        SphereMapMeta meta = sphere_restriction_check(F);
        long twice = 2L * (k * k + k + 1) - (k + 1) * (k + 1);
        b.poly_eq("energy/xg-circle-" + std::to_string(k), energy_density(F, meta),
                  Polynomial::constant(2, rat(twice, 2)), "constant energy density");
    }
}

void check_diagonal_examples(Battery& b) {
    // quadratic/quartic stack: proper biharmonic with the printed tension
    GalleryEntry quad = named_form("quad-f1");
    GalleryEntry quart = named_form("quart-f2");
    auto [mixed, mixed_meta] = diagonal_stack(quad.map, quart.map);

    {
        std::vector<Polynomial> expected;
        Polynomial shift = pp("2*sqrt(2)", 4);
        for (int a = 0; a < 4; ++a) {
            Polynomial c = quad.map[a].scaled(rat(-4));
            if (a == 2) c -= shift;
            if (a == 3) c += shift;
            expected.push_back(c);
        }
        expected.push_back(pp("2", 4));  // 12 - 20*F2 with F2 = 1/2 on the sphere
        b.map_eq("diagonal/mixed-tension", tension_diagonal(mixed, mixed_meta),
                 PolyMap(std::move(expected)), mixed_meta,
                 "(0,0,-4/sqrt2,4/sqrt2,12) - (4F1,10)");
    }
    b.map_nonzero("diagonal/mixed-tension-nonzero", tension_diagonal(mixed, mixed_meta),
                  mixed_meta);
    b.map_zero("diagonal/mixed-bitension", bitension_diagonal(mixed, mixed_meta), mixed_meta,
               "proper biharmonic");
    b.map_zero("diagonal/mixed-bitension-general",
               bitension_general(mixed, mixed_meta).first, mixed_meta);
    b.poly_eq("energy/mixed-diagonal", energy_density(mixed, mixed_meta), pp("2", 4));
    {
        PolyMap push = push_gradient(mixed, grad_norm_squared(mixed));
        PolyMap expected = weighted_blocks(mixed, 4, rat(76), rat(152));
        b.map_eq("diagonal/mixed-push-grad", push, expected, mixed_meta,
                 "76*(F1, 1) on the sphere");
    }

    // Veronese + degree-3 stack: bitension 36(1-2rho)(r2^2 F1, -rho F2)
    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}, {2, 3}}) {
        RadicalScalar rho = rat(num, den);
        auto [F, meta] =
            diagonal_sum(named_form("veronese").map, named_form("cck3").map, rho);
        const auto& d = meta.diagonal();
        RadicalScalar lead = rat(36) * (RadicalScalar(1) - rat(2) * rho);
        PolyMap expected = weighted_blocks(F, d.split, lead * d.r2_sq, lead * (-rho));
        std::string tag = std::to_string(num) + "-" + std::to_string(den);
        b.map_eq("diagonal/veronese-cck-bitension-" + tag,
                 bitension_diagonal(F, meta), expected, meta,
                 "(2r1^2-1)(k1-k2)^2(m+k1+k2-1)^2((r1^2-1)F1, r1^2 F2); the candidate "
                 "12(1-2r1^2)(F1,-2F2) is tangent to the target only at r1^2 = 2/3");
        if (num == 2 && den == 3) {
            // at rho = 2/3 the printed display agrees with the computed field
            PolyMap printed = weighted_blocks(F, d.split, rat(12) * (RadicalScalar(1) - rat(2) * rho),
                                              rat(-24) * (RadicalScalar(1) - rat(2) * rho));
            b.map_eq("diagonal/veronese-cck-bitension-printed-at-2-3",
                     bitension_diagonal(F, meta), printed, meta);
        }
        if (num == 1 && den == 2)
            b.map_zero("diagonal/veronese-cck-bitension-zero-at-1-2",
                       bitension_diagonal(F, meta), meta, "balanced radii");
    }

    // harmonic diagonal tension: (k2-k1)(m+k1+k2-1)(r2^2 F1, -r1^2 F2)
    {
        RadicalScalar rho = rat(1, 4);
        auto [F, meta] = diagonal_sum(circle_harmonics(1), circle_harmonics(3), rho);
        const auto& d = meta.diagonal();
        RadicalScalar lead = rat((3 - 1) * (1 + 1 + 3 - 1));
        PolyMap expected = weighted_blocks(F, d.split, lead * d.r2_sq, lead * (-rho));
        b.map_eq("diagonal/harmonic-tension-closed-form", tension_diagonal(F, meta),
                 expected, meta,
                 "(k2-k1)(m+k1+k2-1)(r2^2 F1, -r1^2 F2); a common (1-r1^2)(m+k1+k2+1) "
                 "candidate factor fails the tangency constraint");
    }

    // same degrees and any radii: harmonic
    {
        auto [F, meta] = diagonal_sum(circle_harmonics(2), circle_harmonics(2), rat(1, 3));
        b.map_zero("diagonal/equal-degrees-harmonic", tension_diagonal(F, meta), meta);
        auto [F2, meta2] =
            diagonal_sum(named_form("veronese").map, named_form("veronese").map, rat(1, 2));
        b.map_zero("diagonal/equal-degrees-harmonic-veronese",
                   tension_diagonal(F2, meta2), meta2);
    }
}

void check_balance_grid(Battery& b) {
    // k1, k2 in 1..4, r1^2 in {1/4, 1/2, 3/4}: proper biharmonic exactly on
    // {r1^2 = 1/2, k1 != k2}; harmonic exactly on {k1 = k2}
    b.run("grid/circle-diagonal-classification", "48/48 classifications match", [&]() {
        int checked = 0, mismatches = 0;
        for (int k1 = 1; k1 <= 4; ++k1)
            for (int k2 = 1; k2 <= 4; ++k2)
                for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}}) {
                    RadicalScalar rho = rat(num, den);
                    auto [F, meta] =
                        diagonal_sum(circle_harmonics(k1), circle_harmonics(k2), rho);
                    AnalysisReport rep = classify(F, meta);
                    bool want_harmonic = (k1 == k2);
                    bool want_proper = (num == 1 && den == 2 && k1 != k2);
                    if (!rep.route_agreement) ++mismatches;
                    if (rep.is_harmonic != want_harmonic) ++mismatches;
                    if (rep.is_proper_biharmonic != want_proper) ++mismatches;
                    ++checked;
                }
        return std::pair{std::to_string(checked - mismatches) + "/" +
                             std::to_string(checked) + " classifications match",
                         mismatches == 0 && checked == 48};
    });

    // constant-energy criterion: harmonic iff |dphi1|^2/r1^2 = |dphi2|^2/r2^2
    b.run("diagonal/constant-energy-criterion", "criterion matches on the grid", [&]() {
        for (int k1 = 1; k1 <= 3; ++k1)
            for (int k2 = 1; k2 <= 3; ++k2) {
                RadicalScalar rho = rat(1, 4);
                auto [F, meta] = diagonal_sum(circle_harmonics(k1), circle_harmonics(k2), rho);
                const auto& d = meta.diagonal();
                PolyMap F1({F.components().begin(), F.components().begin() + d.split});
                PolyMap F2({F.components().begin() + d.split, F.components().end()});
                Polynomial e1 = (grad_norm_squared(F1) -
                                 Polynomial::constant(2, rat(k1 * k1) * d.r1_sq))
                                    .normal_form()
                                    .scaled(d.r1_sq.inverted());
                Polynomial e2 = (grad_norm_squared(F2) -
                                 Polynomial::constant(2, rat(k2 * k2) * d.r2_sq))
                                    .normal_form()
                                    .scaled(d.r2_sq.inverted());
                bool equal_energies = (e1 == e2);
                bool harmonic = tension_diagonal(F, meta).is_zero_map();
                if (equal_energies != harmonic)
                    return std::pair{std::string("criterion fails at k1=") +
                                         std::to_string(k1) + " k2=" + std::to_string(k2),
                                     false};
            }
        return std::pair{std::string("criterion matches"), true};
    });
}

void check_products(Battery& b) {
    {
        auto [F, meta] = product_map(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
        b.map_nonzero("product/circle1-circle2-tension", tension_product(F, meta), meta);
        b.map_zero("product/circle1-circle2-bitension", bitension_product(F, meta), meta,
                   "proper biharmonic at r1^2 = 1/2");
        b.map_eq("product/circle1-circle2-reference-tension", tension_product(F, meta),
                 product_reference_tension(F, meta), meta, "composition-route referee");
        b.map_eq("product/circle1-circle2-reference-bitension", bitension_product(F, meta),
                 product_reference_bitension(F, meta), meta);
    }
    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}}) {
        auto [F, meta] =
            product_map(named_form("veronese").map, PolyMap::identity(7), rat(num, den));
        std::string tag = std::to_string(num) + "-" + std::to_string(den);
        b.map_zero("product/veronese-s6id-tension-" + tag, tension_product(F, meta), meta,
                   "2*3 = 1*6 balances the eigenvalues");
        b.map_zero("product/veronese-s6id-bitension-" + tag, bitension_product(F, meta),
                   meta);
    }
    // proportionality of the two product fields across degrees and radii
    b.run("product/proportionality", "tau2 = (2r1^2-1)(nu1-nu2) tau on sample products",
          [&]() {
              std::vector<std::pair<PolyMap, PolyMap>> factors = {
                  {circle_harmonics(1), circle_harmonics(3)},
                  {circle_harmonics(2), named_form("veronese").map},
                  {named_form("cck3").map, PolyMap::identity(4)},
              };
              for (auto& [G1, G2] : factors)
                  for (auto [num, den] :
                       std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {2, 3}}) {
                      auto [F, meta] = product_map(G1, G2, rat(num, den));
                      const auto& p = meta.product();
                      long gap = static_cast<long>(p.k1) * (p.m1 + p.k1 - 1) -
                                 static_cast<long>(p.k2) * (p.m2 + p.k2 - 1);
                      RadicalScalar factor =
                          (rat(2) * rat(num, den) - RadicalScalar(1)) * rat(gap);
                      PolyMap lhs = bitension_product(F, meta);
                      PolyMap rhs = tension_product(F, meta).scaled(factor);
                      PolyMap ref = product_reference_bitension(F, meta);
                      if (lhs.normal_form(meta.variable_blocks()) !=
                              rhs.normal_form(meta.variable_blocks()) ||
                          lhs != ref)
                          return std::pair{std::string("proportionality fails"), false};
                  }
              return std::pair{std::string("holds with the composition referee"), true};
          },
          "the eigenvalue-gap factor keeps tau2 tangent; a bare (2r1^2-1) "
          "proportionality fails the composition referee except at r1^2 = 1/2");
}

void check_hypersphere_and_curves(Battery& b) {
    GalleryEntry fin = named_form("final-map");
    std::vector<RadicalScalar> axis(5, RadicalScalar(0));
    axis[3] = RadicalScalar(1);
    auto rep = small_hypersphere_check(fin.map, axis);
    b.run("small-hypersphere/final-map-axis4", "constant 1/2*sqrt(2)", [&]() {
        bool ok = rep.in_slice && rep.constant == RadicalScalar::term(Rational(1, 2), 2);
        return std::pair{rep.in_slice ? rep.constant.str() : std::string("not in a slice"),
                         ok};
    });
    axis[3] = RadicalScalar(0);
    axis[4] = RadicalScalar(1);
    auto rep2 = small_hypersphere_check(fin.map, axis);
    b.run("small-hypersphere/final-map-axis5", "constant 0", [&]() {
        bool ok = rep2.in_slice && rep2.constant == RadicalScalar(0);
        return std::pair{rep2.in_slice ? rep2.constant.str() : std::string("not in a slice"),
                         ok};
    });
    b.run("small-hypersphere/veronese-axes", "no axis slice", [&]() {
        PolyMap v = named_form("veronese").map;
        for (int i = 0; i < 5; ++i) {
            std::vector<RadicalScalar> e(5, RadicalScalar(0));
            e[i] = RadicalScalar(1);
            if (small_hypersphere_check(v, e).in_slice)
                return std::pair{std::string("axis ") + std::to_string(i) + " slices", false};
        }
        return std::pair{std::string("no axis slice"), true};
    });

    // the isometry-transformed curve family
    for (int k = 1; k <= 4; ++k) {
        PolyMap F = t_transform_curve(x_times_g(circle_harmonics(k)));
        RadicalScalar half_sqrt2 = RadicalScalar::term(Rational(1, 2), 2);
        Polynomial rsq = Polynomial::radius_sq(2);
        PolyMap low = k >= 2 ? circle_harmonics(k - 1)
                             : PolyMap({pp("1", 2), pp("0", 2)});
        PolyMap high = circle_harmonics(k + 1);
        PolyMap expected = PolyMap({(low[0] * rsq).scaled(half_sqrt2),
                                    (low[1] * rsq).scaled(half_sqrt2),
                                    high[0].scaled(half_sqrt2),
                                    high[1].scaled(half_sqrt2)});
        b.run("tcurve/form-k" + std::to_string(k),
              "(1/sqrt2)(|z|^2 z^(k-1), z^(k+1))", [&]() {
                  bool ok = F == expected;
                  return std::pair{std::string(ok ? "exact match" : "differs"), ok};
              },
              "restricted curve has frequencies k-1 and k+1 at amplitude 1/sqrt2");
    }
}

void check_route_equivalence(Battery& b) {
    struct Item {
        std::string name;
        PolyMap map;
        SphereMapMeta meta;
    };
    std::vector<Item> items;
    for (const auto& name : {"veronese", "cck3", "final-map"}) {
        GalleryEntry e = named_form(name);
        items.push_back({e.name, e.map, e.meta});
    }
    for (int k = 1; k <= 4; ++k) {
        PolyMap G = circle_harmonics(k);
        items.push_back({"circle-" + std::to_string(k), G, sphere_restriction_check(G)});
    }
    {
        PolyMap F = x_times_g(circle_harmonics(2));
        items.push_back({"xg-circle-2", F, sphere_restriction_check(F)});
        PolyMap V = x_times_g(named_form("veronese").map);
        items.push_back({"xg-veronese", V, sphere_restriction_check(V)});
        PolyMap R = radial_multiple(PolyMap::identity(3), 1);
        items.push_back({"radial-multiple-1", R, sphere_restriction_check(R)});
        auto [D1, D1m] = diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
        items.push_back({"diag-circle-12", D1, D1m});
        auto [D2, D2m] =
            diagonal_sum(named_form("veronese").map, named_form("cck3").map, rat(3, 4));
        items.push_back({"diag-veronese-cck", D2, D2m});
        auto [D3, D3m] = diagonal_stack(named_form("quad-f1").map, named_form("quart-f2").map);
        items.push_back({"diag-mixed", D3, D3m});
    }
    for (const auto& item : items) {
        b.run("route/" + item.name, "specialized = general", [&]() {
            AnalysisReport rep = classify(item.map, item.meta);
            return std::pair{std::string(rep.route_agreement ? "routes agree"
                                                             : "routes disagree"),
                             rep.route_agreement};
        });
        if (!item.meta.is_homogeneous()) continue;
        // harmonic implies biharmonic on every homogeneous item
        b.run("harmonic-implies-biharmonic/" + item.name, "implication holds", [&]() {
            AnalysisReport rep = classify(item.map, item.meta);
            bool ok = !rep.is_harmonic || rep.is_biharmonic;
            return std::pair{std::string(ok ? "holds" : "violated"), ok};
        });
    }

    // equal-degree diagonal stacks are quadratic forms: both specializations
    // must agree with each other through the general route
    b.run("route/equal-degree-stack-both-kinds", "diagonal = homogeneous = general", [&]() {
        auto [F, dmeta] = diagonal_sum(circle_harmonics(2), circle_harmonics(2), rat(1, 4));
        SphereMapMeta hmeta = sphere_restriction_check(F);
        PolyMap td = tension_diagonal(F, dmeta);
        PolyMap th = tension_homogeneous(F, hmeta);
        PolyMap bd = bitension_diagonal(F, dmeta);
        PolyMap bh = bitension_homogeneous(F, hmeta);
        bool ok = td == th && bd == bh;
        return std::pair{std::string(ok ? "all equal" : "kind specializations differ"), ok};
    });
}

void check_tension_basics(Battery& b) {
    GalleryEntry veronese = named_form("veronese");
    b.map_zero("tension/veronese", tension_homogeneous(veronese.map, veronese.meta),
               veronese.meta, "eigenmap");
    b.map_zero("tension-general/veronese", tension_general(veronese.map, veronese.meta),
               veronese.meta);
    b.map_zero("bitension/veronese", bitension_homogeneous(veronese.map, veronese.meta),
               veronese.meta);
    GalleryEntry cck = named_form("cck3");
    b.map_zero("tension/cck3", tension_homogeneous(cck.map, cck.meta), cck.meta);
    PolyMap id4 = PolyMap::identity(4);
    SphereMapMeta id_meta = sphere_restriction_check(id4);
    b.map_zero("tension/identity-s3", tension_general(id4, id_meta), id_meta);

    // worksheet snapshot for the Veronese map
    b.run("worksheet/veronese", "tau(Phi) = -6 Phi, |tau|^2 = 36, |dPhi|^2 = 6", [&]() {
        auto [tau2, ws] = bitension_general(veronese.map, veronese.meta);
        bool ok = tau2.is_zero_map() &&
                  ws.tau == veronese.map.scaled(rat(-6)).normal_form() &&
                  ws.tau_norm_sq == pp("36", 3) && ws.dphi_norm_sq == pp("6", 3) &&
                  ws.laplacian_energy.is_zero() && ws.div_theta.is_zero() &&
                  ws.push_grad.is_zero_map();
        return std::pair{std::string(ok ? "worksheet matches" : "worksheet differs"), ok};
    });

    // triple equivalence for unit quadratic forms
    b.run("quadratic/triple-equivalence", "tension=0 <=> Delta0 F=0 <=> e=m+1", [&]() {
        std::vector<PolyMap> maps = {named_form("veronese").map, circle_harmonics(2),
                                     named_form("final-map").map,
                                     x_times_g(circle_harmonics(1))};
        for (const auto& F : maps) {
            SphereMapMeta meta = sphere_restriction_check(F);
            if (meta.homogeneous().k != 2 || meta.homogeneous().r_sq != RadicalScalar(1))
                return std::pair{std::string("test map is not a unit quadratic"), false};
            int m = meta.domain_dim();
            bool t0 = tension_homogeneous(F, meta).is_zero_map();
            bool l0 = euclidean_laplacian(F).is_zero_map();
            bool e0 = energy_density(F, meta) == Polynomial::constant(F.nvars(), rat(m + 1));
            if (t0 != l0 || l0 != e0)
                return std::pair{std::string("equivalence breaks"), false};
        }
        return std::pair{std::string("equivalence holds on the quadratic battery"), true};
    });
}

void check_numeric_referee(Battery& b) {
    b.run("numeric/fd-gradient-veronese", "central differences within 1e-4", [&]() {
        SampleSet s = sample_sphere(2, 50, kSeed);
        auto rep = finite_diff_check(grad_norm_squared(named_form("veronese").map), s);
        return std::pair{"max rel err " + std::to_string(rep.max_rel_err), rep.pass};
    });
    b.run("numeric/fd-gradient-mixed-energy", "central differences within 1e-4", [&]() {
        auto [F, meta] =
            diagonal_stack(named_form("quad-f1").map, named_form("quart-f2").map);
        SampleSet s = sample_sphere(3, 50, kSeed);
        auto rep = finite_diff_check(grad_norm_squared(F), s);
        return std::pair{"max rel err " + std::to_string(rep.max_rel_err), rep.pass};
    });
    b.run("numeric/fd-laplacian-cck3", "second-order stencil within 1e-4", [&]() {
        SampleSet s = sample_sphere(2, 50, kSeed);
        auto rep = finite_diff_laplacian_check(named_form("cck3").map, s);
        return std::pair{"max rel err " + std::to_string(rep.max_rel_err), rep.pass};
    });
    b.run("numeric/determinism", "bit-identical regeneration from the seed", [&]() {
        SampleSet s1 = sample_sphere(3, 25, 7);
        SampleSet s2 = sample_sphere(3, 25, 7);
        SampleSet s3 = sample_sphere(3, 25, 8);
        bool same = s1.points == s2.points;
        bool different = s1.points != s3.points;
        return std::pair{std::string(same && different ? "deterministic" : "broken"),
                         same && different};
    });
}

}  // namespace

std::vector<CheckResult> run_battery(const std::string& filter) {
    std::vector<CheckResult> results;
    Battery b(results, filter);
    check_operator_values(b);
    check_xg_family(b);
    check_radial_multiples(b);
    check_quadratic_identities(b);
    check_energies(b);
    check_diagonal_examples(b);
    check_balance_grid(b);
    check_products(b);
    check_hypersphere_and_curves(b);
    check_route_equivalence(b);
    check_tension_basics(b);
    check_numeric_referee(b);
    return results;
}

}  // namespace sphmap
