// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion.  Exit status is nonzero when any fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "sphmap/battery.hpp"
#include "sphmap/numcheck.hpp"
#include "support/generators.hpp"

using namespace sphmap;
using namespace testgen;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    int checks = 0;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            detail << "    failed: " << what << "\n";
        }
    }
};

RadicalScalar rat(long num, long den = 1) { return RadicalScalar(Rational(num, den)); }

// --- criterion 1: the exact identity battery ---------------------------------

Outcome criterion1() {
    Outcome out;
    auto results = run_battery("");
    for (const auto& r : results) out.require(r.pass, r.id);
    return out;
}

// --- criterion 2: the 48-cell circle-diagonal grid ---------------------------

Outcome criterion2() {
    Outcome out;
    for (int k1 = 1; k1 <= 4; ++k1)
        for (int k2 = 1; k2 <= 4; ++k2)
            for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}}) {
                auto [F, meta] = diagonal_sum(circle_harmonics(k1), circle_harmonics(k2),
                                              rat(num, den));
                AnalysisReport rep = classify(F, meta);
                bool want_harmonic = (k1 == k2);
                bool want_proper = (num == 1 && den == 2 && k1 != k2);
                std::string tag = "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
                                  " r1sq=" + std::to_string(num) + "/" + std::to_string(den);
                out.require(rep.route_agreement, "route agreement at " + tag);
                out.require(rep.is_harmonic == want_harmonic, "harmonic verdict at " + tag);
                out.require(rep.is_proper_biharmonic == want_proper,
                            "proper-biharmonic verdict at " + tag);
            }
    return out;
}

// --- criterion 3: route equivalence on gallery + randomized stacks -----------

Outcome criterion3() {
    Outcome out;
    std::vector<std::pair<std::string, std::pair<PolyMap, SphereMapMeta>>> battery;

    auto add = [&](const std::string& name, const PolyMap& F, const SphereMapMeta& meta) {
        battery.push_back({name, {F, meta}});
    };
    for (const auto& name : {"veronese", "cck3", "quad-f1", "quart-f2", "final-map"}) {
        GalleryEntry e = named_form(name);
        add(e.name, e.map, e.meta);
    }
    for (int k = 1; k <= 4; ++k) {
        PolyMap G = circle_harmonics(k);
        add("circle:" + std::to_string(k), G, sphere_restriction_check(G));
        PolyMap F = x_times_g(G);
        add("xg(circle:" + std::to_string(k) + ")", F, sphere_restriction_check(F));
    }
    {
        PolyMap V = x_times_g(named_form("veronese").map);
        add("xg(veronese)", V, sphere_restriction_check(V));
        PolyMap R1 = radial_multiple(PolyMap::identity(3), 1);
        add("rmul(id3,1)", R1, sphere_restriction_check(R1));
        PolyMap R2 = radial_multiple(circle_harmonics(2), 2);
        add("rmul(circle:2,2)", R2, sphere_restriction_check(R2));
        auto [M, Mmeta] = diagonal_stack(named_form("quad-f1").map, named_form("quart-f2").map);
        add("dstack(quad-f1,quart-f2)", M, Mmeta);
    }
    Rng rng(31415);
    for (int i = 0; i < 52; ++i) {
        auto [F, meta] = random_harmonic_stack(rng);
        add("random-stack-" + std::to_string(i), F, meta);
    }

    for (const auto& [name, fm] : battery) {
        const auto& [F, meta] = fm;
        PolyMap t_closed = meta.is_homogeneous() ? tension_homogeneous(F, meta)
                                               : tension_diagonal(F, meta);
        PolyMap b_closed = meta.is_homogeneous() ? bitension_homogeneous(F, meta)
                                               : bitension_diagonal(F, meta);
        out.require(t_closed == tension_general(F, meta), "tension routes for " + name);
        out.require(b_closed == bitension_general(F, meta).first,
                    "bitension routes for " + name);
    }
    return out;
}

// --- criterion 4: products ----------------------------------------------------

Outcome criterion4() {
    Outcome out;
    {
        auto [F, meta] = product_map(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
        AnalysisReport rep = classify(F, meta);
        out.require(rep.is_proper_biharmonic, "circle(1) x circle(2) at 1/2 proper biharmonic");
    }
    for (auto [num, den] : std::vector<std::pair<long, long>>{{1, 4}, {1, 2}, {3, 4}}) {
        auto [F, meta] =
            product_map(named_form("veronese").map, PolyMap::identity(7), rat(num, den));
        AnalysisReport rep = classify(F, meta);
        out.require(rep.is_harmonic,
                    "veronese x id(S^6) harmonic at r1sq=" + std::to_string(num) + "/" +
                        std::to_string(den));
    }

    // randomized harmonic products: the proportionality law and the referee
    Rng rng(27182);
    int built = 0;
    while (built < 20) {
        int n1 = rng.range(2, 4), n2 = rng.range(2, 4);
        auto cat1 = harmonic_catalog(n1);
        auto cat2 = harmonic_catalog(n2);
        PolyMap G1 = random_orthogonal_mix(rng, cat1[rng.range(0, (int)cat1.size() - 1)]);
        PolyMap G2 = random_orthogonal_mix(rng, cat2[rng.range(0, (int)cat2.size() - 1)]);
        RadicalScalar rho{random_radius_sq(rng)};
        auto [F, meta] = product_map(G1, G2, rho);
        const auto& p = meta.product();
        long gap = static_cast<long>(p.k1) * (p.m1 + p.k1 - 1) -
                   static_cast<long>(p.k2) * (p.m2 + p.k2 - 1);
        PolyMap tau = tension_product(F, meta);
        PolyMap tau2 = bitension_product(F, meta);
        std::string tag = "product case " + std::to_string(built);
        out.require(tau2 == tau.scaled((rat(2) * rho - rat(1)) * rat(gap)),
                    "eigen-gap proportionality, " + tag);
        out.require(tau == product_reference_tension(F, meta), "tension referee, " + tag);
        out.require(tau2 == product_reference_bitension(F, meta), "bitension referee, " + tag);
        ++built;
    }
    return out;
}

// --- criterion 5: property suites ----------------------------------------------

Outcome criterion5() {
    Outcome out;
    {
        Rng rng(1001);
        for (int i = 0; i < 200; ++i) {
            RadicalScalar a = random_radical(rng), b = random_radical(rng),
                          c = random_radical(rng);
            out.require((a + b) + c == a + (b + c) && a * b == b * a &&
                            a * (b + c) == a * b + a * c,
                        "radical axioms case " + std::to_string(i));
        }
        for (std::uint64_t n = 1; n <= 100; ++n)
            out.require(RadicalScalar::sqrt_of(n) * RadicalScalar::sqrt_of(n) ==
                            RadicalScalar(Rational(n)),
                        "sqrt(n)^2 = n at n=" + std::to_string(n));
    }
    {
        Rng rng(1002);
        for (int i = 0; i < 200; ++i) {
            int nvars = rng.range(2, 4);
            Polynomial p = random_polynomial(rng, nvars, 5, 6);
            Polynomial q = random_polynomial(rng, nvars, 3, 4);
            Polynomial gen = Polynomial::radius_sq(nvars) -
                             Polynomial::constant(nvars, RadicalScalar(1));
            out.require((p + gen * q).normal_form() == p.normal_form() &&
                            p.normal_form().normal_form() == p.normal_form(),
                        "NF ideal law case " + std::to_string(i));
        }
    }
    {
        Rng rng(1003);
        for (int i = 0; i < 200; ++i) {
            int nvars = rng.range(2, 5);
            int degree = rng.range(0, 6);
            Polynomial p = random_homogeneous(rng, nvars, degree, 5);
            out.require(radial_derivative(p) == p.scaled(RadicalScalar(degree)),
                        "Euler case " + std::to_string(i));
        }
    }
    {
        Rng rng(1004);
        for (int i = 0; i < 200; ++i) {
            int nvars = rng.range(2, 4);
            PolyMap F = random_map(rng, nvars, rng.range(1, 3), 4, 4);
            Polynomial lhs = euclidean_laplacian(grad_norm_squared(F));
            Polynomial rhs = grad_inner(F, euclidean_laplacian(F)).scaled(rat(2)) -
                             hessian_norm_squared(F).scaled(rat(2));
            out.require(lhs == rhs, "Weitzenboeck case " + std::to_string(i));
        }
    }
    {
        Rng rng(1005);
        std::vector<PolyMap> seeds = {named_form("veronese").map, circle_harmonics(2), hopf(),
                                      x_times_g(circle_harmonics(1)),
                                      named_form("final-map").map};
        int cases = 0;
        while (cases < 200) {
            const PolyMap& seed = seeds[static_cast<std::size_t>(cases) % seeds.size()];
            PolyMap F = cases < static_cast<int>(seeds.size())
                            ? seed
                            : random_orthogonal_mix(rng, seed, 4);
            SphereMapMeta meta = sphere_restriction_check(F);
            int m = meta.domain_dim();
            bool tension_zero = tension_homogeneous(F, meta).is_zero_map();
            bool laplacian_zero = euclidean_laplacian(F).is_zero_map();
            bool energy_matches = energy_density(F, meta) ==
                                  Polynomial::constant(F.nvars(), rat(m + 1));
            out.require(tension_zero == laplacian_zero && laplacian_zero == energy_matches,
                        "triple equivalence case " + std::to_string(cases));
            ++cases;
        }
    }
    {
        Rng rng(1006);
        for (int i = 0; i < 200; ++i) {
            auto [F, meta] = random_harmonic_stack(rng);
            AnalysisReport rep = classify(F, meta);
            out.require(!rep.is_harmonic || rep.is_biharmonic,
                        "harmonic-implies-biharmonic case " + std::to_string(i));
        }
    }
    return out;
}

// --- criterion 6: numeric referee -----------------------------------------------

Outcome criterion6() {
    Outcome out;
    constexpr std::uint64_t seed = 424242;
    constexpr int points = 200;
    constexpr double tol = 1e-9;

    // symbolically-zero fields stay below tol; nonzero verdicts are witnessed
    struct Case {
        std::string name;
        PolyMap field;
        SphereMapMeta meta;
        bool zero;
    };
    std::vector<Case> cases;
    {
        GalleryEntry v = named_form("veronese");
        cases.push_back({"tension(veronese)", tension_homogeneous(v.map, v.meta), v.meta, true});
        cases.push_back({"bitension(veronese)", bitension_homogeneous(v.map, v.meta), v.meta,
                         true});
        auto [D, dm] = diagonal_sum(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
        cases.push_back({"bitension(diag circles 1/2)", bitension_diagonal(D, dm), dm, true});
        cases.push_back({"tension(diag circles 1/2)", tension_diagonal(D, dm), dm, false});
        auto [M, mm] = diagonal_stack(named_form("quad-f1").map, named_form("quart-f2").map);
        cases.push_back({"bitension(mixed)", bitension_diagonal(M, mm), mm, true});
        cases.push_back({"tension(mixed)", tension_diagonal(M, mm), mm, false});
        for (int k = 1; k <= 4; ++k) {
            PolyMap F = x_times_g(circle_harmonics(k));
            SphereMapMeta meta = sphere_restriction_check(F);
            cases.push_back({"bitension(xg circle " + std::to_string(k) + ")",
                             bitension_homogeneous(F, meta), meta, true});
            cases.push_back({"tension(xg circle " + std::to_string(k) + ")",
                             tension_homogeneous(F, meta), meta, false});
        }
        auto [P, pm] = product_map(circle_harmonics(1), circle_harmonics(2), rat(1, 2));
        cases.push_back({"bitension(product circles 1/2)", bitension_product(P, pm), pm, true});
        cases.push_back({"tension(product circles 1/2)", tension_product(P, pm), pm, false});
    }
    for (const auto& c : cases) {
        SampleSet samples = sample_for(c.meta, points, seed);
        auto rep = numeric_zero_check(c.field, samples, tol);
        if (c.zero) {
            out.require(rep.pass, c.name + " residual " + std::to_string(rep.max_abs));
        } else {
            out.require(rep.max_abs > 1e-6, c.name + " witness " + std::to_string(rep.max_abs));
        }
    }

    // derivative referees
    {
        SampleSet s2 = sample_sphere(2, 50, seed);
        out.require(finite_diff_check(grad_norm_squared(named_form("veronese").map), s2).pass,
                    "finite differences on |d(veronese)|^2");
        out.require(finite_diff_laplacian_check(named_form("cck3").map, s2).pass,
                    "Laplacian stencil on the cubic eigenmap");
        auto [M, mm] = diagonal_stack(named_form("quad-f1").map, named_form("quart-f2").map);
        SampleSet s3 = sample_sphere(3, 50, seed);
        out.require(finite_diff_check(grad_norm_squared(M), s3).pass,
                    "finite differences on the mixed energy");
        Rng rng(2024);
        for (int i = 0; i < 10; ++i) {
            Polynomial p = random_polynomial(rng, 4, 5, 5);
            out.require(finite_diff_check(p, s3).pass,
                        "finite differences on random polynomial " + std::to_string(i));
        }
    }

    // determinism of the generator
    out.require(sample_sphere(2, 10, 9).points == sample_sphere(2, 10, 9).points,
                "seeded regeneration");
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"criterion 1: exact reproduction battery", criterion1},
        {"criterion 2: circle-diagonal classification grid", criterion2},
        {"criterion 3: route equivalence (gallery + 52 random stacks)", criterion3},
        {"criterion 4: product constructions", criterion4},
        {"criterion 5: property suites (>= 200 cases each)", criterion5},
        {"criterion 6: numeric referee", criterion6},
    };
    bool all = true;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : entries) {
        auto c0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out.pass = false;
            out.detail << "    exception: " << ex.what() << "\n";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - c0)
                      .count();
        std::cout << (out.pass ? "PASS" : "FAIL") << "  " << e.name << "  (" << out.checks
                  << " checks, " << ms << " ms)\n";
        if (!out.pass) std::cout << out.detail.str();
        all = all && out.pass;
    }
    auto total = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " in " << total
              << " ms\n";
    return all ? 0 : 1;
}
