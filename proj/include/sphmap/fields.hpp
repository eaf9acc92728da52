#pragma once

/*
 * Tension and bitension engines.
 *
 * Every map kind gets two independent symbolic routes:
 *   - a specialized closed-form route (the per-kind formulas), and
 *   - a general route built only from the composition formula: the intrinsic
 *     sphere Laplacian applied componentwise plus curvature-correction terms.
 * classify() runs both and records whether they agree; a disagreement is an
 * implementation bug by contract and surfaces as RouteDisagreement downstream.
 *
 * All returned fields are normal-form reduced; zero tests are NF-then-compare.
 */

#include <optional>

#include "sphmap/polymap.hpp"

namespace sphmap {

struct BitensionWorksheet {
    PolyMap tau;                  // tau(Phi), ambient representative
    Polynomial tau_norm_sq;       // |tau(Phi)|^2
    Polynomial dphi_norm_sq;      // |dPhi|^2
    Polynomial laplacian_energy;  // Delta |dPhi|^2 via the sphere Laplacian
    Polynomial div_theta;         // div theta#
    PolyMap push_grad;            // dPhi(grad |dPhi|^2), tangential representation
};

struct AnalysisReport {
    SphereMapMeta meta;
    PolyMap tension;
    PolyMap bitension;
    bool is_harmonic = false;
    bool is_biharmonic = false;
    bool is_proper_biharmonic = false;
    Polynomial energy;
    bool route_agreement = true;
    std::optional<BitensionWorksheet> worksheet;

    AnalysisReport(PolyMap t, PolyMap b, Polynomial e)
        : tension(std::move(t)), bitension(std::move(b)), energy(std::move(e)) {}
};

// Specialized routes, one per kind.  WrongKind when metadata does not match.
PolyMap tension_homogeneous(const PolyMap& F, const SphereMapMeta& meta);
PolyMap bitension_homogeneous(const PolyMap& F, const SphereMapMeta& meta);
PolyMap tension_diagonal(const PolyMap& F, const SphereMapMeta& meta);
PolyMap bitension_diagonal(const PolyMap& F, const SphereMapMeta& meta);

// Product closed forms; factors must be harmonic (FactorsNotHarmonic otherwise).
PolyMap tension_product(const PolyMap& F, const SphereMapMeta& meta);
PolyMap bitension_product(const PolyMap& F, const SphereMapMeta& meta);

// General route for homogeneous and diagonal maps (WrongKind for products).
PolyMap tension_general(const PolyMap& F, const SphereMapMeta& meta);
std::pair<PolyMap, BitensionWorksheet> bitension_general(const PolyMap& F,
                                                         const SphereMapMeta& meta);

AnalysisReport classify(const PolyMap& F, const SphereMapMeta& meta);
AnalysisReport classify(const PolyMap& F, const RestrictionHint& hint = {});

// Quadratic-form identity: returns the NF left side and the expected constant
// 4 r^2 (m+1)(m+3); the caller asserts equality.
std::pair<Polynomial, RadicalScalar> quadratic_identity_check(const PolyMap& F,
                                                              const SphereMapMeta& meta);

struct HarmonicIdentityReport {
    Polynomial laplacian_of_energy;       // NF of Delta0 |d0F|^2
    RadicalScalar laplacian_closed_form;  // -2 r^2 k(k-1)(m+2k-1)(m+2k-3)
    Polynomial hessian_sq;                // NF of |n0 d0 F|^2
    RadicalScalar hessian_closed_form;    // r^2 k(k-1)(m^2-4m+3+4k(m-2)+4k^2)
    bool laplacian_matches = false;
    bool hessian_matches = false;
};

// Closed-form checks for harmonic forms; NotHarmonicForm when Delta0 F != 0.
HarmonicIdentityReport harmonic_identities_check(const PolyMap& F, const SphereMapMeta& meta);

// Strips exact |x|^2 factors common to all components; returns the minimal
// representative of the restriction class and the number of strips.
std::pair<PolyMap, int> minimality_check(const PolyMap& F);

struct SliceReport {
    bool in_slice = false;
    RadicalScalar constant;
};

// True iff <Phi, axis> is constant on the sphere, i.e. the image lies in the
// small hypersphere cut out by the hyperplane orthogonal to the unit axis.
SliceReport small_hypersphere_check(const PolyMap& F, const std::vector<RadicalScalar>& axis);

}  // namespace sphmap
