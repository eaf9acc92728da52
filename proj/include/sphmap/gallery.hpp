#pragma once

/*
 * The map gallery and the construction schemes that feed the analyzers.
 * Every constructor re-verifies its output through sphere_restriction_check,
 * so a GalleryEntry always carries trustworthy metadata.
 */

#include <string>

#include "sphmap/polymap.hpp"

namespace sphmap {

struct GalleryEntry {
    std::string name;
    PolyMap map;
    SphereMapMeta meta;
    std::string provenance;
};

// G_k = (Re z^k, Im z^k) on two variables; harmonic with |G_k|^2 = |x|^{2k}.
PolyMap circle_harmonics(int k);

// Known names: veronese, cck3, quad-f1, quart-f2, final-map, circle:<k>.
GalleryEntry named_form(const std::string& name);
std::vector<std::string> gallery_names();

// F = (x1 G, x2 G, ..., x_{m+1} G); a degree k+1 form with G's squared radius.
PolyMap x_times_g(const PolyMap& G);

// Scales two unit forms on the same domain by sqrt(r1^2), sqrt(1-r1^2) and
// stacks them.  r1_sq must be a rational in (0,1) whose square root stays in
// the radical ring; otherwise RadiusNotRepresentable.
std::pair<PolyMap, SphereMapMeta> diagonal_sum(const PolyMap& F1, const PolyMap& F2,
                                               const RadicalScalar& r1_sq);

// Stacks two already-scaled forms on the same domain; radii are read off the
// factors and must sum to one.
std::pair<PolyMap, SphereMapMeta> diagonal_stack(const PolyMap& F1, const PolyMap& F2);

// Same scaling as diagonal_sum but the factors get disjoint variable blocks.
std::pair<PolyMap, SphereMapMeta> product_map(const PolyMap& F1, const PolyMap& F2,
                                              const RadicalScalar& r1_sq);

// |x|^{2p} * F: same restriction class, degree + 2p.
PolyMap radial_multiple(const PolyMap& F, int p);

// The 4x4 isometry that turns the curve family (x P_k, x Q_k, y P_k, y Q_k)
// into (1/sqrt2)(|z|^2 z^{k-1}, z^{k+1}); rows scaled by 1/sqrt(2).
std::vector<std::vector<RadicalScalar>> curve_isometry();

// Applies curve_isometry and reorders components to (Re, Im, Re, Im) of
// (1/sqrt2)(|z|^2 z^{k-1}, z^{k+1}).
PolyMap t_transform_curve(const PolyMap& F);

}  // namespace sphmap
