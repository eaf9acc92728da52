#pragma once

/*
 * Floating-point referee for the symbolic layer: deterministic sphere
 * sampling, pointwise zero checks, and finite-difference cross-checks of
 * symbolic derivatives.
 *
 * Sampling is reproducible bit for bit: a 64-bit linear congruential
 * generator (Knuth's MMIX multiplier) feeds Box-Muller Gaussians which are
 * normalized per sphere block.
 */

#include <cstdint>
#include <vector>

#include "sphmap/polymap.hpp"

namespace sphmap {

struct SampleSet {
    std::uint64_t seed = 0;
    std::vector<int> block_sizes;  // variables per sphere block; one block unless product
    std::vector<std::vector<double>> points;
};

SampleSet sample_sphere(int m, int count, std::uint64_t seed);
SampleSet sample_product_sphere(int m1, int m2, int count, std::uint64_t seed);
SampleSet sample_for(const SphereMapMeta& meta, int count, std::uint64_t seed);

struct ZeroCheckReport {
    double max_abs = 0.0;
    double tol = 0.0;
    bool pass = false;
};

ZeroCheckReport numeric_zero_check(const PolyMap& F, const SampleSet& samples, double tol);
ZeroCheckReport numeric_zero_check(const Polynomial& p, const SampleSet& samples, double tol);

struct DiffCheckReport {
    double max_rel_err = 0.0;
    bool pass = false;
};

// Central differences (step 1e-5) against every symbolic partial derivative;
// passes when the relative error stays within 1e-4 (absolute 1e-6 near zeros).
DiffCheckReport finite_diff_check(const Polynomial& p, const SampleSet& samples);

// Second-order stencil against the symbolic Laplacian, componentwise.
DiffCheckReport finite_diff_laplacian_check(const PolyMap& F, const SampleSet& samples);

}  // namespace sphmap
