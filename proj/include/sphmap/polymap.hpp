#pragma once

/*
 * Vector-valued polynomial maps R^{m+1} -> R^{n+1} and the flat differential
 * operators acting on them.  Sign convention throughout: the Laplacian is the
 * geometer's rough Laplacian, i.e. the NEGATIVE of the sum of pure second
 * partials.
 */

#include <optional>
#include <variant>
#include <vector>

#include "sphmap/polynomial.hpp"

namespace sphmap {

class PolyMap {
public:
    explicit PolyMap(std::vector<Polynomial> components);
    static PolyMap zero(int nvars, int ncomponents);
    static PolyMap identity(int nvars);  // (x1, ..., xN)

    int nvars() const { return nvars_; }
    int size() const { return static_cast<int>(components_.size()); }
    const Polynomial& operator[](int i) const { return components_[i]; }
    const std::vector<Polynomial>& components() const { return components_; }

    bool operator==(const PolyMap& other) const;
    bool operator!=(const PolyMap& other) const { return !(*this == other); }

    PolyMap operator+(const PolyMap& other) const;
    PolyMap operator-(const PolyMap& other) const;
    PolyMap operator-() const;
    PolyMap scaled(const RadicalScalar& c) const;
    PolyMap scaled(const Polynomial& h) const;  // componentwise h * F

    PolyMap normal_form() const;
    PolyMap normal_form(const std::vector<std::pair<int, int>>& blocks) const;
    bool is_zero_map() const;             // all components identically zero
    bool vanishes_on_sphere() const;      // all components zero after NF

    std::vector<double> evaluate(const std::vector<double>& point) const;

private:
    int nvars_;
    std::vector<Polynomial> components_;
};

// --- flat differential operators --------------------------------------------

// Delta0 F = -sum_i d^2F/dx_i^2, componentwise (rough-Laplacian sign).
PolyMap euclidean_laplacian(const PolyMap& F);
Polynomial euclidean_laplacian(const Polynomial& p);

// rbar P = sum_i x_i dP/dx_i; equals k*P on homogeneous P of degree k.
Polynomial radial_derivative(const Polynomial& p);
PolyMap radial_derivative(const PolyMap& F);

// Block-restricted variants for product domains: derivatives over [lo, hi) only.
Polynomial euclidean_laplacian_block(const Polynomial& p, int lo, int hi);
Polynomial radial_derivative_block(const Polynomial& p, int lo, int hi);

// |d0 F|^2 = sum_{i,alpha} (dF_alpha/dx_i)^2
Polynomial grad_norm_squared(const PolyMap& F);

// |n0 d0 F|^2: Frobenius norm of all Hessians, mixed partials counted twice.
Polynomial hessian_norm_squared(const PolyMap& F);

PolyMap gradient(const Polynomial& h);

// d0F applied to the Euclidean gradient of h: components sum_i dF_a/dx_i * dh/dx_i.
PolyMap push_gradient(const PolyMap& F, const Polynomial& h);

// <d0F, d0G> = sum_{i,alpha} dF_a/dx_i * dG_a/dx_i
Polynomial grad_inner(const PolyMap& F, const PolyMap& G);

// sum_alpha F_alpha * G_alpha
Polynomial pointwise_inner(const PolyMap& F, const PolyMap& G);
Polynomial norm_squared(const PolyMap& F);

// Ambient representative of the intrinsic sphere Laplacian of p's restriction
// to S^m: L[p] = Delta0 p + (m-1) rbar p + rbar(rbar p).  Meaningful after NF.
Polynomial sphere_laplacian(const Polynomial& p, int m);
PolyMap sphere_laplacian(const PolyMap& F, int m);
Polynomial sphere_laplacian_block(const Polynomial& p, int lo, int hi);

// A * F where A is a matrix of radical scalars acting on the component vector.
PolyMap apply_linear_map(const PolyMap& F, const std::vector<std::vector<RadicalScalar>>& A);

// --- verified sphere-map metadata --------------------------------------------

struct HomogeneousMeta {
    int k = 0;
    RadicalScalar r_sq;
};

struct DiagonalMeta {
    int k1 = 0, k2 = 0;
    RadicalScalar r1_sq, r2_sq;
    int split = 0;  // component index separating F1 from F2
};

struct ProductMeta {
    int m1 = 0, m2 = 0;
    int k1 = 0, k2 = 0;
    RadicalScalar r1_sq, r2_sq;
    int split = 0;  // component split; variable split is m1+1
};

struct SphereMapMeta {
    std::variant<HomogeneousMeta, DiagonalMeta, ProductMeta> kind;
    int nvars = 0;

    bool is_homogeneous() const { return std::holds_alternative<HomogeneousMeta>(kind); }
    bool is_diagonal() const { return std::holds_alternative<DiagonalMeta>(kind); }
    bool is_product() const { return std::holds_alternative<ProductMeta>(kind); }
    const HomogeneousMeta& homogeneous() const { return std::get<HomogeneousMeta>(kind); }
    const DiagonalMeta& diagonal() const { return std::get<DiagonalMeta>(kind); }
    const ProductMeta& product() const { return std::get<ProductMeta>(kind); }

    // Domain dimension: m for S^m, m1+m2 for products.
    int domain_dim() const { return nvars - (is_product() ? 2 : 1); }
    std::vector<std::pair<int, int>> variable_blocks() const;
};

struct RestrictionHint {
    enum class Kind { Auto, Homogeneous, Diagonal, Product } kind = Kind::Auto;
    int component_split = -1;
    int variable_split = -1;  // products only: first variable of the second block
};

// Verifies the exact polynomial identities (|F|^2 = r^2 |x|^{2k} per block,
// radii summing to one for diagonal/product) and returns verified metadata.
SphereMapMeta sphere_restriction_check(const PolyMap& F, const RestrictionHint& hint = {});

// 1/2 |dPhi|^2 as an NF polynomial.
Polynomial energy_density(const PolyMap& F, const SphereMapMeta& meta);

}  // namespace sphmap
