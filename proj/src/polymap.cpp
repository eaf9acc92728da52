#include "sphmap/polymap.hpp"

namespace sphmap {

PolyMap::PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) throw DimensionMismatch("a map needs at least one component");
    nvars_ = components_.front().nvars();
    for (const auto& p : components_)
        if (p.nvars() != nvars_)
            throw DimensionMismatch("map components live in different variable counts");
}

PolyMap PolyMap::zero(int nvars, int ncomponents) {
    return PolyMap(std::vector<Polynomial>(ncomponents, Polynomial(nvars)));
}

PolyMap PolyMap::identity(int nvars) {
    std::vector<Polynomial> comps;
    comps.reserve(nvars);
    for (int i = 0; i < nvars; ++i) comps.push_back(Polynomial::variable(nvars, i));
    return PolyMap(std::move(comps));
}

bool PolyMap::operator==(const PolyMap& other) const {
    return nvars_ == other.nvars_ && components_ == other.components_;
}

PolyMap PolyMap::operator+(const PolyMap& other) const {
    if (size() != other.size() || nvars_ != other.nvars_)
        throw DimensionMismatch("map shapes do not match");
    std::vector<Polynomial> comps;
    comps.reserve(components_.size());
    for (int i = 0; i < size(); ++i) comps.push_back(components_[i] + other.components_[i]);
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::operator-(const PolyMap& other) const {
    return *this + (-other);
}

PolyMap PolyMap::operator-() const {
    std::vector<Polynomial> comps;
    comps.reserve(components_.size());
    for (const auto& p : components_) comps.push_back(-p);
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::scaled(const RadicalScalar& c) const {
    std::vector<Polynomial> comps;
    comps.reserve(components_.size());
    for (const auto& p : components_) comps.push_back(p.scaled(c));
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::scaled(const Polynomial& h) const {
    std::vector<Polynomial> comps;
    comps.reserve(components_.size());
    for (const auto& p : components_) comps.push_back(p * h);
    return PolyMap(std::move(comps));
}

PolyMap PolyMap::normal_form() const {
    return normal_form({{0, nvars_}});
}

PolyMap PolyMap::normal_form(const std::vector<std::pair<int, int>>& blocks) const {
    std::vector<Polynomial> comps;
    comps.reserve(components_.size());
    for (const auto& p : components_) comps.push_back(p.normal_form(blocks));
    return PolyMap(std::move(comps));
}

bool PolyMap::is_zero_map() const {
    for (const auto& p : components_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMap::vanishes_on_sphere() const {
    for (const auto& p : components_)
        if (!p.normal_form().is_zero()) return false;
    return true;
}

std::vector<double> PolyMap::evaluate(const std::vector<double>& point) const {
    std::vector<double> out;
    out.reserve(components_.size());
    for (const auto& p : components_) out.push_back(p.evaluate(point));
    return out;
}

// --- flat operators ----------------------------------------------------------

Polynomial euclidean_laplacian(const Polynomial& p) {
    return euclidean_laplacian_block(p, 0, p.nvars());
}

Polynomial euclidean_laplacian_block(const Polynomial& p, int lo, int hi) {
    Polynomial acc(p.nvars());
    for (int i = lo; i < hi; ++i)
        acc -= p.partial_derivative(i).partial_derivative(i);
    return acc;
}

PolyMap euclidean_laplacian(const PolyMap& F) {
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (const auto& p : F.components()) comps.push_back(euclidean_laplacian(p));
    return PolyMap(std::move(comps));
}

Polynomial radial_derivative(const Polynomial& p) {
    return radial_derivative_block(p, 0, p.nvars());
}

Polynomial radial_derivative_block(const Polynomial& p, int lo, int hi) {
    Polynomial acc(p.nvars());
    for (int i = lo; i < hi; ++i)
        acc += Polynomial::variable(p.nvars(), i) * p.partial_derivative(i);
    return acc;
}

PolyMap radial_derivative(const PolyMap& F) {
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (const auto& p : F.components()) comps.push_back(radial_derivative(p));
    return PolyMap(std::move(comps));
}

Polynomial grad_norm_squared(const PolyMap& F) {
    Polynomial acc(F.nvars());
    for (const auto& p : F.components())
        for (int i = 0; i < F.nvars(); ++i) {
            Polynomial d = p.partial_derivative(i);
            acc += d * d;
        }
    return acc;
}

Polynomial hessian_norm_squared(const PolyMap& F) {
    Polynomial acc(F.nvars());
    for (const auto& p : F.components())
        for (int i = 0; i < F.nvars(); ++i) {
            Polynomial di = p.partial_derivative(i);
            for (int j = 0; j < F.nvars(); ++j) {
                Polynomial dij = di.partial_derivative(j);
                acc += dij * dij;
            }
        }
    return acc;
}

PolyMap gradient(const Polynomial& h) {
    std::vector<Polynomial> comps;
    comps.reserve(h.nvars());
    for (int i = 0; i < h.nvars(); ++i) comps.push_back(h.partial_derivative(i));
    return PolyMap(std::move(comps));
}

PolyMap push_gradient(const PolyMap& F, const Polynomial& h) {
    if (F.nvars() != h.nvars())
        throw DimensionMismatch("push_gradient: variable counts differ");
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (const auto& p : F.components()) {
        Polynomial acc(F.nvars());
        for (int i = 0; i < F.nvars(); ++i)
            acc += p.partial_derivative(i) * h.partial_derivative(i);
        comps.push_back(std::move(acc));
    }
    return PolyMap(std::move(comps));
}

Polynomial grad_inner(const PolyMap& F, const PolyMap& G) {
    if (F.size() != G.size() || F.nvars() != G.nvars())
        throw DimensionMismatch("grad_inner: map shapes differ");
    Polynomial acc(F.nvars());
    for (int a = 0; a < F.size(); ++a)
        for (int i = 0; i < F.nvars(); ++i)
            acc += F[a].partial_derivative(i) * G[a].partial_derivative(i);
    return acc;
}

Polynomial pointwise_inner(const PolyMap& F, const PolyMap& G) {
    if (F.size() != G.size() || F.nvars() != G.nvars())
        throw DimensionMismatch("pointwise_inner: map shapes differ");
    Polynomial acc(F.nvars());
    for (int a = 0; a < F.size(); ++a) acc += F[a] * G[a];
    return acc;
}

Polynomial norm_squared(const PolyMap& F) {
    return pointwise_inner(F, F);
}

Polynomial sphere_laplacian(const Polynomial& p, int m) {
    if (p.nvars() != m + 1)
        throw DimensionMismatch("sphere_laplacian: polynomial must have m+1 variables");
    Polynomial rp = radial_derivative(p);
    return euclidean_laplacian(p) + rp.scaled(RadicalScalar(m - 1)) + radial_derivative(rp);
}

PolyMap sphere_laplacian(const PolyMap& F, int m) {
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (const auto& p : F.components()) comps.push_back(sphere_laplacian(p, m));
    return PolyMap(std::move(comps));
}

Polynomial sphere_laplacian_block(const Polynomial& p, int lo, int hi) {
    int m = hi - lo - 1;
    Polynomial rp = radial_derivative_block(p, lo, hi);
    return euclidean_laplacian_block(p, lo, hi) + rp.scaled(RadicalScalar(m - 1)) +
           radial_derivative_block(rp, lo, hi);
}

PolyMap apply_linear_map(const PolyMap& F, const std::vector<std::vector<RadicalScalar>>& A) {
    std::vector<Polynomial> comps;
    comps.reserve(A.size());
    for (const auto& row : A) {
        if (static_cast<int>(row.size()) != F.size())
            throw DimensionMismatch("matrix column count does not match component count");
        Polynomial acc(F.nvars());
        for (int j = 0; j < F.size(); ++j) acc += F[j].scaled(row[j]);
        comps.push_back(std::move(acc));
    }
    return PolyMap(std::move(comps));
}

// --- sphere-restriction verification -----------------------------------------

std::vector<std::pair<int, int>> SphereMapMeta::variable_blocks() const {
    if (is_product()) {
        const auto& p = product();
        return {{0, p.m1 + 1}, {p.m1 + 1, nvars}};
    }
    return {{0, nvars}};
}

namespace {

// |F_block|^2 must equal r^2 * (sum of block x_i^2)^k exactly; returns (k, r^2).
std::pair<int, RadicalScalar> detect_form(const PolyMap& F, int comp_lo, int comp_hi,
                                          int var_lo, int var_hi) {
    Polynomial s(F.nvars());
    for (int a = comp_lo; a < comp_hi; ++a) s += F[a] * F[a];
    if (s.is_zero()) throw NotASphereMap("|F|^2 is identically zero");
    auto deg = s.homogeneous_degree();
    if (!deg || *deg % 2 != 0)
        throw NotASphereMap("|F|^2 is not homogeneous of even degree");
    int k = *deg / 2;
    Polynomial radius = Polynomial::radius_sq(F.nvars(), var_lo, var_hi);
    Polynomial rest = s;
    for (int i = 0; i < k; ++i) {
        auto q = rest.divide_exact(radius);
        if (!q) throw NotASphereMap("|F|^2 is not a multiple of |x|^{2k}");
        rest = *q;
    }
    if (!rest.is_constant())
        throw NotASphereMap("|F|^2 / |x|^{2k} is not constant");
    RadicalScalar r_sq = rest.constant_value();
    if (r_sq.to_double() <= 0.0) throw NotASphereMap("squared radius is not positive");
    return {k, r_sq};
}

bool uses_only_vars(const Polynomial& p, int lo, int hi) {
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < static_cast<int>(m.size()); ++i)
            if (m[i] != 0 && (i < lo || i >= hi)) return false;
    return true;
}

}  // namespace

SphereMapMeta sphere_restriction_check(const PolyMap& F, const RestrictionHint& hint) {
    SphereMapMeta meta;
    meta.nvars = F.nvars();
    using Kind = RestrictionHint::Kind;

    if (hint.kind == Kind::Auto || hint.kind == Kind::Homogeneous) {
        auto [k, r_sq] = detect_form(F, 0, F.size(), 0, F.nvars());
        meta.kind = HomogeneousMeta{k, r_sq};
        return meta;
    }

    if (hint.kind == Kind::Diagonal) {
        int split = hint.component_split;
        if (split <= 0 || split >= F.size())
            throw NotASphereMap("diagonal metadata needs a valid component split");
        auto [k1, r1_sq] = detect_form(F, 0, split, 0, F.nvars());
        auto [k2, r2_sq] = detect_form(F, split, F.size(), 0, F.nvars());
        if (r1_sq + r2_sq != RadicalScalar(1))
            throw RadiiDoNotSumToOne("r1^2 + r2^2 = " + (r1_sq + r2_sq).str());
        if (!(norm_squared(F) - Polynomial::constant(F.nvars(), RadicalScalar(1)))
                 .normal_form()
                 .is_zero())
            throw NotASphereMap("|F|^2 != 1 on the sphere");
        meta.kind = DiagonalMeta{k1, k2, r1_sq, r2_sq, split};
        return meta;
    }

    // Product: factors depend on disjoint variable blocks.
    int split = hint.component_split;
    int vsplit = hint.variable_split;
    if (split <= 0 || split >= F.size() || vsplit <= 0 || vsplit >= F.nvars())
        throw NotASphereMap("product metadata needs component and variable splits");
    for (int a = 0; a < split; ++a)
        if (!uses_only_vars(F[a], 0, vsplit))
            throw NotASphereMap("first factor uses variables of the second block");
    for (int a = split; a < F.size(); ++a)
        if (!uses_only_vars(F[a], vsplit, F.nvars()))
            throw NotASphereMap("second factor uses variables of the first block");
    auto [k1, r1_sq] = detect_form(F, 0, split, 0, vsplit);
    auto [k2, r2_sq] = detect_form(F, split, F.size(), vsplit, F.nvars());
    if (r1_sq + r2_sq != RadicalScalar(1))
        throw RadiiDoNotSumToOne("r1^2 + r2^2 = " + (r1_sq + r2_sq).str());
    meta.kind = ProductMeta{vsplit - 1, F.nvars() - vsplit - 1, k1, k2, r1_sq, r2_sq, split};
    return meta;
}

Polynomial energy_density(const PolyMap& F, const SphereMapMeta& meta) {
    Polynomial g = grad_norm_squared(F);
    RadicalScalar half(Rational(1, 2));
    if (meta.is_homogeneous()) {
        const auto& h = meta.homogeneous();
        RadicalScalar ksq_rsq = RadicalScalar(h.k * h.k) * h.r_sq;
        return (g - Polynomial::constant(F.nvars(), ksq_rsq)).normal_form().scaled(half);
    }
    const auto blocks = meta.variable_blocks();
    int k1, k2;
    RadicalScalar r1_sq, r2_sq;
    if (meta.is_diagonal()) {
        const auto& d = meta.diagonal();
        k1 = d.k1; k2 = d.k2; r1_sq = d.r1_sq; r2_sq = d.r2_sq;
    } else {
        const auto& p = meta.product();
        k1 = p.k1; k2 = p.k2; r1_sq = p.r1_sq; r2_sq = p.r2_sq;
    }
    RadicalScalar c = RadicalScalar(k1 * k1) * r1_sq + RadicalScalar(k2 * k2) * r2_sq;
    return (g - Polynomial::constant(F.nvars(), c)).normal_form(blocks).scaled(half);
}

}  // namespace sphmap
