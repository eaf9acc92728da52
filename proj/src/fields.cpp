#include "sphmap/fields.hpp"

namespace sphmap {

namespace {

RadicalScalar rat(long num, long den = 1) {
    return RadicalScalar(Rational(num, den));
}

Polynomial constant(int nvars, const RadicalScalar& c) {
    return Polynomial::constant(nvars, c);
}

// (h1 * F1-block || h2 * F2-block)
PolyMap blockwise_scaled(const PolyMap& F, int split, const Polynomial& h1,
                         const Polynomial& h2) {
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (int a = 0; a < F.size(); ++a) comps.push_back((a < split ? h1 : h2) * F[a]);
    return PolyMap(std::move(comps));
}

PolyMap block_map(const PolyMap& F, int lo, int hi) {
    std::vector<Polynomial> comps(F.components().begin() + lo, F.components().begin() + hi);
    return PolyMap(std::move(comps));
}

}  // namespace

PolyMap tension_homogeneous(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_homogeneous()) throw WrongKind("tension_homogeneous needs homogeneous metadata");
    const auto& h = meta.homogeneous();
    int m = meta.domain_dim();
    RadicalScalar inv_r2 = h.r_sq.inverted();
    Polynomial coeff = grad_norm_squared(F).scaled(inv_r2) -
                       constant(F.nvars(), rat(h.k * (m + 2 * h.k - 1)));
    return (-euclidean_laplacian(F) + F.scaled(coeff)).normal_form();
}

PolyMap bitension_homogeneous(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_homogeneous()) throw WrongKind("bitension_homogeneous needs homogeneous metadata");
    const auto& hm = meta.homogeneous();
    int m = meta.domain_dim();
    int k = hm.k;
    RadicalScalar inv_r2 = hm.r_sq.inverted();

    Polynomial dF_sq = grad_norm_squared(F);
    PolyMap lap = euclidean_laplacian(F);

    PolyMap term1 = euclidean_laplacian(lap);

    Polynomial c2 = constant(F.nvars(), rat(2 * (m * k + 2 * k * k - 3 * k - m + 3))) -
                    dF_sq.scaled(inv_r2 * rat(2));
    PolyMap term2 = lap.scaled(c2);

    Polynomial phi_coeff =
        euclidean_laplacian(dF_sq).scaled(rat(-2)) - hessian_norm_squared(F).scaled(rat(2)) +
        norm_squared(lap) -
        dF_sq.scaled(rat(2 * (2 * m * k + 6 * k * k - 6 * k - m + 3))) +
        (dF_sq * dF_sq).scaled(inv_r2 * rat(2)) +
        constant(F.nvars(), hm.r_sq * rat(4 * k * k * (m + 2 * k - 1)));
    PolyMap term3 = F.scaled(phi_coeff.scaled(inv_r2));

    PolyMap term4 = push_gradient(F, dF_sq).scaled(inv_r2 * rat(2));

    return (term1 + term2 + term3 + term4).normal_form();
}

PolyMap tension_diagonal(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_diagonal()) throw WrongKind("tension_diagonal needs diagonal metadata");
    const auto& d = meta.diagonal();
    int m = meta.domain_dim();
    RadicalScalar ksq = RadicalScalar(d.k1 * d.k1) * d.r1_sq + RadicalScalar(d.k2 * d.k2) * d.r2_sq;
    Polynomial base = grad_norm_squared(F) - constant(F.nvars(), ksq);
    Polynomial c1 = base + constant(F.nvars(), rat(d.k1 * (1 - m - d.k1)));
    Polynomial c2 = base + constant(F.nvars(), rat(d.k2 * (1 - m - d.k2)));
    return (-euclidean_laplacian(F) + blockwise_scaled(F, d.split, c1, c2)).normal_form();
}

PolyMap bitension_diagonal(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_diagonal()) throw WrongKind("bitension_diagonal needs diagonal metadata");
    const auto& d = meta.diagonal();
    int m = meta.domain_dim();
    int k1 = d.k1, k2 = d.k2;
    int nv = F.nvars();

    PolyMap F1 = block_map(F, 0, d.split);
    PolyMap F2 = block_map(F, d.split, F.size());
    Polynomial dF1_sq = grad_norm_squared(F1);
    Polynomial dF2_sq = grad_norm_squared(F2);
    Polynomial dF_sq = dF1_sq + dF2_sq;
    PolyMap lap = euclidean_laplacian(F);
    PolyMap lap1 = block_map(lap, 0, d.split);
    PolyMap lap2 = block_map(lap, d.split, F.size());

    RadicalScalar ksq = RadicalScalar(k1 * k1) * d.r1_sq + RadicalScalar(k2 * k2) * d.r2_sq;
    Polynomial excess = dF_sq - constant(nv, ksq);

    // Delta0 Delta0 F  +  (2(mk_i+k_i^2-3k_i-m+3) Delta0 F_i + k_i^2(m+k_i-1)^2 Phi_i)
    PolyMap out = euclidean_laplacian(lap);
    {
        auto eig = [&](int k) { return rat(2 * (m * k + k * k - 3 * k - m + 3)); };
        auto sq = [&](int k) {
            long e = static_cast<long>(k) * k * (m + k - 1) * (m + k - 1);
            return rat(e);
        };
        std::vector<Polynomial> comps;
        comps.reserve(F.size());
        for (int a = 0; a < F.size(); ++a) {
            int k = a < d.split ? k1 : k2;
            comps.push_back(lap[a].scaled(eig(k)) + F[a].scaled(sq(k)));
        }
        out = out + PolyMap(std::move(comps));
    }

    // 2 (|d0F|^2 - k1^2 r1^2 - k2^2 r2^2) (-Delta0 F_i + k_i(1-m-k_i) Phi_i)
    {
        Polynomial two_excess = excess.scaled(rat(2));
        std::vector<Polynomial> comps;
        comps.reserve(F.size());
        for (int a = 0; a < F.size(); ++a) {
            int k = a < d.split ? k1 : k2;
            comps.push_back(two_excess * (F[a].scaled(rat(k * (1 - m - k))) - lap[a]));
        }
        out = out + PolyMap(std::move(comps));
    }

    // scalar Phi coefficient; C_k multiplies -r_k^2 k^2
    {
        auto quartic = [&](int k) {
            long c = static_cast<long>(m) * m + 4L * m * k + 5L * k * k - 6L * m - 12L * k + 5;
            return c;
        };
        Polynomial phi_coeff =
            euclidean_laplacian(dF_sq).scaled(rat(-2)) - hessian_norm_squared(F).scaled(rat(2)) +
            norm_squared(lap) + dF1_sq.scaled(rat(2 * (m + 2 * k1 - 3) - 2 * k1 * (m + k1 - 1))) +
            dF2_sq.scaled(rat(2 * (m + 2 * k2 - 3) - 2 * k2 * (m + k2 - 1))) -
            constant(nv, d.r1_sq * rat(static_cast<long>(k1) * k1 * quartic(k1))) -
            constant(nv, d.r2_sq * rat(static_cast<long>(k2) * k2 * quartic(k2))) +
            (excess * excess).scaled(rat(2));
        out = out + F.scaled(phi_coeff);
    }

    // 2 d0F(grad0 |d0F|^2)  -  4((k1-1)|d0F1|^2 + (k2-1)|d0F2|^2)(k1 Phi_1, k2 Phi_2)
    out = out + push_gradient(F, dF_sq).scaled(rat(2));
    {
        Polynomial radial = dF1_sq.scaled(rat(-4 * (k1 - 1))) + dF2_sq.scaled(rat(-4 * (k2 - 1)));
        out = out + blockwise_scaled(F, d.split, radial.scaled(rat(k1)), radial.scaled(rat(k2)));
    }

    return out.normal_form();
}

PolyMap tension_product(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_product()) throw WrongKind("tension_product needs product metadata");
    const auto& p = meta.product();
    if (!euclidean_laplacian(F).is_zero_map())
        throw FactorsNotHarmonic("product closed forms need harmonic factors");
    long nu1 = static_cast<long>(p.k1) * (p.m1 + p.k1 - 1);
    long nu2 = static_cast<long>(p.k2) * (p.m2 + p.k2 - 1);
    RadicalScalar delta = rat(nu1 - nu2);
    RadicalScalar c1 = delta * (p.r1_sq - RadicalScalar(1));
    RadicalScalar c2 = delta * p.r1_sq;
    std::vector<Polynomial> comps;
    comps.reserve(F.size());
    for (int a = 0; a < F.size(); ++a)
        comps.push_back(F[a].scaled(a < p.split ? c1 : c2));
    return PolyMap(std::move(comps)).normal_form(meta.variable_blocks());
}

PolyMap bitension_product(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_product()) throw WrongKind("bitension_product needs product metadata");
    const auto& p = meta.product();
    long nu1 = static_cast<long>(p.k1) * (p.m1 + p.k1 - 1);
    long nu2 = static_cast<long>(p.k2) * (p.m2 + p.k2 - 1);
    // tau2 = (2 r1^2 - 1)(nu1 - nu2) tau; the eigenvalue gap keeps the second
    // field tangent to the target, and both vanish together exactly when
    // r1^2 = 1/2 or nu1 = nu2
    RadicalScalar factor = (rat(2) * p.r1_sq - RadicalScalar(1)) * rat(nu1 - nu2);
    return tension_product(F, meta).scaled(factor);
}

namespace {

// tau(Phi), |dPhi|^2 and friends from the composition with the ambient
// embedding; valid for any polynomial map restricted to the unit S^m (target
// radius r enters only through the final assembly).
struct CompositionPieces {
    PolyMap tau_phi;
    Polynomial dphi_sq;
};

CompositionPieces composition_pieces(const PolyMap& F, int m) {
    CompositionPieces out{(-sphere_laplacian(F, m)).normal_form(),
                          Polynomial(F.nvars())};
    PolyMap rF = radial_derivative(F);
    out.dphi_sq = (grad_norm_squared(F) - norm_squared(rF)).normal_form();
    return out;
}

RadicalScalar target_radius_sq(const SphereMapMeta& meta) {
    // diagonal maps land in the unit sphere; homogeneous ones in S^n(r)
    return meta.is_homogeneous() ? meta.homogeneous().r_sq : RadicalScalar(1);
}

}  // namespace

PolyMap tension_general(const PolyMap& F, const SphereMapMeta& meta) {
    if (meta.is_product()) throw WrongKind("tension_general does not cover products");
    int m = meta.domain_dim();
    auto pieces = composition_pieces(F, m);
    RadicalScalar inv_r2 = target_radius_sq(meta).inverted();
    return (pieces.tau_phi + F.scaled(pieces.dphi_sq.scaled(inv_r2))).normal_form();
}

std::pair<PolyMap, BitensionWorksheet> bitension_general(const PolyMap& F,
                                                         const SphereMapMeta& meta) {
    if (meta.is_product()) throw WrongKind("bitension_general does not cover products");
    int m = meta.domain_dim();
    int nv = F.nvars();
    RadicalScalar r_sq = target_radius_sq(meta);
    RadicalScalar inv_r2 = r_sq.inverted();
    RadicalScalar inv_r4 = inv_r2 * inv_r2;

    auto pieces = composition_pieces(F, m);
    const PolyMap& T = pieces.tau_phi;
    const Polynomial& h = pieces.dphi_sq;

    PolyMap rF = radial_derivative(F);
    PolyMap rT = radial_derivative(T);

    BitensionWorksheet ws{
        T,
        norm_squared(T).normal_form(),
        h,
        sphere_laplacian(h, m).normal_form(),
        Polynomial(nv),
        PolyMap::zero(nv, F.size()),
    };
    // div theta# = |tau(Phi)|^2 + <d0F, d0T> - <rbarF, rbarT>: the tangential
    // trace of X -> <dPhi(X), tau(Phi)>.
    ws.div_theta =
        (ws.tau_norm_sq + grad_inner(F, T) - pointwise_inner(rF, rT)).normal_form();
    // dPhi(grad |dPhi|^2): ambient push of grad0 h minus its radial part.
    ws.push_grad = (push_gradient(F, h) - rF.scaled(radial_derivative(h))).normal_form();

    PolyMap tau2_phi = sphere_laplacian(sphere_laplacian(F, m), m);

    Polynomial phi_coeff = ws.laplacian_energy.scaled(-inv_r2) +
                           ws.div_theta.scaled(inv_r2 * rat(2)) -
                           ws.tau_norm_sq.scaled(inv_r2) + (h * h).scaled(inv_r4 * rat(2));
    PolyMap tau2 = tau2_phi + F.scaled(phi_coeff) + T.scaled(h.scaled(inv_r2 * rat(2))) +
                   ws.push_grad.scaled(inv_r2 * rat(2));
    return {tau2.normal_form(), std::move(ws)};
}

AnalysisReport classify(const PolyMap& F, const SphereMapMeta& meta) {
    if (meta.is_product()) {
        PolyMap tension = tension_product(F, meta);
        PolyMap bitension = bitension_product(F, meta);
        AnalysisReport report(tension, bitension, energy_density(F, meta));
        report.meta = meta;
        report.is_harmonic = tension.is_zero_map();
        report.is_biharmonic = bitension.is_zero_map();
        report.is_proper_biharmonic = report.is_biharmonic && !report.is_harmonic;
        report.route_agreement = true;  // products have one symbolic route
        return report;
    }

    PolyMap t_closed = meta.is_homogeneous() ? tension_homogeneous(F, meta)
                                           : tension_diagonal(F, meta);
    PolyMap b_closed = meta.is_homogeneous() ? bitension_homogeneous(F, meta)
                                           : bitension_diagonal(F, meta);
    PolyMap t_gen = tension_general(F, meta);
    auto [b_gen, ws] = bitension_general(F, meta);

    AnalysisReport report(t_closed, b_closed, energy_density(F, meta));
    report.meta = meta;
    report.route_agreement = (t_closed == t_gen) && (b_closed == b_gen);
    report.is_harmonic = t_closed.is_zero_map();
    report.is_biharmonic = b_closed.is_zero_map();
    report.is_proper_biharmonic = report.is_biharmonic && !report.is_harmonic;
    report.worksheet = std::move(ws);
    return report;
}

AnalysisReport classify(const PolyMap& F, const RestrictionHint& hint) {
    return classify(F, sphere_restriction_check(F, hint));
}

std::pair<Polynomial, RadicalScalar> quadratic_identity_check(const PolyMap& F,
                                                              const SphereMapMeta& meta) {
    if (!meta.is_homogeneous() || meta.homogeneous().k != 2)
        throw WrongKind("quadratic identity needs a homogeneous quadratic form");
    int m = meta.domain_dim();
    Polynomial dF_sq = grad_norm_squared(F);
    PolyMap lap = euclidean_laplacian(F);
    Polynomial lhs = (euclidean_laplacian(dF_sq).scaled(rat(-2)) -
                      hessian_norm_squared(F).scaled(rat(2)) + norm_squared(lap))
                         .normal_form();
    RadicalScalar rhs = meta.homogeneous().r_sq * rat(4L * (m + 1) * (m + 3));
    return {lhs, rhs};
}

HarmonicIdentityReport harmonic_identities_check(const PolyMap& F, const SphereMapMeta& meta) {
    if (!meta.is_homogeneous()) throw WrongKind("harmonic identities need a homogeneous form");
    if (!euclidean_laplacian(F).is_zero_map())
        throw NotHarmonicForm("the form has a non-harmonic component");
    int m = meta.domain_dim();
    int k = meta.homogeneous().k;
    const RadicalScalar& r_sq = meta.homogeneous().r_sq;

    HarmonicIdentityReport rep{Polynomial(F.nvars()), RadicalScalar(), Polynomial(F.nvars()),
                               RadicalScalar(), false, false};
    rep.laplacian_of_energy = euclidean_laplacian(grad_norm_squared(F)).normal_form();
    rep.laplacian_closed_form =
        r_sq * rat(-2L * k * (k - 1) * (m + 2 * k - 1) * (m + 2 * k - 3));
    rep.hessian_sq = hessian_norm_squared(F).normal_form();
    rep.hessian_closed_form =
        r_sq * rat(static_cast<long>(k) * (k - 1) *
                   (static_cast<long>(m) * m - 4 * m + 3 + 4 * k * (m - 2) + 4 * k * k));
    rep.laplacian_matches =
        rep.laplacian_of_energy == constant(F.nvars(), rep.laplacian_closed_form);
    rep.hessian_matches = rep.hessian_sq == constant(F.nvars(), rep.hessian_closed_form);
    return rep;
}

std::pair<PolyMap, int> minimality_check(const PolyMap& F) {
    if (F.is_zero_map()) throw ZeroMap("minimality of the zero map is undefined");
    PolyMap current = F;
    int strips = 0;
    while (true) {
        std::vector<Polynomial> reduced;
        reduced.reserve(current.size());
        bool ok = true;
        for (const auto& p : current.components()) {
            auto q = p.divide_by_radius_sq();
            if (!q) {
                ok = false;
                break;
            }
            reduced.push_back(*q);
        }
        if (!ok) return {current, strips};
        current = PolyMap(std::move(reduced));
        ++strips;
    }
}

SliceReport small_hypersphere_check(const PolyMap& F, const std::vector<RadicalScalar>& axis) {
    if (static_cast<int>(axis.size()) != F.size())
        throw DimensionMismatch("axis length does not match component count");
    RadicalScalar norm;
    for (const auto& c : axis) norm += c * c;
    if (norm != RadicalScalar(1)) throw Error("axis is not a unit vector");
    Polynomial inner(F.nvars());
    for (int a = 0; a < F.size(); ++a) inner += F[a].scaled(axis[a]);
    Polynomial nf = inner.normal_form();
    SliceReport rep;
    rep.in_slice = nf.is_constant();
    if (rep.in_slice) rep.constant = nf.constant_value();
    return rep;
}

}  // namespace sphmap
