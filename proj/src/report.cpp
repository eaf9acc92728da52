#include "sphmap/report.hpp"

#include <sstream>

#include <json.hpp>

#include "sphmap/numcheck.hpp"

namespace sphmap {

namespace {

const char* kConvention = "laplacian = -(d^2/dx1^2 + ... + d^2/dxN^2)";

std::string rational_str(const RadicalScalar& c) { return c.str(); }

nlohmann::ordered_json meta_json(const SphereMapMeta& meta, int components) {
    nlohmann::ordered_json j;
    if (meta.is_homogeneous()) {
        const auto& h = meta.homogeneous();
        j["kind"] = "homogeneous";
        j["m"] = meta.domain_dim();
        j["k"] = h.k;
        j["r_sq"] = rational_str(h.r_sq);
    } else if (meta.is_diagonal()) {
        const auto& d = meta.diagonal();
        j["kind"] = "diagonal";
        j["m"] = meta.domain_dim();
        j["k1"] = d.k1;
        j["k2"] = d.k2;
        j["r1_sq"] = rational_str(d.r1_sq);
        j["r2_sq"] = rational_str(d.r2_sq);
        j["split"] = d.split;
    } else {
        const auto& p = meta.product();
        j["kind"] = "product";
        j["m1"] = p.m1;
        j["m2"] = p.m2;
        j["k1"] = p.k1;
        j["k2"] = p.k2;
        j["r1_sq"] = rational_str(p.r1_sq);
        j["r2_sq"] = rational_str(p.r2_sq);
        j["split"] = p.split;
    }
    j["nvars"] = meta.nvars;
    j["components"] = components;
    return j;
}

std::vector<std::string> component_strings(const PolyMap& F) {
    std::vector<std::string> out;
    out.reserve(F.size());
    for (const auto& p : F.components()) out.push_back(p.str());
    return out;
}

}  // namespace

NumericSummary numeric_summary(const AnalysisReport& report, std::uint64_t seed,
                               int points, double tol) {
    NumericSummary s;
    s.seed = seed;
    s.points = points;
    s.tol = tol;
    SampleSet samples = sample_for(report.meta, points, seed);

    auto account = [&](const PolyMap& field, bool symbolically_zero) {
        ZeroCheckReport zr = numeric_zero_check(field, samples, tol);
        if (symbolically_zero) {
            s.max_residual = std::max(s.max_residual, zr.max_abs);
        } else {
            double witness = zr.max_abs;
            if (!s.nonzero_witness || witness < *s.nonzero_witness) s.nonzero_witness = witness;
        }
    };
    account(report.tension, report.is_harmonic);
    account(report.bitension, report.is_biharmonic);
    return s;
}

std::string report_to_json(const AnalysisReport& report, const std::string& source,
                           const NumericSummary& numeric) {
    nlohmann::ordered_json j;
    j["source"] = source;
    j["convention"] = kConvention;
    j["meta"] = meta_json(report.meta, report.tension.size());
    j["verdicts"] = {
        {"harmonic", report.is_harmonic},
        {"biharmonic", report.is_biharmonic},
        {"proper_biharmonic", report.is_proper_biharmonic},
    };
    j["energy_density"] = report.energy.str();
    j["tension"] = component_strings(report.tension);
    j["bitension"] = component_strings(report.bitension);
    j["route_agreement"] = report.route_agreement;
    nlohmann::ordered_json num;
    num["seed"] = numeric.seed;
    num["points"] = numeric.points;
    num["tol"] = numeric.tol;
    num["max_residual"] = numeric.max_residual;
    if (numeric.nonzero_witness) num["nonzero_witness"] = *numeric.nonzero_witness;
    j["numeric_check"] = num;
    return j.dump(2);
}

std::string report_to_human(const AnalysisReport& report, const std::string& source,
                            const NumericSummary& numeric) {
    std::ostringstream os;
    os << "map: " << source << "\n";
    os << "convention: " << kConvention << "\n";
    const auto& meta = report.meta;
    if (meta.is_homogeneous()) {
        const auto& h = meta.homogeneous();
        os << "kind: homogeneous form, m = " << meta.domain_dim() << ", k = " << h.k
           << ", r^2 = " << h.r_sq.str() << "\n";
    } else if (meta.is_diagonal()) {
        const auto& d = meta.diagonal();
        os << "kind: diagonal, m = " << meta.domain_dim() << ", k1 = " << d.k1
           << ", k2 = " << d.k2 << ", r1^2 = " << d.r1_sq.str() << ", r2^2 = " << d.r2_sq.str()
           << "\n";
    } else {
        const auto& p = meta.product();
        os << "kind: product, m1 = " << p.m1 << ", m2 = " << p.m2 << ", k1 = " << p.k1
           << ", k2 = " << p.k2 << ", r1^2 = " << p.r1_sq.str() << ", r2^2 = " << p.r2_sq.str()
           << "\n";
    }
    os << "verdict: "
       << (report.is_harmonic        ? "harmonic (hence biharmonic)"
           : report.is_proper_biharmonic ? "proper biharmonic"
           : report.is_biharmonic    ? "biharmonic"
                                     : "neither harmonic nor biharmonic")
       << "\n";
    os << "energy density: " << report.energy.str() << "\n";
    os << "tension:\n";
    for (const auto& c : component_strings(report.tension)) os << "  " << c << "\n";
    os << "bitension:\n";
    for (const auto& c : component_strings(report.bitension)) os << "  " << c << "\n";
    os << "route agreement: " << (report.route_agreement ? "yes" : "NO (bug)") << "\n";
    os << "numeric check: seed " << numeric.seed << ", " << numeric.points
       << " points, tol " << numeric.tol << ", max residual " << numeric.max_residual;
    if (numeric.nonzero_witness) os << ", nonzero witness " << *numeric.nonzero_witness;
    os << "\n";
    return os.str();
}

}  // namespace sphmap
