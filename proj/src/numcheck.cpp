#include "sphmap/numcheck.hpp"

#include <cmath>

namespace sphmap {

namespace {

class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    double uniform() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        // top 53 bits -> [0, 1)
        return static_cast<double>(state_ >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

SampleSet sample_blocks(std::vector<int> block_sizes, int count, std::uint64_t seed) {
    if (count < 1) throw Error("sample count must be >= 1");
    SampleSet set;
    set.seed = seed;
    set.block_sizes = std::move(block_sizes);
    Lcg rng(seed);
    int total = 0;
    for (int b : set.block_sizes) total += b;
    set.points.reserve(count);
    for (int i = 0; i < count; ++i) {
        std::vector<double> point(total);
        int offset = 0;
        for (int b : set.block_sizes) {
            double norm_sq = 0.0;
            do {
                norm_sq = 0.0;
                for (int j = 0; j < b; ++j) {
                    point[offset + j] = rng.gaussian();
                    norm_sq += point[offset + j] * point[offset + j];
                }
            } while (norm_sq < 1e-12);
            double inv = 1.0 / std::sqrt(norm_sq);
            for (int j = 0; j < b; ++j) point[offset + j] *= inv;
            offset += b;
        }
        set.points.push_back(std::move(point));
    }
    return set;
}

}  // namespace

SampleSet sample_sphere(int m, int count, std::uint64_t seed) {
    return sample_blocks({m + 1}, count, seed);
}

SampleSet sample_product_sphere(int m1, int m2, int count, std::uint64_t seed) {
    return sample_blocks({m1 + 1, m2 + 1}, count, seed);
}

SampleSet sample_for(const SphereMapMeta& meta, int count, std::uint64_t seed) {
    if (meta.is_product()) {
        const auto& p = meta.product();
        return sample_product_sphere(p.m1, p.m2, count, seed);
    }
    return sample_sphere(meta.domain_dim(), count, seed);
}

ZeroCheckReport numeric_zero_check(const PolyMap& F, const SampleSet& samples, double tol) {
    ZeroCheckReport rep;
    rep.tol = tol;
    for (const auto& point : samples.points) {
        for (const auto& p : F.components()) {
            double v = std::abs(p.evaluate(point));
            if (v > rep.max_abs) rep.max_abs = v;
        }
    }
    rep.pass = rep.max_abs <= tol;
    return rep;
}

ZeroCheckReport numeric_zero_check(const Polynomial& p, const SampleSet& samples, double tol) {
    return numeric_zero_check(PolyMap({p}), samples, tol);
}

namespace {

constexpr double kStep = 1e-5;
constexpr double kRelTol = 1e-4;
constexpr double kAbsFloor = 1e-6;

void update_error(DiffCheckReport& rep, double approx, double exact, double floor) {
    double err = std::abs(approx - exact);
    double rel = err / std::max(std::abs(exact), floor);
    if (rel > rep.max_rel_err) rep.max_rel_err = rel;
}

}  // namespace

DiffCheckReport finite_diff_check(const Polynomial& p, const SampleSet& samples) {
    DiffCheckReport rep;
    for (const auto& point : samples.points) {
        std::vector<double> probe = point;
        for (int i = 0; i < p.nvars(); ++i) {
            double x = point[i];
            probe[i] = x + kStep;
            double hi = p.evaluate(probe);
            probe[i] = x - kStep;
            double lo = p.evaluate(probe);
            probe[i] = x;
            double exact = p.partial_derivative(i).evaluate(point);
            update_error(rep, (hi - lo) / (2.0 * kStep), exact, kAbsFloor);
        }
    }
    rep.pass = rep.max_rel_err <= kRelTol;
    return rep;
}

DiffCheckReport finite_diff_laplacian_check(const PolyMap& F, const SampleSet& samples) {
    DiffCheckReport rep;
    // second differences divide rounding noise by step^2, so the stencil
    // needs a coarser step than the gradient check
    constexpr double kLapStep = 1e-3;
    PolyMap lap = euclidean_laplacian(F);
    for (const auto& point : samples.points) {
        std::vector<double> probe = point;
        for (int a = 0; a < F.size(); ++a) {
            double center = F[a].evaluate(point);
            double stencil = 0.0;
            for (int i = 0; i < F.nvars(); ++i) {
                double x = point[i];
                probe[i] = x + kLapStep;
                double hi = F[a].evaluate(probe);
                probe[i] = x - kLapStep;
                double lo = F[a].evaluate(probe);
                probe[i] = x;
                stencil += (hi - 2.0 * center + lo) / (kLapStep * kLapStep);
            }
            // symbolic operator carries the rough-Laplacian sign; the floor
            // absorbs the eps/step^2 noise of the second difference
            update_error(rep, -stencil, lap[a].evaluate(point), 1e-3);
        }
    }
    rep.pass = rep.max_rel_err <= kRelTol;
    return rep;
}

}  // namespace sphmap
