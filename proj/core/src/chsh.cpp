#include "bellmix/chsh.hpp"

#include "bellmix/errors.hpp"
#include "bellmix/measures.hpp"
#include "bellmix/sampling.hpp"

#include <cmath>

namespace bellmix {

namespace {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

Vec3 apply(const RealMatrix3& m, Vec3 v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

Vec3 apply_transpose(const RealMatrix3& m, Vec3 v) {
    return {m(0, 0) * v.x + m(1, 0) * v.y + m(2, 0) * v.z,
            m(0, 1) * v.x + m(1, 1) * v.y + m(2, 1) * v.z,
            m(0, 2) * v.x + m(1, 2) * v.y + m(2, 2) * v.z};
}

// keeps the previous direction when the image vanishes
Vec3 normalized_or(Vec3 v, Vec3 fallback) {
    const double n = norm(v);
    if (n < 1e-300) return fallback;
    return {v.x / n, v.y / n, v.z / n};
}

Vec3 random_unit(SplitMix64& rng) {
    for (;;) {
        Vec3 v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        const double n = norm(v);
        if (n > 1e-6) return {v.x / n, v.y / n, v.z / n};
    }
}

} // namespace

double chsh_optimize(const DensityMatrix& rho, int restarts, uint64_t seed) {
    if (restarts < 1) throw DomainError("chsh_optimize: restarts must be >= 1");

    const RealMatrix3 t = correlation_matrix(rho);
    double best = 0.0;

    for (int r = 0; r < restarts; ++r) {
        SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(r)));
        Vec3 b = random_unit(rng);
        Vec3 b2 = random_unit(rng);
        Vec3 a{1.0, 0.0, 0.0};
        Vec3 a2{0.0, 1.0, 0.0};

        double value = 0.0;
        for (int iter = 0; iter < 500; ++iter) {
            const Vec3 u = apply(t, b + b2);
            const Vec3 v = apply(t, b - b2);
            const double next = norm(u) + norm(v);
            a = normalized_or(u, a);
            a2 = normalized_or(v, a2);

            const Vec3 p = apply_transpose(t, a + a2);
            const Vec3 q = apply_transpose(t, a - a2);
            b = normalized_or(p, b);
            b2 = normalized_or(q, b2);

            if (next - value < 1e-12) {
                value = std::max(value, next);
                break;
            }
            value = next;
        }
        // value of the final measurement directions
        value = std::max(value, norm(apply(t, b + b2)) + norm(apply(t, b - b2)));
        best = std::max(best, value);
    }
    return best;
}

} // namespace bellmix
