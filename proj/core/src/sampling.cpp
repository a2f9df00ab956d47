#include "bellmix/sampling.hpp"

#include <cmath>
#include <numbers>

namespace bellmix {

uint64_t SplitMix64::next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform_open01() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
}

double SplitMix64::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

uint64_t substream_seed(uint64_t seed, uint64_t index) {
    // one splitmix output keyed by both values; avoids low-entropy
    // overlap between adjacent (seed, index) streams
    SplitMix64 mixer(seed ^ (0xd1342543de82ef95ull * (index + 1)));
    return mixer.next();
}

DensityMatrix sample_hilbert_schmidt(uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix4 g;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g(r, c) = cplx(rng.gaussian(), rng.gaussian());

    ComplexMatrix4 rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho = cplx(1.0 / tr) * rho;
    // exact Hermitian symmetrization; G G^dagger is Hermitian only up to roundoff
    rho = cplx(0.5) * (rho + rho.adjoint());
    return DensityMatrix::validate(rho);
}

std::array<double, 4> sample_simplex_weights(uint64_t seed) {
    SplitMix64 rng(seed);
    std::array<double, 4> w{};
    double sum = 0.0;
    for (double& v : w) {
        v = -std::log(rng.uniform_open01());
        sum += v;
    }
    for (double& v : w) v /= sum;
    return w;
}

DensityMatrix sample_bell_diagonal(uint64_t seed) {
    const std::array<double, 4> w = sample_simplex_weights(seed);
    ComplexMatrix4 rho = cplx(w[0]) * bell_projector(BellState::PhiPlus) +
                         cplx(w[1]) * bell_projector(BellState::PhiMinus) +
                         cplx(w[2]) * bell_projector(BellState::PsiPlus) +
                         cplx(w[3]) * bell_projector(BellState::PsiMinus);
    return DensityMatrix::validate(rho);
}

} // namespace bellmix
