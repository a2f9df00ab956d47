#pragma once

#include "bellmix/state.hpp"

#include <cstdint>

namespace bellmix {

/// splitmix64 stream: state advances by a fixed odd constant and the
/// output is a bijective mix, so draw k is a pure function of
/// (seed, k). Good enough statistically for Monte Carlo scans and
/// trivially splittable across substreams.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next();

    /// uniform in [0,1) with 53 random bits
    double uniform01();

    /// uniform in (0,1]; safe under log()
    double uniform_open01();

    /// standard normal via Box-Muller from two uniform draws
    double gaussian();

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Decorrelated seed for substream `index` of stream `seed`.
uint64_t substream_seed(uint64_t seed, uint64_t index);

/// rho = G G^dagger / tr(G G^dagger) for a 4x4 matrix G of independent
/// standard complex Gaussians (Hilbert-Schmidt measure).
DensityMatrix sample_hilbert_schmidt(uint64_t seed);

/// Uniform simplex weights (four unit-exponential draws, normalized)
/// applied to the four Bell projectors.
DensityMatrix sample_bell_diagonal(uint64_t seed);

/// The weight vector used by sample_bell_diagonal, in the order
/// Phi+, Phi-, Psi+, Psi-.
std::array<double, 4> sample_simplex_weights(uint64_t seed);

} // namespace bellmix
