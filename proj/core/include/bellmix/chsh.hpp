#pragma once

#include "bellmix/state.hpp"

#include <cstdint>

namespace bellmix {

/// Independent check of the closed-form bound 2 sqrt(M): maximizes
///   a.Tb + a.Tb' + a'.Tb - a'.Tb'
/// over unit vectors a, a', b, b' by alternating exact half-steps
/// (a ~ T(b+b'), a' ~ T(b-b'); then b ~ T^t(a+a'), b' ~ T^t(a-a')),
/// restarted from `restarts` seeded random configurations. Each
/// half-step is exactly optimal so the value is monotone; iteration
/// stops when improvement falls below 1e-12 or after 500 rounds.
/// The result never exceeds the closed form (it is the supremum).
double chsh_optimize(const DensityMatrix& rho, int restarts, uint64_t seed);

} // namespace bellmix
