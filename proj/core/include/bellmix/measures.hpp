#pragma once

#include "bellmix/state.hpp"

namespace bellmix {

/// The five quantities for one state, plus the Horodecki M they share.
///   tau           tangle (squared concurrence), [0,1]
///   eof           entanglement of formation, h((1+sqrt(1-tau))/2), [0,1]
///   m_value       sum of the two larger eigenvalues of T T^t, [0,2]
///   bell_b        maximal CHSH value 2 sqrt(M), [0, 2 sqrt2]
///   s_linear      (4/3)(1 - tr rho^2), [0,1]
///   s_von_neumann -tr(rho log4 rho), [0,1]
struct MeasureRecord {
    double tau = 0.0;
    double eof = 0.0;
    double m_value = 0.0;
    double bell_b = 0.0;
    double s_linear = 0.0;
    double s_von_neumann = 0.0;
};

/// h(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
/// Throws DomainError outside [0,1] (inputs within 1e-12 are clamped).
double binary_entropy(double x);

/// Tangle via the Hermitian route: lambda_i are the descending square
/// roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho) (same spectrum
/// as rho rho~), tau = max(0, l1-l2-l3-l4)^2.
double tangle(const DensityMatrix& rho);

double eof(const DensityMatrix& rho);

/// T with entry (m,n) = tr(rho sigma_n x sigma_m), m,n in {x,y,z}.
/// Throws NonRealCorrelationError if any trace has |Im| > 1e-10.
RealMatrix3 correlation_matrix(const DensityMatrix& rho);

/// Sum of the squares of the two largest singular values of T.
double m_value(const DensityMatrix& rho);

/// B = 2 sqrt(M); B > 2 signals CHSH violation, B <= 2 sqrt2 always.
double bell_violation(const DensityMatrix& rho);

double linear_entropy(const DensityMatrix& rho);

double von_neumann_entropy(const DensityMatrix& rho);

MeasureRecord measure_all(const DensityMatrix& rho);

} // namespace bellmix
