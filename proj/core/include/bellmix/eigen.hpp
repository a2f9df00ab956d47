#pragma once

#include "bellmix/matrix.hpp"

namespace bellmix {

/// Tolerances shared across validation and eigensolves.
inline constexpr double kHermitianTol = 1e-9;  // max |m - m^dagger| entry
inline constexpr double kEigenClampTol = 1e-9; // eigenvalues in [-tol, 0) clamp to 0

struct EigenSystem4 {
    Spectrum4 values;       // descending
    ComplexMatrix4 vectors; // column k is the eigenvector of values[k]
};

/// Eigenvalues of a Hermitian 4x4 matrix, sorted descending.
/// Throws NonHermitianError when the hermiticity residual exceeds 1e-9.
Spectrum4 hermitian_eigenvalues(const ComplexMatrix4& m);

/// Full eigensystem of a Hermitian 4x4 matrix (cyclic complex Jacobi).
EigenSystem4 hermitian_eigensystem(const ComplexMatrix4& m);

/// Hermitian square root of a positive semidefinite matrix.
/// Eigenvalues in [-1e-9, 0) are clamped to 0; below -1e-9 throws
/// NotPositiveSemidefiniteError.
ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m);

/// Singular values of a real 3x3 matrix, sorted descending.
/// Computed as square roots of the eigenvalues of T*T^t.
std::array<double, 3> singular_values(const RealMatrix3& t);

/// Singular values of a complex 4x4 matrix, sorted descending
/// (one-sided Jacobi). Unlike sqrt-of-eigenvalue routes this keeps full
/// absolute accuracy for singular values at or near zero.
std::array<double, 4> singular_values(const ComplexMatrix4& a);

} // namespace bellmix
