#pragma once

// Shared test utilities. The eigenvalue oracle here is deliberately
// independent of the library's Jacobi solver: characteristic-polynomial
// coefficients from power-sum traces (Newton's identities) and roots by
// Durand-Kerner iteration with Newton polishing. Accuracy is ~1e-12 for
// well-separated spectra and degrades near multiple roots, so tests
// using it on clustered spectra compare at looser tolerances.

#include "bellmix/matrix.hpp"
#include "bellmix/pauli.hpp"
#include "bellmix/sampling.hpp"
#include "bellmix/state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace testsup {

using bellmix::cplx;
using bellmix::ComplexMatrix2;
using bellmix::ComplexMatrix4;
using bellmix::RealMatrix3;

// ---- polynomial roots ----------------------------------------------------

/// Roots of the monic polynomial z^n + c[n-1] z^(n-1) + ... + c[0].
inline std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
    const size_t n = coeffs.size();
    auto eval = [&](cplx z) {
        cplx p = 1.0;
        for (size_t k = n; k-- > 0;) p = p * z + coeffs[k];
        return p;
    };
    auto eval_deriv = [&](cplx z) {
        cplx p = static_cast<double>(n);
        for (size_t k = n; k-- > 1;) p = p * z + static_cast<double>(k) * coeffs[k];
        return p;
    };

    std::vector<cplx> z(n);
    const cplx base(0.4, 0.9);
    cplx acc = 1.0;
    for (size_t k = 0; k < n; ++k) {
        acc *= base;
        z[k] = acc;
    }

    for (int iter = 0; iter < 400; ++iter) {
        double shift = 0.0;
        for (size_t k = 0; k < n; ++k) {
            cplx denom = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) denom *= (z[k] - z[j]);
            if (std::abs(denom) < 1e-300) denom = 1e-300;
            const cplx step = eval(z[k]) / denom;
            z[k] -= step;
            shift = std::max(shift, std::abs(step));
        }
        if (shift < 1e-15) break;
    }
    // Newton polish; bails out where the derivative is tiny (multiple roots)
    for (size_t k = 0; k < n; ++k)
        for (int it = 0; it < 4; ++it) {
            const cplx d = eval_deriv(z[k]);
            if (std::abs(d) < 1e-12) break;
            z[k] -= eval(z[k]) / d;
        }
    return z;
}

// ---- characteristic polynomials -------------------------------------------

/// Eigenvalues of an arbitrary complex 4x4 matrix via its characteristic
/// polynomial; returns real parts sorted descending.
inline std::array<double, 4> charpoly_eigenvalues4(const ComplexMatrix4& m) {
    const ComplexMatrix4 m2 = m * m;
    const ComplexMatrix4 m3 = m2 * m;
    const ComplexMatrix4 m4 = m3 * m;
    const cplx p1 = m.trace(), p2 = m2.trace(), p3 = m3.trace(), p4 = m4.trace();
    const cplx e1 = p1;
    const cplx e2 = (e1 * p1 - p2) / 2.0;
    const cplx e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
    const cplx e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
    // z^4 - e1 z^3 + e2 z^2 - e3 z + e4
    const std::vector<cplx> roots = poly_roots({e4, -e3, e2, -e1});
    std::array<double, 4> out{};
    for (size_t k = 0; k < 4; ++k) out[k] = roots[k].real();
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Eigenvalues of a real 3x3 matrix with real spectrum, sorted descending.
inline std::array<double, 3> charpoly_eigenvalues3(const RealMatrix3& m) {
    const RealMatrix3 m2 = m * m;
    const RealMatrix3 m3 = m2 * m;
    auto tr = [](const RealMatrix3& a) { return a(0, 0) + a(1, 1) + a(2, 2); };
    const double p1 = tr(m), p2 = tr(m2), p3 = tr(m3);
    const double e1 = p1;
    const double e2 = (e1 * p1 - p2) / 2.0;
    const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
    const std::vector<cplx> roots = poly_roots({cplx(-e3), cplx(e2), cplx(-e1)});
    std::array<double, 3> out{};
    for (size_t k = 0; k < 3; ++k) out[k] = roots[k].real();
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// ---- independent measure oracles ------------------------------------------

/// Tangle through the brute-force lambda pipeline: eigenvalues of the
/// non-Hermitian product rho rho~ from the characteristic polynomial.
inline double tangle_oracle(const bellmix::DensityMatrix& rho) {
    const ComplexMatrix4 prod = rho.matrix() * bellmix::spin_flip(rho.matrix());
    const std::array<double, 4> ev = charpoly_eigenvalues4(prod);
    double lambda[4];
    for (int i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(0.0, ev[static_cast<size_t>(i)]));
    const double c = std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
    return c * c;
}

/// M via the characteristic polynomial of T T^t.
inline double m_value_oracle(const RealMatrix3& t) {
    const std::array<double, 3> ev = charpoly_eigenvalues3(t * t.transpose());
    return ev[0] + ev[1];
}

/// Entropies direct from a spectrum.
inline double linear_entropy_of(const std::array<double, 4>& p) {
    double purity = 0.0;
    for (double v : p) purity += v * v;
    return (4.0 / 3.0) * (1.0 - purity);
}

inline double von_neumann_of(const std::array<double, 4>& p) {
    double s = 0.0;
    for (double v : p)
        if (v > 0.0) s -= v * std::log(v);
    return s / std::log(4.0);
}

// ---- random objects --------------------------------------------------------

/// Haar-ish random unitary: Ginibre matrix, modified Gram-Schmidt columns.
inline ComplexMatrix2 random_unitary2(bellmix::SplitMix64& rng) {
    std::array<std::array<cplx, 2>, 2> col;
    for (auto& c : col)
        for (auto& v : c) v = cplx(rng.gaussian(), rng.gaussian());
    // normalize col 0
    double n0 = std::sqrt(std::norm(col[0][0]) + std::norm(col[0][1]));
    col[0][0] /= n0;
    col[0][1] /= n0;
    // orthogonalize col 1
    const cplx proj = std::conj(col[0][0]) * col[1][0] + std::conj(col[0][1]) * col[1][1];
    col[1][0] -= proj * col[0][0];
    col[1][1] -= proj * col[0][1];
    const double n1 = std::sqrt(std::norm(col[1][0]) + std::norm(col[1][1]));
    col[1][0] /= n1;
    col[1][1] /= n1;
    return ComplexMatrix2(col[0][0], col[1][0], col[0][1], col[1][1]);
}

inline ComplexMatrix4 random_unitary4(bellmix::SplitMix64& rng) {
    std::array<std::array<cplx, 4>, 4> col;
    for (auto& c : col)
        for (auto& v : c) v = cplx(rng.gaussian(), rng.gaussian());
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < k; ++j) {
            cplx proj = 0.0;
            for (int i = 0; i < 4; ++i)
                proj += std::conj(col[static_cast<size_t>(j)][static_cast<size_t>(i)]) *
                        col[static_cast<size_t>(k)][static_cast<size_t>(i)];
            for (int i = 0; i < 4; ++i)
                col[static_cast<size_t>(k)][static_cast<size_t>(i)] -=
                    proj * col[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        double n = 0.0;
        for (int i = 0; i < 4; ++i) n += std::norm(col[static_cast<size_t>(k)][static_cast<size_t>(i)]);
        n = std::sqrt(n);
        for (int i = 0; i < 4; ++i) col[static_cast<size_t>(k)][static_cast<size_t>(i)] /= n;
    }
    ComplexMatrix4 u;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) u(r, c) = col[static_cast<size_t>(c)][static_cast<size_t>(r)];
    return u;
}

inline std::array<cplx, 4> random_pure_vector(bellmix::SplitMix64& rng) {
    std::array<cplx, 4> v;
    double n = 0.0;
    for (auto& x : v) {
        x = cplx(rng.gaussian(), rng.gaussian());
        n += std::norm(x);
    }
    n = std::sqrt(n);
    for (auto& x : v) x /= n;
    return v;
}

inline bellmix::DensityMatrix random_pure_state(bellmix::SplitMix64& rng) {
    const auto v = random_pure_vector(rng);
    return bellmix::DensityMatrix::validate(bellmix::outer(v, v));
}

/// Conjugation rho -> U rho U^dagger.
inline bellmix::DensityMatrix conjugated(const bellmix::DensityMatrix& rho,
                                         const ComplexMatrix4& u) {
    return bellmix::DensityMatrix::validate(u * rho.matrix() * u.adjoint());
}

inline ComplexMatrix4 diag4(double a, double b, double c, double d) {
    ComplexMatrix4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
}

} // namespace testsup
