#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace bellmix {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix (single-qubit operators, reduced states).
class ComplexMatrix2 {
public:
    ComplexMatrix2() = default;
    ComplexMatrix2(cplx a00, cplx a01, cplx a10, cplx a11)
        : e_{a00, a01, a10, a11} {}

    cplx& operator()(int r, int c) { return e_[static_cast<size_t>(2 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e_[static_cast<size_t>(2 * r + c)]; }

    ComplexMatrix2 adjoint() const;
    cplx trace() const { return e_[0] + e_[3]; }
    cplx det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);

private:
    std::array<cplx, 4> e_{};
};

/// Dense 4x4 complex matrix, row-major, basis |00>,|01>,|10>,|11>.
class ComplexMatrix4 {
public:
    ComplexMatrix4() = default;

    cplx& operator()(int r, int c) { return e_[static_cast<size_t>(4 * r + c)]; }
    const cplx& operator()(int r, int c) const { return e_[static_cast<size_t>(4 * r + c)]; }

    static ComplexMatrix4 identity();

    ComplexMatrix4 adjoint() const;
    ComplexMatrix4 conjugate() const;
    cplx trace() const;

    /// max_{r,c} |a(r,c) - b(r,c)|
    static double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);

    /// max entry distance to the own adjoint; 0 for exactly Hermitian input
    double hermiticity_residual() const;

    bool all_finite() const;

    friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);
    friend ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b);
    friend ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b);
    friend ComplexMatrix4 operator*(cplx s, const ComplexMatrix4& a);

private:
    std::array<cplx, 16> e_{};
};

/// Dense 3x3 real matrix (Pauli correlation matrices).
class RealMatrix3 {
public:
    RealMatrix3() = default;

    double& operator()(int r, int c) { return e_[static_cast<size_t>(3 * r + c)]; }
    const double& operator()(int r, int c) const { return e_[static_cast<size_t>(3 * r + c)]; }

    static RealMatrix3 identity();

    RealMatrix3 transpose() const;
    bool all_finite() const;

    friend RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b);

private:
    std::array<double, 9> e_{};
};

/// Four real eigenvalues sorted descending.
struct Spectrum4 {
    std::array<double, 4> values{};

    double operator[](int i) const { return values[static_cast<size_t>(i)]; }
    double sum() const { return values[0] + values[1] + values[2] + values[3]; }
};

/// Kronecker product; a acts on the first qubit, b on the second.
ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b);

/// Outer product v * w^dagger of two 4-component vectors.
ComplexMatrix4 outer(const std::array<cplx, 4>& v, const std::array<cplx, 4>& w);

/// Partial trace over the second qubit.
ComplexMatrix2 reduce_first_qubit(const ComplexMatrix4& m);

} // namespace bellmix
