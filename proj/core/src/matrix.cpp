#include "bellmix/matrix.hpp"

#include <cmath>

namespace bellmix {

ComplexMatrix2 ComplexMatrix2::adjoint() const {
    return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

ComplexMatrix4 ComplexMatrix4::identity() {
    ComplexMatrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix4 ComplexMatrix4::adjoint() const {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = std::conj((*this)(j, i));
    return r;
}

ComplexMatrix4 ComplexMatrix4::conjugate() const {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = std::conj((*this)(i, j));
    return r;
}

cplx ComplexMatrix4::trace() const {
    return e_[0] + e_[5] + e_[10] + e_[15];
}

double ComplexMatrix4::max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    double m = 0.0;
    for (size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e_[i] - b.e_[i]));
    return m;
}

double ComplexMatrix4::hermiticity_residual() const {
    return max_abs_diff(*this, adjoint());
}

bool ComplexMatrix4::all_finite() const {
    for (const cplx& v : e_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

ComplexMatrix4 operator*(cplx s, const ComplexMatrix4& a) {
    ComplexMatrix4 r;
    for (size_t i = 0; i < 16; ++i) r.e_[i] = s * a.e_[i];
    return r;
}

RealMatrix3 RealMatrix3::identity() {
    RealMatrix3 m;
    for (int i = 0; i < 3; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix3 RealMatrix3::transpose() const {
    RealMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = (*this)(j, i);
    return r;
}

bool RealMatrix3::all_finite() const {
    for (double v : e_)
        if (!std::isfinite(v)) return false;
    return true;
}

RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b) {
    RealMatrix3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    return r;
}

ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

ComplexMatrix4 outer(const std::array<cplx, 4>& v, const std::array<cplx, 4>& w) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = v[static_cast<size_t>(i)] * std::conj(w[static_cast<size_t>(j)]);
    return r;
}

ComplexMatrix2 reduce_first_qubit(const ComplexMatrix4& m) {
    ComplexMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    return r;
}

} // namespace bellmix
