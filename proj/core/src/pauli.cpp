#include "bellmix/pauli.hpp"

namespace bellmix {

namespace {
const cplx kI(0.0, 1.0);
}

const ComplexMatrix2& pauli_x() {
    static const ComplexMatrix2 m(0.0, 1.0, 1.0, 0.0);
    return m;
}

const ComplexMatrix2& pauli_y() {
    static const ComplexMatrix2 m(0.0, -kI, kI, 0.0);
    return m;
}

const ComplexMatrix2& pauli_z() {
    static const ComplexMatrix2 m(1.0, 0.0, 0.0, -1.0);
    return m;
}

const ComplexMatrix4& pauli_kron(int a, int b) {
    static const std::array<ComplexMatrix4, 9> table = [] {
        const ComplexMatrix2* sig[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
        std::array<ComplexMatrix4, 9> t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[static_cast<size_t>(3 * i + j)] = kron(*sig[i], *sig[j]);
        return t;
    }();
    return table[static_cast<size_t>(3 * a + b)];
}

ComplexMatrix4 spin_flip(const ComplexMatrix4& rho) {
    const ComplexMatrix4& yy = pauli_kron(1, 1);
    return yy * rho.conjugate() * yy;
}

} // namespace bellmix
