#include "bellmix/measures.hpp"

#include "bellmix/eigen.hpp"
#include "bellmix/errors.hpp"
#include "bellmix/pauli.hpp"

#include <cmath>
#include <sstream>

namespace bellmix {

namespace {

constexpr double kCorrelationImagTol = 1e-10;
const double kLn2 = std::log(2.0);

double entropy_term_log2(double p) {
    return p > 0.0 ? -p * std::log(p) / kLn2 : 0.0;
}

} // namespace

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12) {
        std::ostringstream os;
        os << "binary_entropy: argument " << x << " outside [0,1]";
        throw DomainError(os.str());
    }
    x = std::min(1.0, std::max(0.0, x));
    return entropy_term_log2(x) + entropy_term_log2(1.0 - x);
}

double tangle(const DensityMatrix& rho) {
    // lambda_i are the eigenvalue square roots of sqrt(rho) rho~ sqrt(rho),
    // which are exactly the singular values of sqrt(rho) sqrt(rho~); the
    // singular-value route keeps full absolute accuracy for the small
    // lambdas, where sqrt-of-eigenvalue loses half the digits.
    const ComplexMatrix4 a = psd_sqrt(rho.matrix()) * psd_sqrt(spin_flip(rho.matrix()));
    const std::array<double, 4> lambda = singular_values(a);
    const double c = std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
    return c * c;
}

double eof(const DensityMatrix& rho) {
    const double t = tangle(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - t))));
}

RealMatrix3 correlation_matrix(const DensityMatrix& rho) {
    RealMatrix3 t;
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            const ComplexMatrix4& op = pauli_kron(n, m); // sigma_n first qubit, sigma_m second
            cplx tr = 0.0;
            for (int i = 0; i < 4; ++i)
                for (int k = 0; k < 4; ++k) tr += rho(i, k) * op(k, i);
            if (std::abs(tr.imag()) > kCorrelationImagTol) {
                std::ostringstream os;
                os << "correlation_matrix: imaginary residue " << tr.imag() << " at (" << m << ","
                   << n << ") exceeds " << kCorrelationImagTol;
                throw NonRealCorrelationError(os.str());
            }
            t(m, n) = tr.real();
        }
    return t;
}

double m_value(const DensityMatrix& rho) {
    const std::array<double, 3> s = singular_values(correlation_matrix(rho));
    return s[0] * s[0] + s[1] * s[1];
}

double bell_violation(const DensityMatrix& rho) {
    return 2.0 * std::sqrt(m_value(rho));
}

double linear_entropy(const DensityMatrix& rho) {
    const ComplexMatrix4& m = rho.matrix();
    double purity = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) purity += (m(i, k) * m(k, i)).real();
    return (4.0 / 3.0) * (1.0 - purity);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum4 spec = hermitian_eigenvalues(rho.matrix());
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double p = spec[i] > 0.0 ? spec[i] : 0.0; // [-1e-9,0) clamps to 0
        s += entropy_term_log2(p);
    }
    return 0.5 * s; // log4 = log2 / 2
}

MeasureRecord measure_all(const DensityMatrix& rho) {
    MeasureRecord r;
    r.tau = tangle(rho);
    r.eof = binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - r.tau))));
    r.m_value = m_value(rho);
    r.bell_b = 2.0 * std::sqrt(r.m_value);
    r.s_linear = linear_entropy(rho);
    r.s_von_neumann = von_neumann_entropy(rho);
    return r;
}

} // namespace bellmix
