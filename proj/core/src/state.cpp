#include "bellmix/state.hpp"

#include "bellmix/eigen.hpp"
#include "bellmix/errors.hpp"

#include <cmath>
#include <sstream>

namespace bellmix {

DensityMatrix DensityMatrix::validate(const ComplexMatrix4& raw) {
    if (!raw.all_finite()) throw NonHermitianError("state validation: non-finite entry");

    const double herm = raw.hermiticity_residual();
    if (herm > kStateTol) {
        std::ostringstream os;
        os << "state validation: hermiticity residual " << herm << " exceeds " << kStateTol;
        throw NonHermitianError(os.str());
    }

    const cplx tr = raw.trace();
    const double trace_residual = std::abs(tr - cplx(1.0));
    if (trace_residual > kStateTol) {
        std::ostringstream os;
        os << "state validation: |trace - 1| = " << trace_residual << " exceeds " << kStateTol;
        throw TraceNotOneError(os.str());
    }

    const Spectrum4 spec = hermitian_eigenvalues(raw);
    if (spec[3] < -kStateTol) {
        std::ostringstream os;
        os << "state validation: smallest eigenvalue " << spec[3] << " below -" << kStateTol;
        throw NotPositiveSemidefiniteError(os.str());
    }

    return DensityMatrix(raw);
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(cplx(0.25) * ComplexMatrix4::identity());
}

std::array<cplx, 4> bell_vector(BellState s) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (s) {
    case BellState::PhiPlus: return {r, 0.0, 0.0, r};
    case BellState::PhiMinus: return {r, 0.0, 0.0, -r};
    case BellState::PsiPlus: return {0.0, r, r, 0.0};
    case BellState::PsiMinus: default: return {0.0, r, -r, 0.0};
    }
}

const ComplexMatrix4& bell_projector(BellState s) {
    static const std::array<ComplexMatrix4, 4> table = [] {
        std::array<ComplexMatrix4, 4> t;
        const BellState all[4] = {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                                  BellState::PsiMinus};
        for (int i = 0; i < 4; ++i) {
            const auto v = bell_vector(all[i]);
            t[static_cast<size_t>(i)] = outer(v, v);
        }
        return t;
    }();
    return table[static_cast<size_t>(s)];
}

} // namespace bellmix
