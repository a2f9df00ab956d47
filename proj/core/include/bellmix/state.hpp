#pragma once

#include "bellmix/matrix.hpp"

namespace bellmix {

/// Validation tolerances for density matrices.
inline constexpr double kStateTol = 1e-9;

/// A validated two-qubit density matrix: Hermitian within 1e-9,
/// unit trace within 1e-9, smallest eigenvalue >= -1e-9.
/// Instances can only be produced through validate() (or the
/// constructors/samplers built on top of it), so holding a
/// DensityMatrix is proof the invariants were checked.
class DensityMatrix {
public:
    /// Throws NonHermitianError, TraceNotOneError or
    /// NotPositiveSemidefiniteError, naming the measured residual.
    static DensityMatrix validate(const ComplexMatrix4& raw);

    const ComplexMatrix4& matrix() const { return mat_; }
    const cplx& operator()(int r, int c) const { return mat_(r, c); }

    static DensityMatrix maximally_mixed();

private:
    explicit DensityMatrix(const ComplexMatrix4& m) : mat_(m) {}
    ComplexMatrix4 mat_;
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Unit vector of the requested Bell state in the product basis.
std::array<cplx, 4> bell_vector(BellState s);

/// Projector onto the requested Bell state.
const ComplexMatrix4& bell_projector(BellState s);

} // namespace bellmix
