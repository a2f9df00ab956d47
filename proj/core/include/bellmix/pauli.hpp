#pragma once

#include "bellmix/matrix.hpp"

namespace bellmix {

/// Pauli matrices in the standard basis; sigma_y = (0,-i; i,0).
const ComplexMatrix2& pauli_x();
const ComplexMatrix2& pauli_y();
const ComplexMatrix2& pauli_z();

/// sigma_a (first qubit) tensor sigma_b (second qubit); a,b in {0,1,2} = {x,y,z}.
const ComplexMatrix4& pauli_kron(int a, int b);

/// (sigma_y tensor sigma_y) rho^* (sigma_y tensor sigma_y), with the complex
/// conjugation taken entrywise in the |00>,|01>,|10>,|11> basis.
ComplexMatrix4 spin_flip(const ComplexMatrix4& rho);

} // namespace bellmix
