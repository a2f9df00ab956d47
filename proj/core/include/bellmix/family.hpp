#pragma once

#include "bellmix/state.hpp"

#include <string>
#include <variant>

namespace bellmix {

/// a|00> + b|11> with b = sqrt(1-a^2), a in [0,1].
struct Pure {
    double a = 1.0;
};

/// x P[Phi+] + (1-x)/4 I, x in [0,1].
struct Werner {
    double x = 1.0;
};

/// Maximally entangled mixed states, parameterized by gamma in (0,1]:
///   (2g+gamma)/2 P[Phi+] + (2g-gamma)/2 P[Phi-] + (1-2g) |01><01|
/// with g = 1/3 for gamma < 2/3 and g = gamma/2 for gamma >= 2/3.
struct Mems {
    double gamma = 1.0;
};

/// w P[Phi+] + (1-w) P[Phi-], w in [0,1].
struct TwoBell {
    double w = 1.0;
};

/// w1 P[Phi+] + w2 P[Phi-] + w3 P[Psi+]; the constructor sorts the
/// weights descending so w1 >= w2 >= w3 always holds.
struct ThreeBell {
    ThreeBell(double a, double b, double c);
    double w1, w2, w3;
};

using FamilySpec = std::variant<Pure, Werner, Mems, TwoBell, ThreeBell>;

enum class FamilyKind { pure, werner, mems, two_bell, three_bell };

/// Builds the state for a family spec. Throws InvalidFamilyParameterError
/// naming the violated range; the result always passes DensityMatrix::validate.
DensityMatrix make_family(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);
std::string family_name(FamilyKind kind);

/// Short human-readable parameter dump, e.g. "three_bell(w1=0.7, w2=0.2, w3=0.1)".
std::string describe(const FamilySpec& spec);

} // namespace bellmix
