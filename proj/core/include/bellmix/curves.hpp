#pragma once

#include "bellmix/family.hpp"
#include "bellmix/measures.hpp"

#include <vector>

namespace bellmix {

/// Closed-form values of the four curve quantities for a family member.
/// Valid on each family's full parameter range (ThreeBell uses the
/// sorted-weight convention; its tau form is max(0, 2 w1 - 1)^2 so it
/// stays correct for w1 <= 1/2 where the state is separable).
struct ClosedForm {
    double tau = 0.0;
    double bell_b = 0.0;
    double s_linear = 0.0;
    double s_von_neumann = 0.0;
};

ClosedForm closed_form(const FamilySpec& spec);

/// One grid point of a family curve: closed forms next to the full
/// matrix pipeline, with their largest disagreement.
struct CurvePoint {
    FamilySpec family;
    double parameter = 0.0;
    MeasureRecord measured;
    ClosedForm expected;
    double pipeline_gap = 0.0; // max |expected - measured| over the four fields
};

/// Evaluates the family along a parameter grid. The scalar parameter is
/// a for pure, x for werner, gamma for mems, w for two_bell and w1 for
/// three_bell (with the symmetric split w2 = w3 = (1-w1)/2, so the grid
/// lives in [1/3, 1]).
std::vector<CurvePoint> family_curve(FamilyKind kind, const std::vector<double>& grid);

FamilySpec family_spec_for(FamilyKind kind, double parameter);

/// Inversions B -> family parameter, used to build matched-B pairs.
/// Throw InvalidFamilyParameterError outside the attainable B range.
Pure pure_with_bell(double b);     // b in [2, 2 sqrt2]
Werner werner_with_bell(double b); // b in [0, 2 sqrt2]
Mems mems_with_bell(double b);     // b in (2/3, 2 sqrt2]

/// Inclusive grid lo, lo+step, ..., hi (endpoints matched within 1e-12).
std::vector<double> make_grid(double lo, double hi, double step);

} // namespace bellmix
