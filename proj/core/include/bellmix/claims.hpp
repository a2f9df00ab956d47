#pragma once

#include "bellmix/family.hpp"
#include "bellmix/measures.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bellmix {

/// Given a three-Bell mixture with weight profile (w1, w2, w3), w1 > 1/2,
/// builds the profile with first weight `target_w1` and the same value of
/// w2(1-w2) + w3(1-w3) — hence the same Bell violation B. The remaining
/// weights solve t^2 - s t + p = 0 with s = 1 - target_w1 and p matched;
/// (w2', w3') = (larger, smaller) root. Throws NoRealSolutionError when no
/// valid pair exists for this target (negative discriminant, or a negative
/// weight root) and OrderingViolatedError if the larger root exceeded
/// target_w1 (unreachable for target_w1 > 1/2, kept as a guard).
ThreeBell equal_b_three_bell_pair(const ThreeBell& base, double target_w1);

enum class Verdict { holds, fails, mixed };
std::string verdict_name(Verdict v);

struct WitnessState {
    std::string description;
    MeasureRecord record;
};

/// Structured pass/fail evidence for one ordering claim over an ensemble.
/// verdict == holds exactly when violations == 0; a witness pair is
/// attached whenever violations > 0.
struct ClaimReport {
    std::string claim_id;
    long ensemble_size = 0; // instances evaluated
    long applicable = 0;    // instances where the antecedent held
    long violations = 0;
    Verdict verdict = Verdict::holds;
    std::optional<std::pair<WitnessState, WitnessState>> witness;
};

/// Claim catalog:
///   two_bell_vs_pure      matched-B (two-Bell, pure) pairs: equal tau and
///                         S_L(two-Bell) > S_L(pure)
///   three_bell_reversal   equal-B three-Bell pairs: higher tau -> LOWER S_L
///   three_bell_equal_tau  equal-tau three-Bell pairs: higher B -> lower S_L
///   munro_three_families  matched-B pure/werner/mems pairs in the CHSH-
///                         violating band: higher tau -> higher S_L
///   entropy_order_general S_L and von Neumann order agree for arbitrary
///                         states (refuted; the canonical counterexample
///                         pair is evaluated first)
const std::vector<std::string>& claim_catalog();

/// Deterministic given (count, seed). Throws UnknownClaimError.
ClaimReport verify_claim(const std::string& claim_id, long count, uint64_t seed);

/// Entropy-order audit: order agreement of S_L and S along the werner,
/// two_bell and mems curves, plus the general-spectrum counterexample.
struct EntropyOrderAudit {
    struct CurveCheck {
        std::string family;
        int grid_points = 0;
        long pairs = 0;
        long disagreements = 0;
    };
    std::vector<CurveCheck> curves;
    long curve_disagreements = 0;

    bool witness_confirmed = false; // S_L order reversed against S order
    WitnessState witness_p, witness_q;

    long random_pairs = 0;
    long random_disagreements = 0;

    /// true when the evidence matches expectation: monotone agreement on
    /// every curve and a confirmed general-spectrum reversal.
    bool as_expected() const { return curve_disagreements == 0 && witness_confirmed; }
};

EntropyOrderAudit entropy_order_audit(int grid_points, long random_pairs, uint64_t seed);

} // namespace bellmix
