#include "bellmix/claims.hpp"

#include "bellmix/curves.hpp"
#include "bellmix/errors.hpp"
#include "bellmix/format.hpp"
#include "bellmix/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bellmix {

namespace {

constexpr double kPairTol = 1e-9;  // matched-invariant verification
constexpr double kTieTol = 1e-12;  // order-comparison tie band
const double kRoot8 = 2.0 * std::sqrt(2.0);

double damping(const ThreeBell& t) { return t.w2 * (1.0 - t.w2) + t.w3 * (1.0 - t.w3); }

WitnessState witness_for(const FamilySpec& spec, const MeasureRecord& rec) {
    return WitnessState{describe(spec), rec};
}

struct ClaimRun {
    ClaimReport report;

    void instance(bool applicable, bool violated, const WitnessState& a, const WitnessState& b) {
        ++report.ensemble_size;
        if (!applicable) return;
        ++report.applicable;
        if (violated) {
            ++report.violations;
            if (!report.witness) report.witness = std::make_pair(a, b);
        }
    }

    ClaimReport finish(std::string id) {
        report.claim_id = std::move(id);
        if (report.violations == 0)
            report.verdict = Verdict::holds;
        else if (report.violations == report.applicable)
            report.verdict = Verdict::fails;
        else
            report.verdict = Verdict::mixed;
        return report;
    }
};

// ---- two_bell_vs_pure -------------------------------------------------
// Grid of matched pairs: for w in (1/2, 1) the two-Bell state and the
// pure state with the same tangle share B exactly; the claim is that
// tau matches through the pipeline and the Bell mixture is strictly
// more mixed.
ClaimReport claim_two_bell_vs_pure(long count, uint64_t) {
    ClaimRun run;
    for (long k = 1; k <= count; ++k) {
        const double w = 0.5 + 0.5 * static_cast<double>(k) / static_cast<double>(count + 1);
        const FamilySpec two = TwoBell{w};
        const double tau = (2.0 * w - 1.0) * (2.0 * w - 1.0);
        const FamilySpec pure = Pure{std::sqrt(0.5 * (1.0 + std::sqrt(1.0 - tau)))};

        const MeasureRecord m2 = measure_all(make_family(two));
        const MeasureRecord mp = measure_all(make_family(pure));

        const bool b_matched = std::abs(m2.bell_b - mp.bell_b) <= kPairTol;
        const bool tau_matched = std::abs(m2.tau - mp.tau) <= kPairTol;
        const bool more_mixed = m2.s_linear > mp.s_linear;
        run.instance(true, !(b_matched && tau_matched && more_mixed), witness_for(two, m2),
                     witness_for(pure, mp));
    }
    return run.finish("two_bell_vs_pure");
}

// ---- three_bell samplers ----------------------------------------------

ThreeBell random_three_bell(SplitMix64& rng) {
    // w1 in (1/2, 1), split of the remainder keeps w2 >= w3
    const double w1 = 0.5 + 0.5 * (1e-6 + (1.0 - 2e-6) * rng.uniform01());
    const double s = 1.0 - w1;
    const double u = 0.5 + 0.5 * rng.uniform01();
    return ThreeBell(w1, u * s, (1.0 - u) * s);
}

// ---- three_bell_reversal ----------------------------------------------
// Constructed equal-B pairs with distinct w1: the one with the higher
// tangle must have the LOWER linear entropy.
ClaimReport claim_three_bell_reversal(long count, uint64_t seed) {
    ClaimRun run;
    SplitMix64 rng(substream_seed(seed, 0));
    long built = 0;
    long attempts = 0;
    const long attempt_cap = 400 * (count + 1);

    while (built < count && ++attempts < attempt_cap) {
        const ThreeBell base = random_three_bell(rng);
        const double target = 0.5 + 0.5 * (1e-6 + (1.0 - 2e-6) * rng.uniform01());
        if (std::abs(target - base.w1) < 1e-6) continue;

        ThreeBell partner(1.0, 0.0, 0.0);
        try {
            partner = equal_b_three_bell_pair(base, target);
        } catch (const NoRealSolutionError&) {
            continue; // this target cannot match the base's B; redraw
        }
        ++built;

        const ThreeBell& hi = base.w1 > partner.w1 ? base : partner; // higher tangle
        const ThreeBell& lo = base.w1 > partner.w1 ? partner : base;
        const MeasureRecord mh = measure_all(make_family(FamilySpec{hi}));
        const MeasureRecord ml = measure_all(make_family(FamilySpec{lo}));

        const bool applicable = mh.tau - ml.tau > kPairTol;
        const bool b_matched = std::abs(mh.bell_b - ml.bell_b) <= kPairTol;
        const bool reversed = mh.s_linear < ml.s_linear;
        run.instance(applicable, !(b_matched && reversed), witness_for(FamilySpec{hi}, mh),
                     witness_for(FamilySpec{lo}, ml));
    }
    return run.finish("three_bell_reversal");
}

// ---- three_bell_equal_tau ----------------------------------------------
// Same w1 (hence same tangle), different splits of the remainder: the
// state with the higher B must have the lower S_L.
ClaimReport claim_three_bell_equal_tau(long count, uint64_t seed) {
    ClaimRun run;
    SplitMix64 rng(substream_seed(seed, 1));
    long built = 0;
    while (built < count) {
        const double w1 = 0.5 + 0.5 * (1e-3 + (1.0 - 2e-3) * rng.uniform01());
        const double s = 1.0 - w1;
        const double u1 = 0.5 + 0.5 * rng.uniform01();
        const double u2 = 0.5 + 0.5 * rng.uniform01();
        const ThreeBell a(w1, u1 * s, (1.0 - u1) * s);
        const ThreeBell b(w1, u2 * s, (1.0 - u2) * s);
        if (std::abs(damping(a) - damping(b)) < 1e-6) continue; // B gap too small, redraw
        ++built;

        const MeasureRecord ma = measure_all(make_family(FamilySpec{a}));
        const MeasureRecord mb = measure_all(make_family(FamilySpec{b}));
        const bool tau_matched = std::abs(ma.tau - mb.tau) <= kPairTol;

        const bool a_higher = ma.bell_b > mb.bell_b;
        const MeasureRecord& mh = a_higher ? ma : mb;
        const MeasureRecord& ml = a_higher ? mb : ma;
        const bool applicable = mh.bell_b - ml.bell_b > kPairTol;
        const bool reversed = mh.s_linear < ml.s_linear;
        run.instance(applicable, !(tau_matched && reversed),
                     witness_for(FamilySpec{a_higher ? a : b}, mh),
                     witness_for(FamilySpec{a_higher ? b : a}, ml));
    }
    return run.finish("three_bell_equal_tau");
}

// ---- munro_three_families -----------------------------------------------
// Matched-B pairs across pure/werner/mems, B drawn from the interior of
// the shared CHSH-violating band (2, 2sqrt2): higher tau -> higher S_L.
ClaimReport claim_munro_three_families(long count, uint64_t seed) {
    ClaimRun run;
    SplitMix64 rng(substream_seed(seed, 2));
    const double lo = 2.0 + 1e-3;
    const double hi = kRoot8 - 1e-3;

    for (long k = 0; k < count; ++k) {
        const double b = lo + (hi - lo) * rng.uniform01();
        FamilySpec first, second;
        switch (k % 3) {
        case 0:
            first = pure_with_bell(b);
            second = werner_with_bell(b);
            break;
        case 1:
            first = pure_with_bell(b);
            second = mems_with_bell(b);
            break;
        default:
            first = werner_with_bell(b);
            second = mems_with_bell(b);
            break;
        }
        const MeasureRecord m1 = measure_all(make_family(first));
        const MeasureRecord m2 = measure_all(make_family(second));
        const bool b_matched = std::abs(m1.bell_b - m2.bell_b) <= kPairTol;

        const bool first_higher = m1.tau > m2.tau;
        const FamilySpec& fh = first_higher ? first : second;
        const FamilySpec& fl = first_higher ? second : first;
        const MeasureRecord& mh = first_higher ? m1 : m2;
        const MeasureRecord& ml = first_higher ? m2 : m1;

        const bool applicable = mh.tau - ml.tau > kPairTol;
        const bool consistent = mh.s_linear > ml.s_linear;
        run.instance(applicable, !(b_matched && consistent), witness_for(fh, mh),
                     witness_for(fl, ml));
    }
    return run.finish("munro_three_families");
}

// ---- entropy_order_general -----------------------------------------------
// Do S_L and S induce the same order on arbitrary valid states? The
// canonical spectra pair diag(.5,.5,0,0) vs diag(.7,.1,.1,.1) is
// evaluated first (it reverses the order); the rest of the ensemble is
// Hilbert-Schmidt random pairs.
DensityMatrix diagonal_state(const std::array<double, 4>& spectrum) {
    ComplexMatrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = spectrum[static_cast<size_t>(i)];
    return DensityMatrix::validate(m);
}

std::string spectrum_label(const std::array<double, 4>& s) {
    std::ostringstream os;
    os << "diag(" << format_double(s[0]) << ", " << format_double(s[1]) << ", "
       << format_double(s[2]) << ", " << format_double(s[3]) << ")";
    return os.str();
}

ClaimReport claim_entropy_order_general(long count, uint64_t seed) {
    ClaimRun run;

    const std::array<double, 4> sp{0.5, 0.5, 0.0, 0.0};
    const std::array<double, 4> sq{0.7, 0.1, 0.1, 0.1};
    const MeasureRecord mp = measure_all(diagonal_state(sp));
    const MeasureRecord mq = measure_all(diagonal_state(sq));
    {
        const double dl = mp.s_linear - mq.s_linear;
        const double dv = mp.s_von_neumann - mq.s_von_neumann;
        const bool applicable = std::abs(dl) > kTieTol && std::abs(dv) > kTieTol;
        const bool agree = dl * dv > 0.0;
        run.instance(applicable, applicable && !agree,
                     WitnessState{spectrum_label(sp), mp}, WitnessState{spectrum_label(sq), mq});
    }

    for (long k = 1; k < count; ++k) {
        const uint64_t sa = substream_seed(seed, static_cast<uint64_t>(2 * k));
        const uint64_t sb = substream_seed(seed, static_cast<uint64_t>(2 * k + 1));
        const MeasureRecord ma = measure_all(sample_hilbert_schmidt(sa));
        const MeasureRecord mb = measure_all(sample_hilbert_schmidt(sb));
        const double dl = ma.s_linear - mb.s_linear;
        const double dv = ma.s_von_neumann - mb.s_von_neumann;
        const bool applicable = std::abs(dl) > kTieTol && std::abs(dv) > kTieTol;
        const bool agree = dl * dv > 0.0;
        run.instance(applicable, applicable && !agree,
                     WitnessState{"hilbert_schmidt(seed=" + std::to_string(sa) + ")", ma},
                     WitnessState{"hilbert_schmidt(seed=" + std::to_string(sb) + ")", mb});
    }
    return run.finish("entropy_order_general");
}

} // namespace

ThreeBell equal_b_three_bell_pair(const ThreeBell& base, double target_w1) {
    if (!(base.w1 > 0.5))
        throw InvalidFamilyParameterError("equal_b_three_bell_pair: base requires w1 > 1/2, got " +
                                          format_double(base.w1));
    if (!(target_w1 > 0.5 && target_w1 <= 1.0))
        throw InvalidFamilyParameterError(
            "equal_b_three_bell_pair: target_w1 must lie in (1/2, 1], got " +
            format_double(target_w1));

    const double q = damping(base);
    const double s = 1.0 - target_w1;
    const double p = 0.5 * (q - s + s * s);
    const double disc = s * s - 4.0 * p;
    if (disc < 0.0) {
        std::ostringstream os;
        os << "equal_b_three_bell_pair: no real solution for target_w1 = " << format_double(target_w1)
           << " (discriminant " << format_double(disc) << ")";
        throw NoRealSolutionError(os.str());
    }
    const double root = std::sqrt(disc);
    const double w2 = 0.5 * (s + root);
    double w3 = 0.5 * (s - root);
    if (w3 < -1e-15) {
        std::ostringstream os;
        os << "equal_b_three_bell_pair: no pair with nonnegative weights for target_w1 = "
           << format_double(target_w1) << " (w3' = " << format_double(w3) << ")";
        throw NoRealSolutionError(os.str());
    }
    w3 = std::max(0.0, w3);
    if (w2 > target_w1 + 1e-15) {
        std::ostringstream os;
        os << "equal_b_three_bell_pair: larger root " << format_double(w2) << " exceeds target_w1 "
           << format_double(target_w1);
        throw OrderingViolatedError(os.str());
    }
    return ThreeBell(target_w1, w2, w3);
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::mixed: default: return "mixed";
    }
}

const std::vector<std::string>& claim_catalog() {
    static const std::vector<std::string> ids{
        "two_bell_vs_pure", "three_bell_reversal", "three_bell_equal_tau",
        "munro_three_families", "entropy_order_general"};
    return ids;
}

ClaimReport verify_claim(const std::string& claim_id, long count, uint64_t seed) {
    if (count < 1) throw DomainError("verify_claim: count must be >= 1");
    if (claim_id == "two_bell_vs_pure") return claim_two_bell_vs_pure(count, seed);
    if (claim_id == "three_bell_reversal") return claim_three_bell_reversal(count, seed);
    if (claim_id == "three_bell_equal_tau") return claim_three_bell_equal_tau(count, seed);
    if (claim_id == "munro_three_families") return claim_munro_three_families(count, seed);
    if (claim_id == "entropy_order_general") return claim_entropy_order_general(count, seed);
    throw UnknownClaimError("unknown claim id: " + claim_id);
}

EntropyOrderAudit entropy_order_audit(int grid_points, long random_pairs, uint64_t seed) {
    if (grid_points < 2) throw DomainError("entropy_order_audit: need at least 2 grid points");
    EntropyOrderAudit audit;

    const FamilyKind kinds[3] = {FamilyKind::werner, FamilyKind::two_bell, FamilyKind::mems};
    for (FamilyKind kind : kinds) {
        std::vector<double> grid;
        for (int k = 1; k <= grid_points; ++k)
            grid.push_back(static_cast<double>(k) / static_cast<double>(grid_points + 1));

        std::vector<MeasureRecord> recs;
        recs.reserve(grid.size());
        for (double v : grid) recs.push_back(measure_all(make_family(family_spec_for(kind, v))));

        EntropyOrderAudit::CurveCheck check;
        check.family = family_name(kind);
        check.grid_points = grid_points;
        for (size_t i = 0; i < recs.size(); ++i)
            for (size_t j = i + 1; j < recs.size(); ++j) {
                ++check.pairs;
                const double dl = recs[i].s_linear - recs[j].s_linear;
                const double dv = recs[i].s_von_neumann - recs[j].s_von_neumann;
                if (std::abs(dl) > kTieTol && std::abs(dv) > kTieTol && dl * dv < 0.0)
                    ++check.disagreements;
            }
        audit.curve_disagreements += check.disagreements;
        audit.curves.push_back(std::move(check));
    }

    {
        const std::array<double, 4> sp{0.5, 0.5, 0.0, 0.0};
        const std::array<double, 4> sq{0.7, 0.1, 0.1, 0.1};
        const MeasureRecord mp = measure_all(diagonal_state(sp));
        const MeasureRecord mq = measure_all(diagonal_state(sq));
        audit.witness_p = WitnessState{spectrum_label(sp), mp};
        audit.witness_q = WitnessState{spectrum_label(sq), mq};
        audit.witness_confirmed =
            mp.s_linear > mq.s_linear && mp.s_von_neumann < mq.s_von_neumann;
    }

    audit.random_pairs = random_pairs;
    for (long k = 0; k < random_pairs; ++k) {
        const MeasureRecord ma =
            measure_all(sample_hilbert_schmidt(substream_seed(seed, static_cast<uint64_t>(2 * k))));
        const MeasureRecord mb = measure_all(
            sample_hilbert_schmidt(substream_seed(seed, static_cast<uint64_t>(2 * k + 1))));
        const double dl = ma.s_linear - mb.s_linear;
        const double dv = ma.s_von_neumann - mb.s_von_neumann;
        if (std::abs(dl) > kTieTol && std::abs(dv) > kTieTol && dl * dv < 0.0)
            ++audit.random_disagreements;
    }

    return audit;
}

} // namespace bellmix
