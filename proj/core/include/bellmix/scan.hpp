#pragma once

#include "bellmix/curves.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bellmix {

/// What to sample: one of the two samplers, or a family parameter grid.
struct ScanSource {
    enum class Kind { hilbert_schmidt, bell_diagonal, family };

    Kind kind = Kind::hilbert_schmidt;
    FamilyKind family = FamilyKind::werner;
    double lo = 0.0, hi = 1.0; // family grid endpoints, inclusive

    static ScanSource hilbert_schmidt();
    static ScanSource bell_diagonal();
    static ScanSource family_grid(FamilyKind kind, double lo, double hi);

    std::string tag() const;
};

struct ScanRecord {
    std::string source;
    uint64_t seed = 0;
    long index = 0;
    double tau = 0.0;
    double bell_b = 0.0;
    double s_linear = 0.0;
    double s_von_neumann = 0.0;
};

/// n records, deterministic given seed; sampler records use substream
/// (seed, index), family records walk the grid lo..hi in index order.
std::vector<ScanRecord> region_scan(const ScanSource& source, long n, uint64_t seed);

/// Per-B-bin extrema of tau and S_L. Bins are closed-open multiples of
/// bin_width anchored at 0; empty bins are omitted.
struct FrontierBin {
    double b_lo = 0.0, b_hi = 0.0;
    double tau_min = 0.0, tau_max = 0.0;
    double sl_min = 0.0, sl_max = 0.0;
};

/// Throws EmptyInputError for an empty record list.
std::vector<FrontierBin> frontier(const std::vector<ScanRecord>& records, double bin_width);

/// CSV: header `source,seed,index,tau,bell_b,s_linear,s_von_neumann`,
/// floats in shortest round-trip form.
void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records);
std::vector<ScanRecord> read_scan_csv(std::istream& in);

/// CSV: header `b_lo,b_hi,tau_min,tau_max,sl_min,sl_max`.
void write_frontier_csv(std::ostream& out, const std::vector<FrontierBin>& bins);

} // namespace bellmix
