#include "bellmix/scan.hpp"

#include "bellmix/errors.hpp"
#include "bellmix/format.hpp"
#include "bellmix/sampling.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace bellmix {

ScanSource ScanSource::hilbert_schmidt() { return ScanSource{Kind::hilbert_schmidt, {}, 0, 0}; }

ScanSource ScanSource::bell_diagonal() { return ScanSource{Kind::bell_diagonal, {}, 0, 0}; }

ScanSource ScanSource::family_grid(FamilyKind kind, double lo, double hi) {
    return ScanSource{Kind::family, kind, lo, hi};
}

std::string ScanSource::tag() const {
    switch (kind) {
    case Kind::hilbert_schmidt: return "hilbert_schmidt";
    case Kind::bell_diagonal: return "bell_diagonal";
    case Kind::family: default: return family_name(family);
    }
}

std::vector<ScanRecord> region_scan(const ScanSource& source, long n, uint64_t seed) {
    if (n < 1) throw DomainError("region_scan: n must be >= 1");

    std::vector<ScanRecord> records;
    records.reserve(static_cast<size_t>(n));
    const std::string tag = source.tag();

    for (long i = 0; i < n; ++i) {
        MeasureRecord m;
        switch (source.kind) {
        case ScanSource::Kind::hilbert_schmidt:
            m = measure_all(sample_hilbert_schmidt(substream_seed(seed, static_cast<uint64_t>(i))));
            break;
        case ScanSource::Kind::bell_diagonal:
            m = measure_all(sample_bell_diagonal(substream_seed(seed, static_cast<uint64_t>(i))));
            break;
        case ScanSource::Kind::family: {
            const double param =
                n == 1 ? source.lo
                       : source.lo + (source.hi - source.lo) * static_cast<double>(i) /
                             static_cast<double>(n - 1);
            m = measure_all(make_family(family_spec_for(source.family, param)));
            break;
        }
        }
        records.push_back(
            ScanRecord{tag, seed, i, m.tau, m.bell_b, m.s_linear, m.s_von_neumann});
    }
    return records;
}

std::vector<FrontierBin> frontier(const std::vector<ScanRecord>& records, double bin_width) {
    if (records.empty()) throw EmptyInputError("frontier: no records");
    if (!(bin_width > 0.0)) throw DomainError("frontier: bin_width must be positive");

    std::map<long, FrontierBin> bins;
    for (const ScanRecord& r : records) {
        const long k = static_cast<long>(std::floor(r.bell_b / bin_width));
        auto [it, fresh] = bins.try_emplace(k);
        FrontierBin& b = it->second;
        if (fresh) {
            b.b_lo = static_cast<double>(k) * bin_width;
            b.b_hi = static_cast<double>(k + 1) * bin_width;
            b.tau_min = b.tau_max = r.tau;
            b.sl_min = b.sl_max = r.s_linear;
        } else {
            b.tau_min = std::min(b.tau_min, r.tau);
            b.tau_max = std::max(b.tau_max, r.tau);
            b.sl_min = std::min(b.sl_min, r.s_linear);
            b.sl_max = std::max(b.sl_max, r.s_linear);
        }
    }

    std::vector<FrontierBin> out;
    out.reserve(bins.size());
    for (auto& [k, b] : bins) out.push_back(b);
    return out;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records) {
    out << "source,seed,index,tau,bell_b,s_linear,s_von_neumann\n";
    for (const ScanRecord& r : records) {
        out << r.source << ',' << r.seed << ',' << r.index << ',' << format_double(r.tau) << ','
            << format_double(r.bell_b) << ',' << format_double(r.s_linear) << ','
            << format_double(r.s_von_neumann) << '\n';
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::vector<ScanRecord> read_scan_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("scan csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "source,seed,index,tau,bell_b,s_linear,s_von_neumann")
        throw ParseError("scan csv: unexpected header '" + line + "'");

    std::vector<ScanRecord> records;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 7) {
            std::ostringstream os;
            os << "scan csv: line " << lineno << " has " << f.size() << " fields, expected 7";
            throw ParseError(os.str());
        }
        ScanRecord r;
        r.source = f[0];
        r.seed = parse_u64(f[1]);
        r.index = static_cast<long>(parse_u64(f[2]));
        r.tau = parse_double(f[3]);
        r.bell_b = parse_double(f[4]);
        r.s_linear = parse_double(f[5]);
        r.s_von_neumann = parse_double(f[6]);
        records.push_back(std::move(r));
    }
    return records;
}

void write_frontier_csv(std::ostream& out, const std::vector<FrontierBin>& bins) {
    out << "b_lo,b_hi,tau_min,tau_max,sl_min,sl_max\n";
    for (const FrontierBin& b : bins) {
        out << format_double(b.b_lo) << ',' << format_double(b.b_hi) << ','
            << format_double(b.tau_min) << ',' << format_double(b.tau_max) << ','
            << format_double(b.sl_min) << ',' << format_double(b.sl_max) << '\n';
    }
}

} // namespace bellmix
