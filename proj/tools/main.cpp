// bellmix CLI: measures, family curves, equal-B pair construction,
// claim verification, Monte Carlo scans, frontier extraction and the
// entropy-order audit, all file-based.
//
// Exit codes: 0 success (claim/audit: expectation met), 1 refuted
// claim or unexpected audit evidence, 2 usage or input errors.

#include "bellmix/chsh.hpp"
#include "bellmix/claims.hpp"
#include "bellmix/curves.hpp"
#include "bellmix/errors.hpp"
#include "bellmix/format.hpp"
#include "bellmix/scan.hpp"
#include "bellmix/state_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace bellmix;
using nlohmann::json;

json record_json(const MeasureRecord& r) {
    return json{{"tau", r.tau},
                {"eof", r.eof},
                {"m_value", r.m_value},
                {"bell_b", r.bell_b},
                {"s_linear", r.s_linear},
                {"s_von_neumann", r.s_von_neumann}};
}

json witness_json(const WitnessState& w) {
    return json{{"state", w.description}, {"record", record_json(w.record)}};
}

void print_witness_block(std::ostream& out, const WitnessState& a, const WitnessState& b) {
    auto line = [&out](const WitnessState& w) {
        out << "  " << w.description << "\n"
            << "    tau=" << format_double(w.record.tau) << " eof=" << format_double(w.record.eof)
            << " B=" << format_double(w.record.bell_b)
            << " S_L=" << format_double(w.record.s_linear)
            << " S=" << format_double(w.record.s_von_neumann) << "\n";
    };
    line(a);
    line(b);
}

struct GridArg {
    double lo = 0.0, hi = 1.0, step = 0.01;
};

GridArg parse_grid_arg(const std::string& text) {
    const size_t c1 = text.find(':');
    const size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError("grid must be lo:hi:step, got '" + text + "'");
    GridArg g;
    g.lo = parse_double(text.substr(0, c1));
    g.hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
    g.step = parse_double(text.substr(c2 + 1));
    return g;
}

FamilyKind family_kind_from(const std::string& name) {
    if (name == "pure") return FamilyKind::pure;
    if (name == "werner") return FamilyKind::werner;
    if (name == "mems") return FamilyKind::mems;
    if (name == "two_bell") return FamilyKind::two_bell;
    if (name == "three_bell") return FamilyKind::three_bell;
    throw ParseError("unknown family '" + name + "'");
}

/// stdout when path is empty
void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

int cmd_measure(const std::string& in_path) {
    const DensityMatrix rho = load(in_path);
    std::cout << record_json(measure_all(rho)).dump() << "\n";
    return 0;
}

int cmd_family(const std::string& name, const std::string& grid_text, const std::string& out_path,
               const std::string& emit_dir) {
    const FamilyKind kind = family_kind_from(name);
    const GridArg g = parse_grid_arg(grid_text);
    const std::vector<double> grid = make_grid(g.lo, g.hi, g.step);
    const std::vector<CurvePoint> curve = family_curve(kind, grid);

    std::ostringstream csv;
    csv << "family,parameter,tau,bell_b,s_linear,s_von_neumann,closed_form_bell_b,pipeline_gap\n";
    for (const CurvePoint& pt : curve) {
        csv << name << ',' << format_double(pt.parameter) << ',' << format_double(pt.measured.tau)
            << ',' << format_double(pt.measured.bell_b) << ','
            << format_double(pt.measured.s_linear) << ','
            << format_double(pt.measured.s_von_neumann) << ','
            << format_double(pt.expected.bell_b) << ',' << format_double(pt.pipeline_gap) << '\n';
    }
    write_text(out_path, csv.str());

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (size_t i = 0; i < curve.size(); ++i) {
            std::ostringstream file;
            file << name << '_' << std::setw(4) << std::setfill('0') << i << ".dm.json";
            store(make_family(curve[i].family), std::filesystem::path(emit_dir) / file.str());
        }
    }
    return 0;
}

int cmd_pair(const std::string& base_text, double target_w1, bool as_json) {
    std::vector<double> w;
    std::string cur;
    std::istringstream is(base_text);
    while (std::getline(is, cur, ',')) w.push_back(parse_double(cur));
    if (w.size() != 3) throw ParseError("--base must be w1,w2,w3");

    const ThreeBell base(w[0], w[1], w[2]);
    const ThreeBell partner = equal_b_three_bell_pair(base, target_w1);
    const MeasureRecord mb = measure_all(make_family(FamilySpec{base}));
    const MeasureRecord mp = measure_all(make_family(FamilySpec{partner}));

    if (as_json) {
        json j{{"base", witness_json({describe(FamilySpec{base}), mb})},
               {"pair", witness_json({describe(FamilySpec{partner}), mp})}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "equal-B three-Bell pair\n";
        print_witness_block(std::cout, {describe(FamilySpec{base}), mb},
                            {describe(FamilySpec{partner}), mp});
    }
    return 0;
}

int cmd_claim(const std::string& id, long count, uint64_t seed, bool as_json) {
    const ClaimReport report = verify_claim(id, count, seed);

    if (as_json) {
        json j{{"claim_id", report.claim_id},
               {"ensemble_size", report.ensemble_size},
               {"applicable", report.applicable},
               {"violations", report.violations},
               {"verdict", verdict_name(report.verdict)}};
        if (report.witness)
            j["witness"] = json{{"first", witness_json(report.witness->first)},
                                {"second", witness_json(report.witness->second)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "claim " << report.claim_id << ": verdict " << verdict_name(report.verdict)
                  << " (" << report.violations << " violations, " << report.applicable
                  << " applicable, " << report.ensemble_size << " instances)\n";
        if (report.witness) {
            std::cout << "witness:\n";
            print_witness_block(std::cout, report.witness->first, report.witness->second);
        }
    }
    return report.verdict == Verdict::holds ? 0 : 1;
}

ScanSource scan_source_from(const std::string& name, double lo, double hi, bool lo_set,
                            bool hi_set) {
    if (name == "hilbert_schmidt") return ScanSource::hilbert_schmidt();
    if (name == "bell_diagonal") return ScanSource::bell_diagonal();
    const FamilyKind kind = family_kind_from(name);
    if (!lo_set) lo = kind == FamilyKind::mems ? 0.01 : (kind == FamilyKind::three_bell ? 1.0 / 3.0 : 0.0);
    if (!hi_set) hi = 1.0;
    return ScanSource::family_grid(kind, lo, hi);
}

int cmd_scan(const std::string& source_name, long count, uint64_t seed, double lo, double hi,
             bool lo_set, bool hi_set, const std::string& out_path) {
    const ScanSource source = scan_source_from(source_name, lo, hi, lo_set, hi_set);
    const std::vector<ScanRecord> records = region_scan(source, count, seed);
    std::ostringstream csv;
    write_scan_csv(csv, records);
    write_text(out_path, csv.str());
    return 0;
}

int cmd_frontier(const std::string& in_path, double bin_width, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw IoError("cannot open for reading: " + in_path);
    const std::vector<ScanRecord> records = read_scan_csv(in);
    const std::vector<FrontierBin> bins = frontier(records, bin_width);
    std::ostringstream csv;
    write_frontier_csv(csv, bins);
    write_text(out_path, csv.str());
    return 0;
}

int cmd_audit(int grid_points, long count, uint64_t seed, bool as_json) {
    const EntropyOrderAudit audit = entropy_order_audit(grid_points, count, seed);

    if (as_json) {
        json curves = json::array();
        for (const auto& c : audit.curves)
            curves.push_back(json{{"family", c.family},
                                  {"grid_points", c.grid_points},
                                  {"pairs", c.pairs},
                                  {"disagreements", c.disagreements}});
        json j{{"curves", curves},
               {"curve_disagreements", audit.curve_disagreements},
               {"witness_confirmed", audit.witness_confirmed},
               {"witness_p", witness_json(audit.witness_p)},
               {"witness_q", witness_json(audit.witness_q)},
               {"random_pairs", audit.random_pairs},
               {"random_disagreements", audit.random_disagreements},
               {"as_expected", audit.as_expected()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "entropy-order audit (S_L vs von Neumann)\n";
        for (const auto& c : audit.curves)
            std::cout << "  curve " << c.family << ": " << c.pairs << " ordered pairs, "
                      << c.disagreements << " disagreements\n";
        std::cout << "  general-spectrum reversal " << (audit.witness_confirmed ? "found" : "NOT found")
                  << ":\n";
        print_witness_block(std::cout, audit.witness_p, audit.witness_q);
        std::cout << "  random ensemble: " << audit.random_disagreements << " of "
                  << audit.random_pairs << " pairs disagree\n";
    }
    return audit.as_expected() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit entanglement, CHSH violation and mixedness toolkit"};
    app.require_subcommand(1);

    // measure
    auto* measure = app.add_subcommand("measure", "measure one state file (JSON record on stdout)");
    std::string measure_in;
    measure->add_option("--in", measure_in, "state file (.dm.json)")->required();

    // family
    auto* family = app.add_subcommand("family", "evaluate a family along a parameter grid (CSV)");
    std::string family_name_arg, family_grid, family_out, family_emit;
    family->add_option("--name", family_name_arg, "pure|werner|mems|two_bell|three_bell")
        ->required();
    family->add_option("--grid", family_grid, "lo:hi:step, endpoints inclusive")->required();
    family->add_option("--out", family_out, "CSV path (default stdout)");
    family->add_option("--emit-state", family_emit, "also write one .dm.json per grid point here");

    // pair
    auto* pair = app.add_subcommand("pair", "equal-B three-Bell pair construction");
    std::string pair_base;
    double pair_target = 0.0;
    bool pair_json = false;
    pair->add_option("--base", pair_base, "base weights w1,w2,w3")->required();
    pair->add_option("--target-w1", pair_target, "first weight of the partner state")->required();
    pair->add_flag("--json", pair_json, "machine-readable output");

    // claim
    auto* claim = app.add_subcommand("claim", "verify an ordering claim over an ensemble");
    std::string claim_id;
    long claim_count = 1000;
    uint64_t claim_seed = 1;
    bool claim_json = false;
    std::string claim_ids_help;
    for (const std::string& id : claim_catalog()) claim_ids_help += (claim_ids_help.empty() ? "" : "|") + id;
    claim->add_option("--id", claim_id, claim_ids_help)->required();
    claim->add_option("--count", claim_count, "ensemble size (default 1000)");
    claim->add_option("--seed", claim_seed, "rng seed (default 1)");
    claim->add_flag("--json", claim_json, "machine-readable output");

    // scan
    auto* scan = app.add_subcommand("scan", "Monte Carlo / grid scan of (tau, B, S_L, S) (CSV)");
    std::string scan_source = "hilbert_schmidt", scan_out;
    long scan_count = 1000;
    uint64_t scan_seed = 1;
    double scan_lo = 0.0, scan_hi = 1.0;
    scan->add_option("--source", scan_source,
                     "hilbert_schmidt|bell_diagonal|pure|werner|mems|two_bell|three_bell");
    scan->add_option("--count", scan_count, "number of records (default 1000)");
    scan->add_option("--seed", scan_seed, "rng seed (default 1)");
    auto* scan_lo_opt = scan->add_option("--lo", scan_lo, "family grid lower endpoint");
    auto* scan_hi_opt = scan->add_option("--hi", scan_hi, "family grid upper endpoint");
    scan->add_option("--out", scan_out, "CSV path (default stdout)");

    // frontier
    auto* front = app.add_subcommand("frontier", "per-B-bin tau/S_L extrema of a scan (CSV)");
    std::string front_in, front_out;
    double front_bin = 0.05;
    front->add_option("--in", front_in, "scan CSV")->required();
    front->add_option("--bin-width", front_bin, "B bin width (default 0.05)");
    front->add_option("--out", front_out, "CSV path (default stdout)");

    // audit
    auto* audit = app.add_subcommand("audit", "entropy-order audit: S_L vs von Neumann ordering");
    int audit_grid = 99;
    long audit_count = 1000;
    uint64_t audit_seed = 1;
    bool audit_json = false;
    audit->add_option("--grid", audit_grid, "points per family curve (default 99)");
    audit->add_option("--count", audit_count, "random state pairs (default 1000)");
    audit->add_option("--seed", audit_seed, "rng seed (default 1)");
    audit->add_flag("--json", audit_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (measure->parsed()) return cmd_measure(measure_in);
        if (family->parsed()) return cmd_family(family_name_arg, family_grid, family_out, family_emit);
        if (pair->parsed()) return cmd_pair(pair_base, pair_target, pair_json);
        if (claim->parsed()) return cmd_claim(claim_id, claim_count, claim_seed, claim_json);
        if (scan->parsed())
            return cmd_scan(scan_source, scan_count, scan_seed, scan_lo, scan_hi,
                            scan_lo_opt->count() > 0, scan_hi_opt->count() > 0, scan_out);
        if (front->parsed()) return cmd_frontier(front_in, front_bin, front_out);
        if (audit->parsed()) return cmd_audit(audit_grid, audit_count, audit_seed, audit_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
