// End-to-end checks of the installed command surface: runs the real
// binary with std::system and inspects exit codes and outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bellmix/family.hpp"
#include "bellmix/state_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "bellmix_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const fs::path out_file = work_dir() / "stdout.txt";
    const std::string cmd =
        std::string(BELLMIX_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cur;
        std::istringstream ls(line);
        while (std::getline(ls, cur, ',')) fields.push_back(cur);
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace

TEST_CASE("measure: JSON record for the Phi+ fixture") {
    const fs::path state = work_dir() / "bell.dm.json";
    bellmix::store(bellmix::make_family(bellmix::Pure{1.0 / std::sqrt(2.0)}), state);

    const RunResult r = run_cli("measure --in " + state.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(std::abs(j["tau"].get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(j["bell_b"].get<double>() - 2.8284271247461903) < 1e-6);
    CHECK(std::abs(j["eof"].get<double>() - 1.0) < 1e-9);
    CHECK(std::abs(j["s_linear"].get<double>()) < 1e-9);
}

TEST_CASE("measure: malformed and missing files exit 2") {
    const fs::path bad = work_dir() / "bad.dm.json";
    std::ofstream(bad) << "{\"matrix\": [[1,2],[3,4]]}";
    CHECK(run_cli("measure --in " + bad.string()).exit_code == 2);
    CHECK(run_cli("measure --in " + (work_dir() / "missing.dm.json").string()).exit_code == 2);

    std::ofstream(bad) << "binary garbage \x01\x02";
    CHECK(run_cli("measure --in " + bad.string()).exit_code == 2);
}

TEST_CASE("family: two-Bell curve satisfies B = 2 sqrt(1+tau)") {
    const fs::path csv = work_dir() / "curve.csv";
    const RunResult r =
        run_cli("family --name two_bell --grid 0.5:1.0:0.01 --out " + csv.string());
    REQUIRE(r.exit_code == 0);

    const auto rows = parse_csv(slurp(csv));
    REQUIRE(rows.size() == 52); // header + 51 grid points
    CHECK(rows[0][0] == "family");
    for (size_t i = 1; i < rows.size(); ++i) {
        const double tau = std::stod(rows[i][2]);
        const double b = std::stod(rows[i][3]);
        CHECK(std::abs(b - 2.0 * std::sqrt(1.0 + tau)) < 1e-9);
    }
}

TEST_CASE("family: emitted states round-trip through measure") {
    const fs::path csv = work_dir() / "werner.csv";
    const fs::path states = work_dir() / "werner_states";
    const RunResult r = run_cli("family --name werner --grid 0.2:0.8:0.3 --out " + csv.string() +
                                " --emit-state " + states.string());
    REQUIRE(r.exit_code == 0);

    const auto rows = parse_csv(slurp(csv));
    REQUIRE(rows.size() == 4); // header + {0.2, 0.5, 0.8}
    for (size_t i = 1; i < rows.size(); ++i) {
        std::ostringstream name;
        name << "werner_" << std::setw(4) << std::setfill('0') << (i - 1) << ".dm.json";
        const RunResult m = run_cli("measure --in " + (states / name.str()).string());
        REQUIRE(m.exit_code == 0);
        const json j = json::parse(m.out);
        CHECK(std::abs(j["tau"].get<double>() - std::stod(rows[i][2])) < 1e-9);
        CHECK(std::abs(j["bell_b"].get<double>() - std::stod(rows[i][3])) < 1e-9);
        CHECK(std::abs(j["s_von_neumann"].get<double>() - std::stod(rows[i][5])) < 1e-9);
    }
}

TEST_CASE("family: bad arguments exit 2") {
    CHECK(run_cli("family --name nosuch --grid 0:1:0.1").exit_code == 2);
    CHECK(run_cli("family --name werner --grid 0:1").exit_code == 2);
    CHECK(run_cli("family --name werner --grid 0:2:0.1").exit_code == 2); // x > 1
    CHECK(run_cli("family --name werner").exit_code == 2);
}

TEST_CASE("pair: prints the constructed equal-B partner") {
    const RunResult r = run_cli("pair --base 0.7,0.2,0.1 --target-w1 0.6 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    const std::string desc = j["pair"]["state"].get<std::string>();
    CHECK(desc.find("0.38708286933869") != std::string::npos);
    CHECK(std::abs(j["pair"]["record"]["bell_b"].get<double>() - 2.0) < 1e-9);
    CHECK(std::abs(j["base"]["record"]["bell_b"].get<double>() - 2.0) < 1e-9);

    // no real solution -> input error
    CHECK(run_cli("pair --base 0.9,0.05,0.05 --target-w1 0.55").exit_code == 2);
    CHECK(run_cli("pair --base 0.4,0.3,0.3 --target-w1 0.6").exit_code == 2);
}

TEST_CASE("claim: verdicts map to exit codes") {
    const RunResult holds = run_cli("claim --id three_bell_reversal --count 2000 --seed 7");
    CHECK(holds.exit_code == 0);
    CHECK(holds.out.find("verdict holds") != std::string::npos);

    const RunResult refuted = run_cli("claim --id entropy_order_general --count 200 --seed 3");
    CHECK(refuted.exit_code == 1);
    CHECK(refuted.out.find("witness") != std::string::npos);
    CHECK(refuted.out.find("diag(0.5, 0.5, 0, 0)") != std::string::npos);

    const RunResult as_json =
        run_cli("claim --id entropy_order_general --count 200 --seed 3 --json");
    CHECK(as_json.exit_code == 1);
    const json j = json::parse(as_json.out);
    CHECK(j["violations"].get<long>() >= 1);
    CHECK(j.contains("witness"));

    CHECK(run_cli("claim --id nonsense --count 10").exit_code == 2);
}

TEST_CASE("scan and frontier: seeded runs are byte-identical") {
    const fs::path s1 = work_dir() / "scan1.csv";
    const fs::path s2 = work_dir() / "scan2.csv";
    REQUIRE(run_cli("scan --source bell_diagonal --count 200 --seed 11 --out " + s1.string())
                .exit_code == 0);
    REQUIRE(run_cli("scan --source bell_diagonal --count 200 --seed 11 --out " + s2.string())
                .exit_code == 0);
    CHECK(slurp(s1) == slurp(s2));
    CHECK(slurp(s1).rfind("source,seed,index,tau,bell_b,s_linear,s_von_neumann\n", 0) == 0);

    const fs::path fr = work_dir() / "frontier.csv";
    REQUIRE(run_cli("frontier --in " + s1.string() + " --bin-width 0.1 --out " + fr.string())
                .exit_code == 0);
    const auto rows = parse_csv(slurp(fr));
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == std::vector<std::string>{"b_lo", "b_hi", "tau_min", "tau_max", "sl_min",
                                              "sl_max"});

    // family source scans
    const RunResult fam = run_cli("scan --source werner --count 11 --seed 1");
    CHECK(fam.exit_code == 0);
    CHECK(parse_csv(fam.out).size() == 12);

    CHECK(run_cli("scan --source nosuch --count 5").exit_code == 2);
    CHECK(run_cli("frontier --in " + (work_dir() / "missing.csv").string()).exit_code == 2);
}

TEST_CASE("audit: expected evidence exits 0") {
    const RunResult r = run_cli("audit --grid 33 --count 100 --seed 17 --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["curve_disagreements"].get<long>() == 0);
    CHECK(j["witness_confirmed"].get<bool>());
    CHECK(j["as_expected"].get<bool>());
}

TEST_CASE("usage errors print help and exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("definitely-not-a-command").exit_code == 2);
    CHECK(run_cli("claim").exit_code == 2); // missing required --id
}
