#include "bellmix/state_io.hpp"

#include "bellmix/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace bellmix {

namespace {
const char* kBasis[4] = {"00", "01", "10", "11"};
}

void store(const DensityMatrix& rho, const std::filesystem::path& path) {
    nlohmann::json j;
    j["basis"] = {kBasis[0], kBasis[1], kBasis[2], kBasis[3]};
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c) {
            const cplx& v = rho(r, c);
            row.push_back({v.real(), v.imag()});
        }
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

DensityMatrix load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }

    if (!j.is_object() || !j.contains("matrix"))
        throw ParseError(path.string() + ": missing \"matrix\" field");
    if (j.contains("basis")) {
        const auto& b = j["basis"];
        bool ok = b.is_array() && b.size() == 4;
        for (size_t i = 0; ok && i < 4; ++i) ok = b[i].is_string() && b[i] == kBasis[i];
        if (!ok)
            throw ParseError(path.string() + ": unsupported basis, expected 00,01,10,11 order");
    }

    const auto& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != 4)
        throw ParseError(path.string() + ": \"matrix\" must be a 4x4 array");

    ComplexMatrix4 m;
    for (int r = 0; r < 4; ++r) {
        const auto& row = rows[static_cast<size_t>(r)];
        if (!row.is_array() || row.size() != 4)
            throw ParseError(path.string() + ": \"matrix\" must be a 4x4 array");
        for (int c = 0; c < 4; ++c) {
            const auto& entry = row[static_cast<size_t>(c)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw ParseError(path.string() + ": entries must be [re, im] pairs");
            m(r, c) = cplx(entry[0].get<double>(), entry[1].get<double>());
        }
    }

    return DensityMatrix::validate(m);
}

} // namespace bellmix
