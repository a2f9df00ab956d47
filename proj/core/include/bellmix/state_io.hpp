#pragma once

#include "bellmix/state.hpp"

#include <filesystem>

namespace bellmix {

/// State file layout (.dm.json): a JSON object
///   {"basis": ["00","01","10","11"],
///    "matrix": [[[re,im], ...4], ...4]}
/// row-major in the listed product basis. Numbers are written in
/// shortest round-trip form, so load(store(rho)) is entrywise exact.

/// Throws IoError when the file cannot be written.
void store(const DensityMatrix& rho, const std::filesystem::path& path);

/// Throws IoError / ParseError, then the DensityMatrix validation
/// errors (the loaded matrix is validated before being returned).
DensityMatrix load(const std::filesystem::path& path);

} // namespace bellmix
