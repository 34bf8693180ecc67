#pragma once

#include <cstdio>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

namespace sadi {

/// Shortest round-trip-safe decimal form at 17 significant digits.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Writes via a temp file in the target directory, then renames into place.
/// The destination never holds a partial file; the temp file is removed on
/// failure. Throws IoError.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& fill);

}  // namespace sadi
