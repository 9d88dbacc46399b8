#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

namespace pcore {

// Six significant digits, as used by every report.
std::string format_number(double x);

// Shortest decimal that parses back to the same double.
std::string format_exact(double x);

// Writes through a sibling temporary file and renames it over `path` once
// `body` returns, so a failure never leaves a partial file behind. Throws
// Error on I/O failure; exceptions from `body` propagate after cleanup.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& body);

}  // namespace pcore
