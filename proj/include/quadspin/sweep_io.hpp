#pragma once

#include <string>
#include <string_view>

#include "quadspin/analysis.hpp"

namespace quadspin {

/// One value formatted with 12 significant digits ("%.12g").
std::string format_value(double v);

/// CSV with header
///   alpha,beta,eta,theta,phi,concurrence,magnetization,e1,e2,e3,e4
/// one row per record, 12 significant digits, LF line endings.
std::string to_csv(const SweepResult& result);

/// JSON document with the sweep metadata and the same records; numbers are
/// printed with the same 12-significant-digit formatting as the CSV.
std::string to_json(const SweepResult& result);

/// Write content to path; throws IoFailure if the file cannot be written.
void write_file(const std::string& path, std::string_view content);

}  // namespace quadspin
