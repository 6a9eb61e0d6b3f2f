#pragma once

#include <string>
#include <vector>

namespace qlitho {

/// Shortest round-trip decimal for a double ("%.17g"): identical inputs
/// give byte-identical output, which keeps CSV/JSON artifacts deterministic.
std::string format_double(double value);

/// CSV with a header row, comma separators, LF line endings.
std::string csv_table(const std::string& header, const std::vector<std::vector<double>>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace qlitho
