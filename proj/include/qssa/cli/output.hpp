#ifndef QSSA_CLI_OUTPUT_HPP
#define QSSA_CLI_OUTPUT_HPP

/**
 * @file output.hpp
 * @brief Deterministic CSV and JSON writers.
 *
 * Doubles are printed with 17 significant digits (`%.17g`), so equal inputs
 * give byte-equal files. Lines end in LF. Non-finite numbers become `null` in
 * JSON and `nan`/`inf` in CSV.
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qssa::cli {

using Json = nlohmann::ordered_json;

std::string format_double(double v);

/// Two-space indented JSON with the number formatting above and a trailing newline.
std::string dump_json(const Json& value);

void write_text(const std::filesystem::path& path, std::string_view text);

void write_json(const std::filesystem::path& path, const Json& value);

/// `columns[j][i]` is row i of column j; all columns must have equal length.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace qssa::cli

#endif  // QSSA_CLI_OUTPUT_HPP
