#pragma once

#include <string>
#include <vector>

#include "tableaux/imbalance.hpp"
#include "tableaux/verify.hpp"

namespace tableaux {

enum class OutputFormat { plain, json, csv };

/// Accepts "plain", "json", "csv". Throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Fixed CSV header for tables: shape,imbalance,v,h,d,vs,hs,black,white.
/// The shape field is a quoted comma list of parts; JSON serializes shapes
/// as arrays of integers.
std::string render_table(const std::vector<ImbalanceRecord>& records, OutputFormat fmt);
std::string render_record(const ImbalanceRecord& record, OutputFormat fmt);
std::string render_reports(const std::vector<VerificationReport>& reports,
                           OutputFormat fmt);

/// Inverse of render_table, field for field.
std::vector<ImbalanceRecord> parse_table_csv(const std::string& text);
std::vector<ImbalanceRecord> parse_table_json(const std::string& text);

/// Command-line shape syntax: comma-separated decreasing parts; the empty
/// string is the empty shape. Throws std::invalid_argument on bad input.
Shape parse_shape_arg(const std::string& text);
std::string shape_arg(const Shape& s);  ///< inverse of parse_shape_arg

}  // namespace tableaux
