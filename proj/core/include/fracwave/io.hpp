#pragma once

#include "fracwave/field.hpp"

#include <string>

namespace fracwave::io {

/// Formats a double with 17 significant digits, '.' decimal point
/// regardless of locale.
std::string format_double(double v);

/// Writes text atomically (temp file in the same directory + rename).
void atomic_write_text(const std::string& path, const std::string& text);

/// Field CSV: header "i[,j[,k]],re,im", one row per grid point.
void write_field_csv(const std::string& path, const Field& field);

/// Reads a field written by write_field_csv onto the given grid.
Field read_field_csv(const std::string& path, const TorusGrid& grid);

/// JSON manifest describing a field file: grid metadata, data path, and
/// any extra key/value pairs (pre-rendered JSON object text).
std::string manifest_json(const TorusGrid& grid, const std::string& data_path,
                          const std::string& extra_json_object);

} // namespace fracwave::io
