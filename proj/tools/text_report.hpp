#pragma once

// Indented "key: value" rendering of a JSON report. Scalars and arrays
// without objects are printed as compact JSON after the colon; objects nest
// by two spaces; arrays of objects list "-" items. parse_text_report is the
// inverse and is what tests use to compare the two output formats.

#include <string>

#include "kouch/io.hpp"

namespace kouch::cli {

std::string render_text_report(const Json& report);
Json parse_text_report(const std::string& text);

}  // namespace kouch::cli
