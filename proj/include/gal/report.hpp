#ifndef GAL_REPORT_HPP
#define GAL_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gal/search.hpp"

namespace gal {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> format_from_string(std::string_view s);

// Stable serializations. Text mode mirrors the table wording of the
// relation ("L_a = L_b", "L_a ∩ L_b = M", ...).
std::string emit_report(const IntersectionReport& r, OutputFormat f);
std::string emit_hits(const std::vector<SearchHit>& hits, OutputFormat f);
std::string emit_search(const SearchResult& r, OutputFormat f);

std::string report_to_json_string(const IntersectionReport& r);
IntersectionReport report_from_json_string(const std::string& text);

}  // namespace gal

#endif
