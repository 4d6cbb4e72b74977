#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gchar {

std::string trim(std::string_view s);

/// Splits on `sep` at bracket depth zero; (), [] and {} all nest.
std::vector<std::string> split_top_level(std::string_view s, char sep);

/// Removes one pair of enclosing brackets `open`/`close` after trimming;
/// throws Parse if they are missing.
std::string strip_enclosing(std::string_view s, char open, char close);

long parse_long(std::string_view s);

/// Splits "2*L1 - 1/2*L2 + L3" into (coefficient text, label text) pairs;
/// signs are split only at bracket depth zero. The coefficient text includes
/// the sign ("-1/2", "+1", "-1").
std::vector<std::pair<std::string, std::string>> split_linear_combination(std::string_view s);

}  // namespace gchar
