#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bnkit/bn_numbers.hpp"

namespace bnkit {

/// Parses comma-separated integers ("-3,-1,1"). Whitespace around entries is
/// ignored; an empty or all-blank string yields an empty list.
std::vector<Int> parse_int_list(std::string_view text, char sep = ',');
std::string format_int_list(const std::vector<Int>& values, char sep = ',');

Int parse_int(std::string_view text);
std::string_view trim(std::string_view text);

} // namespace bnkit
