#include "bnkit/text.hpp"

#include <charconv>

#include "bnkit/error.hpp"

namespace bnkit {

std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

Int parse_int(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorKind::parse_error, "not an integer: '" + std::string(text) + "'");
    return value;
}

std::vector<Int> parse_int_list(std::string_view text, char sep) {
    std::vector<Int> out;
    text = trim(text);
    if (text.empty()) return out;
    while (true) {
        const auto pos = text.find(sep);
        out.push_back(parse_int(text.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return out;
}

std::string format_int_list(const std::vector<Int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace bnkit
