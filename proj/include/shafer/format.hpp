#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace shafer {

/// Shortest decimal string that parses back to exactly `value`.
[[nodiscard]] std::string format_real(double value);

/// Parses the whole of `text` as a double; nullopt on any trailing garbage.
[[nodiscard]] std::optional<double> parse_real(std::string_view text);

}  // namespace shafer
