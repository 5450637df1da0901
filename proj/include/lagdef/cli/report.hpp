#pragma once

#include "lagdef/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace lagdef::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "lagdef-report/1";

enum class Format { Json, Text };

Format parse_format(std::string_view name);

std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 lowercase hex digits.
std::string digest(std::string_view bytes);

/// Rationals always travel as strings so no consumer parses them as floats.
inline Json rational_json(const Rational &r) { return to_string(r); }

/// JSON: pretty-printed with a trailing newline. Text: one `path: value`
/// line per leaf, for people rather than programs.
std::string render(const Json &report, Format format);

} // namespace lagdef::cli
