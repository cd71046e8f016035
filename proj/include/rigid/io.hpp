#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rigid/certify.hpp"
#include "rigid/model.hpp"

namespace rigid {

inline constexpr int kFileFormatVersion = 1;

struct ParsedFramework {
  Framework framework;
  /// Present when every member carries a "stress" value.
  std::optional<Stress> stress;
};

/// Parse a framework file:
///   {"format": 1, "dimension": d, "vertices": [[x, ...], ...],
///    "members": [{"i": 0, "j": 1, "kind": "bar", "stress": 1.0}, ...]}
/// Errors are InputError with the offending field path or line/column.
ParsedFramework parse_framework(std::string_view text);

/// Inverse of parse_framework; numbers are written with round-trip precision.
std::string write_framework(const Framework& f, const std::optional<Stress>& stress = std::nullopt);

std::string write_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace rigid
