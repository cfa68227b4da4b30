#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sbaf/framework.hpp"

// Line-based framework files.
//
//   # comment
//   sent Ale Str              optional pre-declaration
//   inc Ann Hil               Ann and Hil are incompatible (both ways)
//   arg a1 : Ale -> Str       premises before the arrow, one conclusion
//   name a6 n6                n(a6) = n6; undercuts are `inc` against n6
//
// Sentences used by `arg`, `inc` or `name` are declared on first use.
namespace sbaf::io {

/// Throws ParseError (line/column) for malformed input, including an input
/// that declares no sentence at all.
Sbaf parse_framework(std::string_view text);

/// Throws IoError when the file cannot be read.
Sbaf read_framework(const std::filesystem::path& path);

/// Canonical text form; parse_framework(emit_framework(sb)) == sb whenever
/// every name in the language belongs to an argument of sb.
std::string emit_framework(const Sbaf& sb);

/// FNV-1a 64 over the canonical text, as 16 hex digits.
std::string digest(const Sbaf& sb);

}  // namespace sbaf::io
