#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbaf/deductive.hpp"
#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"

// Command logic behind the CLI, usable without a process boundary.
namespace sbaf::io {

enum class Mode { arguments, language };

std::string_view to_string(Mode mode);
/// Throws ConfigError for anything but "arguments" or "language".
Mode parse_mode(std::string_view name);

struct SolveOptions {
  Semantics semantics = Semantics::admissible;
  /// Defaults to language for adequate semantics, arguments otherwise.
  std::optional<Mode> mode;
  bool confident = false;
  EnumerationLimits limits;
  SupportRule support_rule = SupportRule::conclusion;
};

struct Diagnostics {
  bool saturated = false;
  bool strongly_saturated = false;
  std::size_t arguments = 0;
  std::size_t sentences = 0;
  EnumerationLimits limits;
  std::optional<SupportRule> support_rule;
};

/// Enumeration result. Ids inside an extension and the extensions themselves
/// are sorted as strings, so the document is stable across runs.
struct ResultDocument {
  std::string digest;
  Semantics semantics = Semantics::admissible;
  Mode mode = Mode::arguments;
  bool confident = false;
  std::vector<std::vector<std::string>> extensions;
  Diagnostics diagnostics;
};

/// Argument-mode output of a language semantics maps each S to its strong or
/// weak argument set; language-mode output of an argument semantics maps each
/// E to Sent(E). Duplicates are dropped after mapping.
ResultDocument solve(const Sbaf& sb, const SolveOptions& options);

nlohmann::json to_json(const ResultDocument& doc);
/// One extension per line, ids comma-joined.
std::string to_plain(const ResultDocument& doc);

struct Verdict {
  bool accepted = false;
  /// First violated clause, or a confirmation when accepted.
  std::string explanation;
};

/// Checks a single extension. For adequate semantics `members` are sentence
/// ids, otherwise argument ids. Throws LookupError for unknown ids.
Verdict check(const Sbaf& sb, Semantics semantics, const std::vector<std::string>& members,
              const SolveOptions& options = {});

nlohmann::json to_json(const Verdict& verdict, Semantics semantics, const std::vector<std::string>& members);

/// Counts and saturation flags.
nlohmann::json properties(const Sbaf& sb);

}  // namespace sbaf::io
