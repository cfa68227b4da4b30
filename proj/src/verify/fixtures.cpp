#include "sbaf/verify/fixtures.hpp"

#include <array>
#include <utility>

#include "sbaf/errors.hpp"
#include "sbaf/io/framework_file.hpp"

namespace sbaf::verify {

namespace {

constexpr std::string_view kViolin = R"(# violin provenance
sent Ale Str Exp New Cla Ann Die Hil
inc Ann Hil
arg a1 : Ale -> Str
arg a2 : Str -> Exp
arg a3 : New -> Cla
arg a4 : Cla -> Ann
arg a5 : Die -> Hil
)";

constexpr std::string_view kRunning = R"(sent s t u v w x y z r p q n6
inc t r
inc z p
inc r n6
arg a1 : s -> s
arg a2 : u -> v
arg a3 : w -> x
arg a4 : s -> t
arg a5 : v x -> r
arg a6 : y -> z
arg a7 : p -> q
name a6 n6
)";

constexpr std::string_view kDoubt = R"(inc s u
arg a1 : s -> s
arg a2 : t u -> t
)";

constexpr std::string_view kDirect = R"(inc r nr
arg a1 : s t u -> v
arg a2 : s -> r
arg a3 : t -> nr
)";

constexpr std::string_view kShared = R"(arg a1 : s -> t
arg a2 : s -> u
)";

constexpr std::string_view kClash = R"(inc s u
arg a1 : s -> t
arg a2 : u -> v
)";

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kFixtures{{
    {"violin", kViolin},
    {"running", kRunning},
    {"doubt", kDoubt},
    {"direct", kDirect},
    {"shared", kShared},
    {"clash", kClash},
}};

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, text] : kFixtures) v.emplace_back(name);
    return v;
  }();
  return names;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& [n, text] : kFixtures)
    if (n == name) return text;
  throw LookupError("unknown fixture '" + std::string(name) + "'");
}

Sbaf fixture(std::string_view name) { return io::parse_framework(fixture_text(name)); }

Baf chain_baf() {
  return Baf({"a1", "a2", "a3", "a4", "a5"}, {{"a1", "a2"}, {"a2", "a4"}, {"a5", "a1"}}, {{"a3", "a2"}});
}

}  // namespace sbaf::verify
