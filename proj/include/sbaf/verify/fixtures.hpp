#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sbaf/deductive.hpp"
#include "sbaf/framework.hpp"

// Worked example frameworks used by tests, the acceptance gate and `sbaf verify`.
//
//   violin   provenance debate: two support chains, one mutual rebut
//   running  seven-argument framework with a named argument a6
//   doubt    confident weakly coherent yet not preferred
//   direct   strong support-closure breaks directionality
//   shared   two arguments with a common premise
//   clash    coherent arguments whose sentences are incompatible
namespace sbaf::verify {

const std::vector<std::string>& fixture_names();
/// Framework-file text. Throws LookupError for unknown names.
std::string_view fixture_text(std::string_view name);
Sbaf fixture(std::string_view name);

/// Five-argument bipolar framework with one support edge, a3 => a2.
Baf chain_baf();

}  // namespace sbaf::verify
