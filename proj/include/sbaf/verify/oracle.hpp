#pragma once

#include "sbaf/framework.hpp"
#include "sbaf/semantics.hpp"

namespace sbaf::verify {

/// Weak argument set read off its definition: among all E with
/// Init(S) <= E <= A and R^S(E) = E, the subset-least one. Exhaustive over
/// the arguments outside Init(S), which count against the argument cap.
/// Throws PreconditionError for incompatible S or when no least fixpoint exists.
ArgSet oracle_arg_w(const SentSet& s, const Sbaf& sb, const EnumerationLimits& limits = {});

}  // namespace sbaf::verify
