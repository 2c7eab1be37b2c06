#pragma once

#include <cstdint>
#include <vector>

#include "opforge/algebra/presentation.hpp"
#include "opforge/rewriting/reducer.hpp"
#include "opforge/rewriting/system.hpp"

namespace opforge {

struct CompletionOptions {
  int max_arity = 5;
  std::int64_t step_limit = kDefaultStepLimit;
  int threads = 1;
  bool verify = true;  // re-check every overlap of the final system
};

struct CompletionReport {
  long long pairs_examined = 0;
  int rules_added = 0;
  int max_arity_reached = 0;
  std::vector<double> seconds_per_arity;  // index 0 is arity 1
  int step_limit_hits = 0;
  int relations_skipped = 0;  // above max_arity
  bool verified = false;
};

/// Arity-by-arity completion truncated at max_arity.
///
/// For each arity n, every monomial is scanned for occurrences of the rules
/// found so far; each occurrence other than the one used for the normal
/// form, and each arity-n relation, contributes its normal-form residue.
/// Gaussian elimination of the residues (pivot = largest monomial) yields
/// the arity-n rules, already reduced. The result is complete up to
/// max_arity: every ideal element of arity <= max_arity reduces to 0.
///
/// Throws Error on a zero relation and StepLimitExceeded when rewriting
/// does not terminate (possible only under a non-monomial order).
RewriteSystem complete(const ShufflePresentation& sp, const OrderSpec& order,
                       const CompletionOptions& options, CompletionReport* report = nullptr);

/// Completes the shuffle expansion of a presentation.
RewriteSystem complete(const Presentation& p, const OrderSpec& order,
                       const CompletionOptions& options, CompletionReport* report = nullptr);

/// For every monomial up to the truncation arity, all one-step rewrites
/// have the same normal form.
bool verify_confluence(const RewriteSystem& sys, std::int64_t step_limit = kDefaultStepLimit);

}  // namespace opforge
