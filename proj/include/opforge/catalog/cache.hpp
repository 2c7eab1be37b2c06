#pragma once

#include <string>

#include "opforge/algebra/presentation.hpp"
#include "opforge/rewriting/completion.hpp"

namespace opforge {

/// Environment variable naming a directory for completed-system dumps.
inline constexpr const char* kCacheEnv = "OPERAD_FORGE_CACHE";

/// Completes a presentation, reusing earlier results of this process and,
/// when OPERAD_FORGE_CACHE is set, dumps stored in that directory. Thread
/// count does not affect the result and is not part of the key. On a hit
/// the report has `from_cache` set and zero counters.
RewriteSystem completed(const Presentation& p, const OrderSpec& order, const CompletionOptions& options,
                        CompletionReport* report = nullptr, bool* from_cache = nullptr);

/// Key of a completion: FNV-1a of the presentation, order and truncation.
std::string completion_key(const Presentation& p, const OrderSpec& order, int max_arity);

void clear_completion_memo();

}  // namespace opforge
