#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "opforge/catalog/constructions.hpp"
#include "opforge/catalog/presets.hpp"
#include "opforge/rewriting/reducer.hpp"

namespace opforge {

enum class CheckStatus { Pass, Fail, Info };
std::string to_string(CheckStatus s);

/// Outcome of a named check. Failures carry a witness: a nonzero normal
/// form or a dimension mismatch.
struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  double seconds = 0;

  bool ok() const { return status != CheckStatus::Fail; }
};

/// `{name, status, witnesses, dims, timing: {seconds}}`
nlohmann::ordered_json to_json(const CheckReport& r);

struct CheckOptions {
  int max_arity = 5;  // sandwich, almost-distributive, conjecture-probe
  int series_order = 12;
  int threads = 1;
  std::int64_t step_limit = kDefaultStepLimit;
  bool reverse_precedence = false;
};

/// Every element of the S_3-orbit of R1, rewritten in the pre-Lie product,
/// reduces to 0 in the completed pre-Lie system.
CheckReport check_r1_in_pl(const CheckOptions& opts, const std::string& r1 = relations::kR1);

/// The orbit of R2 reduces to 0 in pre-Lie at arity 4, and so does every
/// S-polynomial of R1 with itself.
CheckReport check_r2_in_pl(const CheckOptions& opts, const std::string& r2 = relations::kR2,
                           const std::string& r1 = relations::kR1);

/// Weight-0 part of R1 is associativity, weight-1 part of R2 is the
/// nine-term relation, and that relation and Hertling-Manin generate the
/// same ideal together with associativity and Jacobi at arity 4.
CheckReport check_gr_lemma(const CheckOptions& opts, const std::string& r1 = relations::kR1,
                           const std::string& r2 = relations::kR2);

/// dims of prelie, almost(com,lie) and fm all equal n^(n-1) up to max_arity.
CheckReport check_sandwich(const CheckOptions& opts);

/// The product and the commutator of the pre-Lie product satisfy the
/// F-manifold identities in pre-Lie commutative algebras.
CheckReport check_plc_proposition(const CheckOptions& opts);

/// Informational: dimensions of the suboperad of plc generated by the
/// product and the commutator, next to n^(n-1).
CheckReport conjecture_probe(const CheckOptions& opts);

/// Zero and Hertling-Manin right-hand sides preserve dimensions; a frozen
/// counterexample does not.
CheckReport check_almost_distributive(const CheckOptions& opts);

CheckReport check_series_chain(const CheckOptions& opts);

/// r1-in-pl, r2-in-pl, gr-lemma, sandwich, plc-proposition,
/// conjecture-probe, almost-distributive, series-chain.
std::vector<std::string> check_names();
/// Throws Error on an unknown name.
CheckReport run_check(const std::string& name, const CheckOptions& opts);

/// The counterexample right-hand side used by check_almost_distributive.
RhsMap frozen_non_distributive_rhs();

/// The Hertling-Manin right-hand side as a map over com and lie.
RhsMap hertling_manin_rhs();

}  // namespace opforge
