#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "opforge/rewriting/linalg.hpp"
#include "opforge/rewriting/system.hpp"

namespace opforge {

constexpr std::int64_t kDefaultStepLimit = 1'000'000;

/// All monomials of one arity, sorted ascending under an order; a
/// monomial's position is its column index.
struct MonomialBasis {
  MonomialBasis(const ShuffleSignature& sig, const OrderSpec& order, int arity);

  int arity;
  std::vector<TreeMonomial> monomials;
  std::unordered_map<TreeMonomial, int> index;

  int index_of(const TreeMonomial& t) const;
  SparseVec to_sparse(const Element& e) const;
  Element to_element(const SparseVec& v) const;
};

/// One rewrite step: coeff * (host with the occurrence of rules[rule].lhs
/// replaced by the rule's relation) was subtracted.
struct ReductionStep {
  int rule = 0;
  TreeMonomial host;
  Occurrence occurrence;
  Scalar coeff;
};

using Certificate = std::vector<ReductionStep>;

enum class ReduceStrategy { LeftmostOutermost, LeftmostInnermost };

/// Normal forms against a rewriting system, with per-arity caches.
///
/// Monomial normal forms are computed once and memoized; the rule applied to
/// a reducible monomial is the first rule (in system order) with an
/// occurrence, at its first occurrence. Not thread-safe; the system must
/// outlive the reducer and may gain rules of arities whose caches are reset.
class Reducer {
 public:
  explicit Reducer(const RewriteSystem& sys, std::int64_t step_limit = kDefaultStepLimit);

  const RewriteSystem& system() const { return *sys_; }
  const MonomialBasis& basis(int arity);

  /// Throws Error above the truncation arity, StepLimitExceeded on loops.
  Element normal_form(const Element& e);
  SparseVec normal_form_sparse(int arity, int monomial_index);
  SparseVec normal_form_sparse(const Element& e);

  /// First rule and occurrence dividing the monomial, or rule = -1.
  std::pair<int, Occurrence> first_divisor(const TreeMonomial& t) const;
  bool is_normal(const TreeMonomial& t) const { return first_divisor(t).first < 0; }

  /// Drops cached normal forms for this arity and above.
  void reset_from(int arity);

 private:
  struct Layer {
    std::unique_ptr<MonomialBasis> basis;
    std::vector<SparseVec> nf;
    std::vector<std::uint8_t> state;  // 0 unknown, 1 in progress, 2 done
  };
  Layer& layer(int arity);
  void check_arity(int arity) const;

  const RewriteSystem* sys_;
  std::int64_t step_limit_;
  std::vector<std::unique_ptr<Layer>> layers_;
};

/// Step-by-step reduction: repeatedly rewrites the largest reducible
/// monomial, choosing the occurrence by strategy. Records a certificate
/// when asked. Throws StepLimitExceeded past `step_limit` steps.
Element reduce(const Element& e, const RewriteSystem& sys,
               ReduceStrategy strategy = ReduceStrategy::LeftmostOutermost,
               Certificate* certificate = nullptr, std::int64_t step_limit = kDefaultStepLimit);

/// Sum of the certificate's steps; equals e - reduce(e).
Element replay(const Certificate& certificate, const RewriteSystem& sys, int arity);

bool ideal_membership(const Element& e, const RewriteSystem& sys);

/// Monomials of arity n divisible by no lhs, ascending under the order.
std::vector<TreeMonomial> normal_monomials(const RewriteSystem& sys, int n);
std::vector<long long> dims(const RewriteSystem& sys, int up_to);

}  // namespace opforge
