#include "opforge/rewriting/reducer.hpp"

#include <algorithm>

#include "opforge/core/occurrence.hpp"
#include "opforge/error.hpp"

namespace opforge {

MonomialBasis::MonomialBasis(const ShuffleSignature& sig, const OrderSpec& order, int n)
    : arity(n), monomials(enumerate_monomials(sig, n)) {
  sort_by_order(monomials, order);
  index.reserve(monomials.size() * 2);
  for (int i = 0; i < static_cast<int>(monomials.size()); ++i) index.emplace(monomials[i], i);
}

int MonomialBasis::index_of(const TreeMonomial& t) const {
  auto it = index.find(t);
  if (it == index.end()) throw Error("monomial not in the basis of arity " + std::to_string(arity));
  return it->second;
}

SparseVec MonomialBasis::to_sparse(const Element& e) const {
  SparseVec v;
  v.reserve(e.size());
  for (const auto& [t, c] : e.terms()) v.emplace_back(index_of(t), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Element MonomialBasis::to_element(const SparseVec& v) const {
  Element e(arity);
  for (const auto& [i, c] : v) e.add_term(monomials[i], c);
  return e;
}

Reducer::Reducer(const RewriteSystem& sys, std::int64_t step_limit)
    : sys_(&sys), step_limit_(step_limit) {}

void Reducer::check_arity(int arity) const {
  if (arity < 1) throw Error("arity must be positive");
  if (arity > sys_->truncation_arity)
    throw Error("arity " + std::to_string(arity) + " exceeds the truncation arity " +
                std::to_string(sys_->truncation_arity));
}

Reducer::Layer& Reducer::layer(int arity) {
  check_arity(arity);
  if (static_cast<int>(layers_.size()) <= arity) layers_.resize(arity + 1);
  auto& slot = layers_[arity];
  if (!slot) {
    slot = std::make_unique<Layer>();
    slot->basis = std::make_unique<MonomialBasis>(sys_->signature, sys_->order, arity);
    slot->nf.resize(slot->basis->monomials.size());
    slot->state.assign(slot->basis->monomials.size(), 0);
  }
  return *slot;
}

const MonomialBasis& Reducer::basis(int arity) { return *layer(arity).basis; }

void Reducer::reset_from(int arity) {
  for (int n = std::max(arity, 0); n < static_cast<int>(layers_.size()); ++n) {
    if (!layers_[n]) continue;
    auto& l = *layers_[n];
    std::fill(l.state.begin(), l.state.end(), 0);
    for (auto& v : l.nf) SparseVec().swap(v);
  }
}

std::pair<int, Occurrence> Reducer::first_divisor(const TreeMonomial& t) const {
  if (t.is_identity()) return {-1, {}};
  TreeIndex idx(t);
  const auto& rules = sys_->rules;
  for (int r = 0; r < static_cast<int>(rules.size()); ++r) {
    if (rules[r].arity() > t.arity()) break;
    if (rules[r].lhs.node_count() > t.node_count()) continue;
    if (auto occ = first_occurrence(t, idx, rules[r].lhs)) return {r, *occ};
  }
  return {-1, {}};
}

SparseVec Reducer::normal_form_sparse(int arity, int root) {
  Layer& l = layer(arity);
  if (l.state[root] == 2) return l.nf[root];
  const auto& mons = l.basis->monomials;

  struct Frame {
    int mono;
    SparseVec image;  // one rewrite of the monomial, as basis indices
    std::size_t next = 0;
    SparseVec acc;
  };
  std::vector<Frame> stack;
  std::int64_t steps = 0;

  auto open = [&](int i) {
    auto [r, occ] = first_divisor(mons[i]);
    if (r < 0) {
      l.nf[i] = SparseVec{{i, Scalar(1)}};
      l.state[i] = 2;
      return;
    }
    if (++steps > step_limit_)
      throw StepLimitExceeded("rewriting exceeded " + std::to_string(step_limit_) + " steps");
    l.state[i] = 1;
    const auto& rule = sys_->rules[r];
    stack.push_back(Frame{i, l.basis->to_sparse(replace_occurrence(mons[i], occ, rule.rhs)), 0, {}});
  };

  try {
    open(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.image.size()) {
        l.nf[f.mono] = std::move(f.acc);
        l.state[f.mono] = 2;
        stack.pop_back();
        continue;
      }
      const int child = f.image[f.next].first;
      if (l.state[child] == 2) {
        axpy(f.acc, f.image[f.next].second, l.nf[child]);
        ++f.next;
      } else if (l.state[child] == 1) {
        throw StepLimitExceeded("rewriting revisits " + to_text(mons[child], sys_->signature) +
                                " while rewriting it");
      } else {
        open(child);  // may invalidate f
      }
    }
  } catch (...) {
    for (auto& fr : stack) l.state[fr.mono] = 0;
    throw;
  }
  return l.nf[root];
}

SparseVec Reducer::normal_form_sparse(const Element& e) {
  SparseVec out;
  if (e.is_zero()) return out;
  const auto& b = basis(e.arity());
  for (const auto& [t, c] : e.terms()) axpy(out, c, normal_form_sparse(e.arity(), b.index_of(t)));
  return out;
}

Element Reducer::normal_form(const Element& e) {
  check_arity(e.arity());
  if (e.is_zero()) return e;
  return basis(e.arity()).to_element(normal_form_sparse(e));
}

namespace {

int postorder_rank(const TreeIndex& idx, int node) {
  // Larger end first-completes later; among nested nodes sharing an end the
  // deeper one completes first.
  return idx.end[node] * 1024 - idx.depth[node];
}

}  // namespace

Element reduce(const Element& e, const RewriteSystem& sys, ReduceStrategy strategy,
               Certificate* certificate, std::int64_t step_limit) {
  if (e.arity() > sys.truncation_arity)
    throw Error("arity " + std::to_string(e.arity()) + " exceeds the truncation arity " +
                std::to_string(sys.truncation_arity));
  Element cur = e;
  Element done(e.arity());
  std::int64_t steps = 0;
  while (!cur.is_zero()) {
    const TreeMonomial lead = cur.leading_monomial(sys.order);
    const Scalar c = cur.coefficient(lead);
    TreeIndex idx(lead);
    int best_rule = -1;
    Occurrence best;
    long best_key = 0;
    for (int r = 0; r < static_cast<int>(sys.rules.size()); ++r) {
      const auto& rule = sys.rules[r];
      if (rule.arity() > lead.arity()) break;
      for (const auto& occ : find_occurrences(lead, idx, rule.lhs)) {
        long key = strategy == ReduceStrategy::LeftmostOutermost ? occ.root : postorder_rank(idx, occ.root);
        if (best_rule < 0 || key < best_key) {
          best_rule = r;
          best = occ;
          best_key = key;
        }
      }
    }
    if (best_rule < 0) {
      done.add_term(lead, c);
      cur.add_term(lead, -c);
      continue;
    }
    if (++steps > step_limit)
      throw StepLimitExceeded("rewriting exceeded " + std::to_string(step_limit) + " steps");
    const auto& rule = sys.rules[best_rule];
    cur -= c * replace_occurrence(lead, idx, best, rule.relation());
    if (certificate) certificate->push_back(ReductionStep{best_rule, lead, best, c});
  }
  return done;
}

Element replay(const Certificate& certificate, const RewriteSystem& sys, int arity) {
  Element out(arity);
  for (const auto& s : certificate)
    out += s.coeff * replace_occurrence(s.host, s.occurrence, sys.rules.at(s.rule).relation());
  return out;
}

bool ideal_membership(const Element& e, const RewriteSystem& sys) {
  Reducer r(sys);
  return r.normal_form(e).is_zero();
}

std::vector<TreeMonomial> normal_monomials(const RewriteSystem& sys, int n) {
  Reducer r(sys);
  std::vector<TreeMonomial> out;
  for (const auto& t : r.basis(n).monomials)
    if (r.is_normal(t)) out.push_back(t);
  return out;
}

std::vector<long long> dims(const RewriteSystem& sys, int up_to) {
  Reducer r(sys);
  std::vector<long long> out;
  for (int n = 1; n <= up_to; ++n) {
    long long count = 0;
    for (const auto& t : r.basis(n).monomials) count += r.is_normal(t);
    out.push_back(count);
  }
  return out;
}

}  // namespace opforge
