#include "opforge/rewriting/completion.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "opforge/core/occurrence.hpp"
#include "opforge/error.hpp"

namespace opforge {

namespace {

struct Hit {
  int rule;
  Occurrence occ;
};

/// Occurrences of rules [0, rule_count) in every monomial of the basis.
std::vector<std::vector<Hit>> scan(const MonomialBasis& basis, const std::vector<RewriteRule>& rules,
                                   int rule_count, int threads) {
  const int total = static_cast<int>(basis.monomials.size());
  std::vector<std::vector<Hit>> hits(total);
  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const auto& t = basis.monomials[i];
      TreeIndex idx(t);
      for (int r = 0; r < rule_count; ++r) {
        if (rules[r].lhs.node_count() > t.node_count()) continue;
        for (auto& occ : find_occurrences(t, idx, rules[r].lhs)) hits[i].push_back(Hit{r, std::move(occ)});
      }
    }
  };
  threads = std::clamp(threads, 1, 64);
  if (threads == 1 || total < 2 * threads) {
    work(0, total);
    return hits;
  }
  std::vector<std::thread> pool;
  const int chunk = (total + threads - 1) / threads;
  for (int k = 0; k < threads; ++k) {
    const int b = k * chunk, e = std::min(total, b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto& th : pool) th.join();
  return hits;
}

struct Source {
  Provenance provenance;
  int initial_lead = -1;
};

}  // namespace

RewriteSystem complete(const ShufflePresentation& sp, const OrderSpec& order,
                       const CompletionOptions& options, CompletionReport* report) {
  if (options.max_arity < 1) throw Error("max_arity must be at least 1");
  CompletionReport rep;
  RewriteSystem sys;
  sys.signature = sp.signature;
  sys.order = order;
  sys.truncation_arity = options.max_arity;

  for (const auto& rel : sp.relations) {
    if (rel.is_zero()) throw Error("zero relation in presentation");
    if (rel.arity() < 2) throw Error("relations of arity below 2 are not supported");
    if (rel.arity() > options.max_arity) ++rep.relations_skipped;
  }

  Reducer reducer(sys, options.step_limit);
  rep.seconds_per_arity.push_back(0.0);
  for (int n = 2; n <= options.max_arity; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const MonomialBasis& basis = reducer.basis(n);
    const int lower = static_cast<int>(sys.rules.size());

    std::vector<SparseVec> rows;
    std::vector<Source> sources;
    for (const auto& rel : sp.relations) {
      if (rel.arity() != n) continue;
      rows.push_back(reducer.normal_form_sparse(rel));
      sources.push_back(Source{Provenance{Provenance::Kind::Input, {}}, -1});
    }

    const auto hits = scan(basis, sys.rules, lower, options.threads);
    for (int i = 0; i < static_cast<int>(hits.size()); ++i) {
      const auto& h = hits[i];
      if (h.size() < 2) continue;
      // h[0] is the divisor the normal form of monomial i was built from.
      const SparseVec base = reducer.normal_form_sparse(n, i);
      for (std::size_t k = 1; k < h.size(); ++k) {
        ++rep.pairs_examined;
        SparseVec residue = base;
        const auto& rule = sys.rules[h[k].rule];
        axpy(residue, -1, reducer.normal_form_sparse(replace_occurrence(basis.monomials[i], h[k].occ, rule.rhs)));
        if (residue.empty()) continue;
        rows.push_back(std::move(residue));
        sources.push_back(Source{Provenance{Provenance::Kind::CriticalPair, {h[0].rule, h[k].rule}}, -1});
      }
    }

    Echelon ech;
    std::vector<std::pair<int, Source>> pivots;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].empty()) continue;
      const int lead = rows[k].back().first;
      if (auto col = ech.insert(std::move(rows[k]))) {
        Source s = sources[k];
        s.initial_lead = lead;
        pivots.emplace_back(*col, std::move(s));
      }
    }
    ech.make_reduced();
    std::sort(pivots.begin(), pivots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [col, src] : pivots) {
      SparseVec row = ech.rows().at(col);
      row.pop_back();
      RewriteRule rule;
      rule.lhs = basis.monomials[col];
      rule.rhs = Element(n);
      for (const auto& [j, c] : row) rule.rhs.add_term(basis.monomials[j], -c);
      rule.provenance = src.provenance;
      if (src.initial_lead != col) rule.provenance.kind = Provenance::Kind::InterReduction;
      sys.rules.push_back(std::move(rule));
      ++rep.rules_added;
    }
    reducer.reset_from(n);
    rep.max_arity_reached = n;
    rep.seconds_per_arity.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  if (options.max_arity == 1) rep.max_arity_reached = 1;

  if (options.verify) {
    rep.verified = verify_confluence(sys, options.step_limit);
    if (!rep.verified) throw Error("completed system failed the confluence re-check");
  }
  if (report) *report = rep;
  return sys;
}

RewriteSystem complete(const Presentation& p, const OrderSpec& order, const CompletionOptions& options,
                       CompletionReport* report) {
  const ShuffleSignature sig = p.signature();
  ShufflePresentation sp{sig, {}};
  for (const auto& rel : p.parsed_relations()) {
    auto elems = to_shuffle_elements(rel, sig, order);
    if (elems.empty()) throw Error("relation is zero in the free operad: " + to_text(rel, p.generators));
    for (auto& e : elems) sp.relations.push_back(std::move(e));
  }
  return complete(sp, order, options, report);
}

bool verify_confluence(const RewriteSystem& sys, std::int64_t step_limit) {
  Reducer reducer(sys, step_limit);
  for (int n = 2; n <= sys.truncation_arity; ++n) {
    const auto& basis = reducer.basis(n);
    for (int i = 0; i < static_cast<int>(basis.monomials.size()); ++i) {
      const auto& t = basis.monomials[i];
      TreeIndex idx(t);
      std::vector<std::pair<int, Occurrence>> all;
      for (int r = 0; r < static_cast<int>(sys.rules.size()) && sys.rules[r].arity() <= n; ++r)
        for (auto& occ : find_occurrences(t, idx, sys.rules[r].lhs)) all.emplace_back(r, std::move(occ));
      if (all.size() < 2) continue;
      const SparseVec base = reducer.normal_form_sparse(n, i);
      for (const auto& [r, occ] : all)
        if (reducer.normal_form_sparse(replace_occurrence(t, idx, occ, sys.rules[r].rhs)) != base) return false;
    }
  }
  return true;
}

}  // namespace opforge
