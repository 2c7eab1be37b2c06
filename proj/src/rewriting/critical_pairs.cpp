#include "opforge/rewriting/critical_pairs.hpp"

#include <algorithm>

#include "opforge/error.hpp"

namespace opforge {

std::vector<Overlap> critical_pairs(const RewriteRule& r1, const RewriteRule& r2, int max_arity,
                                    const ShuffleSignature& sig) {
  std::vector<Overlap> out;
  const bool same = r1 == r2;
  const int lo = std::max(r1.arity(), r2.arity());
  const int hi = std::min(max_arity, r1.arity() + r2.arity() - 1);
  for (int n = lo; n <= hi; ++n) {
    for (const auto& t : enumerate_monomials(sig, n)) {
      if (t.internal_count() > r1.lhs.internal_count() + r2.lhs.internal_count() - 1) continue;
      TreeIndex idx(t);
      const auto occ1 = find_occurrences(t, idx, r1.lhs);
      if (occ1.empty()) continue;
      const auto occ2 = same ? occ1 : find_occurrences(t, idx, r2.lhs);
      const std::uint64_t all = internal_mask(t);
      for (std::size_t i = 0; i < occ1.size(); ++i)
        for (std::size_t j = same ? i + 1 : 0; j < occ2.size(); ++j) {
          const auto& a = occ1[i];
          const auto& b = occ2[j];
          if ((a.mask & b.mask) == 0 || (a.mask | b.mask) != all) continue;
          out.push_back(Overlap{r1, r2, t, a, b});
        }
    }
  }
  return out;
}

Element s_polynomial(const Overlap& o) {
  TreeIndex idx(o.multiple);
  return replace_occurrence(o.multiple, idx, o.first_occurrence, o.first.rhs) -
         replace_occurrence(o.multiple, idx, o.second_occurrence, o.second.rhs);
}

}  // namespace opforge
