#include "opforge/rewriting/linalg.hpp"

#include <numeric>

namespace opforge {

void axpy(SparseVec& a, const Scalar& c, const SparseVec& b) {
  if (c == 0 || b.empty()) return;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

SparseVec sparse_from_map(const std::map<int, Scalar>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [k, c] : m)
    if (c != 0) v.emplace_back(k, c);
  return v;
}

SparseVec Echelon::reduce(SparseVec row) const {
  while (!row.empty()) {
    auto it = rows_.find(row.back().first);
    if (it == rows_.end()) break;
    Scalar c = -row.back().second;
    axpy(row, c, it->second);
  }
  return row;
}

std::optional<int> Echelon::insert(SparseVec row) {
  row = reduce(std::move(row));
  if (row.empty()) return std::nullopt;
  const Scalar lead = row.back().second;
  for (auto& [k, c] : row) c /= lead;
  const int col = row.back().first;
  rows_.emplace(col, std::move(row));
  return col;
}

void Echelon::make_reduced() {
  for (auto& [col, row] : rows_) {
    // Rows below `col` are already reduced, so one pass downward suffices.
    int bound = col;
    while (true) {
      int target = -1;
      Scalar c;
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        if (it->first >= bound) continue;
        if (rows_.count(it->first)) {
          target = it->first;
          c = -it->second;
          break;
        }
      }
      if (target < 0) break;
      axpy(row, c, rows_.at(target));
      bound = target;
    }
  }
}

namespace {
void make_primitive(std::vector<std::pair<int, mpz_class>>& row) {
  mpz_class g = 0;
  for (const auto& [k, v] : row) g = gcd(g, v);
  if (row.back().second < 0) g = -g;
  if (g != 1)
    for (auto& [k, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}
}  // namespace

bool IntegerEchelon::insert(const SparseVec& row) {
  if (row.empty()) return false;
  mpz_class den = 1;
  for (const auto& [k, v] : row) den = lcm(den, v.get_den());
  IntRow r;
  r.reserve(row.size());
  for (const auto& [k, v] : row) r.emplace_back(k, mpz_class(v.get_num() * (den / v.get_den())));
  make_primitive(r);
  while (!r.empty()) {
    auto it = rows_.find(r.back().first);
    if (it == rows_.end()) break;
    const mpz_class a = it->second.back().second;  // positive
    const mpz_class b = r.back().second;
    // r <- a*r - b*p
    IntRow out;
    const IntRow& p = it->second;
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
      if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
        out.emplace_back(r[i].first, mpz_class(a * r[i].second));
        ++i;
      } else if (i == r.size() || p[j].first < r[i].first) {
        out.emplace_back(p[j].first, mpz_class(-b * p[j].second));
        ++j;
      } else {
        mpz_class v = a * r[i].second - b * p[j].second;
        if (v != 0) out.emplace_back(r[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    r = std::move(out);
    if (!r.empty()) make_primitive(r);
  }
  if (r.empty()) return false;
  const int col = r.back().first;
  rows_.emplace(col, std::move(r));
  return true;
}

int fraction_free_rank(const std::vector<SparseVec>& rows) {
  IntegerEchelon e;
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace opforge
