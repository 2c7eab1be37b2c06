#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "opforge/algebra/scalar.hpp"

namespace opforge {

/// Sparse row: (column, value) pairs, columns strictly increasing, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// a += c * b
void axpy(SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec sparse_from_map(const std::map<int, Scalar>& m);

/// Incremental row echelon form over the rationals. The pivot of a row is
/// its largest column; stored rows are monic.
class Echelon {
 public:
  /// Reduces the row against the stored pivots. Returns the new pivot
  /// column, or nothing when the row reduced to zero.
  std::optional<int> insert(SparseVec row);

  /// Reduces a row without storing it.
  SparseVec reduce(SparseVec row) const;

  /// Fully reduces every stored row against the pivots below it.
  void make_reduced();

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

/// Rank by fraction-free elimination: rows are scaled to primitive integer
/// vectors and combined with integer multipliers only.
class IntegerEchelon {
 public:
  /// True when the row increased the rank.
  bool insert(const SparseVec& row);
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  using IntRow = std::vector<std::pair<int, mpz_class>>;
  std::map<int, IntRow> rows_;
};

int fraction_free_rank(const std::vector<SparseVec>& rows);

}  // namespace opforge
