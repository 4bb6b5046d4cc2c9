#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rrclosure/scalar.hpp"

namespace rrc::linalg {

/// Sparse vector as (column, value) pairs with strictly increasing columns
/// and no zero values.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incremental row echelon form over a field. Rows are reduced against the
/// existing pivots on insertion; `kernel()` finishes the reduction.
class Echelon {
 public:
  Echelon(const Field& field, std::size_t ncols);

  /// Returns true if the row was independent of the rows seen so far.
  bool add_row(const SparseVector& row);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t ncols() const noexcept { return ncols_; }
  bool full_rank() const noexcept { return rank_ == ncols_; }

  /// Basis of {v : row . v = 0 for all rows}. One vector per non-pivot column
  /// f, with value 1 at f and all other entries at pivot columns below f.
  std::vector<SparseVector> kernel() const;

 private:
  void reduce_dense(std::vector<Scalar>& acc, std::vector<char>& nz, std::uint32_t from) const;

  Field field_;
  std::size_t ncols_;
  std::size_t rank_ = 0;
  std::vector<SparseVector> pivot_rows_;  // indexed by pivot column; empty if none
  std::vector<char> is_pivot_;
  mutable std::vector<Scalar> acc_;
  mutable std::vector<char> nz_;
};

}  // namespace rrc::linalg
