#include "rrclosure/linalg.hpp"

#include <algorithm>

namespace rrc::linalg {

Echelon::Echelon(const Field& field, std::size_t ncols)
    : field_(field),
      ncols_(ncols),
      pivot_rows_(ncols),
      is_pivot_(ncols, 0),
      acc_(ncols),
      nz_(ncols, 0) {}

void Echelon::reduce_dense(std::vector<Scalar>& acc, std::vector<char>& nz,
                           std::uint32_t from) const {
  for (std::uint32_t c = from; c < ncols_; ++c) {
    if (!nz[c] || !is_pivot_[c]) continue;
    if (acc[c].is_zero()) {
      nz[c] = 0;
      continue;
    }
    Scalar factor = acc[c];
    for (const auto& [col, val] : pivot_rows_[c]) {
      if (nz[col]) {
        acc[col] = field_.sub(acc[col], field_.mul(factor, val));
      } else {
        acc[col] = field_.neg(field_.mul(factor, val));
        nz[col] = 1;
      }
    }
  }
}

bool Echelon::add_row(const SparseVector& row) {
  if (row.empty() || full_rank()) return false;
  for (const auto& [col, val] : row) {
    acc_[col] = val;
    nz_[col] = 1;
  }
  reduce_dense(acc_, nz_, row.front().first);

  SparseVector reduced;
  for (std::uint32_t c = row.front().first; c < ncols_; ++c) {
    if (!nz_[c]) continue;
    nz_[c] = 0;
    if (!acc_[c].is_zero()) reduced.emplace_back(c, std::move(acc_[c]));
    acc_[c] = Scalar();
  }
  if (reduced.empty()) return false;

  Scalar inv = field_.inv(reduced.front().second);
  for (auto& entry : reduced) entry.second = field_.mul(entry.second, inv);
  std::uint32_t lead = reduced.front().first;
  pivot_rows_[lead] = std::move(reduced);
  is_pivot_[lead] = 1;
  ++rank_;
  return true;
}

std::vector<SparseVector> Echelon::kernel() const {
  // back substitution, right to left, gives the reduced echelon form
  std::vector<SparseVector> rref(pivot_rows_);
  std::vector<Scalar> acc(ncols_);
  std::vector<char> nz(ncols_, 0);
  for (std::size_t p = ncols_; p-- > 0;) {
    if (!is_pivot_[p]) continue;
    SparseVector& row = rref[p];
    bool touches_pivot = false;
    for (std::size_t k = 1; k < row.size(); ++k)
      if (is_pivot_[row[k].first]) touches_pivot = true;
    if (!touches_pivot) continue;
    for (const auto& [col, val] : row) {
      acc[col] = val;
      nz[col] = 1;
    }
    for (std::size_t k = 1; k < row.size(); ++k) {
      std::uint32_t q = row[k].first;
      if (!is_pivot_[q] || !nz[q] || acc[q].is_zero()) continue;
      Scalar factor = acc[q];
      for (const auto& [col, val] : rref[q]) {
        if (nz[col]) {
          acc[col] = field_.sub(acc[col], field_.mul(factor, val));
        } else {
          acc[col] = field_.neg(field_.mul(factor, val));
          nz[col] = 1;
        }
      }
    }
    SparseVector out;
    for (std::size_t c = p; c < ncols_; ++c) {
      if (!nz[c]) continue;
      nz[c] = 0;
      if (!acc[c].is_zero()) out.emplace_back(static_cast<std::uint32_t>(c), acc[c]);
      acc[c] = Scalar();
    }
    row = std::move(out);
  }

  std::vector<SparseVector> basis;
  for (std::uint32_t f = 0; f < ncols_; ++f) {
    if (is_pivot_[f]) continue;
    SparseVector v;
    for (std::uint32_t p = 0; p < f; ++p) {
      if (!is_pivot_[p]) continue;
      const auto& row = rref[p];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, std::uint32_t c) { return e.first < c; });
      if (it != row.end() && it->first == f) v.emplace_back(p, field_.neg(it->second));
    }
    v.emplace_back(f, field_.one());
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace rrc::linalg
