#include "mkw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace mkw {

void RowEchelon::reduce(Vector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (is_zero(f)) continue;
    const Vector& row = rows_[r];
    for (std::size_t c = 0; c < columns_; ++c)
      if (!is_zero(row[c])) v[c] -= f * row[c];
  }
}

bool RowEchelon::insert(Vector row) {
  if (row.size() != columns_) throw std::invalid_argument("row length mismatch");
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(), [](const Rational& q) { return !is_zero(q); });
  if (it == row.end()) return false;
  std::size_t pivot = static_cast<std::size_t>(it - row.begin());
  const Rational lead = row[pivot];
  for (auto& q : row) q /= lead;
  // Keep the form fully reduced so kernel extraction is direct.
  for (auto& existing : rows_) {
    const Rational f = existing[pivot];
    if (is_zero(f)) continue;
    for (std::size_t c = 0; c < columns_; ++c)
      if (!is_zero(row[c])) existing[c] -= f * row[c];
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::vector<Vector> RowEchelon::kernel() const {
  std::vector<bool> is_pivot(columns_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns_, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RowEchelon::in_span(Vector v) const {
  if (v.size() != columns_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t columns) {
  RowEchelon e(columns);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace mkw
