#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mkw/rational.hpp"

namespace mkw {

using Vector = std::vector<Rational>;

// Row space in reduced echelon form, grown one row at a time. Only the small
// amount of exact linear algebra the rank and kernel checks need.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  // Returns true when the row was independent of those already inserted.
  bool insert(Vector row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return columns_; }

  // Basis of {v : M v = 0} where M has the inserted rows.
  std::vector<Vector> kernel() const;

  // True when v lies in the row space.
  bool in_span(Vector v) const;

 private:
  void reduce(Vector& v) const;

  std::size_t columns_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<Vector>& rows, std::size_t columns);

}  // namespace mkw
