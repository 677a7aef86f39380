#pragma once

#include "pqs/cyclotomic.hpp"

#include <cstddef>
#include <vector>

namespace pqs {

/// Dense row-major matrix over Q(zeta_N). Zero entries are skipped in products,
/// which keeps monomial matrices cheap.
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols, int order = kDefaultOrder);
  static CycMatrix identity(std::size_t n, int order = kDefaultOrder);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y);
  friend CycMatrix operator+(CycMatrix x, const CycMatrix& y);
  friend CycMatrix operator-(CycMatrix x, const CycMatrix& y);
  CycMatrix& operator+=(const CycMatrix& y);
  CycMatrix& operator*=(const Cyclotomic& s);
  friend bool operator==(const CycMatrix& x, const CycMatrix& y) = default;

  std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;
  CycMatrix transpose() const;
  Cyclotomic trace() const;
  bool is_zero() const;
  std::size_t rank() const;

  /// Number of nonzero entries in every row and column is exactly one.
  bool is_monomial() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = kDefaultOrder;
  std::vector<Cyclotomic> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Cyclotomic>>& rows);

/// Reduced echelon basis of span(vectors); empty input gives an empty basis.
std::vector<std::vector<Cyclotomic>> span_basis(std::vector<std::vector<Cyclotomic>> vectors);

/// Whether v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Cyclotomic>>& vectors, const std::vector<Cyclotomic>& v);

}  // namespace pqs
