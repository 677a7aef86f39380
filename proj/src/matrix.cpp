#include "pqs/matrix.hpp"

#include <stdexcept>

namespace pqs {

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), a_(rows * cols, Cyclotomic(Rational(0), order)) {}

CycMatrix CycMatrix::identity(std::size_t n, int order) {
  CycMatrix m(n, n, order);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Cyclotomic(Rational(1), order);
  return m;
}

CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
  CycMatrix r(x.rows_, y.cols_, x.order_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Cyclotomic& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const Cyclotomic& ykj = y(k, j);
        if (!ykj.is_zero()) r(i, j) += xik * ykj;
      }
    }
  return r;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& y) {
  if (rows_ != y.rows_ || cols_ != y.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!y.a_[k].is_zero()) a_[k] += y.a_[k];
  return *this;
}

CycMatrix operator+(CycMatrix x, const CycMatrix& y) { return x += y; }

CycMatrix operator-(CycMatrix x, const CycMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t k = 0; k < x.a_.size(); ++k)
    if (!y.a_[k].is_zero()) x.a_[k] -= y.a_[k];
  return x;
}

CycMatrix& CycMatrix::operator*=(const Cyclotomic& s) {
  for (auto& e : a_)
    if (!e.is_zero()) e *= s;
  return *this;
}

std::vector<Cyclotomic> CycMatrix::apply(const std::vector<Cyclotomic>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Cyclotomic> r(rows_, Cyclotomic(Rational(0), order_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Cyclotomic& e = (*this)(i, j);
      if (!e.is_zero() && !v[j].is_zero()) r[i] += e * v[j];
    }
  return r;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_, order_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Cyclotomic CycMatrix::trace() const {
  Cyclotomic t(Rational(0), order_);
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

bool CycMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t CycMatrix::rank() const {
  std::vector<std::vector<Cyclotomic>> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i].assign(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  return row_reduce(rows).size();
}

bool CycMatrix::is_monomial() const {
  if (rows_ != cols_) return false;
  std::vector<int> col_count(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    int row_count = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) {
        ++row_count;
        ++col_count[j];
      }
    if (row_count != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

std::vector<std::size_t> row_reduce(std::vector<std::vector<Cyclotomic>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    auto& prow = rows[next];
    Cyclotomic inv = prow[col].inverse();
    for (std::size_t j = col; j < ncols; ++j)
      if (!prow[j].is_zero()) prow[j] *= inv;
    std::vector<std::size_t> support;
    for (std::size_t j = col; j < ncols; ++j)
      if (!prow[j].is_zero()) support.push_back(j);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      Cyclotomic f = rows[r][col];
      for (std::size_t j : support) rows[r][j] -= f * prow[j];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

std::vector<std::vector<Cyclotomic>> span_basis(std::vector<std::vector<Cyclotomic>> vectors) {
  row_reduce(vectors);
  return vectors;
}

bool in_span(const std::vector<std::vector<Cyclotomic>>& vectors, const std::vector<Cyclotomic>& v) {
  auto rows = vectors;
  std::size_t before = span_basis(rows).size();
  rows.push_back(v);
  return span_basis(std::move(rows)).size() == before;
}

}  // namespace pqs
