#pragma once

#include <vector>

#include "chernlab/field.hpp"

namespace chernlab {

/// Dense matrix over F_q, row major.
struct FMatrix {
  int rows = 0, cols = 0;
  std::vector<Coef> a;

  FMatrix() = default;
  FMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  Coef& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Coef at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(const Field& F, FMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Coef inv = F.inv(m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || !m.at(i, c)) continue;
      Coef f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(const Field& F, FMatrix m) { return static_cast<int>(rref(F, m).size()); }

/// Basis of {x : M x = 0}, one vector per free column, in RREF-derived form.
inline std::vector<std::vector<Coef>> kernel(const Field& F, FMatrix m) {
  auto piv = rref(F, m);
  std::vector<int> is_piv(m.cols, -1);
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) is_piv[piv[i]] = i;
  std::vector<std::vector<Coef>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f] >= 0) continue;
    std::vector<Coef> v(m.cols, 0);
    v[f] = 1;
    for (int j = 0; j < m.cols; ++j)
      if (is_piv[j] >= 0) v[j] = F.neg(m.at(is_piv[j], f));
    out.push_back(std::move(v));
  }
  return out;
}

/// Row-reduced basis of the span of the given vectors.
inline std::vector<std::vector<Coef>> span_basis(const Field& F, const std::vector<std::vector<Coef>>& vs, int dim) {
  FMatrix m(static_cast<int>(vs.size()), dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = vs[i][j];
  auto piv = rref(F, m);
  std::vector<std::vector<Coef>> out;
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) {
    std::vector<Coef> row(dim);
    for (int j = 0; j < dim; ++j) row[j] = m.at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace chernlab
