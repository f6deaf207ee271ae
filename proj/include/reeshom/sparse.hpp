#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reeshom/rational.hpp"

namespace reeshom {

using Index = std::uint32_t;
using Entry = std::pair<Index, Rational>;

// Sorted by index, strictly increasing, no zero values.
using SparseVec = std::vector<Entry>;

using Triplet = std::tuple<Index, Index, Rational>;

// Sorts, merges duplicate indices and drops zeros.
void normalize_vec(SparseVec& v);

// a*x + b*y for already-normalized inputs.
SparseVec combine(const Rational& a, const SparseVec& x, const Rational& b, const SparseVec& y);

// x - f*y, the elimination step; fast-pathed for f = 1.
SparseVec subtract_scaled(const SparseVec& x, const Rational& f, const SparseVec& y);

SparseVec scaled(const SparseVec& x, const Rational& c);

const Rational* find_entry(const SparseVec& v, Index i);

SparseVec unit_vec(Index i);

// Rescales so all entries are coprime integers and the leading entry is
// positive. No-op on the zero vector.
void make_primitive(SparseVec& v);

std::string vec_to_string(const SparseVec& v, const std::vector<std::string>& names);

/// Sparse matrix over the rationals, row-major. Immutable in spirit: built
/// once (via set/from_triplets) and then only read.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> ts);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  void set(Index r, Index c, const Rational& v);
  void add_at(Index r, Index c, const Rational& v);
  Rational at(Index r, Index c) const;

  const SparseVec& row(Index r) const { return data_[r]; }
  void set_row(Index r, SparseVec v);

  std::vector<SparseVec> columns() const;
  SparseMatrix transpose() const;

  // this * o
  SparseMatrix times(const SparseMatrix& o) const;
  // this * v, v indexed by columns
  SparseVec mul(const SparseVec& v) const;

  bool is_zero() const;
  bool operator==(const SparseMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> data_;
};

}  // namespace reeshom
