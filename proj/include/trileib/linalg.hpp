#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trileib/scalar.hpp"

namespace trileib {

/// Dense rational matrix acting on column vectors: a rows x cols LinMap maps
/// K^cols -> K^rows. Entries are stored row-major.
class LinMap {
 public:
  LinMap() = default;
  LinMap(std::size_t rows, std::size_t cols);

  static LinMap identity(std::size_t n);
  static LinMap zero(std::size_t rows, std::size_t cols) { return LinMap(rows, cols); }
  static LinMap from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static LinMap from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> columns() const;
  const std::vector<Scalar>& data() const { return data_; }

  Vec apply(const Vec& x) const;
  LinMap transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

LinMap operator*(const LinMap& a, const LinMap& b);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator-(const LinMap& a, const LinMap& b);
LinMap scaled(const LinMap& a, const Scalar& s);

std::optional<LinMap> inverse(const LinMap& m);

struct Echelon {
  LinMap matrix;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Echelon rref(const LinMap& m);

/// A subspace of K^ambient, stored as the nonzero rows of its reduced
/// row-echelon basis. Two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const LinMap& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const LinMap& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;

  /// v with every pivot coordinate eliminated against the basis; zero iff v
  /// lies in the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  LinMap basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : Mx = 0}
Subspace kernel_basis(const LinMap& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// dim(big / small); requires small inside big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

}  // namespace trileib
