#include "trileib/linalg.hpp"

#include <utility>

#include "trileib/errors.hpp"

namespace trileib {

LinMap::LinMap(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

LinMap LinMap::identity(std::size_t n) {
  LinMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LinMap LinMap::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  LinMap m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimMismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LinMap LinMap::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  LinMap m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimMismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vec LinMap::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec LinMap::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> LinMap::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Vec LinMap::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimMismatch, "vector length differs from map domain");
  Vec y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(x[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (sgn(a) != 0) y[r] += a * x[c];
    }
  }
  return y;
}

LinMap LinMap::transpose() const {
  LinMap t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool LinMap::is_zero() const { return trileib::is_zero(std::span<const Scalar>(data_)); }

LinMap operator*(const LinMap& a, const LinMap& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "composition of incompatible maps");
  LinMap out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

namespace {

template <class Op>
LinMap elementwise(const LinMap& a, const LinMap& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimMismatch, "maps of different shapes");
  LinMap out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = op(a(r, c), b(r, c));
  return out;
}

}  // namespace

LinMap operator+(const LinMap& a, const LinMap& b) {
  return elementwise(a, b, [](const Scalar& x, const Scalar& y) { return Scalar(x + y); });
}

LinMap operator-(const LinMap& a, const LinMap& b) {
  return elementwise(a, b, [](const Scalar& x, const Scalar& y) { return Scalar(x - y); });
}

LinMap scaled(const LinMap& a, const Scalar& s) {
  LinMap out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

Echelon rref(const LinMap& m) {
  Echelon e{m, 0, {}};
  LinMap& a = e.matrix;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  Scalar f;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

std::optional<LinMap> inverse(const LinMap& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimMismatch, "inverse of a non-square map");
  const std::size_t n = m.rows();
  LinMap aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  LinMap inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.matrix(r, n + c);
  return inv;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = LinMap(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return row_space(LinMap::identity(ambient)); }

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(LinMap::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const LinMap& m) {
  const Echelon e = rref(m);
  Subspace s;
  s.ambient_ = m.cols();
  s.basis_ = LinMap(e.rank, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = e.matrix(r, c);
  s.pivots_ = e.pivots;
  return s;
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rank(); ++r) out.push_back(basis_vector(r));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::AmbientMismatch, "vector outside the ambient space");
  Vec out(v);
  for (std::size_t r = 0; r < rank(); ++r) {
    const Scalar f = out[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (sgn(basis_(r, c)) != 0) out[c] -= f * basis_(r, c);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return trileib::is_zero(std::span<const Scalar>(reduce(v))); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::AmbientMismatch, "subspaces of different ambient spaces");
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Subspace kernel_basis(const LinMap& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.matrix(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "sum of subspaces of different ambient spaces");
  std::vector<Vec> rows = a.basis_vectors();
  for (auto& v : b.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "intersection of subspaces of different ambient spaces");
  const std::size_t n = a.ambient_dim(), ra = a.rank(), rb = b.rank();
  // (alpha, beta) with alpha^T A = beta^T B parametrize the intersection.
  LinMap system(n, ra + rb);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < ra; ++i) system(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < rb; ++j) system(c, ra + j) = -b.basis()(j, c);
  }
  const Subspace coeffs = kernel_basis(system);
  std::vector<Vec> vectors;
  for (std::size_t k = 0; k < coeffs.rank(); ++k) {
    Vec v(n);
    for (std::size_t i = 0; i < ra; ++i) axpy(v, coeffs.basis()(k, i), a.basis().row(i));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "quotient of subspaces of different ambient spaces");
  if (!big.contains(small)) throw Error(ErrorCode::NotContained, "subspace is not contained in the larger one");
  return big.rank() - small.rank();
}

}  // namespace trileib
