#include "bruhat/linalg.hpp"

namespace bruhat {

ModP ModP::inverse() const {
  if (value_ == 0) throw DomainError("division by zero in F_p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = value_;
  std::uint64_t e = modulus_ - 2;
  while (e > 0) {
    if (e & 1U) result = (result * base) % modulus_;
    base = (base * base) % modulus_;
    e >>= 1;
  }
  return {result, modulus_};
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p > (1ULL << 31)) throw DomainError("residue characteristic must be a small prime");
}

ModP PrimeField::element(std::int64_t n) const {
  const auto m = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((n % m) + m) % m), p_};
}

ModP PrimeField::reduce(const Rational& q) const {
  const Integer p(static_cast<unsigned long>(p_));
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (den == 0) throw DomainError("reduce: " + to_string(q) + " is not p-integral");
  if (num < 0) num += p;
  return ModP(num.get_ui(), p_) / ModP(den.get_ui(), p_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) { return from_rows(columns).transpose(); }

Matrix Matrix::diagonal(const Vector& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  auto rows = row_vectors();
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = c;
    while (found < n && rows[found][c] == 0) ++found;
    if (found == n) return 0;
    if (found != c) {
      std::swap(rows[found], rows[c]);
      det = -det;
    }
    det *= rows[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[c][c];
      for (std::size_t k = c; k < n; ++k) rows[r][k] -= factor * rows[c][k];
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<Vector> aug;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = row(i);
    r.resize(2 * n);
    r[n + i] = 1;
    aug.push_back(std::move(r));
  }
  const auto pivots = reduce_rows(RationalField{}, aug, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
  }
  return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Subspace transform(const Matrix& g, const Subspace& w) {
  if (g.cols() != w.ambient_dim() || g.rows() != g.cols()) throw DomainError("transform: shape mismatch");
  std::vector<Vector> images;
  for (const auto& v : w.basis()) images.push_back(g.apply(v));
  return Subspace::span(std::move(images), w.ambient_dim());
}

namespace {

// Divides v by the p-power making it primitive (entries p-integral, one a unit).
void make_primitive(Vector& v, unsigned long p) {
  std::optional<long> lowest;
  for (const auto& x : v) {
    const auto val = padic_valuation(x, p);
    if (val && (!lowest || *val < *lowest)) lowest = val;
  }
  if (!lowest || *lowest == 0) return;
  const Rational scale = power(Rational(static_cast<long>(p)), -*lowest);
  for (auto& x : v) x *= scale;
}

}  // namespace

ResidueSubspace reduce_mod_p(const Subspace& w, const PrimeField& field) {
  const unsigned long p = field.characteristic();
  const std::size_t n = w.ambient_dim();
  std::vector<Vector> rows = w.basis();
  for (auto& r : rows) make_primitive(r, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t col = 0;
    while (col < n && padic_valuation(rows[i][col], p) != std::optional<long>(0)) ++col;
    if (col == n) throw DomainError("reduce_mod_p: internal error, row is not primitive");
    const Rational pivot = rows[i][col];
    for (auto& x : rows[i]) x /= pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == i || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (std::size_t k = 0; k < n; ++k) rows[r][k] -= factor * rows[i][k];
    }
    for (std::size_t r = i + 1; r < rows.size(); ++r) make_primitive(rows[r], p);
  }
  std::vector<ResidueSubspace::Vec> reduced;
  for (const auto& r : rows) {
    ResidueSubspace::Vec v;
    for (const auto& x : r) v.push_back(field.reduce(x));
    reduced.push_back(std::move(v));
  }
  return ResidueSubspace::span(std::move(reduced), n, field);
}

}  // namespace bruhat
