#pragma once

// Exact linear algebra over Q and over F_p.
//
// Subspaces are stored in reduced row echelon form, so equality of
// subspaces is equality of representations. The algorithms are written
// once against a small Field policy (zero/one plus the element type's
// arithmetic operators) and instantiated for RationalField and PrimeField.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/error.hpp"
#include "bruhat/rational.hpp"

namespace bruhat {

struct RationalField {
  using value_type = Rational;
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  bool operator==(const RationalField&) const = default;
};

/// Residue class modulo a prime. Both operands of a binary operation must
/// share the modulus.
class ModP {
 public:
  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend ModP operator+(ModP a, ModP b) { return {(a.value_ + b.value_) % a.modulus_, a.modulus_}; }
  friend ModP operator-(ModP a, ModP b) { return {(a.value_ + a.modulus_ - b.value_) % a.modulus_, a.modulus_}; }
  friend ModP operator*(ModP a, ModP b) { return {(a.value_ * b.value_) % a.modulus_, a.modulus_}; }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return {(modulus_ - value_) % modulus_, modulus_}; }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }
  bool operator==(const ModP&) const = default;

  ModP inverse() const;

 private:
  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

class PrimeField {
 public:
  using value_type = ModP;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  ModP zero() const { return {0, p_}; }
  ModP one() const { return {1, p_}; }
  ModP element(std::int64_t n) const;
  /// Reduction of a p-integral rational. Throws DomainError otherwise.
  ModP reduce(const Rational& q) const;
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_ = 2;
};

template <class Field>
using VecOf = std::vector<typename Field::value_type>;

using Vector = std::vector<Rational>;

/// Brings `rows` (each of length `cols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot columns.
template <class Field>
std::vector<std::size_t> reduce_rows(const Field& field, std::vector<VecOf<Field>>& rows, std::size_t cols) {
  const auto zero = field.zero();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t found = rank;
    while (found < rows.size() && rows[found][c] == zero) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[rank], rows[found]);
    const auto pivot = rows[rank][c];
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] /= pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == zero) continue;
      const auto factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

template <class Field>
class BasicSubspace {
 public:
  using value_type = typename Field::value_type;
  using Vec = VecOf<Field>;

  BasicSubspace() = default;

  static BasicSubspace span(std::vector<Vec> vectors, std::size_t ambient_dim, Field field = {}) {
    for (const auto& v : vectors) {
      if (v.size() != ambient_dim) {
        throw DomainError("span: vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                          std::to_string(ambient_dim));
      }
    }
    BasicSubspace s;
    s.field_ = field;
    s.ambient_ = ambient_dim;
    s.pivots_ = reduce_rows(field, vectors, ambient_dim);
    s.rows_ = std::move(vectors);
    return s;
  }

  static BasicSubspace zero(std::size_t ambient_dim, Field field = {}) { return span({}, ambient_dim, field); }

  static BasicSubspace full(std::size_t ambient_dim, Field field = {}) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit(ambient_dim, i, field));
    return span(std::move(rows), ambient_dim, field);
  }

  static Vec unit(std::size_t n, std::size_t i, const Field& field = {}) {
    Vec v(n, field.zero());
    v[i] = field.one();
    return v;
  }

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }
  const std::vector<Vec>& basis() const& { return rows_; }
  std::vector<Vec> basis() && { return std::move(rows_); }
  const std::vector<std::size_t>& pivots() const& { return pivots_; }
  std::vector<std::size_t> pivots() && { return std::move(pivots_); }

  /// Normal form of v modulo this subspace: the pivot coordinates are cleared.
  Vec reduce(Vec v) const {
    check_length(v.size());
    const auto zero = field_.zero();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto factor = v[pivots_[r]];
      if (factor == zero) continue;
      for (std::size_t k = 0; k < ambient_; ++k) v[k] -= factor * rows_[r][k];
    }
    return v;
  }

  bool contains(const Vec& v) const {
    const auto zero = field_.zero();
    const Vec rest = reduce(v);
    return std::all_of(rest.begin(), rest.end(), [&](const value_type& x) { return x == zero; });
  }

  bool contains(const BasicSubspace& other) const {
    check_same(other);
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
  }

  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  Vec coordinates(const Vec& v) const {
    if (!contains(v)) throw DomainError("coordinates: vector not in subspace");
    Vec c;
    c.reserve(rows_.size());
    for (std::size_t p : pivots_) c.push_back(v[p]);
    return c;
  }

  Vec combine(const Vec& coords) const {
    if (coords.size() != rows_.size()) throw DomainError("combine: coordinate count mismatch");
    Vec v(ambient_, field_.zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t k = 0; k < ambient_; ++k) v[k] += coords[r] * rows_[r][k];
    }
    return v;
  }

  bool operator==(const BasicSubspace& other) const {
    return ambient_ == other.ambient_ && field_ == other.field_ && rows_ == other.rows_;
  }

  void check_same(const BasicSubspace& other) const {
    if (ambient_ != other.ambient_ || !(field_ == other.field_)) {
      throw DomainError("ambient mismatch: " + std::to_string(ambient_) + " vs " + std::to_string(other.ambient_));
    }
  }

 private:
  void check_length(std::size_t n) const {
    if (n != ambient_) throw DomainError("vector length does not match ambient dimension");
  }

  Field field_{};
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

using Subspace = BasicSubspace<RationalField>;
using ResidueSubspace = BasicSubspace<PrimeField>;

template <class Field>
BasicSubspace<Field> sum(const BasicSubspace<Field>& a, const BasicSubspace<Field>& b) {
  a.check_same(b);
  auto rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return BasicSubspace<Field>::span(std::move(rows), a.ambient_dim(), a.field());
}

/// Annihilator under the standard coordinate pairing; lives in the same
/// coordinate space (dual vectors are coordinate rows).
template <class Field>
BasicSubspace<Field> annihilator(const BasicSubspace<Field>& a) {
  const std::size_t n = a.ambient_dim();
  const auto& piv = a.pivots();
  std::vector<VecOf<Field>> kernel;
  std::size_t next = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (next < piv.size() && piv[next] == c) {
      ++next;
      continue;
    }
    auto v = BasicSubspace<Field>::unit(n, c, a.field());
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a.basis()[r][c];
    kernel.push_back(std::move(v));
  }
  return BasicSubspace<Field>::span(std::move(kernel), n, a.field());
}

template <class Field>
BasicSubspace<Field> intersect(const BasicSubspace<Field>& a, const BasicSubspace<Field>& b) {
  a.check_same(b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

/// Image of `a` in V/W, where V/W is realized on the non-pivot coordinates
/// of W (in increasing order).
template <class Field>
BasicSubspace<Field> quotient_image(const BasicSubspace<Field>& a, const BasicSubspace<Field>& w) {
  a.check_same(w);
  const std::size_t n = a.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : w.pivots()) is_pivot[p] = true;
  std::vector<VecOf<Field>> images;
  for (const auto& row : a.basis()) {
    const auto reduced = w.reduce(row);
    VecOf<Field> img;
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_pivot[k]) img.push_back(reduced[k]);
    }
    images.push_back(std::move(img));
  }
  return BasicSubspace<Field>::span(std::move(images), n - w.dim(), a.field());
}

/// Deterministic complement of `sub` inside `super`: the echelon rows of
/// `super` whose pivot is not a pivot of `sub`.
template <class Field>
BasicSubspace<Field> complement_in(const BasicSubspace<Field>& sub, const BasicSubspace<Field>& super) {
  if (!super.contains(sub)) throw DomainError("complement_in: not a subspace");
  std::vector<VecOf<Field>> rows;
  for (std::size_t r = 0; r < super.dim(); ++r) {
    const auto& sp = sub.pivots();
    if (std::find(sp.begin(), sp.end(), super.pivots()[r]) == sp.end()) rows.push_back(super.basis()[r]);
  }
  return BasicSubspace<Field>::span(std::move(rows), super.ambient_dim(), super.field());
}

/// A (x) B inside the tensor product space, coordinates (i, j) -> i * n_b + j.
template <class Field>
BasicSubspace<Field> tensor_product(const BasicSubspace<Field>& a, const BasicSubspace<Field>& b) {
  const std::size_t nb = b.ambient_dim();
  std::vector<VecOf<Field>> rows;
  for (const auto& u : a.basis()) {
    for (const auto& w : b.basis()) {
      VecOf<Field> v(a.ambient_dim() * nb, a.field().zero());
      for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < nb; ++j) v[i * nb + j] = u[i] * w[j];
      }
      rows.push_back(std::move(v));
    }
  }
  return BasicSubspace<Field>::span(std::move(rows), a.ambient_dim() * nb, a.field());
}

/// A (+) B inside V_a (+) V_b.
template <class Field>
BasicSubspace<Field> direct_sum(const BasicSubspace<Field>& a, const BasicSubspace<Field>& b) {
  const std::size_t na = a.ambient_dim();
  const std::size_t n = na + b.ambient_dim();
  std::vector<VecOf<Field>> rows;
  for (const auto& u : a.basis()) {
    VecOf<Field> v(n, a.field().zero());
    std::copy(u.begin(), u.end(), v.begin());
    rows.push_back(std::move(v));
  }
  for (const auto& w : b.basis()) {
    VecOf<Field> v(n, a.field().zero());
    std::copy(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(na));
    rows.push_back(std::move(v));
  }
  return BasicSubspace<Field>::span(std::move(rows), n, a.field());
}

/// Dense rational matrix, row-major. Group elements act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns);
  static Matrix diagonal(const Vector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;
  std::vector<Vector> row_vectors() const;

  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Rational determinant() const;
  bool is_invertible() const { return rows_ == cols_ && determinant() != 0; }
  /// Throws DomainError when singular.
  Matrix inverse() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// g * W.
Subspace transform(const Matrix& g, const Subspace& w);

/// Image in F_p^n of the saturated lattice W intersected with Z_(p)^n.
ResidueSubspace reduce_mod_p(const Subspace& w, const PrimeField& field);

}  // namespace bruhat
