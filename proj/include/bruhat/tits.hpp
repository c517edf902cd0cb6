#pragma once

// The vectorial Tits building of GL(V) over Q, realized on filtrations.

#include <cstddef>
#include <utility>
#include <vector>

#include "bruhat/filtration.hpp"

namespace bruhat {

/// An unordered decomposition of V into lines. Lines are kept sorted by
/// their echelon vector so that equal frames compare equal.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<Subspace> lines);

  static Frame standard(std::size_t n);
  static Frame from_vectors(const std::vector<Vector>& vectors);

  std::size_t dim() const { return lines_.size(); }
  const std::vector<Subspace>& lines() const& { return lines_; }
  std::vector<Subspace> lines() && { return std::move(lines_); }
  /// Generator of each line (its echelon row), as matrix columns.
  Matrix basis() const;

  /// Whether every step of f is a sum of lines of the frame.
  bool splits(const Filtration& f) const;
  /// sup{w : L in F^w} per line; requires splits(f).
  std::vector<Rational> weights_of(const Filtration& f) const;
  /// The filtration split by this frame with the given weight per line.
  Filtration filtration(const std::vector<Rational>& weights) const;

  bool operator==(const Frame&) const = default;

 private:
  std::vector<Subspace> lines_;
};

/// A strictly increasing chain of nonzero proper subspaces.
class Flag {
 public:
  Flag() = default;
  Flag(std::size_t ambient_dim, std::vector<Subspace> chain);

  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Subspace>& chain() const& { return chain_; }
  std::vector<Subspace> chain() && { return std::move(chain_); }
  bool operator==(const Flag&) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Subspace> chain_;
};

/// The representation used to measure filtrations: V itself, or End(V)
/// through hom(F, F).
enum class PairingForm { standard, adjoint };

Frame frame_of(const Filtration& f);

/// A frame splitting both filtrations, built from complements of the
/// double-graded pieces Gr^{a,b}.
Frame common_frame(const Filtration& f1, const Filtration& f2);

/// <F1, F2> = sum over (a, b) of dim Gr^{a,b} * a * b.
Rational pairing(const Filtration& f1, const Filtration& f2, PairingForm form = PairingForm::standard);
Rational norm_sq(const Filtration& f, PairingForm form = PairingForm::standard);
Rational distance_sq(const Filtration& f1, const Filtration& f2, PairingForm form = PairingForm::standard);
/// In [0, pi]. Throws DomainError when either filtration has norm zero.
double angle(const Filtration& f1, const Filtration& f2, PairingForm form = PairingForm::standard);

/// Equal totals and every suffix sum of x bounded by that of y.
bool dominance_leq(const TypeVector& x, const TypeVector& y);
TypeVector type_add(const TypeVector& x, const TypeVector& y);
/// Sorted-aligned dot product.
Rational type_pairing(const TypeVector& x, const TypeVector& y);

/// (F1 + F2)^g = sum over g1 + g2 = g of F1^g1 intersected with F2^g2.
Filtration add_fil(const Filtration& f1, const Filtration& f2);

Flag parabolic_of(const Filtration& f);
/// Whether g F^w = F^w at every breakpoint. Throws DomainError for singular g.
bool stabilizes(const Matrix& g, const Filtration& f);

/// Retraction onto the Levi of the flag: on each subquotient W_i / W_{i-1}
/// the induced filtration, lifted to the pivot-rule complement U_i of
/// W_{i-1} in W_i.
Filtration retract(const Filtration& f, const Flag& flag);

/// Type of F2 - F1 computed in a common frame.
TypeVector vector_distance(const Filtration& f1, const Filtration& f2);

/// The filtration with negated weights on the splitting frame_of(f).
Filtration opposite(const Filtration& f);

}  // namespace bruhat
