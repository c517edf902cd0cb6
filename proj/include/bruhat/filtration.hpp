#pragma once

// Rational-weight filtrations of finite-dimensional vector spaces.
//
// A filtration is stored by its breakpoints: weights w_1 < ... < w_m with
// step spaces S_1 = V > S_2 > ... > S_m > 0. Evaluation follows
//
//   F^g = S_j  for the smallest w_j >= g,   F^g = 0 above w_m,
//
// so F^g is the span of the graded pieces of weight >= g.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "bruhat/linalg.hpp"

namespace bruhat {

/// A point of the closed Weyl chamber: a nondecreasing rational vector.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<Rational> values);

  /// Sorts first; for inputs that are types only up to permutation.
  static TypeVector sorted(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const& { return values_; }
  std::vector<Rational> values() && { return std::move(values_); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  bool operator==(const TypeVector&) const = default;

 private:
  std::vector<Rational> values_;
};

template <class Field>
struct BasicStep {
  Rational weight;
  BasicSubspace<Field> space;
  bool operator==(const BasicStep&) const = default;
};

template <class Field>
class BasicFiltration {
 public:
  using Space = BasicSubspace<Field>;
  using Step = BasicStep<Field>;

  BasicFiltration() = default;

  BasicFiltration(std::size_t dim, std::vector<Step> steps, Field field = {})
      : dim_(dim), steps_(std::move(steps)), field_(field) {
    if (dim_ == 0) {
      if (!steps_.empty()) throw DomainError("the zero space carries only the empty filtration");
      return;
    }
    if (steps_.empty()) throw DomainError("filtration of a nonzero space needs at least one step");
    if (!steps_.front().space.is_full()) throw DomainError("first step of a filtration must be the whole space");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const auto& s = steps_[i].space;
      if (s.ambient_dim() != dim_ || !(s.field() == field_)) throw DomainError("step space in wrong ambient space");
      if (s.is_zero()) throw DomainError("step spaces must be nonzero");
      if (i > 0) {
        if (!(steps_[i - 1].weight < steps_[i].weight)) throw DomainError("step weights must increase strictly");
        const auto& prev = steps_[i - 1].space;
        if (!(prev.contains(s) && prev.dim() > s.dim())) throw DomainError("step spaces must decrease strictly");
      }
    }
  }

  static BasicFiltration trivial(std::size_t dim, const Rational& weight = 0, Field field = {}) {
    if (dim == 0) return BasicFiltration(0, {}, field);
    return BasicFiltration(dim, {Step{weight, Space::full(dim, field)}}, field);
  }

  /// Rebuilds a filtration from its values at a set of weights containing
  /// every breakpoint. The smallest sample must be the whole space.
  static BasicFiltration from_samples(std::size_t dim, std::vector<std::pair<Rational, Space>> samples,
                                      Field field = {}) {
    std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Step> steps;
    for (auto& [w, space] : samples) {
      if (space.is_zero()) continue;
      if (!steps.empty() && steps.back().space == space) {
        steps.back().weight = w;
      } else if (!steps.empty() && steps.back().weight == w) {
        throw DomainError("from_samples: conflicting values at one weight");
      } else {
        steps.push_back(Step{w, std::move(space)});
      }
    }
    return BasicFiltration(dim, std::move(steps), field);
  }

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<Step>& steps() const& { return steps_; }
  std::vector<Step> steps() && { return std::move(steps_); }

  std::vector<Rational> weights() const {
    std::vector<Rational> w;
    for (const auto& s : steps_) w.push_back(s.weight);
    return w;
  }

  /// F^g.
  Space eval(const Rational& g) const {
    for (const auto& s : steps_) {
      if (s.weight >= g) return s.space;
    }
    return Space::zero(dim_, field_);
  }

  /// F_+^g, the union of F^h over h > g.
  Space eval_above(const Rational& g) const {
    for (const auto& s : steps_) {
      if (s.weight > g) return s.space;
    }
    return Space::zero(dim_, field_);
  }

  std::size_t graded_dim(const Rational& g) const { return eval(g).dim() - eval_above(g).dim(); }

  /// The weight multiset, each weight repeated dim Gr^w times.
  TypeVector type() const {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      const std::size_t next = i + 1 < steps_.size() ? steps_[i + 1].space.dim() : 0;
      for (std::size_t k = 0; k < steps_[i].space.dim() - next; ++k) values.push_back(steps_[i].weight);
    }
    return TypeVector(std::move(values));
  }

  bool operator==(const BasicFiltration& other) const {
    return dim_ == other.dim_ && field_ == other.field_ && steps_ == other.steps_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Step> steps_;
  Field field_{};
};

template <class Field>
struct BasicPiece {
  Rational weight;
  BasicSubspace<Field> space;
  bool operator==(const BasicPiece&) const = default;
};

/// A splitting V = (+) G_w with pairwise distinct weights. Zero pieces are
/// dropped; pieces are kept sorted by weight.
template <class Field>
class BasicGraduation {
 public:
  using Piece = BasicPiece<Field>;

  BasicGraduation() = default;

  BasicGraduation(std::size_t dim, std::vector<Piece> pieces, Field field = {}) : dim_(dim), field_(field) {
    std::erase_if(pieces, [](const Piece& p) { return p.space.is_zero(); });
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.weight < b.weight; });
    auto total = BasicSubspace<Field>::zero(dim, field);
    std::size_t dims = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (pieces[i].space.ambient_dim() != dim) throw DomainError("graduation piece in wrong ambient space");
      if (i > 0 && pieces[i - 1].weight == pieces[i].weight) throw DomainError("graduation weights must be distinct");
      total = sum(total, pieces[i].space);
      dims += pieces[i].space.dim();
    }
    if (dims != dim || total.dim() != dim) throw DomainError("graduation pieces must form a direct sum decomposition");
    pieces_ = std::move(pieces);
  }

  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<Piece>& pieces() const& { return pieces_; }
  std::vector<Piece> pieces() && { return std::move(pieces_); }
  bool operator==(const BasicGraduation&) const = default;

 private:
  std::size_t dim_ = 0;
  Field field_{};
  std::vector<Piece> pieces_;
};

/// F^g = (+)_{w >= g} G_w.
template <class Field>
BasicFiltration<Field> fil_from_grading(const BasicGraduation<Field>& g) {
  using Space = BasicSubspace<Field>;
  std::vector<BasicStep<Field>> steps;
  auto acc = Space::zero(g.dim(), g.field());
  const auto& pieces = g.pieces();
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    acc = sum(acc, it->space);
    steps.push_back({it->weight, acc});
  }
  std::reverse(steps.begin(), steps.end());
  return BasicFiltration<Field>(g.dim(), std::move(steps), g.field());
}

using Filtration = BasicFiltration<RationalField>;
using ResidueFiltration = BasicFiltration<PrimeField>;
using Graduation = BasicGraduation<RationalField>;
using ResidueGraduation = BasicGraduation<PrimeField>;
using Step = BasicStep<RationalField>;
using Piece = BasicPiece<RationalField>;

/// Splitting of F: at each step the complement of the next step space is
/// spanned by the echelon rows whose pivots the next step does not use.
Graduation split(const Filtration& f);

/// F^g = sum over g1 + g2 = g of F1^g1 (x) F2^g2 on V1 (x) V2, coordinates
/// (i, j) -> i * n2 + j.
Filtration tensor(const Filtration& f1, const Filtration& f2);

/// (F^v)^g = annihilator of F_+^{-g}; the dual space uses coordinate rows.
Filtration dual(const Filtration& f);

/// Filtration on Hom(V1, V2) = n2 x n1 matrices, row-major coordinates
/// (E_ij at i * n1 + j); equal to tensor(f2, dual(f1)) in those coordinates.
Filtration hom(const Filtration& f1, const Filtration& f2);

struct InducedPair {
  Filtration sub;       // on W, in the coordinates of W's echelon basis
  Filtration quotient;  // on V/W, on the non-pivot coordinates of W
};

InducedPair induced(const Filtration& f, const Subspace& w);

/// Block filtration on V1 (+) V2.
Filtration direct_sum(const Filtration& f1, const Filtration& f2);

/// g . F, i.e. (gF)^w = g(F^w).
Filtration act(const Matrix& g, const Filtration& f);

/// t . F for t >= 0 (weights scaled; t = 0 gives the trivial filtration at 0).
Filtration scale(const Filtration& f, const Rational& t);

/// Reduction modulo p: g -> image of F^g intersected with Z_(p)^n in F_p^n.
ResidueFiltration reduce_mod_p(const Filtration& f, const PrimeField& field);

}  // namespace bruhat
