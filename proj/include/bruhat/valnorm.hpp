#pragma once

// Splittable norms on Q^n for the p-adic valuation, written additively:
// a norm is nu(v) = min_i (v_p(x_i) + c_i) where v = sum x_i b_i, so the
// multiplicative norm is p^(-nu). Larger weights mean smaller vectors.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bruhat/filtration.hpp"

namespace bruhat {

/// Additive norm value; nullopt is +infinity (the zero vector).
using NormValue = std::optional<Rational>;

class ValuedField {
 public:
  explicit ValuedField(unsigned long p);
  unsigned long p() const { return p_; }
  std::optional<long> v(const Rational& x) const { return padic_valuation(x, p_); }

 private:
  unsigned long p_;
};

class SplitNorm {
 public:
  /// Columns of `basis` form the adapted basis; weights[i] belongs to column i.
  SplitNorm(unsigned long p, Matrix basis, std::vector<Rational> weights);

  /// The norm of the lattice spanned by the columns of `basis`.
  static SplitNorm lattice(unsigned long p, Matrix basis);
  static SplitNorm standard(unsigned long p, std::size_t n);

  unsigned long p() const { return p_; }
  std::size_t dim() const { return weights_.size(); }
  const Matrix& basis() const& { return basis_; }
  Matrix basis() && { return std::move(basis_); }
  const Matrix& basis_inverse() const& { return inverse_; }
  Matrix basis_inverse() && { return std::move(inverse_); }
  const std::vector<Rational>& weights() const& { return weights_; }
  std::vector<Rational> weights() && { return std::move(weights_); }
  bool is_lattice() const;

 private:
  unsigned long p_;
  Matrix basis_;
  Matrix inverse_;
  std::vector<Rational> weights_;
};

NormValue eval_nu(const SplitNorm& a, const Vector& v);

/// Whether alpha is the split norm on the columns of `basis` with weights
/// nu_alpha(b_j). Decided exactly: that norm is >= alpha on b_j by
/// construction, so equality holds iff it is >= alpha on alpha's own basis.
bool is_adapted(const SplitNorm& a, const Matrix& basis);

/// A basis adapted to a norm and splitting a filtration.
struct AdaptedToFiltration {
  Matrix basis;                       // columns
  std::vector<Rational> norm_weights;
  std::vector<Rational> fil_weights;
};

AdaptedToFiltration adapt_to_filtration(const SplitNorm& a, const Filtration& f);

/// A basis adapted to two norms at once.
struct CommonBasis {
  Matrix basis;  // columns
  std::vector<Rational> alpha_weights;
  std::vector<Rational> beta_weights;
};

/// Valuated Gaussian elimination on M = A^-1 B: pivot on the entry minimizing
/// v(m_ij) + a_i - b_j (ties to the smallest (i, j)), clear its row with
/// column operations and its column with row operations, repeat.
CommonBasis adapt_norms(const SplitNorm& a, const SplitNorm& b);

/// alpha + F: on an adapted splitting basis, weights c_i + gamma_i.
SplitNorm add_fil_norm(const SplitNorm& a, const Filtration& f);

/// g . alpha, i.e. (g alpha)(v) = alpha(g^-1 v).
SplitNorm act(const Matrix& g, const SplitNorm& a);
bool fixes(const Matrix& g, const SplitNorm& a);

/// Sorted nu_alpha(e_k) - nu_beta(e_k) over a common adapted basis.
TypeVector cartan(const SplitNorm& a, const SplitNorm& b);
Rational central_component(const SplitNorm& a, const SplitNorm& b);
bool norms_equal(const SplitNorm& a, const SplitNorm& b);

/// Dual basis (rows of B^-1, as coordinate rows) with negated weights.
SplitNorm dual_norm(const SplitNorm& a);
/// Norm on Hom(V1, V2), n2 x n1 matrices in row-major coordinates:
/// b2_i (x) b1_j^* has weight c2_i - c1_j.
SplitNorm hom_norm(const SplitNorm& a1, const SplitNorm& a2);
/// b1_i (x) b2_j at coordinate i * n2 + j, weight c1_i + c2_j.
SplitNorm tensor_norm(const SplitNorm& a1, const SplitNorm& a2);

/// Generators p^ceil(r - c_k) b_k of the closed ball {m : nu(m) >= r}.
std::vector<Vector> moy_prasad(const SplitNorm& a_end, const Rational& r);
bool in_ball(const SplitNorm& a, const Vector& v, const Rational& r);

/// Residue filtration of alpha relative to the lattice M, in the coordinates
/// of M's basis: loc^g is spanned by the reductions of an O-basis of M
/// adapted to alpha whose alpha-weights are >= g.
ResidueFiltration loc(const SplitNorm& a, const SplitNorm& lattice_point);

}  // namespace bruhat
