#pragma once

// Euclidean norms on R^n (the symmetric space of GL_n(R)) and the action of
// real filtrations on them. Floating point throughout, natural logarithms.

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bruhat {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// alpha(v)^2 = v^T G v for a symmetric positive definite G.
class EuclideanNorm {
 public:
  explicit EuclideanNorm(RealMatrix gram);
  static EuclideanNorm identity(std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(gram_.rows()); }
  const RealMatrix& gram() const& { return gram_; }
  RealMatrix gram() && { return std::move(gram_); }
  double operator()(const RealVector& v) const;

 private:
  RealMatrix gram_;
};

/// F^g = span{b_i : w_i >= g}. Columns of `basis` must be independent.
struct RealFiltration {
  RealMatrix basis;
  std::vector<double> weights;

  RealFiltration(RealMatrix b, std::vector<double> w);
  static RealFiltration trivial(std::size_t n);
  std::size_t dim() const { return static_cast<std::size_t>(basis.rows()); }
  /// Weights sorted ascending.
  std::vector<double> type() const;
  RealFiltration scaled(double t) const;
};

/// Gram-Schmidt for alpha in decreasing weight order: the columns are an
/// alpha-orthonormal basis whose pieces form the alpha-orthogonal splitting.
RealFiltration orthogonal_splitting(const EuclideanNorm& a, const RealFiltration& f);

/// alpha + F: on the alpha-orthogonal splitting, piece g is scaled by e^-g.
EuclideanNorm add_fil_spd(const EuclideanNorm& a, const RealFiltration& f);

/// F with negated weights on the alpha-orthogonal splitting.
RealFiltration opposite(const EuclideanNorm& a, const RealFiltration& f);

/// g . alpha, with (g alpha)(v) = alpha(g^-1 v).
EuclideanNorm act(const RealMatrix& g, const EuclideanNorm& a);
RealFiltration act(const RealMatrix& g, const RealFiltration& f);

/// d_i = -(1/2) log of the generalized eigenvalues of (G_beta, G_alpha),
/// ascending. Throws DomainError if a Gram matrix has condition number
/// above 1e12.
std::vector<double> fischer_courant(const EuclideanNorm& a, const EuclideanNorm& b);
double dn(const EuclideanNorm& a, const EuclideanNorm& b);
double l2_length(const std::vector<double>& d);

/// Basis (columns) orthonormal for alpha and orthogonal for beta.
RealMatrix common_apartment(const EuclideanNorm& a, const EuclideanNorm& b);

/// Quotient norms of alpha on the pieces Gr^g = F^g / F_+^g, paired with
/// beta's and measured piece by piece; ascending.
std::vector<double> graded_distance(const EuclideanNorm& a, const EuclideanNorm& b, const RealFiltration& f);

struct ConvexityReport {
  std::size_t samples = 0;
  double worst_violation = 0.0;  // max of S(t_k) - (S(t_{k-1}) + S(t_{k+1})) / 2
  bool convex = true;
};

/// Samples t on [0, 2] at `grid` points and checks midpoint convexity of every
/// suffix sum of d(alpha + tF, beta + tG) within `tolerance`.
ConvexityReport convexity_report(const EuclideanNorm& a, const EuclideanNorm& b, const RealFiltration& f,
                                 const RealFiltration& g, std::size_t grid, double tolerance = 1e-7);

}  // namespace bruhat
