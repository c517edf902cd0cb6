#include "bruhat/symspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bruhat/error.hpp"

namespace bruhat {

namespace {

constexpr double kMaxCondition = 1e12;

void check_condition(const RealMatrix& gram) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DomainError("eigen-solver failure");
  const auto& ev = es.eigenvalues();
  if (ev(0) <= 0 || ev(ev.size() - 1) / ev(0) > kMaxCondition) {
    throw DomainError("Gram matrix is too ill-conditioned for the Fischer-Courant invariants");
  }
}

RealMatrix symmetrized(const RealMatrix& m) { return (m + m.transpose()) / 2; }

std::vector<double> distinct_descending(const std::vector<double>& weights) {
  std::vector<double> w = weights;
  std::sort(w.begin(), w.end(), std::greater<>());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

}  // namespace

EuclideanNorm::EuclideanNorm(RealMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols()) throw DomainError("gram matrix must be square and nonempty");
  const double scale = std::max(1.0, gram_.cwiseAbs().maxCoeff());
  if ((gram_ - gram_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw DomainError("gram matrix is not symmetric");
  }
  gram_ = symmetrized(gram_);
  Eigen::LLT<RealMatrix> llt(gram_);
  if (llt.info() != Eigen::Success) throw DomainError("gram matrix is not positive definite");
}

EuclideanNorm EuclideanNorm::identity(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return EuclideanNorm(RealMatrix::Identity(m, m));
}

double EuclideanNorm::operator()(const RealVector& v) const { return std::sqrt(v.dot(gram_ * v)); }

RealFiltration::RealFiltration(RealMatrix b, std::vector<double> w) : basis(std::move(b)), weights(std::move(w)) {
  if (basis.rows() != basis.cols() || static_cast<std::size_t>(basis.cols()) != weights.size()) {
    throw DomainError("real filtration: need a square basis with one weight per column");
  }
  for (double x : weights) {
    if (!std::isfinite(x)) throw DomainError("real filtration: weights must be finite");
  }
  Eigen::FullPivLU<RealMatrix> lu(basis);
  if (!lu.isInvertible()) throw DomainError("real filtration: basis is singular");
}

RealFiltration RealFiltration::trivial(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return RealFiltration(RealMatrix::Identity(m, m), std::vector<double>(n, 0.0));
}

std::vector<double> RealFiltration::type() const {
  std::vector<double> t = weights;
  std::sort(t.begin(), t.end());
  return t;
}

RealFiltration RealFiltration::scaled(double t) const {
  if (t < 0) throw DomainError("scale: negative factor");
  std::vector<double> w;
  for (double x : weights) w.push_back(x * t);
  return RealFiltration(basis, std::move(w));
}

RealFiltration orthogonal_splitting(const EuclideanNorm& a, const RealFiltration& f) {
  if (a.dim() != f.dim()) throw DomainError("orthogonal_splitting: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(f.dim());
  std::vector<std::size_t> order(f.weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return f.weights[x] > f.weights[y]; });

  const RealMatrix& g = a.gram();
  RealMatrix u(n, n);
  std::vector<double> w;
  for (Eigen::Index k = 0; k < n; ++k) {
    RealVector v = f.basis.col(static_cast<Eigen::Index>(order[k]));
    for (Eigen::Index j = 0; j < k; ++j) v -= u.col(j).dot(g * v) * u.col(j);
    u.col(k) = v / std::sqrt(v.dot(g * v));
    w.push_back(f.weights[order[k]]);
  }
  return RealFiltration(std::move(u), std::move(w));
}

EuclideanNorm add_fil_spd(const EuclideanNorm& a, const RealFiltration& f) {
  const RealFiltration s = orthogonal_splitting(a, f);
  const auto n = static_cast<Eigen::Index>(s.dim());
  RealVector scale(n);
  for (Eigen::Index k = 0; k < n; ++k) scale(k) = std::exp(-2 * s.weights[k]);
  const RealMatrix inv = s.basis.inverse();
  return EuclideanNorm(symmetrized(inv.transpose() * scale.asDiagonal() * inv));
}

RealFiltration opposite(const EuclideanNorm& a, const RealFiltration& f) {
  RealFiltration s = orthogonal_splitting(a, f);
  for (double& x : s.weights) x = -x;
  return s;
}

EuclideanNorm act(const RealMatrix& g, const EuclideanNorm& a) {
  if (g.rows() != g.cols() || static_cast<std::size_t>(g.rows()) != a.dim()) throw DomainError("act: shape mismatch");
  Eigen::FullPivLU<RealMatrix> lu(g);
  if (!lu.isInvertible()) throw DomainError("act: matrix is singular");
  const RealMatrix inv = lu.inverse();
  return EuclideanNorm(symmetrized(inv.transpose() * a.gram() * inv));
}

RealFiltration act(const RealMatrix& g, const RealFiltration& f) {
  if (g.rows() != g.cols() || static_cast<std::size_t>(g.rows()) != f.dim()) throw DomainError("act: shape mismatch");
  return RealFiltration(g * f.basis, f.weights);
}

std::vector<double> fischer_courant(const EuclideanNorm& a, const EuclideanNorm& b) {
  if (a.dim() != b.dim()) throw DomainError("fischer_courant: dimension mismatch");
  check_condition(a.gram());
  check_condition(b.gram());
  // Symmetric-definite reduction: L^-1 G_beta L^-T with G_alpha = L L^T.
  Eigen::LLT<RealMatrix> llt(a.gram());
  const RealMatrix half = llt.matrixL().solve(b.gram());
  const RealMatrix c = llt.matrixL().solve(half.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(symmetrized(c), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DomainError("eigen-solver failure");
  std::vector<double> d;
  // Adding 0.0 turns -log(1) = -0.0 into 0.0.
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) d.push_back(-0.5 * std::log(es.eigenvalues()(i)) + 0.0);
  std::sort(d.begin(), d.end());
  return d;
}

double dn(const EuclideanNorm& a, const EuclideanNorm& b) {
  const auto d = fischer_courant(a, b);
  return std::accumulate(d.begin(), d.end(), 0.0);
}

double l2_length(const std::vector<double>& d) {
  double s = 0;
  for (double x : d) s += x * x;
  return std::sqrt(s);
}

RealMatrix common_apartment(const EuclideanNorm& a, const EuclideanNorm& b) {
  if (a.dim() != b.dim()) throw DomainError("common_apartment: dimension mismatch");
  Eigen::LLT<RealMatrix> llt(a.gram());
  const RealMatrix half = llt.matrixL().solve(b.gram());
  const RealMatrix c = llt.matrixL().solve(half.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(symmetrized(c));
  if (es.info() != Eigen::Success) throw DomainError("eigen-solver failure");
  return llt.matrixL().transpose().solve(es.eigenvectors());
}

std::vector<double> graded_distance(const EuclideanNorm& a, const EuclideanNorm& b, const RealFiltration& f) {
  if (a.dim() != f.dim() || b.dim() != f.dim()) throw DomainError("graded_distance: dimension mismatch");
  std::vector<double> out;
  for (double g : distinct_descending(f.weights)) {
    std::vector<Eigen::Index> high;
    std::vector<Eigen::Index> piece;
    for (std::size_t k = 0; k < f.weights.size(); ++k) {
      if (f.weights[k] > g) high.push_back(static_cast<Eigen::Index>(k));
      if (f.weights[k] == g) piece.push_back(static_cast<Eigen::Index>(k));
    }
    const RealMatrix bh = f.basis(Eigen::all, high);
    const RealMatrix bp = f.basis(Eigen::all, piece);
    // Quotient norm on F^g / F_+^g: Schur complement of the F_+^g block.
    const auto quotient = [&](const RealMatrix& gram) {
      RealMatrix c = bp.transpose() * gram * bp;
      if (!high.empty()) {
        const RealMatrix hh = bh.transpose() * gram * bh;
        const RealMatrix hp = bh.transpose() * gram * bp;
        c -= hp.transpose() * hh.ldlt().solve(hp);
      }
      return EuclideanNorm(symmetrized(c));
    };
    const auto d = fischer_courant(quotient(a.gram()), quotient(b.gram()));
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConvexityReport convexity_report(const EuclideanNorm& a, const EuclideanNorm& b, const RealFiltration& f,
                                 const RealFiltration& g, std::size_t grid, double tolerance) {
  if (grid < 3) throw DomainError("convexity_report: grid must be at least 3");
  std::vector<std::vector<double>> suffix;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = 2.0 * static_cast<double>(k) / static_cast<double>(grid - 1);
    const auto d = fischer_courant(add_fil_spd(a, f.scaled(t)), add_fil_spd(b, g.scaled(t)));
    std::vector<double> s(d.size());
    double acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      acc += d[i];
      s[i] = acc;
    }
    suffix.push_back(std::move(s));
  }
  ConvexityReport report;
  report.samples = grid;
  report.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k + 1 < grid; ++k) {
    for (std::size_t i = 0; i < suffix[k].size(); ++i) {
      const double excess = suffix[k][i] - (suffix[k - 1][i] + suffix[k + 1][i]) / 2;
      report.worst_violation = std::max(report.worst_violation, excess);
    }
  }
  report.convex = report.worst_violation <= tolerance;
  return report;
}

}  // namespace bruhat
