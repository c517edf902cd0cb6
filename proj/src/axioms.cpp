#include "bruhat/axioms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <json.hpp>

namespace bruhat {

std::string scalar_text(const Rational& x) { return to_string(x); }

std::string scalar_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string report_json(const std::vector<AxiomReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      failures.push_back({{"seed", f.seed}, {"trial", f.trial}, {"witness", f.witness}});
    }
    out.push_back({{"instance", r.instance},
                   {"axiom", r.axiom},
                   {"trials", r.trials},
                   {"passed", r.passed()},
                   {"failures", std::move(failures)}});
  }
  return out.dump(2);
}

namespace {

// Swaps the lines of largest and smallest weight: not unipotent, and it moves
// any filtration with two distinct weights.
std::vector<std::size_t> extreme_swap(const std::vector<Rational>& weights) {
  std::vector<std::size_t> perm(weights.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  const auto lo = static_cast<std::size_t>(std::min_element(weights.begin(), weights.end()) - weights.begin());
  const auto hi = static_cast<std::size_t>(std::max_element(weights.begin(), weights.end()) - weights.begin());
  std::swap(perm[lo], perm[hi]);
  return perm;
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm) {
  Matrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

Matrix conjugate(const Matrix& s, const Matrix& m) { return s * m * s.inverse(); }

bool has_two_weights(const TypeVector& t) { return t.size() > 0 && t[0] != t[t.size() - 1]; }

Filtration sample_nontrivial(Sampler& s, std::size_t n, long bound) {
  while (true) {
    Filtration f = s.filtration(n, bound, 1);
    if (has_two_weights(f.type())) return f;
  }
}

Rational p_power(unsigned long p, long k) { return power(Rational(static_cast<long>(p)), k); }

}  // namespace

// ---------------------------------------------------------------------------
// Tits building

TitsInstance::TitsInstance(std::size_t n) : n_(n) {
  if (n < 2) throw DomainError("tits instance needs n >= 2");
}

std::string TitsInstance::name() const { return "tits(n=" + std::to_string(n_) + ")"; }

Filtration TitsInstance::sample_point(Sampler& s) const { return s.filtration(n_, 2, 2); }

Filtration TitsInstance::sample_filtration(Sampler& s) const { return sample_nontrivial(s, n_, 2); }

std::optional<Frame> TitsInstance::common_apartment(const Filtration& x, const Filtration& y) const {
  return common_frame(x, y);
}

std::optional<Frame> TitsInstance::apartment_for(const Filtration& x, const Filtration& f) const {
  return common_frame(x, f);
}

bool TitsInstance::contains_point(const Frame& a, const Filtration& x) const { return a.splits(x); }
bool TitsInstance::contains_filtration(const Frame& a, const Filtration& f) const { return a.splits(f); }
Frame TitsInstance::coordinate_apartment() const { return Frame::standard(n_); }

Filtration TitsInstance::act(const Matrix& g, const Filtration& x) const { return bruhat::act(g, x); }

Filtration TitsInstance::plus(const Filtration& x, const Filtration& f, const Rational& t) const {
  return add_fil(x, scale(f, t));
}

std::vector<Rational> TitsInstance::distance(const Filtration& x, const Filtration& y) const {
  return vector_distance(x, y).values();
}

std::vector<Rational> TitsInstance::type_of(const Filtration& f) const { return f.type().values(); }

Filtration TitsInstance::opposite(const Filtration& x) const { return bruhat::opposite(x); }

Matrix TitsInstance::sample_unipotent(Sampler& s, const Filtration&, const Filtration& f) const {
  const Frame frame = frame_of(f);
  const auto g = frame.weights_of(f);
  Matrix m = Matrix::identity(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (g[i] > g[j]) m(i, j) = s.rational(-2, 2, 2);
    }
  }
  return conjugate(frame.basis(), m);
}

Matrix TitsInstance::sample_non_unipotent(Sampler&, const Filtration&, const Filtration& f) const {
  const Frame frame = frame_of(f);
  return conjugate(frame.basis(), permutation_matrix(extreme_swap(frame.weights_of(f))));
}

std::vector<Rational> TitsInstance::a6_times(const Filtration& x, const Filtration& f, const Matrix& u) const {
  const Frame frame = common_frame(x, f);
  const auto a = frame.weights_of(x);
  const auto g = frame.weights_of(f);
  const Matrix b = frame.basis();
  const Matrix uc = b.inverse() * u * b;
  Rational threshold = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || uc(i, j) == 0 || !(g[i] > g[j])) continue;
      threshold = std::max(threshold, Rational(floor((a[j] - a[i]) / (g[i] - g[j])) + 1));
    }
  }
  return {threshold, threshold + 1};
}

std::vector<Rational> TitsInstance::a6_distance(const Filtration& x, const Filtration& f, const Matrix& u,
                                                const Rational& t) const {
  return distance(plus(x, f, t), plus(act(u, x), f, t));
}

std::vector<Matrix> TitsInstance::stabilizer_generators(Sampler& s, const Filtration& x) const {
  const Frame frame = frame_of(x);
  const auto g = frame.weights_of(x);
  const Matrix b = frame.basis();
  std::vector<Matrix> gens;
  Vector torus;
  for (std::size_t i = 0; i < n_; ++i) {
    Rational d = 0;
    while (d == 0) d = s.rational(-3, 3, 2);
    torus.push_back(d);
  }
  gens.push_back(conjugate(b, Matrix::diagonal(torus)));
  for (int k = 0; k < 3; ++k) {
    const auto i = static_cast<std::size_t>(s.integer(0, static_cast<long>(n_) - 1));
    const auto j = static_cast<std::size_t>(s.integer(0, static_cast<long>(n_) - 1));
    if (i == j || g[i] < g[j]) continue;
    Matrix m = Matrix::identity(n_);
    m(i, j) = s.rational(-2, 2, 2);
    gens.push_back(conjugate(b, m));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Norm building over (Q, v_p)

ValnormInstance::ValnormInstance(std::size_t n, unsigned long p) : n_(n), p_(p) {
  if (n < 2) throw DomainError("valnorm instance needs n >= 2");
  if (!is_prime(p)) throw DomainError("valnorm instance needs a prime p");
}

std::string ValnormInstance::name() const {
  return "valnorm(n=" + std::to_string(n_) + ",p=" + std::to_string(p_) + ")";
}

SplitNorm ValnormInstance::sample_point(Sampler& s) const {
  Matrix basis = s.invertible_matrix(n_, 3);
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < n_; ++i) weights.push_back(s.rational(-2, 2, 2));
  return SplitNorm(p_, std::move(basis), std::move(weights));
}

Filtration ValnormInstance::sample_filtration(Sampler& s) const { return sample_nontrivial(s, n_, 2); }

std::optional<Matrix> ValnormInstance::common_apartment(const SplitNorm& x, const SplitNorm& y) const {
  return adapt_norms(x, y).basis;
}

std::optional<Matrix> ValnormInstance::apartment_for(const SplitNorm& x, const Filtration& f) const {
  return adapt_to_filtration(x, f).basis;
}

bool ValnormInstance::contains_point(const Matrix& a, const SplitNorm& x) const { return is_adapted(x, a); }

bool ValnormInstance::contains_filtration(const Matrix& a, const Filtration& f) const {
  return Frame::from_vectors(a.columns()).splits(f);
}

Matrix ValnormInstance::coordinate_apartment() const { return Matrix::identity(n_); }

SplitNorm ValnormInstance::act(const Matrix& g, const SplitNorm& x) const { return bruhat::act(g, x); }

SplitNorm ValnormInstance::plus(const SplitNorm& x, const Filtration& f, const Rational& t) const {
  return add_fil_norm(x, scale(f, t));
}

std::vector<Rational> ValnormInstance::distance(const SplitNorm& x, const SplitNorm& y) const {
  return cartan(y, x).values();
}

std::vector<Rational> ValnormInstance::type_of(const Filtration& f) const { return f.type().values(); }

SplitNorm ValnormInstance::opposite(const SplitNorm& x) const {
  std::vector<Rational> w;
  for (const auto& c : x.weights()) w.push_back(-c);
  return SplitNorm(p_, x.basis(), std::move(w));
}

Matrix ValnormInstance::sample_unipotent(Sampler& s, const SplitNorm&, const Filtration& f) const {
  const Frame frame = frame_of(f);
  const auto g = frame.weights_of(f);
  Matrix m = Matrix::identity(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (g[i] > g[j] && s.coin()) m(i, j) = s.rational(-2, 2, 1) * p_power(p_, s.integer(-2, 2));
    }
  }
  return conjugate(frame.basis(), m);
}

Matrix ValnormInstance::sample_non_unipotent(Sampler&, const SplitNorm&, const Filtration& f) const {
  const Frame frame = frame_of(f);
  return conjugate(frame.basis(), permutation_matrix(extreme_swap(frame.weights_of(f))));
}

std::vector<Rational> ValnormInstance::a6_times(const SplitNorm& x, const Filtration& f, const Matrix& u) const {
  const auto adapted = adapt_to_filtration(x, f);
  const auto& a = adapted.norm_weights;
  const auto& g = adapted.fil_weights;
  const Matrix uc = adapted.basis.inverse() * u * adapted.basis;
  const ValuedField k(p_);
  Rational threshold = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j || uc(i, j) == 0 || !(g[i] > g[j])) continue;
      const Rational bound = (a[j] - a[i] - *k.v(uc(i, j))) / (g[i] - g[j]);
      threshold = std::max(threshold, Rational(floor(bound) + 1));
    }
  }
  return {threshold, threshold + 1};
}

std::vector<Rational> ValnormInstance::a6_distance(const SplitNorm& x, const Filtration& f, const Matrix& u,
                                                   const Rational& t) const {
  return distance(plus(x, f, t), plus(act(u, x), f, t));
}

std::vector<Matrix> ValnormInstance::stabilizer_generators(Sampler& s, const SplitNorm& x) const {
  const Matrix& b = x.basis();
  const auto& c = x.weights();
  const Rational p(static_cast<long>(p_));
  const std::vector<Rational> units{1, -1, 1 + p, 1 / (1 + p), -(1 + p)};
  const auto unit = [&] { return units[static_cast<std::size_t>(s.integer(0, 4))]; };

  std::vector<Matrix> gens;
  Vector diag;
  for (std::size_t i = 0; i < n_; ++i) diag.push_back(unit());
  gens.push_back(conjugate(b, Matrix::diagonal(diag)));
  for (int k = 0; k < 3; ++k) {
    const auto i = static_cast<std::size_t>(s.integer(0, static_cast<long>(n_) - 1));
    const auto j = static_cast<std::size_t>(s.integer(0, static_cast<long>(n_) - 1));
    if (i == j) continue;
    Matrix m = Matrix::identity(n_);
    m(i, j) = p_power(p_, ceil(c[j] - c[i]).get_si() + s.integer(0, 1)) * unit();
    gens.push_back(conjugate(b, m));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (c[i] != c[j]) continue;
      std::vector<std::size_t> perm(n_);
      for (std::size_t k = 0; k < n_; ++k) perm[k] = k;
      std::swap(perm[i], perm[j]);
      gens.push_back(conjugate(b, permutation_matrix(perm)));
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Symmetric space of GL_n(R)

namespace {

RealMatrix random_real(Sampler& s, Eigen::Index n, double lo, double hi) {
  RealMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = s.real(lo, hi);
  }
  return m;
}

RealMatrix real_conjugate(const RealMatrix& s, const RealMatrix& m) { return s * m * s.inverse(); }

RealMatrix real_permutation(const std::vector<std::size_t>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  RealMatrix m = RealMatrix::Zero(n, n);
  for (std::size_t j = 0; j < perm.size(); ++j) m(static_cast<Eigen::Index>(perm[j]), static_cast<Eigen::Index>(j)) = 1;
  return m;
}

// Orthonormal basis of span{b_k : w_k >= g}.
RealMatrix step_basis(const RealFiltration& f, double g) {
  std::vector<Eigen::Index> cols;
  for (std::size_t k = 0; k < f.weights.size(); ++k) {
    if (f.weights[k] >= g) cols.push_back(static_cast<Eigen::Index>(k));
  }
  const RealMatrix m = f.basis(Eigen::all, cols);
  Eigen::HouseholderQR<RealMatrix> qr(m);
  return qr.householderQ() * RealMatrix::Identity(m.rows(), m.cols());
}

}  // namespace

SymspaceInstance::SymspaceInstance(std::size_t n, double tolerance) : n_(n), tolerance_(tolerance) {
  if (n < 2) throw DomainError("symspace instance needs n >= 2");
  if (!(tolerance >= 0)) throw DomainError("tolerance must be non-negative");
}

std::string SymspaceInstance::name() const { return "symspace(n=" + std::to_string(n_) + ")"; }

EuclideanNorm SymspaceInstance::sample_point(Sampler& s) const {
  const auto n = static_cast<Eigen::Index>(n_);
  const RealMatrix a = random_real(s, n, -1, 1);
  return EuclideanNorm(a.transpose() * a + 0.5 * RealMatrix::Identity(n, n));
}

RealFiltration SymspaceInstance::sample_filtration(Sampler& s) const {
  const auto n = static_cast<Eigen::Index>(n_);
  while (true) {
    const RealMatrix b = RealMatrix::Identity(n, n) + random_real(s, n, -0.5, 0.5);
    std::vector<double> w;
    for (std::size_t i = 0; i < n_; ++i) w.push_back(static_cast<double>(s.integer(-2, 2)));
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    Eigen::JacobiSVD<RealMatrix> svd(b);
    const auto& sv = svd.singularValues();
    if (*lo == *hi || sv(n - 1) * 1e3 < sv(0)) continue;
    return RealFiltration(b, std::move(w));
  }
}

std::optional<RealMatrix> SymspaceInstance::common_apartment(const EuclideanNorm& x, const EuclideanNorm& y) const {
  return bruhat::common_apartment(x, y);
}

std::optional<RealMatrix> SymspaceInstance::apartment_for(const EuclideanNorm& x, const RealFiltration& f) const {
  return orthogonal_splitting(x, f).basis;
}

bool SymspaceInstance::contains_point(const RealMatrix& a, const EuclideanNorm& x) const {
  const RealMatrix m = a.transpose() * x.gram() * a;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > 1e-8 * std::sqrt(m(i, i) * m(j, j))) return false;
    }
  }
  return true;
}

bool SymspaceInstance::contains_filtration(const RealMatrix& a, const RealFiltration& f) const {
  for (double g : f.weights) {
    const RealMatrix q = step_basis(f, g);
    Eigen::Index inside = 0;
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const RealVector v = a.col(k);
      if ((v - q * (q.transpose() * v)).norm() <= 1e-8 * v.norm()) ++inside;
    }
    if (inside != q.cols()) return false;
  }
  return true;
}

RealMatrix SymspaceInstance::coordinate_apartment() const {
  const auto n = static_cast<Eigen::Index>(n_);
  return RealMatrix::Identity(n, n);
}

EuclideanNorm SymspaceInstance::act(const RealMatrix& g, const EuclideanNorm& x) const { return bruhat::act(g, x); }

EuclideanNorm SymspaceInstance::plus(const EuclideanNorm& x, const RealFiltration& f, const double& t) const {
  return add_fil_spd(x, f.scaled(t));
}

std::vector<double> SymspaceInstance::distance(const EuclideanNorm& x, const EuclideanNorm& y) const {
  return fischer_courant(x, y);
}

std::vector<double> SymspaceInstance::type_of(const RealFiltration& f) const { return f.type(); }

EuclideanNorm SymspaceInstance::opposite(const EuclideanNorm& x) const { return EuclideanNorm(x.gram().inverse()); }

RealMatrix SymspaceInstance::sample_unipotent(Sampler& s, const EuclideanNorm&, const RealFiltration& f) const {
  const auto n = static_cast<Eigen::Index>(n_);
  RealMatrix m = RealMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (f.weights[static_cast<std::size_t>(i)] > f.weights[static_cast<std::size_t>(j)]) m(i, j) = s.real(-1, 1);
    }
  }
  return real_conjugate(f.basis, m);
}

RealMatrix SymspaceInstance::sample_non_unipotent(Sampler&, const EuclideanNorm&, const RealFiltration& f) const {
  std::vector<Rational> w;
  for (double x : f.weights) w.push_back(Rational(x));
  return real_conjugate(f.basis, real_permutation(extreme_swap(w)));
}

std::vector<double> SymspaceInstance::a6_times(const EuclideanNorm&, const RealFiltration&, const RealMatrix&) const {
  return {20.0, 30.0};
}

std::vector<double> SymspaceInstance::a6_distance(const EuclideanNorm& x, const RealFiltration& f,
                                                  const RealMatrix& u, const double& t) const {
  const RealFiltration split = orthogonal_splitting(x, f);
  const auto n = static_cast<Eigen::Index>(n_);
  RealVector d(n);
  RealVector d_inv(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    d(k) = std::exp(-t * split.weights[static_cast<std::size_t>(k)]);
    d_inv(k) = 1 / d(k);
  }
  RealMatrix conj = split.basis.inverse() * u * split.basis;
  // Entries below the diagonal blocks vanish for a unipotent u; round-off
  // there would be blown up by e^{t * gap}, so flush it before scaling.
  const double noise = 1e-10 * conj.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (split.weights[static_cast<std::size_t>(i)] < split.weights[static_cast<std::size_t>(j)] &&
          std::abs(conj(i, j)) <= noise) {
        conj(i, j) = 0;
      }
    }
  }
  const RealMatrix moved = d.asDiagonal() * conj * d_inv.asDiagonal();
  // d(1, M.1) is the vector of log singular values of M; this stays finite
  // where forming the Gram matrix of M.1 would not.
  Eigen::JacobiSVD<RealMatrix> svd(moved);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < n; ++k) out.push_back(std::log(svd.singularValues()(k)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RealMatrix> SymspaceInstance::stabilizer_generators(Sampler& s, const EuclideanNorm& x) const {
  const auto n = static_cast<Eigen::Index>(n_);
  // Columns of L^-T are orthonormal for x.
  const RealMatrix b = Eigen::LLT<RealMatrix>(x.gram()).matrixL().transpose().solve(RealMatrix::Identity(n, n));
  std::vector<RealMatrix> gens;
  RealVector signs(n);
  for (Eigen::Index i = 0; i < n; ++i) signs(i) = s.coin() ? 1.0 : -1.0;
  gens.push_back(real_conjugate(b, signs.asDiagonal().toDenseMatrix()));
  std::vector<std::size_t> perm(n_);
  for (std::size_t k = 0; k < n_; ++k) perm[k] = k;
  std::swap(perm[static_cast<std::size_t>(s.integer(0, n - 1))], perm[static_cast<std::size_t>(s.integer(0, n - 1))]);
  gens.push_back(real_conjugate(b, real_permutation(perm)));
  return gens;
}

// ---------------------------------------------------------------------------

namespace {

template <class Instance>
std::vector<AxiomReport> with_control(const Instance& inst, const std::string& control, std::size_t trials,
                                      std::uint64_t seed) {
  if (control.empty()) return run_suite(inst, trials, seed);
  if (control == "crippled") return run_suite(CrippledApartments<Instance>(inst), trials, seed);
  if (control == "corrupted") return run_suite(CorruptedDistance<Instance>(inst), trials, seed);
  if (control == "non-unipotent") return run_suite(NonUnipotent<Instance>(inst), trials, seed);
  throw DomainError("unknown negative control: " + control);
}

}  // namespace

std::vector<AxiomReport> run_named_suite(const std::string& instance, const std::string& control, std::size_t n,
                                         unsigned long p, std::size_t trials, std::uint64_t seed,
                                         std::optional<double> tolerance) {
  if (instance == "tits") return with_control(TitsInstance(n), control, trials, seed);
  if (instance == "valnorm") return with_control(ValnormInstance(n, p), control, trials, seed);
  if (instance == "symspace") return with_control(SymspaceInstance(n, tolerance.value_or(1e-8)), control, trials, seed);
  throw DomainError("unknown instance: " + instance);
}

}  // namespace bruhat
