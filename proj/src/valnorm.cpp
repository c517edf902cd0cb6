#include "bruhat/valnorm.hpp"

#include <algorithm>
#include <set>

namespace bruhat {

namespace {

void check_compatible(const SplitNorm& a, const SplitNorm& b, const char* what) {
  if (a.p() != b.p()) throw DomainError(std::string(what) + ": norms over different primes");
  if (a.dim() != b.dim()) throw DomainError(std::string(what) + ": dimension mismatch");
}

// v(x) + shift for nonzero x.
Rational twisted(const ValuedField& k, const Rational& x, const Rational& shift) {
  return Rational(*k.v(x)) + shift;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

}  // namespace

ValuedField::ValuedField(unsigned long p) : p_(p) {
  if (!is_prime(p)) throw DomainError("valuation needs a prime, got " + std::to_string(p));
}

SplitNorm::SplitNorm(unsigned long p, Matrix basis, std::vector<Rational> weights)
    : p_(p), basis_(std::move(basis)), weights_(std::move(weights)) {
  if (!is_prime(p)) throw DomainError("split norm: p must be prime");
  if (basis_.rows() != basis_.cols() || basis_.cols() != weights_.size()) {
    throw DomainError("split norm: need a square basis with one weight per column");
  }
  if (weights_.empty()) throw DomainError("split norm: zero-dimensional space");
  inverse_ = basis_.inverse();
}

SplitNorm SplitNorm::lattice(unsigned long p, Matrix basis) {
  const std::size_t n = basis.cols();
  return SplitNorm(p, std::move(basis), std::vector<Rational>(n, Rational(0)));
}

SplitNorm SplitNorm::standard(unsigned long p, std::size_t n) { return lattice(p, Matrix::identity(n)); }

bool SplitNorm::is_lattice() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 0; });
}

NormValue eval_nu(const SplitNorm& a, const Vector& v) {
  const ValuedField k(a.p());
  const Vector x = a.basis_inverse().apply(v);
  NormValue best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Rational value = twisted(k, x[i], a.weights()[i]);
    if (!best || value < *best) best = value;
  }
  return best;
}

bool is_adapted(const SplitNorm& a, const Matrix& basis) {
  if (basis.rows() != a.dim() || !basis.is_invertible()) return false;
  std::vector<Rational> weights;
  for (const auto& b : basis.columns()) weights.push_back(*eval_nu(a, b));
  const SplitNorm candidate(a.p(), basis, std::move(weights));
  for (std::size_t j = 0; j < a.dim(); ++j) {
    if (*eval_nu(candidate, a.basis().column(j)) < a.weights()[j]) return false;
  }
  return true;
}

// Forward-only valuated elimination. Rows are the splitting vectors of F in
// alpha-coordinates, highest weight first; each row pivots where v(x) + c is
// smallest and that column is cleared from the later rows only. The rows end
// up triangular with unit-valuation diagonal after twisting, hence adapted,
// and subtracting earlier rows keeps every vector inside its step of F.
AdaptedToFiltration adapt_to_filtration(const SplitNorm& a, const Filtration& f) {
  const std::size_t n = a.dim();
  if (f.dim() != n) throw DomainError("adapt_to_filtration: dimension mismatch");
  const ValuedField k(a.p());

  std::vector<Vector> rows;
  std::vector<Rational> fil_weights;
  const Graduation grading = split(f);
  const auto& pieces = grading.pieces();
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    for (const auto& v : it->space.basis()) {
      rows.push_back(a.basis_inverse().apply(v));
      fil_weights.push_back(it->weight);
    }
  }

  std::vector<Rational> norm_weights;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pivot = n;
    Rational best;
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[r][j] == 0) continue;
      const Rational value = twisted(k, rows[r][j], a.weights()[j]);
      if (pivot == n || value < best) {
        pivot = j;
        best = value;
      }
    }
    norm_weights.push_back(best);
    for (std::size_t later = r + 1; later < n; ++later) {
      if (rows[later][pivot] == 0) continue;
      const Rational factor = rows[later][pivot] / rows[r][pivot];
      for (std::size_t j = 0; j < n; ++j) rows[later][j] -= factor * rows[r][j];
    }
  }

  std::vector<Vector> columns;
  for (const auto& x : rows) columns.push_back(a.basis().apply(x));
  return {Matrix::from_columns(columns), std::move(norm_weights), std::move(fil_weights)};
}

CommonBasis adapt_norms(const SplitNorm& a, const SplitNorm& b) {
  check_compatible(a, b, "adapt_norms");
  const std::size_t n = a.dim();
  const ValuedField k(a.p());
  Matrix m = a.basis_inverse() * b.basis();
  Matrix common = b.basis();
  std::vector<bool> row_done(n, false);
  std::vector<bool> col_done(n, false);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pi = n;
    std::size_t pj = n;
    Rational best;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (col_done[j] || m(i, j) == 0) continue;
        const Rational value = twisted(k, m(i, j), a.weights()[i] - b.weights()[j]);
        if (pi == n || value < best) {
          pi = i;
          pj = j;
          best = value;
        }
      }
    }
    if (pi == n) throw DomainError("adapt_norms: change of basis is singular");

    // Column operations change the beta-basis: b_j -= mu b_pj.
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pj || col_done[j] || m(pi, j) == 0) continue;
      const Rational mu = m(pi, j) / m(pi, pj);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, j) -= mu * m(i, pj);
        common(i, j) -= mu * common(i, pj);
      }
    }
    // Row operations change the alpha-basis and only touch column pj now.
    for (std::size_t i = 0; i < n; ++i) {
      if (i != pi && !row_done[i]) m(i, pj) = 0;
    }
    row_done[pi] = true;
    col_done[pj] = true;
  }

  CommonBasis out{common, {}, {}};
  for (const auto& e : common.columns()) {
    out.alpha_weights.push_back(*eval_nu(a, e));
    out.beta_weights.push_back(*eval_nu(b, e));
  }
  return out;
}

SplitNorm add_fil_norm(const SplitNorm& a, const Filtration& f) {
  auto adapted = adapt_to_filtration(a, f);
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < a.dim(); ++i) weights.push_back(adapted.norm_weights[i] + adapted.fil_weights[i]);
  return SplitNorm(a.p(), std::move(adapted.basis), std::move(weights));
}

SplitNorm act(const Matrix& g, const SplitNorm& a) {
  if (g.rows() != a.dim() || !g.is_invertible()) throw DomainError("act: need an invertible matrix of matching size");
  return SplitNorm(a.p(), g * a.basis(), a.weights());
}

bool fixes(const Matrix& g, const SplitNorm& a) { return norms_equal(act(g, a), a); }

TypeVector cartan(const SplitNorm& a, const SplitNorm& b) {
  const auto common = adapt_norms(a, b);
  std::vector<Rational> d;
  for (std::size_t i = 0; i < a.dim(); ++i) d.push_back(common.alpha_weights[i] - common.beta_weights[i]);
  return TypeVector::sorted(std::move(d));
}

Rational central_component(const SplitNorm& a, const SplitNorm& b) {
  Rational total = 0;
  const TypeVector c = cartan(a, b);
  for (const auto& x : c.values()) total += x;
  return total / static_cast<long>(a.dim());
}

bool norms_equal(const SplitNorm& a, const SplitNorm& b) {
  if (a.p() != b.p() || a.dim() != b.dim()) return false;
  const auto d = cartan(a, b);
  return std::all_of(d.values().begin(), d.values().end(), [](const Rational& x) { return x == 0; });
}

SplitNorm dual_norm(const SplitNorm& a) {
  std::vector<Rational> weights;
  for (const auto& w : a.weights()) weights.push_back(-w);
  return SplitNorm(a.p(), a.basis_inverse().transpose(), std::move(weights));
}

SplitNorm hom_norm(const SplitNorm& a1, const SplitNorm& a2) {
  if (a1.p() != a2.p()) throw DomainError("hom_norm: norms over different primes");
  const std::size_t n1 = a1.dim();
  const std::size_t n2 = a2.dim();
  std::vector<Vector> columns;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < n2; ++i) {
    const Vector target = a2.basis().column(i);
    for (std::size_t j = 0; j < n1; ++j) {
      const Vector functional = a1.basis_inverse().row(j);
      Vector e(n1 * n2);
      for (std::size_t r = 0; r < n2; ++r) {
        for (std::size_t c = 0; c < n1; ++c) e[r * n1 + c] = target[r] * functional[c];
      }
      columns.push_back(std::move(e));
      weights.push_back(a2.weights()[i] - a1.weights()[j]);
    }
  }
  return SplitNorm(a1.p(), Matrix::from_columns(columns), std::move(weights));
}

SplitNorm tensor_norm(const SplitNorm& a1, const SplitNorm& a2) {
  if (a1.p() != a2.p()) throw DomainError("tensor_norm: norms over different primes");
  std::vector<Rational> weights;
  for (const auto& x : a1.weights()) {
    for (const auto& y : a2.weights()) weights.push_back(x + y);
  }
  return SplitNorm(a1.p(), kronecker(a1.basis(), a2.basis()), std::move(weights));
}

std::vector<Vector> moy_prasad(const SplitNorm& a_end, const Rational& r) {
  const Rational p(static_cast<long>(a_end.p()));
  std::vector<Vector> generators;
  for (std::size_t k = 0; k < a_end.dim(); ++k) {
    const Rational scale = power(p, ceil(r - a_end.weights()[k]).get_si());
    Vector v = a_end.basis().column(k);
    for (auto& x : v) x *= scale;
    generators.push_back(std::move(v));
  }
  return generators;
}

bool in_ball(const SplitNorm& a, const Vector& v, const Rational& r) {
  const auto nu = eval_nu(a, v);
  return !nu || *nu >= r;
}

ResidueFiltration loc(const SplitNorm& a, const SplitNorm& lattice_point) {
  if (!lattice_point.is_lattice()) throw DomainError("loc: second argument must be a lattice point");
  check_compatible(a, lattice_point, "loc");
  const std::size_t n = a.dim();
  const PrimeField field(a.p());
  const Rational p(static_cast<long>(a.p()));
  const auto common = adapt_norms(a, lattice_point);

  // Rescale the common basis to an O-basis of M and record alpha-weights.
  std::vector<ResidueSubspace::Vec> reduced;
  std::vector<Rational> gammas;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& s = common.beta_weights[k];
    if (s.get_den() != 1) throw DomainError("loc: lattice norm with non-integral value");
    const Rational scale = power(p, -s.get_num().get_si());
    Vector e = common.basis.column(k);
    for (auto& x : e) x *= scale;
    ResidueSubspace::Vec r;
    for (const auto& x : lattice_point.basis_inverse().apply(e)) r.push_back(field.reduce(x));
    reduced.push_back(std::move(r));
    gammas.push_back(common.alpha_weights[k] - s);
  }

  const std::set<Rational> candidates(gammas.begin(), gammas.end());
  std::vector<std::pair<Rational, ResidueSubspace>> samples;
  for (const auto& g : candidates) {
    std::vector<ResidueSubspace::Vec> rows;
    for (std::size_t k = 0; k < n; ++k) {
      if (gammas[k] >= g) rows.push_back(reduced[k]);
    }
    samples.emplace_back(g, ResidueSubspace::span(std::move(rows), n, field));
  }
  return ResidueFiltration::from_samples(n, std::move(samples), field);
}

}  // namespace bruhat
