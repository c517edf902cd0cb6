#include "bruhat/sampling.hpp"

#include <map>

namespace bruhat {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long Sampler::integer(long lo, long hi) {
  if (hi < lo) throw DomainError("Sampler::integer: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

double Sampler::real(double lo, double hi) {
  const double unit = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

Rational Sampler::rational(long lo, long hi, long den) {
  Rational q(Integer(integer(lo * den, hi * den)), Integer(den));
  q.canonicalize();
  return q;
}

Matrix Sampler::invertible_matrix(std::size_t n, long bound) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(-bound, bound);
    }
    if (m.is_invertible()) return m;
  }
}

Filtration Sampler::filtration(std::size_t n, long weight_bound, long den) {
  return filtration_on(invertible_matrix(n), weight_bound, den);
}

Filtration Sampler::filtration_on(const Matrix& basis, long weight_bound, long den) {
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < basis.cols(); ++k) weights.push_back(rational(-weight_bound, weight_bound, den));
  return frame_filtration(basis, weights);
}

Filtration frame_filtration(const Matrix& basis, const std::vector<Rational>& weights) {
  const std::size_t n = basis.rows();
  if (basis.cols() != weights.size()) throw DomainError("frame_filtration: one weight per column required");
  std::map<Rational, std::vector<Vector>> groups;
  for (std::size_t k = 0; k < weights.size(); ++k) groups[weights[k]].push_back(basis.column(k));
  std::vector<Piece> pieces;
  for (auto& [w, vs] : groups) pieces.push_back({w, Subspace::span(std::move(vs), n)});
  return fil_from_grading(Graduation(n, std::move(pieces)));
}

}  // namespace bruhat
