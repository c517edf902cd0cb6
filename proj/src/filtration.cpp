#include "bruhat/filtration.hpp"

#include <set>

namespace bruhat {

TypeVector::TypeVector(std::vector<Rational> values) : values_(std::move(values)) {
  if (!std::is_sorted(values_.begin(), values_.end())) throw DomainError("type vector must be nondecreasing");
}

TypeVector TypeVector::sorted(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  return TypeVector(std::move(values));
}

namespace {

std::vector<std::pair<Rational, Subspace>> samples_at(const std::set<Rational>& weights,
                                                      const auto& value_at) {
  std::vector<std::pair<Rational, Subspace>> samples;
  for (const auto& w : weights) samples.emplace_back(w, value_at(w));
  return samples;
}

}  // namespace

Graduation split(const Filtration& f) {
  std::vector<Piece> pieces;
  const auto& steps = f.steps();
  for (std::size_t i = steps.size(); i-- > 0;) {
    const Subspace next = i + 1 < steps.size() ? steps[i + 1].space : Subspace::zero(f.dim());
    pieces.push_back({steps[i].weight, complement_in(next, steps[i].space)});
  }
  return Graduation(f.dim(), std::move(pieces));
}

Filtration tensor(const Filtration& f1, const Filtration& f2) {
  const std::size_t n = f1.dim() * f2.dim();
  if (n == 0) return Filtration(0, {});
  std::set<Rational> candidates;
  for (const auto& a : f1.steps()) {
    for (const auto& b : f2.steps()) candidates.insert(a.weight + b.weight);
  }
  return Filtration::from_samples(n, samples_at(candidates, [&](const Rational& g) {
                                    auto acc = Subspace::zero(n);
                                    for (const auto& a : f1.steps()) {
                                      acc = sum(acc, tensor_product(a.space, f2.eval(g - a.weight)));
                                    }
                                    return acc;
                                  }));
}

Filtration dual(const Filtration& f) {
  std::set<Rational> candidates;
  for (const auto& s : f.steps()) candidates.insert(-s.weight);
  return Filtration::from_samples(
      f.dim(), samples_at(candidates, [&](const Rational& g) { return annihilator(f.eval_above(-g)); }));
}

Filtration hom(const Filtration& f1, const Filtration& f2) { return tensor(f2, dual(f1)); }

InducedPair induced(const Filtration& f, const Subspace& w) {
  if (w.ambient_dim() != f.dim()) throw DomainError("induced: ambient mismatch");
  std::set<Rational> candidates;
  for (const auto& s : f.steps()) candidates.insert(s.weight);
  const std::size_t k = w.dim();
  const std::size_t q = f.dim() - k;

  Filtration sub(0, {});
  if (k > 0) {
    sub = Filtration::from_samples(k, samples_at(candidates, [&](const Rational& g) {
                                     std::vector<Vector> coords;
                                     const Subspace meet = intersect(f.eval(g), w);
                                     for (const auto& v : meet.basis()) {
                                       coords.push_back(w.coordinates(v));
                                     }
                                     return Subspace::span(std::move(coords), k);
                                   }));
  }
  Filtration quotient(0, {});
  if (q > 0) {
    quotient = Filtration::from_samples(
        q, samples_at(candidates, [&](const Rational& g) { return quotient_image(f.eval(g), w); }));
  }
  return {std::move(sub), std::move(quotient)};
}

Filtration direct_sum(const Filtration& f1, const Filtration& f2) {
  const std::size_t n = f1.dim() + f2.dim();
  if (n == 0) return Filtration(0, {});
  std::set<Rational> candidates;
  for (const auto& s : f1.steps()) candidates.insert(s.weight);
  for (const auto& s : f2.steps()) candidates.insert(s.weight);
  return Filtration::from_samples(
      n, samples_at(candidates, [&](const Rational& g) { return direct_sum(f1.eval(g), f2.eval(g)); }));
}

Filtration act(const Matrix& g, const Filtration& f) {
  if (g.rows() != f.dim() || !g.is_invertible()) throw DomainError("act: need an invertible matrix of matching size");
  std::vector<Step> steps;
  for (const auto& s : f.steps()) steps.push_back({s.weight, transform(g, s.space)});
  return Filtration(f.dim(), std::move(steps));
}

Filtration scale(const Filtration& f, const Rational& t) {
  if (t < 0) throw DomainError("scale: negative factor");
  if (t == 0) return Filtration::trivial(f.dim());
  std::vector<Step> steps;
  for (const auto& s : f.steps()) steps.push_back({s.weight * t, s.space});
  return Filtration(f.dim(), std::move(steps));
}

ResidueFiltration reduce_mod_p(const Filtration& f, const PrimeField& field) {
  std::vector<BasicStep<PrimeField>> steps;
  for (const auto& s : f.steps()) steps.push_back({s.weight, reduce_mod_p(s.space, field)});
  return ResidueFiltration(f.dim(), std::move(steps), field);
}

}  // namespace bruhat
