#pragma once

// Small builders shared by the unit tests.

#include <initializer_list>
#include <string>
#include <vector>

#include "bruhat/filtration.hpp"
#include "bruhat/sampling.hpp"

namespace support {

using namespace bruhat;

inline Rational q(const char* text) { return parse_rational(text); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline Subspace sub(std::vector<Vector> rows, std::size_t n) { return Subspace::span(std::move(rows), n); }

inline std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline TypeVector type(std::initializer_list<const char*> xs) { return TypeVector(rats(xs)); }

/// Filtration given by (weight, step space) pairs, lowest weight first.
inline Filtration fil(std::size_t n, std::vector<std::pair<const char*, std::vector<Vector>>> steps) {
  std::vector<Step> out;
  for (auto& [w, rows] : steps) out.push_back({parse_rational(w), sub(std::move(rows), n)});
  return Filtration(n, std::move(out));
}

/// The two-step filtration on Q^n: weight 0 on V, weight `w` on `rows`.
inline Filtration jump(std::size_t n, std::vector<Vector> rows, const char* w = "1") {
  return Filtration(n, {{0, Subspace::full(n)}, {parse_rational(w), sub(std::move(rows), n)}});
}

/// Filtration split by the standard basis with the given weights.
inline Filtration diagonal(std::initializer_list<const char*> weights) {
  return frame_filtration(Matrix::identity(weights.size()), rats(weights));
}

/// Seed for trial `i` of a property test.
inline Sampler sampler(std::uint64_t test_seed, std::uint64_t i) { return Sampler(derive_seed(test_seed, i)); }

}  // namespace support
