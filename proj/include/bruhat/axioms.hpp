#pragma once

// Sampled checks of the affine building axioms and the metric properties.
//
// An instance supplies points, filtrations, the group action, x + tF, the
// vector distance d(x, y) (ascending, with d(x, x + F) = t(F)) and an
// apartment finder. The harness only talks to that contract, so the same
// checks run against the vectorial Tits building, the norm building over
// (Q, v_p) and the symmetric space of GL_n(R), and against deliberately
// broken wrappers of them.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/filtration.hpp"
#include "bruhat/sampling.hpp"
#include "bruhat/symspace.hpp"
#include "bruhat/tits.hpp"
#include "bruhat/valnorm.hpp"

namespace bruhat {

struct Failure {
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::string witness;
};

struct AxiomReport {
  std::string instance;
  std::string axiom;
  std::size_t trials = 0;
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

std::string report_json(const std::vector<AxiomReport>& reports);

std::string scalar_text(const Rational& x);
std::string scalar_text(double x);

// ---------------------------------------------------------------------------
// Instances

class TitsInstance {
 public:
  using Point = Filtration;
  using Fil = Filtration;
  using Group = Matrix;
  using Apartment = Frame;
  using Scalar = Rational;

  explicit TitsInstance(std::size_t n);
  std::string name() const;
  std::size_t dim() const { return n_; }

  Point sample_point(Sampler& s) const;
  Fil sample_filtration(Sampler& s) const;
  std::optional<Apartment> common_apartment(const Point& x, const Point& y) const;
  std::optional<Apartment> apartment_for(const Point& x, const Fil& f) const;
  bool contains_point(const Apartment& a, const Point& x) const;
  bool contains_filtration(const Apartment& a, const Fil& f) const;
  Apartment coordinate_apartment() const;

  Point act(const Group& g, const Point& x) const;
  Point plus(const Point& x, const Fil& f, const Scalar& t) const;
  std::vector<Scalar> distance(const Point& x, const Point& y) const;
  std::vector<Scalar> type_of(const Fil& f) const;
  Point opposite(const Point& x) const;

  Group sample_unipotent(Sampler& s, const Point& x, const Fil& f) const;
  Group sample_non_unipotent(Sampler& s, const Point& x, const Fil& f) const;
  /// T and T + 1 where T exceeds every (a_j - a_i) / (g_i - g_j) over the
  /// nonzero off-diagonal entries of u in a common frame of x and F.
  std::vector<Scalar> a6_times(const Point& x, const Fil& f, const Group& u) const;
  std::vector<Scalar> a6_distance(const Point& x, const Fil& f, const Group& u, const Scalar& t) const;
  std::vector<Group> stabilizer_generators(Sampler& s, const Point& x) const;

  Scalar tolerance() const { return 0; }
  Scalar a6_limit() const { return 0; }

 private:
  std::size_t n_;
};

class ValnormInstance {
 public:
  using Point = SplitNorm;
  using Fil = Filtration;
  using Group = Matrix;
  using Apartment = Matrix;  // adapted basis, as columns
  using Scalar = Rational;

  ValnormInstance(std::size_t n, unsigned long p);
  std::string name() const;
  std::size_t dim() const { return n_; }

  Point sample_point(Sampler& s) const;
  Fil sample_filtration(Sampler& s) const;
  std::optional<Apartment> common_apartment(const Point& x, const Point& y) const;
  std::optional<Apartment> apartment_for(const Point& x, const Fil& f) const;
  bool contains_point(const Apartment& a, const Point& x) const;
  bool contains_filtration(const Apartment& a, const Fil& f) const;
  Apartment coordinate_apartment() const;

  Point act(const Group& g, const Point& x) const;
  Point plus(const Point& x, const Fil& f, const Scalar& t) const;
  /// cartan(y, x): the orientation with d(x, x + F) = t(F).
  std::vector<Scalar> distance(const Point& x, const Point& y) const;
  std::vector<Scalar> type_of(const Fil& f) const;
  Point opposite(const Point& x) const;

  Group sample_unipotent(Sampler& s, const Point& x, const Fil& f) const;
  Group sample_non_unipotent(Sampler& s, const Point& x, const Fil& f) const;
  /// T and T + 1 where T exceeds every (a_j - a_i - v(u_ij)) / (g_i - g_j)
  /// on a basis adapted to x and splitting F (the fixed-point criterion).
  std::vector<Scalar> a6_times(const Point& x, const Fil& f, const Group& u) const;
  std::vector<Scalar> a6_distance(const Point& x, const Fil& f, const Group& u, const Scalar& t) const;
  std::vector<Group> stabilizer_generators(Sampler& s, const Point& x) const;

  Scalar tolerance() const { return 0; }
  Scalar a6_limit() const { return 0; }

 private:
  std::size_t n_;
  unsigned long p_;
};

class SymspaceInstance {
 public:
  using Point = EuclideanNorm;
  using Fil = RealFiltration;
  using Group = RealMatrix;
  using Apartment = RealMatrix;
  using Scalar = double;

  explicit SymspaceInstance(std::size_t n, double tolerance = 1e-8);
  std::string name() const;
  std::size_t dim() const { return n_; }

  Point sample_point(Sampler& s) const;
  Fil sample_filtration(Sampler& s) const;
  std::optional<Apartment> common_apartment(const Point& x, const Point& y) const;
  std::optional<Apartment> apartment_for(const Point& x, const Fil& f) const;
  bool contains_point(const Apartment& a, const Point& x) const;
  bool contains_filtration(const Apartment& a, const Fil& f) const;
  Apartment coordinate_apartment() const;

  Point act(const Group& g, const Point& x) const;
  Point plus(const Point& x, const Fil& f, const Scalar& t) const;
  std::vector<Scalar> distance(const Point& x, const Point& y) const;
  std::vector<Scalar> type_of(const Fil& f) const;
  Point opposite(const Point& x) const;

  Group sample_unipotent(Sampler& s, const Point& x, const Fil& f) const;
  Group sample_non_unipotent(Sampler& s, const Point& x, const Fil& f) const;
  std::vector<Scalar> a6_times(const Point& x, const Fil& f, const Group& u) const;
  /// Evaluated after moving x + tF to the identity norm, where u becomes
  /// D u D^-1 with D = diag(e^{-t g_k}); the direct Gram matrices are far too
  /// ill-conditioned at large t.
  std::vector<Scalar> a6_distance(const Point& x, const Fil& f, const Group& u, const Scalar& t) const;
  std::vector<Group> stabilizer_generators(Sampler& s, const Point& x) const;

  Scalar tolerance() const { return tolerance_; }
  Scalar a6_limit() const { return 1e-6; }

 private:
  std::size_t n_;
  double tolerance_;
};

// ---------------------------------------------------------------------------
// Negative controls

/// Always offers the coordinate apartment.
template <class Base>
class CrippledApartments : public Base {
 public:
  explicit CrippledApartments(Base base) : Base(std::move(base)) {}
  std::string name() const { return Base::name() + "+crippled-apartments"; }
  std::optional<typename Base::Apartment> common_apartment(const typename Base::Point&,
                                                           const typename Base::Point&) const {
    return Base::coordinate_apartment();
  }
  std::optional<typename Base::Apartment> apartment_for(const typename Base::Point&,
                                                        const typename Base::Fil&) const {
    return Base::coordinate_apartment();
  }
};

/// d(x, y) replaced by d(x, iota y), iota the weight-negating opposition.
template <class Base>
class CorruptedDistance : public Base {
 public:
  explicit CorruptedDistance(Base base) : Base(std::move(base)) {}
  std::string name() const { return Base::name() + "+corrupted-distance"; }
  std::vector<typename Base::Scalar> distance(const typename Base::Point& x, const typename Base::Point& y) const {
    return Base::distance(x, Base::opposite(y));
  }
  std::vector<typename Base::Scalar> a6_distance(const typename Base::Point& x, const typename Base::Fil& f,
                                                 const typename Base::Group& u,
                                                 const typename Base::Scalar& t) const {
    return distance(Base::plus(x, f, t), Base::plus(Base::act(u, x), f, t));
  }
};

/// Hands a non-unipotent element (a line swap moving F) to the A6 check.
template <class Base>
class NonUnipotent : public Base {
 public:
  explicit NonUnipotent(Base base) : Base(std::move(base)) {}
  std::string name() const { return Base::name() + "+non-unipotent"; }
  typename Base::Group sample_unipotent(Sampler& s, const typename Base::Point& x,
                                        const typename Base::Fil& f) const {
    return Base::sample_non_unipotent(s, x, f);
  }
};

// ---------------------------------------------------------------------------
// Generic checks

namespace detail {

inline bool leq(const Rational& a, const Rational& b, const Rational& tol) { return a <= b + tol; }
inline bool leq(double a, double b, double tol) { return a <= b + tol; }
inline Rational magnitude(const Rational& x) { return abs(x); }
inline double magnitude(double x) { return std::abs(x); }

template <class S>
S squared_length(const std::vector<S>& d) {
  S total = 0;
  for (const auto& x : d) total += x * x;
  return total;
}

/// sqrt(a) <= sqrt(b) + sqrt(c) + tol, exactly for rationals.
inline bool root_triangle(const Rational& a, const Rational& b, const Rational& c, const Rational&) {
  const Rational e = a - b - c;
  return e <= 0 || e * e <= 4 * b * c;
}
inline bool root_triangle(double a, double b, double c, double tol) {
  return std::sqrt(a) <= std::sqrt(b) + std::sqrt(c) + tol;
}

template <class S>
std::vector<S> add(const std::vector<S>& x, const std::vector<S>& y) {
  std::vector<S> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return out;
}

template <class S>
std::vector<S> reverse_negate(std::vector<S> x) {
  std::reverse(x.begin(), x.end());
  for (auto& v : x) v = -v;
  return x;
}

/// Dominance order with tolerance: suffix sums bounded, totals equal.
template <class S>
bool dominated(const std::vector<S>& x, const std::vector<S>& y, const S& tol) {
  S sx = 0;
  S sy = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    sx += x[i];
    sy += y[i];
    if (!leq(sx, sy, tol)) return false;
  }
  return magnitude(sx - sy) <= tol;
}

template <class S>
bool close(const std::vector<S>& x, const std::vector<S>& y, const S& tol) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (magnitude(x[i] - y[i]) > tol) return false;
  }
  return true;
}

template <class S>
std::string text(const std::vector<S>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? ", " : "") + scalar_text(d[i]);
  return out + ")";
}

// Runs `body(sampler, fail)` once per trial; `fail(msg)` records a witness.
// Exceptions thrown by the instance are witnesses too.
template <class Body>
AxiomReport run_trials(std::string instance, std::string axiom, std::size_t trials, std::uint64_t seed,
                       Body&& body) {
  AxiomReport report{std::move(instance), std::move(axiom), trials, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, t);
    Sampler sampler(trial_seed);
    std::vector<std::string> witnesses;
    auto fail = [&](std::string msg) { witnesses.push_back(std::move(msg)); };
    try {
      body(sampler, fail);
    } catch (const std::exception& e) {
      witnesses.push_back(std::string("exception: ") + e.what());
    }
    for (auto& w : witnesses) report.failures.push_back({trial_seed, t, std::move(w)});
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const Failure& a, const Failure& b) { return a.seed < b.seed; });
  return report;
}

}  // namespace detail

/// A1: a common apartment for two points. A2: one for a point and a filtration.
template <class Instance>
AxiomReport check_A1_A2(const Instance& inst, std::size_t trials, std::uint64_t seed) {
  return detail::run_trials(inst.name(), "A1_A2", trials, seed, [&](Sampler& s, auto& fail) {
    const auto x = inst.sample_point(s);
    const auto y = inst.sample_point(s);
    const auto f = inst.sample_filtration(s);
    const auto ap = inst.common_apartment(x, y);
    if (!ap) {
      fail("A1: no common apartment found");
    } else if (!inst.contains_point(*ap, x) || !inst.contains_point(*ap, y)) {
      fail("A1: proposed apartment does not contain both points");
    }
    const auto ap2 = inst.apartment_for(x, f);
    if (!ap2) {
      fail("A2: no apartment found for the point and the filtration");
    } else if (!inst.contains_point(*ap2, x) || !inst.contains_filtration(*ap2, f)) {
      fail("A2: proposed apartment does not contain the point and the filtration");
    }
  });
}

/// Identity, symmetry, triangle inequality (l2 and dominance), A5 and
/// d(x, x + F) = t(F).
template <class Instance>
AxiomReport check_metric(const Instance& inst, std::size_t trials, std::uint64_t seed) {
  using S = typename Instance::Scalar;
  const S tol = inst.tolerance();
  return detail::run_trials(inst.name(), "metric", trials, seed, [&](Sampler& s, auto& fail) {
    using detail::text;
    const auto x = inst.sample_point(s);
    const auto y = inst.sample_point(s);
    const auto z = inst.sample_point(s);
    const auto f = inst.sample_filtration(s);

    const auto dxx = inst.distance(x, x);
    if (!detail::close(dxx, std::vector<S>(dxx.size(), S(0)), tol)) fail("identity: d(x, x) = " + text(dxx));

    const auto dxy = inst.distance(x, y);
    const auto dyx = inst.distance(y, x);
    if (!detail::close(dyx, detail::reverse_negate(dxy), tol)) {
      fail("symmetry: d(y, x) = " + text(dyx) + " is not the reversed negative of d(x, y) = " + text(dxy));
    }

    const auto dyz = inst.distance(y, z);
    const auto dxz = inst.distance(x, z);
    if (!detail::root_triangle(detail::squared_length(dxz), detail::squared_length(dxy),
                               detail::squared_length(dyz), tol)) {
      fail("triangle (l2): d(x, z) = " + text(dxz) + ", d(x, y) = " + text(dxy) + ", d(y, z) = " + text(dyz));
    }
    if (!detail::dominated(dxz, detail::add(dxy, dyz), tol)) {
      fail("triangle (dominance): d(x, z) = " + text(dxz) + " not below " + text(detail::add(dxy, dyz)));
    }

    const S one(1);
    const auto xf = inst.plus(x, f, one);
    const auto yf = inst.plus(y, f, one);
    const auto dshift = inst.distance(xf, yf);
    if (!detail::dominated(dshift, dxy, tol) ||
        !detail::leq(detail::squared_length(dshift), detail::squared_length(dxy), tol)) {
      fail("A5: d(x + F, y + F) = " + text(dshift) + " exceeds d(x, y) = " + text(dxy));
    }
    const auto dplus = inst.distance(x, xf);
    if (!detail::close(dplus, inst.type_of(f), tol)) {
      fail("d(x, x + F) = " + text(dplus) + " differs from t(F) = " + text(inst.type_of(f)));
    }
  });
}

/// A6: d(x + tF, ux + tF) vanishes for u unipotent for F at two large t.
/// A8 (containment): generators of the stabilizer of x in its apartment fix x.
template <class Instance>
AxiomReport check_A6_A8(const Instance& inst, std::size_t trials, std::uint64_t seed) {
  using S = typename Instance::Scalar;
  const S tol = inst.tolerance();
  return detail::run_trials(inst.name(), "A6_A8", trials, seed, [&](Sampler& s, auto& fail) {
    using detail::text;
    const auto x = inst.sample_point(s);
    const auto f = inst.sample_filtration(s);
    const auto u = inst.sample_unipotent(s, x, f);
    const auto times = inst.a6_times(x, f, u);
    std::vector<S> lengths;
    for (const auto& t : times) {
      const auto d = inst.a6_distance(x, f, u, t);
      const S len = detail::squared_length(d);
      lengths.push_back(len);
      if (!detail::leq(len, inst.a6_limit() * inst.a6_limit(), S(0))) {
        fail("A6: at t = " + scalar_text(t) + ", d(x + tF, ux + tF) = " + text(d));
      }
    }
    for (std::size_t i = 1; i < lengths.size(); ++i) {
      if (!detail::leq(lengths[i], lengths[i - 1], tol)) fail("A6: distance increased along t");
    }

    for (const auto& g : inst.stabilizer_generators(s, x)) {
      const auto d = inst.distance(x, inst.act(g, x));
      if (!detail::close(d, std::vector<S>(d.size(), S(0)), tol)) {
        fail("A8: stabilizer generator moves x by " + text(d));
      }
    }
  });
}

template <class Instance>
std::vector<AxiomReport> run_suite(const Instance& inst, std::size_t trials, std::uint64_t seed) {
  return {check_A1_A2(inst, trials, seed), check_metric(inst, trials, seed), check_A6_A8(inst, trials, seed)};
}

/// Runs the suite for an instance chosen by name ("tits", "valnorm",
/// "symspace"), optionally wrapped in a negative control ("crippled",
/// "corrupted", "non-unipotent"; empty for none). `tolerance` overrides the
/// symspace tolerance; the exact instances always use 0.
std::vector<AxiomReport> run_named_suite(const std::string& instance, const std::string& control, std::size_t n,
                                         unsigned long p, std::size_t trials, std::uint64_t seed,
                                         std::optional<double> tolerance = std::nullopt);

}  // namespace bruhat
