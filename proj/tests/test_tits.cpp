#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bruhat/tits.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace support;

namespace {

std::vector<Rational> random_weights(Sampler& s, std::size_t n, long den = 2) {
  std::vector<Rational> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back(s.rational(-2, 2, den));
  return w;
}

Flag random_flag(Sampler& s, std::size_t n) {
  const Matrix g = s.invertible_matrix(n, 2);
  std::vector<Subspace> chain;
  std::vector<Vector> cols;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    cols.push_back(g.column(k));
    if (s.coin() || chain.empty()) chain.push_back(Subspace::span(cols, n));
  }
  return Flag(n, chain);
}

}  // namespace

TEST_CASE("frames of filtrations") {
  CHECK(frame_of(Filtration::trivial(3)) == Frame::standard(3));
  const Frame f = frame_of(jump(2, {vec({1, 1})}));
  CHECK(f == Frame({sub({vec({1, 1})}, 2), sub({unit(2, 1)}, 2)}));
  CHECK(f.splits(jump(2, {vec({1, 1})})));
  CHECK_FALSE(Frame::standard(2).splits(jump(2, {vec({1, 1})})));
  // Lines are ordered by echelon vector: (0, 1) before (1, 1).
  CHECK(f.weights_of(jump(2, {vec({1, 1})}, "3")) == rats({"0", "3"}));
  CHECK_THROWS_AS(Frame({sub({unit(2, 0)}, 2), sub({vec({2, 0})}, 2)}), DomainError);
  CHECK_THROWS_AS(Frame::standard(2).weights_of(jump(2, {vec({1, 1})})), DomainError);
}

TEST_CASE("frame graduations round trip") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Sampler s = sampler(31, i);
    const auto n = static_cast<std::size_t>(s.integer(1, 4));
    const Frame frame = Frame::from_vectors(s.invertible_matrix(n, 2).columns());
    const auto w = random_weights(s, n);
    const Filtration f = frame.filtration(w);
    CHECK(frame.splits(f));
    CHECK(frame.weights_of(f) == w);
    // frame_of picks lines inside the same graded pieces.
    const Frame g = frame_of(f);
    CHECK(g.splits(f));
    CHECK(g.filtration(g.weights_of(f)) == f);
  }
}

TEST_CASE("common frames") {
  const Filtration f = jump(2, {vec({1, 1})});
  CHECK(common_frame(f, f) == frame_of(f));
  CHECK(common_frame(jump(2, {unit(2, 0)}), jump(2, {unit(2, 1)})) == Frame::standard(2));
  CHECK(common_frame(jump(2, {unit(2, 0)}), jump(2, {vec({1, 1})})) ==
        Frame({sub({unit(2, 0)}, 2), sub({vec({1, 1})}, 2)}));
  for (std::uint64_t i = 0; i < 50; ++i) {
    Sampler s = sampler(32, i);
    const auto n = static_cast<std::size_t>(s.integer(1, 4));
    const Filtration a = s.filtration(n, 2, 2);
    const Filtration b = s.filtration(n, 2, 2);
    const Frame c = common_frame(a, b);
    CHECK(c.dim() == n);
    CHECK(c.splits(a));
    CHECK(c.splits(b));
  }
}

TEST_CASE("pairings and distances") {
  const Filtration zero = Filtration::trivial(2);
  const Filtration f = diagonal({"0", "1"});
  const Filtration g = diagonal({"1", "0"});
  CHECK(pairing(zero, f) == 0);
  CHECK(pairing(f, f) == 1);
  CHECK(pairing(f, g) == 0);
  CHECK(distance_sq(f, f) == 0);
  CHECK(distance_sq(f, g) == 2);
  CHECK(norm_sq(frame_filtration(Matrix::from_columns({vec({1, 2, 3}), vec({0, 1, 0}), vec({0, 0, 1})}),
                                 rats({"-2", "0", "0"}))) == 4);
  CHECK_THROWS_AS(pairing(f, Filtration::trivial(3)), DomainError);
  // Adjoint form: sum over i, j of (a_i - a_j)(b_i - b_j).
  CHECK(pairing(f, f, PairingForm::adjoint) == 2);
  CHECK(pairing(f, g, PairingForm::adjoint) == -2);
}

TEST_CASE("angles") {
  const Filtration f = jump(3, {vec({1, 1, 0}), vec({0, 0, 1})}, "2");
  CHECK(angle(f, f) == doctest::Approx(0.0));
  CHECK(angle(f, opposite(f)) == doctest::Approx(std::numbers::pi));
  CHECK(angle(diagonal({"0", "1"}), diagonal({"1", "0"})) == doctest::Approx(std::numbers::pi / 2));
  CHECK_THROWS_AS(angle(f, Filtration::trivial(3)), DomainError);
}

TEST_CASE("dominance order") {
  const TypeVector x = type({"1", "1", "1"});
  const TypeVector y = type({"0", "1", "2"});
  CHECK(dominance_leq(x, x));
  CHECK(dominance_leq(x, y));
  CHECK_FALSE(dominance_leq(y, x));
  CHECK_FALSE(dominance_leq(type({"0", "0"}), type({"0", "1"})));
  CHECK_THROWS_AS(dominance_leq(x, type({"0"})), DomainError);
}

TEST_CASE("dominance agrees with the permutation hull on a grid") {
  std::vector<std::vector<Rational>> grid;
  for (long a = -2; a <= 2; ++a) {
    for (long b = a; b <= 2; ++b) {
      for (long c = b; c <= 2; ++c) grid.push_back({Rational(a), Rational(b), Rational(c)});
    }
  }
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      CHECK(dominance_leq(TypeVector(x), TypeVector(y)) == oracle::in_permutation_hull3(x, y));
    }
  }
}

TEST_CASE("type arithmetic") {
  const TypeVector x = type({"0", "1"});
  CHECK(type_add(x, type({"0", "0"})) == x);
  CHECK(type_add(x, type({"0", "2"})) == type({"0", "3"}));
  CHECK(type_pairing(x, type({"0", "0"})) == 0);
  CHECK(type_pairing(x, type({"0", "2"})) == 2);
  CHECK(type_pairing(type({"0", "1", "2"}), type({"0", "1", "2"})) == 5);
  CHECK(oracle::max_permuted_dot(rats({"0", "1", "2"}), rats({"0", "1", "2"})) == 5);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sampler s = sampler(33, i);
    const auto n = static_cast<std::size_t>(s.integer(1, 4));
    const auto a = TypeVector::sorted(random_weights(s, n));
    const auto b = TypeVector::sorted(random_weights(s, n));
    const auto c = TypeVector::sorted(random_weights(s, n));
    CHECK(type_add(a, b) == type_add(b, a));
    CHECK(type_add(type_add(a, b), c) == type_add(a, type_add(b, c)));
    CHECK(type_pairing(a, b) == oracle::max_permuted_dot(a.values(), b.values()));
  }
}

TEST_CASE("sums of filtrations") {
  const Filtration f = jump(2, {vec({1, 1})});
  CHECK(add_fil(f, Filtration::trivial(2)) == f);
  CHECK(add_fil(diagonal({"0", "1"}), diagonal({"1", "0"})) == Filtration::trivial(2, 1));
  // Same chamber: types add.
  CHECK(add_fil(diagonal({"0", "1"}), diagonal({"0", "2"})).type() == type({"0", "3"}));
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sampler s = sampler(34, i);
    const auto n = static_cast<std::size_t>(s.integer(1, 4));
    const Filtration a = s.filtration(n, 2, 2);
    const Filtration b = s.filtration(n, 2, 2);
    CHECK(add_fil(a, b) == add_fil(b, a));

    // In a common frame the weights add line by line.
    const Frame c = common_frame(a, b);
    const auto wa = c.weights_of(a);
    const auto wb = c.weights_of(b);
    std::vector<Rational> sum_w;
    for (std::size_t k = 0; k < n; ++k) sum_w.push_back(wa[k] + wb[k]);
    CHECK(add_fil(a, b) == c.filtration(sum_w));

    // Weight vectors sorted the same way on one frame: types add.
    const Frame frame = Frame::from_vectors(s.invertible_matrix(n, 2).columns());
    auto x = random_weights(s, n);
    auto y = random_weights(s, n);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const Filtration fx = frame.filtration(x);
    const Filtration fy = frame.filtration(y);
    CHECK(add_fil(fx, fy).type() == type_add(fx.type(), fy.type()));
  }
}

TEST_CASE("stabilizers") {
  const Matrix u = Matrix::from_rows({vec({1, 1}), vec({0, 1})});
  const Matrix d = Matrix::diagonal(vec({2, 3}));
  CHECK(stabilizes(Matrix::identity(2), jump(2, {vec({1, 1})})));
  CHECK(stabilizes(d, diagonal({"0", "1"})));
  CHECK(stabilizes(d, diagonal({"5", "-1"})));
  CHECK(stabilizes(u, jump(2, {unit(2, 0)})));
  CHECK_FALSE(stabilizes(u, jump(2, {unit(2, 1)})));
  CHECK_THROWS_AS(stabilizes(Matrix(2, 2), diagonal({"0", "1"})), DomainError);

  const Flag p = parabolic_of(jump(3, {vec({1, 0, 0}), vec({0, 1, 1})}));
  REQUIRE(p.chain().size() == 1);
  CHECK(p.chain()[0] == sub({vec({1, 0, 0}), vec({0, 1, 1})}, 3));
}

TEST_CASE("retraction onto a flag's Levi") {
  const Flag coordinate(2, {sub({unit(2, 0)}, 2)});
  CHECK(retract(diagonal({"1", "0"}), coordinate) == diagonal({"1", "0"}));
  const Filtration r = retract(jump(2, {vec({1, 1})}), coordinate);
  CHECK(r == jump(2, {unit(2, 1)}));
  CHECK(r.type() == type({"0", "1"}));
  // u = [[1, -1], [0, 1]] fixes the flag and carries F into the standard apartment.
  const Matrix u = Matrix::from_rows({vec({1, -1}), vec({0, 1})});
  CHECK(act(u, jump(2, {vec({1, 1})})) == r);
}

TEST_CASE("retraction properties") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Sampler s = sampler(35, i);
    const auto n = static_cast<std::size_t>(s.integer(2, 4));
    const Flag flag = random_flag(s, n);
    const Filtration a = s.filtration(n, 2, 2);
    const Filtration b = s.filtration(n, 2, 2);
    const Filtration ra = retract(a, flag);
    CHECK(retract(ra, flag) == ra);
    CHECK(ra.type() == a.type());
    CHECK(distance_sq(ra, retract(b, flag)) <= distance_sq(a, b));

    // r(F) induces the same filtrations as F on every subquotient of the flag.
    std::vector<Subspace> chain = flag.chain();
    chain.push_back(Subspace::full(n));
    Subspace prev = Subspace::zero(n);
    for (const auto& w : chain) {
      // Compare F^g intersected with W, modulo W_prev, for F and r(F).
      for (const auto& g : a.weights()) {
        const Subspace lhs = sum(intersect(a.eval(g), w), prev);
        const Subspace rhs = sum(intersect(ra.eval(g), w), prev);
        CHECK(lhs == rhs);
      }
      prev = w;
    }
  }
}

TEST_CASE("vector distance and opposites") {
  const Filtration f = diagonal({"0", "1"});
  CHECK(vector_distance(f, f) == type({"0", "0"}));
  CHECK(vector_distance(Filtration::trivial(2), f) == type({"0", "1"}));
  CHECK(vector_distance(f, diagonal({"1", "0"})) == type({"-1", "1"}));
  CHECK(opposite(f) == diagonal({"0", "-1"}));
  for (std::uint64_t i = 0; i < 50; ++i) {
    Sampler s = sampler(37, i);
    const Filtration a = s.filtration(static_cast<std::size_t>(s.integer(1, 4)), 2, 2);
    const Filtration o = opposite(a);
    std::vector<Rational> neg;
    for (const auto& w : a.type().values()) neg.insert(neg.begin(), -w);
    CHECK(o.type() == TypeVector(neg));
    CHECK(add_fil(a, o) == Filtration::trivial(a.dim()));
    if (norm_sq(a) != 0) CHECK(angle(a, o) == doctest::Approx(std::numbers::pi));
  }
}

TEST_CASE("metric properties on random filtrations") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Sampler s = sampler(36, i);
    const auto n = static_cast<std::size_t>(s.integer(1, 4));
    const Filtration a = s.filtration(n, 2, 2);
    const Filtration b = s.filtration(n, 2, 2);
    const Filtration c = s.filtration(n, 2, 2);

    const Rational ab = pairing(a, b);
    CHECK(ab * ab <= norm_sq(a) * norm_sq(b));
    CHECK(pairing(a, b) == pairing(b, a));
    CHECK(ab <= type_pairing(a.type(), b.type()));

    const Matrix g = s.invertible_matrix(n, 2);
    CHECK(pairing(act(g, a), act(g, b)) == ab);

    const double dab = std::sqrt(to_double(distance_sq(a, b)));
    const double dbc = std::sqrt(to_double(distance_sq(b, c)));
    const double dac = std::sqrt(to_double(distance_sq(a, c)));
    CHECK(dac <= dab + dbc + 1e-9);

    // Within one frame the pairing is the dot product of weight vectors, and
    // the adjoint pairing is the dot product of root values.
    const Frame frame = Frame::from_vectors(g.columns());
    const auto x = random_weights(s, n);
    const auto y = random_weights(s, n);
    CHECK(pairing(frame.filtration(x), frame.filtration(y)) == oracle::dot(x, y));
    Rational adj = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = 0; r < n; ++r) adj += (x[p] - x[r]) * (y[p] - y[r]);
    }
    CHECK(pairing(frame.filtration(x), frame.filtration(y), PairingForm::adjoint) == adj);
  }
}
