#include "bruhat/tits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace bruhat {

namespace {

bool vector_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void check_same_dim(const Filtration& a, const Filtration& b, const char* what) {
  if (a.dim() != b.dim()) throw DomainError(std::string(what) + ": ambient mismatch");
}

struct DoubleGraded {
  Rational a;
  Rational b;
  Subspace numerator;
  Subspace denominator;
};

// N = F1^a & F2^b and D = F1_+^a & F2^b + F1^a & F2_+^b over all breakpoints,
// in lexicographically decreasing (a, b) order.
std::vector<DoubleGraded> double_graded(const Filtration& f1, const Filtration& f2) {
  std::vector<DoubleGraded> out;
  const auto& s1 = f1.steps();
  const auto& s2 = f2.steps();
  for (std::size_t i = s1.size(); i-- > 0;) {
    for (std::size_t j = s2.size(); j-- > 0;) {
      const Rational& a = s1[i].weight;
      const Rational& b = s2[j].weight;
      Subspace n = intersect(s1[i].space, s2[j].space);
      Subspace d = sum(intersect(f1.eval_above(a), s2[j].space), intersect(s1[i].space, f2.eval_above(b)));
      out.push_back({a, b, std::move(n), std::move(d)});
    }
  }
  return out;
}

Rational standard_pairing(const Filtration& f1, const Filtration& f2) {
  Rational total = 0;
  for (const auto& piece : double_graded(f1, f2)) {
    const auto rank = static_cast<long>(piece.numerator.dim() - piece.denominator.dim());
    if (rank != 0) total += piece.a * piece.b * rank;
  }
  return total;
}

}  // namespace

Frame::Frame(std::vector<Subspace> lines) : lines_(std::move(lines)) {
  const std::size_t n = lines_.size();
  Subspace total = Subspace::zero(n);
  for (const auto& l : lines_) {
    if (l.ambient_dim() != n || l.dim() != 1) throw DomainError("frame: expected n lines in an n-dimensional space");
    total = sum(total, l);
  }
  if (total.dim() != n) throw DomainError("frame: lines are not independent");
  std::sort(lines_.begin(), lines_.end(),
            [](const Subspace& x, const Subspace& y) { return vector_less(x.basis()[0], y.basis()[0]); });
}

Frame Frame::standard(std::size_t n) {
  std::vector<Subspace> lines;
  for (std::size_t i = 0; i < n; ++i) lines.push_back(Subspace::span({Subspace::unit(n, i)}, n));
  return Frame(std::move(lines));
}

Frame Frame::from_vectors(const std::vector<Vector>& vectors) {
  std::vector<Subspace> lines;
  for (const auto& v : vectors) lines.push_back(Subspace::span({v}, vectors.size()));
  return Frame(std::move(lines));
}

Matrix Frame::basis() const {
  std::vector<Vector> cols;
  for (const auto& l : lines_) cols.push_back(l.basis()[0]);
  return Matrix::from_columns(cols);
}

bool Frame::splits(const Filtration& f) const {
  if (f.dim() != dim()) return false;
  for (const auto& s : f.steps()) {
    const auto inside = std::count_if(lines_.begin(), lines_.end(), [&](const Subspace& l) { return s.space.contains(l); });
    if (static_cast<std::size_t>(inside) != s.space.dim()) return false;
  }
  return true;
}

std::vector<Rational> Frame::weights_of(const Filtration& f) const {
  if (!splits(f)) throw DomainError("frame does not split the filtration");
  std::vector<Rational> weights;
  for (const auto& l : lines_) {
    Rational w = f.steps().front().weight;
    for (const auto& s : f.steps()) {
      if (s.space.contains(l)) w = s.weight;
    }
    weights.push_back(w);
  }
  return weights;
}

Filtration Frame::filtration(const std::vector<Rational>& weights) const {
  if (weights.size() != lines_.size()) throw DomainError("frame: one weight per line required");
  std::map<Rational, Subspace> pieces;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    auto it = pieces.find(weights[i]);
    if (it == pieces.end()) {
      pieces.emplace(weights[i], lines_[i]);
    } else {
      it->second = sum(it->second, lines_[i]);
    }
  }
  std::vector<Piece> list;
  for (auto& [w, s] : pieces) list.push_back({w, s});
  return fil_from_grading(Graduation(dim(), std::move(list)));
}

Flag::Flag(std::size_t ambient_dim, std::vector<Subspace> chain) : ambient_(ambient_dim), chain_(std::move(chain)) {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    const auto& s = chain_[i];
    if (s.ambient_dim() != ambient_) throw DomainError("flag: subspace in wrong ambient space");
    if (s.is_zero() || s.is_full()) throw DomainError("flag: members must be nonzero proper subspaces");
    if (i > 0 && !(s.contains(chain_[i - 1]) && s.dim() > chain_[i - 1].dim())) {
      throw DomainError("flag: chain must increase strictly");
    }
  }
}

Frame frame_of(const Filtration& f) {
  std::vector<Subspace> lines;
  const Graduation grading = split(f);
  for (const auto& piece : grading.pieces()) {
    for (const auto& row : piece.space.basis()) lines.push_back(Subspace::span({row}, f.dim()));
  }
  return Frame(std::move(lines));
}

Frame common_frame(const Filtration& f1, const Filtration& f2) {
  check_same_dim(f1, f2, "common_frame");
  std::vector<Subspace> lines;
  for (const auto& piece : double_graded(f1, f2)) {
    const Subspace complement = complement_in(piece.denominator, piece.numerator);
    for (const auto& row : complement.basis()) {
      lines.push_back(Subspace::span({row}, f1.dim()));
    }
  }
  return Frame(std::move(lines));
}

Rational pairing(const Filtration& f1, const Filtration& f2, PairingForm form) {
  check_same_dim(f1, f2, "pairing");
  if (form == PairingForm::adjoint) return standard_pairing(hom(f1, f1), hom(f2, f2));
  return standard_pairing(f1, f2);
}

Rational norm_sq(const Filtration& f, PairingForm form) { return pairing(f, f, form); }

Rational distance_sq(const Filtration& f1, const Filtration& f2, PairingForm form) {
  return norm_sq(f1, form) + norm_sq(f2, form) - 2 * pairing(f1, f2, form);
}

double angle(const Filtration& f1, const Filtration& f2, PairingForm form) {
  const Rational n1 = norm_sq(f1, form);
  const Rational n2 = norm_sq(f2, form);
  if (n1 == 0 || n2 == 0) throw DomainError("angle: undefined for a filtration of norm zero");
  const double c = to_double(pairing(f1, f2, form)) / std::sqrt(to_double(n1) * to_double(n2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

bool dominance_leq(const TypeVector& x, const TypeVector& y) {
  if (x.size() != y.size()) throw DomainError("dominance_leq: length mismatch");
  Rational sx = 0;
  Rational sy = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    sx += x[i];
    sy += y[i];
    if (sx > sy) return false;
  }
  return sx == sy;
}

TypeVector type_add(const TypeVector& x, const TypeVector& y) {
  if (x.size() != y.size()) throw DomainError("type_add: length mismatch");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
  return TypeVector(std::move(out));
}

Rational type_pairing(const TypeVector& x, const TypeVector& y) {
  if (x.size() != y.size()) throw DomainError("type_pairing: length mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * y[i];
  return total;
}

Filtration add_fil(const Filtration& f1, const Filtration& f2) {
  check_same_dim(f1, f2, "add_fil");
  const std::size_t n = f1.dim();
  if (n == 0) return Filtration(0, {});
  std::set<Rational> candidates;
  for (const auto& a : f1.steps()) {
    for (const auto& b : f2.steps()) candidates.insert(a.weight + b.weight);
  }
  std::vector<std::pair<Rational, Subspace>> samples;
  for (const auto& g : candidates) {
    Subspace acc = Subspace::zero(n);
    for (const auto& a : f1.steps()) acc = sum(acc, intersect(a.space, f2.eval(g - a.weight)));
    samples.emplace_back(g, std::move(acc));
  }
  return Filtration::from_samples(n, std::move(samples));
}

Flag parabolic_of(const Filtration& f) {
  std::vector<Subspace> chain;
  const auto& steps = f.steps();
  for (std::size_t i = steps.size(); i-- > 1;) chain.push_back(steps[i].space);
  return Flag(f.dim(), std::move(chain));
}

bool stabilizes(const Matrix& g, const Filtration& f) {
  if (g.rows() != f.dim() || g.cols() != f.dim()) throw DomainError("stabilizes: shape mismatch");
  if (!g.is_invertible()) throw DomainError("stabilizes: matrix is singular");
  return std::all_of(f.steps().begin(), f.steps().end(),
                     [&](const Step& s) { return transform(g, s.space) == s.space; });
}

Filtration retract(const Filtration& f, const Flag& flag) {
  if (flag.ambient_dim() != f.dim()) throw DomainError("retract: ambient mismatch");
  const std::size_t n = f.dim();
  if (n == 0) return f;
  std::vector<Subspace> chain{Subspace::zero(n)};
  chain.insert(chain.end(), flag.chain().begin(), flag.chain().end());
  chain.push_back(Subspace::full(n));
  std::vector<Subspace> levi;
  for (std::size_t i = 1; i < chain.size(); ++i) levi.push_back(complement_in(chain[i - 1], chain[i]));

  std::vector<std::pair<Rational, Subspace>> samples;
  for (const auto& s : f.steps()) {
    Subspace acc = Subspace::zero(n);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      acc = sum(acc, intersect(sum(intersect(s.space, chain[i]), chain[i - 1]), levi[i - 1]));
    }
    samples.emplace_back(s.weight, std::move(acc));
  }
  return Filtration::from_samples(n, std::move(samples));
}

TypeVector vector_distance(const Filtration& f1, const Filtration& f2) {
  check_same_dim(f1, f2, "vector_distance");
  const Frame frame = common_frame(f1, f2);
  const auto w1 = frame.weights_of(f1);
  const auto w2 = frame.weights_of(f2);
  std::vector<Rational> diff;
  for (std::size_t i = 0; i < w1.size(); ++i) diff.push_back(w2[i] - w1[i]);
  return TypeVector::sorted(std::move(diff));
}

Filtration opposite(const Filtration& f) {
  const Frame frame = frame_of(f);
  auto weights = frame.weights_of(f);
  for (auto& w : weights) w = -w;
  return frame.filtration(weights);
}

}  // namespace bruhat
