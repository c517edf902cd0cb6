#include "bruhat/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "bruhat/axioms.hpp"
#include "bruhat/error.hpp"
#include "bruhat/json_io.hpp"

namespace bruhat::cli {

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_json(text.str());
}

Json doubles_to_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json type_to_json(const TypeVector& t) { return rationals_to_json(t.values()); }

PairingForm parse_form(const std::string& s) {
  if (s == "standard") return PairingForm::standard;
  if (s == "adjoint") return PairingForm::adjoint;
  throw FormatError("unknown pairing form \"" + s + "\"");
}

// Reshapes a vector of End(V) coordinates (row-major) into an n x n matrix.
Json square_matrix_json(const Vector& v, std::size_t n) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(vector_to_json(Vector(v.begin() + static_cast<long>(i * n), v.begin() + static_cast<long>((i + 1) * n))));
  }
  return rows;
}

struct Options {
  std::string first, second;
  std::optional<unsigned long> p;
  std::string form = "standard";
  std::string r = "0";
  std::string instance = "tits";
  std::string control;
  std::size_t n = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
};

SplitNorm load_norm(const std::string& path, const Options& o) {
  SplitNorm a = norm_from_json(read_json(path), o.p);
  if (o.p && a.p() != *o.p) {
    throw DomainError(path + " is a norm for p = " + std::to_string(a.p()) + ", but --p " + std::to_string(*o.p) +
                      " was given");
  }
  return a;
}

int emit(std::ostream& out, const Json& j) {
  out << j.dump() << '\n';
  return ok;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  if (command == "type") {
    // Evaluate before building the object: an exception thrown inside a
    // braced Json initializer leaks the keys already constructed.
    const Json t = type_to_json(filtration_from_json(read_json(o.first)).type());
    return emit(out, {{"type", t}});
  }
  if (command == "distance") {
    const Filtration f1 = filtration_from_json(read_json(o.first));
    const Filtration f2 = filtration_from_json(read_json(o.second));
    const PairingForm form = parse_form(o.form);
    const Rational d2 = distance_sq(f1, f2, form);
    const Rational pair = pairing(f1, f2, form);
    const TypeVector vd = vector_distance(f1, f2);
    Json j = {{"distance_sq", rational_to_json(d2)},
              {"pairing", rational_to_json(pair)},
              {"vector_distance", type_to_json(vd)}};
    if (norm_sq(f1, form) != 0 && norm_sq(f2, form) != 0) j["angle"] = angle(f1, f2, form);
    return emit(out, j);
  }
  if (command == "add") {
    const Json a = read_json(o.first);
    const Filtration f = filtration_from_json(read_json(o.second));
    if (a.is_object() && a.contains("weights")) {
      return emit(out, norm_to_json(add_fil_norm(norm_from_json(a, o.p), f)));
    }
    return emit(out, filtration_to_json(add_fil(filtration_from_json(a), f)));
  }
  if (command == "retract") {
    const Filtration f = filtration_from_json(read_json(o.first));
    return emit(out, filtration_to_json(retract(f, flag_from_json(read_json(o.second)))));
  }
  if (command == "cartan") {
    const Json c = type_to_json(cartan(load_norm(o.first, o), load_norm(o.second, o)));
    return emit(out, {{"cartan", c}});
  }
  if (command == "adapt") {
    const SplitNorm a = load_norm(o.first, o);
    const Json b = read_json(o.second);
    if (b.is_object() && b.contains("steps")) {
      const auto r = adapt_to_filtration(a, filtration_from_json(b));
      Json basis = Json::array();
      for (const auto& c : r.basis.columns()) basis.push_back(vector_to_json(c));
      return emit(out, {{"basis", std::move(basis)},
                        {"norm_weights", rationals_to_json(r.norm_weights)},
                        {"fil_weights", rationals_to_json(r.fil_weights)}});
    }
    const auto r = adapt_norms(a, norm_from_json(b, o.p ? o.p : std::optional(a.p())));
    Json basis = Json::array();
    for (const auto& c : r.basis.columns()) basis.push_back(vector_to_json(c));
    return emit(out, {{"basis", std::move(basis)},
                      {"alpha_weights", rationals_to_json(r.alpha_weights)},
                      {"beta_weights", rationals_to_json(r.beta_weights)}});
  }
  if (command == "loc") {
    return emit(out, residue_filtration_to_json(loc(load_norm(o.first, o), load_norm(o.second, o))));
  }
  if (command == "moy-prasad") {
    const SplitNorm a = load_norm(o.first, o);
    const Rational r = parse_rational(o.r);
    Json gens = Json::array();
    for (const auto& g : moy_prasad(hom_norm(a, a), r)) gens.push_back(square_matrix_json(g, a.dim()));
    return emit(out, {{"r", rational_to_json(r)}, {"generators", std::move(gens)}});
  }
  if (command == "symdist") {
    const EuclideanNorm a = euclidean_from_json(read_json(o.first));
    const EuclideanNorm b = euclidean_from_json(read_json(o.second));
    const Json d = doubles_to_json(fischer_courant(a, b));
    const double volume = dn(a, b);
    return emit(out, {{"fischer_courant", d}, {"dn", volume}});
  }
  if (command == "axioms") {
    const auto reports =
        run_named_suite(o.instance, o.control, o.n, o.p.value_or(2), o.trials, o.seed, o.tolerance);
    out << report_json(reports) << '\n';
    for (const auto& r : reports) {
      if (!r.passed()) return axiom_failure;
    }
    return ok;
  }
  throw FormatError("unknown subcommand " + command);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Filtrations, buildings and norms for GL_n", "bruhat"};
  app.require_subcommand(1);
  Options o;

  auto two_files = [&](CLI::App* sub, const char* first, const char* second) {
    sub->add_option(first, o.first, "first input file")->required();
    sub->add_option(second, o.second, "second input file")->required();
  };
  auto p_option = [&](CLI::App* sub) { sub->add_option("--p", o.p, "prime of the valuation")->check(CLI::PositiveNumber); };

  auto* type = app.add_subcommand("type", "type vector of a filtration");
  type->add_option("filtration", o.first, "filtration file")->required();

  auto* distance = app.add_subcommand("distance", "pairing, distance and vector distance of two filtrations");
  two_files(distance, "f1", "f2");
  distance->add_option("--form", o.form, "pairing form: standard or adjoint");

  auto* add = app.add_subcommand("add", "filtration + filtration, or norm + filtration");
  two_files(add, "point", "filtration");
  p_option(add);

  auto* retract_cmd = app.add_subcommand("retract", "retraction of a filtration onto the apartments of a flag");
  two_files(retract_cmd, "filtration", "flag");

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan invariant of two norms");
  two_files(cartan_cmd, "alpha", "beta");
  p_option(cartan_cmd);

  auto* adapt = app.add_subcommand("adapt", "common adapted basis of a norm and a norm or filtration");
  two_files(adapt, "alpha", "other");
  p_option(adapt);

  auto* loc_cmd = app.add_subcommand("loc", "residue filtration of a norm relative to a lattice");
  two_files(loc_cmd, "alpha", "lattice");
  p_option(loc_cmd);

  auto* mp = app.add_subcommand("moy-prasad", "generators of the ball of radius r in End(V)");
  mp->add_option("alpha", o.first, "norm file")->required();
  mp->add_option("--r", o.r, "radius, an exact fraction");
  p_option(mp);

  auto* symdist = app.add_subcommand("symdist", "Fischer-Courant invariants of two Euclidean norms");
  two_files(symdist, "alpha", "beta");

  auto* axioms = app.add_subcommand("axioms", "run the axiom suite on one instance");
  axioms->add_option("--instance", o.instance, "tits, valnorm or symspace")
      ->check(CLI::IsMember({"tits", "valnorm", "symspace"}));
  axioms->add_option("--control", o.control, "negative control: crippled, corrupted or non-unipotent")
      ->check(CLI::IsMember({"crippled", "corrupted", "non-unipotent"}));
  axioms->add_option("--n", o.n, "dimension");
  axioms->add_option("--trials", o.trials, "trials per axiom");
  axioms->add_option("--seed", o.seed, "base seed");
  axioms->add_option("--tolerance", o.tolerance, "floating-point tolerance (symspace)");
  p_option(axioms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "bruhat: " << e.what() << '\n';
    return bad_input;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o, out);
  } catch (const FormatError& e) {
    err << "bruhat " << command << ": malformed input: " << e.what() << '\n';
    return bad_input;
  } catch (const nlohmann::json::exception& e) {
    err << "bruhat " << command << ": malformed input: " << e.what() << '\n';
    return bad_input;
  } catch (const DomainError& e) {
    err << "bruhat " << command << ": " << e.what() << '\n';
    return domain_error;
  }
}

}  // namespace bruhat::cli
