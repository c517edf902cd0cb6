#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bruhat/cli.hpp"
#include "bruhat/json_io.hpp"
#include "support.hpp"

using namespace support;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bruhat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("bruhat-cli-" + std::to_string(counter_++))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string json_file(const std::string& name, const Json& content) const { return file(name, content.dump()); }

 private:
  static inline int counter_ = 0;
  fs::path dir_;
};

const char* jump_e1 = R"({"dim":2,"steps":[{"weight":"0","basis":[[1,0],[0,1]]},{"weight":"1","basis":[[1,0]]}]})";
const char* jump_e2 = R"({"dim":2,"steps":[{"weight":"0","basis":[[1,0],[0,1]]},{"weight":"1","basis":[[0,1]]}]})";
const char* standard = R"({"p":2,"basis":[[1,0],[0,1]],"weights":["0","0"]})";

}  // namespace

TEST_CASE("type") {
  Workspace ws;
  const auto r = invoke({"type", ws.file("f.json", R"({"dim":2,"steps":[{"weight":"0","basis":[[1,0],[0,1]]}]})")});
  CHECK(r.code == cli::ok);
  CHECK(r.out == "{\"type\":[\"0\",\"0\"]}\n");
  CHECK(invoke({"type", ws.file("g.json", jump_e1)}).out == "{\"type\":[\"0\",\"1\"]}\n");
}

TEST_CASE("distance") {
  Workspace ws;
  const auto a = ws.file("a.json", jump_e1);
  const auto b = ws.file("b.json", jump_e2);
  const auto r = invoke({"distance", a, b});
  CHECK(r.code == cli::ok);
  const Json j = parse_json(r.out);
  CHECK(j.at("distance_sq") == "2");
  CHECK(j.at("pairing") == "0");
  CHECK(j.at("vector_distance") == Json::array({"-1", "1"}));
  CHECK(j.at("angle").get<double>() == doctest::Approx(std::acos(0.0)));

  const Json same = parse_json(invoke({"distance", "--form", "adjoint", a, a}).out);
  CHECK(same.at("distance_sq") == "0");
  CHECK(invoke({"distance", "--form", "sideways", a, a}).code == cli::bad_input);

  // The trivial filtration has zero norm, so no angle is reported.
  const auto t = ws.file("t.json", R"({"dim":2,"steps":[{"weight":"0","basis":[[1,0],[0,1]]}]})");
  CHECK_FALSE(parse_json(invoke({"distance", t, a}).out).contains("angle"));
}

TEST_CASE("add and retract") {
  Workspace ws;
  const auto a = ws.file("a.json", jump_e1);
  const auto b = ws.file("b.json", jump_e2);
  const Filtration sum = filtration_from_json(parse_json(invoke({"add", a, b}).out));
  CHECK(sum == fil(2, {{"1", {unit(2, 0), unit(2, 1)}}}));

  const auto flag = ws.file("flag.json", R"({"dim":2,"chain":[[[1,0]]]})");
  const auto r = invoke({"retract", b, flag});
  CHECK(r.code == cli::ok);
  CHECK(filtration_from_json(parse_json(r.out)) == jump(2, {unit(2, 1)}));

  const auto alpha = ws.file("alpha.json", standard);
  const auto moved = invoke({"add", alpha, a});
  CHECK(moved.out == "{\"p\":2,\"basis\":[[\"1\",\"0\"],[\"0\",\"1\"]],\"weights\":[\"1\",\"0\"]}\n");
}

TEST_CASE("norm subcommands") {
  Workspace ws;
  const auto a = ws.file("a.json", standard);
  const auto b = ws.file("b.json", R"({"p":2,"basis":[[2,0],[0,1]],"weights":["0","0"]})");
  CHECK(invoke({"cartan", "--p", "2", a, b}).out == "{\"cartan\":[\"0\",\"1\"]}\n");
  CHECK(invoke({"cartan", a, b}).out == "{\"cartan\":[\"0\",\"1\"]}\n");

  const Json adapted = parse_json(invoke({"adapt", a, ws.file("f.json", jump_e1)}).out);
  CHECK(adapted.at("norm_weights") == Json::array({"0", "0"}));
  CHECK(adapted.at("fil_weights") == Json::array({"1", "0"}));
  const Json pair = parse_json(invoke({"adapt", a, b}).out);
  CHECK(pair.contains("alpha_weights"));
  CHECK(pair.contains("beta_weights"));

  const Json residue = parse_json(invoke({"loc", a, a}).out);
  CHECK(residue.at("p") == 2);
  CHECK(residue.at("steps").size() == 1);

  const Json mp = parse_json(invoke({"moy-prasad", a, "--r", "1/2"}).out);
  CHECK(mp.at("r") == "1/2");
  REQUIRE(mp.at("generators").size() == 4);
  CHECK(mp.at("generators")[1] == Json::parse(R"([["0","2"],["0","0"]])"));
}

TEST_CASE("symdist") {
  Workspace ws;
  const auto a = ws.file("a.json", R"({"gram":[[1,0],[0,1]]})");
  const auto b = ws.file("b.json", R"({"gram":[[0.1353352832366127,0],[0,1]]})");
  const Json j = parse_json(invoke({"symdist", a, b}).out);
  CHECK(j.at("fischer_courant")[0].get<double>() == doctest::Approx(0).epsilon(1e-12));
  CHECK(j.at("fischer_courant")[1].get<double>() == doctest::Approx(1).epsilon(1e-12));
  CHECK(j.at("dn").get<double>() == doctest::Approx(1).epsilon(1e-12));
  CHECK(invoke({"symdist", a, a}).out == "{\"fischer_courant\":[0.0,0.0],\"dn\":0.0}\n");
}

TEST_CASE("axioms") {
  const auto r = invoke({"axioms", "--instance", "valnorm", "--n", "3", "--p", "2", "--trials", "100", "--seed", "7"});
  CHECK(r.code == cli::ok);
  const Json j = parse_json(r.out);
  REQUIRE(j.size() == 3);
  for (const auto& report : j) CHECK(report.at("passed") == true);
  CHECK(invoke({"axioms", "--instance", "valnorm", "--n", "3", "--p", "2", "--trials", "100", "--seed", "7"}).out ==
        r.out);

  const auto bad = invoke({"axioms", "--instance", "tits", "--control", "corrupted", "--trials", "20"});
  CHECK(bad.code == cli::axiom_failure);
  CHECK(invoke({"axioms", "--instance", "elsewhere"}).code == cli::bad_input);
}

TEST_CASE("errors and exit codes") {
  Workspace ws;
  CHECK(invoke({}).code == cli::bad_input);
  CHECK(invoke({"type", "/nonexistent/f.json"}).code == cli::bad_input);
  const auto broken = invoke({"type", ws.file("x.json", "{not json")});
  CHECK(broken.code == cli::bad_input);
  CHECK_FALSE(broken.err.empty());
  CHECK(broken.out.empty());
  // A decreasing chain is well formed but not a filtration.
  const auto invalid =
      ws.file("y.json", R"({"dim":2,"steps":[{"weight":"0","basis":[[1,0]]},{"weight":"1","basis":[[1,0],[0,1]]}]})");
  CHECK(invoke({"type", invalid}).code == cli::domain_error);
  CHECK(invoke({"cartan", "--p", "3", ws.file("a.json", standard), ws.file("b.json", standard)}).code ==
        cli::domain_error);
  CHECK(invoke({"type", ws.file("z.json", R"({"dim":2,"steps":[{"weight":"2/-4","basis":[[1,0]]}]})")}).code ==
        cli::bad_input);
  CHECK(invoke({"--help"}).code == cli::ok);
}

TEST_CASE("outputs read back as inputs") {
  Workspace ws;
  for (std::uint64_t i = 0; i < 30; ++i) {
    Sampler s = sampler(71, i);
    const auto n = static_cast<std::size_t>(s.integer(1, 3));
    const Filtration f = s.filtration(n, 2, 2);
    const Filtration g = s.filtration(n, 2, 2);
    const auto fa = ws.json_file("f.json", filtration_to_json(f));
    const auto ga = ws.json_file("g.json", filtration_to_json(g));
    const auto sum = invoke({"add", fa, ga});
    REQUIRE(sum.code == cli::ok);
    const auto back = ws.file("sum.json", sum.out);
    CHECK(filtration_from_json(parse_json(sum.out)) == add_fil(f, g));
    CHECK(invoke({"type", back}).code == cli::ok);

    const SplitNorm alpha(2, s.invertible_matrix(n, 2), std::vector<Rational>(n, s.rational(-2, 2, 2)));
    const auto out = invoke({"add", ws.json_file("alpha.json", norm_to_json(alpha)), fa});
    REQUIRE(out.code == cli::ok);
    CHECK(norms_equal(norm_from_json(parse_json(out.out)), add_fil_norm(alpha, f)));
    CHECK(norm_to_json(norm_from_json(parse_json(out.out))).dump() + "\n" == out.out);
  }
}
