#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "orbitope_kit/json_io.hpp"

using orbitope_kit::cli::run_cli;
using orbitope_kit::json_io::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "orbitope_kit_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

Json parse(const std::string& s) { return orbitope_kit::json_io::parse(s); }

}  // namespace

TEST_CASE("verify-miss-origin") {
  const auto pentagon = scratch("pentagon.json",
                                "[0, 1.2566370614359172, 2.5132741228718345, 3.7699111843077517, 5.026548245743669]");
  const auto r1 = run({"verify-miss-origin", "-k", "2", "--points", pentagon.string()});
  CHECK(r1.code == 0);
  const Json j1 = parse(r1.out);
  CHECK(j1.at("certificate").at("type") == "feasible");
  CHECK(j1.at("consistent") == true);

  const auto r2 = run({"verify-miss-origin", "-k", "2", "--random", "5", "--seed", "7", "--max-diam", "2.0"});
  CHECK(r2.code == 0);
  const Json j2 = parse(r2.out);
  CHECK(j2.at("certificate").at("type") == "separating");
  CHECK(j2.at("diameter").get<double>() <= 2.0);
  CHECK(run({"verify-miss-origin", "-k", "2", "--random", "5", "--seed", "7", "--max-diam", "2.0"}).out == r2.out);

  CHECK(run({"verify-miss-origin", "-k", "0", "--random", "5"}).code == 2);
  CHECK(run({"verify-miss-origin", "-k", "2"}).code == 2);
  CHECK(run({"verify-miss-origin", "-k", "2", "--points", "/nonexistent/x.json"}).code == 2);
  CHECK(run({"verify-miss-origin", "-k", "2", "--points", scratch("bad.json", "[1,").string()}).code == 2);
}

TEST_CASE("poly-from-roots") {
  const auto r = run({"poly-from-roots", "0", "2.0944", "4.1888"});
  CHECK(r.code == 0);
  const Json j = parse(r.out);
  CHECK(j.at("k") == 2);
  CHECK(std::abs(j.at("b")[1].get<double>() - 0.25) < 1e-4);

  const auto single = parse(run({"poly-from-roots", "1.0"}).out);
  CHECK(std::abs(single.at("a")[0].get<double>() - std::sin(1.0)) < 1e-14);
  CHECK(std::abs(single.at("b")[0].get<double>() + std::cos(1.0)) < 1e-14);

  CHECK(run({"poly-from-roots", "0", "0"}).code == 2);
  CHECK(run({"poly-from-roots", "0", "0", "1"}).code == 2);

  const fs::path csv = fs::temp_directory_path() / "orbitope_kit_cli_test" / "samples.csv";
  CHECK(run({"poly-from-roots", "1.0", "--out", csv.string()}).code == 0);
  std::ifstream in(csv);
  std::string line;
  int lines = 0;
  std::getline(in, line);
  CHECK(line == "t,p");
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 1024);

  const auto as_csv = run({"poly-from-roots", "1.0", "--format", "csv"});
  CHECK(as_csv.code == 0);
  CHECK(as_csv.out.rfind("t,p\n", 0) == 0);
}

TEST_CASE("bu-search") {
  const auto r = run({"bu-search", "--map", "sm4", "--bound", "2.513", "--grid", "360"});
  CHECK(r.code == 0);
  const Json j = parse(r.out);
  REQUIRE(j.at("found") == true);
  CHECK(j.at("witness").at("points").size() == 5);

  const auto f = parse(run({"bu-search", "--map", "fig1", "--grid", "360"}).out);
  REQUIRE(f.at("found") == true);
  CHECK(f.at("witness").at("points").size() == 3);

  const auto none = parse(run({"bu-search", "--map", "sm4", "--bound", "2.0", "--grid", "360"}).out);
  CHECK(none.at("found") == false);
  CHECK(run({"bu-search", "--map", "sm5"}).code == 2);
  CHECK(run({"bu-search", "--map", "bogus"}).code == 2);
  CHECK(run({"bu-search", "--grid", "361"}).code == 2);
}

TEST_CASE("bu-sphere-search") {
  const auto r = run({"bu-sphere-search", "--with-simplex", "--samples", "2", "--trials", "50", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(parse(r.out).at("found") == true);
  const auto none = run({"bu-sphere-search", "--bound", "1.90", "--samples", "200", "--trials", "200"});
  CHECK(none.code == 0);
  CHECK(parse(none.out).at("found") == false);
  CHECK(run({"bu-sphere-search", "--dim", "1"}).code == 2);
}

TEST_CASE("project and iota") {
  const auto r = run({"project", "1", "0", "1", "0"});
  CHECK(r.code == 0);
  const Json j = parse(r.out);
  CHECK(j.at("face") == "vertex");
  CHECK(std::abs(j.at("t").get<double>()) < 1e-9);
  CHECK(std::abs(j.at("scale").get<double>() - 1.0) < 1e-9);
  CHECK(run({"project", "0", "0", "0", "0"}).code == 2);
  CHECK(run({"project", "1", "0", "1"}).code == 2);

  const auto bp = scratch("edge.json", R"({"face": "edge", "t1": 0.0, "t2": 1.5, "weight": 0.25})");
  const auto m = run({"iota", "--points", bp.string()});
  CHECK(m.code == 0);
  const Json mj = parse(m.out);
  REQUIRE(mj.size() == 2);
  CHECK(mj[0].at("weight").get<double>() == 0.25);
  const auto bad = scratch("bad_edge.json", R"({"face": "edge", "t1": 0.0, "t2": 3.0, "weight": 0.25})");
  CHECK(run({"iota", "--points", bad.string()}).code == 2);
}

TEST_CASE("wasserstein") {
  const auto a = scratch("a.json", R"([{"angle": 0.0, "weight": 0.5}, {"angle": 1.5707963267948966, "weight": 0.5}])");
  const auto b = scratch("b.json", R"([{"angle": 0.7853981633974483, "weight": 1.0}])");
  const auto r = run({"wasserstein", a.string(), b.string()});
  CHECK(r.code == 0);
  CHECK(std::abs(parse(r.out).at("distance").get<double>() - 0.7853981633974483) < 1e-12);
  CHECK(run({"wasserstein", a.string()}).code == 2);
}

TEST_CASE("probe, chi and nullspace") {
  const auto p = run({"probe", "-k", "2", "-r", "2.0943951023931953", "--trials", "50", "--seed", "1"});
  CHECK(p.code == 0);
  const Json pj = parse(p.out);
  CHECK(pj.at("max_excess").get<double>() <= 1e-8);
  CHECK(run({"probe", "-k", "2", "-r", "2.0943951023931953", "--trials", "50", "--seed", "1"}).out == p.out);
  CHECK(run({"probe", "-k", "2", "-r", "3.0"}).code == 2);

  const auto c = run({"chi", "0", "0.1", "0.2"});
  CHECK(c.code == 0);
  CHECK(parse(c.out).at("chi") == Json::array({0, 1, 2}));
  CHECK(run({"chi", "0", "3.141592653589793"}).code == 2);

  const auto n = run({"nullspace", "-k", "1", "0", "2.0943951023931953", "4.1887902047863905"});
  CHECK(n.code == 0);
  const Json nj = parse(n.out);
  CHECK(nj.at("same_sign_condition") == true);
  for (const auto& w : nj.at("weights")) CHECK(std::abs(w.get<double>() - 1.0 / 3.0) < 1e-12);
  CHECK(run({"nullspace", "-k", "2", "0", "1", "2"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"chi", "0", "1", "--format", "csv"}).code == 2);
}
