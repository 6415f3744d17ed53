#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "braidforge/cli.hpp"
#include "braidforge/error.hpp"
#include "braidforge/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace braidforge;
using nlohmann::ordered_json;

namespace {

struct RunResult {
  CommandOutcome outcome;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& argv) {
  std::ostringstream out;
  std::ostringstream err;
  CommandOutcome outcome = run(argv, out, err);
  return RunResult{std::move(outcome), out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("braidforge_cli_test_" + std::to_string(++counter) + ".txt"))
                .string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

const char* kRoundSpherePair =
    R"({"euler_M":2,"signature_M":0,"euler_Sigma":2,"self_intersection":0,"cone_order":2,"sigma_orientable":true})";

}  // namespace

TEST_SUITE("text formats") {
  TEST_CASE("presentation files round trip") {
    std::istringstream in("2\n1 2 1 -2 -1 -2\n\n1 1\n");
    const GroupPresentation p = parse_presentation(in);
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relators().size() == 2);
    CHECK(p.relators()[0] == std::vector<int>{1, 2, 1, -2, -1, -2});
    CHECK(p.relators()[1] == std::vector<int>{1, 1});

    std::istringstream again(format_presentation(p));
    const GroupPresentation q = parse_presentation(again);
    CHECK(q.generator_count() == p.generator_count());
    CHECK(q.relators() == p.relators());
  }

  TEST_CASE("presentation files reject garbage") {
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_presentation(empty), InputError);
    std::istringstream two_headers("2 3\n");
    CHECK_THROWS_AS(parse_presentation(two_headers), InputError);
    std::istringstream bad_letter("2\n1 x\n");
    CHECK_THROWS_AS(parse_presentation(bad_letter), InputError);
    std::istringstream out_of_range("2\n3\n");
    CHECK_THROWS_AS(parse_presentation(out_of_range), InputError);
  }

  TEST_CASE("braid system files round trip") {
    std::istringstream in("degree 3\n| 1 1\n1 -2 | 2 -1\n");
    const BraidSystem bs = parse_braid_system(in);
    CHECK(bs.degree() == 3);
    REQUIRE(bs.length() == 2);
    CHECK(bs.entries()[0].conjugator.empty());
    CHECK(bs.entries()[0].index == 1);
    CHECK(bs.entries()[1].conjugator.letters() ==
          std::vector<BraidLetter>{{1, 1}, {2, -1}});
    CHECK(bs.entries()[1].sign == -1);

    std::istringstream again(format_braid_system(bs));
    const BraidSystem back = parse_braid_system(again);
    CHECK(back.degree() == bs.degree());
    CHECK(back.entries() == bs.entries());
  }

  TEST_CASE("braid system files reject garbage") {
    std::istringstream no_header("| 1 1\n");
    CHECK_THROWS_AS(parse_braid_system(no_header), InputError);
    std::istringstream no_bar("degree 3\n1 1\n");
    CHECK_THROWS_AS(parse_braid_system(no_bar), InputError);
    std::istringstream missing_sign("degree 3\n| 1\n");
    CHECK_THROWS_AS(parse_braid_system(missing_sign), InputError);
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_braid_system(empty), InputError);
  }

  TEST_CASE("geometry json parses and validates fields") {
    const OrbifoldGeometry g = parse_geometry_json(kRoundSpherePair);
    CHECK(g.euler_M == 2);
    CHECK(g.cone_order == 2);
    CHECK(g.sigma_orientable);
    CHECK_THROWS_AS(parse_geometry_json("[1,2]"), InputError);
    CHECK_THROWS_AS(parse_geometry_json("{"), InputError);
    CHECK_THROWS_AS(parse_geometry_json(R"({"euler_M":2})"), InputError);
    CHECK_THROWS_AS(
        parse_geometry_json(
            R"({"euler_M":2,"signature_M":0,"euler_Sigma":2,"self_intersection":0,"cone_order":2,"sigma_orientable":1})"),
        InputError);
  }

  TEST_CASE("matrix json parses row major complex pairs") {
    const Eigen::MatrixXcd m = parse_matrix_json("[[[0,0],[1,0]],[[0,1],[0,0]]]");
    CHECK(m(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK(m(1, 0) == std::complex<double>(0.0, 1.0));
    CHECK_THROWS_AS(parse_matrix_json("[[[0,0]],[[0,0],[0,0]]]"), InputError);
    CHECK_THROWS_AS(parse_matrix_json("[[[0,0],[1]]]"), InputError);
    CHECK_THROWS_AS(parse_matrix_json("[]"), InputError);
    CHECK_THROWS_AS(parse_matrix_json("not json"), InputError);
  }

  TEST_CASE("angle grammar") {
    CHECK(parse_angle("2pi/5") == doctest::Approx(2.0 * std::numbers::pi / 5.0));
    CHECK(parse_angle("pi") == doctest::Approx(std::numbers::pi));
    CHECK(parse_angle("pi/2") == doctest::Approx(std::numbers::pi / 2.0));
    CHECK(parse_angle("3pi") == doctest::Approx(3.0 * std::numbers::pi));
    CHECK(parse_angle("-pi/4") == doctest::Approx(-std::numbers::pi / 4.0));
    CHECK(parse_angle("0.5") == doctest::Approx(0.5));
    CHECK(parse_angle("2/5") == doctest::Approx(0.4));
    CHECK(parse_angle(" 1.5 pi ") == doctest::Approx(1.5 * std::numbers::pi));
    CHECK_THROWS_AS(parse_angle(""), InputError);
    CHECK_THROWS_AS(parse_angle("abc"), InputError);
    CHECK_THROWS_AS(parse_angle("pi/0"), InputError);
    CHECK_THROWS_AS(parse_angle("2x"), InputError);
  }

  TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(7)) == "7");
    CHECK(format_rational(Rational(4, 3)) == "4/3");
    CHECK(format_rational(Rational(-1, 2)) == "-1/2");
    CHECK(format_rational(Rational(0)) == "0");
  }
}

TEST_SUITE("cli") {
  TEST_CASE("invariants subcommand reports the sphere pair") {
    const TempFile input(kRoundSpherePair);
    const RunResult r = run_cli({"invariants", "--input", input.path()});
    REQUIRE(r.outcome.exit_code == 0);
    CHECK(r.outcome.payload.at("schema") == "braidforge/1");
    CHECK(r.outcome.payload.at("chi_orb") == "1");
    CHECK(r.outcome.payload.at("tau_orb") == "0");
    CHECK(r.outcome.payload.at("index_K") == "7");
    CHECK(r.outcome.payload.at("einstein_plus_ok") == true);
    CHECK(r.out.find("chi_orb") != std::string::npos);
    CHECK(r.err.empty());
  }

  TEST_CASE("json output re-parses to the payload") {
    const TempFile input(kRoundSpherePair);
    const RunResult r = run_cli({"invariants", "--input", input.path(), "--json"});
    REQUIRE(r.outcome.exit_code == 0);
    const ordered_json parsed = ordered_json::parse(r.out);
    CHECK(parsed == r.outcome.payload);
    CHECK(parsed.at("schema") == "braidforge/1");
  }

  TEST_CASE("hurwitz orbit sizes and truncation") {
    const RunResult four = run_cli({"hurwitz-orbit", "--degree", "4", "--standard"});
    REQUIRE(four.outcome.exit_code == 0);
    CHECK(four.outcome.payload.at("size") == 16);
    CHECK(four.outcome.payload.at("truncated") == false);

    const RunResult capped =
        run_cli({"hurwitz-orbit", "--degree", "5", "--standard", "--cap", "5"});
    REQUIRE(capped.outcome.exit_code == 0);
    CHECK(capped.outcome.payload.at("size") == 5);
    CHECK(capped.outcome.payload.at("truncated") == true);
  }

  TEST_CASE("hurwitz orbit from a system file") {
    const TempFile input("degree 3\n| 1 1\n| 2 1\n");
    const RunResult r = run_cli({"hurwitz-orbit", "--input", input.path()});
    REQUIRE(r.outcome.exit_code == 0);
    CHECK(r.outcome.payload.at("size") == 3);

    const RunResult both =
        run_cli({"hurwitz-orbit", "--input", input.path(), "--standard", "--degree", "3"});
    CHECK(both.outcome.exit_code == 2);
    const RunResult neither = run_cli({"hurwitz-orbit"});
    CHECK(neither.outcome.exit_code == 2);
  }

  TEST_CASE("braid eq nf and perm") {
    const RunResult eq = run_cli({"braid", "eq", "1 2 1", "2 1 2", "--strands", "3"});
    REQUIRE(eq.outcome.exit_code == 0);
    CHECK(eq.outcome.payload.at("equal") == true);

    const RunResult ne = run_cli({"braid", "eq", "1", "2", "--strands", "3"});
    CHECK(ne.outcome.payload.at("equal") == false);

    const RunResult nf = run_cli({"braid", "nf", "1 2 1", "--strands", "3"});
    REQUIRE(nf.outcome.exit_code == 0);
    CHECK(nf.outcome.payload.at("delta_power") == 1);
    CHECK(nf.outcome.payload.at("canonical_length") == 0);

    const RunResult perm = run_cli({"braid", "perm", "1 2", "--strands", "3"});
    REQUIRE(perm.outcome.exit_code == 0);
    CHECK(perm.outcome.payload.at("images") == std::vector<int>{2, 3, 1});

    const RunResult bad = run_cli({"braid", "eq", "1 5", "1", "--strands", "3"});
    CHECK(bad.outcome.exit_code == 2);
  }

  TEST_CASE("presentation subcommands") {
    const TempFile cyclic("1\n1 1 1 1 1\n");
    const RunResult abel = run_cli({"presentation", "abelianize", "--input", cyclic.path()});
    REQUIRE(abel.outcome.exit_code == 0);
    CHECK(abel.outcome.payload.at("free_rank") == 0);
    CHECK(abel.outcome.payload.at("torsion") == std::vector<std::string>{"5"});
    CHECK(abel.outcome.payload.at("group") == "Z^0 + Z/5");

    const TempFile trefoil("2\n1 2 1 -2 -1 -2\n");
    const RunResult knot = run_cli({"presentation", "abelianize", "--input", trefoil.path()});
    CHECK(knot.outcome.payload.at("group") == "Z^1");

    const TempFile free_one("1\n");
    const RunResult quot = run_cli({"presentation", "orbifold-quotient", "--input",
                                    free_one.path(), "--loop", "1", "--exponent", "3"});
    REQUIRE(quot.outcome.exit_code == 0);
    CHECK(quot.outcome.payload.at("relators") ==
          std::vector<std::vector<int>>{{1, 1, 1}});
    std::istringstream text(quot.outcome.payload.at("text").get<std::string>());
    const GroupPresentation round = parse_presentation(text);
    CHECK(round.generator_count() == 1);
    CHECK(round.relators() == std::vector<std::vector<int>>{{1, 1, 1}});

    const RunResult mismatch = run_cli({"presentation", "orbifold-quotient", "--input",
                                        free_one.path(), "--loop", "1"});
    CHECK(mismatch.outcome.exit_code == 2);

    const TempFile conj("3\n1 2 -1 -3\n");
    const RunResult cg = run_cli({"presentation", "c-group", "--input", conj.path()});
    REQUIRE(cg.outcome.exit_code == 0);
    CHECK(cg.outcome.payload.at("is_c_group") == true);
    CHECK(cg.outcome.payload.at("free_rank") == 2);

    const TempFile square("1\n1 1\n");
    const RunResult not_cg = run_cli({"presentation", "c-group", "--input", square.path()});
    CHECK(not_cg.outcome.payload.at("is_c_group") == false);
  }

  TEST_CASE("rep subcommand prints matrices and residuals") {
    const RunResult r = run_cli({"rep", "--n", "3", "--p", "1", "--a", "2pi/5"});
    REQUIRE(r.outcome.exit_code == 0);
    CHECK(r.outcome.payload.at("dimension") == 2);
    CHECK(r.outcome.payload.at("loop_value").get<double>() ==
          doctest::Approx(2.0 * std::cos(std::numbers::pi / 5.0)));
    REQUIRE(r.outcome.payload.at("sigma_images").size() == 2);
    REQUIRE(r.outcome.payload.at("eigenvalues").size() == 2);
    for (const auto& residual : r.outcome.payload.at("unitarity_residuals")) {
      CHECK(residual.get<double>() < 1e-10);
    }
    CHECK(r.outcome.payload.at("braid_relation_residual").get<double>() < 1e-10);
    REQUIRE(r.outcome.payload.at("sigma_images")[0].size() == 2);
    REQUIRE(r.outcome.payload.at("sigma_images")[0][0].size() == 2);
    CHECK(r.outcome.payload.at("sigma_images")[0][0][0].is_array());
  }

  TEST_CASE("rep at a degenerate parameter is a domain error") {
    const RunResult r = run_cli({"rep", "--a", "2pi/3"});
    CHECK(r.outcome.exit_code == 1);
    CHECK(r.outcome.payload.at("error").at("type") == "domain");
  }

  TEST_CASE("compile subcommand finds the exact half twist image") {
    const RunResult r = run_cli({"compile", "--target", "x", "--depth", "8"});
    REQUIRE(r.outcome.exit_code == 0);
    CHECK(r.outcome.payload.at("achieved_distance").get<double>() < 1e-10);
    CHECK(r.outcome.payload.at("length") == 3);
    CHECK(r.outcome.payload.at("depth_reached") == 3);
  }

  TEST_CASE("compile accepts a matrix file target") {
    const TempFile target("[[[0,0],[1,0]],[[1,0],[0,0]]]");
    const RunResult r = run_cli({"compile", "--target", target.path(), "--depth", "4"});
    REQUIRE(r.outcome.exit_code == 0);
    CHECK(r.outcome.payload.at("achieved_distance").get<double>() < 1e-10);

    const TempFile shear("[[[1,0],[1,0]],[[0,0],[1,0]]]");
    const RunResult bad = run_cli({"compile", "--target", shear.path(), "--depth", "4"});
    CHECK(bad.outcome.exit_code == 2);
  }

  TEST_CASE("compile strategy and argument validation") {
    const RunResult mitm =
        run_cli({"compile", "--target", "x", "--depth", "8", "--strategy", "mitm"});
    REQUIRE(mitm.outcome.exit_code == 0);
    CHECK(mitm.outcome.payload.at("achieved_distance").get<double>() < 1e-10);

    CHECK(run_cli({"compile", "--target", "x", "--strategy", "greedy"}).outcome.exit_code == 2);
    CHECK(run_cli({"compile", "--depth", "4"}).outcome.exit_code == 2);
    CHECK(run_cli({"compile", "--target", "cnot", "--depth", "2"}).outcome.exit_code == 2);
  }

  TEST_CASE("probe payloads reproduce bit for bit by seed") {
    const std::vector<std::string> argv = {"compile", "--probe", "8", "--depth", "3",
                                           "--seed",  "123",     "--json"};
    const RunResult a = run_cli(argv);
    const RunResult b = run_cli(argv);
    REQUIRE(a.outcome.exit_code == 0);
    CHECK(a.outcome.payload.at("mode") == "probe");
    CHECK(a.outcome.payload.at("distances").size() == 8);
    CHECK(a.out == b.out);
    CHECK(a.outcome.payload.dump() == b.outcome.payload.dump());

    const RunResult c = run_cli({"compile", "--probe", "8", "--depth", "3", "--seed", "124"});
    CHECK(c.outcome.payload.at("distances") != a.outcome.payload.at("distances"));
  }

  TEST_CASE("cover report matches the standard surface") {
    const RunResult r = run_cli({"cover-report", "--degree", "5", "--standard"});
    REQUIRE(r.outcome.exit_code == 0);
    CHECK(r.outcome.payload.at("cover_euler") == 1);
    CHECK(r.outcome.payload.at("branch_count") == 4);
    CHECK(r.outcome.payload.at("transitive") == true);

    const TempFile doubled("degree 2\n| 1 1\n| 1 -1\n");
    const RunResult sphere =
        run_cli({"cover-report", "--input", doubled.path(), "--base-euler", "2"});
    REQUIRE(sphere.outcome.exit_code == 0);
    CHECK(sphere.outcome.payload.at("cover_euler") == 2);
  }

  TEST_CASE("unknown subcommands exit with usage") {
    const RunResult r = run_cli({"frobnicate"});
    CHECK(r.outcome.exit_code == 2);
    CHECK(r.outcome.payload.at("error").at("type") == "usage");
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(r.out.empty());
  }

  TEST_CASE("help succeeds at every level") {
    for (const std::vector<std::string>& argv :
         {std::vector<std::string>{"--help"}, {"braid", "--help"}, {"braid", "eq", "--help"},
          {"presentation", "orbifold-quotient", "--help"}, {"compile", "--help"}}) {
    const RunResult r = run_cli(argv);
      CHECK(r.outcome.exit_code == 0);
      CHECK(r.outcome.payload.contains("help"));
      CHECK(r.out.find("Usage") != std::string::npos);
    }
  }

  TEST_CASE("missing files are input errors") {
    const RunResult r = run_cli({"invariants", "--input", "/nonexistent/geometry.json"});
    CHECK(r.outcome.exit_code == 2);
    CHECK(r.outcome.payload.at("error").at("type") == "input");
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
}
