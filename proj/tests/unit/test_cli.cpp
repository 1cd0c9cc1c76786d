#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nhb/cli.hpp"
#include "nhb/schur.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nhb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poincare") {
  Run r = run({"poincare", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 2q + 2q^2 + 2q^3 + q^4\n");
  auto j = nlohmann::json::parse(run({"poincare", "--n", "3", "--format", "json"}).out);
  CHECK(j["order"] == 48);
  CHECK(j["matches_product"] == true);
}

TEST_CASE("schur prints the library value") {
  Run r = run({"schur", "--n", "2", "--alpha", "0,0", "--beta", "1", "--format", "text"});
  CHECK(r.code == 0);
  auto value = nhb::schur_ext(nhb::Partition::zero(2), nhb::StrictPartition::from({1}, 2), 2);
  CHECK(r.out == nhb::render(value) + "\n");
  auto j = nlohmann::json::parse(run({"schur", "--n", "2", "--beta", "1,2", "--format", "json"}).out);
  CHECK(j["text"] == "w1*w2");
  CHECK(j["invariant"] == true);
}

TEST_CASE("other commands") {
  CHECK(run({"schubert", "--n", "2", "--word", "1,2"}).out == "x1^2 + x1*x2 + x2^2\n");
  CHECK(run({"basis", "--n", "2", "--k", "2"}).out == "S_{0,(1,2)} = w1*w2\n");
  auto basis = nlohmann::json::parse(run({"basis", "--n", "2", "--k", "1", "--format", "json"}).out);
  CHECK(basis["n"] == 2);
  CHECK(basis["k"] == 1);
  CHECK(basis["basis"].size() == 2);
  CHECK(run({"nh", "--n", "2", "--expr", "D1*x1"}).out == "1 + x2*D(1)\n");
  CHECK(run({"nh", "--n", "2", "--expr", "D1", "--act", "x1"}).out == "D(1)\n1\n");
  CHECK(run({"dg", "--n", "2", "--N", "1"}).out == "d(w1) = -x1^2\nd(w2) = 1\n");
  CHECK(run({"parse", "--expr", "x2*x1 + w1"}).out == "x1*x2 + w1\n");
  Run s = run({"solomon", "--n", "2"});
  CHECK(s.code == 0);
  CHECK(s.out.rfind("P = [[1, -x2^2], [0, 1]]\n", 0) == 0);
}

TEST_CASE("verify exits 0 and is deterministic") {
  std::vector<std::string> args{"verify", "--n", "2", "--suite", "all", "--trials", "5",
                                "--seed", "42", "--format", "json"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["pass"] == true);
  CHECK(j["suites"].size() == 6);
}

TEST_CASE("exit codes") {
  CHECK(run({"poincare", "--bogus"}).code == nhb::cli::kExitUsage);
  CHECK(run({}).code == nhb::cli::kExitUsage);
  CHECK(run({"nosuch"}).code == nhb::cli::kExitUsage);
  CHECK(run({"poincare", "--format", "xml"}).code == nhb::cli::kExitUsage);
  CHECK(run({"--help"}).code == nhb::cli::kExitOk);
  CHECK(run({"schur", "--n", "2", "--beta", "2,1"}).code == nhb::cli::kExitValidation);
  CHECK(run({"nh", "--n", "2", "--expr", "D("}).code == nhb::cli::kExitValidation);
  CHECK(run({"nh", "--n", "2"}).code == nhb::cli::kExitValidation);
  CHECK(run({"solomon", "--n", "2", "--p", "x1^2 + x2^2;1"}).code == nhb::cli::kExitValidation);
  CHECK(run({"verify", "--n", "4", "--suite", "schur"}).code == nhb::cli::kExitValidation);
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "nhb_cli_test.txt";
  Run r = run({"poincare", "--n", "1", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1 + q");
  std::filesystem::remove(path);
}
