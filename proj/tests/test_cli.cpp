#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "skewfree/cli.hpp"

using namespace skewfree;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "skewfree");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check-free on the free example") {
  auto r = invoke({"check-free", "--sigma", "monomial:1,1;1,2", "--gens", "x,y", "--depth", "8", "--json"});
  CHECK(r.code == cli::kVerified);
  auto j = r.report();
  CHECK(j["schema"] == "skewfree/1");
  CHECK(j["report"]["verdict"] == "FREE_UP_TO_DEPTH");
  CHECK(j["report"]["certificate"] == "VALUATION");
  CHECK(j["report"]["dims"] == json::array({2, 4, 8, 16, 32, 64, 128, 256}));
}

TEST_CASE("check-free on the golden example refutes with a witness") {
  auto r = invoke({"check-free", "--sigma", "monomial:0,1;1,1", "--gens", "x,y", "--depth", "3"});
  CHECK(r.code == cli::kRefuted);
  auto j = r.report();
  CHECK(j["report"]["verdict"] == "NOT_FREE");
  CHECK(j["report"]["witness"]["text"] == "(xt)^2(yt) - (yt)^2(xt)");
  CHECK(j["report"]["witness"]["verified"] == true);
}

TEST_CASE("classify a rotation") {
  auto r = invoke({"classify", "-M", "0,-1;1,0"});
  CHECK(r.code == cli::kVerified);
  auto j = r.report();
  CHECK(j["classification"]["branch"] == "FINITE_ORDER");
  CHECK(j["classification"]["order"] == 4);
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> args{"check-free", "--sigma", "henon:1,1", "--gens", "x,y", "--depth", "5"};
  auto a = invoke(args), b = invoke(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  auto c = invoke({"classify", "-M", "3,2;4,3"}), d = invoke({"classify", "-M", "3,2;4,3"});
  CHECK(c.out == d.out);
}

TEST_CASE("malformed input exits 3 with a diagnostic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"classify", "-M", "1,2;3"}, {"classify", "-M", "2,0;0,1"},
        {"check-free", "--sigma", "bogus:1", "--gens", "x,y"},
        {"check-free", "--sigma", "monomial:1,1;1,2", "--gens", "x"},
        {"check-free", "--sigma", "monomial:1,1;1,2", "--gens", "x,y", "--depth", "0"},
        {"verify-relation", "--sigma", "monomial:0,1;1,1", "--gens", "x,y", "--relation", "(zt)"},
        {"no-such-command"}}) {
    auto r = invoke(args);
    INFO(args[0]);
    CHECK(r.code == cli::kInputError);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("depth beyond the cap is inconclusive, not an error") {
  auto r = invoke({"check-free", "--sigma", "henon:1,1", "--gens", "x,y", "--depth", "40"});
  CHECK(r.code == cli::kInconclusive);
}

TEST_CASE("every command runs") {
  CHECK(invoke({"certify", "-M", "1,1;1,2"}).code == cli::kVerified);
  CHECK(invoke({"certify", "-M", "0,1;1,1"}).code == cli::kInconclusive);
  CHECK(invoke({"certify", "-M", "0,1;1,1", "--power", "2"}).code == cli::kVerified);
  CHECK(invoke({"certify", "--sigma", "henon:1,1", "--gens", "y", "--horizon", "6"}).code == cli::kVerified);
  CHECK(invoke({"verify-relation", "--sigma", "monomial:0,1;1,1", "--gens", "x,y", "--relation",
                "(xt)^2(yt) = (yt)^2(xt)"})
            .code == cli::kVerified);
  CHECK(invoke({"verify-relation", "--sigma", "monomial:1,1;1,2", "--gens", "x,y", "--relation",
                "(xt)(yt) - (yt)(xt)"})
            .code == cli::kRefuted);
  auto dims = invoke({"dims", "-M", "0,1;1,1", "--depth", "4"});
  CHECK(dims.code == cli::kVerified);
  CHECK(dims.report()["dims"] == json::array({2, 4, 7, 12}));
  auto hd = invoke({"henon-degrees", "--sigma", "henon:1,1", "--horizon", "5"});
  CHECK(hd.code == cli::kVerified);
  CHECK(hd.report()["degrees_x"] == json::array({2, 4, 8, 16, 32, 64}));
  auto gr = invoke({"growth", "--sigma", "identity", "--gens", "x,y,t", "-N", "10"});
  CHECK(gr.code == cli::kVerified);
  CHECK(gr.report()["series"]["dims"][10] == 286);
  auto obstructed = invoke({"parity", "-M", "3,2;4,3", "--depth", "6"});
  CHECK(obstructed.code == cli::kVerified);
  CHECK(obstructed.report()["status"] == "OBSTRUCTED");
  CHECK(invoke({"parity", "-M", "1,1;1,2", "--depth", "6"}).report()["status"] == "NOT_OBSTRUCTED");
}

TEST_CASE("text output is flat key: value lines") {
  auto r = invoke({"classify", "-M", "1,1;1,2", "--text"});
  CHECK(r.code == cli::kVerified);
  CHECK(r.out.find("classification.branch: LARGE") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}
