#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cochain/cli.hpp"
#include "cochain/errors.hpp"
#include "cochain/json_io.hpp"
#include "cochain/random.hpp"
#include "support.hpp"

using namespace cochain;
using test::same;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cochain_test_" + name);
  std::ofstream(path) << content;
  return path;
}

const char* kCanonicalK2 = R"j({
  "dim": 2,
  "rank": 3,
  "space": "K",
  "grade": 2,
  "entries": [
    {
      "index": [
        0,
        1,
        0
      ],
      "expr": "1"
    },
    {
      "index": [
        1,
        0,
        0
      ],
      "expr": "-1"
    }
  ]
}
)j";

}  // namespace

TEST_CASE("tensor JSON round trip", "[json]") {
  const TensorDocument doc = parse_tensor(kCanonicalK2);
  REQUIRE(doc.space);
  CHECK(*doc.space == Space::K(2));
  CHECK(emit_tensor(doc.tensor, doc.space) == kCanonicalK2);

  Rng rng(1);
  for (std::size_t q = 0; q <= 3; ++q) {
    const CochainElement e = random_k_member(rng, 3, q);
    const std::string text = emit_tensor(e);
    const TensorDocument back = parse_tensor(text);
    CHECK(same(back.tensor, e.tensor()));
    CHECK(emit_tensor(back.tensor, back.space) == text);
  }
  const std::string generic = emit_tensor(random_tensor(rng, 2, 2));
  CHECK(generic.find("grade") == std::string::npos);
  CHECK_FALSE(parse_tensor(generic).space);
}

TEST_CASE("sparse documents fill with zeros", "[json]") {
  const TensorDocument doc = parse_tensor(
      R"j({"dim": 3, "rank": 3, "space": "generic", "entries": [{"index": [2, 0, 1], "expr": "(* x0 x2)"}]})j");
  CHECK(doc.tensor.size() == 27);
  int zeros = 0;
  for (const auto& e : doc.tensor.entries()) zeros += e.is_zero() ? 1 : 0;
  CHECK(zeros == 26);
}

TEST_CASE("membership claims are validated", "[json]") {
  const std::string bad =
      R"j({"dim": 3, "rank": 3, "space": "K", "grade": 2, "entries": [{"index": [0, 1, 2], "expr": "x0"}, {"index": [1, 0, 2], "expr": "(- x0)"}]})j";
  try {
    parse_tensor(bad);
    FAIL("expected MembershipError");
  } catch (const MembershipError& e) {
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("schema and parse errors carry locations", "[json]") {
  try {
    parse_tensor(R"j({"dim": 2, "rank": 1, "entries": [)j");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  auto schema_path = [](const std::string& text) {
    try {
      parse_tensor(text);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("<none>");
  };
  CHECK(schema_path(R"j({"rank": 1, "entries": []})j") == "/dim");
  CHECK(schema_path(R"j({"dim": 2, "rank": 1, "entries": [], "extra": 1})j") == "/extra");
  CHECK(schema_path(R"j({"dim": 2, "rank": 1, "entries": [{"index": [5], "expr": "1"}]})j") ==
        "/entries/0/index/0");
  CHECK(schema_path(R"j({"dim": 2, "rank": 1, "entries": [{"index": [0], "expr": "(+ x0"}]})j") ==
        "/entries/0/expr");
  CHECK(schema_path(
            R"j({"dim": 2, "rank": 1, "entries": [{"index": [0], "expr": "1"}, {"index": [0], "expr": "2"}]})j") ==
        "/entries/1/index");
  CHECK(schema_path(R"j({"dim": 2, "rank": 3, "space": "K", "grade": 1, "entries": []})j") ==
        "/grade");
}

TEST_CASE("metric JSON", "[json]") {
  const auto m = parse_metric(R"j({"name": "extreme_rn", "params": {"mass": "1"}})j");
  CHECK(m.h.evaluate(test::point({0, 1, 2, 2})).exact() == Rational(4, 3));
  const auto s = parse_metric(R"j({"name": "schwarzschild", "params": {"omega": "4"}})j");
  CHECK(s.h.evaluate(test::point({0, 2, 3, 6})).exact() == Rational(6, 7));
  CHECK_THROWS_AS(parse_metric(R"j({"name": "mp", "bogus": 1})j"), SchemaError);
  CHECK_THROWS_AS(parse_metric(R"j({"name": "custom", "f": "1"})j"), Error);
}

TEST_CASE("check-complex exit codes and determinism", "[cli]") {
  const RunResult a = run_cli({"check-complex", "--dim", "3", "--grade", "2", "--trials", "50",
                               "--seed", "7"});
  CHECK(a.code == cli::kVerified);
  const RunResult b = run_cli({"check-complex", "--dim", "3", "--grade", "2", "--trials", "50",
                               "--seed", "7"});
  CHECK(a.out == b.out);

  const RunResult j1 = run_cli({"check-complex", "--dim", "2", "--grade", "1", "--seed", "3",
                                "--json"});
  const RunResult j2 = run_cli({"check-complex", "--dim", "2", "--grade", "1", "--seed", "3",
                                "--json"});
  CHECK(j1.out == j2.out);
  CHECK(nlohmann::json::parse(j1.out)["schema"] == "v1");

  const RunResult fault = run_cli({"check-complex", "--dim", "3", "--grade", "1", "--trials", "5",
                                   "--inject-fault", "--json"});
  CHECK(fault.code == cli::kIdentityViolation);
  const auto report = nlohmann::json::parse(fault.out);
  CHECK(report["overall"] == "fail");
  bool has_witness = false;
  for (const auto& c : report["checks"]) {
    if (c["status"] == "fail") has_witness = c["witness"]["index"].size() == 4;
  }
  CHECK(has_witness);
}

TEST_CASE("COCHAIN_SEED overrides --seed", "[cli]") {
  const RunResult seven = run_cli({"check-complex", "--dim", "2", "--grade", "2", "--trials",
                                   "3", "--seed", "7"});
  setenv("COCHAIN_SEED", "7", 1);
  const RunResult env = run_cli({"check-complex", "--dim", "2", "--grade", "2", "--trials", "3",
                                 "--seed", "1"});
  unsetenv("COCHAIN_SEED");
  CHECK(seven.out == env.out);
}

TEST_CASE("poincare subcommand", "[cli]") {
  Rng rng(2);
  const CochainElement t = d_K(random_k_member(rng, 3, 1));
  const auto in = temp_file("t.json", emit_tensor(t));
  const auto out = std::filesystem::temp_directory_path() / "cochain_test_a.json";
  const RunResult r = run_cli({"poincare", "--in", in.string(), "--out", out.string()});
  CHECK(r.code == cli::kVerified);
  std::ifstream a_stream(out);
  std::stringstream a_text;
  a_text << a_stream.rdbuf();
  const TensorDocument a = parse_tensor(a_text.str());
  REQUIRE(a.space);
  CHECK(*a.space == Space::K(1));
  CHECK(same(d_K(CochainElement::make(a.tensor, *a.space)).tensor(), t.tensor()));

  const auto open = temp_file(
      "open.json", R"j({"dim": 2, "rank": 2, "space": "K", "grade": 1, "entries": [{"index": [0, 0], "expr": "x1"}]})j");
  const RunResult not_closed = run_cli({"poincare", "--in", open.string(), "--out", out.string()});
  CHECK(not_closed.code == cli::kIdentityViolation);
  CHECK(not_closed.out.find("FAIL") != std::string::npos);
  CHECK(not_closed.out.find("index=") != std::string::npos);

  const auto non_member = temp_file(
      "nm.json", R"j({"dim": 2, "rank": 2, "space": "K", "grade": 1, "entries": [{"index": [0, 1], "expr": "x1"}]})j");
  CHECK(run_cli({"poincare", "--in", non_member.string(), "--out", out.string()}).code ==
        cli::kIdentityViolation);

  const auto broken = temp_file("broken.json", R"j({"dim": 2, "rank": )j");
  const RunResult parse = run_cli({"poincare", "--in", broken.string(), "--out", out.string()});
  CHECK(parse.code == cli::kInputError);
  CHECK(parse.err.find("byte") != std::string::npos);

  const auto generic = temp_file("g.json", R"j({"dim": 2, "rank": 2, "entries": []})j");
  CHECK(run_cli({"poincare", "--in", generic.string()}).code == cli::kInputError);
}

TEST_CASE("kernel and spacetime subcommands", "[cli]") {
  const RunResult k = run_cli({"kernel", "--dim", "3"});
  CHECK(k.code == cli::kVerified);
  CHECK(k.out.find("b3 = x2") != std::string::npos);

  const RunResult v = run_cli({"spacetime", "verify", "--metric", "mp", "--H",
                               "(+ 1 (/ 1 (sqrt (+ (^ x1 2) (^ x2 2) (^ x3 2)))))", "--samples",
                               "100", "--tol", "1e-9"});
  CHECK(v.code == cli::kVerified);
  const RunResult t = run_cli({"spacetime", "table", "--metric", "schwarzschild", "--omega", "4"});
  CHECK(t.code == cli::kVerified);
  const RunResult harmonic = run_cli({"spacetime", "verify", "--metric", "mp", "--H",
                                      "(+ 3 (^ x1 2))", "--samples", "10", "--check-harmonic"});
  CHECK(harmonic.code == cli::kVerified);
  CHECK(harmonic.out.find("FAIL") != std::string::npos);
}

TEST_CASE("input errors exit 2", "[cli]") {
  CHECK(run_cli({}).code == cli::kInputError);
  CHECK(run_cli({"bogus"}).code == cli::kInputError);
  CHECK(run_cli({"check-complex", "--dim", "9", "--grade", "1"}).code == cli::kInputError);
  CHECK(run_cli({"spacetime", "verify", "--metric", "mp", "--H", "(+ 1"}).code ==
        cli::kInputError);
  CHECK(run_cli({"spacetime", "verify", "--metric", "extreme_rn", "--mass", "-1"}).code ==
        cli::kInputError);
  CHECK(run_cli({"poincare", "--in", "/nonexistent/t.json"}).code == cli::kInputError);
  const RunResult help = run_cli({"--help"});
  CHECK(help.code == cli::kVerified);
  CHECK(help.out.find("check-complex") != std::string::npos);
}
