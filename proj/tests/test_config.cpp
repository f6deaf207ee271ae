#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reeshom/errors.hpp"
#include "reeshom/report.hpp"

using namespace reeshom;

namespace {

const char* kMatrixUnits = R"(
# identity sandwich over the trivial group
name = example2-matrix-units
group = cyclic 1
i_size = 2
lambda_size = 2
max_degree = 3
sandwich:
e o
o e
)";

}  // namespace

TEST_CASE("parsing the text format") {
  InstanceConfig c = parse_config(kMatrixUnits);
  CHECK(c.name == "example2-matrix-units");
  CHECK(c.group.kind == GroupSpec::Kind::Cyclic);
  CHECK(c.group.n == 1);
  CHECK(c.i_size == 2);
  CHECK(c.lambda_size == 2);
  CHECK(c.max_degree == 3);
  CHECK(c.sandwich == std::vector<std::vector<std::string>>{{"e", "o"}, {"o", "e"}});
  CHECK_FALSE(c.force);
  CHECK(c.chain_cap == kDefaultChainCap);
}

TEST_CASE("validation errors are positioned and named") {
  SUBCASE("an all-zero column names the column") {
    const char* bad = R"(
name = bad
group = cyclic 1
i_size = 2
lambda_size = 2
sandwich:
e o
e o
)";
    try {
      parse_config(bad);
      FAIL("expected EmptyColumnError");
    } catch (const EmptyColumnError& e) {
      CHECK(e.col == 1);
    }
  }
  SUBCASE("an unknown element is reported with its line") {
    const char* bad = R"(name = bad
group = cyclic 2
i_size = 2
lambda_size = 2
sandwich:
e o
b e
)";
    try {
      parse_config(bad);
      FAIL("expected UnknownGroupElementError");
    } catch (const UnknownGroupElementError& e) {
      CHECK(e.line == 7);
      CHECK(std::string(e.what()).find("'b'") != std::string::npos);
    }
  }
  SUBCASE("malformed rows, keys and counts") {
    CHECK_THROWS_AS(parse_config("group = cyclic 1\nnonsense\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("group = cyclic x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("group = cyclic 1\nunknown_key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(""), ConfigError);
    const char* short_row = R"(
group = cyclic 1
i_size = 2
lambda_size = 2
sandwich:
e
e e
)";
    CHECK_THROWS_AS(parse_config(short_row), ConfigError);
  }
  SUBCASE("the size guard surfaces through parsing unless forced") {
    std::string big = "name = big\ngroup = cyclic 1\ni_size = 65\nlambda_size = 64\nsandwich:\n";
    for (int l = 0; l < 64; ++l) {
      for (int i = 0; i < 65; ++i) big += i ? " e" : "e";
      big += "\n";
    }
    CHECK_THROWS_AS(parse_config(big), SizeGuardError);
    CHECK_NOTHROW(parse_config("force = true\n" + big));
  }
}

TEST_CASE("emit and reparse round-trips") {
  std::vector<std::string> texts = {kMatrixUnits,
                                    R"(
name = c2
group = cyclic 2
i_size = 2
lambda_size = 2
max_degree = 2
chain_cap = 50000
force = false
sandwich:
e o
a e
)",
                                    R"(
name = klein
group = table
elements = e x y z
table:
e x y z
x e z y
y z e x
z y x e
i_size = 1
lambda_size = 2
sandwich:
x
y
)"};
  for (const std::string& text : texts) {
    InstanceConfig c = parse_config(text);
    CHECK(parse_config(emit_config(c)) == c);
    CHECK(config_from_json(config_to_json(c)) == c);
  }
}

TEST_CASE("JSON configs are accepted") {
  InstanceConfig from_text = parse_config(kMatrixUnits);
  std::string json_text = config_to_json(from_text).dump();
  CHECK(parse_config(json_text) == from_text);
  CHECK_THROWS_AS(parse_config("{ not json"), ConfigError);
}

TEST_CASE("run produces a deterministic canonical report") {
  InstanceConfig c = parse_config(kMatrixUnits);
  RunOptions opt;
  opt.command = Command::Hh;
  RunReport a = run(c, opt);
  RunReport b = run(c, opt);
  CHECK(a.ok);
  CHECK(dump_canonical(a.json) == dump_canonical(b.json));

  opt.threads = 4;
  RunReport threaded = run(c, opt);
  CHECK(dump_canonical(a.json) == dump_canonical(threaded.json));
}

TEST_CASE("run covers the command surface") {
  InstanceConfig c = parse_config(kMatrixUnits);
  RunOptions opt;
  opt.command = Command::All;
  opt.oracle = true;
  RunReport rep = run(c, opt);
  CHECK(rep.ok);
  CHECK(rep.json.contains("homology"));
  CHECK(rep.json.contains("morita"));
  CHECK(rep.json.contains("checks"));
  CHECK(rep.json.contains("homotopy"));
  CHECK(rep.json.contains("oracle"));
  CHECK(rep.json["oracle"]["A(S)"]["equal"].get<bool>());

  SUBCASE("an explicit idempotent position behaves like the default") {
    RunOptions morita_opt;
    morita_opt.command = Command::Morita;
    morita_opt.idempotent = {{1, 1}};  // 0-based (2,2) in display terms
    RunReport explicit_rep = run(c, morita_opt);
    CHECK(explicit_rep.ok);
    RunOptions default_opt;
    default_opt.command = Command::Morita;
    RunReport default_rep = run(c, default_opt);
    CHECK(explicit_rep.json["morita"]["dims"] == default_rep.json["morita"]["dims"]);
  }
  SUBCASE("size guard reports the offending dimension") {
    InstanceConfig tiny_cap = c;
    tiny_cap.chain_cap = 10;
    CHECK_THROWS_AS(run(tiny_cap, RunOptions{}), SizeGuardError);
  }
}
