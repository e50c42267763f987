// SPDX-License-Identifier: Apache-2.0
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aoa/io.hpp"
#include "aoa/verify.hpp"
#include "doctest.h"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace aoa;

namespace {

struct Run {
  int code;
  std::string out, err;
};

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("aoa_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const char* cli = std::getenv("AOA_CLI_PATH");
#ifdef AOA_CLI_PATH
  if (cli == nullptr) cli = AOA_CLI_PATH;
#endif
  REQUIRE(cli != nullptr);
  const auto out = workdir() / "stdout", err = workdir() / "stderr";
  const std::string cmd = "cd '" + workdir().string() + "' && '" + cli + "' " + args + " > '" + out.string() +
                          "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

fs::path file(const std::string& name) { return workdir() / name; }

void verifies(const std::string& name) {
  auto r = run("verify " + name);
  CAPTURE(name);
  CAPTURE(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("construct --family plan --s 1 --t 3 --k 6 --v 14 --out x.json").code == 3);
  CHECK(run("construct --family power-column --t 3 --q 6 --out x.json").code == 2);
  CHECK(run("construct --family nonsense --out x.json").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify missing.json").code == 2);
  {
    std::ofstream(file("garbage.json")) << "{ not json";
  }
  CHECK(run("verify garbage.json").code == 2);
  auto nf = run("dm search --n 6");
  CHECK(nf.code == 5);
  CHECK(nf.err.find("exhausted") != std::string::npos);
  CHECK(run("dm search --group Z15 --adder --nodes 10").code == 5);
  CHECK(run("dm catalog --n 10").code == 3);
}

TEST_CASE("a corrupted file fails verification with a counterexample") {
  REQUIRE(run("construct --family irreducible-twist --q 5 --s 2 --t 4 --out a.json").code == 0);
  verifies("a.json");
  auto obj = load(file("a.json"));
  auto a = std::get<AugmentedOA>(obj);
  CHECK(a.s() == 2);
  CHECK(a.t() == 4);
  CHECK(a.k() == 6);
  CHECK(a.v() == 5);
  Table rows = a.rows();
  rows.at(17, 2) = (rows.at(17, 2) + 1) % 5;
  save(AugmentedOA(5, 4, 2, rows), file("bad.json"));
  auto r = run("verify bad.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL [strength]") != std::string::npos);
  CHECK(r.out.find("tuple (") != std::string::npos);
}

TEST_CASE("every family round-trips through verify") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"power-column --t 3 --q 5", "oa"},
      {"power-column-ext --q 4", "oa"},
      {"zero-sum --k 4 --v 3", "aoa"},
      {"zero-sum --k 4 --v 3 --emit roa", "roa"},
      {"zero-sum --k 5 --v 2", "oa"},
      {"shift --s 2 --t 3 --v 6", "aoa"},
      {"dm-oa5 --n 7", "aoa"},
      {"dm-oa5 --n 7 --emit roa", "roa"},
      {"dm-adder-oa6 --n 12", "aoa"},
      {"sum-zero --q 5 --k 4 --emit gen", "gen"},
      {"sum-zero --q 5 --k 4", "aoa"},
      {"irreducible-twist --q 7 --s 1 --t 3", "aoa"},
      {"irreducible-twist --q 5 --s 2 --t 4 --emit gen", "gen"},
      {"conic --q 4", "aoa"},
      {"hyperoval --q 8 --emit gen", "gen"},
      {"wide --q 4", "aoa"},
      {"wide --q 8 --s 3 --emit gen", "gen"},
      {"plan --s 1 --t 3 --k 6 --v 12", "aoa"},
      {"plan --s 1 --t 3 --k 5 --v 35", "aoa"},
  };
  int i = 0;
  for (const auto& [args, kind] : cases) {
    const std::string name = "rt" + std::to_string(i++) + ".json";
    auto r = run("construct --family " + args + " --out " + name);
    CAPTURE(args);
    CAPTURE(r.err);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("construction:") != std::string::npos);
    CHECK(r.out.find("verified in") != std::string::npos);
    verifies(name);
    CHECK(run("verify --kind " + kind + " " + name).code == 0);
  }
  REQUIRE(run("construct --family zero-sum --k 4 --v 2 --out p1.json").code == 0);
  REQUIRE(run("construct --family zero-sum --k 4 --v 3 --out p2.json").code == 0);
  REQUIRE(run("construct --family product --in p1.json --in p2.json --out p3.json").code == 0);
  verifies("p3.json");
  auto p = std::get<AugmentedOA>(load(file("p3.json")));
  CHECK(p.v() == 6);
  CHECK(oracle::is_aoa(oracle::rows_of(p.rows()), 4, 1, 3, 6));
  REQUIRE(run("construct --family zero-sum --k 4 --v 3 --format csv --out z.csv").code == 0);
  verifies("z.csv");
  auto s = run("construct --family zero-sum --k 4 --v 3 --out -");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("{", 0) == 0);
  CHECK(s.err.find("AOA(1,3,4,3)") != std::string::npos);
  auto pj = run("construct --family plan --s 1 --t 3 --k 6 --v 60 --emit plan");
  CHECK(pj.code == 0);
  CHECK(pj.out.find("\"product\"") != std::string::npos);
}

TEST_CASE("conversions") {
  REQUIRE(run("construct --family zero-sum --k 4 --v 3 --out a2343.json").code == 0);
  // An AOA(2,3,4,v) needs v >= 4: at v = 3 the OA(3,5,3) it appends to would
  // exceed the column bound of 4.
  REQUIRE(run("construct --family power-column --t 3 --q 4 --out oa354.json").code == 0);
  REQUIRE(run("convert --to aoa-split --in oa354.json --out a2344.json").code == 0);
  auto a = std::get<AugmentedOA>(load(file("a2344.json")));
  CHECK(a.s() == 2);
  CHECK(a.t() == 3);
  CHECK(a.k() == 4);
  REQUIRE(run("convert --to oa-append --in a2344.json --out oa.json").code == 0);
  verifies("oa.json");
  auto oa = std::get<OrthogonalArray>(load(file("oa.json")));
  CHECK(oa.t() == 3);
  CHECK(oa.k() == 5);
  CHECK(oa.v() == 4);
  CHECK(oracle::is_oa(oracle::rows_of(oa.rows()), 5, 3, 4));
  CHECK(run("construct --family plan --s 2 --t 3 --k 4 --v 3 --out no.json").code == 3);

  REQUIRE(run("construct --family irreducible-twist --q 5 --s 1 --t 3 --emit gen --out g.json").code == 0);
  REQUIRE(run("convert --to dual --in g.json --out d.json").code == 0);
  verifies("d.json");
  auto d = std::get<GeneratorMatrix>(load(file("d.json")));
  CHECK(d.s() == 3);
  CHECK(d.t() == 5);
  CHECK(d.k() == 6);

  REQUIRE(run("construct --family power-column --t 3 --q 5 --out b.json").code == 0);
  REQUIRE(run("convert --to aoa-from-oa --s 2 --in b.json --out f.json").code == 0);
  verifies("f.json");
  auto f = std::get<AugmentedOA>(load(file("f.json")));
  CHECK(f.s() == 2);
  CHECK(f.t() == 3);
  CHECK(f.k() == 5);
  CHECK(f.v() == 5);

  REQUIRE(run("convert --to roa --in a2343.json --out r.json").code == 0);
  verifies("r.json");
  REQUIRE(run("convert --to aoa --in r.json --out back.json").code == 0);
  verifies("back.json");
  REQUIRE(run("convert --to aoa-split --in b.json --out split.json").code == 0);
  verifies("split.json");
  CHECK(run("convert --to dual --in b.json --out no.json").code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const std::string args : {"construct --family plan --s 1 --t 3 --k 6 --v 15", "construct --family hyperoval --q 8",
                                 "dm search --n 9", "dm search --group Z6xZ2 --adder"}) {
    CAPTURE(args);
    REQUIRE(run(args + " --out one.json").code == 0);
    REQUIRE(run(args + " --out two.json").code == 0);
    CHECK(slurp(file("one.json")) == slurp(file("two.json")));
  }
  CHECK(run("gap-table --q 4,5").out == run("gap-table --q 4,5").out);
}

TEST_CASE("search, feasibility and the gap table") {
  auto s = run("dm search --n 9 --budget 10 --out dm9.json");
  REQUIRE(s.code == 0);
  verifies("dm9.json");
  auto dm = std::get<DifferenceMatrix>(load(file("dm9.json")));
  CHECK(oracle::is_product_dm(oracle::rows_of(dm.entries()), {3, 3}));
  REQUIRE(run("dm catalog --n 15 --out c15.json").code == 0);
  auto c = run("verify c15.json");
  CHECK(c.code == 0);
  CHECK(c.out.find("adder") != std::string::npos);
  {
    auto bare = std::get<DifferenceMatrix>(load(file("c15.json")));
    save(DifferenceMatrix(bare.group(), bare.entries()), file("bare15.json"));
  }
  REQUIRE(run("dm adder --in bare15.json --out with15.json").code == 0);
  verifies("with15.json");

  auto f = run("feasible --t 4 --k 8 --v 5");
  CHECK(f.code == 0);
  CHECK(f.out.rfind("RuledOut: column bound (max k = 7)", 0) == 0);
  CHECK(run("feasible --t 3 --k 6 --v 4").out.rfind("NotRuledOut", 0) == 0);
  CHECK(run("feasible --t 3 --k 6").code == 2);

  auto g = run("gap-table --q 4");
  CHECK(g.code == 0);
  CHECK(g.out.rfind("| family |", 0) == 0);
  auto csv = run("gap-table --q 4,5 --format csv --out gap.csv");
  CHECK(csv.code == 0);
  const auto text = slurp(file("gap.csv"));
  CHECK(std::count(text.begin(), text.end(), '\n') > 4);
  CHECK(run("gap-table --q 4,x").code == 2);
}
