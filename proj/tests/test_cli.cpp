#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zg/catalog.hpp"
#include "zg/io.hpp"

using namespace zg;

namespace {

const std::string kData = ZG_DATA_DIR;
const std::string kCli = ZG_CLI_PATH;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("ring files parse") {
  const auto H = parse_ring(read_file(kData + "/heisenberg.ring"));
  CHECK(H == rings::heisenberg().renamed("heisenberg"));
  const auto G = parse_ring(read_file(kData + "/gaussian.ring"));
  CHECK(G.kind() == AlgebraKind::unital);
  CHECK(G.nonzero_constants() == rings::quadratic_order(-1).nonzero_constants());
  try {
    parse_ring(read_file(kData + "/jacobi_violation.ring"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("Jacobi violation at") != std::string::npos);
  }
}

TEST_CASE("ring parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_ring(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("rank 2\nkind lie\ncolour blue\n") == 3);
  CHECK(line_of("rank 2\nkind lie\n1 2 3 1\n") == 3);
  CHECK(line_of("rank 2\nkind lie\n1 2 x 1\n") == 3);
  CHECK(line_of("rank 2\nkind lie\n\n# c\n1 2 2 1\n1 2 2 1\n") == 6);
  CHECK(line_of("rank 2\nkind ring\n") == 2);
  CHECK(line_of("kind lie\n") == 0);
  CHECK(line_of("rank 1\nkind unital\n1 1 1 1\n") == 0);
}

TEST_CASE("ring emit is canonical and round-trips byte-identically") {
  for (const auto& e : catalog()) {
    if (!e.ring) continue;
    const auto text = emit_ring(*e.ring);
    const auto back = parse_ring(text);
    CHECK(back == *e.ring);
    CHECK(emit_ring(back) == text);
  }
  const std::string messy = "# comment\nkind   lie\n  rank 3\nname h\n2 1 3 -1\n1 2 3 1\n1 1 1 0\n";
  const auto canon = emit_ring(parse_ring(messy));
  CHECK(canon == "name h\nrank 3\nkind lie\n1 2 3 1\n2 1 3 -1\n");
  CHECK(emit_ring(parse_ring(canon)) == canon);
}

TEST_CASE("cone, count and integral files") {
  const auto D = parse_cone(read_file(kData + "/toy.cone"));
  CHECK(D.dimension == 2);
  CHECK(D.nf == std::vector<IntRow>{{1, 0}, {1, 0}});
  CHECK(D.ng == std::vector<IntRow>{{0, 0}, {0, 1}});
  CHECK(parse_cone(emit_cone(D)).nf == D.nf);
  CHECK(emit_cone(parse_cone(emit_cone(D))) == emit_cone(D));
  CHECK_THROWS_AS(parse_cone("T 2 1\nN f_0 : 1 0\nN g_0 : 0 0\nnu : 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cone("T 2 0\nN f_0 : 1 0 4\nN g_0 : 0 0\nnu : 1 1\n"), ParseError);

  const auto G = parse_grc(read_file(kData + "/toy.grc"));
  CHECK(G.counts.size() == 4);
  CHECK(G.counts.at(0).at_prime(5, 0)[0] == 16);
  CHECK(parse_p_polynomial("p^-1+3").at_prime(2, 0)[0] == Rational(7, 2));
  CHECK_THROWS(parse_p_polynomial("p^"));
  CHECK_THROWS(parse_p_polynomial("2p+"));

  const auto C = parse_cint(read_file(kData + "/chi4_cone.cint"));
  const auto R = chi4_cone_integral_data();
  CHECK(C.variables == 3);
  CHECK(C.f0 == R.f0);
  CHECK(C.conditions == R.conditions);
  CHECK(emit_cint(parse_cint(emit_cint(C))) == emit_cint(C));
  CHECK_THROWS_AS(parse_cint("1:1,0\n"), ParseError);
}

TEST_CASE("catalog") {
  CHECK(catalog_entry("heisenberg").ring->rank() == 3);
  CHECK(*catalog_entry("heisenberg-squared").abscissa(ClosureKind::subring) == 4);
  CHECK(*catalog_entry("g-1-0").abscissa(ClosureKind::two_sided_ideal) == 2);
  CHECK_THROWS_AS(catalog_entry("nope"), std::out_of_range);
  for (const auto& c : verify_catalog(CatalogDepth::quick)) {
    CAPTURE(c.entry);
    CAPTURE(c.check);
    CHECK(c.passed);
  }
}

TEST_CASE("command line: outputs and exit codes") {
  const auto count = run("count --ring " + kData + "/heisenberg.ring --kind subring --nmax 4");
  CHECK(count.status == 0);
  CHECK(count.out == "n,count,kind,ring\n1,1,subring,heisenberg\n2,3,subring,heisenberg\n3,4,subring,heisenberg\n"
                     "4,19,subring,heisenberg\n");

  const auto local = run("local --ring heisenberg --kind ideal --p 2 --kmax 2");
  CHECK(local.status == 0);
  CHECK(local.out.rfind("p,k,coefficient,source\n2,0,1,oracle\n", 0) == 0);

  CHECK(run("count --ring " + kData + "/jacobi_violation.ring").status == 2);
  CHECK(run("count --nmax 3").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("count --ring no-such-ring").status == 2);
  CHECK(run("compare --ring l5 --ring2 heisenberg-squared --p 11 --kmax 2").status == 0);
  CHECK(run("compare --ring l5 --ring2 heisenberg-squared --p 2 --kmax 2").status == 1);
  CHECK(run("cone --datum " + kData + "/toy.cone --grc " + kData + "/toy.grc --p 3").status == 0);
  CHECK(run("stanley --phi=-1,1 --v 0 --truncation 8").status == 0);
  CHECK(run("integrate --data " + kData + "/chi4_cone.cint --p 5 --kmax 2 --target chi4-cone").status == 0);
  CHECK(run("integrate --ring heisenberg --p 2 --kmax 2").status == 0);
  CHECK(run("census --field -1 --bound 100").status == 0);
  CHECK(run("bounds --ring heisenberg").status == 0);
  CHECK(run("fit --ring heisenberg --p 3 --kmax 8 --shape \"1,0;1,1\" --num-degree 0").status == 1);
  CHECK(run("verify-catalog --depth quick").status == 0);
}

TEST_CASE("command line: output is independent of the worker count") {
  const auto a = run("--workers 1 count --ring heisenberg-times-z --kind subring --nmax 40");
  const auto b = run("--workers 4 count --ring heisenberg-times-z --kind subring --nmax 40");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  const auto dir = std::filesystem::temp_directory_path() / "zg_cli_test";
  std::filesystem::remove_all(dir);
  CHECK(run("--out " + dir.string() + " count --ring heisenberg --nmax 10").status == 0);
  CHECK(std::filesystem::exists(dir / "count_heisenberg_subring.csv"));
  std::filesystem::remove_all(dir);
}
