#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef CLI_BIN
#error "CLI_BIN must point at the spectacular binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("build summaries") {
  RunResult tri = run("build --q 2 --d 3");
  CHECK(tri.exit_code == 0);
  CHECK(tri.output.find("vertices 3, edges 3, polygons 1") != std::string::npos);

  RunResult pent = run("build --q 4 --d 5");
  CHECK(pent.exit_code == 0);
  CHECK(pent.output.find("polygons 6") != std::string::npos);
  CHECK(pent.output.find("6x5-gon") != std::string::npos);

  RunResult final = run("build --q 8 --d 7 --subdivide 5");
  CHECK(final.exit_code == 0);
  CHECK(final.output.find("vertices 153, edges 180, polygons 28") != std::string::npos);
  CHECK(final.output.find("girth 15") != std::string::npos);
  CHECK(final.output.find("28x35-gon") != std::string::npos);
}

TEST_CASE("build then verify and homology") {
  std::string k_path = temp_path("spectacular_k.json");
  std::string k1_path = temp_path("spectacular_k1.json");
  REQUIRE(run("build --q 8 --d 7 --subdivide 5 --out " + k_path).exit_code == 0);
  REQUIRE(run("build --q 8 --d 7 --stage k1 --out " + k1_path).exit_code == 0);

  RunResult verify = run("verify --in " + k_path);
  CHECK(verify.exit_code == 0);
  CHECK(verify.output.find("spectacular: yes") != std::string::npos);

  RunResult hom = run("homology --in " + k1_path);
  CHECK(hom.exit_code == 0);
  CHECK(hom.output.find("betti 1 0 8") != std::string::npos);

  std::remove(k1_path.c_str());

  SECTION("verify fails with exit 1 on a non-spectacular complex") {
    std::string ngon = temp_path("spectacular_13gon.json");
    std::ofstream f(ngon);
    f << R"({"vertices":[0,1,2,3,4,5,6,7,8,9,10,11,12],)"
      << R"("edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8],[8,9],[9,10],[10,11],[11,12],[0,12]],)"
      << R"("polygons":[[0,1,2,3,4,5,6,7,8,9,10,11,12]]})";
    f.close();
    RunResult v = run("verify --in " + ngon);
    CHECK(v.exit_code == 1);
    CHECK(v.output.find("FAIL  [5]") != std::string::npos);
    std::remove(ngon.c_str());
  }
  SECTION("malformed input gives exit 2") {
    std::string bad = temp_path("spectacular_bad.json");
    std::ofstream f(bad);
    f << "{ not json";
    f.close();
    CHECK(run("verify --in " + bad).exit_code == 2);
    CHECK(run("homology --in " + bad).exit_code == 2);
    std::remove(bad.c_str());
  }
  SECTION("homology of K2 and of the (4,3) projective plane") {
    RunResult k2 = run("build --q 8 --d 7 --out " + temp_path("spectacular_k2.json"));
    REQUIRE(k2.exit_code == 0);
    RunResult hom2 = run("homology --in " + temp_path("spectacular_k2.json"));
    CHECK(hom2.exit_code == 0);
    CHECK(hom2.output.find("betti 1 0 0") != std::string::npos);
    CHECK(hom2.output.find("acyclic: yes") != std::string::npos);
    std::remove(temp_path("spectacular_k2.json").c_str());

    std::string proj = temp_path("spectacular_proj.json");
    REQUIRE(run("build --q 3 --d 4 --stage k1 --out " + proj).exit_code == 0);
    RunResult homp = run("homology --in " + proj);
    CHECK(homp.output.find("H1 torsion: 2") != std::string::npos);
    std::remove(proj.c_str());
  }
  SECTION("dot export") {
    RunResult dot = run("build --q 2 --d 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("graph") == 0);
    CHECK(dot.output.find("0 -- 1") != std::string::npos);
  }
  SECTION("presentation, reduction and R-sets") {
    RunResult pres = run("present --in " + k_path + " --window 1 --s \"\"");
    CHECK(pres.exit_code == 0);
    CHECK(pres.output.find("28 relators") != std::string::npos);
    CHECK(pres.output.find("certificate: valid") != std::string::npos);

    RunResult checked = run("present --in " + k_path + " --window 1,2 --s 2 --check");
    CHECK(checked.exit_code == 0);
    CHECK(checked.output.find("29 relators") != std::string::npos);
    CHECK(checked.output.find("exhaustive C'(1/6) check: pass") != std::string::npos);

    RunResult bad_s = run("present --in " + k_path + " --window 1,2 --s 3");
    CHECK(bad_s.exit_code == 2);

    RunResult red = run("reduce --in " + k_path + " --window 1,2 --s \"\" --word \"e0_9 ~e0_9\"");
    CHECK(red.exit_code == 0);
    CHECK(red.output.find("trivial: yes") != std::string::npos);

    RunResult red_json =
        run("reduce --in " + k_path + " --window 1,2 --s \"\" --word \"e0_9 ~e0_9\" --format json");
    CHECK(red_json.exit_code == 0);
    CHECK(red_json.output.find("\"trivial\": true") != std::string::npos);
    CHECK(red_json.output.find("\"steps\"") != std::string::npos);

    RunResult pres_dot = run("present --in " + k_path + " --window 1 --s \"\" --format dot");
    CHECK(pres_dot.exit_code == 0);
    CHECK(pres_dot.output.find("graph relator_27") != std::string::npos);

    RunResult rset = run("rset --in " + k_path + " --window 1,2 --s 2 --range -2..2");
    CHECK(rset.exit_code == 0);
    CHECK(rset.output.find("R = {0,2}") != std::string::npos);
  }
  SECTION("reduction is refused when C'(1/6) cannot be established") {
    // unsubdivided K2 has girth 3; the window {1,2} mixes degrees and the
    // cross-degree pieces get too long for the heptagons
    std::string raw = temp_path("spectacular_raw.json");
    REQUIRE(run("build --q 8 --d 7 --out " + raw).exit_code == 0);
    RunResult refused = run("reduce --in " + raw + " --window 1,2 --s \"\" --word \"e0_1\"");
    CHECK(refused.exit_code == 1);
    CHECK(refused.output.find("refused") != std::string::npos);
    std::remove(raw.c_str());
  }
  std::remove(k_path.c_str());
}

TEST_CASE("build flags: epsilon and class selection") {
  CHECK(run("build --q 8 --d 7 --epsilon -1").exit_code == 0);
  CHECK(run("build --q 8 --d 7 --epsilon 1").exit_code == 1);   // 7 divides q-1
  CHECK(run("build --q 8 --d 7 --class-index 2").exit_code == 0);
  CHECK(run("build --q 8 --d 7 --class-index 3").exit_code == 1);
}

TEST_CASE("window range syntax") {
  std::string k_path = temp_path("spectacular_range.json");
  REQUIRE(run("build --q 8 --d 7 --subdivide 5 --out " + k_path).exit_code == 0);
  RunResult pres = run("present --in " + k_path + " --window 1..3 --s 2");
  CHECK(pres.exit_code == 0);
  CHECK(pres.output.find("57 relators") != std::string::npos);
  std::remove(k_path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("build --q 7 --d 9").exit_code == 1);   // 9 divides neither 6 nor 8
  CHECK(run("build --q 12 --d 3").exit_code == 2);  // 12 is not a prime power
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("reduce --in nowhere.json --window 1 --word a").exit_code == 2);
}
