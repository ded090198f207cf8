#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "hypercat/cli.hpp"
#include "hypercat/series.hpp"

using namespace hypercat;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli_run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count command") {
  RunResult r = run({"count", "[m2=3]"});
  CHECK(r.status == 0);
  CHECK(r.out == "5\n");
  CHECK(run({"count", "[]"}).out == "1\n");

  RunResult j = run({"count", "[m2=3]", "--json"});
  CHECK(j.out == "{\"C\":\"5\",\"type\":{\"m2\":3}}\n");
}

TEST_CASE("vef command") {
  RunResult r = run({"vef", "[m2=1,m3=1]"});
  CHECK(r.status == 0);
  CHECK(r.out == "V=5 E=6 F=2\n");
  CHECK(run({"vef", "[m2=1,m3=1]", "--json"}).out == "{\"E\":6,\"F\":2,\"V\":5}\n");
}

TEST_CASE("enumerate command") {
  RunResult r = run({"enumerate", "--level", "face", "--d", "1", "--q", "3"});
  CHECK(r.status == 0);
  CHECK(r.out == "|\n(2;|,|)\n(3;|,|,|)\n");

  RunResult t = run({"enumerate", "--level", "face", "--d", "1", "--q", "3", "--types"});
  CHECK(t.out == "[]\n[m2=1]\n[m3=1]\n");

  RunResult j = run({"enumerate", "--level", "face", "--d", "1", "--q", "3", "--json"});
  CHECK(j.out == "[\"|\",\"(2;|,|)\",\"(3;|,|,|)\"]\n");
}

TEST_CASE("series command") {
  RunResult r = run({"series", "--level", "face", "--d", "2", "--q", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 + t2 + 2*t2^2\n");

  RunResult layered = run({"series", "--level", "face", "--d", "2", "--q", "2", "--layered"});
  CHECK(layered.out == "1 + t2*v*e^2*f + 2*t2^2*v^2*e^4*f^2\n");

  RunResult j = run({"series", "--level", "edge", "--d", "6", "--layered", "--json"});
  CHECK(j.status == 0);
  MultiPoly parsed = MultiPoly::from_json(j.out);
  CHECK(parsed == build_S_layered({LevelKind::edge, 6, std::nullopt}).poly);

  RunResult report = run({"series", "--level", "face", "--d", "1", "--q", "3", "--report"});
  CHECK(report.out.substr(0, 22) == "type,C,V,E,F,monomial\n");
  CHECK(report.out.find("[m2=1],1,3,3,1,t2*v*e^2*f\n") != std::string::npos);
}

TEST_CASE("verify command") {
  RunResult r = run({"verify", "--level", "face", "--d", "2", "--q", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "ZERO\n");

  RunResult j = run({"verify", "--level", "vertex", "--d", "4", "--json"});
  CHECK(j.status == 0);
  CHECK(j.out == "{\"residual\":[],\"zero\":true}\n");
}

TEST_CASE("solve command") {
  RunResult r = run({"solve", "--coeff", "2=1/5", "--level", "face", "--d", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "x = 1.280000000000\nresidual = 0.047680000000\n");

  RunResult j = run({"solve", "--coeff", "2=1/5", "--level", "face", "--d", "2", "--json"});
  CHECK(j.out.find("\"x\":\"32/25\"") != std::string::npos);
  CHECK(j.out.find("\"residual\":\"149/3125\"") != std::string::npos);

  RunResult table =
      run({"solve", "--coeff", "2=1/5", "--level", "face", "--d", "0", "--table", "2",
           "--digits", "4"});
  CHECK(table.out == "d,x,residual\n0,1.0000,0.2000\n1,1.2000,0.0880\n2,1.2800,0.0477\n");

  RunResult newton = run({"solve", "--coeff", "2=1/5", "--level", "face", "--d", "0",
                          "--newton", "--iters", "8", "--digits", "9"});
  CHECK(newton.out.substr(0, 15) == "x = 1.381966011");

  RunResult newton_json = run({"solve", "--coeff", "2=1/4", "--level", "face", "--d", "0",
                               "--newton", "--iters", "3", "--x0", "1", "--json"});
  CHECK(newton_json.out.find("\"method\":\"newton\"") != std::string::npos);
  CHECK(newton_json.out.find("\"x\":\"15/8\"") != std::string::npos);  // 1 -> 3/2 -> 7/4 -> 15/8

  RunResult table_json = run({"solve", "--coeff", "2=1/5", "--level", "face", "--d", "0",
                              "--table", "1", "--json"});
  CHECK(table_json.out.find("\"residual\":\"11/125\"") != std::string::npos);  // d=1 row
}

TEST_CASE("animate command writes frames") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "hypercat_cli_anim_test";
  std::filesystem::remove_all(dir);
  RunResult r = run({"animate", "(2;|,|)", "--frames", "3", "--out", dir.string(), "--smil"});
  CHECK(r.status == 0);
  CHECK(r.out == "wrote 12 frames to " + dir.string() + "\n");
  CHECK(std::filesystem::exists(dir / "frame_0000.svg"));
  CHECK(std::filesystem::exists(dir / "frame_0011.svg"));
  CHECK(!std::filesystem::exists(dir / "frame_0012.svg"));
  CHECK(std::filesystem::exists(dir / "animation.svg"));
  std::filesystem::remove_all(dir);

  RunResult j = run({"animate", "(2;|,|)", "--frames", "2", "--out", dir.string(), "--json"});
  CHECK(j.out == "{\"frames\":8,\"out\":\"" + dir.string() + "\",\"smil\":false}\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("identical invocations give byte-identical output") {
  std::vector<std::string> argv{"series", "--level", "edge", "--d", "6", "--layered",
                                "--json"};
  RunResult a = run(argv);
  RunResult b = run(argv);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("invalid input exits nonzero with a one-line diagnostic") {
  RunResult unknown = run({"frobnicate"});
  CHECK(unknown.status != 0);
  CHECK(unknown.err.find("error:") == 0);
  CHECK(unknown.err.find('\n') == unknown.err.size() - 1);

  RunResult bad_type = run({"count", "[m1=1]"});
  CHECK(bad_type.status == 2);
  CHECK(bad_type.err.find("error:") == 0);

  RunResult face_no_q = run({"verify", "--level", "face", "--d", "2"});
  CHECK(face_no_q.status == 2);
  CHECK(face_no_q.err.find("polygon bound") != std::string::npos);

  RunResult bad_subdigon = run({"animate", "(2;|)", "--out", "/tmp/unused_hypercat"});
  CHECK(bad_subdigon.status == 2);
}

TEST_CASE("guardrails refuse oversized requests unless forced") {
  RunResult refused = run({"series", "--level", "edge", "--d", "17"});
  CHECK(refused.status == 2);
  CHECK(refused.err.find("--force") != std::string::npos);

  RunResult forced = run({"series", "--level", "edge", "--d", "17", "--force"});
  CHECK(forced.status == 0);

  setenv("HYPERCAT_MAX_TYPES", "3", 1);
  RunResult env_refused = run({"series", "--level", "edge", "--d", "6"});
  CHECK(env_refused.status == 2);
  CHECK(env_refused.err.find("HYPERCAT_MAX_TYPES") != std::string::npos);
  unsetenv("HYPERCAT_MAX_TYPES");
  CHECK(run({"series", "--level", "edge", "--d", "6"}).status == 0);
}
