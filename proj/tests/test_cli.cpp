// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "testutil.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the real binary; stdout+stderr captured through a temp file.
CliResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path capture = fs::temp_directory_path() / ("seedsel_cli_out_" + std::to_string(counter++));
  std::string cmd = std::string(SEEDSEL_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  fs::remove(capture);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, buf.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string manifest() { return seedsel::testutil::fixture_path("toy/manifest.txt"); }

fs::path temp_out(const std::string& name) {
  return fs::temp_directory_path() / ("seedsel_cli_" + name);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("select reproduces the committed golden ranking byte for byte") {
  auto out = temp_out("golden.rank");
  auto r = run_cli("select --corpus " + manifest() +
                   " --method sng3 --ref-lang alfa --ref-lang beta --budget-words 150 --out " +
                   out.string());
  CAPTURE(r.out);
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(out.string()) ==
        slurp(seedsel::testutil::fixture_path("golden/sng3_alfa_beta.rank")));
  CHECK(r.out.find("lines=25") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("identical invocations give identical bytes, engines and jobs included") {
  auto out1 = temp_out("d1.rank");
  auto out2 = temp_out("d2.rank");
  std::string base = "select --corpus " + manifest() +
                     " --method sng --order 4 --ref-lang epsi --budget-span head --out ";
  REQUIRE(run_cli(base + out1.string()).exit_code == 0);
  REQUIRE(run_cli(base + out2.string() + " --jobs 3").exit_code == 0);
  CHECK(slurp(out1.string()) == slurp(out2.string()));
  REQUIRE(run_cli(base + out2.string() + " --engine naive").exit_code == 0);
  CHECK(slurp(out1.string()) == slurp(out2.string()));
  fs::remove(out1);
  fs::remove(out2);
}

TEST_CASE("random baseline replays from its recorded seed") {
  auto out1 = temp_out("r1.rank");
  auto out2 = temp_out("r2.rank");
  std::string base = "select --corpus " + manifest() +
                     " --method rand --seed 7 --budget-words 100 --budget-lang gama --out ";
  REQUIRE(run_cli(base + out1.string()).exit_code == 0);
  REQUIRE(run_cli(base + out2.string()).exit_code == 0);
  CHECK(slurp(out1.string()) == slurp(out2.string()));
  CHECK(slurp(out1.string()) == slurp(seedsel::testutil::fixture_path("golden/rand_seed7.rank")));
  fs::remove(out1);
  fs::remove(out2);
}

TEST_CASE("luke excerpt runs off the named span") {
  auto out = temp_out("luke.rank");
  auto r = run_cli("select --corpus " + manifest() + " --method luke --budget-lang alfa --out " +
                   out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("lines=50") != std::string::npos);  // the luke span is 50 lines
  fs::remove(out);
}

TEST_CASE("aggregated methods run from corpus metadata") {
  auto out = temp_out("agg.rank");
  auto r = run_cli("select --corpus " + manifest() +
                   " --method aggN --order 3 --target zeta --budget-words 120 --out " +
                   out.string());
  CAPTURE(r.out);
  REQUIRE(r.exit_code == 0);
  std::string text = slurp(out.string());
  CHECK(text.find("#method=aggN3") != std::string::npos);
  CHECK(text.find("#params=order=3,policy=neighbor,target=zeta") != std::string::npos);
  CHECK(text.find("#ref_languages=alfa,beta,gama") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("unknown method fails with a diagnostic and writes nothing") {
  auto out = temp_out("nope.rank");
  fs::remove(out);
  auto r = run_cli("select --corpus " + manifest() + " --method mystery --budget-words 10 --out " +
                   out.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("unknown method") != std::string::npos);
  CHECK(r.out.find("sng2..sng5") != std::string::npos);
  CHECK_FALSE(fs::exists(out));
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
}

TEST_CASE("evaluate scores identical files at 100") {
  auto hyp = temp_out("hyp.txt");
  {
    std::ofstream f(hyp);
    f << "one two three\nfour five six\n";
  }
  auto r = run_cli("evaluate --hyp " + hyp.string() + " --ref " + hyp.string() + " --metric all");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("chrf\t100\tmax_n=6,beta=2") != std::string::npos);
  CHECK(r.out.find("bleu\t100") != std::string::npos);
  fs::remove(hyp);
}

TEST_CASE("evaluate with centeredness emits a combined stream then one score") {
  auto ref = temp_out("ref.txt");
  auto h1 = temp_out("h1.txt");
  auto h2 = temp_out("h2.txt");
  auto h3 = temp_out("h3.txt");
  auto combined = temp_out("combined.txt");
  {
    std::ofstream(ref.string()) << "the cat sat\nbirds fly high\n";
    std::ofstream(h1.string()) << "the cat sat\nbirds fly\n";
    std::ofstream(h2.string()) << "the cat sat\nbird fly high\n";
    std::ofstream(h3.string()) << "a dog stood\nbirds fly\n";
  }
  auto r = run_cli("evaluate --hyp " + h1.string() + " --hyp " + h2.string() + " --hyp " +
                   h3.string() + " --ref " + ref.string() +
                   " --combine centeredness --combined-out " + combined.string());
  CAPTURE(r.out);
  REQUIRE(r.exit_code == 0);
  // line 1: h1 and h2 duplicate "the cat sat", so it wins; line 2: "birds fly"
  // appears twice across candidates
  CHECK(slurp(combined.string()) == "the cat sat\nbirds fly\n");
  CHECK(r.out.find("chrf\t") != std::string::npos);
  for (auto p : {ref, h1, h2, h3, combined}) fs::remove(p);
}

TEST_CASE("evaluate rejects misaligned files") {
  auto a = temp_out("a.txt");
  auto b = temp_out("b.txt");
  std::ofstream(a.string()) << "one\ntwo\n";
  std::ofstream(b.string()) << "one\n";
  auto r = run_cli("evaluate --hyp " + a.string() + " --ref " + b.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("LengthMismatch") != std::string::npos);
  auto r2 = run_cli("evaluate --hyp " + a.string() + " --ref /nonexistent/ref.txt");
  CHECK(r2.exit_code == 1);
  fs::remove(a);
  fs::remove(b);
}

TEST_CASE("intersect emits a spec excluding every ranking line") {
  auto rank = temp_out("int.rank");
  auto spec = temp_out("int.spec");
  REQUIRE(run_cli("select --corpus " + manifest() +
                  " --method sn --ref-lang alfa --budget-words 60 --out " + rank.string())
              .exit_code == 0);
  auto r = run_cli("evaluate --intersect --corpus " + manifest() + " --ranking " + rank.string() +
                   " --ranking " + rank.string() + " --out " + spec.string());
  REQUIRE(r.exit_code == 0);
  std::string text = slurp(spec.string());
  CHECK(text.find("#seedsel_test_set=1") != std::string::npos);
  CHECK(r.out.find("included=") != std::string::npos);
  fs::remove(rank);
  fs::remove(spec);
}

TEST_CASE("schedule list prints 24 rows") {
  auto r = run_cli("schedule list");
  REQUIRE(r.exit_code == 0);
  int rows = 0;
  for (char c : r.out) rows += c == '\n';
  CHECK(rows == 24);
  CHECK(r.out.find("I: m2m100,n_x_n,np1_x_np1,np1_to_1,autoencoder\n") != std::string::npos);
  CHECK(r.out.find("X: m2m100\n") != std::string::npos);
}

TEST_CASE("schedule emit matches the committed golden manifest") {
  auto out = temp_out("sched.txt");
  auto r = run_cli("schedule emit I --target frisian --metadata " +
                   std::string(SEEDSEL_DATA_DIR) + "/languages.csv --out " + out.string());
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(out.string()) ==
        slurp(seedsel::testutil::fixture_path("golden/schedule_I_frisian.txt")));
  fs::remove(out);
}

TEST_CASE("schedule emit rejects unknown labels with the valid range") {
  auto out = temp_out("schedz.txt");
  auto r = run_cli("schedule emit Z --target frisian --sources a,b --out " + out.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("A..X") != std::string::npos);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("inspect reports span word counts") {
  auto r = run_cli("inspect --corpus " + manifest() + " --span luke --lang alfa");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("span=luke lang=alfa words=") != std::string::npos);
  auto r2 = run_cli("inspect --corpus " + manifest());
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out.find("corpus_checksum=95ad0bd714dafe9b") != std::string::npos);
}

TEST_SUITE_END();
