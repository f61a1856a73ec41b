// Copyright 2026 The qit developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string cli_path() {
  const char* env = std::getenv("QIT_CLI_BIN");
  REQUIRE_MESSAGE(env != nullptr, "QIT_CLI_BIN must point at the qit binary");
  return env;
}

RunResult run_raw(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) {
  return run_raw(cli_path() + " " + args + " 2>&1");
}

}  // namespace

TEST_CASE("teleport succeeds with exit code 0 and fidelity 1") {
  const RunResult r = run("teleport --bits 1 --dim 2 --trials 20 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("min fidelity: 1") != std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("teleport with dropped correction reports the Z/X split") {
  const RunResult r = run("teleport --bits 1 --dim 2 --trials 10 --seed 3 --drop-correction");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Z information present at output: yes") != std::string::npos);
  CHECK(r.output.find("X information absent from output: yes") != std::string::npos);
}

TEST_CASE("two-bit qutrit teleport works") {
  const RunResult r = run("teleport --bits 2 --dim 3 --trials 10 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("min fidelity: 1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("teleport --bits 7").exit_code == 2);
  CHECK(run("teleport --dim 1").exit_code == 2);
  CHECK(run("check bogus-theorem").exit_code == 2);
  CHECK(run("interferometer --lambda 1.5").exit_code == 2);
  CHECK(run("analyze --state /nonexistent.json").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("teleport --help").exit_code == 0);
}

TEST_CASE("check runs a sweep and exits 0 on success") {
  const RunResult r = run("check presence --dim 2 --trials 5 --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("5 pass, 0 vacuous, 0 fail") != std::string::npos);
}

TEST_CASE("check absence-general with two bases shows the counterexample") {
  const RunResult r = run("check absence-general --dim 2 --bases zy");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("rank 3 of 4") != std::string::npos);
  CHECK(r.output.find("hypothesis rejection expected") != std::string::npos);
}

TEST_CASE("structured check output is byte-identical across reruns") {
  const std::string cmd = "check exclusion --dim 2 --trials 6 --seed 42 --format structured";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"schema_version\": 1") != std::string::npos);

  const RunResult c = run("check exclusion --dim 2 --trials 6 --seed 43 --format structured");
  CHECK(a.output != c.output);
}

TEST_CASE("interferometer endpoints through the CLI") {
  const RunResult r0 = run("interferometer --lambda 0");
  CHECK(r0.exit_code == 0);
  CHECK(r0.output.find("Pr[h] = 1") != std::string::npos);
  const RunResult r1 = run("interferometer --lambda 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output.find("Pr[g] = 0.5") != std::string::npos);
  CHECK(r1.output.find("which-way information in environment: present") != std::string::npos);
  CHECK(r1.output.find("coherence information in particle: absent") != std::string::npos);
  const RunResult rhalf = run("interferometer --lambda 0.5");
  CHECK(rhalf.exit_code == 0);
  CHECK(rhalf.output.find("neither") != std::string::npos);
  CHECK(rhalf.output.find("outside the strong-decoherence regime") != std::string::npos);
}

TEST_CASE("fixtures plus analyze reproduce the shared-X property list") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qit_cli_fixtures";
  fs::remove_all(dir);
  const RunResult w = run("fixtures --dir " + dir.string());
  REQUIRE(w.exit_code == 0);
  REQUIRE(fs::exists(dir / "shared_x.json"));

  const RunResult a =
      run("analyze --state " + (dir / "shared_x.json").string() + " --shape 2,2,2");
  CHECK(a.exit_code == 0);
  // X present in both single qubits, Y and Z absent from both
  CHECK(a.output.find("x:") != std::string::npos);
  const auto count = [&](const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = a.output.find(needle, pos)) != std::string::npos) {
      ++n;
      pos += needle.size();
    }
    return n;
  };
  CHECK(count(": present") >= 3);  // x in factor 1, factor 2, and the joint rest
  CHECK(count(": absent") >= 4);   // y and z in each single factor
  CHECK(a.output.find("all information about factor 0 in the rest: yes") != std::string::npos);

  const RunResult bell = run("analyze --state " + (dir / "bell2.json").string());
  CHECK(bell.exit_code == 0);
  CHECK(bell.output.find("neither") == std::string::npos);

  const RunResult prod = run("analyze --state " + (dir / "product_zplus.json").string());
  CHECK(prod.exit_code == 0);
  CHECK(prod.output.find(": present") == std::string::npos);

  fs::remove_all(dir);
}

TEST_CASE("analyze handles operator documents and user decomposition files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qit_cli_analyze";
  fs::remove_all(dir);
  REQUIRE(run("fixtures --dir " + dir.string()).exit_code == 0);

  // density-operator input: the two-qubit shared-X marginal
  const RunResult op = run("analyze --state " + (dir / "shared_x_ab.json").string());
  CHECK(op.exit_code == 0);
  CHECK(op.output.find("operator, dim 4") != std::string::npos);
  CHECK(op.output.find(": present") != std::string::npos);  // X correlation survives
  CHECK(op.output.find(": absent") != std::string::npos);   // Z and Y do not

  // user-supplied decomposition: the coarse {I} "ask nothing" type
  const std::string decomp_path = (dir / "trivial.json").string();
  std::ofstream(decomp_path)
      << R"({"kind":"decomposition","dim":2,"labels":["all"],"projectors":[)"
      << R"({"kind":"operator","dim":2,"entries":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[1.0,0.0]]}]})";
  const RunResult dec = run("analyze --state " + (dir / "bell2.json").string() +
                            " --decomp " + decomp_path);
  CHECK(dec.exit_code == 0);
  CHECK(dec.output.find("trivial") != std::string::npos);
  CHECK(dec.output.find("not strongly incompatible") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("a tolerance below double precision makes sweeps fail with exit code 1") {
  const RunResult r = run("check presence --dim 2 --trials 4 --seed 9 --tol 1e-18");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("FAIL") != std::string::npos);
}

TEST_CASE("two-bit drop-correction splits the same way") {
  const RunResult r = run("teleport --bits 2 --dim 2 --trials 5 --seed 3 --drop-correction");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("Z information present at output: yes") != std::string::npos);
  CHECK(r.output.find("X information absent from output: yes") != std::string::npos);
}

TEST_CASE("analyze accepts a shape mismatch only with exit code 2") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qit_cli_fixtures2";
  fs::remove_all(dir);
  REQUIRE(run("fixtures --dir " + dir.string()).exit_code == 0);
  const RunResult r =
      run("analyze --state " + (dir / "bell2.json").string() + " --shape 3,3");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("QIT_TOL environment variable sets the default tolerance") {
  const std::string cmd = " check presence --dim 2 --trials 3 --seed 2 --format structured 2>&1";
  const RunResult dflt = run_raw(cli_path() + cmd);
  CHECK(dflt.output.find("\"tolerance\": 1e-10") != std::string::npos);
  const RunResult loose = run_raw("env QIT_TOL=1e-6 " + cli_path() + cmd);
  CHECK(loose.output.find("\"tolerance\": 1e-06") != std::string::npos);
  // invalid values fall back to the default with a warning
  const RunResult bad = run_raw("env QIT_TOL=banana " + cli_path() + cmd);
  CHECK(bad.output.find("\"tolerance\": 1e-10") != std::string::npos);
  CHECK(bad.output.find("warning") != std::string::npos);
}
