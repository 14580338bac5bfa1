#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run shell(const std::string& cmd) {
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// stderr is folded into out when asked.
Run cli(const std::string& args, bool with_stderr = false) {
  return shell(std::string(ARITHMOS_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null"));
}

std::string proofs(const char* name) { return std::string(ARITHMOS_PROOFS) + "/" + name; }

}  // namespace

TEST(Cli, Encode) {
  auto r = cli("encode '~(v1_2(v1_1))' --factored");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2^5 * 3^11 * 5^289 * 7^11 * 11^17 * 13^13 * 17^13\n");
  EXPECT_EQ(cli("--factored encode 'v1_2(v1_1)'").out, "2^289 * 3^11 * 5^17 * 7^13\n");
  auto bad = cli("encode 'v1_2('", true);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("error:"), std::string::npos);
}

TEST(Cli, EncodeFromStdin) {
  auto r = shell("echo 'v1_2(v1_1)' | " + std::string(ARITHMOS_CLI) + " encode - --factored");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2^289 * 3^11 * 5^17 * 7^13\n");
}

TEST(Cli, DecodeAndWff) {
  EXPECT_EQ(cli("decode '2^289 * 3^11 * 5^17 * 7^13'").out, "v1_2(v1_1)\n");
  EXPECT_EQ(cli("decode 7500000000000").out, "sequence: 11 1 13\n");
  auto w = cli("wff '2^289 * 3^11 * 5^17 * 7^13'");
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out, "formula: v1_2(v1_1)\n");
  auto n = cli("wff 10");
  EXPECT_EQ(n.code, 1);
  EXPECT_EQ(n.out, "not a formula\n");
}

TEST(Cli, Relation) {
  EXPECT_EQ(cli("relation 7 1944").out, "2\n");
  EXPECT_EQ(cli("relation 8 8 32").out, "1944\n");
  EXPECT_EQ(cli("relation 8 8 32 --literal").out, "1944\n");
  auto t = cli("relation 1 12 4");
  EXPECT_EQ(t.out, "true\n");
  EXPECT_EQ(t.code, 0);
  auto f = cli("relation 2 12");
  EXPECT_EQ(f.out, "false\n");
  EXPECT_EQ(f.code, 1);
  EXPECT_EQ(cli("relation 46 1").code, 2);
  EXPECT_EQ(cli("relation 7 1 2").code, 2);
  EXPECT_EQ(cli("relation 99 1").code, 2);
  auto list = cli("relation --list");
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 52);
}

TEST(Cli, WorkCeilingFromEnvironment) {
  EXPECT_EQ(cli("relation 4 10 --literal --decimal").out, "3628800\n");
  auto r = shell("ARITHMOS_WORK_CEILING=3 " + std::string(ARITHMOS_CLI) + " relation 4 10 --literal 2>&1");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("work ceiling"), std::string::npos);
}

TEST(Cli, SubAndDiag) {
  EXPECT_EQ(cli("sub 'v1_2(v1_1)' v1_1 ff0").out, "2^289 * 3^11 * 5^3 * 7^3 * 11^1 * 13^13\n");
  auto d = cli("diag 'ALL v1_2 (~(v1_2(v1_1)))'");
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out.rfind("2^289 * 3^9 * ", 0), 0u);
  EXPECT_EQ(cli("diag '~(v1_2(v1_1))'").code, 1);
  auto big = cli("diag 'ALL v1_2 (~(v1_2(v1_1)))' --decimal", true);
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.out.find("too large"), std::string::npos);
}

TEST(Cli, CheckProof) {
  auto ok = cli("check-proof " + proofs("gen2.proof"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "1: OK axiom A1\n2: OK gen 1 v1_1\n");
  auto four = cli("check-proof " + proofs("gen4.proof"));
  EXPECT_EQ(four.code, 0);
  EXPECT_EQ(four.out, "1: OK axiom A1\n2: OK gen 1 v1_1\n3: OK axiom L1\n4: OK mp 3 2\n");

  auto tmp = std::filesystem::temp_directory_path() / "arithmos_mutated.proof";
  {
    std::ifstream in(proofs("gen2.proof"));
    std::ofstream out(tmp);
    for (std::string line; std::getline(in, line);)
      out << (line.rfind("2:", 0) == 0 ? "2: v1_2(v1_1)" : line) << "\n";
  }
  auto bad = cli("check-proof " + tmp.string());
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("2: FAIL"), std::string::npos);
  std::filesystem::remove(tmp);
  EXPECT_EQ(cli("check-proof /nonexistent/file.proof").code, 2);
}

TEST(Cli, Enumerate) {
  auto r = cli("enumerate --count 2 --show");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("5247", 0), 0u);
  EXPECT_NE(r.out.find("v1_2(0)"), std::string::npos);
  EXPECT_NE(r.out.find("5814"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, SearchAndOmegaScan) {
  auto r = cli("search-prov '((v1_2(v1_1)) | (v1_2(v1_1))) -> (v1_2(v1_1))' --budget 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("found: "), std::string::npos);
  EXPECT_NE(r.out.find("lines: 1"), std::string::npos);
  auto none = cli("search-prov 'v1_2(v1_1)' --budget 3");
  EXPECT_EQ(none.code, 1);
  EXPECT_NE(none.out.find("exhausted: "), std::string::npos);
  auto o = cli("omega-scan 'ALL v1_2 (v1_2(v1_1))' --var v1_1 -K 1 --budget 2");
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("omega_witness: false"), std::string::npos);
}

TEST(Cli, Constants) {
  auto r = cli("constants");
  EXPECT_EQ(r.code, 0);
  for (const char* key : {"z1: ", "z2: ", "z3: ", "z4: ", "z1_formula: "}) EXPECT_NE(r.out.find(key), std::string::npos) << key;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
  EXPECT_EQ(cli("decode notanumber").code, 2);
}
