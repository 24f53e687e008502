#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "initrans/builtins.h"
#include "initrans/surface.h"

using namespace initrans;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(INITRANS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "initrans_cli_test";
  fs::create_directories(dir);
  fs::path f = dir / name;
  std::ofstream(f) << text;
  return f.string();
}

const char* kGoldenSource =
    "context ; (abs [Bool,Bool] (app [Bool,Bool] (app [Bool,arr(Bool,Bool)] "
    "(app [Bool,arr(Bool,arr(Bool,Bool))] (CondB) #0) (ffff)) (tttt)))\n";

}  // namespace

TEST(Cli, LangList) {
  auto r = run("lang list");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "languages: CPC IPC PCF STLC ULC\ntranslations: cpc2ipc-godel-gentzen pcf2ulc-curry pcf2ulc-turing\n");
}

TEST(Cli, LangShow) {
  auto r = run("lang show PCF");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_signature(r.out), get_language("PCF"));
  EXPECT_EQ(run("lang show XYZ").code, 2);
}

TEST(Cli, Check) {
  auto f = write_temp("golden.term", kGoldenSource);
  auto r = run("check --lang PCF " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ": arr(Bool,Bool)\n");
  auto sig = std::string(INITRANS_DATA_DIR) + "/languages/PCF.sig";
  EXPECT_EQ(run("check --sig " + sig + " " + f).out, ": arr(Bool,Bool)\n");
}

TEST(Cli, CheckFailures) {
  auto bad = write_temp("bad.term", "context ; (app [Bool,Nat] (Succ) (tttt))");
  EXPECT_EQ(run("check --lang PCF " + bad).code, 1);
  std::string both = std::string(INITRANS_CLI) + " check --lang PCF " + bad + " 2>&1";
  FILE* p = popen(both.c_str(), "r");
  char buf[512] = {};
  buf[fread(buf, 1, sizeof buf - 1, p)] = 0;
  pclose(p);
  EXPECT_NE(std::string(buf).find("expected arr(Bool,Nat), found arr(Nat,Nat)"), std::string::npos) << buf;
  EXPECT_EQ(run("check --lang PCF /nonexistent/file.term").code, 2);
  EXPECT_EQ(run("check --lang XYZ " + bad).code, 2);
  EXPECT_EQ(run("check").code, 2);
}

TEST(Cli, TranslateGolden) {
  auto f = write_temp("golden.term", kGoldenSource);
  auto turing = run("translate --using pcf2ulc-turing --style paper " + f);
  EXPECT_EQ(turing.code, 0);
  EXPECT_EQ(turing.out, "Abs (Abs (Abs (Abs (3 @ 2 @ 1))) @ 1 @ Abs (Abs 1) @ Abs (Abs 2))\n");
  EXPECT_EQ(run("translate --using pcf2ulc-curry --style paper " + f).out, turing.out);
  auto canonical = run("translate --using pcf2ulc-turing " + f);
  EXPECT_EQ(canonical.out, "(abs (app (app (app (abs (abs (abs (app (app #2 #1) #0)))) #0) (abs (abs #0))) (abs (abs #1))))\n");
}

TEST(Cli, TranslateFromFiles) {
  auto xlat = std::string(INITRANS_DATA_DIR) + "/translations/cpc2ipc-godel-gentzen.xlat";
  auto f = write_temp("em.term", "context ; (EM [p])\n");
  auto r = run("translate --xlat " + xlat + " " + f);
  EXPECT_EQ(r.code, 0);
  auto out = parse_term("context ; " + r.out, get_language("IPC"));
  EXPECT_EQ(to_string(out.type), "impl(and(impl(impl(impl(impl(p,bot),bot),impl(impl(bot,bot),bot)),bot),impl(impl(impl(p,bot),bot),bot)),bot)");
}

TEST(Cli, IdentityTranslationFile) {
  auto sig = write_temp("a.sig", "language A types { A : 0 } terms { c [0] : () -> A }\n");
  auto xlat = write_temp("id.xlat", "translation id from A to A types { A -> A } terms { c -> (c) }\n");
  auto f = write_temp("a.term", "context A ; #0\n");
  auto r = run("translate --sig " + sig + " --xlat " + xlat + " " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "#0\n");
  EXPECT_EQ(run("translate --xlat " + xlat + " " + f).code, 2);  // language A unknown without --sig
}

TEST(Cli, TranslateFailures) {
  auto f = write_temp("golden.term", kGoldenSource);
  EXPECT_EQ(run("translate --using nope " + f).code, 2);
  EXPECT_EQ(run("translate --using pcf2ulc-turing --style fancy " + f).code, 2);
  auto ill = write_temp("ill.term", "context ; (app [Nat,Nat] (tttt) (nats{1}))");
  EXPECT_EQ(run("translate --using pcf2ulc-turing " + ill).code, 1);
  auto em = write_temp("em.term", "context ; (EM [p])\n");
  EXPECT_EQ(run("translate --using cpc2ipc-godel-gentzen --style paper " + em).code, 2);
}

TEST(Cli, Laws) {
  auto a = run("laws --lang PCF --seed 1 --cases 1000");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, run("laws --lang PCF --seed 1 --cases 1000").out);
  auto t = run("laws --translation cpc2ipc-godel-gentzen --seed 1 --cases 500");
  EXPECT_EQ(t.code, 0) << t.out;
  EXPECT_NE(t.out.find("agreement"), std::string::npos);
  EXPECT_EQ(run("laws --lang XYZ").code, 2);
  EXPECT_EQ(run("laws --lang PCF --cases 0").code, 2);
  EXPECT_EQ(run("laws").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
