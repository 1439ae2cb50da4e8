#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(EPSCALC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string corpus(const std::string& rel) { return std::string(EPSCALC_CORPUS_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("check parses theories") {
  RunResult r = run("check --theory " + corpus("base.eps"));
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("verify accepts the epsilon introduction proof") {
  RunResult r =
      run("verify --theory " + corpus("base.eps") + " --proof " + corpus("proofs/eps_i.prf"));
  CHECK(r.code == 0);
  CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("verify emits per-node json verdicts") {
  RunResult r = run("verify --theory " + corpus("base.eps") + " --proof " +
                    corpus("proofs/eps_i.prf") + " --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"node\":\"root\"") != std::string::npos);
  CHECK(r.out.find("\"rule\":\"eps-i\"") != std::string::npos);
  CHECK(r.out.find("\"verdict\":\"ok\"") != std::string::npos);
  RunResult alias = run("verify --theory " + corpus("base.eps") + " --proof " +
                        corpus("proofs/eps_i.prf") + " --report json");
  CHECK(alias.out == r.out);
}

TEST_CASE("verify rejects broken proofs with exit 1") {
  std::string bad = std::string(EPSCALC_TEST_DATA_DIR) + "/bad_conjunct.prf";
  RunResult r = run("verify --theory " + corpus("base.eps") + " --proof " + bad);
  CHECK(r.code == 1);
  CHECK(r.out.find("conjunct") != std::string::npos);
}

TEST_CASE("parse errors exit 65") {
  std::string bad = std::string(EPSCALC_TEST_DATA_DIR) + "/bad_syntax.eps";
  RunResult r = run("check --theory " + bad);
  CHECK(r.code == 65);
  CHECK(r.out.find("line") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run("verify --theory").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("verify").code == 64);  // missing required options
}

TEST_CASE("holds evaluates sequents in a model") {
  std::string base = " --theory " + corpus("base.eps") + " --model " + corpus("models/a2.fin");
  RunResult yes = run("holds" + base + " --sequent \"[] | exists x:A. P(x) |- P(eps x:A. P(x))\"");
  CHECK(yes.code == 0);
  CHECK(yes.out.find("holds") != std::string::npos);
  RunResult no = run("holds" + base + " --sequent \"[] | |- forall x:A. P(x)\"");
  CHECK(no.code == 1);
  RunResult json = run("holds" + base + " --sequent \"[] | |- true\" --json");
  CHECK(json.out.find("\"verdict\":\"holds\"") != std::string::npos);
}

TEST_CASE("holds refuses non-degenerate models of empty-type theories") {
  RunResult r = run("holds --theory " + corpus("empty.eps") + " --model " +
                    corpus("models/empty_big.fin") + " --sequent \"[] | |- true\"");
  CHECK(r.code == 1);
  CHECK(r.out.find("refused") != std::string::npos);
  RunResult deg = run("holds --theory " + corpus("empty.eps") + " --model " +
                      corpus("models/empty_deg.fin") + " --sequent \"[] | |- true\"");
  CHECK(deg.code == 0);
}

TEST_CASE("epsilon prints the table") {
  RunResult r = run("epsilon --theory " + corpus("base.eps") + " --model " +
                    corpus("models/a2.fin") + " --formula \"eps x:A. P(x)\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("[1]") != std::string::npos);
  RunResult ctx = run("epsilon --theory " + corpus("rel2.eps") + " --model " +
                      std::string(EPSCALC_TEST_DATA_DIR) + "/rel2_a3.fin" +
                      " --formula \"eps x:A. R(y, x)\" --context \"y:A\" --json");
  CHECK(ctx.code == 0);
  CHECK(ctx.out.find("\"table\":[1,0,0]") != std::string::npos);
}

TEST_CASE("audit reports models and exits by verdict") {
  RunResult r = run("audit --theory " + corpus("base.eps") + " --proof " +
                    corpus("proofs/eps_i.prf") + " --max-carrier 3 --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"models\":228") != std::string::npos);
  CHECK(r.out.find("\"verdict\":\"pass\"") != std::string::npos);
  SUBCASE("tiny budgets truncate with exit 2") {
    RunResult t = run("audit --theory " + corpus("base.eps") + " --proof " +
                      corpus("proofs/eps_i.prf") + " --max-carrier 3 --budget 2");
    CHECK(t.code == 2);
    CHECK(t.out.find("truncated") != std::string::npos);
  }
}

TEST_CASE("laws run deterministically") {
  RunResult a = run("laws --max-size 2 --json");
  RunResult b = run("laws --max-size 2 --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"law\":\"adjunction\"") != std::string::npos);
  CHECK(a.out.find("\"verdict\":\"fail\"") == std::string::npos);
}

TEST_CASE("countermodel search from the command line") {
  RunResult r = run("countermodel --theory " + corpus("base.eps") +
                    " --sequent \"[] | |- forall x:A. P(x)\" --max-carrier 2 --json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\":\"countermodel\"") != std::string::npos);
  RunResult none = run("countermodel --theory " + corpus("base.eps") +
                       " --sequent \"x:A | P(x) |- P(x)\" --max-carrier 2");
  CHECK(none.code == 0);
  CHECK(none.out.find("none") != std::string::npos);
}
