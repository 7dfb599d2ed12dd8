#include "polylist/cli/commands.hpp"
#include "polylist/cli/instance.hpp"
#include "polylist/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace polylist;
using namespace polylist::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polylist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Run adjoint_text(const std::string& text) {
  std::ostringstream out, err;
  const int code = cmd_adjoint_text(text, out, err);
  return {code, out.str(), err.str()};
}

const std::string sample_path = std::string(POLYLIST_TEST_DATA) + "/sample.inst";

const char* sample_report =
    "h(p) = [a,b]\n"
    "h(q) = []\n"
    "h(r) = [a]\n"
    "EXISTENCE PASS\n"
    "UNIQUENESS PASS 1 solution of 8 candidates\n";

}  // namespace

TEST_CASE("instance file parsing") {
  const InstanceFile f = parse_instance(
      "# comment\n"
      "X = {a, b}   # trailing\n"
      "A = {p, q}\n"
      "lA: p -> 1,\n"
      "    q -> 0\n"
      "g: (0, p) -> b\n");
  CHECK(f.x_names == std::vector<std::string>{"a", "b"});
  CHECK(f.instance.lengths == std::vector<std::uint64_t>{1, 0});
  CHECK(f.instance.g[0] == std::vector<std::uint64_t>{1});

  const InstanceFile empty = parse_instance("X = {a}\nA = {p}\nlA: p -> 0\ng:\n");
  CHECK(empty.instance.g[0].empty());
}

TEST_CASE("instance file errors name the problem and its location") {
  auto error_of = [](const std::string& text) -> std::pair<std::string, std::size_t> {
    try {
      parse_instance(text);
    } catch (const SyntaxError& e) {
      return {e.what(), e.line()};
    }
    return {"", 0};
  };
  const std::string head = "X = {a, b}\nA = {p, q, r}\nlA: p -> 2, q -> 0, r -> 1\n";
  auto missing = error_of(head + "g: (0, p) -> a, (0, r) -> a\n");
  CHECK(missing.first.find("missing g(1, p)") != std::string::npos);
  CHECK(missing.second == 4);
  auto extra = error_of(head + "g: (0, p) -> a, (1, p) -> b, (2, p) -> a, (0, r) -> a\n");
  CHECK(extra.first.find("g(2, p)") != std::string::npos);
  CHECK(extra.first.find("4:30") != std::string::npos);
  CHECK(error_of(head + "g: (0, p) -> a, (0, p) -> b, (1, p) -> a, (0, r) -> a\n").first.find("duplicate") !=
        std::string::npos);
  CHECK(error_of(head + "g: (0, p) -> z\n").first.find("'z'") != std::string::npos);
  CHECK(error_of("X = {a, b}\nA = {p}\nlA: p -> 1, p -> 2\n").first.find("duplicate lA(p)") != std::string::npos);
  CHECK(error_of("X = {a}\nA = {p, q}\nlA: p -> 0\n").first.find("missing lA(q)") != std::string::npos);
  CHECK(error_of("X = {a}\nA = {p}\nlA: p -> 0\nfoo: 1\n").first.find("unknown statement") != std::string::npos);
  CHECK(error_of("X = {a}\nA = {p}\nlA: p -> 0 q\n").second == 3);
  CHECK(error_of("X = {a}\nA = {p}\nlA: p => 0\n").first.find("3:8") != std::string::npos);
}

TEST_CASE("adjoint report for the sample instance") {
  const Run r = run_cli({"adjoint", sample_path});
  CHECK(r.code == 0);
  CHECK(r.out == sample_report);
  CHECK(run_cli({"adjoint", sample_path}).out == r.out);
}

TEST_CASE("adjoint exit codes") {
  CHECK(run_cli({"adjoint", "/nonexistent/file"}).code == 2);
  CHECK(run_cli({"adjoint"}).code == 2);
  const Run gap = adjoint_text("X = {a, b}\nA = {p}\nlA: p -> 2\ng: (0, p) -> a\n");
  CHECK(gap.code == 2);
  CHECK(gap.err.find("missing g(1, p)") != std::string::npos);

  std::string big = "X = {a, b}\nA = {p}\nlA: p -> 21\ng: ";
  for (int m = 0; m < 21; ++m) big += (m ? ", (" : "(") + std::to_string(m) + ", p) -> a";
  const Run over = adjoint_text(big + "\n");
  CHECK(over.code == 3);
  CHECK(over.err.find("budget") != std::string::npos);
}

TEST_CASE("poly command") {
  const Run two = run_cli({"poly", "--card-x", "2", "--max-len", "3"});
  CHECK(two.code == 0);
  CHECK(two.out.find("total 15\n") != std::string::npos);
  CHECK(two.out.find("BIJECTION PASS") != std::string::npos);
  const Run zero = run_cli({"poly", "--card-x", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("total 1\n") != std::string::npos);
  const Run one = run_cli({"poly", "--card-x", "1", "--max-len", "5"});
  CHECK(one.out.find("total 6\n") != std::string::npos);
  CHECK(run_cli({"poly", "--card-x", "5", "--max-len", "9"}).code == 3);
  CHECK(run_cli({"poly", "--card-x", "-2"}).code == 2);
}

TEST_CASE("eval command") {
  const Run nth = run_cli({"eval", "nthDef(x, 1, [a,b,c])", "--set", "X={a,b,c}", "--let", "x=a"});
  CHECK(nth.code == 0);
  CHECK(nth.out == "b\n");
  CHECK(run_cli({"eval", "nthDef(x, 1, [a,b,c])", "--ctx", "x:X", "--set", "X={a,b,c}", "--let", "x=a"}).out == "b\n");
  CHECK(run_cli({"eval", "monus(3,5)"}).out == "0\n");
  CHECK(run_cli({"eval", "idUntil(7,3)"}).out == "2\n");
  CHECK(run_cli({"eval", "concat(l, [1])", "--ctx", "l:L(N)", "--let", "l=[2, 3]"}).out == "[2,3,1]\n");
  CHECK(run_cli({"eval", "(n, s(n))", "--let", "n=4"}).out == "(4,5)\n");

  const Run syntax = run_cli({"eval", "x :: "});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("1:6") != std::string::npos);
  CHECK(run_cli({"eval", "cons(1, 1)"}).code == 2);
  CHECK(run_cli({"eval", "x", "--ctx", "x:N"}).code == 2);
  CHECK(run_cli({"eval", "m", "--ctx", "m:N, n:N | m < n", "--let", "m=3", "--let", "n=1"}).code == 2);
  CHECK(run_cli({"eval", "m", "--ctx", "m:N, n:N | m < n", "--let", "m=0", "--let", "n=1"}).out == "0\n");
}

TEST_CASE("laws command") {
  const Run r = run_cli({"laws", "--nat-max", "3", "--len-max", "2", "--card-x", "1", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# seed 7", 0) == 0);
  CHECK(r.out.find("nno.rec.add PASS\n") != std::string::npos);
  CHECK(r.out.find("nth.naturality PASS\n") != std::string::npos);
  CHECK(r.out.find(" FAIL") == std::string::npos);
  CHECK(run_cli({"laws", "--nat-max", "3", "--len-max", "2", "--card-x", "1", "--seed", "7"}).out == r.out);
  CHECK(run_cli({"laws", "--nat-max", "-1"}).code == 2);
  CHECK(run_cli({"laws", "--bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}
