#include <doctest.h>

#include <sstream>

#include "epiword/cli.hpp"
#include "epiword/serialization.hpp"

using namespace epiword;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream lines(text);
  for (std::string l; std::getline(lines, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("test episturmian prints a certificate") {
  const auto r = run({"test", "episturmian", "baabacababac"});
  CHECK(r.code == cli::kOk);
  CHECK(has_line(r.out, "episturmian=yes"));
  CHECK(r.out.find("witness=aba") != std::string::npos);
}

TEST_CASE("minmax on the paper example") {
  const auto r = run({"minmax", "baabacababac", "--order", "bac"});
  CHECK(r.code == cli::kOk);
  CHECK(has_line(r.out, "min=babac"));
  const auto k = run({"minmax", "baabacababac", "--order", "bac", "--k", "3"});
  CHECK(has_line(k.out, "min=bab"));
}

TEST_CASE("balanced reports u on failure") {
  const auto r = run({"balanced", "aabababaabaab"});
  CHECK(r.code == cli::kRejected);
  CHECK(has_line(r.out, "u=aba"));
  const auto ok = run({"balanced", "ababaabaabab"});
  CHECK(ok.code == cli::kOk);
  CHECK(has_line(ok.out, "common_prefix=abaaba"));
}

TEST_CASE("exit codes") {
  CHECK(run({"test", "episturmian", "abca"}).code == cli::kRejected);
  CHECK(run({"test", "episturmian", "abz"}).code == cli::kUsageError);
  CHECK(run({"minmax", "abc", "--order", "abb"}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"generate", "--length", "5"}).code == cli::kUsageError);
  CHECK(run({"generate", "--directive", "*ab", "--skew", "a,b", "--length", "5"}).code == cli::kUsageError);
  CHECK(run({"generate", "--episkew", "{\"mu\":", "--length", "5"}).code == cli::kUsageError);
  CHECK(run({"test", "fine", "a*b"}).code == cli::kRejected);
  CHECK(run({"test", "fine", "*abc", "--k", "40000"}).code == cli::kInconclusive);
  CHECK(run({"--help"}).code == cli::kOk);
  const auto bad = run({"witness", "abcab"});
  CHECK(bad.code == cli::kRejected);
  CHECK(has_line(bad.out, "witness=none"));
}

TEST_CASE("generate sources") {
  CHECK(run({"generate", "--directive", "*abc", "--length", "7"}).out == "abacaba\n");
  CHECK(run({"generate", "--mechanical", "1/3:1/3", "--length", "6"}).out == "abaaba\n");
  CHECK(run({"generate", "--mechanical", "2/5:0", "--ceiling", "--length", "5"}).out == "babaa\n");
  CHECK(run({"generate", "--skew", "aab,ab", "--length", "7"}).out == "aababab\n");
  const std::string e = R"({"mu":"","excluded_letter":"c","inner_directive":"*ab","p":0,"suffix_index":1})";
  CHECK(run({"generate", "--episkew", e, "--length", "7"}).out == "cabaaba\n");
}

TEST_CASE("words come from stdin when omitted") {
  const auto r = run({"balanced"}, "abab\naabb\n");
  CHECK(r.code == cli::kRejected);
  CHECK(has_line(r.out, "balanced=yes"));
  CHECK(has_line(r.out, "balanced=no"));
  CHECK(run({"witness"}, "").code == cli::kUsageError);
}

TEST_CASE("json output round-trips and is stable") {
  const auto first = run({"--json", "test", "episturmian", "baabacababac"});
  const auto second = run({"--json", "test", "episturmian", "baabacababac"});
  CHECK(first.out == second.out);
  const json j = json::parse(first.out);
  CHECK(j["word"] == "baabacababac");
  const Verdict v = verdict_from_json(j);
  CHECK(v.accepted);
  json without_word = j;
  without_word.erase("word");
  CHECK(without_word == to_json(v));

  const auto sweep1 = run({"--json", "verify", "episturmian", "--alphabet", "2", "--max-len", "8"});
  const auto sweep2 = run({"--json", "verify", "episturmian", "--alphabet", "2", "--max-len", "8"});
  CHECK(sweep1.code == cli::kOk);
  CHECK(sweep1.out == sweep2.out);
  CHECK(sweep_report_from_json(json::parse(sweep1.out)).total_words == 510);
}

TEST_CASE("verify in text mode") {
  const auto r = run({"verify", "cor2", "--alphabet", "2", "--max-len", "8"});
  CHECK(r.code == cli::kOk);
  CHECK(has_line(r.out, "PASS"));
  CHECK(r.out.find("time=") != std::string::npos);
  CHECK(run({"verify", "cor2", "--alphabet", "3", "--max-len", "4"}).code == cli::kUsageError);
  CHECK(run({"verify", "episturmian", "--alphabet", "4", "--max-len", "4"}).code == cli::kUsageError);
}

TEST_CASE("complexity, wide, fine and eq1") {
  const auto c = run({"complexity", "*ab", "--max-n", "3"});
  CHECK(c.out == "1 2\n2 3\n3 4\n");
  CHECK(run({"test", "wide", "aabababaabaab"}).code == cli::kRejected);
  CHECK(run({"test", "fine", "*abc"}).code == cli::kOk);
  CHECK(run({"test", "fine", "b,a", "--k", "6"}).code == cli::kOk);
  CHECK(run({"test", "eq1", "*ab"}).code == cli::kOk);
  CHECK(run({"test", "eq1", "ab"}).code == cli::kUsageError);
  CHECK(run({"test", "fine"}).code == cli::kUsageError);
}
