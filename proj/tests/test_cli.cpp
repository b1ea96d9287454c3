#include <json.hpp>

#include "doctest.h"
#include "modgroup/cli.hpp"
#include "modgroup/cosets.hpp"
#include "modgroup/rewriting.hpp"
#include "modgroup/smith.hpp"

using namespace modgroup;
using namespace modgroup::cli;

namespace {

Report call(std::vector<std::string> args) {
  args.insert(args.begin(), "modgroup");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    return run(parse_command(static_cast<int>(argv.size()), argv.data()));
  } catch (const UsageError& e) {
    return {kUsage, "", e.what()};
  }
}

}  // namespace

TEST_CASE("index reports") {
  Report r = call({"index", "--m", "4", "--n", "2"});
  CHECK(r.exit_code == kOk);
  CHECK(r.out.find("SL index: 24") != std::string::npos);
  CHECK(r.out.find("PSL index: 12") != std::string::npos);
  Report g2 = call({"index", "--m", "2", "--n", "1"});
  CHECK(g2.out.find("PSL index: 3") != std::string::npos);
  auto j = nlohmann::json::parse(call({"index", "--m", "6", "--n", "2", "--json"}).out);
  CHECK(j["sl_index"] == 48);
  CHECK(j["psl_index"] == 24);
  CHECK(j["consistent"] == true);
}

TEST_CASE("usage errors") {
  CHECK(call({"index", "--m", "4", "--n", "3"}).exit_code == kUsage);
  CHECK(call({"index"}).exit_code == kUsage);
  CHECK(call({"frobnicate", "--m", "4"}).exit_code == kUsage);
  CHECK(call({"index", "--m", "four"}).exit_code == kUsage);
  CHECK(call({"abelianize", "--group", "klein"}).exit_code == kUsage);
  CHECK(call({"abelianize", "--group", "cyclic:2", "--method", "hall"}).exit_code == kUsage);
  CHECK(call({"abelianize", "--m", "3", "--n", "1", "--method", "hall"}).exit_code == kUsage);
  CHECK(call({"abelianize", "--group", "alt:5", "--method", "image"}).exit_code == kUsage);
  CHECK(call({"verify"}).exit_code == kUsage);
  CHECK(call({"verify", "nonsense"}).exit_code == kUsage);
  CHECK(call({"rank", "--m", "4", "--group", "cyclic:2"}).exit_code == kUsage);
}

TEST_CASE("ceiling exit code") {
  CHECK(call({"abelianize", "--group", "cyclic:6", "--method", "full", "--ceiling", "10"}).exit_code == kCeiling);
  CHECK(call({"table", "--group", "sym:4", "--ceiling", "2"}).exit_code == kCeiling);
}

TEST_CASE("abelianize") {
  Report r = call({"abelianize", "--group", "cyclic:2", "--method", "full"});
  CHECK(r.exit_code == kOk);
  CHECK(r.out == "Z/2 x Z/4 x Z^1\n");
  CHECK(call({"abelianize", "--m", "4", "--n", "2"}).out == "Z/2 x Z/4 x Z^3\n");
  CHECK(call({"abelianize", "--m", "2", "--n", "2", "--method", "full"}).out == "Z/2 x Z/2 x Z/2 x Z^2\n");
  CHECK(call({"abelianize", "--group", "sym:3", "--method", "image"}).out == "Z/2 x Z^1\n");
  auto j = nlohmann::json::parse(call({"abelianize", "--group", "dihedral:4", "--json"}).out);
  CHECK(j["torsion"] == nlohmann::json::array({2}));
  CHECK(j["free_rank"] == 3);
  AbelianInvariants parsed = AbelianInvariants::parse(j["text"].get<std::string>());
  CHECK(parsed == AbelianInvariants::from_cyclic_orders({2}, 3));
}

TEST_CASE("tables and presentations round trip through the CLI") {
  Report r = call({"table", "--m", "4", "--n", "2"});
  CHECK(r.exit_code == kOk);
  CosetTable t = parse_table(r.out);
  CHECK(tables_isomorphic(t, congruence_table(4, 2)));
  auto j = nlohmann::json::parse(call({"table", "--group", "cyclic:2", "--json"}).out);
  CHECK(j["cosets"] == 3);
  CosetTable fromj;
  fromj.s = j["s"].get<std::vector<int>>();
  fromj.u = j["u"].get<std::vector<int>>();
  CHECK(tables_isomorphic(fromj, congruence_table(2, 1)));
}

TEST_CASE("decompose and rank") {
  Report d = call({"decompose", "--m", "2", "--n", "1"});
  CHECK(d.out.find("decomposition: F1 * Z/2") != std::string::npos);
  Report g2 = call({"decompose", "--m", "2", "--n", "2"});
  CHECK(g2.out.find("free x central Z/2; abelianization Z/2 x Z^2") != std::string::npos);
  CHECK(call({"rank", "--m", "7", "--n", "7"}).out == "PGamma(7,7): free of rank 29\n");
  CHECK(call({"rank", "--m", "3"}).out == "PGamma(3,1): not free, F1 * Z/3\n");
}

TEST_CASE("stabilizer summary") {
  Report r = call({"stabilizer", "--group", "cyclic:2"});
  CHECK(r.exit_code == kOk);
  CHECK(r.out.find("[Aut+(F2) : Gamma+(G,pi)]: 3") != std::string::npos);
  CHECK(r.out.find("image in PSL2(Z): index 3") != std::string::npos);
}

TEST_CASE("verify and satoh") {
  Report v = call({"verify", "theorem1", "--max-m", "6"});
  CHECK(v.exit_code == kOk);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS theorem1 m=6 n=3") != std::string::npos);
  Report s = call({"satoh", "--m", "5"});
  CHECK(s.exit_code == kOk);
  CHECK(s.out.find("prime formula free rank: 11") != std::string::npos);
  auto j = nlohmann::json::parse(call({"verify", "rademacher", "--json"}).out);
  CHECK(j["passed"] == 3);
  CHECK(j["total"] == 3);
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"verify", "all"},
                                        std::vector<std::string>{"decompose", "--group", "alt:4", "--json"},
                                        std::vector<std::string>{"table", "--m", "6", "--n", "3"}}) {
    Report a = call(args), b = call(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
