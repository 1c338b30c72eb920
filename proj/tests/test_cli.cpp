#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hg/cli.hpp"
#include "hg/constructions.hpp"
#include "hg/core.hpp"
#include "hg/extremal.hpp"
#include "hg/shifting.hpp"

using namespace hg;

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "hg_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("components on the split graph") {
  auto file = temp_dir() / "split33.hg";
  save_hypergraph(file.string(), gen_split_kgraph(3, 3, 3, 1));
  RunResult r = run({"components", "--input", file.string()});
  CHECK(r.rc == 0);
  CHECK(first_line(r.out) == "components=2 sizes=10,1");
}

TEST_CASE("hamilton finds the full cycle on the complete graph") {
  auto file = temp_dir() / "k5.hg";
  Hypergraph k5(3, 5, all_ksets(5, 3));
  save_hypergraph(file.string(), k5);
  RunResult r = run({"hamilton", "--input", file.string()});
  CHECK(r.rc == 0);
  CHECK(first_line(r.out) == "hamilton=true certificate=1 2 3 4 5");

  auto cert = temp_dir() / "k5.cycle";
  RunResult r2 = run({"hamilton", "--input", file.string(), "--certificate-out",
                      cert.string()});
  CHECK(r2.rc == 0);
  CHECK(slurp(cert) == "1 2 3 4 5\n");
}

TEST_CASE("matching with certificate output") {
  auto file = temp_dir() / "k5m.hg";
  save_hypergraph(file.string(), Hypergraph(3, 5, all_ksets(5, 3)));
  auto cert = temp_dir() / "k5m.cert.hg";
  RunResult r = run({"matching", "--input", file.string(), "--certificate-out",
                     cert.string()});
  CHECK(r.rc == 0);
  CHECK(first_line(r.out).rfind("matching=1 optimal=true", 0) == 0);
  Hypergraph w = load_hypergraph(cert.string());
  CHECK(w.m() == 1);
}

TEST_CASE("longest-cycle on the split graph cannot mix the sides") {
  // any 5 vertices force a window meeting X in exactly one vertex, so the
  // optimum is the 4-cycle on {1,2,3,4}
  auto file = temp_dir() / "split33c.hg";
  save_hypergraph(file.string(), gen_split_kgraph(3, 3, 3, 1));
  RunResult r = run({"longest-cycle", "--input", file.string()});
  CHECK(r.rc == 0);
  CHECK(first_line(r.out) == "length=4 cycle=1 2 3 4 nodes=115");
}

TEST_CASE("construct writes loadable graphs") {
  auto file = temp_dir() / "cover.hg";
  RunResult r = run({"construct", "--family", "emc-cover", "--n", "7", "--s",
                     "2", "--output", file.string()});
  CHECK(r.rc == 0);
  CHECK(first_line(r.out) == "family=emc-cover k=3 n=7 edges=25 output=" +
                                 file.string());
  Hypergraph g = load_hypergraph(file.string());
  CHECK(g.m() == 25);

  RunResult bad = run({"construct", "--family", "emc-clique", "--n", "5", "--s",
                       "2", "--output", file.string()});
  CHECK(bad.rc == 2);  // clique on 8 vertices cannot fit in 5
}

TEST_CASE("shift closure round-trips through files") {
  auto in = temp_dir() / "shift_in.hg";
  auto out_file = temp_dir() / "shift_out.hg";
  Hypergraph g(3, 6);
  g.add_edge(vs_of({4, 5, 6}));
  g.add_edge(vs_of({2, 4, 6}));
  save_hypergraph(in.string(), g);
  RunResult r = run({"shift", "--input", in.string(), "--direction", "left",
                     "--output", out_file.string()});
  CHECK(r.rc == 0);
  Hypergraph shifted = load_hypergraph(out_file.string());
  CHECK(shifted.m() == g.m());
  CHECK(is_left_shifted(shifted));
}

TEST_CASE("pair shift keeps the two sides distinguishable") {
  auto in = temp_dir() / "pair_in.hgp";
  auto out_file = temp_dir() / "pair_out.hgp";
  ColouredPair p;
  p.k = 3;
  p.n = 6;
  p.red = {vs_of({2, 4, 6})};
  p.blue = {vs_of({1, 3, 5})};
  save_coloured_pair(in.string(), p);
  RunResult r = run({"shift", "--input", in.string(), "--direction", "pair",
                     "--output", out_file.string()});
  CHECK(r.rc == 0);
  CHECK(first_line(r.out).find("distinguishable=true") != std::string::npos);
  ColouredPair q = load_coloured_pair(out_file.string());
  CHECK(is_left_shifted(q.red_graph()));
  CHECK(is_right_shifted(q.blue_graph()));
}

TEST_CASE("mu output matches the library value") {
  RunResult r = run({"mu", "--n", "5", "--s", "1", "--t", "4"});
  CHECK(r.rc == 0);
  MuResult expect = mu_bruteforce(5, 1, 4);
  CHECK(contains_line(r.out, "value=" + std::to_string(expect.value)));
  CHECK(contains_line(r.out, "family_nonempty=true"));

  RunResult blocked = run({"mu", "--n", "7", "--s", "1", "--t", "4"});
  CHECK(blocked.rc == 2);
}

TEST_CASE("emc matches the best construction") {
  auto witness = temp_dir() / "emc72.hg";
  auto report = temp_dir() / "emc72.report";
  RunResult r = run({"emc", "--n", "7", "--s", "2", "--output", witness.string(),
                     "--report-out", report.string()});
  CHECK(r.rc == 0);
  CHECK(contains_line(r.out, "value=35"));
  CHECK(contains_line(r.out, "clique_value=35"));
  CHECK(contains_line(r.out, "cover_value=25"));
  CHECK(contains_line(r.out, "matches_construction=true"));
  CHECK(load_hypergraph(witness.string()).m() == 35);
  std::string rep = slurp(report);
  CHECK(rep.find("value=35") != std::string::npos);
  CHECK(rep.find("elapsed") == std::string::npos);  // reports stay deterministic
}

TEST_CASE("mono-triangles balances both colours") {
  RunResult r = run({"mono-triangles", "--n", "5", "--tmin", "1"});
  CHECK(r.rc == 0);
  CHECK(contains_line(r.out, "feasible=true"));
  RunResult blocked = run({"mono-triangles", "--n", "9"});
  CHECK(blocked.rc == 2);
}

TEST_CASE("connect-partition reports hypothesis and conclusion flags") {
  auto file = temp_dir() / "dense.hg";
  save_hypergraph(file.string(), gen_emc_cover(12, 3, 3));
  auto pair_out = temp_dir() / "dense.hgp";
  RunResult r = run({"connect-partition", "--input", file.string(), "--epsilon",
                     "1/100", "--output", pair_out.string()});
  CHECK(r.rc == 0);
  CHECK(contains_line(r.out, "red_blue_distinguishable=true"));
  CHECK(contains_line(r.out, "components=1"));
  ColouredPair q = load_coloured_pair(pair_out.string());
  CHECK(q.red.size() + q.blue.size() == 136);

  RunResult bad = run({"connect-partition", "--input", file.string(),
                       "--epsilon", "1/8"});
  CHECK(bad.rc == 2);
}

TEST_CASE("verify-fact prints one verdict line per triple") {
  RunResult r = run({"verify-fact"});
  CHECK(r.rc == 0);
  std::istringstream in(r.out);
  int verdicts = 0;
  for (std::string line; std::getline(in, line);)
    if (line.rfind("triple=(", 0) == 0) {
      ++verdicts;
      CHECK(line.substr(line.size() - 5) == " pass");
    }
  CHECK(verdicts == 11);
  CHECK(contains_line(r.out, "pass=true"));
  CHECK(contains_line(r.out,
                      "triple=(6,10,23) max=0.625000000000 sigma*=1/4 pass"));
}

TEST_CASE("verify-claims summarizes each claim") {
  RunResult r = run({"verify-claims"});
  CHECK(r.rc == 0);
  CHECK(contains_line(r.out, "claim_pair_bound_pass=true"));
  CHECK(contains_line(r.out, "claim_blue_triple_structure_pass=true"));
  CHECK(contains_line(r.out, "claim_red_triple_cap_pass=true"));
  CHECK(contains_line(r.out, "claim_exclusion_counts_pass=true"));
  CHECK(contains_line(r.out, "pass=true"));
}

TEST_CASE("verify-local writes the report with a witness block") {
  auto report = temp_dir() / "local.report";
  RunResult r = run({"verify-local", "--workers", "2", "--report-out",
                     report.string()});
  CHECK(r.rc == 0);
  std::string rep = slurp(report);
  CHECK(rep.rfind("mode=closed", 0) == 0);
  CHECK(rep.find("pass=true") != std::string::npos);
  CHECK(rep.find("B2: k1-k2 k2-k3 k1-k3") != std::string::npos);
  CHECK(rep.find("B3: k1-k2-k3") != std::string::npos);
  CHECK(rep.find("elapsed") == std::string::npos);
}

TEST_CASE("usage and parse failures exit with status 2") {
  RunResult r = run({"no-such-command"});
  CHECK(r.rc == 2);
  RunResult missing = run({"components"});
  CHECK(missing.rc == 2);

  auto bad = temp_dir() / "bad.hg";
  std::ofstream(bad) << "3 4\n1 2 2\n";
  RunResult parse = run({"components", "--input", bad.string()});
  CHECK(parse.rc == 2);
  CHECK(parse.err.find("line 2") != std::string::npos);

  RunResult help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("verify-local") != std::string::npos);
}
