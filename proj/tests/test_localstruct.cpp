#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "hg/localstruct.hpp"

using namespace hg;

namespace {

bool has_label(const ValidationResult& r, const std::string& label) {
  return std::find(r.violated.begin(), r.violated.end(), label) !=
         r.violated.end();
}

// red pair pattern spanning the lower 2x2 corner of every grid
std::uint32_t lower_square_pairs() {
  std::uint32_t r2 = 0;
  for (int g = 0; g < 3; ++g)
    for (int cell : {0, 1, 3, 4}) r2 |= 1u << (9 * g + cell);
  return r2;
}

// red triples using at most one k-role
std::uint32_t low_k_triples() {
  std::uint32_t r3 = 0;
  for (int t = 0; t < 27; ++t) {
    int ks = (t / 9 == 2) + (t / 3 % 3 == 2) + (t % 3 == 2);
    if (ks <= 1) r3 |= 1u << t;
  }
  return r3;
}

LocalConfig peak_config() {
  LocalConfig cfg;
  cfg.b1 = 511;
  cfg.r2 = lower_square_pairs();
  cfg.b2 = (1u << 8) | (1u << 17) | (1u << 26);  // the three k-k pairs
  cfg.r3 = low_k_triples();
  cfg.b3 = 1u << 26;  // k1-k2-k3
  return cfg;
}

}  // namespace

TEST_CASE("position and pair indexing round-trips") {
  CHECK(position_of(1, 2) == 5);
  CHECK(triple_of(5) == 1);
  CHECK(role_of(5) == 2);
  CHECK(kPositionNames[0] == "i1");
  CHECK(kPositionNames[5] == "k2");
  CHECK(kPositionNames[8] == "k3");

  CHECK(crossing_pair_index(0, 3) == 0);
  CHECK(crossing_pair_index(3, 0) == 0);
  CHECK(crossing_pair_index(5, 7) == 9 + 3 * 2 + 1);
  CHECK(crossing_pair_index(2, 8) == 18 + 3 * 2 + 2);
  for (int p = 0; p < kNumCrossingPairs; ++p) {
    auto pos = crossing_pair_positions(p);
    CHECK(crossing_pair_index(pos[0], pos[1]) == p);
  }
  CHECK_THROWS_AS(crossing_pair_index(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(crossing_pair_index(0, 9), std::invalid_argument);

  CHECK(crossing_triple_index(2, 2, 2) == 26);
  auto pos = crossing_triple_positions(15);
  CHECK(pos == std::array<int, 3>{1, 5, 6});

  TripleSystem ts = TripleSystem::canonical();
  CHECK(ts.M[2][1] == 7);
  CHECK_NOTHROW(ts.validate());
  ts.M[0][0] = 7;
  CHECK_THROWS_AS(ts.validate(), std::invalid_argument);
}

TEST_CASE("value function evaluates exactly and guards its domain") {
  CHECK(f_spt(rat(1, 4), Rat(6), Rat(10), Rat(23)) == rat(40, 64));
  CHECK(f_spt(rat(1, 4), Rat(9), Rat(9), Rat(17)) == rat(36, 64));
  CHECK(f_spt(rat(1, 3), Rat(4), Rat(5), Rat(11)) == rat(11, 27));
  CHECK(f_spt(rat(1, 5), Rat(0), Rat(0), Rat(0)) == rat(8, 125));
  CHECK_THROWS_AS(f_spt(Rat(0), Rat(1), Rat(1), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(f_spt(rat(-1, 4), Rat(1), Rat(1), Rat(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(f_spt(rat(17, 50), Rat(1), Rat(1), Rat(1)),
                  std::invalid_argument);
}

TEST_CASE("sigma range endpoints bracket the cube-root threshold") {
  CHECK(sigma_upper() == rat(1, 4));
  Rat u = 1 - sigma_lower();
  u.canonicalize();
  // u >= 2^(-1/3) so the swept range covers the target interval, and the
  // overshoot is below 10^-18
  CHECK(u * u * u >= rat(1, 2));
  Rat v = u - Rat(1, 1000000000000000000L);
  v.canonicalize();
  CHECK(v * v * v < rat(1, 2));
}

TEST_CASE("frame conversion") {
  SigmaFrame fr = make_sigma_frame(rat(1, 4), Rat(3), Rat(15));
  CHECK(fr.beta == 1);
  CHECK(fr.q1 == 3);
  CHECK(fr.q2 == 15);
  CHECK(make_sigma_frame(rat(1, 5), Rat(0), Rat(0)).beta == 2);
  CHECK_THROWS_AS(make_sigma_frame(rat(3, 10), Rat(0), Rat(0)),
                  std::invalid_argument);
}

TEST_CASE("bounded-value fact holds for all eleven triples") {
  const auto& triples = fact_triples();
  REQUIRE(triples.size() == 11);
  FactReport rep = check_fact(triples, rat(1, 1000000000));
  CHECK(rep.pass);
  REQUIRE(rep.results.size() == 11);
  int attained = 0;
  for (const auto& r : rep.results) {
    CHECK(r.pass);
    CHECK(r.certified_max <= rat(5, 8));
    CHECK(r.refine_gap == 0);
    if (r.certified_max == rat(5, 8)) {
      ++attained;
      CHECK(r.refined_argmax == rat(1, 4));
    }
    if (r.triple.s == 9 && r.triple.p == 1 && r.triple.t == 27)
      CHECK(r.certified_max == rat(19, 32));
  }
  CHECK(attained == 3);
}

TEST_CASE("raising the pair index never beats raising the singleton index") {
  MonotonicityReport rep = check_monotonicity(
      Rat(6), Rat(10), Rat(23), {Rat(0), Rat(1), Rat(2), Rat(5)}, rat(1, 200));
  CHECK(rep.pass);
  CHECK(rep.checks > 0);
  CHECK(!rep.first_violation.has_value());

  // equality holds at the right endpoint (beta = 1), so the comparison is
  // tight there
  CHECK(f_spt(rat(1, 4), Rat(6), Rat(11), Rat(23)) ==
        f_spt(rat(1, 4), Rat(7), Rat(10), Rat(23)));
  // strict inequality at an interior point
  CHECK(f_spt(rat(11, 50), Rat(6), Rat(11), Rat(23)) <
        f_spt(rat(11, 50), Rat(7), Rat(10), Rat(23)));

  CHECK_THROWS_AS(
      check_monotonicity(Rat(1), Rat(1), Rat(1), {Rat(-1)}, rat(1, 100)),
      std::invalid_argument);
}

TEST_CASE("validation accepts the empty and the peak configuration") {
  CHECK(validate_config(LocalConfig{}).ok);
  ValidationResult res = validate_config(peak_config());
  CHECK(res.ok);
  CHECK(res.violated.empty());
}

TEST_CASE("validation flags missing red pair lowering") {
  LocalConfig cfg;
  cfg.r2 = 1u << 4;  // j1-j2 without the pairs below it
  ValidationResult res = validate_config(cfg);
  CHECK(!res.ok);
  CHECK(res.violated == std::vector<std::string>{"e"});
}

TEST_CASE("validation flags steadiness violations") {
  // a red singleton plus a far red pair leave two base triples exposed
  LocalConfig cfg;
  cfg.r1 = 1u << 3;  // i2
  for (int cell : {0, 1, 3, 4}) cfg.r2 |= 1u << (9 + cell);  // (M2,M3) square
  ValidationResult res = validate_config(cfg);
  CHECK(!res.ok);
  CHECK(res.violated == std::vector<std::string>{"c"});

  // two crossing triples covering all j- and k-positions plus a red singleton
  LocalConfig dis;
  dis.r1 = 1u << 0;  // i1
  dis.r3 = (1u << 13) | (1u << 26);  // j1-j2-j3 and k1-k2-k3
  ValidationResult res2 = validate_config(dis);
  CHECK(!res2.ok);
  CHECK(res2.violated == std::vector<std::string>{"c"});
}

TEST_CASE("validation flags red singletons off the i-positions") {
  LocalConfig cfg;
  cfg.r1 = 1u << 1;  // j1
  ValidationResult res = validate_config(cfg);
  CHECK(!res.ok);
  // the stray singleton also exposes the other two base triples
  CHECK(res.violated == std::vector<std::string>{"c", "h"});
}

TEST_CASE("validation flags opposite-colour overlap") {
  LocalConfig cfg;
  cfg.b1 = 511;
  cfg.b2 = 1u << 8;   // k1-k2
  cfg.r3 = 1u << 26;  // k1-k2-k3 contains it
  ValidationResult res = validate_config(cfg);
  CHECK(!res.ok);
  CHECK(res.violated == std::vector<std::string>{"b"});
}

TEST_CASE("validation flags off-centre and non-raised blue pairs") {
  LocalConfig cfg;
  cfg.b1 = 511;
  cfg.b2 = 1u << 7;  // k1-j2 misses the star centre k2
  ValidationResult res = validate_config(cfg);
  CHECK(!res.ok);
  CHECK(res.violated == std::vector<std::string>{"e", "g"});

  LocalConfig open_cfg;
  open_cfg.b2 = 1u << 26;  // endpoints not in B1
  ValidationResult res2 = validate_config(open_cfg);
  CHECK(!res2.ok);
  CHECK(has_label(res2, "a"));
}

TEST_CASE("validation caps pair grids next to many red triples") {
  LocalConfig cfg;
  cfg.r3 = low_k_triples();  // 20 triples
  cfg.r2 = 0b001001111;      // five pairs in the (M1,M2) grid
  ValidationResult res = validate_config(cfg);
  CHECK(!res.ok);
  CHECK(has_label(res, "j"));
  CHECK(!has_label(res, "h"));  // five pairs in the exceptional pattern

  LocalConfig touch;
  touch.r3 = low_k_triples() | (1u << 24) | (1u << 25);  // 22 triples
  touch.r2 = lower_square_pairs();
  touch.r2 &= ~(1u << 4);
  touch.r2 |= 1u << 2;  // swap j1-j2 for the k-incident i1-k2
  ValidationResult res2 = validate_config(touch);
  CHECK(!res2.ok);
  CHECK(has_label(res2, "j"));
}

TEST_CASE("configuration rendering is deterministic") {
  CHECK(format_config(LocalConfig{}) == "R1:\nR2:\nR3:\nB1:\nB2:\nB3:\n");
  LocalConfig cfg;
  cfg.r1 = 1u << 0;
  cfg.b1 = (1u << 2) | (1u << 5);
  cfg.r2 = 1u << 0;
  cfg.b2 = 1u << 8;
  cfg.b3 = 1u << 26;
  CHECK(format_config(cfg) ==
        "R1: i1\nR2: i1-i2\nR3:\nB1: k1 k2\nB2: k1-k2\nB3: k1-k2-k3\n");
}

TEST_CASE("weight optimum on opposed singletons") {
  LocalConfig cfg;
  cfg.r1 = 1u << 0;  // i1
  cfg.b1 = 1u << 2;  // k1
  WeightOptimum wo = max_weight_lp(cfg, Rat(2));
  CHECK(wo.q1 == 1);
  CHECK(wo.q2 == 0);

  LocalConfig all;
  all.r1 = 0b001001001;
  all.b1 = 511;
  WeightOptimum wo2 = max_weight_lp(all, Rat(1));
  CHECK(wo2.q1 == 9);  // give everything to blue
  CHECK(wo2.q2 == 0);
  for (int v = 0; v < 9; ++v) CHECK(wo2.assignment.b_single[v] == 1);
}

TEST_CASE("weight optimum on disjoint pairs ignores the opposed constraint") {
  LocalConfig cfg;
  cfg.r2 = 1u << 0;  // i1-i2
  cfg.b2 = 1u << 8;  // k1-k2, vertex-disjoint from it
  WeightOptimum wo = max_weight_lp(cfg, Rat(1));
  CHECK(wo.q1 == 0);
  CHECK(wo.q2 == 2);

  LocalConfig share;
  share.r2 = 1u << 0;  // i1-i2
  share.b2 = 1u << 2;  // i1-k2 shares i1
  WeightOptimum wo2 = max_weight_lp(share, Rat(1));
  CHECK(wo2.q2 == 1);
}

TEST_CASE("weight optimum respects the blue chain") {
  LocalConfig cfg;
  cfg.r1 = 1u << 0;  // i1
  cfg.b1 = 0b000000111;  // all of M1
  // b(i1) <= b(j1) <= b(k1); red i1 opposes each blue singleton
  WeightOptimum wo = max_weight_lp(cfg, Rat(1));
  CHECK(wo.q1 == 3);
  CHECK(wo.assignment.r_single[0] == 0);
  CHECK_THROWS_AS(max_weight_lp(cfg, rat(1, 2)), std::invalid_argument);

  LocalConfig bad;
  bad.r1 = 1u << 12;
  CHECK_THROWS_AS(max_weight_lp(bad, Rat(1)), std::invalid_argument);
}

TEST_CASE("configuration values at selected sigmas") {
  CHECK(config_value(LocalConfig{}, rat(1, 4)) == rat(1, 64));
  LocalConfig tri;
  tri.r3 = (1u << 27) - 1;
  CHECK(config_value(tri, rat(1, 4)) == rat(28, 64));
  CHECK(config_value(peak_config(), rat(1, 4)) == rat(5, 8));
  CHECK(config_value(peak_config(), rat(1, 5)) ==
        f_spt(rat(1, 5), Rat(3), Rat(15), Rat(21)));
  CHECK_THROWS_AS(config_value(LocalConfig{}, rat(3, 10)),
                  std::invalid_argument);
}

TEST_CASE("two-triple pair bound is tight on the square-plus-star pattern") {
  PairConfig pc;
  pc.r2 = 0b000011011;  // the 2x2 square of i/j pairs
  pc.b2_legs = 0b100;   // the k-k pair
  pc.centre_triple = 1;
  StrahlungResult sr = check_claim_strahlung(pc, Rat(1));
  CHECK(sr.q_max == 6);
  CHECK(sr.main_ok);
  CHECK(sr.refine1_applicable);
  CHECK(sr.refine1_value == 5);
  CHECK(sr.refine1_ok);
  CHECK(sr.refine2_applicable);
  CHECK(sr.refine2_value == 7);
  CHECK(sr.refine2_ok);

  PairConfig empty;
  StrahlungResult sr2 = check_claim_strahlung(empty, Rat(1));
  CHECK(sr2.q_max <= 6);
  CHECK(sr2.main_ok);

  PairConfig bad;
  bad.r2 = 0xFFFF;
  CHECK_THROWS_AS(check_claim_strahlung(bad, Rat(1)), std::invalid_argument);
}

TEST_CASE("standalone claims all verify") {
  VerifyOptions opts;
  auto claims = verify_claims_standalone(opts);
  REQUIRE(claims.size() == 4);
  CHECK(claims[0].name == "pair_bound");
  CHECK(claims[1].name == "blue_triple_structure");
  CHECK(claims[2].name == "red_triple_cap");
  CHECK(claims[3].name == "exclusion_counts");
  for (const auto& c : claims) CHECK(c.pass);
  CHECK(claims[0].details.str().find("q_max=6") != std::string::npos);
  CHECK(claims[3].details.str().find("max_red_with_two_pairs=22") !=
        std::string::npos);
}

TEST_CASE("full sweep certifies the five-eighths bound") {
  VerifyOptions opts;
  opts.workers = 2;
  VerificationReport rep = verify_local_structure(opts);
  CHECK(rep.pass);
  CHECK(rep.global_max_lower == rat(5, 8));
  CHECK(rep.global_max_upper == rat(5, 8));
  CHECK(rep.witness_sigma == rat(1, 4));
  CHECK(rep.exceedances == 0);
  CHECK(rep.configs > 500000);
  REQUIRE(rep.claims.size() == 7);
  for (const auto& c : rep.claims) CHECK(c.pass);
  CHECK(rep.witness == peak_config());
  CHECK(validate_config(rep.witness).ok);
  CHECK(config_value(rep.witness, rep.witness_sigma) == rat(5, 8));

  VerifyOptions single = opts;
  single.workers = 1;
  VerificationReport rep1 = verify_local_structure(single);
  CHECK(rep1.report.str() == rep.report.str());
  CHECK(format_config(rep1.witness) == format_config(rep.witness));

  CHECK_THROWS_AS(verify_local_structure(VerifyOptions{rat(1, 1000),
                                                       rat(1, 1000000000),
                                                       rat(1, 1000000), 0,
                                                       false}),
                  std::invalid_argument);
}

TEST_CASE("exhaustive sweep reaches the same bound") {
  VerifyOptions opts;
  opts.workers = 2;
  opts.exhaustive = true;
  VerificationReport rep = verify_local_structure(opts);
  CHECK(rep.pass);
  CHECK(rep.global_max_upper == rat(5, 8));
  CHECK(rep.global_max_lower == rat(5, 8));
}
