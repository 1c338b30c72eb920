#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "hg/localstruct.hpp"
#include "localdetail.hpp"

namespace hg {

namespace {

using detail::tab;

constexpr std::uint32_t kTriAll = (1u << 27) - 1;
constexpr int kCombosTotal = 8 * 11 * 11 * 11;

int pc32(std::uint32_t m) { return std::popcount(m); }
int pc16(std::uint16_t m) { return std::popcount(static_cast<unsigned>(m)); }

const Rat& bound58() {
  static const Rat b = rat(5, 8);
  return b;
}

// One red small-edge choice: singletons at i-positions and a closed pair
// pattern per grid.
struct ComboDef {
  std::uint16_t r1 = 0;
  std::uint32_t r2 = 0;
  std::array<std::uint16_t, 3> cells{};
};

ComboDef combo_from_flat(int flat) {
  const auto& options = detail::red_grid_cells();
  ComboDef d;
  int g2 = flat % 11;
  flat /= 11;
  int g1 = flat % 11;
  flat /= 11;
  int g0 = flat % 11;
  flat /= 11;
  for (int b = 0; b < 3; ++b)
    if (flat & (1 << b)) d.r1 |= static_cast<std::uint16_t>(1u << (3 * b));
  d.cells = {options[g0], options[g1], options[g2]};
  const auto& T = tab();
  for (int g = 0; g < 3; ++g)
    for (int cell = 0; cell < 9; ++cell)
      if (d.cells[g] & (1u << cell)) d.r2 |= 1u << T.grid_pair[g][cell];
  return d;
}

// Steadiness projected onto the red triples: fs collects triples excluded by
// two small red edges, conflict collects mutually exclusive triple pairs
// witnessed by one small red edge.
struct ComboState {
  bool valid = false;
  int cap = 27;
  std::uint32_t fs = 0;
  bool has_conflict = false;
  std::array<std::uint32_t, 27> conflict{};
  std::vector<std::uint16_t> red_edges;
};

ComboState build_state(const ComboDef& d) {
  const auto& T = tab();
  ComboState st;
  int cmax = 0;
  bool all4 = true;
  for (int g = 0; g < 3; ++g) {
    int c = pc16(d.cells[g]);
    cmax = std::max(cmax, c);
    if (c != 4) all4 = false;
  }
  bool kinc = false;
  for (std::uint32_t m = d.r2; m; m &= m - 1)
    if (T.pair_vmask[std::countr_zero(m)] & detail::kKMask) kinc = true;
  st.cap = cmax >= 5 ? 19 : (all4 && kinc ? 21 : 27);

  for (int v = 0; v < 9; ++v)
    if (d.r1 & (1u << v))
      st.red_edges.push_back(static_cast<std::uint16_t>(1u << v));
  for (std::uint32_t m = d.r2; m; m &= m - 1)
    st.red_edges.push_back(T.pair_vmask[std::countr_zero(m)]);

  std::vector<std::uint16_t> edges = {0b000000111, 0b000111000, 0b111000000};
  edges.insert(edges.end(), st.red_edges.begin(), st.red_edges.end());
  if (detail::steady_violation_exists(edges)) return st;
  st.valid = true;

  const int ne = static_cast<int>(st.red_edges.size());
  for (int t = 0; t < 27; ++t) {
    std::uint16_t tv = T.tri_vmask[t];
    for (int a = 0; a < ne && !(st.fs & (1u << t)); ++a) {
      if (st.red_edges[a] & tv) continue;
      for (int b = a + 1; b < ne; ++b) {
        if (st.red_edges[b] & (tv | st.red_edges[a])) continue;
        if (pc16(static_cast<std::uint16_t>(
                (tv | st.red_edges[a] | st.red_edges[b]) & detail::kIMask)) <= 2) {
          st.fs |= 1u << t;
          break;
        }
      }
    }
  }
  for (int t = 0; t < 27; ++t) {
    if (st.fs & (1u << t)) continue;
    std::uint32_t higher =
        t == 26 ? 0 : T.tri_disj[t] & ~((1u << (t + 1)) - 1);
    for (std::uint32_t m = higher; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (st.fs & (1u << u)) continue;
      std::uint16_t tu = T.tri_vmask[t] | T.tri_vmask[u];
      for (std::uint16_t e : st.red_edges) {
        if (tu & e) continue;
        if (pc16(static_cast<std::uint16_t>((tu | e) & detail::kIMask)) <= 2) {
          st.conflict[t] |= 1u << u;
          st.conflict[u] |= 1u << t;
          st.has_conflict = true;
          break;
        }
      }
    }
  }
  return st;
}

const std::vector<detail::Ideal>* admissible_ideals(
    const ComboState& st, std::vector<detail::Ideal>& scratch) {
  const auto& all = detail::triple_ideals();
  if (st.fs == 0 && !st.has_conflict) return &all;
  scratch.clear();
  for (const auto& id : all) {
    if (id.mask & st.fs) continue;
    bool ok = true;
    if (st.has_conflict)
      for (std::uint32_t m = id.mask; m && ok; m &= m - 1)
        if (id.mask & st.conflict[std::countr_zero(m)]) ok = false;
    if (ok) scratch.push_back(id);
  }
  return &scratch;
}

using MisMemo = std::unordered_map<std::uint32_t, std::pair<int, std::uint32_t>>;

// Largest conflict-free subset of `allowed` (unrestricted red-triple mode).
std::pair<int, std::uint32_t> best_free_subset(std::uint32_t allowed,
                                               const ComboState& st,
                                               MisMemo& memo) {
  if (!st.has_conflict) return {pc32(allowed), allowed};
  int v = -1;
  for (std::uint32_t m = allowed; m; m &= m - 1) {
    int t = std::countr_zero(m);
    if (st.conflict[t] & allowed) {
      v = t;
      break;
    }
  }
  if (v < 0) return {pc32(allowed), allowed};
  auto it = memo.find(allowed);
  if (it != memo.end()) return it->second;
  auto ex = best_free_subset(allowed & ~(1u << v), st, memo);
  auto in = best_free_subset(allowed & ~(1u << v) & ~st.conflict[v], st, memo);
  in.first += 1;
  in.second |= 1u << v;
  auto res = in.first >= ex.first ? in : ex;
  memo.emplace(allowed, res);
  return res;
}

// Deterministically remove elements down to `target`, preserving closure in
// ideal mode by always dropping the highest-index maximal element.
std::uint32_t shrink_red(std::uint32_t mask, int target, bool ideal_mode) {
  int size = pc32(mask);
  while (size > target) {
    if (ideal_mode) {
      for (int t = 26; t >= 0; --t) {
        if (!(mask & (1u << t))) continue;
        int a = t / 9, b = (t / 3) % 3, c = t % 3;
        bool maximal = !((a < 2 && (mask & (1u << (t + 9)))) ||
                         (b < 2 && (mask & (1u << (t + 3)))) ||
                         (c < 2 && (mask & (1u << (t + 1)))));
        if (maximal) {
          mask &= ~(1u << t);
          break;
        }
      }
    } else {
      mask &= ~(1u << (31 - std::countl_zero(mask)));
    }
    --size;
  }
  return mask;
}

struct BlueOption {
  std::uint32_t pairs = 0;
  std::uint8_t legs = 0;
  int count = 0;
  std::uint32_t excl = 0;  // red triples containing one of the pairs
};

const std::array<std::array<BlueOption, 4>, 3>& blue_options() {
  static const auto opts = [] {
    std::array<std::array<BlueOption, 4>, 3> out{};
    const auto& T = tab();
    const auto& legs = detail::blue_leg_masks();
    for (int g = 0; g < 3; ++g)
      for (int o = 0; o < 4; ++o) {
        BlueOption bo;
        bo.legs = legs[o];
        for (int r = 0; r < 3; ++r)
          if (legs[o] & (1u << r)) {
            int p = T.star_leg_pair[g][r];
            bo.pairs |= 1u << p;
            bo.excl |= T.pair_sub3[p];
            ++bo.count;
          }
        out[g][o] = bo;
      }
    return out;
  }();
  return opts;
}

struct SupCache {
  std::map<std::tuple<int, int, int>, detail::CubicMax> m;
  const detail::CubicMax& get(int q1, int q2, int t) {
    auto key = std::make_tuple(q1, q2, t);
    auto it = m.find(key);
    if (it == m.end())
      it = m.emplace(key, detail::value_sup(Rat(q1), Rat(q2), t)).first;
    return it->second;
  }
};

struct Accum {
  bool has_witness = false;
  Rat best_lower, best_sigma;
  LocalConfig best_cfg;
  std::string best_str;
  int best_q1 = 0, best_q2 = 0, best_t = 0;
  bool has_upper = false;
  Rat max_upper;
  std::uint64_t combos_valid = 0, configs = 0, lp_classes = 0, exceed = 0;
  std::uint64_t frontier_checks = 0, frontier_mismatch = 0;
  std::uint64_t validated = 0, validation_failures = 0;
  int max_red_beside_smalls = -1;
  bool has_b2ge4 = false;
  Rat up_b2ge4;
  bool has_q1ge7 = false;
  Rat up_q1ge7;
  bool has_r3le21 = false;
  Rat up_r3le21;

  void offer_upper(const Rat& u) {
    if (!has_upper || u > max_upper) {
      max_upper = u;
      has_upper = true;
    }
  }
  static void offer_cond(bool& has, Rat& slot, const Rat& u) {
    if (!has || u > slot) {
      slot = u;
      has = true;
    }
  }
  void offer_lower(const Rat& val, const Rat& sig, const LocalConfig& cfg,
                   int q1, int q2, int t) {
    if (has_witness && val < best_lower) return;
    std::string s = format_config(cfg);
    if (!has_witness || val > best_lower || s < best_str) {
      has_witness = true;
      best_lower = val;
      best_sigma = sig;
      best_cfg = cfg;
      best_str = std::move(s);
      best_q1 = q1;
      best_q2 = q2;
      best_t = t;
    }
  }
  void merge(const Accum& o) {
    if (o.has_witness) {
      if (!has_witness || o.best_lower > best_lower ||
          (o.best_lower == best_lower && o.best_str < best_str)) {
        has_witness = true;
        best_lower = o.best_lower;
        best_sigma = o.best_sigma;
        best_cfg = o.best_cfg;
        best_str = o.best_str;
        best_q1 = o.best_q1;
        best_q2 = o.best_q2;
        best_t = o.best_t;
      }
    }
    if (o.has_upper) offer_upper(o.max_upper);
    combos_valid += o.combos_valid;
    configs += o.configs;
    lp_classes += o.lp_classes;
    exceed += o.exceed;
    frontier_checks += o.frontier_checks;
    frontier_mismatch += o.frontier_mismatch;
    validated += o.validated;
    validation_failures += o.validation_failures;
    max_red_beside_smalls = std::max(max_red_beside_smalls, o.max_red_beside_smalls);
    if (o.has_b2ge4) offer_cond(has_b2ge4, up_b2ge4, o.up_b2ge4);
    if (o.has_q1ge7) offer_cond(has_q1ge7, up_q1ge7, o.up_q1ge7);
    if (o.has_r3le21) offer_cond(has_r3le21, up_r3le21, o.up_r3le21);
  }
};

void process_combo(int flat, const VerifyOptions& opts, Accum& acc,
                   SupCache& cache) {
  const ComboDef d = combo_from_flat(flat);
  const ComboState st = build_state(d);
  if (!st.valid) return;
  ++acc.combos_valid;
  std::vector<detail::Ideal> scratch;
  const std::vector<detail::Ideal>* ideals = nullptr;
  MisMemo mis_memo;
  if (!opts.exhaustive) ideals = admissible_ideals(st, scratch);
  const bool sample = (flat % 523) == 0;
  bool sampled = false;

  const auto& bopts = blue_options();
  for (int o0 = 0; o0 < 4; ++o0)
    for (int o1 = 0; o1 < 4; ++o1)
      for (int o2 = 0; o2 < 4; ++o2) {
        const BlueOption& s0 = bopts[0][o0];
        const BlueOption& s1 = bopts[1][o1];
        const BlueOption& s2 = bopts[2][o2];
        const std::uint32_t b2 = s0.pairs | s1.pairs | s2.pairs;
        if (d.r2 & b2) continue;
        auto frontier = detail::weight_frontier(d.r1, d.r2, b2);
        ++acc.lp_classes;
        const std::uint32_t x0 = s0.excl | s1.excl | s2.excl;
        const int nb2 = s0.count + s1.count + s2.count;

        // blue triples need all three sub-pairs among the stars: a leg x in
        // the (M1,M2) and (M1,M3) grids plus the k-k pair of (M2,M3)
        std::array<int, 3> cand{};
        int nc = 0;
        if (s1.legs & 0b100)
          for (int x = 0; x < 3; ++x)
            if ((s0.legs & (1u << x)) && (s2.legs & (1u << x))) cand[nc++] = x;

        for (int dsub = 0; dsub < (1 << nc); ++dsub) {
          std::uint32_t b3 = 0, x = x0;
          int nb3 = 0;
          for (int ci = 0; ci < nc; ++ci)
            if (dsub & (1 << ci)) {
              int tri = 9 * cand[ci] + 8;
              b3 |= 1u << tri;
              x |= tab().tri_near[tri];
              ++nb3;
            }
          int tmax = 0;
          std::uint32_t rmask = 0;
          if (!opts.exhaustive) {
            for (const auto& id : *ideals)
              if (!(id.mask & x)) {
                tmax = id.size;
                rmask = id.mask;
                break;
              }
          } else {
            auto [sz, mask] = best_free_subset(kTriAll & ~(x | st.fs), st, mis_memo);
            tmax = sz;
            rmask = mask;
          }
          if (tmax > st.cap) {
            rmask = shrink_red(rmask, st.cap, !opts.exhaustive);
            tmax = st.cap;
          }
          const int ttotal = tmax + nb3;
          ++acc.configs;

          Rat cfg_upper;
          bool have_upper = false;
          const detail::CubicMax* best_pt = nullptr;
          int bq1 = 0, bq2 = 0;
          for (const auto& fp : frontier) {
            const auto& cm = cache.get(fp.q1, fp.q2, ttotal);
            if (!have_upper || cm.upper > cfg_upper) {
              cfg_upper = cm.upper;
              have_upper = true;
            }
            if (!best_pt || cm.attained > best_pt->attained) {
              best_pt = &cm;
              bq1 = fp.q1;
              bq2 = fp.q2;
            }
            if (fp.q1 >= 7) Accum::offer_cond(acc.has_q1ge7, acc.up_q1ge7, cm.upper);
          }
          acc.offer_upper(cfg_upper);
          if (cfg_upper > bound58() + opts.tol) ++acc.exceed;
          if (nb2 >= 4) Accum::offer_cond(acc.has_b2ge4, acc.up_b2ge4, cfg_upper);
          if (tmax <= 21) Accum::offer_cond(acc.has_r3le21, acc.up_r3le21, cfg_upper);
          if (d.r1 != 0 || d.r2 != 0)
            acc.max_red_beside_smalls = std::max(acc.max_red_beside_smalls, tmax);

          LocalConfig cfg{d.r1, 511, d.r2, b2, rmask, b3};
          acc.offer_lower(best_pt->attained, best_pt->arg, cfg, bq1, bq2, ttotal);

          if (sample && !sampled) {
            sampled = true;
            for (int which = 0; which < 2; ++which) {
              Rat beta = which == 0 ? Rat(1) : rat(3, 2);
              WeightOptimum wo = max_weight_lp(cfg, beta);
              Rat lpval = beta * beta * wo.q1 + beta * wo.q2;
              lpval.canonicalize();
              Rat fval;
              bool f0 = false;
              for (const auto& fp : frontier) {
                Rat v = beta * beta * fp.q1 + beta * fp.q2;
                v.canonicalize();
                if (!f0 || v > fval) {
                  fval = v;
                  f0 = true;
                }
              }
              ++acc.frontier_checks;
              if (lpval != fval) ++acc.frontier_mismatch;
            }
            ++acc.validated;
            if (!validate_config(cfg).ok) ++acc.validation_failures;
          }
        }
      }
}

ClaimReport claim_pair_bound() {
  ClaimReport cr;
  cr.name = "pair_bound";
  Rat qmax(-1);
  long checked = 0, attain = 0, main_viol = 0;
  long ref1_checked = 0, ref1_viol = 0, ref2_checked = 0, ref2_viol = 0;
  for (int r1 = 0; r1 < 4; ++r1)
    for (std::uint16_t cells : detail::red_grid_cells())
      for (std::uint8_t legs : detail::blue_leg_masks())
        for (int centre = 0; centre < 2; ++centre) {
          PairConfig pc;
          pc.r1 = static_cast<std::uint8_t>(r1);
          pc.r2 = cells;
          pc.b2_legs = legs;
          pc.centre_triple = centre;
          StrahlungResult sr = check_claim_strahlung(pc, Rat(1));
          ++checked;
          if (sr.q_max > qmax) qmax = sr.q_max;
          if (sr.q_max == 6) ++attain;
          if (!sr.main_ok) ++main_viol;
          if (sr.refine1_applicable) {
            ++ref1_checked;
            if (!sr.refine1_ok) ++ref1_viol;
          }
          if (sr.refine2_applicable) {
            ++ref2_checked;
            if (!sr.refine2_ok) ++ref2_viol;
          }
        }
  cr.pass = qmax == 6 && main_viol == 0 && ref1_viol == 0 && ref2_viol == 0;
  cr.details.add("pair_configs", static_cast<long long>(checked));
  cr.details.add("q_max", qmax);
  cr.details.add("attaining", static_cast<long long>(attain));
  cr.details.add("main_violations", static_cast<long long>(main_viol));
  cr.details.add("refine1_checked", static_cast<long long>(ref1_checked));
  cr.details.add("refine1_violations", static_cast<long long>(ref1_viol));
  cr.details.add("refine2_checked", static_cast<long long>(ref2_checked));
  cr.details.add("refine2_violations", static_cast<long long>(ref2_viol));
  return cr;
}

ClaimReport claim_blue_triple_structure() {
  ClaimReport cr;
  cr.name = "blue_triple_structure";
  const auto& T = tab();
  int candidates = 0;
  bool contain = true;
  for (int t = 0; t < 27; ++t) {
    bool admissible = true;
    for (int p = 0; p < 27 && admissible; ++p) {
      if ((T.pair_vmask[p] & ~T.tri_vmask[t]) != 0) continue;
      int centre = T.star_centre[T.pair_grid[p]];
      if (!(T.pair_vmask[p] & (1u << centre))) admissible = false;
    }
    if (admissible) {
      ++candidates;
      // must contain the k of the second and third triple
      if (!(T.tri_vmask[t] & (1u << 5)) || !(T.tri_vmask[t] & (1u << 8)))
        contain = false;
    }
  }
  cr.pass = contain && candidates <= 3;
  cr.details.add("candidates", candidates);
  cr.details.add("all_contain_top_two_k", contain);
  cr.details.add("max_blue_triples", candidates);
  return cr;
}

ClaimReport claim_red_triple_cap(const Accum* sweep) {
  ClaimReport cr;
  cr.name = "red_triple_cap";
  const auto& T = tab();
  // the four disjoint triple pairs covering all j- and k-positions
  std::vector<std::pair<int, int>> cover;
  for (int t = 0; t < 27; ++t) {
    auto [a, b, c] = T.tri_roles[t];
    if (a >= 1 && b >= 1 && c >= 1) {
      int u = 9 * (3 - a) + 3 * (3 - b) + (3 - c);
      if (t < u) cover.emplace_back(t, u);
    }
  }
  // removing any three triples leaves one covering pair intact
  long removals = 0, removals_bad = 0;
  for (int x = 0; x < 27; ++x)
    for (int y = x + 1; y < 27; ++y)
      for (int z = y + 1; z < 27; ++z) {
        ++removals;
        std::uint32_t rm = (1u << x) | (1u << y) | (1u << z);
        bool survive = false;
        for (auto [t, u] : cover)
          if (!(rm & (1u << t)) && !(rm & (1u << u))) {
            survive = true;
            break;
          }
        if (!survive) ++removals_bad;
      }
  // a covering pair is incompatible with any red singleton or any red pair
  // lowered into the i-positions
  long derivations = 0, derivation_fails = 0;
  for (auto [t, u] : cover) {
    for (int v : {0, 3, 6}) {
      ++derivations;
      std::vector<std::uint16_t> edges = {T.tri_vmask[t], T.tri_vmask[u],
                                          static_cast<std::uint16_t>(1u << v)};
      if (!detail::steady_violation_exists(edges)) ++derivation_fails;
    }
    for (int g = 0; g < 3; ++g) {
      ++derivations;
      std::vector<std::uint16_t> edges = {T.tri_vmask[t], T.tri_vmask[u],
                                          T.pair_vmask[T.grid_pair[g][0]]};
      if (!detail::steady_violation_exists(edges)) ++derivation_fails;
    }
  }
  // every nonempty closed red grid pattern reaches the i-i pair
  bool lowering_ok = true;
  for (std::uint16_t cells : detail::red_grid_cells())
    if (cells != 0 && !(cells & 1u)) lowering_ok = false;

  cr.pass = cover.size() == 4 && removals_bad == 0 && derivation_fails == 0 &&
            lowering_ok;
  cr.details.add("covering_pairs", static_cast<long long>(cover.size()));
  cr.details.add("removals_checked", static_cast<long long>(removals));
  cr.details.add("removals_without_pair", static_cast<long long>(removals_bad));
  cr.details.add("steadiness_derivations", static_cast<long long>(derivations));
  cr.details.add("derivation_failures", static_cast<long long>(derivation_fails));
  cr.details.add("grid_lowering_ok", lowering_ok);
  if (sweep) {
    cr.details.add("max_red_triples_beside_red_smalls",
                   static_cast<long long>(sweep->max_red_beside_smalls));
    cr.pass = cr.pass && sweep->max_red_beside_smalls <= 23;
  }
  return cr;
}

ClaimReport claim_exclusion_counts(bool exhaustive) {
  ClaimReport cr;
  cr.name = "exclusion_counts";
  const auto& T = tab();
  const auto& ideals = detail::triple_ideals();
  auto red_capacity = [&](std::uint32_t x) {
    if (exhaustive) return 27 - pc32(x);
    for (const auto& id : ideals)
      if (!(id.mask & x)) return id.size;
    return 0;
  };
  const auto& bopts = blue_options();
  int max_two = -1, max_three = -1, max_four = -1, max_sixkk = -1;
  bool two_eq_kk_only = true;
  long selections = 0;
  for (int o0 = 0; o0 < 4; ++o0)
    for (int o1 = 0; o1 < 4; ++o1)
      for (int o2 = 0; o2 < 4; ++o2) {
        const BlueOption& s0 = bopts[0][o0];
        const BlueOption& s1 = bopts[1][o1];
        const BlueOption& s2 = bopts[2][o2];
        ++selections;
        const std::uint32_t b2 = s0.pairs | s1.pairs | s2.pairs;
        const std::uint32_t x0 = s0.excl | s1.excl | s2.excl;
        const int nb2 = s0.count + s1.count + s2.count;
        std::array<int, 3> cand{};
        int nc = 0;
        if (s1.legs & 0b100)
          for (int xr = 0; xr < 3; ++xr)
            if ((s0.legs & (1u << xr)) && (s2.legs & (1u << xr))) cand[nc++] = xr;
        for (int dsub = 0; dsub < (1 << nc); ++dsub) {
          std::uint32_t x = x0;
          int nb3 = 0;
          for (int ci = 0; ci < nc; ++ci)
            if (dsub & (1 << ci)) {
              x |= T.tri_near[9 * cand[ci] + 8];
              ++nb3;
            }
          int cap_red = red_capacity(x);
          int total = cap_red + nb3;
          if (nb2 == 2 && nb3 == 0) {
            max_two = std::max(max_two, cap_red);
            if (cap_red == 22)
              for (std::uint32_t m = b2; m; m &= m - 1)
                if (T.pair_cell[std::countr_zero(m)] != 8) two_eq_kk_only = false;
          }
          if (nb2 == 3) max_three = std::max(max_three, total);
          if (nb2 >= 4) max_four = std::max(max_four, total);
          bool all_kk = (s0.legs & 0b100) && (s1.legs & 0b100) && (s2.legs & 0b100);
          if (nb2 >= 6 && all_kk) max_sixkk = std::max(max_sixkk, total);
        }
      }
  cr.pass = max_two <= 22 && two_eq_kk_only && max_three <= 21 &&
            max_four <= 19 && max_sixkk <= 17;
  cr.details.add("blue_selections", static_cast<long long>(selections));
  cr.details.add("max_red_with_two_pairs", max_two);
  cr.details.add("two_pair_equality_kk_only", two_eq_kk_only);
  cr.details.add("max_total_with_three_pairs", max_three);
  cr.details.add("max_total_with_four_plus_pairs", max_four);
  cr.details.add("max_total_with_six_incl_kk", max_sixkk);
  return cr;
}

ClaimReport conditional_claim(const std::string& name, bool has, const Rat& value,
                              const Rat& tol, const char* value_key) {
  ClaimReport cr;
  cr.name = name;
  cr.pass = !has || value <= bound58() + tol;
  cr.details.add("applicable", has);
  if (has) {
    cr.details.add(value_key, value);
    Rat margin = bound58() - value;
    margin.canonicalize();
    cr.details.add("margin_below_bound", margin);
  }
  return cr;
}

}  // namespace

std::vector<ClaimReport> verify_claims_standalone(const VerifyOptions& opts) {
  std::vector<ClaimReport> claims;
  claims.push_back(claim_pair_bound());
  claims.push_back(claim_blue_triple_structure());
  claims.push_back(claim_red_triple_cap(nullptr));
  claims.push_back(claim_exclusion_counts(opts.exhaustive));
  return claims;
}

VerificationReport verify_local_structure(const VerifyOptions& opts) {
  if (opts.workers < 1) throw std::invalid_argument("workers must be positive");
  if (opts.grid_step <= 0) throw std::invalid_argument("grid step must be positive");
  if (opts.tol < 0) throw std::invalid_argument("tolerance must be nonnegative");

  const int W = opts.workers;
  std::vector<Accum> accs(W);
  auto work = [&](int w) {
    SupCache cache;
    for (int flat = w; flat < kCombosTotal; flat += W)
      process_combo(flat, opts, accs[w], cache);
  };
  if (W == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(W);
    for (int w = 0; w < W; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }
  Accum total;
  for (const auto& a : accs) total.merge(a);

  VerificationReport rep;
  rep.global_max_lower = total.best_lower;
  rep.global_max_upper = total.max_upper;
  rep.witness_sigma = total.best_sigma;
  rep.witness = total.best_cfg;
  rep.configs = total.configs;
  rep.lp_classes = total.lp_classes;
  rep.exceedances = total.exceed;

  rep.claims.push_back(claim_pair_bound());
  rep.claims.push_back(claim_blue_triple_structure());
  rep.claims.push_back(claim_red_triple_cap(&total));
  rep.claims.push_back(claim_exclusion_counts(opts.exhaustive));
  rep.claims.push_back(conditional_claim("blue_pair_cap", total.has_b2ge4,
                                         total.up_b2ge4, opts.tol,
                                         "max_value_four_plus_blue_pairs"));
  rep.claims.push_back(conditional_claim("singleton_cap", total.has_q1ge7,
                                         total.up_q1ge7, opts.tol,
                                         "max_value_singleton_weight_seven_plus"));
  rep.claims.push_back(conditional_claim("many_red_triples", total.has_r3le21,
                                         total.up_r3le21, opts.tol,
                                         "max_value_red_triples_below_22"));
  bool claims_pass = true;
  for (const auto& c : rep.claims) claims_pass = claims_pass && c.pass;

  rep.pass = total.exceed == 0 && total.has_upper && total.has_witness &&
             rep.global_max_upper <= bound58() + opts.tol &&
             rep.global_max_lower >= bound58() - opts.attain_window &&
             total.frontier_mismatch == 0 && total.validation_failures == 0 &&
             claims_pass;

  // the witness value restricted to the requested sigma grid
  Rat grid_best, grid_arg;
  {
    auto c = detail::value_coeffs(Rat(total.best_q1), Rat(total.best_q2),
                                  Rat(total.best_t));
    auto eval = [&](const Rat& sgm) {
      Rat v = ((c[3] * sgm + c[2]) * sgm + c[1]) * sgm + c[0];
      v.canonicalize();
      return v;
    };
    bool first = true;
    for (Rat sgm = sigma_upper();; sgm -= opts.grid_step) {
      bool last = sgm <= sigma_lower();
      if (last) sgm = sigma_lower();
      Rat v = eval(sgm);
      if (first || v > grid_best) {
        grid_best = v;
        grid_arg = sgm;
        first = false;
      }
      if (last) break;
    }
  }

  Report& r = rep.report;
  r.add("mode", opts.exhaustive ? "exhaustive" : "closed");
  r.add("grid_step", opts.grid_step);
  r.add("tol", opts.tol);
  r.add("attain_window", opts.attain_window);
  r.add("sigma_lo", sigma_lower());
  r.add("sigma_hi", sigma_upper());
  r.add("combos_total", static_cast<long long>(kCombosTotal));
  r.add("combos_valid", static_cast<unsigned long long>(total.combos_valid));
  r.add("configs", static_cast<unsigned long long>(total.configs));
  r.add("lp_classes", static_cast<unsigned long long>(total.lp_classes));
  r.add("frontier_checks", static_cast<unsigned long long>(total.frontier_checks));
  r.add("frontier_mismatches",
        static_cast<unsigned long long>(total.frontier_mismatch));
  r.add("validated_samples", static_cast<unsigned long long>(total.validated));
  r.add("validation_failures",
        static_cast<unsigned long long>(total.validation_failures));
  r.add("exceedances", static_cast<unsigned long long>(total.exceed));
  r.add("global_max_lower", rep.global_max_lower);
  r.add("global_max_lower_dec", rat_decimal(rep.global_max_lower, 12));
  r.add("global_max_upper", rep.global_max_upper);
  r.add("global_max_upper_dec", rat_decimal(rep.global_max_upper, 12));
  r.add("witness_sigma", rep.witness_sigma);
  r.add("witness_q1", total.best_q1);
  r.add("witness_q2", total.best_q2);
  r.add("witness_t", total.best_t);
  r.add("witness_grid_value", grid_best);
  r.add("witness_grid_sigma", grid_arg);
  for (const auto& c : rep.claims) r.add("claim_" + c.name + "_pass", c.pass);
  r.add("pass", rep.pass);
  return rep;
}

}  // namespace hg
