#include "hg/localstruct.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hg/simplex.hpp"
#include "localdetail.hpp"

namespace hg {

const std::array<std::string, 9> kPositionNames = {
    "i1", "j1", "k1", "i2", "j2", "k2", "i3", "j3", "k3"};

namespace {

constexpr int kGridTriples[3][2] = {{0, 1}, {1, 2}, {0, 2}};

int grid_of_triples(int ta, int tb) {
  if (ta > tb) std::swap(ta, tb);
  if (ta == 0 && tb == 1) return 0;
  if (ta == 1 && tb == 2) return 1;
  if (ta == 0 && tb == 2) return 2;
  throw std::invalid_argument("positions must lie in two distinct triples");
}

constexpr std::uint32_t kPairAll = (1u << 27) - 1;
constexpr std::uint32_t kTriAll = (1u << 27) - 1;

int popcount32(std::uint32_t m) { return std::popcount(m); }
int popcount16(std::uint16_t m) { return std::popcount(static_cast<unsigned>(m)); }

void require_in_range(const LocalConfig& cfg) {
  if (cfg.r1 >= 512 || cfg.b1 >= 512)
    throw std::invalid_argument("singleton mask out of range");
  if (cfg.r2 > kPairAll || cfg.b2 > kPairAll)
    throw std::invalid_argument("pair mask out of range");
  if (cfg.r3 > kTriAll || cfg.b3 > kTriAll)
    throw std::invalid_argument("triple mask out of range");
}

}  // namespace

int crossing_pair_index(int pos_a, int pos_b) {
  if (pos_a < 0 || pos_a > 8 || pos_b < 0 || pos_b > 8)
    throw std::invalid_argument("position out of range");
  int ta = triple_of(pos_a), tb = triple_of(pos_b);
  if (ta == tb) throw std::invalid_argument("pair endpoints share a triple");
  if (ta > tb) std::swap(pos_a, pos_b);
  int g = grid_of_triples(triple_of(pos_a), triple_of(pos_b));
  return 9 * g + 3 * role_of(pos_a) + role_of(pos_b);
}

std::array<int, 2> crossing_pair_positions(int pair_idx) {
  if (pair_idx < 0 || pair_idx >= 27)
    throw std::invalid_argument("pair index out of range");
  int g = pair_idx / 9, cell = pair_idx % 9;
  return {position_of(kGridTriples[g][0], cell / 3),
          position_of(kGridTriples[g][1], cell % 3)};
}

std::array<int, 3> crossing_triple_positions(int triple_idx) {
  if (triple_idx < 0 || triple_idx >= 27)
    throw std::invalid_argument("triple index out of range");
  return {position_of(0, triple_idx / 9), position_of(1, (triple_idx / 3) % 3),
          position_of(2, triple_idx % 3)};
}

TripleSystem TripleSystem::canonical() {
  TripleSystem ts;
  for (int t = 0; t < 3; ++t)
    for (int r = 0; r < 3; ++r) ts.M[t][r] = position_of(t, r);
  return ts;
}

void TripleSystem::validate() const {
  std::set<int> seen;
  for (const auto& tri : M)
    for (int v : tri) seen.insert(v);
  if (seen.size() != 9)
    throw std::invalid_argument("triple system needs nine distinct vertices");
}

namespace detail {

namespace {

LocalTables build_tables() {
  LocalTables T{};
  for (int g = 0; g < 3; ++g)
    for (int rl = 0; rl < 3; ++rl)
      for (int rh = 0; rh < 3; ++rh) {
        int idx = 9 * g + 3 * rl + rh;
        int pa = position_of(kGridTriples[g][0], rl);
        int pb = position_of(kGridTriples[g][1], rh);
        T.pair_pos[idx] = {pa, pb};
        T.pair_vmask[idx] = static_cast<std::uint16_t>((1u << pa) | (1u << pb));
        T.pair_grid[idx] = g;
        T.pair_cell[idx] = 3 * rl + rh;
        T.grid_pair[g][3 * rl + rh] = idx;
      }
  for (int p = 0; p < 27; ++p) {
    T.pair_overlap[p] = 0;
    for (int q = 0; q < 27; ++q)
      if (T.pair_vmask[p] & T.pair_vmask[q]) T.pair_overlap[p] |= 1u << q;
  }
  for (int t = 0; t < 27; ++t) {
    int a = t / 9, b = (t / 3) % 3, c = t % 3;
    T.tri_roles[t] = {a, b, c};
    T.tri_vmask[t] = static_cast<std::uint16_t>((1u << a) | (1u << (3 + b)) |
                                                (1u << (6 + c)));
    T.tri_preds[t] = 0;
    if (a > 0) T.tri_preds[t] |= 1u << (t - 9);
    if (b > 0) T.tri_preds[t] |= 1u << (t - 3);
    if (c > 0) T.tri_preds[t] |= 1u << (t - 1);
  }
  for (int t = 0; t < 27; ++t) {
    T.tri_disj[t] = 0;
    T.tri_near[t] = 0;
    for (int u = 0; u < 27; ++u) {
      int same = 0;
      for (int d = 0; d < 3; ++d)
        if (T.tri_roles[t][d] == T.tri_roles[u][d]) ++same;
      if (same == 0) T.tri_disj[t] |= 1u << u;
      if (same >= 2) T.tri_near[t] |= 1u << u;
    }
  }
  for (int p = 0; p < 27; ++p) {
    T.pair_sub3[p] = 0;
    for (int t = 0; t < 27; ++t)
      if ((T.tri_vmask[t] & T.pair_vmask[p]) == T.pair_vmask[p])
        T.pair_sub3[p] |= 1u << t;
  }
  for (int v = 0; v < 9; ++v) {
    T.touch_pairs[v] = 0;
    for (int p = 0; p < 27; ++p)
      if (T.pair_vmask[p] & (1u << v)) T.touch_pairs[v] |= 1u << p;
  }
  for (int g = 0; g < 3; ++g) {
    T.star_centre[g] = position_of(kGridTriples[g][1], 2);
    T.star_leg_triple[g] = kGridTriples[g][0];
    for (int r = 0; r < 3; ++r) T.star_leg_pair[g][r] = T.grid_pair[g][3 * r + 2];
  }
  return T;
}

}  // namespace

const LocalTables& tab() {
  static const LocalTables T = build_tables();
  return T;
}

const std::vector<Ideal>& triple_ideals() {
  static const std::vector<Ideal> ideals = [] {
    const auto& T = tab();
    std::vector<Ideal> out;
    std::function<void(int, std::uint32_t)> rec = [&](int t, std::uint32_t m) {
      if (t == 27) {
        out.push_back({m, popcount32(m)});
        return;
      }
      rec(t + 1, m);  // exclude
      if ((T.tri_preds[t] & ~m) == 0) rec(t + 1, m | (1u << t));
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
      if (x.size != y.size) return x.size > y.size;
      return x.mask < y.mask;
    });
    return out;
  }();
  return ideals;
}

const std::vector<std::uint16_t>& red_grid_cells() {
  static const std::vector<std::uint16_t> cells = [] {
    // cell = 3*row + col over a 3x3 grid; down-closed under lowering a
    // coordinate; the unique five-cell exception is full row 0 plus col 0
    constexpr std::uint16_t kException = 0b001001111;
    std::vector<std::uint16_t> out;
    for (std::uint16_t m = 0; m < 512; ++m) {
      bool closed = true;
      for (int cell = 0; cell < 9 && closed; ++cell) {
        if (!(m & (1u << cell))) continue;
        int r = cell / 3, c = cell % 3;
        if (r > 0 && !(m & (1u << (cell - 3)))) closed = false;
        if (c > 0 && !(m & (1u << (cell - 1)))) closed = false;
      }
      if (!closed) continue;
      int sz = popcount16(m);
      if (sz <= 4 || (sz == 5 && m == kException)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](std::uint16_t a, std::uint16_t b) {
      int sa = popcount16(a), sb = popcount16(b);
      if (sa != sb) return sa < sb;
      return a < b;
    });
    return out;
  }();
  return cells;
}

const std::array<std::uint8_t, 4>& blue_leg_masks() {
  static const std::array<std::uint8_t, 4> legs = {0b000, 0b100, 0b110, 0b111};
  return legs;
}

bool steady_violation_exists(const std::vector<std::uint16_t>& edges) {
  const int n = static_cast<int>(edges.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (edges[a] & edges[b]) continue;
      std::uint16_t ab = edges[a] | edges[b];
      for (int c = b + 1; c < n; ++c) {
        if (ab & edges[c]) continue;
        if (popcount16((ab | edges[c]) & kIMask) <= 2) return true;
      }
    }
  return false;
}

CubicMax cubic_max(const std::array<Rat, 4>& c, const Rat& lo, const Rat& hi,
                   const Rat& bracket_width) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  auto f = [&](const Rat& x) {
    Rat v = ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
    v.canonicalize();
    return v;
  };
  Rat d2 = 3 * c[3], d1 = 2 * c[2], d0 = c[1];
  auto fp = [&](const Rat& x) {
    Rat v = (d2 * x + d1) * x + d0;
    v.canonicalize();
    return v;
  };

  CubicMax best{f(lo), lo, Rat(0)};
  auto offer = [&](const Rat& val, const Rat& arg) {
    if (val > best.attained) {
      best.attained = val;
      best.arg = arg;
    }
  };
  offer(f(hi), hi);
  Rat upper = best.attained;
  auto offer_upper = [&](const Rat& u) {
    if (u > upper) upper = u;
  };

  if (d2 == 0) {
    if (d1 != 0) {
      Rat root = -d0 / d1;
      root.canonicalize();
      if (lo < root && root < hi) offer(f(root), root);
    }
    // d1 == 0: f' constant, endpoints cover the maximum
    best.upper = std::max(upper, best.attained);
    return best;
  }

  Rat vertex = -d1 / (2 * d2);
  vertex.canonicalize();
  std::vector<std::pair<Rat, Rat>> segs;
  if (lo < vertex && vertex < hi) {
    segs.emplace_back(lo, vertex);
    segs.emplace_back(vertex, hi);
  } else {
    segs.emplace_back(lo, hi);
  }
  for (auto& [a0, b0] : segs) {
    Rat fa = fp(a0), fb = fp(b0);
    if (fa >= 0 && fb >= 0) {
      offer(f(b0), b0);
    } else if (fa <= 0 && fb <= 0) {
      offer(f(a0), a0);
    } else if (fa > 0 && fb < 0) {
      // f' decreases through a root: bisect to a bracket, then bound the
      // overshoot by the derivative at the left end
      Rat x0 = a0, x1 = b0, f0 = fa;
      bool exact = false;
      while (x1 - x0 > bracket_width) {
        Rat m = (x0 + x1) / 2;
        m.canonicalize();
        Rat fm = fp(m);
        if (fm == 0) {
          offer(f(m), m);
          exact = true;
          break;
        }
        if (fm > 0) {
          x0 = m;
          f0 = fm;
        } else {
          x1 = m;
        }
      }
      if (!exact) {
        offer(f(x0), x0);
        offer(f(x1), x1);
        Rat u = f(x0) + f0 * bracket_width;
        u.canonicalize();
        offer_upper(u);
      }
    }
    // fa < 0 < fb: interior minimum, endpoints already offered
  }
  best.upper = std::max(upper, best.attained);
  return best;
}

std::array<Rat, 4> value_coeffs(const Rat& q1, const Rat& q2, const Rat& t) {
  std::array<Rat, 4> c = {Rat(1), q1 - 9, 27 - 6 * q1 + q2,
                          t - 27 + 9 * q1 - 3 * q2};
  for (auto& x : c) x.canonicalize();
  return c;
}

CubicMax value_sup(const Rat& q1, const Rat& q2, long t) {
  static const Rat width = rat(1, 100000000000000L);
  return cubic_max(value_coeffs(q1, q2, Rat(t)), sigma_lower(), sigma_upper(),
                   width);
}

std::vector<FrontierPoint> weight_frontier(std::uint16_t r1, std::uint32_t r2,
                                           std::uint32_t b2) {
  const auto& T = tab();
  struct SinglePattern {
    std::uint16_t s1;
    int count;
    std::uint32_t pair_kill;  // red pairs with an endpoint among the singles
  };
  static const std::vector<SinglePattern> patterns = [] {
    const auto& TT = tab();
    std::vector<SinglePattern> out;
    for (std::uint8_t a : blue_leg_masks())
      for (std::uint8_t b : blue_leg_masks())
        for (std::uint8_t c : blue_leg_masks()) {
          std::uint16_t s1 = static_cast<std::uint16_t>(a | (b << 3) | (c << 6));
          std::uint32_t kill = 0;
          for (int v = 0; v < 9; ++v)
            if (s1 & (1u << v)) kill |= TT.touch_pairs[v];
          out.push_back({s1, popcount16(s1), kill});
        }
    return out;
  }();

  std::array<int, 10> best_q2;
  best_q2.fill(-1);
  std::uint32_t s2 = b2;
  while (true) {
    std::uint32_t pair_kill = 0;
    std::uint16_t single_cover = 0;
    int nb = 0;
    for (std::uint32_t m = s2; m; m &= m - 1) {
      int p = std::countr_zero(m);
      pair_kill |= T.pair_overlap[p];
      single_cover |= T.pair_vmask[p];
      ++nb;
    }
    int q1_free = popcount16(static_cast<std::uint16_t>(r1 & ~single_cover));
    for (const auto& pat : patterns) {
      int q1 = pat.count > 0 ? pat.count : q1_free;
      int q2 = nb + popcount32(r2 & ~(pat.pair_kill | pair_kill));
      if (q2 > best_q2[q1]) best_q2[q1] = q2;
    }
    if (s2 == 0) break;
    s2 = (s2 - 1) & b2;
  }

  std::vector<FrontierPoint> frontier;
  int run = -1;
  for (int q1 = 9; q1 >= 0; --q1) {
    if (best_q2[q1] > run) {
      frontier.push_back({q1, best_q2[q1]});
      run = best_q2[q1];
    }
  }
  return frontier;
}

}  // namespace detail

ValidationResult validate_config(const LocalConfig& cfg) {
  require_in_range(cfg);
  const auto& T = detail::tab();
  std::set<std::string> bad;

  // a: blue down-closure
  for (std::uint32_t m = cfg.b2; m; m &= m - 1) {
    int p = std::countr_zero(m);
    auto [u, v] = T.pair_pos[p];
    if (!(cfg.b1 & (1u << u)) || !(cfg.b1 & (1u << v))) bad.insert("a");
  }
  for (std::uint32_t m = cfg.b3; m; m &= m - 1) {
    int t = std::countr_zero(m);
    for (int p = 0; p < 27; ++p)
      if ((T.pair_vmask[p] & ~T.tri_vmask[t]) == 0 && !(cfg.b2 & (1u << p)))
        bad.insert("a");
  }

  // b: opposite-colour edges of size >= 2 share at most one vertex
  if (cfg.r2 & cfg.b2) bad.insert("b");
  for (std::uint32_t m = cfg.r2; m; m &= m - 1) {
    int p = std::countr_zero(m);
    for (std::uint32_t w = cfg.b3; w; w &= w - 1) {
      int t = std::countr_zero(w);
      if ((T.pair_vmask[p] & ~T.tri_vmask[t]) == 0) bad.insert("b");
    }
  }
  for (std::uint32_t m = cfg.r3; m; m &= m - 1) {
    int t = std::countr_zero(m);
    for (std::uint32_t w = cfg.b2; w; w &= w - 1) {
      int p = std::countr_zero(w);
      if ((T.pair_vmask[p] & ~T.tri_vmask[t]) == 0) bad.insert("b");
    }
    if (cfg.b3 & T.tri_near[t]) bad.insert("b");
  }

  // c: steadiness over the base triples and the red edges
  {
    std::vector<std::uint16_t> edges = {0b000000111, 0b000111000, 0b111000000};
    for (int v = 0; v < 9; ++v)
      if (cfg.r1 & (1u << v)) edges.push_back(static_cast<std::uint16_t>(1u << v));
    for (std::uint32_t m = cfg.r2; m; m &= m - 1)
      edges.push_back(T.pair_vmask[std::countr_zero(m)]);
    for (std::uint32_t m = cfg.r3; m; m &= m - 1)
      edges.push_back(T.tri_vmask[std::countr_zero(m)]);
    if (detail::steady_violation_exists(edges)) bad.insert("c");
  }

  // e: red grids down-closed, blue grids up-closed (within-triple order)
  for (int g = 0; g < 3; ++g) {
    for (int cell = 0; cell < 9; ++cell) {
      int p = T.grid_pair[g][cell];
      int r = cell / 3, col = cell % 3;
      if (cfg.r2 & (1u << p)) {
        if (r > 0 && !(cfg.r2 & (1u << T.grid_pair[g][cell - 3]))) bad.insert("e");
        if (col > 0 && !(cfg.r2 & (1u << T.grid_pair[g][cell - 1]))) bad.insert("e");
      }
      if (cfg.b2 & (1u << p)) {
        if (r < 2 && !(cfg.b2 & (1u << T.grid_pair[g][cell + 3]))) bad.insert("e");
        if (col < 2 && !(cfg.b2 & (1u << T.grid_pair[g][cell + 1]))) bad.insert("e");
      }
    }
  }

  // g: blue pairs form stars at the k of the higher triple
  for (std::uint32_t m = cfg.b2; m; m &= m - 1) {
    int p = std::countr_zero(m);
    int centre = T.star_centre[T.pair_grid[p]];
    if (!(T.pair_vmask[p] & (1u << centre))) bad.insert("g");
  }

  // h: red singletons at i-positions; per-grid pair caps
  if (cfg.r1 & ~detail::kIMask) bad.insert("h");
  std::array<int, 3> grid_count{};
  std::array<std::uint16_t, 3> grid_cells{};
  for (std::uint32_t m = cfg.r2; m; m &= m - 1) {
    int p = std::countr_zero(m);
    ++grid_count[T.pair_grid[p]];
    grid_cells[T.pair_grid[p]] |= static_cast<std::uint16_t>(1u << T.pair_cell[p]);
  }
  for (int g = 0; g < 3; ++g) {
    if (grid_count[g] > 5) bad.insert("h");
    if (grid_count[g] == 5 && grid_cells[g] != 0b001001111) bad.insert("h");
  }

  // j: many red triples restrict the pair grids
  int t3 = popcount32(cfg.r3);
  if (t3 >= 20) {
    for (int g = 0; g < 3; ++g)
      if (grid_count[g] > 4) bad.insert("j");
  }
  if (t3 >= 22 && grid_count[0] == 4 && grid_count[1] == 4 && grid_count[2] == 4) {
    for (std::uint32_t m = cfg.r2; m; m &= m - 1)
      if (T.pair_vmask[std::countr_zero(m)] & detail::kKMask) bad.insert("j");
  }

  ValidationResult res;
  res.violated.assign(bad.begin(), bad.end());
  res.ok = res.violated.empty();
  return res;
}

std::string format_config(const LocalConfig& cfg) {
  require_in_range(cfg);
  const auto& T = detail::tab();
  std::ostringstream os;
  auto singles = [&](std::uint16_t m) {
    for (int v = 0; v < 9; ++v)
      if (m & (1u << v)) os << ' ' << kPositionNames[v];
  };
  auto pairs = [&](std::uint32_t m) {
    for (; m; m &= m - 1) {
      int p = std::countr_zero(m);
      os << ' ' << kPositionNames[T.pair_pos[p][0]] << '-'
         << kPositionNames[T.pair_pos[p][1]];
    }
  };
  auto triples = [&](std::uint32_t m) {
    for (; m; m &= m - 1) {
      int t = std::countr_zero(m);
      auto pos = crossing_triple_positions(t);
      os << ' ' << kPositionNames[pos[0]] << '-' << kPositionNames[pos[1]] << '-'
         << kPositionNames[pos[2]];
    }
  };
  os << "R1:";
  singles(cfg.r1);
  os << "\nR2:";
  pairs(cfg.r2);
  os << "\nR3:";
  triples(cfg.r3);
  os << "\nB1:";
  singles(cfg.b1);
  os << "\nB2:";
  pairs(cfg.b2);
  os << "\nB3:";
  triples(cfg.b3);
  os << '\n';
  return os.str();
}

Rat f_spt(const Rat& sigma, const Rat& s, const Rat& p, const Rat& t) {
  if (sigma <= 0 || sigma > rat(1, 3))
    throw std::invalid_argument("sigma must lie in (0, 1/3]");
  Rat u = 1 - 3 * sigma;
  Rat v = u * u * u + s * sigma * u * u + p * sigma * sigma * u +
          t * sigma * sigma * sigma;
  v.canonicalize();
  return v;
}

const Rat& sigma_lower() {
  static const Rat lo = [] {
    // 1 - 10^18/c with c = floor(cbrt(2) * 10^18); an exact rational within
    // 10^-18 below the irrational sweep endpoint, so the range is a superset
    mpz_class ten18;
    mpz_ui_pow_ui(ten18.get_mpz_t(), 10, 18);
    mpz_class arg = 2 * ten18 * ten18 * ten18;
    mpz_class c;
    mpz_root(c.get_mpz_t(), arg.get_mpz_t(), 3);
    Rat r = 1 - Rat(ten18) / Rat(c);
    r.canonicalize();
    return r;
  }();
  return lo;
}

const Rat& sigma_upper() {
  static const Rat hi = rat(1, 4);
  return hi;
}

SigmaFrame make_sigma_frame(const Rat& sigma, const Rat& q1, const Rat& q2) {
  if (sigma <= 0 || sigma > rat(1, 4))
    throw std::invalid_argument("sigma must lie in (0, 1/4]");
  SigmaFrame fr;
  fr.sigma = sigma;
  fr.beta = 1 / sigma - 3;
  fr.beta.canonicalize();
  fr.q1 = q1;
  fr.q2 = q2;
  return fr;
}

WeightOptimum max_weight_lp(const LocalConfig& cfg, const Rat& beta) {
  require_in_range(cfg);
  if (beta < 1) throw std::invalid_argument("beta must be at least 1");
  const auto& T = detail::tab();

  enum Kind { kRedSingle, kRedPair, kBlueSingle, kBluePair };
  struct Var {
    Kind kind;
    int idx;
  };
  std::vector<Var> vars;
  std::array<int, 9> rs_var, bs_var;
  std::array<int, 27> rp_var, bp_var;
  rs_var.fill(-1);
  bs_var.fill(-1);
  rp_var.fill(-1);
  bp_var.fill(-1);
  for (int v = 0; v < 9; ++v)
    if (cfg.r1 & (1u << v)) {
      rs_var[v] = static_cast<int>(vars.size());
      vars.push_back({kRedSingle, v});
    }
  for (int p = 0; p < 27; ++p)
    if (cfg.r2 & (1u << p)) {
      rp_var[p] = static_cast<int>(vars.size());
      vars.push_back({kRedPair, p});
    }
  for (int v = 0; v < 9; ++v)
    if (cfg.b1 & (1u << v)) {
      bs_var[v] = static_cast<int>(vars.size());
      vars.push_back({kBlueSingle, v});
    }
  for (int p = 0; p < 27; ++p)
    if (cfg.b2 & (1u << p)) {
      bp_var[p] = static_cast<int>(vars.size());
      vars.push_back({kBluePair, p});
    }

  const int n = static_cast<int>(vars.size());
  LinearProgram lp;
  lp.c.assign(n, Rat(0));
  Rat beta2 = beta * beta;
  beta2.canonicalize();
  for (int i = 0; i < n; ++i)
    lp.c[i] = (vars[i].kind == kRedSingle || vars[i].kind == kBlueSingle) ? beta2
                                                                          : beta;
  auto add_box = [&](int i) {
    std::vector<Rat> row(n, Rat(0));
    row[i] = 1;
    lp.A.push_back(std::move(row));
    lp.b.push_back(Rat(1));
  };
  auto add_sum_le1 = [&](int i, int j) {
    std::vector<Rat> row(n, Rat(0));
    row[i] = 1;
    row[j] = 1;
    lp.A.push_back(std::move(row));
    lp.b.push_back(Rat(1));
  };
  for (int i = 0; i < n; ++i) add_box(i);

  // opposed weights: red singleton vs every blue singleton
  for (int u = 0; u < 9; ++u)
    if (rs_var[u] >= 0)
      for (int v = 0; v < 9; ++v)
        if (bs_var[v] >= 0) add_sum_le1(rs_var[u], bs_var[v]);
  // red pair vs blue singleton at one of its endpoints
  for (int p = 0; p < 27; ++p)
    if (rp_var[p] >= 0)
      for (int v : T.pair_pos[p])
        if (bs_var[v] >= 0) add_sum_le1(rp_var[p], bs_var[v]);
  // red singleton vs blue pair through it
  for (int u = 0; u < 9; ++u)
    if (rs_var[u] >= 0)
      for (int p = 0; p < 27; ++p)
        if (bp_var[p] >= 0 && (T.pair_vmask[p] & (1u << u)))
          add_sum_le1(rs_var[u], bp_var[p]);
  // red pair vs blue pair sharing a vertex
  for (int p = 0; p < 27; ++p)
    if (rp_var[p] >= 0)
      for (int q = 0; q < 27; ++q)
        if (bp_var[q] >= 0 && (T.pair_vmask[p] & T.pair_vmask[q]))
          add_sum_le1(rp_var[p], bp_var[q]);
  // blue singleton chain within each triple: b(i) <= b(j) <= b(k)
  for (int t = 0; t < 3; ++t)
    for (int r = 0; r < 3; ++r)
      for (int r2 = r + 1; r2 < 3; ++r2) {
        int lo = bs_var[position_of(t, r)], hi = bs_var[position_of(t, r2)];
        if (lo >= 0 && hi >= 0) {
          std::vector<Rat> row(n, Rat(0));
          row[lo] = 1;
          row[hi] = -1;
          lp.A.push_back(std::move(row));
          lp.b.push_back(Rat(0));
        }
      }

  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::optimal)
    throw std::logic_error("bounded weight program reported unbounded");

  WeightOptimum opt;
  opt.pivots = res.pivots;
  opt.q1 = 0;
  opt.q2 = 0;
  for (int i = 0; i < n; ++i) {
    const Rat& x = res.x[i];
    switch (vars[i].kind) {
      case kRedSingle:
        opt.assignment.r_single[vars[i].idx] = x;
        opt.q1 += x;
        break;
      case kBlueSingle:
        opt.assignment.b_single[vars[i].idx] = x;
        opt.q1 += x;
        break;
      case kRedPair:
        opt.assignment.r_pair[vars[i].idx] = x;
        opt.q2 += x;
        break;
      case kBluePair:
        opt.assignment.b_pair[vars[i].idx] = x;
        opt.q2 += x;
        break;
    }
  }
  opt.q1.canonicalize();
  opt.q2.canonicalize();
  return opt;
}

Rat config_value(const LocalConfig& cfg, const Rat& sigma) {
  if (sigma <= 0 || sigma > rat(1, 4))
    throw std::invalid_argument("sigma must lie in (0, 1/4]");
  Rat beta = 1 / sigma - 3;
  beta.canonicalize();
  WeightOptimum opt = max_weight_lp(cfg, beta);
  long t = popcount32(cfg.r3 | cfg.b3);
  return f_spt(sigma, opt.q1, opt.q2, Rat(t));
}

const std::vector<FactTriple>& fact_triples() {
  static const std::vector<FactTriple> triples = {
      {6, 10, 23}, {6, 11, 22}, {6, 12, 21}, {7, 10, 21}, {8, 10, 19},
      {9, 1, 27},  {9, 6, 21},  {9, 6, 23},  {9, 7, 21},  {9, 8, 19},
      {9, 9, 17}};
  return triples;
}

namespace {

// Descending sigma grid from 1/4 towards the lower endpoint, endpoint included.
std::vector<Rat> sigma_grid(const Rat& step) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  std::vector<Rat> grid;
  const Rat lo = sigma_lower(), hi = sigma_upper();
  for (Rat s = hi; s > lo; s -= step) {
    s.canonicalize();
    grid.push_back(s);
  }
  grid.push_back(lo);
  return grid;
}

}  // namespace

FactReport check_fact(const std::vector<FactTriple>& triples, const Rat& tol,
                      const Rat& grid_step) {
  const Rat bound = rat(5, 8);
  const std::vector<Rat> grid = sigma_grid(grid_step);
  FactReport report;
  report.pass = true;
  for (const FactTriple& tr : triples) {
    Rat s(tr.s), p(tr.p), t(tr.t);
    FactResult res;
    res.triple = tr;
    bool first = true;
    for (const Rat& sig : grid) {
      Rat v = f_spt(sig, s, p, t);
      if (first || v > res.grid_max) {
        res.grid_max = v;
        res.grid_argmax = sig;
        first = false;
      }
    }
    res.refined_max = res.grid_max;
    res.refined_argmax = res.grid_argmax;
    auto offer = [&](const Rat& sig) {
      Rat v = f_spt(sig, s, p, t);
      if (v > res.refined_max) {
        res.refined_max = v;
        res.refined_argmax = sig;
      }
    };
    {
      Rat a = std::max(sigma_lower(), Rat(res.grid_argmax - grid_step));
      Rat b = std::min(sigma_upper(), Rat(res.grid_argmax + grid_step));
      a.canonicalize();
      b.canonicalize();
      const Rat stop = rat(1, 10000000000000L);  // 1e-13 bracket
      while (b - a > stop) {
        Rat third = (b - a) / 3;
        third.canonicalize();
        Rat m1 = a + third, m2 = b - third;
        m1.canonicalize();
        m2.canonicalize();
        if (f_spt(m1, s, p, t) < f_spt(m2, s, p, t))
          a = m1;
        else
          b = m2;
      }
      offer(a);
      offer(b);
    }
    detail::CubicMax cm = detail::value_sup(s, p, tr.t);
    offer(cm.arg);
    res.certified_max = std::max(cm.upper, res.refined_max);
    res.refine_gap = res.certified_max - res.refined_max;
    res.refine_gap.canonicalize();
    res.pass = res.certified_max <= bound + tol && res.refine_gap < tol;
    report.pass = report.pass && res.pass;
    report.results.push_back(std::move(res));
  }
  return report;
}

MonotonicityReport check_monotonicity(const Rat& s, const Rat& p, const Rat& t,
                                      const std::vector<Rat>& xs,
                                      const Rat& grid_step) {
  for (const Rat& x : xs)
    if (x < 0) throw std::invalid_argument("shift amounts must be nonnegative");
  MonotonicityReport rep;
  // With sigma = a/b both values share the positive denominator L*b^3, so the
  // comparison reduces to integer numerators: f = (c^3 + s*a*c^2 + p*a^2*c +
  // t*a^3) / b^3 with c = b - 3a, scaled by a common multiple L of the
  // coefficient denominators. Both sides are still evaluated in full.
  std::vector<mpz_class> lcms;
  for (const Rat& x : xs) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), s.get_den().get_mpz_t(), p.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    lcms.push_back(l);
  }
  for (const Rat& sig : sigma_grid(grid_step)) {
    const mpz_class& a = sig.get_num();
    const mpz_class& b = sig.get_den();
    mpz_class c = b - 3 * a;
    mpz_class a2 = a * a, a3 = a2 * a, c2 = c * c, c3 = c2 * c;
    mpz_class ac2 = a * c2, a2c = a2 * c;
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
      const Rat& x = xs[xi];
      const mpz_class& lcm = lcms[xi];
      mpz_class ls = lcm / s.get_den() * s.get_num();
      mpz_class lp = lcm / p.get_den() * p.get_num();
      mpz_class lt = lcm / t.get_den() * t.get_num();
      mpz_class lx = lcm / x.get_den() * x.get_num();
      mpz_class lhs_num = lcm * c3 + ls * ac2 + (lp + lx) * a2c + lt * a3;
      mpz_class rhs_num = lcm * c3 + (ls + lx) * ac2 + lp * a2c + lt * a3;
      ++rep.checks;
      if (lhs_num > rhs_num && rep.pass) {
        rep.pass = false;
        rep.first_violation = MonotonicityViolation{
            sig, x, f_spt(sig, s, p + x, t), f_spt(sig, s + x, p, t)};
      }
    }
  }
  return rep;
}

StrahlungResult check_claim_strahlung(const PairConfig& pc, const Rat& beta) {
  if (beta < 1) throw std::invalid_argument("beta must be at least 1");
  if (pc.r1 > 0b11) throw std::invalid_argument("pair singleton mask out of range");
  if (pc.r2 >= 512) throw std::invalid_argument("pair grid mask out of range");
  if (pc.b2_legs > 0b111) throw std::invalid_argument("leg mask out of range");
  if (pc.centre_triple != 0 && pc.centre_triple != 1)
    throw std::invalid_argument("centre must be 0 or 1");

  // Local positions 0..2 = first triple roles, 3..5 = second triple roles.
  // q1 counts singleton weight on the FIRST triple only; q2 counts all pairs.
  struct Var {
    int coef_q1;  // multiplicity in q1
    int coef_q2;
    int vmask;    // 6-bit vertex mask
    bool is_blue;
    bool is_pair;
    int special = -1;  // 0 = blue singleton role chain id, 1 = the k-k pair
  };
  std::vector<Var> vars;
  std::array<int, 6> bs;
  bs.fill(-1);

  for (int which = 0; which < 2; ++which)
    if (pc.r1 & (1u << which))
      vars.push_back({which == 0 ? 1 : 0, 0, 1 << (3 * which), false, false});
  for (int cell = 0; cell < 9; ++cell)
    if (pc.r2 & (1u << cell)) {
      int rl = cell / 3, rh = cell % 3;
      vars.push_back({0, 1, (1 << rl) | (1 << (3 + rh)), false, true});
    }
  for (int v = 0; v < 6; ++v) {
    bs[v] = static_cast<int>(vars.size());
    vars.push_back({v < 3 ? 1 : 0, 0, 1 << v, true, false});
  }
  const int centre_pos = 3 * pc.centre_triple + 2;
  const int leg_triple = 1 - pc.centre_triple;
  for (int r = 0; r < 3; ++r)
    if (pc.b2_legs & (1u << r)) {
      int mask = (1 << centre_pos) | (1 << (3 * leg_triple + r));
      vars.push_back({0, 1, mask, true, true, r == 2 ? 1 : -1});
    }

  const int n = static_cast<int>(vars.size());
  auto solve_with = [&](auto objective) {
    LinearProgram lp;
    lp.c.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) lp.c[i] = objective(vars[i]);
    auto row_le = [&](std::vector<std::pair<int, int>> entries, long rhs) {
      std::vector<Rat> row(n, Rat(0));
      for (auto [i, coef] : entries) row[i] = coef;
      lp.A.push_back(std::move(row));
      lp.b.push_back(Rat(rhs));
    };
    for (int i = 0; i < n; ++i) row_le({{i, 1}}, 1);
    for (int i = 0; i < n; ++i) {
      if (vars[i].is_blue) continue;
      for (int j = 0; j < n; ++j) {
        if (!vars[j].is_blue) continue;
        bool interacts;
        if (!vars[i].is_pair && !vars[j].is_pair)
          interacts = true;  // red singleton vs any blue singleton
        else if (vars[i].is_pair && !vars[j].is_pair)
          interacts = (vars[i].vmask & vars[j].vmask) != 0;  // endpoint
        else
          interacts = (vars[i].vmask & vars[j].vmask) != 0;  // shared vertex
        if (interacts) row_le({{i, 1}, {j, 1}}, 1);
      }
    }
    for (int t = 0; t < 2; ++t)
      for (int r = 0; r < 3; ++r)
        for (int r2 = r + 1; r2 < 3; ++r2) {
          std::vector<Rat> row(n, Rat(0));
          row[bs[3 * t + r]] = 1;
          row[bs[3 * t + r2]] = -1;
          lp.A.push_back(std::move(row));
          lp.b.push_back(Rat(0));
        }
    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::optimal)
      throw std::logic_error("bounded pair program reported unbounded");
    return res.value;
  };

  StrahlungResult out;
  out.q_max = solve_with(
      [](const Var& v) { return Rat(v.coef_q1 + v.coef_q2); });
  out.main_ok = out.q_max <= 6;

  bool red_touches_k = false;
  for (int cell = 0; cell < 9; ++cell)
    if ((pc.r2 & (1u << cell)) && (cell / 3 == 2 || cell % 3 == 2))
      red_touches_k = true;
  out.refine1_applicable = !red_touches_k;
  if (out.refine1_applicable) {
    out.refine1_value = solve_with([](const Var& v) {
      if (v.special == 1) return Rat(0);  // drop the k-k blue pair from q
      return Rat(v.coef_q1 + v.coef_q2);
    });
    out.refine1_ok = out.refine1_value <= 5;
  }
  out.refine2_applicable = popcount16(pc.b2_legs) <= 1;
  if (out.refine2_applicable) {
    out.refine2_value = solve_with(
        [](const Var& v) { return Rat(2 * v.coef_q1 + v.coef_q2); });
    out.refine2_ok = out.refine2_value <= 7;
  }
  return out;
}

}  // namespace hg
