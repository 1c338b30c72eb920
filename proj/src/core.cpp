#include "hg/core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hg {

std::vector<int> vs_elements(VSet s) {
  std::vector<int> out;
  while (s) {
    int b = __builtin_ctzll(s);
    out.push_back(b + 1);
    s &= s - 1;
  }
  return out;
}

VSet vs_of(const std::vector<int>& vs) {
  VSet s = 0;
  for (int v : vs) s |= vs_single(v);
  return s;
}

std::string vs_str(VSet s) {
  std::string out;
  for (int v : vs_elements(s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Hypergraph::Hypergraph(int k_, int n_, std::vector<VSet> edges_) : k(k_), n(n_), edges(std::move(edges_)) {
  sort_edges();
  validate();
}

void Hypergraph::sort_edges() {
  std::sort(edges.begin(), edges.end(), lex_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Hypergraph::has_edge(VSet e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e, lex_less);
  return it != edges.end() && *it == e;
}

void Hypergraph::add_edge(VSet e) {
  auto it = std::lower_bound(edges.begin(), edges.end(), e, lex_less);
  if (it == edges.end() || *it != e) edges.insert(it, e);
}

VSet Hypergraph::covered() const {
  VSet u = 0;
  for (VSet e : edges) u |= e;
  return u;
}

void Hypergraph::validate() const {
  if (k < 1) throw std::invalid_argument("uniformity k must be >= 1");
  if (n < k || n > 64) throw std::invalid_argument("vertex count n must satisfy k <= n <= 64");
  VSet full = vs_full(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (vs_size(edges[i]) != k) throw std::invalid_argument("edge is not a k-set");
    if (edges[i] & ~full) throw std::invalid_argument("edge has a vertex outside {1..n}");
    if (i > 0 && !lex_less(edges[i - 1], edges[i]))
      throw std::invalid_argument("edges not sorted or not unique");
  }
}

Hypergraph ColouredPair::red_graph() const {
  Hypergraph g(k, n);
  g.edges = red;
  g.sort_edges();
  return g;
}

Hypergraph ColouredPair::blue_graph() const {
  Hypergraph g(k, n);
  g.edges = blue;
  g.sort_edges();
  return g;
}

void ColouredPair::validate() const {
  red_graph().validate();
  blue_graph().validate();
  for (VSet e : red)
    for (VSet f : blue)
      if (e == f) throw std::invalid_argument("red and blue edge sets are not disjoint");
}

long long degree(const Hypergraph& g, VSet s, std::optional<VSet> w) {
  if (vs_size(s) > g.k) throw std::invalid_argument("degree: |S| exceeds uniformity");
  if (s & ~vs_full(g.n)) throw std::invalid_argument("degree: S has a vertex outside {1..n}");
  VSet ww = w.value_or(vs_full(g.n) & ~s);
  long long c = 0;
  for (VSet e : g.edges)
    if ((e & s) == s && (e & ~s & ~ww) == 0) ++c;
  return c;
}

namespace {

// Enumerates d-subsets of {1..n} calling f on each mask.
template <class F>
void for_each_subset(int n, int d, F&& f) {
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 1);
  if (d == 0) {
    f(VSet{0});
    return;
  }
  if (d > n) return;
  while (true) {
    VSet m = 0;
    for (int v : idx) m |= vs_single(v);
    f(m);
    int i = d - 1;
    while (i >= 0 && idx[i] == n - (d - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

long long min_d_degree(const Hypergraph& g, int d) {
  if (d < 0 || d > g.k) throw std::invalid_argument("min_d_degree: need 0 <= d <= k");
  long long best = -1;
  for_each_subset(g.n, d, [&](VSet s) {
    long long deg = degree(g, s);
    if (best < 0 || deg < best) best = deg;
  });
  return best < 0 ? 0 : best;
}

Hypergraph shadow(const Hypergraph& g) {
  if (g.k < 2) throw std::invalid_argument("shadow: requires k >= 2");
  Hypergraph s(g.k - 1, g.n);
  for (VSet e : g.edges) {
    VSet rest = e;
    while (rest) {
      VSet low = rest & (~rest + 1);
      s.edges.push_back(e & ~low);
      rest &= rest - 1;
    }
  }
  s.sort_edges();
  return s;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[b] = a;
  }
};

}  // namespace

std::vector<std::vector<VSet>> tight_components(const Hypergraph& g) {
  const std::size_t m = g.edges.size();
  UnionFind uf(static_cast<int>(m));
  // Bucket edges by their (k-1)-subsets; edges sharing one are tight-adjacent.
  std::map<VSet, int> first_with_sub;
  for (std::size_t i = 0; i < m; ++i) {
    VSet e = g.edges[i];
    VSet rest = e;
    while (rest) {
      VSet low = rest & (~rest + 1);
      VSet sub = e & ~low;
      auto [it, fresh] = first_with_sub.try_emplace(sub, static_cast<int>(i));
      if (!fresh) uf.unite(it->second, static_cast<int>(i));
      rest &= rest - 1;
    }
  }
  std::map<int, std::vector<VSet>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[uf.find(static_cast<int>(i))].push_back(g.edges[i]);
  std::vector<std::vector<VSet>> comps;
  comps.reserve(groups.size());
  for (auto& [root, es] : groups) comps.push_back(std::move(es));
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a.front(), b.front());
  });
  return comps;
}

bool is_tightly_connected(const Hypergraph& g) {
  if (g.edges.empty()) return false;
  if (g.covered() != vs_full(g.n)) return false;
  return tight_components(g).size() == 1;
}

bool distinguishable(const Hypergraph& r, const Hypergraph& b) {
  if (r.k != b.k || r.n != b.n)
    throw std::invalid_argument("distinguishable: graphs disagree on k or n");
  for (VSet e : r.edges)
    for (VSet f : b.edges)
      if (vs_size(e & f) > 1) return false;
  return true;
}

bool distinguishable(const ColouredPair& p) {
  return distinguishable(p.red_graph(), p.blue_graph());
}

std::vector<VSet> crossing_sets(const Matching& m, int r) {
  if (r < 0) throw std::invalid_argument("crossing_sets: r must be >= 0");
  VSet seen = 0;
  for (VSet e : m) {
    if (e & seen) throw std::invalid_argument("crossing_sets: edges are not pairwise disjoint");
    seen |= e;
  }
  std::vector<VSet> out;
  // DFS over matching edges: from each edge pick at most one vertex.
  std::vector<VSet> stack{0};
  for (VSet e : m) {
    std::vector<VSet> next;
    for (VSet partial : stack) {
      next.push_back(partial);  // skip this edge
      VSet rest = e;
      while (rest) {
        VSet low = rest & (~rest + 1);
        next.push_back(partial | low);
        rest &= rest - 1;
      }
    }
    stack = std::move(next);
  }
  for (VSet s : stack)
    if (vs_size(s) == r) out.push_back(s);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// ---- io ----

namespace {

// Returns trimmed payload lines with their 1-based line numbers.
struct LineReader {
  std::istream& in;
  int lineno = 0;
  bool next(std::string& payload, int& no) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      auto b = raw.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      auto e = raw.find_last_not_of(" \t\r");
      payload = raw.substr(b, e - b + 1);
      no = lineno;
      return true;
    }
    return false;
  }
};

std::pair<int, int> parse_header(const std::string& line, int no) {
  std::istringstream is(line);
  long k = 0, n = 0;
  if (!(is >> k >> n)) throw ParseError(no, "expected header \"k n\"");
  std::string extra;
  if (is >> extra) throw ParseError(no, "trailing tokens after header");
  if (k < 1 || n < k || n > 64)
    throw ParseError(no, "header out of range: need 1 <= k <= n <= 64");
  return {static_cast<int>(k), static_cast<int>(n)};
}

VSet parse_edge_line(const std::string& line, int no, int k, int n) {
  std::istringstream is(line);
  long v = 0, prev = 0;
  VSet e = 0;
  int cnt = 0;
  while (is >> v) {
    if (v < 1 || v > n) throw ParseError(no, "vertex id out of range 1..n");
    if (v <= prev) throw ParseError(no, "vertex ids must be strictly increasing");
    e |= vs_single(static_cast<int>(v));
    prev = v;
    ++cnt;
  }
  if (!is.eof()) throw ParseError(no, "expected vertex ids");
  if (cnt != k) throw ParseError(no, "edge has wrong number of vertices");
  return e;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  LineReader lr{in};
  std::string line;
  int no = 0;
  if (!lr.next(line, no)) throw ParseError(lr.lineno ? lr.lineno : 1, "missing header \"k n\"");
  auto [k, n] = parse_header(line, no);
  Hypergraph g(k, n);
  while (lr.next(line, no)) {
    VSet e = parse_edge_line(line, no, k, n);
    if (g.has_edge(e)) throw ParseError(no, "duplicate edge");
    g.add_edge(e);
  }
  return g;
}

ColouredPair parse_coloured_pair(std::istream& in) {
  LineReader lr{in};
  std::string line;
  int no = 0;
  if (!lr.next(line, no)) throw ParseError(lr.lineno ? lr.lineno : 1, "missing header \"k n\"");
  auto [k, n] = parse_header(line, no);
  ColouredPair p;
  p.k = k;
  p.n = n;
  if (!lr.next(line, no) || line != "R:") throw ParseError(no ? no : lr.lineno, "expected \"R:\" section");
  bool in_blue = false;
  while (lr.next(line, no)) {
    if (line == "B:") {
      if (in_blue) throw ParseError(no, "duplicate \"B:\" section");
      in_blue = true;
      continue;
    }
    VSet e = parse_edge_line(line, no, k, n);
    (in_blue ? p.blue : p.red).push_back(e);
  }
  if (!in_blue) throw ParseError(lr.lineno, "missing \"B:\" section");
  std::sort(p.red.begin(), p.red.end(), lex_less);
  std::sort(p.blue.begin(), p.blue.end(), lex_less);
  for (std::size_t i = 1; i < p.red.size(); ++i)
    if (p.red[i] == p.red[i - 1]) throw ParseError(lr.lineno, "duplicate red edge");
  for (std::size_t i = 1; i < p.blue.size(); ++i)
    if (p.blue[i] == p.blue[i - 1]) throw ParseError(lr.lineno, "duplicate blue edge");
  p.validate();
  return p;
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_hypergraph(in);
}

ColouredPair load_coloured_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_coloured_pair(in);
}

void emit_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.k << " " << g.n << "\n";
  for (VSet e : g.edges) out << vs_str(e) << "\n";
}

void emit_coloured_pair(std::ostream& out, const ColouredPair& p) {
  out << p.k << " " << p.n << "\n";
  out << "R:\n";
  std::vector<VSet> r = p.red, b = p.blue;
  std::sort(r.begin(), r.end(), lex_less);
  std::sort(b.begin(), b.end(), lex_less);
  for (VSet e : r) out << vs_str(e) << "\n";
  out << "B:\n";
  for (VSet e : b) out << vs_str(e) << "\n";
}

void save_hypergraph(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file: " + path);
  emit_hypergraph(out, g);
}

void save_coloured_pair(const std::string& path, const ColouredPair& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file: " + path);
  emit_coloured_pair(out, p);
}

std::vector<VSet> all_ksets(int n, int k) {
  std::vector<VSet> out;
  for_each_subset(n, k, [&](VSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace hg
