#include "specmoore/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

#include "specmoore/errors.hpp"
#include "specmoore/orthopoly.hpp"

namespace specmoore {

struct LabeledGraph::Cache {
  std::mutex mu;
  std::optional<SpectrumSummary> spectrum;
};

LabeledGraph::LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges,
                           std::string name)
    : n_(n), name_(std::move(name)), cache_(std::make_shared<Cache>()) {
  if (n <= 0) fail(ErrorKind::InvalidArgument, "graph needs at least one vertex");
  adj_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorKind::InvalidArgument,
           "edge endpoint out of range: (" + std::to_string(u) + "," +
               std::to_string(v) + ")");
    }
    if (u == v) {
      fail(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      fail(ErrorKind::InvalidArgument,
           "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool LabeledGraph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int LabeledGraph::regular_degree() const {
  int r = degree(0);
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != r) {
      fail(ErrorKind::NonRegular,
           "graph is not regular: deg(0)=" + std::to_string(r) + " but deg(" +
               std::to_string(v) + ")=" + std::to_string(degree(v)));
    }
  }
  return r;
}

namespace {

std::vector<int> bfs_distances(const LabeledGraph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool LabeledGraph::is_connected() const {
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<std::vector<int>> LabeledGraph::bipartition() const {
  std::vector<int> color(n_, -1);
  std::deque<int> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[u]) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;
      }
    }
  }
  return color;
}

Matrix LabeledGraph::adjacency_matrix() const {
  Matrix a(n_, n_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) a.at(u, v) = 1.0;
  }
  return a;
}

const SpectrumSummary& LabeledGraph::cached_spectrum() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->spectrum) {
    cache_->spectrum = spectrum_of(*this);
  }
  return *cache_->spectrum;
}

SpectrumSummary spectrum_of(const LabeledGraph& g) {
  if (g.order() > 10000) {
    fail(ErrorKind::TooLarge, "spectrum guard: n <= 10000");
  }
  return summarize_spectrum(jacobi_eigenvalues(g.adjacency_matrix()));
}

namespace {

using Edges = std::vector<std::pair<int, int>>;

LabeledGraph make_cycle(int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "cycle needs n >= 3");
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return LabeledGraph(n, e, "cycle(" + std::to_string(n) + ")");
}

LabeledGraph make_complete(int n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "complete graph needs n >= 2");
  Edges e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return LabeledGraph(n, e, "complete(" + std::to_string(n) + ")");
}

LabeledGraph make_complete_bipartite(int r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "completeBipartite needs r >= 1");
  Edges e;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) e.emplace_back(i, r + j);
  return LabeledGraph(2 * r, e, "completeBipartite(" + std::to_string(r) + ")");
}

// Kneser(n, k): k-subsets of an n-set, adjacent when disjoint.
LabeledGraph make_kneser(int n, int k, const std::string& name) {
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) == k) subsets.push_back(mask);
  }
  Edges e;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if ((subsets[i] & subsets[j]) == 0) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return LabeledGraph(static_cast<int>(subsets.size()), e, name);
}

LabeledGraph make_cube3() {
  Edges e;
  for (int u = 0; u < 8; ++u) {
    for (int b = 0; b < 3; ++b) {
      int v = u ^ (1 << b);
      if (u < v) e.emplace_back(u, v);
    }
  }
  return LabeledGraph(8, e, "cube3");
}

// Fano incidence graph: point i adjacent to line {i, i+1, i+3} mod 7.
LabeledGraph make_heawood() {
  Edges e;
  for (int line = 0; line < 7; ++line) {
    for (int off : {0, 1, 3}) {
      e.emplace_back((line + off) % 7, 7 + line);
    }
  }
  return LabeledGraph(14, e, "heawood");
}

LabeledGraph make_pappus() {
  // LCF [5,7,-7,7,-7,-5]^3 over an 18-cycle. The sequence is involutive
  // (each vertex gets exactly one chord), which the constructor enforces by
  // rejecting duplicates; the resulting graph is cubic with girth 6 and
  // spectrum {+-3, +-sqrt(3), 0}.
  static const int lcf[6] = {5, 7, -7, 7, -7, -5};
  Edges e;
  std::set<std::pair<int, int>> seen;
  auto add = [&](int u, int v) {
    auto key = std::minmax(u, v);
    if (seen.insert(key).second) e.emplace_back(key.first, key.second);
  };
  for (int i = 0; i < 18; ++i) add(i, (i + 1) % 18);
  for (int i = 0; i < 18; ++i) add(i, ((i + lcf[i % 6]) % 18 + 18) % 18);
  LabeledGraph g(18, e, "pappus");
  if (g.regular_degree() != 3) {
    fail(ErrorKind::CrossCheckFailure, "pappus construction must be cubic");
  }
  return g;
}

// Five pentagons P_h (j ~ j+-1) and five pentagrams Q_i (j ~ j+-2);
// vertex j of P_h joins vertex h*i + j (mod 5) of Q_i.
LabeledGraph make_hoffman_singleton() {
  Edges e;
  auto p = [](int h, int j) { return 5 * h + j; };
  auto q = [](int i, int j) { return 25 + 5 * i + j; };
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      e.emplace_back(p(h, j), p(h, (j + 1) % 5));
      e.emplace_back(q(h, j), q(h, (j + 2) % 5));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        e.emplace_back(p(h, j), q(i, (h * i + j) % 5));
      }
    }
  }
  return LabeledGraph(50, e, "hoffmanSingleton");
}

// Induced subgraph on the vertices at distance exactly 2 from vertex 0 of
// pentagon P_0 (any base vertex gives an isomorphic graph).
LabeledGraph make_hs_second_subconstituent() {
  LabeledGraph hs = make_hoffman_singleton();
  auto dist = bfs_distances(hs, 0);
  std::vector<int> keep;
  for (int v = 0; v < hs.order(); ++v) {
    if (dist[v] == 2) keep.push_back(v);
  }
  std::vector<int> index(hs.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Edges e;
  for (int v : keep) {
    for (int w : hs.neighbors(v)) {
      if (index[w] >= 0 && v < w) e.emplace_back(index[v], index[w]);
    }
  }
  return LabeledGraph(static_cast<int>(keep.size()), e, "hsSecondSubconstituent");
}

// Parses "name(arg)" forms.
bool parse_call(const std::string& s, const std::string& fn, int* arg) {
  if (s.rfind(fn + "(", 0) != 0 || s.back() != ')') return false;
  std::string inner = s.substr(fn.size() + 1, s.size() - fn.size() - 2);
  try {
    std::size_t used = 0;
    int v = std::stoi(inner, &used);
    if (used != inner.size()) return false;
    *arg = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

LabeledGraph build_named(const std::string& name) {
  int arg = 0;
  if (name == "petersen") return make_kneser(5, 2, "petersen");
  if (name == "cube3") return make_cube3();
  if (name == "heawood") return make_heawood();
  if (name == "pappus") return make_pappus();
  if (name == "hoffmanSingleton") return make_hoffman_singleton();
  if (name == "hsSecondSubconstituent") return make_hs_second_subconstituent();
  if (parse_call(name, "cycle", &arg)) return make_cycle(arg);
  if (parse_call(name, "complete", &arg)) return make_complete(arg);
  if (parse_call(name, "completeBipartite", &arg)) return make_complete_bipartite(arg);
  if (parse_call(name, "oddGraph", &arg)) {
    if (arg < 2 || arg > 13) fail(ErrorKind::InvalidArgument, "oddGraph(k) needs 2 <= k <= 13");
    return make_kneser(2 * arg - 1, arg - 1, "oddGraph(" + std::to_string(arg) + ")");
  }
  fail(ErrorKind::UnknownName, "unknown graph name: '" + name + "'");
}

WalkCountTable non_backtracking_counts(const LabeledGraph& g, int len) {
  if (len < 0) fail(ErrorKind::InvalidArgument, "walk length must be >= 0");
  int r = g.regular_degree();
  if (r < 2) fail(ErrorKind::NonRegular, "walk counts need degree >= 2");
  const int n = g.order();
  const char* ctx = "non-backtracking walk counts";

  auto ident = [&]() {
    std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    return m;
  };
  auto adjacency_times = [&](const std::vector<std::int64_t>& m) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int k : g.neighbors(i)) {
        for (int j = 0; j < n; ++j) {
          out[static_cast<std::size_t>(i) * n + j] =
              checked_add(out[static_cast<std::size_t>(i) * n + j],
                          m[static_cast<std::size_t>(k) * n + j], ctx);
        }
      }
    }
    return out;
  };

  std::vector<std::int64_t> prev = ident();
  if (len == 0) return {0, n, std::move(prev)};
  std::vector<std::int64_t> cur = adjacency_times(prev);  // F_1 = A
  for (int k = 2; k <= len; ++k) {
    std::vector<std::int64_t> next = adjacency_times(cur);
    const std::int64_t scale = (k == 2) ? r : (r - 1);
    for (std::size_t idx = 0; idx < next.size(); ++idx) {
      next[idx] = checked_sub(next[idx], checked_mul(scale, prev[idx], ctx), ctx);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {len, n, std::move(cur)};
}

GraphMetrics diameter_and_girth(const LabeledGraph& g) {
  GraphMetrics metrics;
  int diameter = 0;
  bool connected = true;
  int girth = -1;

  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> parent(g.order(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u] && u != parent[v]) {
          // non-tree edge closing a cycle through s
          int len = dist[u] + dist[v] + 1;
          if (girth < 0 || len < girth) girth = len;
        }
      }
    }
    for (int v = 0; v < g.order(); ++v) {
      if (dist[v] < 0) {
        connected = false;
      } else {
        diameter = std::max(diameter, dist[v]);
      }
    }
  }
  metrics.diameter = connected ? diameter : -1;
  metrics.girth = girth;
  return metrics;
}

RamanujanReport is_ramanujan(const LabeledGraph& g) {
  if (!g.is_connected()) {
    fail(ErrorKind::NotConnected, "Ramanujan check needs a connected graph");
  }
  int r = g.regular_degree();
  RamanujanReport report;
  if (r == 2) {
    report.note = "r=2 is degenerate: every eigenvalue satisfies |x| <= 2 = 2*sqrt(r-1)";
  }
  const double limit = 2.0 * std::sqrt(static_cast<double>(r - 1)) + 1e-9;
  std::vector<double> eig = g.cached_spectrum().flat();
  bool skipped_top = false;
  bool bipartite = g.bipartition().has_value();
  bool skipped_bottom = false;
  report.ramanujan = true;
  for (std::size_t i = 0; i < eig.size(); ++i) {
    double v = eig[i];
    if (!skipped_top && std::abs(v - r) <= 1e-9) {
      skipped_top = true;
      continue;
    }
    if (bipartite && !skipped_bottom && std::abs(v + r) <= 1e-9) {
      skipped_bottom = true;
      continue;
    }
    if (std::abs(v) > limit) {
      report.ramanujan = false;
      report.offending_eigenvalue = v;
      break;
    }
  }
  return report;
}

WitnessReport check_witness(const LabeledGraph& g, QuotientKind kind) {
  if (!g.is_connected()) {
    fail(ErrorKind::NotConnected, "witness check needs a connected graph");
  }
  int r = g.regular_degree();
  if (r < 3) {
    fail(ErrorKind::NotApplicable,
         "bound theorems need r >= 3 (got r = " + std::to_string(r) + ")");
  }
  if (kind == QuotientKind::Bipartite && !g.bipartition()) {
    fail(ErrorKind::NotBipartite, "graph is not bipartite");
  }
  WitnessReport report;
  report.graph_name = g.name();
  report.order = g.order();
  report.r = r;
  report.lambda2 = g.cached_spectrum().lambda2;
  report.bound = (kind == QuotientKind::General)
                     ? v_upper(r, report.lambda2)
                     : b_upper(r, report.lambda2);
  report.slack = report.bound.floor_bound - g.order();
  report.extremal = report.slack == 0;
  return report;
}

LabeledGraph read_edge_list(std::istream& in, std::string name) {
  int n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m)) {
    fail(ErrorKind::ParseError, "edge list must start with a 'n m' header");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) {
      fail(ErrorKind::ParseError,
           "edge list ended after " + std::to_string(i) + " of " +
               std::to_string(m) + " edges");
    }
    edges.emplace_back(u, v);
  }
  return LabeledGraph(n, edges, std::move(name));
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace specmoore
