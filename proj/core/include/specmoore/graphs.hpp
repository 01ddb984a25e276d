#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specmoore/bounds.hpp"
#include "specmoore/matrix.hpp"
#include "specmoore/quotient.hpp"

namespace specmoore {

// Simple undirected graph: symmetric adjacency, no loops. Immutable after
// construction; the spectrum cache fills once and is then read-only.
class LabeledGraph {
 public:
  LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges,
               std::string name = {});

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  std::int64_t edge_count() const { return m_; }
  std::vector<std::pair<int, int>> edges() const;

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Common degree, or NonRegular.
  int regular_degree() const;
  bool is_connected() const;
  // Two-coloring when bipartite (graph must be connected).
  std::optional<std::vector<int>> bipartition() const;

  Matrix adjacency_matrix() const;

  const SpectrumSummary& cached_spectrum() const;

 private:
  int n_;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::string name_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Named constructions: cycle(n), complete(n), completeBipartite(r),
// petersen, cube3, heawood, pappus, oddGraph(k), hoffmanSingleton,
// hsSecondSubconstituent. Throws UnknownName otherwise.
LabeledGraph build_named(const std::string& name);

// Dense symmetric eigensolve (cyclic Jacobi), eigenvalues grouped into
// multiplicity classes at gap 1e-7. Guarded at n <= 10000.
SpectrumSummary spectrum_of(const LabeledGraph& g);

struct WalkCountTable {
  int length = 0;
  int n = 0;
  std::vector<std::int64_t> counts;  // row-major

  std::int64_t at(int u, int v) const {
    return counts[static_cast<std::size_t>(u) * n + v];
  }
};

// F_len(A) in exact integer arithmetic: entry (u,v) counts non-backtracking
// walks of length len from u to v. Requires a regular graph.
WalkCountTable non_backtracking_counts(const LabeledGraph& g, int len);

struct GraphMetrics {
  int diameter = -1;  // -1 when disconnected
  int girth = -1;     // -1 when acyclic
};

GraphMetrics diameter_and_girth(const LabeledGraph& g);

struct RamanujanReport {
  bool ramanujan = false;
  std::optional<double> offending_eigenvalue;
  std::string note;
};

RamanujanReport is_ramanujan(const LabeledGraph& g);

struct WitnessReport {
  std::string graph_name;
  int order = 0;
  int r = 0;
  double lambda2 = 0.0;
  BoundResult bound;
  std::int64_t slack = 0;  // floor(bound) - order
  bool extremal = false;
};

// Evaluates the graph against v_upper / b_upper at theta = lambda2(graph);
// slack zero marks the graph extremal for its (r, lambda2).
WitnessReport check_witness(const LabeledGraph& g, QuotientKind kind);

// Whitespace edge-list format: header "n m", then m lines "u v", 0-indexed.
LabeledGraph read_edge_list(std::istream& in, std::string name = {});
void write_edge_list(std::ostream& out, const LabeledGraph& g);

}  // namespace specmoore
