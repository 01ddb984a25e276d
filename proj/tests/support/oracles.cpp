#include "support/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace smtest {

using specmoore::LabeledGraph;
using specmoore::WalkCountTable;

WalkCountTable exhaustive_nb_walks(const LabeledGraph& g, int len) {
  const int n = g.order();
  std::vector<std::pair<int, int>> darts;  // directed edges
  std::vector<std::vector<int>> out_of(n);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      out_of[u].push_back(static_cast<int>(darts.size()));
      darts.emplace_back(u, v);
    }
  }
  const std::int64_t states =
      static_cast<std::int64_t>(n) * static_cast<std::int64_t>(darts.size()) *
      std::max(1, len);
  if (states > 10'000'000) {
    throw std::runtime_error("walk oracle refuses: too many states");
  }

  WalkCountTable table;
  table.length = len;
  table.n = n;
  table.counts.assign(static_cast<std::size_t>(n) * n, 0);

  if (len == 0) {
    for (int u = 0; u < n; ++u) table.counts[static_cast<std::size_t>(u) * n + u] = 1;
    return table;
  }

  for (int start = 0; start < n; ++start) {
    // cnt[d]: walks of the current length from `start` whose last step is dart d
    std::vector<std::int64_t> cnt(darts.size(), 0);
    for (int d : out_of[start]) cnt[d] = 1;
    for (int step = 2; step <= len; ++step) {
      std::vector<std::int64_t> next(darts.size(), 0);
      for (std::size_t d = 0; d < darts.size(); ++d) {
        if (cnt[d] == 0) continue;
        auto [u, v] = darts[d];
        for (int e : out_of[v]) {
          if (darts[e].second == u) continue;  // backtracking
          next[e] += cnt[d];
        }
      }
      cnt = std::move(next);
    }
    for (std::size_t d = 0; d < darts.size(); ++d) {
      table.counts[static_cast<std::size_t>(start) * n + darts[d].second] += cnt[d];
    }
  }
  return table;
}

double eval_monomial(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<double> grid_roots(const std::function<double(double)>& f, double lo,
                               double hi, int grid, double tol) {
  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= grid; ++i) {
    double x = lo + (hi - lo) * i / grid;
    double fx = f(x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if ((prev_f > 0) != (fx > 0)) {
      double a = prev_x, b = x;
      while (b - a > tol) {
        double mid = 0.5 * (a + b);
        double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if ((fm > 0) == (fx > 0)) {
          b = mid;
        } else {
          a = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

}  // namespace smtest
