#pragma once

// Test-only one-sided triviality oracle: a word whose image in the
// abelianization of the presented group is nonzero cannot be trivial.  The
// abelianization is Z^{edge pairs} modulo the lattice spanned by the
// fundamental cycles of every relator graph; lattice membership is decided
// through the Smith form, a path independent of the Dehn reducer.

#include <vector>

#include "spectacular/presentation.hpp"
#include "spectacular/snf.hpp"

namespace oracles {

using spectacular::GraphicalPresentation;
using spectacular::Int;
using spectacular::IntMatrix;
using spectacular::LabeledGraph;
using spectacular::LabelSet;
using spectacular::Word;

class AbelianizationOracle {
public:
  explicit AbelianizationOracle(const GraphicalPresentation& p) : labels_(&p.labels()) {
    const LabelSet& ls = *labels_;
    coord_.assign(ls.size(), -1);
    sign_.assign(ls.size(), 0);
    int next = 0;
    for (int l = 0; l < ls.size(); ++l) {
      if (ls.tau(l) < l) continue;
      coord_[l] = next;
      sign_[l] = 1;
      coord_[ls.tau(l)] = next;
      sign_[ls.tau(l)] = -1;
      ++next;
    }
    dims_ = next;

    std::vector<std::vector<Int>> columns;
    for (const auto& rel : p.relators()) append_cycles(rel.graph, columns);
    IntMatrix m(dims_, static_cast<int>(columns.size()));
    for (size_t j = 0; j < columns.size(); ++j)
      for (int i = 0; i < dims_; ++i) m(i, static_cast<int>(j)) = columns[j][i];
    smith_ = spectacular::smith_normal_form(m);
  }

  // false: definitely nontrivial; true: abelianization cannot tell
  bool possibly_trivial(const Word& w) const {
    std::vector<Int> x(dims_, 0);
    for (int l : w) x[coord_[l]] += sign_[l];
    // solve M y = x over Z: with U M V = D, need (U x)_i = 0 past the rank
    // and divisible by d_i within it
    for (int i = 0; i < smith_.u.rows(); ++i) {
      Int zi = 0;
      for (int j = 0; j < dims_; ++j) zi += smith_.u(i, j) * x[j];
      if (i < smith_.rank) {
        if (zi % smith_.diagonal[i] != 0) return false;
      } else if (zi != 0) {
        return false;
      }
    }
    return true;
  }

private:
  void append_cycles(const LabeledGraph& lg, std::vector<std::vector<Int>>& columns) const {
    const auto& g = lg.graph();
    int n = g.vertex_count();
    std::vector<std::vector<Int>> potential(n);
    std::vector<bool> seen(n, false);
    std::vector<bool> tree_edge(g.edge_count(), false);
    for (int root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      potential[root].assign(dims_, 0);
      std::vector<int> queue{root};
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w : g.neighbors(v)) {
          if (seen[w]) continue;
          seen[w] = true;
          tree_edge[g.edge_index(v, w)] = true;
          potential[w] = potential[v];
          add_label(potential[w], lg.label(v, w), 1);
          queue.push_back(w);
        }
      }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      if (tree_edge[e]) continue;
      auto [u, v] = g.edges()[e];
      // closed walk root -> u -> v -> root
      std::vector<Int> cycle = potential[u];
      add_label(cycle, lg.label(u, v), 1);
      for (int i = 0; i < dims_; ++i) cycle[i] -= potential[v][i];
      columns.push_back(std::move(cycle));
    }
  }

  void add_label(std::vector<Int>& vec, int l, int times) const {
    vec[coord_[l]] += sign_[l] * times;
  }

  const LabelSet* labels_;
  std::vector<int> coord_, sign_;
  int dims_ = 0;
  spectacular::SmithForm smith_;
};

}  // namespace oracles
