#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectacular/complex.hpp"
#include "spectacular/graph.hpp"

namespace spectacular {

/// Finite label alphabet with a fixed-point free involution pairing each
/// label with its inverse.
class LabelSet {
public:
  LabelSet(std::vector<std::string> names, std::vector<int> tau)
      : names_(std::move(names)), tau_(std::move(tau)) {
    if (names_.size() != tau_.size()) throw std::invalid_argument("tau size mismatch");
    int n = static_cast<int>(names_.size());
    for (int l = 0; l < n; ++l) {
      if (tau_[l] < 0 || tau_[l] >= n || tau_[l] == l || tau_[tau_[l]] != l)
        throw std::invalid_argument("tau must be a fixed-point free involution");
      if (!index_.emplace(names_[l], l).second) throw std::invalid_argument("duplicate label name");
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  int tau(int l) const { return tau_.at(l); }
  const std::string& name(int l) const { return names_.at(l); }

  std::optional<int> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
  }

  bool operator==(const LabelSet& o) const { return names_ == o.names_ && tau_ == o.tau_; }

private:
  std::vector<std::string> names_;
  std::vector<int> tau_;
  std::map<std::string, int> index_;
};

/// A word over the label alphabet; inverse letters are tau-images, not
/// separate symbols.
using Word = std::vector<int>;

inline Word free_reduce(const LabelSet& ls, Word w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && ls.tau(out.back()) == l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline bool is_freely_reduced(const LabelSet& ls, const Word& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (ls.tau(w[i - 1]) == w[i]) return false;
  return true;
}

inline Word invert_word(const LabelSet& ls, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(ls.tau(*it));
  return out;
}

/// Graph with a labelling of its directed edges satisfying
/// label(opposite e) = tau(label(e)).  The labelling is reduced when no
/// vertex has valence < 2 and outgoing labels at each vertex are pairwise
/// distinct; tracing words is then deterministic.
class LabeledGraph {
public:
  LabeledGraph(SimpleGraph graph, std::shared_ptr<const LabelSet> labels,
               std::vector<int> forward_labels)
      : graph_(std::move(graph)), labels_(std::move(labels)), forward_(std::move(forward_labels)) {
    if (!labels_) throw std::invalid_argument("null label set");
    if (static_cast<int>(forward_.size()) != graph_.edge_count())
      throw std::invalid_argument("one forward label per edge required");
    for (int l : forward_)
      if (l < 0 || l >= labels_->size()) throw std::invalid_argument("label out of range");
    build_index();
  }

  const SimpleGraph& graph() const { return graph_; }
  const LabelSet& labels() const { return *labels_; }
  const std::shared_ptr<const LabelSet>& labels_ptr() const { return labels_; }
  bool is_reduced() const { return reduced_; }

  /// Label read along the directed edge from -> to.
  int label(int from, int to) const {
    int idx = graph_.edge_index(from, to);
    return from < to ? forward_[idx] : labels_->tau(forward_[idx]);
  }
  int forward_label(int edge_index) const { return forward_.at(edge_index); }

  /// Endpoint reached by reading label l from v, or -1 when no edge at v
  /// carries l.  Unambiguous on reduced labellings.
  int step(int v, int l) const {
    const auto& out = out_.at(v);
    auto it = std::lower_bound(out.begin(), out.end(), std::make_pair(l, -1));
    return (it != out.end() && it->first == l) ? it->second : -1;
  }

  /// All directed edges carrying label l, as (from, to) pairs.
  const std::vector<std::pair<int, int>>& occurrences(int l) const { return occ_.at(l); }

  bool operator==(const LabeledGraph& o) const {
    return graph_ == o.graph_ && *labels_ == *o.labels_ && forward_ == o.forward_;
  }

private:
  void build_index() {
    out_.assign(graph_.vertex_count(), {});
    occ_.assign(labels_->size(), {});
    for (int i = 0; i < graph_.edge_count(); ++i) {
      auto [u, v] = graph_.edges()[i];
      int l = forward_[i];
      out_[u].emplace_back(l, v);
      out_[v].emplace_back(labels_->tau(l), u);
      occ_[l].emplace_back(u, v);
      occ_[labels_->tau(l)].emplace_back(v, u);
    }
    reduced_ = true;
    for (auto& o : out_) {
      std::sort(o.begin(), o.end());
      if (o.size() < 2) reduced_ = false;
      for (size_t i = 1; i < o.size(); ++i)
        if (o[i].first == o[i - 1].first) reduced_ = false;
    }
  }

  SimpleGraph graph_;
  std::shared_ptr<const LabelSet> labels_;
  std::vector<int> forward_;  // label of the u->v direction of edge (u,v), u<v
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
  bool reduced_ = false;
};

/// Label set whose labels are the directed edges of g, named "eU_V", with
/// edge reversal as the involution.
inline std::shared_ptr<const LabelSet> directed_edge_labels(const SimpleGraph& g) {
  std::vector<std::string> names;
  std::vector<int> tau;
  names.reserve(2 * g.edge_count());
  tau.reserve(2 * g.edge_count());
  for (auto [u, v] : g.edges()) {
    names.push_back("e" + std::to_string(u) + "_" + std::to_string(v));
    names.push_back("e" + std::to_string(v) + "_" + std::to_string(u));
    int i = static_cast<int>(tau.size());
    tau.push_back(i + 1);
    tau.push_back(i);
  }
  return std::make_shared<LabelSet>(std::move(names), std::move(tau));
}

/// The labelling of g by its own directed edges.  Reduced exactly when g
/// has minimum valence 2.
inline LabeledGraph tautological_labelling(const SimpleGraph& g) {
  std::vector<int> forward(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) forward[i] = 2 * i;
  return LabeledGraph(g, directed_edge_labels(g), std::move(forward));
}

/// Degree-n subdivision: each edge becomes |n| edges carrying the original
/// label (n > 0) or its inverse (n < 0) along the original direction.
/// Girths scale by |n|; reducedness is preserved.
inline LabeledGraph degree_subdivision(const LabeledGraph& lg, int n) {
  if (n == 0) throw std::invalid_argument("subdivision degree must be nonzero");
  const SimpleGraph& g = lg.graph();
  int m = n < 0 ? -n : n;
  if (m == 1) {
    if (n > 0) return lg;
    std::vector<int> flipped(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) flipped[i] = lg.labels().tau(lg.forward_label(i));
    return LabeledGraph(g, lg.labels_ptr(), std::move(flipped));
  }

  int base = g.vertex_count();
  auto inner = [&](int edge_idx, int k) { return base + edge_idx * (m - 1) + k; };
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()) * m);
  std::vector<std::pair<std::pair<int, int>, int>> directed_labels;  // ((from,to), label along from->to)
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    int along = n > 0 ? lg.forward_label(i) : lg.labels().tau(lg.forward_label(i));
    int prev = u;
    for (int k = 0; k < m - 1; ++k) {
      edges.emplace_back(prev, inner(i, k));
      directed_labels.push_back({{prev, inner(i, k)}, along});
      prev = inner(i, k);
    }
    edges.emplace_back(prev, v);
    directed_labels.push_back({{prev, v}, along});
  }
  SimpleGraph sg(base + g.edge_count() * (m - 1), std::move(edges));
  std::vector<int> forward(sg.edge_count());
  const LabelSet& ls = lg.labels();
  for (const auto& [dir, l] : directed_labels) {
    auto [from, to] = dir;
    forward[sg.edge_index(from, to)] = from < to ? l : ls.tau(l);
  }
  return LabeledGraph(std::move(sg), lg.labels_ptr(), std::move(forward));
}

inline std::string format_word(const LabelSet& ls, const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += ls.name(w[i]);
  }
  return out;
}

/// Words are whitespace-separated label names; "~name" is the inverse.
inline Word parse_word(const LabelSet& ls, std::string_view text) {
  Word w;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) {
      std::string_view token = text.substr(i, j - i);
      bool inv = token.starts_with('~');
      if (inv) token.remove_prefix(1);
      std::optional<int> l = ls.find(token);
      if (!l) throw std::invalid_argument("unknown label: " + std::string(token));
      w.push_back(inv ? ls.tau(*l) : *l);
    }
    i = j;
  }
  return w;
}

}  // namespace spectacular
