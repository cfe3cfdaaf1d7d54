#pragma once

// Shared fixtures for the labelled-graph tests: free-group style alphabets
// ("a" paired with "A") and cycle relators spelled from words.

#include <memory>
#include <string>
#include <vector>

#include "spectacular/labeled.hpp"

namespace fixtures {

using namespace spectacular;

// Alphabet a,A,b,B,... with tau flipping case.
inline std::shared_ptr<const LabelSet> letters(int pairs) {
  std::vector<std::string> names;
  std::vector<int> tau;
  for (int i = 0; i < pairs; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    names.push_back(std::string(1, static_cast<char>('A' + i)));
    tau.push_back(2 * i + 1);
    tau.push_back(2 * i);
  }
  return std::make_shared<LabelSet>(std::move(names), std::move(tau));
}

inline Word word(const LabelSet& ls, const std::string& letters_in_order) {
  Word w;
  for (char ch : letters_in_order) {
    if (ch == ' ') continue;
    auto l = ls.find(std::string(1, ch));
    if (!l) throw std::runtime_error("unknown letter");
    w.push_back(*l);
  }
  return w;
}

// Cycle relator spelling the given (cyclically reduced) word.
inline LabeledGraph cycle_relator(std::shared_ptr<const LabelSet> ls, const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  SimpleGraph g(n, std::move(edges));
  std::vector<int> forward(n);
  for (int i = 0; i < n; ++i) {
    int a = i, b = (i + 1) % n;
    forward[g.edge_index(a, b)] = a < b ? w[i] : ls->tau(w[i]);
  }
  return LabeledGraph(std::move(g), std::move(ls), std::move(forward));
}

// Two valence-3 vertices joined by three arms of four edges spelling the
// commutators [a,b], [c,d], [e,f]: the one-relator graph for the triple
// torus identification.
inline LabeledGraph genus2_relator(std::shared_ptr<const LabelSet> ls) {
  const LabelSet& l = *ls;
  Word arms[3] = {word(l, "abAB"), word(l, "cdCD"), word(l, "efEF")};
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<std::pair<int, int>, int>> directed;
  int x = 0, y = 1, next = 2;
  for (const Word& arm : arms) {
    int prev = x;
    for (size_t i = 0; i < arm.size(); ++i) {
      int to = i + 1 == arm.size() ? y : next++;
      edges.emplace_back(prev, to);
      directed.push_back({{prev, to}, arm[i]});
      prev = to;
    }
  }
  SimpleGraph g(next, std::move(edges));
  std::vector<int> forward(g.edge_count());
  for (const auto& [dir, lab] : directed) {
    auto [u, v] = dir;
    forward[g.edge_index(u, v)] = u < v ? lab : l.tau(lab);
  }
  return LabeledGraph(std::move(g), std::move(ls), std::move(forward));
}

}  // namespace fixtures
