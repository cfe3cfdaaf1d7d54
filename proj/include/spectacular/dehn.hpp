#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spectacular/presentation.hpp"

namespace spectacular {

struct TraceResult {
  int prefix_length = 0;
  int end_vertex = -1;
};

/// Longest prefix of w readable as a path from start; deterministic on
/// reduced labellings.
inline TraceResult trace_word(const LabeledGraph& lg, int start, const Word& w) {
  if (!lg.is_reduced()) throw std::invalid_argument("tracing requires a reduced labelling");
  TraceResult r{0, start};
  for (int l : w) {
    int next = lg.step(r.end_vertex, l);
    if (next < 0) break;
    r.end_vertex = next;
    ++r.prefix_length;
  }
  return r;
}

struct ReductionStep {
  int relator = -1;
  int position = 0;      // leftmost index of the matched subword
  int match_length = 0;
  int start_vertex = -1; // matched path endpoints in the relator graph
  int end_vertex = -1;
  Word replacement;
};

struct ReductionTrace {
  Word initial;
  std::vector<ReductionStep> steps;
  Word final_word;
};

/// One Dehn replacement, or nullopt at a fixpoint.  A matched path u -> v
/// in a relator graph may be swapped for any other u -> v path: the two
/// spell a closed cycle, and every relator cycle word is a relation.  The
/// replacement used is a breadth-first shortest path, applied only when
/// strictly shorter than the match, so words shrink on every step.  Scan
/// order is leftmost position, then longest match, then smallest relator
/// index, then smallest start vertex.
inline std::optional<std::pair<Word, ReductionStep>> dehn_step(const GraphicalPresentation& p,
                                                               const Word& w) {
  const LabelSet& ls = p.labels();
  if (!is_freely_reduced(ls, w)) throw std::invalid_argument("dehn_step needs a freely reduced word");
  long len = static_cast<long>(w.size());
  for (int pos = 0; pos < static_cast<int>(w.size()); ++pos) {
    std::optional<ReductionStep> best;
    for (int ri = 0; ri < static_cast<int>(p.relators().size()); ++ri) {
      const Relator& rel = p.relators()[ri];
      // a step needs match > return path, so the spliced cycle is shorter
      // than 2|w|; relators with all cycles at least 2|w| can never fire
      if (rel.girth > 2 * len) continue;
      Word suffix(w.begin() + pos, w.end());
      for (auto [from, to] : rel.graph.occurrences(w[pos])) {
        TraceResult tr = trace_word(rel.graph, from, suffix);
        if (tr.prefix_length == 0) continue;
        std::vector<int> back = rel.graph.graph().shortest_path(from, tr.end_vertex);
        int dist = static_cast<int>(back.size()) - 1;
        if (dist >= tr.prefix_length) continue;
        bool better = !best || tr.prefix_length > best->match_length ||
                      (tr.prefix_length == best->match_length &&
                       (ri < best->relator || (ri == best->relator && from < best->start_vertex)));
        if (!better) continue;
        Word repl;
        for (size_t k = 0; k + 1 < back.size(); ++k) repl.push_back(rel.graph.label(back[k], back[k + 1]));
        best = ReductionStep{ri, pos, tr.prefix_length, from, tr.end_vertex, std::move(repl)};
      }
    }
    if (best) {
      Word next(w.begin(), w.begin() + pos);
      next.insert(next.end(), best->replacement.begin(), best->replacement.end());
      next.insert(next.end(), w.begin() + pos + best->match_length, w.end());
      return std::make_pair(free_reduce(ls, next), *best);
    }
  }
  return std::nullopt;
}

struct TrivialityResult {
  bool trivial = false;
  ReductionTrace trace;
};

/// Greedy Dehn reduction to a fixpoint.  Sound because each step replaces a
/// subword by an equal group element; complete because, under C'(1/6), any
/// nonempty word equal to the identity contains more than half of some
/// relator cycle, which always admits a strictly shorter return path.
inline TrivialityResult is_trivial(const GraphicalPresentation& p, Word w) {
  if (p.c16_status() == GraphicalPresentation::C16::unchecked)
    throw std::logic_error("presentation not verified C'(1/6); Dehn reduction not guaranteed");
  TrivialityResult out;
  w = free_reduce(p.labels(), w);
  out.trace.initial = w;
  while (true) {
    auto step = dehn_step(p, w);
    if (!step) break;
    if (step->first.size() >= w.size()) throw std::logic_error("reduction failed to shrink the word");
    w = step->first;
    out.trace.steps.push_back(std::move(step->second));
  }
  out.trace.final_word = w;
  out.trivial = w.empty();
  return out;
}

/// Directed edge labels along one shortest cycle of the 1-skeleton.
inline Word girth_cycle_word(const TwoComplex& k, const LabelSet& ls) {
  GirthResult g = girth(k.graph());
  if (!g.girth) throw std::invalid_argument("complex has no cycle");
  Word w;
  for (size_t i = 0; i < g.cycle.size(); ++i) {
    int u = g.cycle[i], v = g.cycle[(i + 1) % g.cycle.size()];
    std::string name = "e" + std::to_string(u) + "_" + std::to_string(v);
    std::optional<int> l = ls.find(name);
    if (!l) throw std::logic_error("label set does not name the directed edges of the complex");
    w.push_back(*l);
  }
  return w;
}

/// g1^n g2^n ... gl^n, freely reduced.
inline Word power_word(const LabelSet& ls, const std::vector<int>& tuple, int n) {
  Word w;
  for (int g : tuple) {
    int letter = n >= 0 ? g : ls.tau(g);
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) w.push_back(letter);
  }
  return free_reduce(ls, w);
}

/// Establish the C'(1/6) status of a materialized presentation: prefer the
/// family certificate of the underlying complex, fall back to the
/// exhaustive pairwise check.  Throws when neither applies.
inline void ensure_c16(GraphicalPresentation& p, const TwoComplex& k) {
  if (p.c16_status() != GraphicalPresentation::C16::unchecked) return;
  if (certify_c16_family(k).valid) {
    p.set_c16_status(GraphicalPresentation::C16::certified);
    return;
  }
  if (check_c16(p).pass) {
    p.set_c16_status(GraphicalPresentation::C16::verified);
    return;
  }
  throw std::invalid_argument("presentation violates C'(1/6); word problem not supported");
}

struct RInvariantResult {
  std::vector<int> r_set;          // degrees n in range with the power word trivial
  std::vector<int> tuple;          // generator tuple used
  int max_relator_degree = 0;      // largest |n| materialized, the degree budget
};

/// R(tuple) = { n : g1^n ... gl^n = 1 } over an integer range, decided in
/// the window-truncated presentation of H(S).
inline RInvariantResult r_invariant(const TwoComplex& k, const std::set<int>& z_window,
                                    const std::set<int>& s, const std::vector<int>& tuple,
                                    int lo, int hi, long word_budget = 100000) {
  GraphicalPresentation pres = materialize_hs(k, z_window, s);
  ensure_c16(pres, k);

  RInvariantResult out;
  out.tuple = tuple;
  for (int n : z_window) out.max_relator_degree = std::max(out.max_relator_degree, n < 0 ? -n : n);
  for (int n = lo; n <= hi; ++n) {
    long letters = static_cast<long>(tuple.size()) * (n < 0 ? -n : n);
    if (letters > word_budget) throw std::invalid_argument("word-length budget exceeded");
    if (is_trivial(pres, power_word(pres.labels(), tuple, n)).trivial) out.r_set.push_back(n);
  }
  return out;
}

inline RInvariantResult r_invariant_girth_tuple(const TwoComplex& k, const std::set<int>& z_window,
                                                const std::set<int>& s, int lo, int hi,
                                                long word_budget = 100000) {
  LabeledGraph taut = tautological_labelling(k.graph());
  Word cycle = girth_cycle_word(k, taut.labels());
  return r_invariant(k, z_window, s, cycle, lo, hi, word_budget);
}

struct KernelWitness {
  int degree = 0;
  bool nontrivial_in_sub = false;  // in H(s)
  bool trivial_in_super = false;   // in H(t)
};

struct KernelWitnessReport {
  bool ok = true;
  std::vector<KernelWitness> witnesses;
};

/// For s strictly inside t, the girth-cycle power words at degrees in t-s
/// must die in H(t) but survive in H(s): these are the kernel elements
/// separating the two groups.
inline KernelWitnessReport kernel_witness_check(const TwoComplex& k, const std::set<int>& z_window,
                                                const std::set<int>& s, const std::set<int>& t,
                                                long word_budget = 100000) {
  for (int n : s)
    if (!t.count(n)) throw std::invalid_argument("s must be a subset of t");
  for (int n : t)
    if (!z_window.count(n)) throw std::invalid_argument("t must lie inside the window");

  GraphicalPresentation ps = materialize_hs(k, z_window, s);
  GraphicalPresentation pt = materialize_hs(k, z_window, t);
  ensure_c16(ps, k);
  ensure_c16(pt, k);
  Word cycle = girth_cycle_word(k, ps.labels());

  KernelWitnessReport report;
  for (int n : t) {
    if (s.count(n)) continue;
    long letters = static_cast<long>(cycle.size()) * (n < 0 ? -n : n);
    if (letters > word_budget) throw std::invalid_argument("word-length budget exceeded");
    Word h = power_word(ps.labels(), cycle, n);
    KernelWitness w;
    w.degree = n;
    w.nontrivial_in_sub = !is_trivial(ps, h).trivial;
    w.trivial_in_super = is_trivial(pt, h).trivial;
    report.ok = report.ok && w.nontrivial_in_sub && w.trivial_in_super;
    report.witnesses.push_back(w);
  }
  return report;
}

}  // namespace spectacular
