#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "spectacular/dehn.hpp"
#include "spectacular/labeled.hpp"

using namespace spectacular;

namespace {

SimpleGraph triangle() { return SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("label sets enforce a fixed-point free involution") {
  CHECK_THROWS_AS(LabelSet({"a"}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(LabelSet({"a", "b", "c"}, {1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(LabelSet({"a", "a"}, {1, 0}), std::invalid_argument);
  LabelSet ls({"a", "A"}, {1, 0});
  CHECK(ls.tau(0) == 1);
  CHECK(ls.find("A") == 1);
  CHECK_FALSE(ls.find("b").has_value());
}

TEST_CASE("tautological labelling") {
  LabeledGraph t = tautological_labelling(triangle());
  CHECK(t.labels().size() == 6);
  CHECK(t.is_reduced());
  CHECK(t.labels().name(t.label(0, 1)) == "e0_1");
  CHECK(t.label(1, 0) == t.labels().tau(t.label(0, 1)));

  CHECK(tautological_labelling(complete_graph(9)).labels().size() == 72);

  LabeledGraph path = tautological_labelling(SimpleGraph(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(path.is_reduced());  // endpoints have valence 1
}

TEST_CASE("degree subdivision") {
  LabeledGraph t = tautological_labelling(triangle());

  SECTION("degree 1 is the identity") {
    CHECK(degree_subdivision(t, 1) == t);
  }
  SECTION("degree -1 relabels by tau") {
    LabeledGraph neg = degree_subdivision(t, -1);
    CHECK(neg.graph() == t.graph());
    for (int i = 0; i < t.graph().edge_count(); ++i)
      CHECK(neg.forward_label(i) == t.labels().tau(t.forward_label(i)));
    // applying tau twice gives the original labelling back
    CHECK(degree_subdivision(neg, -1) == t);
  }
  SECTION("degree 2 of a labelled triangle reads a,a,b,b,c,c") {
    LabeledGraph s = degree_subdivision(t, 2);
    CHECK(s.graph().vertex_count() == 6);
    CHECK(s.graph().edge_count() == 6);
    CHECK(s.is_reduced());
    CHECK(girth(s.graph()).girth == 6);
    // boundary word of the doubled triangle, traced from vertex 0
    Word w;
    for (int step : {0, 1, 2})
      for (int rep = 0; rep < 2; ++rep) {
        (void)rep;
        w.push_back(t.label(step, (step + 1) % 3));
      }
    TraceResult tr = trace_word(s, 0, w);
    CHECK(tr.prefix_length == 6);
    CHECK(tr.end_vertex == 0);
  }
  SECTION("negative degrees reverse the reading direction") {
    LabeledGraph s = degree_subdivision(t, -2);
    CHECK(s.is_reduced());
    // the forward word a,a is no longer readable, its tau image is
    Word w{t.label(0, 1), t.label(0, 1)};
    CHECK(trace_word(s, 0, w).prefix_length == 0);
    Word wi{t.labels().tau(t.label(0, 1)), t.labels().tau(t.label(0, 1))};
    CHECK(trace_word(s, 0, wi).prefix_length == 2);
  }
  SECTION("degree -n equals the tau-relabelling of degree n") {
    for (int n : {2, 3, 5})
      CHECK(degree_subdivision(t, -n) == degree_subdivision(degree_subdivision(t, n), -1));
  }
  SECTION("girth scales by |n| and reducedness is preserved") {
    for (int n : {2, 3, -4, 5}) {
      LabeledGraph s = degree_subdivision(tautological_labelling(complete_graph(5)), n);
      CHECK(s.is_reduced());
      CHECK(girth(s.graph()).girth == 3 * (n < 0 ? -n : n));
    }
  }
  SECTION("degree 0 is rejected") {
    CHECK_THROWS_AS(degree_subdivision(t, 0), std::invalid_argument);
  }
}

TEST_CASE("words") {
  auto ls = fixtures::letters(3);
  SECTION("free reduction") {
    CHECK(free_reduce(*ls, fixtures::word(*ls, "aA")).empty());
    CHECK(free_reduce(*ls, fixtures::word(*ls, "abBA")).empty());
    CHECK(free_reduce(*ls, fixtures::word(*ls, "abAB")) == fixtures::word(*ls, "abAB"));
    CHECK(is_freely_reduced(*ls, fixtures::word(*ls, "ab")));
    CHECK_FALSE(is_freely_reduced(*ls, fixtures::word(*ls, "aA")));
  }
  SECTION("inversion") {
    CHECK(invert_word(*ls, fixtures::word(*ls, "abc")) == fixtures::word(*ls, "CBA"));
  }
  SECTION("parsing and formatting round-trip") {
    Word w = parse_word(*ls, "a ~a b ~c");
    CHECK(w == fixtures::word(*ls, "aAbC"));
    CHECK(format_word(*ls, w) == "a A b C");
    CHECK(parse_word(*ls, format_word(*ls, w)) == w);
    CHECK_THROWS_AS(parse_word(*ls, "a zz"), std::invalid_argument);
  }
}

TEST_CASE("tracing is deterministic and stops where no edge matches") {
  LabeledGraph t = tautological_labelling(triangle());
  Word boundary{t.label(0, 1), t.label(1, 2), t.label(2, 0)};
  TraceResult tr = trace_word(t, 0, boundary);
  CHECK(tr.prefix_length == 3);
  CHECK(tr.end_vertex == 0);

  // a (tau a) is not readable past the first letter
  Word back{t.label(0, 1), t.label(0, 1)};
  CHECK(trace_word(t, 0, back).prefix_length == 1);

  CHECK(trace_word(t, 0, {}).prefix_length == 0);

  LabeledGraph path = tautological_labelling(SimpleGraph(3, {{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(trace_word(path, 0, boundary), std::invalid_argument);
}
