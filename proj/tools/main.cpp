// Command-line front end: build the PGL-based complexes, verify the seven
// conditions, compute homology, materialize graphical presentations, reduce
// words, and compute R-sets.
//
// Exit codes: 0 success / verified, 1 verification failure or refused
// presentation, 2 usage or input-format errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "spectacular/builder.hpp"
#include "spectacular/dehn.hpp"
#include "spectacular/dot_io.hpp"
#include "spectacular/json_io.hpp"

namespace {

using namespace spectacular;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "1..6", "2,5", "-3..-1,5" -> set of integers
std::set<int> parse_int_set(const std::string& text) {
  std::set<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    size_t dots = token.find("..");
    try {
      if (dots == std::string::npos) {
        out.insert(std::stoi(token));
      } else {
        int lo = std::stoi(token.substr(0, dots));
        int hi = std::stoi(token.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range: " + token);
        for (int v = lo; v <= hi; ++v) out.insert(v);
      }
    } catch (const std::invalid_argument&) {
      throw UsageError("cannot parse integer set: " + text);
    } catch (const std::out_of_range&) {
      throw UsageError("integer out of range in: " + text);
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must be a..b: " + text);
  try {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse range: " + text);
  }
}

// q = p^e for a prime p, or fail
std::pair<int, int> factor_prime_power(int q) {
  if (q < 2) throw UsageError("q must be a prime power >= 2");
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    int e = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (rest != 1) throw UsageError(std::to_string(q) + " is not a prime power");
    return {p, e};
  }
  throw UsageError(std::to_string(q) + " is not a prime power");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

TwoComplex load_complex(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open complex file: " + path);
  json j;
  try {
    f >> j;
    return complex_from_json(j);
  } catch (const json::exception& e) {
    throw UsageError("malformed complex JSON: " + std::string(e.what()));
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid complex: " + std::string(e.what()));
  }
}

std::string summarize(const TwoComplex& c) {
  std::ostringstream os;
  GirthResult g = girth(c.graph());
  os << "vertices " << c.graph().vertex_count() << ", edges " << c.graph().edge_count()
     << ", polygons " << c.polygon_count() << "\n";
  os << "girth " << (g.girth ? std::to_string(*g.girth) : std::string("inf")) << "\n";
  std::map<int, int> perims;
  for (const Polygon& p : c.polygons()) ++perims[p.perimeter()];
  os << "perimeters:";
  for (auto [l, count] : perims) os << " " << count << "x" << l << "-gon";
  if (perims.empty()) os << " none";
  os << "\n";
  return os.str();
}

std::string render_report(const ConditionReport& r) {
  std::ostringstream os;
  for (const ConditionCheck& c : r.checks) {
    os << (c.pass ? "pass" : "FAIL") << "  [" << c.id << "] " << c.name;
    if (!c.pass && !c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  os << (r.spectacular ? "spectacular: yes" : "spectacular: no") << "\n";
  return os.str();
}

struct Options {
  // build
  int q = 8, d = 7, epsilon = 0, class_index = 0, v0 = 0, subdivide = 1;
  std::string stage = "k2";
  // shared
  std::string in_path, out_path, format = "text";
  std::string window_text, s_text = "", word_text, tuple_text, range_text = "-6..6";
  bool exhaustive_check = false;
  long budget = 100000;
};

int cmd_build(const Options& opt) {
  auto [p, e] = factor_prime_power(opt.q);
  BuildRecipe recipe;
  recipe.p = p;
  recipe.e = e;
  recipe.d = opt.d;
  recipe.epsilon = opt.epsilon;
  recipe.class_index = opt.class_index;
  recipe.base_vertex = opt.v0;
  recipe.subdivision = opt.subdivide;

  TwoComplex c = build_k1(recipe);
  if (opt.stage != "k1") c = build_k2(c, recipe.base_vertex);
  if (opt.stage != "k1" && recipe.subdivision >= 2) c = subdivide_edges(c, recipe.subdivision);

  if (opt.format == "json") {
    emit(to_json(c).dump(2), opt.out_path);
    if (!opt.out_path.empty()) std::cout << summarize(c);
  } else if (opt.format == "dot") {
    emit(to_dot(c.graph()), opt.out_path);
  } else {
    if (!opt.out_path.empty()) emit(to_json(c).dump(2), opt.out_path);
    std::cout << summarize(c);
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  TwoComplex c = load_complex(opt.in_path);
  ConditionReport r = verify_spectacular(c);
  emit(opt.format == "json" ? to_json(r).dump(2) : render_report(r), opt.out_path);
  return r.spectacular ? 0 : 1;
}

int cmd_homology(const Options& opt) {
  TwoComplex c = load_complex(opt.in_path);
  HomologyReport r = homology(c);
  if (opt.format == "json") {
    emit(to_json(r).dump(2), opt.out_path);
  } else {
    std::ostringstream os;
    os << "betti " << r.b0 << " " << r.b1 << " " << r.b2 << "\n";
    os << "H1 torsion:";
    for (const Int& d : r.torsion_h1) os << " " << d;
    if (r.torsion_h1.empty()) os << " none";
    os << "\nacyclic: " << (r.acyclic() ? "yes" : "no") << "\n";
    emit(os.str(), opt.out_path);
  }
  return 0;
}

std::pair<std::set<int>, std::set<int>> window_and_s(const Options& opt) {
  std::set<int> window = parse_int_set(opt.window_text);
  std::set<int> s = parse_int_set(opt.s_text);
  if (window.empty()) throw UsageError("--window must be nonempty");
  if (window.count(0)) throw UsageError("--window must not contain 0");
  for (int n : s)
    if (!window.count(n)) throw UsageError("--s must be a subset of --window");
  return {std::move(window), std::move(s)};
}

int cmd_present(const Options& opt) {
  TwoComplex c = load_complex(opt.in_path);
  auto [window, s] = window_and_s(opt);
  GraphicalPresentation p = materialize_hs(c, window, s);
  C16Certificate cert = certify_c16_family(c);
  if (cert.valid) p.set_c16_status(GraphicalPresentation::C16::certified);
  std::optional<C16Report> checked;
  if (opt.exhaustive_check) {
    checked = check_c16(p);
    if (checked->pass && p.c16_status() == GraphicalPresentation::C16::unchecked)
      p.set_c16_status(GraphicalPresentation::C16::verified);
  }

  if (opt.format == "json") {
    json j = to_json(p);
    j["certificate"] = to_json(cert);
    if (checked) j["c16_check"] = to_json(*checked);
    emit(j.dump(2), opt.out_path);
  } else if (opt.format == "dot") {
    std::ostringstream os;
    for (size_t i = 0; i < p.relators().size(); ++i)
      os << to_dot(p.relators()[i].graph, "relator_" + std::to_string(i));
    emit(os.str(), opt.out_path);
  } else {
    std::ostringstream os;
    os << p.relators().size() << " relators over " << p.labels().size() << " labels\n";
    os << "certificate: " << (cert.valid ? "valid" : "invalid") << "\n";
    if (checked)
      os << "exhaustive C'(1/6) check: " << (checked->pass ? "pass" : "fail") << " ("
         << checked->pairs_checked << " pairs)\n";
    if (!opt.out_path.empty()) {
      json j = to_json(p);
      j["certificate"] = to_json(cert);
      if (checked) j["c16_check"] = to_json(*checked);
      emit(j.dump(2), opt.out_path);
    }
    std::cout << os.str();
  }
  if (checked && !checked->pass) return 1;
  return 0;
}

int cmd_reduce(const Options& opt) {
  TwoComplex c = load_complex(opt.in_path);
  auto [window, s] = window_and_s(opt);
  GraphicalPresentation p = materialize_hs(c, window, s);
  try {
    ensure_c16(p, c);
  } catch (const std::invalid_argument& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  }
  Word w;
  try {
    w = parse_word(p.labels(), opt.word_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  TrivialityResult r = is_trivial(p, w);
  if (opt.format == "json") {
    json j = to_json(p.labels(), r.trace);
    j["trivial"] = r.trivial;
    emit(j.dump(2), opt.out_path);
  } else {
    std::ostringstream os;
    os << "initial: " << format_word(p.labels(), r.trace.initial) << "\n";
    for (const ReductionStep& st : r.trace.steps)
      os << "  relator " << st.relator << " at position " << st.position << ": matched "
         << st.match_length << ", replaced by \"" << format_word(p.labels(), st.replacement)
         << "\"\n";
    os << "final: " << format_word(p.labels(), r.trace.final_word) << "\n";
    os << "trivial: " << (r.trivial ? "yes" : "no") << "\n";
    emit(os.str(), opt.out_path);
  }
  return 0;
}

int cmd_rset(const Options& opt) {
  TwoComplex c = load_complex(opt.in_path);
  auto [window, s] = window_and_s(opt);
  auto [lo, hi] = parse_range(opt.range_text);
  RInvariantResult r;
  try {
    if (opt.tuple_text.empty()) {
      r = r_invariant_girth_tuple(c, window, s, lo, hi, opt.budget);
    } else {
      LabeledGraph taut = tautological_labelling(c.graph());
      Word tuple = parse_word(taut.labels(), opt.tuple_text);
      r = r_invariant(c, window, s, tuple, lo, hi, opt.budget);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  }
  if (opt.format == "json") {
    json j{{"r_set", r.r_set}, {"degree_budget", r.max_relator_degree}, {"range", {lo, hi}}};
    emit(j.dump(2), opt.out_path);
  } else {
    std::ostringstream os;
    os << "R = {";
    for (size_t i = 0; i < r.r_set.size(); ++i) os << (i ? "," : "") << r.r_set[i];
    os << "}\n";
    os << "relator degree budget: " << r.max_relator_degree << "\n";
    emit(os.str(), opt.out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectacular 2-complexes: construction, verification and word problems"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* build = app.add_subcommand("build", "build K1/K2/subdivided complexes from PGL(2,q)");
  build->add_option("--q", opt.q, "prime power field size");
  build->add_option("--d", opt.d, "polygon order (d >= 3, d | q+1 or q-1)");
  build->add_option("--epsilon", opt.epsilon, "+1 or -1 (default: derived)");
  build->add_option("--class-index", opt.class_index, "conjugacy class selector");
  build->add_option("--v0", opt.v0, "base vertex kept by the discard step");
  build->add_option("--subdivide", opt.subdivide, "edge subdivision factor (1 = none)");
  build->add_option("--stage", opt.stage, "k1 | k2 (discarded, subdivided)")
      ->check(CLI::IsMember({"k1", "k2"}));
  build->add_option("--out", opt.out_path, "write complex JSON here");
  build->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "dot"}));

  auto add_common = [&](CLI::App* cmd, bool needs_window) {
    cmd->add_option("--in", opt.in_path, "complex JSON file")->required();
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
    cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json", "dot"}));
    if (needs_window) {
      cmd->add_option("--window", opt.window_text, "degree window, e.g. 1..6 or 1,2,5")->required();
      cmd->add_option("--s", opt.s_text, "subset S of the window, comma list");
    }
  };

  CLI::App* verify = app.add_subcommand("verify", "check the seven conditions");
  add_common(verify, false);
  CLI::App* homology_cmd = app.add_subcommand("homology", "integral homology via Smith forms");
  add_common(homology_cmd, false);
  CLI::App* present = app.add_subcommand("present", "materialize the graphical presentation");
  add_common(present, true);
  present->add_flag("--check", opt.exhaustive_check, "run the exhaustive C'(1/6) check");
  CLI::App* reduce = app.add_subcommand("reduce", "Dehn-reduce a word");
  add_common(reduce, true);
  reduce->add_option("--word", opt.word_text, "labels, e.g. \"e0_1 e1_2 ~e0_2\"")->required();
  CLI::App* rset = app.add_subcommand("rset", "R-invariant of a generator tuple");
  add_common(rset, true);
  rset->add_option("--range", opt.range_text, "degree range a..b (default -6..6)");
  rset->add_option("--tuple", opt.tuple_text, "generator tuple (default: a girth cycle)");
  rset->add_option("--budget", opt.budget, "word length budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) return cmd_build(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (homology_cmd->parsed()) return cmd_homology(opt);
    if (present->parsed()) return cmd_present(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (rset->parsed()) return cmd_rset(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
