// Acceptance gate: one PASS/FAIL line per criterion, details for failed checks.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hyperknow/hyperknow.hpp"
#include "support/random_formulas.hpp"

using namespace hyperknow;
namespace fs = std::filesystem;

namespace {

/// Collects the sub-checks of one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  /// Runs `body`; an escaping exception counts as a failed check.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": exception: " + e.what());
    }
  }

  bool passed() const { return failures_.empty() && checks_ > 0; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

void who_is_alive(Criterion& c) {
  const Model h1 = example("h1"), h2 = example("h2"), h3 = example("h3");
  const auto& sig = h1.signature();
  c.expect(sat_world(h1, "e_ab", parse_world("E[a] true", sig)), "H1 e_ab: E[a] true");
  c.expect(sat_world(h1, "e_ab", parse_world("E[b] true", sig)), "H1 e_ab: E[b] true");
  c.expect(!sat_world(h1, "e_ab", parse_world("E[c] true", sig)), "H1 e_ab: E[c] true is false");
  c.expect(sat_agent(h1, "a", "va", parse_agent("~[] alive(b)", "a", sig)), "H1 va: ~[] alive(b)");
  c.expect(sat_agent(h2, "a", "va", parse_agent("[] (alive(b) & alive(c))", "a", sig)), "H2 va: [] (alive(b) & alive(c))");
  c.expect(sat_agent(h3, "a", "va", parse_agent("[] (alive(b) | alive(c)) & ~[] alive(b) & ~[] alive(c)", "a", sig)),
           "H3 va: knows someone else is alive, not who");
}

void binary_input(Criterion& c) {
  const Model m = example("binary-input");
  const auto& sig = m.signature();
  auto at_a0 = [&](const char* text) { return sat_agent(m, "a", "a0", parse_agent(text, "a", sig)); };
  c.expect(at_a0("0_a"), "a0: 0_a");
  c.expect(at_a0("~[] E[b] true"), "a0: ~[] E[b] true");
  c.expect(at_a0("<> E[b] 1_b"), "a0: <> E[b] 1_b");
  c.expect(at_a0("[] (~solo -> E[b] (0_b | 1_b))"), "a0: [] (~solo -> E[b] (0_b | 1_b))");
  c.expect(at_a0("[] A[b] (0_b | 1_b)"), "a0: [] A[b] (0_b | 1_b)");
}

void scheme_sweep(Criterion& c) {
  const Sort W = Sort::world(), A = Sort::of("a");
  const std::vector<std::string> agents{"a", "b"};
  const Bounds b;
  auto valid = [&](const std::string& label, const char* text, const Sort& sort, std::vector<std::pair<std::string, Sort>> vars) {
    c.guard(label, [&] { c.expect(check_scheme(make_scheme(text, sort, agents, vars), b).valid(), label + ": " + text); });
  };
  auto refuted = [&](const std::string& label, const char* text, const Sort& sort, std::vector<std::pair<std::string, Sort>> vars) {
    c.guard(label, [&] {
      const Scheme s = make_scheme(text, sort, agents, vars);
      const Verdict v = check_scheme(s, b);
      c.expect(!v.valid() && recheck_false(*v.countermodel, s.formula),
               label + ": " + text + (v.valid() ? " is valid within bounds, no countermodel" : ""));
    });
  };
  valid("surjectivity", "X -> <> E[a] X", A, {{"X", A}});
  valid("functionality", "<> E[a] X -> X", A, {{"X", A}});
  valid("non-emptiness", "alive(a) | alive(b)", W, {});
  valid("useful 1", "E[a] X -> A[a] X", W, {{"X", A}});
  valid("useful 2", "[] Y -> [] E[a] [] Y", A, {{"Y", W}});
  valid("useful 3", "E[a] [] Y -> Y", W, {{"Y", W}});
  valid("useful 4", "Y -> A[a] <> Y", W, {{"Y", W}});
  valid("useful 5", "X -> [] E[a] X", A, {{"X", A}});
  valid("useful 6", "[] Y -> <> Y", A, {{"Y", W}});
  valid("locality", "[] E[a] X | [] E[a] ~X", A, {{"X", A}});
  valid("Kunsafe K", "K[a] (X -> Y) -> K[a] X -> K[a] Y", W, {{"X", W}, {"Y", W}});
  valid("Kunsafe B", "X -> K[a] ~K[a] ~X", W, {{"X", W}});
  valid("Kunsafe 4", "K[a] X -> K[a] K[a] X", W, {{"X", W}});
  valid("Ksafe K", "Ksafe[a] (X -> Y) -> Ksafe[a] X -> Ksafe[a] Y", W, {{"X", W}, {"Y", W}});
  valid("Ksafe T", "Ksafe[a] X -> X", W, {{"X", W}});
  valid("Ksafe B", "X -> Ksafe[a] ~Ksafe[a] ~X", W, {{"X", W}});
  refuted("Ksafe 4", "Ksafe[a] X -> Ksafe[a] Ksafe[a] X", W, {{"X", W}});
  refuted("Ksafe necessitation", "Ksafe[a] true", W, {});
}

void round_trip(Criterion& c) {
  Bounds b;
  b.agents = 2;
  b.views = 2;
  b.edges = 3;
  b.agent_atoms = 0;
  b.env_atoms = 0;
  const Signature sig({"a", "b"}, {{}, {}}, {});
  std::size_t hypergraphs = 0;
  for_each_hypergraph(sig, b, [&](const ChromaticHypergraph& h) {
    ++hypergraphs;
    c.expect(is_isomorphic(eta(kappa(h), sig), h).has_value(), "eta(kappa(H)) ~ H for hypergraph #" + std::to_string(hypergraphs));
    return true;
  });
  std::size_t frames = 0;
  for (const auto& fr : enumerate_frames({"a", "b"}, 3)) {
    ++frames;
    c.expect(is_isomorphic(kappa(eta(fr)), fr).has_value(), "kappa(eta(M)) ~ M for frame #" + std::to_string(frames));
  }
  c.expect(hypergraphs > 0 && frames > 0, "enumerations are non-empty");
}

void translation(Criterion& c) {
  std::size_t models = 0;
  for (const auto& fr : enumerate_frames({"a", "b"}, 3))
    for (const auto& m : enumerate_frame_models(fr, {"p", "q"})) {
      ++models;
      const auto bad = translation_counterexample(m, 2);
      c.expect(!bad, bad ? "mismatch at world " + m.frame.worlds()[bad->world] + " for " + render(bad->formula) : "");
    }
  c.expect(models > 0, "model enumeration is non-empty");
}

void proof_corpus(Criterion& c) {
  const fs::path dir = fs::path(HYPERKNOW_DATA_DIR) / "derivations";
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".proof") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const char* required : {"locality.proof", "useful1.proof", "useful2.proof", "useful3.proof", "useful4.proof",
                               "useful5.proof", "useful6.proof", "distribution_box.proof", "distribution_all.proof"})
    c.expect(fs::exists(dir / required), std::string("corpus contains ") + required);
  for (const auto& file : files) {
    const std::string name = file.filename().string();
    c.guard(name, [&] {
      const Derivation d = parse_derivation(slurp(file));
      bool accepted = true;
      try {
        check_derivation(d);
      } catch (const CheckError& e) {
        accepted = false;
        c.expect(false, name + " rejected: " + e.what());
      }
      if (!accepted) return;
      for (std::size_t k = 0; k < d.lines.size(); ++k) {
        Derivation bad = d;
        auto& just = bad.lines[k].justification;
        just = just.rule == Rule::PropTaut ? Justification{Rule::AxNonEmptiness, {}, {}} : Justification{Rule::PropTaut, {}, {}};
        std::size_t at = 0;
        try {
          check_derivation(bad);
        } catch (const CheckError& e) {
          at = e.line();
        }
        c.expect(at == k + 1, name + ": corrupting line " + std::to_string(k + 1) + " rejected at line " + std::to_string(at));
      }
      const auto failure = soundness_spotcheck(d, Bounds{});
      c.expect(!failure, name + ": spot-check fails at line " + std::to_string(failure ? failure->line : 0));
    });
  }
}

GeneralizedModel random_generalized(std::mt19937& rng) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  const Signature sig({"a", "b"}, {{}, {}}, {});
  for (;;) {
    std::vector<std::vector<std::string>> views(2);
    for (auto& vs : views)
      for (std::size_t v = 0, n = pick(4); v < n; ++v) vs.push_back("v" + std::to_string(v));
    const std::size_t edges = 1 + pick(4);
    std::vector<std::string> names;
    for (std::size_t e = 0; e < edges; ++e) names.push_back("s" + std::to_string(e));
    GeneralizedModel::Incidence inc(edges, std::vector<std::vector<ViewId>>(2));
    for (std::size_t e = 0; e < edges; ++e)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t v = 0; v < views[a].size(); ++v)
          if (pick(3) == 0) inc[e][a].push_back(ViewId(v));
    if (!GeneralizedModel::violations(sig, views, names, inc).empty()) continue;
    Valuation val;
    val.agent.assign(2, {});
    return GeneralizedModel::create(sig, views, names, inc, val);
  }
}

void neighborhood(Criterion& c) {
  const auto nf = to_neighborhood(shared_memory_example());
  const auto s01 = static_cast<std::size_t>(std::find(nf.states.begin(), nf.states.end(), "s01") - nf.states.begin());
  std::vector<std::vector<std::string>> hood;
  for (const auto& x : nf.neighborhoods[0][s01]) {
    hood.emplace_back();
    for (auto t : x) hood.back().push_back(nf.states[t]);
  }
  c.expect(hood == std::vector<std::vector<std::string>>{{"s00", "s01"}, {"s01", "s11"}}, "N_a(s01) = {{s00, s01}, {s01, s11}}");
  c.expect(nf.has_membership_property(), "shared memory: membership property");

  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i)
    c.expect(to_neighborhood(random_generalized(rng)).has_membership_property(), "membership on generated frame #" + std::to_string(i));

  Bounds b;
  b.edges = 3;
  b.agent_atoms = 1;
  b.env_atoms = 1;
  const Signature sig = default_signature(b);
  testing_support::FormulaGenerator gen(sig, 11);
  std::vector<std::pair<Sort, Formula>> pool;
  for (int i = 0; i < 20; ++i) {
    const Sort sort = i % 2 ? Sort::of("a") : Sort::world();
    pool.emplace_back(sort, sort_check(gen.generate(sort, 3), sort, sig));
  }
  std::size_t models = 0;
  for_each_model(sig, b, [&](const Model& m) {
    ++models;
    const auto g = as_generalized(m);
    Evaluator ev(m);
    GeneralizedEvaluator gev(g);
    for (const auto& [sort, x] : pool) {
      const std::size_t s = sort.is_world() ? 0 : 1;
      const auto got = gev.extension(x, s);
      const auto& want = ev.extension(x, s);
      bool same = got.size() == want.size();
      for (std::size_t p = 0; same && p < got.size(); ++p) same = got[p] == static_cast<bool>(want[p]);
      if (!same) {
        c.expect(false, "generalized evaluation differs on " + render(x) + "\n" + render_model(m));
        return false;
      }
    }
    return true;
  });
  c.expect(models > 0, "functional model enumeration is non-empty");
}

void card_game(Criterion& c) {
  const Model m = example("card-game", ExampleParams{4, 3});
  c.expect(m.hypergraph().total_view_count() == 12, "12 views");
  c.expect(m.hypergraph().edge_count() == 24, "24 edges");
  const auto complex = downward_closure(underlying_simple(m.hypergraph()));
  const auto f = complex.f_vector();
  c.expect(f.size() == 3 && f[0] == 12 && f[1] == 36 && f[2] == 24, "f-vector (12, 36, 24)");
  c.expect(complex.euler_characteristic() == 0, "Euler characteristic 0");
}

void parser(Criterion& c) {
  const Signature sig({"a", "b"}, {{"p_a", "q_a"}, {"p_b"}}, {"p", "q"});
  testing_support::FormulaGenerator gen(sig, 2024);
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const Sort sort = i % 3 == 0 ? Sort::world() : Sort::of(i % 3 == 1 ? "a" : "b");
    const Formula x = sort_check(gen.generate(sort, 6), sort, sig);
    const std::string text = render(x);
    Formula back;
    try {
      back = parse_formula(text, sort, sig);
    } catch (const Error& e) {
      c.expect(false, "render output does not parse: " + text + ": " + e.what());
      continue;
    }
    if (!(back == desugar(x)) || render(back) != render(desugar(x))) {
      if (++mismatches <= 3) c.expect(false, "round trip differs: " + text);
    }
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " round-trip mismatches");

  const std::vector<std::pair<std::string, Sort>> bad{
      {"", Sort::world()},          {"p &", Sort::world()},         {"(p | q", Sort::world()},
      {"p q", Sort::world()},       {"E[a p", Sort::world()},       {"E[z] p_a", Sort::world()},
      {"p_a", Sort::world()},       {"p", Sort::of("a")},           {"<> p_a", Sort::of("a")},
      {"E[a] p_b", Sort::world()},  {"p $ q", Sort::world()},       {"alive(", Sort::world()},
      {"[] E[b] p_a", Sort::of("a")}, {"K[a]", Sort::world()},     {"~~~", Sort::of("b")},
      {"r", Sort::world()},         {"p -> -> q", Sort::world()},   {")", Sort::world()},
  };
  for (const auto& [text, sort] : bad) {
    try {
      parse_formula(text, sort, sig);
      c.expect(false, "accepted invalid input '" + text + "'");
    } catch (const Error& e) {
      const auto& s = e.span();
      c.expect(s && s->start <= s->end && s->end <= text.size() && s->line == 1 && s->column == s->start + 1,
               "span within bounds for '" + text + "'");
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    void (*run)(Criterion&);
  };
  const std::vector<Entry> criteria{
      {"Who is alive (h1, h2, h3)", who_is_alive},
      {"Binary input with solo runs", binary_input},
      {"Axiom and scheme sweep", scheme_sweep},
      {"Hypergraph/frame round trip", round_trip},
      {"KB4 translation equivalence", translation},
      {"Proof kernel corpus", proof_corpus},
      {"Neighborhood export", neighborhood},
      {"Card-game structure", card_game},
      {"Parser round trip and spans", parser},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    c.guard(criteria[i].title, [&] { criteria[i].run(c); });
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.passed() ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].title << " (" << c.checks()
              << " checks, " << ms << " ms)\n";
    for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
    failed += !c.passed();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
