#include <gtest/gtest.h>

#include "hyperknow/builtin.hpp"
#include "hyperknow/parser.hpp"
#include "hyperknow/semantics.hpp"
#include "support/random_formulas.hpp"

using namespace hyperknow;

namespace {

bool world(const Model& m, std::string_view edge, std::string_view text) {
  return sat_world(m, edge, parse_world(text, m.signature()));
}
bool view(const Model& m, std::string_view agent, std::string_view v, std::string_view text) {
  return sat_agent(m, agent, v, parse_agent(text, agent, m.signature()));
}

// Direct transcription of the satisfaction clauses, without memoization or
// extensions; used as an oracle for the evaluator.
bool oracle(const Model& m, const Sort& sort, std::size_t point, const Formula& x) {
  const auto& h = m.hypergraph();
  const auto& sig = m.signature();
  switch (x.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: {
      const auto ref = *sig.find_atom(x.name());
      if (sort.is_world()) return m.valuation().env[ref.index][point];
      return m.valuation().agent[ref.agent->index()][ref.index][point];
    }
    case Kind::Not: return !oracle(m, sort, point, x.operand());
    case Kind::And: return oracle(m, sort, point, x.lhs()) && oracle(m, sort, point, x.rhs());
    case Kind::Diamond: {
      const AgentId a = *sig.find_agent(x.name());
      for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (h.proj(EdgeId(e), a) == ViewId(point) && oracle(m, Sort::world(), e, x.operand())) return true;
      return false;
    }
    case Kind::SomeView: {
      const AgentId a = *sig.find_agent(x.name());
      const auto v = h.proj(EdgeId(point), a);
      return v && oracle(m, Sort::of(x.name()), v->index(), x.operand());
    }
    default: ADD_FAILURE() << "oracle expects core formulas"; return false;
  }
}

}  // namespace

TEST(WhoIsAlive, H1) {
  const Model h1 = example("h1");
  EXPECT_TRUE(world(h1, "e_ab", "E[a] true"));
  EXPECT_TRUE(world(h1, "e_ab", "E[b] true"));
  EXPECT_FALSE(world(h1, "e_ab", "E[c] true"));
  EXPECT_TRUE(view(h1, "a", "va", "~[] alive(b)"));
}

TEST(WhoIsAlive, H2AndH3) {
  EXPECT_TRUE(view(example("h2"), "a", "va", "[] (alive(b) & alive(c))"));
  EXPECT_TRUE(view(example("h3"), "a", "va", "[] (alive(b) | alive(c)) & ~[] alive(b) & ~[] alive(c)"));
}

TEST(BinaryInput, ViewA0) {
  const Model m = example("binary-input");
  EXPECT_TRUE(view(m, "a", "a0", "0_a"));
  EXPECT_TRUE(view(m, "a", "a0", "~[] E[b] true"));
  EXPECT_TRUE(view(m, "a", "a0", "<> E[b] 1_b"));
  EXPECT_TRUE(view(m, "a", "a0", "[] (~solo -> E[b] (0_b | 1_b))"));
  EXPECT_TRUE(view(m, "a", "a0", "[] A[b] (0_b | 1_b)"));
}

TEST(Extension, BinaryInputSolo) {
  const Model m = example("binary-input");
  std::vector<std::string> names;
  for (auto e : extension_world(m, parse_world("solo", m.signature()))) names.push_back(m.hypergraph().edge_name(e));
  EXPECT_EQ(names, (std::vector<std::string>{"solo_a0", "solo_a1", "solo_b0", "solo_b1"}));
  EXPECT_EQ(extension_world(m, f::top()).size(), 8u);
}

TEST(Extension, H1EveryoneAlive) {
  const Model h1 = example("h1");
  const auto ext = extension_world(h1, parse_world("alive(a) & alive(b) & alive(c)", h1.signature()));
  // Brute force: edges whose projection row is total.
  std::vector<EdgeId> expected;
  for (std::size_t e = 0; e < h1.hypergraph().edge_count(); ++e) {
    bool all = true;
    for (std::size_t a = 0; a < 3; ++a) all = all && h1.hypergraph().proj(EdgeId(e), AgentId(a)).has_value();
    if (all) expected.push_back(EdgeId(e));
  }
  EXPECT_EQ(ext, expected);
  EXPECT_EQ(ext.size(), 1u);
}

TEST(Extension, AgentSort) {
  const Model m = example("binary-input");
  const AgentId a = require_agent(m.signature(), "a");
  EXPECT_EQ(extension_agent(m, a, parse_agent("<> solo", "a", m.signature())).size(), 2u);
}

TEST(Validity, Alive) {
  EXPECT_TRUE(valid_in_model(example("h2"), f::alive("a")));
  EXPECT_FALSE(valid_in_model(example("h1"), f::alive("a")));
  for (const auto& name : example_names()) {
    const Model m = example(name);
    std::vector<Formula> alives;
    for (const auto& a : m.signature().agents()) alives.push_back(f::alive(a));
    EXPECT_TRUE(valid_in_model(m, f::big_or(alives))) << name;
  }
}

TEST(Errors, UnknownPointAndSort) {
  const Model m = example("h1");
  EXPECT_THROW(sat_world(m, "nope", f::top()), Error);
  EXPECT_THROW(sat_agent(m, "a", "vb", f::top()), Error);
  EXPECT_THROW(sat_world(m, "e_a", f::diamond("a", f::top())), SortError);
}

TEST(Properties, SafeAndUnsafeKnowledge) {
  for (const auto& name : example_names()) {
    const Model m = example(name);
    const auto& h = m.hypergraph();
    Evaluator ev(m);
    for (const auto& a : m.signature().agents()) {
      const AgentId id = *m.signature().find_agent(a);
      for (const Formula& phi : {f::top(), f::bottom(), f::alive(m.signature().agents().front())}) {
        const Formula safe = sort_check(f::ksafe(a, phi), Sort::world(), m.signature());
        const Formula unsafe = sort_check(f::kunsafe(a, phi), Sort::world(), m.signature());
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
          if (h.alive(EdgeId(e), id)) {
            EXPECT_EQ(ev.world(EdgeId(e), safe), ev.world(EdgeId(e), unsafe));
          } else {
            EXPECT_FALSE(ev.world(EdgeId(e), safe));
            EXPECT_TRUE(ev.world(EdgeId(e), unsafe));
          }
        }
      }
    }
  }
}

TEST(Properties, AtMostOneView) {
  const Model m = example("binary-input");
  for (const char* phi : {"0_a", "1_a", "0_a | <> solo", "[] E[b] true"})
    EXPECT_TRUE(valid_in_model(m, parse_world(std::string("E[a] (") + phi + ") -> A[a] (" + phi + ")", m.signature())));
}

TEST(Properties, AgentsDecideFormulasAboutThemselves) {
  const Model m = example("binary-input");
  for (const char* phi : {"0_a", "<> solo", "[] E[b] 1_b", "~0_a & <> ~solo"}) {
    const std::string text = std::string("A[a] ([] E[a] (") + phi + ") | [] E[a] ~(" + phi + "))";
    EXPECT_TRUE(valid_in_model(m, parse_world(text, m.signature()))) << text;
  }
}

TEST(Evaluator, AgreesWithClauseOracleOnRandomFormulas) {
  for (const char* name : {"binary-input", "shared-memory-functionalized", "h1"}) {
    const Model m = example(name);
    testing_support::FormulaGenerator gen(m.signature(), 5);
    Evaluator ev(m);
    for (int i = 0; i < 300; ++i) {
      const Sort sort = i % 3 == 0 ? Sort::of(m.signature().agents().front()) : Sort::world();
      const Formula x = sort_check(gen.generate(sort, 5), sort, m.signature());
      const Formula core = desugar(x);
      const std::size_t s = sort.is_world() ? 0 : 1;
      const auto& ext = ev.extension(x, s);
      for (std::size_t p = 0; p < ext.size(); ++p) {
        ASSERT_EQ(ext[p], oracle(m, sort, p, core)) << name << " " << i;
        ASSERT_EQ(ext[p], ev.extension(core, s)[p]);
      }
    }
  }
}
