#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hyperknow/builtin.hpp"
#include "hyperknow/core.hpp"

using namespace hyperknow;

namespace {

RawModel h2_raw() {
  RawModel raw;
  raw.sig = Signature({"a", "b", "c"}, {}, {});
  for (const char* a : {"a", "b", "c"}) raw.views.push_back({a, std::string("v") + a, {}, std::nullopt});
  raw.edges.push_back({"e", {{"a", "va", {}}, {"b", "vb", {}}, {"c", "vc", {}}}, {}, std::nullopt});
  return raw;
}

bool has_violation(const ValidationError& err, const std::string& invariant, const std::string& needle) {
  return std::any_of(err.violations().begin(), err.violations().end(), [&](const Violation& v) {
    return v.invariant == invariant && v.detail.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST(Signature, RejectsSharedAtomNames) {
  EXPECT_THROW(Signature({"a", "b"}, {{"p"}, {"p"}}, {}), ValidationError);
  EXPECT_THROW(Signature({"a"}, {{"p"}}, {"p"}), ValidationError);
  EXPECT_THROW(Signature({"a", "a"}, {}, {}), ValidationError);
  EXPECT_THROW(Signature({"env"}, {}, {}), ValidationError);
  EXPECT_THROW(Signature({"a"}, {{"true"}}, {}), ValidationError);
}

TEST(Signature, ResolvesAtomsToTheirSort) {
  Signature sig({"a", "b"}, {{"pa"}, {"pb", "qb"}}, {"solo"});
  ASSERT_TRUE(sig.find_atom("qb"));
  EXPECT_EQ(sig.find_atom("qb")->agent, AgentId(1));
  EXPECT_EQ(sig.find_atom("qb")->index, 1u);
  EXPECT_FALSE(sig.find_atom("solo")->agent);
  EXPECT_FALSE(sig.find_atom("nope"));
}

TEST(BuildModel, H2IsValid) {
  const Model m = build_model(h2_raw());
  EXPECT_EQ(m.hypergraph().edge_count(), 1u);
  EXPECT_EQ(m.hypergraph().total_view_count(), 3u);
}

TEST(BuildModel, MinimalStructure) {
  RawModel raw;
  raw.sig = Signature({"a"}, {}, {});
  raw.views.push_back({"a", "v", {}, {}});
  raw.edges.push_back({"e", {{"a", "v", {}}}, {}, {}});
  EXPECT_NO_THROW(build_model(raw));
}

TEST(BuildModel, ReportsEverySurjectivityViolation) {
  RawModel raw = h2_raw();
  raw.edges.clear();
  try {
    build_model(raw);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& err) {
    ASSERT_EQ(err.violations().size(), 3u);
    for (const auto& v : err.violations()) EXPECT_EQ(v.invariant, "surjectivity");
    EXPECT_TRUE(has_violation(err, "surjectivity", "view vb of agent b belongs to no edge"));
  }
}

TEST(BuildModel, ReportsColorFunctionalityNonEmptinessTogether) {
  RawModel raw = h2_raw();
  raw.edges.push_back({"empty", {}, {}, {}});
  raw.edges.push_back({"wrong", {{"a", "vb", {}}}, {}, {}});
  raw.edges.push_back({"twice", {{"a", "va", {}}, {"a", "va2", {}}}, {}, {}});
  raw.views.push_back({"a", "va2", {}, {}});
  try {
    build_model(raw);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& err) {
    EXPECT_TRUE(has_violation(err, "non-emptiness", "edge empty"));
    EXPECT_TRUE(has_violation(err, "color discipline", "vb"));
    EXPECT_TRUE(has_violation(err, "functionality", "edge twice"));
  }
}

TEST(BuildModel, ValuationMustUseOwnAtoms) {
  RawModel raw;
  raw.sig = Signature({"a", "b"}, {{"pa"}, {"pb"}}, {"s"});
  raw.views = {{"a", "x", {"pb"}, {}}, {"b", "y", {}, {}}};
  raw.edges = {{"e", {{"a", "x", {}}, {"b", "y", {}}}, {"pa"}, {}}};
  try {
    build_model(raw);
    FAIL();
  } catch (const ValidationError& err) {
    EXPECT_EQ(err.violations().size(), 2u);
    EXPECT_TRUE(has_violation(err, "valuation", "pb"));
    EXPECT_TRUE(has_violation(err, "valuation", "pa"));
  }
}

TEST(BuildModel, DuplicateEdgeLabel) {
  RawModel raw = h2_raw();
  raw.edges.push_back(raw.edges.front());
  try {
    build_model(raw);
    FAIL();
  } catch (const ValidationError& err) {
    EXPECT_TRUE(has_violation(err, "names", "duplicate edge label e"));
  }
}

TEST(ToRaw, RoundTrips) {
  for (const auto& name : example_names()) {
    const Model m = example(name);
    EXPECT_EQ(build_model(to_raw(m)), m) << name;
  }
}

TEST(Alive, WorkedExamples) {
  const Model h1 = example("h1");
  EXPECT_FALSE(alive(h1, "e_ab", "c"));
  EXPECT_TRUE(alive(h1, "e_ab", "a"));
  const Model h2 = example("h2");
  EXPECT_TRUE(alive(h2, "e_abc", "a"));
  EXPECT_THROW(alive(h1, "nope", "a"), Error);
  EXPECT_THROW(alive(h1, "e_ab", "z"), Error);
}

TEST(Alive, EveryEdgeHasAnAliveAgent) {
  for (const auto& name : example_names()) {
    const Model m = example(name);
    const auto& h = m.hypergraph();
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      bool any = false;
      for (std::size_t a = 0; a < h.agent_count(); ++a) any = any || h.alive(EdgeId(e), AgentId(a));
      EXPECT_TRUE(any) << name << " " << h.edge_name(EdgeId(e));
    }
  }
}

TEST(WorldsOfView, WorkedExamples) {
  EXPECT_EQ(worlds_of_view(example("h3"), "a", "va"), (std::vector<std::string>{"e_ab", "e_ac"}));
  EXPECT_EQ(worlds_of_view(example("h2"), "a", "va"), (std::vector<std::string>{"e_abc"}));
  EXPECT_THROW(worlds_of_view(example("h2"), "a", "vb"), Error);
}

TEST(WorldsOfView, FibersPartitionAliveEdges) {
  for (const auto& name : example_names()) {
    const Model m = example(name);
    const auto& h = m.hypergraph();
    for (std::size_t a = 0; a < h.agent_count(); ++a) {
      std::multiset<std::size_t> covered;
      for (std::size_t v = 0; v < h.view_count(AgentId(a)); ++v) {
        EXPECT_FALSE(h.fiber(AgentId(a), ViewId(v)).empty());
        for (auto e : h.fiber(AgentId(a), ViewId(v))) covered.insert(e.index());
      }
      std::multiset<std::size_t> alive_edges;
      for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (h.alive(EdgeId(e), AgentId(a))) alive_edges.insert(e);
      EXPECT_EQ(covered, alive_edges) << name;
    }
  }
}

TEST(UnderlyingSimple, H1HasSevenHyperedges) {
  const auto s = underlying_simple(example("h1").hypergraph());
  EXPECT_EQ(s.vertices.size(), 3u);
  EXPECT_EQ(s.hyperedges.size(), 7u);
}

TEST(UnderlyingSimple, Fig2) {
  const auto s = underlying_simple(example("nested").hypergraph());
  EXPECT_EQ(s.hyperedges, (std::set<std::vector<std::size_t>>{{0}, {0, 1}, {0, 1, 2}}));
}

TEST(UnderlyingSimple, ParallelEdgesCollapse) {
  RawModel raw;
  raw.sig = Signature({"a"}, {}, {});
  raw.views = {{"a", "v", {}, {}}};
  raw.edges = {{"e1", {{"a", "v", {}}}, {}, {}}, {"e2", {{"a", "v", {}}}, {}, {}}};
  const Model m = build_model(raw);
  EXPECT_EQ(m.hypergraph().edge_count(), 2u);
  EXPECT_EQ(underlying_simple(m.hypergraph()).hyperedges.size(), 1u);
}

TEST(DownwardClosure, Triangle) {
  SimpleHypergraph s{{"x", "y", "z"}, {{0, 1, 2}}};
  const auto c = downward_closure(s);
  EXPECT_EQ(c.simplices().size(), 7u);
  EXPECT_TRUE(is_downward_closed(c.hypergraph()));
}

TEST(DownwardClosure, Idempotent) {
  const auto once = downward_closure(underlying_simple(example("h3").hypergraph()));
  const auto twice = downward_closure(once.hypergraph());
  EXPECT_EQ(once.simplices(), twice.simplices());
}

TEST(DownwardClosure, RejectsNonClosedComplex) {
  EXPECT_THROW(SimplicialComplex(SimpleHypergraph{{"x", "y"}, {{0, 1}}}), ValidationError);
}

TEST(Examples, Counts) {
  const Model h1 = example("h1");
  EXPECT_EQ(h1.hypergraph().total_view_count(), 3u);
  EXPECT_EQ(h1.hypergraph().edge_count(), 7u);
  EXPECT_EQ(example("h2").hypergraph().edge_count(), 1u);
  EXPECT_EQ(example("h3").hypergraph().edge_count(), 3u);

  const Model bin = example("binary-input");
  EXPECT_EQ(bin.hypergraph().total_view_count(), 4u);
  EXPECT_EQ(bin.hypergraph().edge_count(), 8u);
  std::size_t solo = 0;
  for (std::size_t e = 0; e < 8; ++e) solo += bin.holds_env_atom(0, EdgeId(e));
  EXPECT_EQ(solo, 4u);

  const Model cards = example("card-game");
  EXPECT_EQ(cards.hypergraph().total_view_count(), 12u);
  EXPECT_EQ(cards.hypergraph().edge_count(), 24u);
  EXPECT_THROW(example("card-game", {3, 3}), Error);
  EXPECT_THROW(example("nope"), Error);
}

// Independent count: agent i holds card c in (k-1)!/(k-n)! of the deals.
TEST(Examples, CardGameFibers) {
  const Model m = example("card-game");
  const auto& h = m.hypergraph();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(h.fiber(AgentId(a), ViewId(v)).size(), 6u);
}

// Closure of the card-game complex, recomputed with plain subset enumeration.
TEST(Examples, CardGameTorus) {
  const Model cards = example("card-game");
  const auto& h = cards.hypergraph();
  std::set<std::set<std::string>> simplices;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    std::vector<std::string> verts;
    for (std::size_t a = 0; a < 3; ++a)
      verts.push_back(std::to_string(a) + "/" + h.view_name(AgentId(a), *h.proj(EdgeId(e), AgentId(a))));
    for (int mask = 1; mask < 8; ++mask) {
      std::set<std::string> face;
      for (int i = 0; i < 3; ++i)
        if (mask & (1 << i)) face.insert(verts[static_cast<std::size_t>(i)]);
      simplices.insert(face);
    }
  }
  std::map<std::size_t, long> f;
  for (const auto& s : simplices) ++f[s.size()];
  EXPECT_EQ(f[1], 12);
  EXPECT_EQ(f[2], 36);
  EXPECT_EQ(f[3], 24);

  const auto complex = downward_closure(underlying_simple(h));
  EXPECT_EQ(complex.f_vector(), (std::vector<std::size_t>{12, 36, 24}));
  EXPECT_EQ(complex.euler_characteristic(), f[1] - f[2] + f[3]);
  EXPECT_EQ(complex.euler_characteristic(), 0);
}

TEST(Examples, SharedMemoryFunctionalized) {
  const Model m = example("shared-memory-functionalized");
  EXPECT_EQ(m.hypergraph().edge_count(), 16u);
  EXPECT_EQ(m.hypergraph().total_view_count(), 8u);
}
