#include <gtest/gtest.h>

#include "hyperknow/builtin.hpp"
#include "hyperknow/formula.hpp"
#include "hyperknow/semantics.hpp"

using namespace hyperknow;

namespace {

Signature sig2() { return Signature({"a", "b"}, {{"pa", "qa"}, {"pb"}}, {"p", "q"}); }

ErrorKind sort_error_kind(const Formula& x, const Sort& s, const Signature& sig) {
  try {
    sort_check(x, s, sig);
  } catch (const SortError& e) {
    return e.kind();
  }
  return ErrorKind::Usage;
}

}  // namespace

TEST(SortCheck, NestedAgentsAreWellSorted) {
  // E[a] <> (A[b] [] true)
  const Formula x = f::exists("a", f::diamond("a", f::forall("b", f::box("b", f::top()))));
  EXPECT_NO_THROW(sort_check(x, Sort::world(), sig2()));
}

TEST(SortCheck, CrossSortAtoms) {
  EXPECT_EQ(sort_error_kind(f::atom("pb"), Sort::of("a"), sig2()), ErrorKind::WrongSortAtom);
  EXPECT_EQ(sort_error_kind(f::atom("pa"), Sort::world(), sig2()), ErrorKind::WrongSortAtom);
  EXPECT_EQ(sort_error_kind(f::atom("p"), Sort::of("a"), sig2()), ErrorKind::WrongSortAtom);
  EXPECT_EQ(sort_error_kind(f::atom("zz"), Sort::world(), sig2()), ErrorKind::UnknownAtom);
}

TEST(SortCheck, AgentMismatch) {
  // Under E[a] the operand is an a-formula; a <>_b there is the mixing error.
  EXPECT_EQ(sort_error_kind(f::exists("a", f::diamond("b", f::top())), Sort::world(), sig2()), ErrorKind::AgentMismatch);
  EXPECT_EQ(sort_error_kind(f::exists("z", f::top()), Sort::world(), sig2()), ErrorKind::UnknownAgent);
  EXPECT_EQ(sort_error_kind(f::diamond("a", f::top()), Sort::world(), sig2()), ErrorKind::SortError);
  EXPECT_EQ(sort_error_kind(f::exists("a", f::top()), Sort::of("a"), sig2()), ErrorKind::SortError);
}

TEST(SortCheck, ResolvesAtoms) {
  const Formula x = sort_check(f::exists("b", f::atom("pb")), Sort::world(), sig2());
  EXPECT_EQ(x.agent_id(), AgentId(1));
  ASSERT_TRUE(x.operand().atom_ref());
  EXPECT_EQ(x.operand().atom_ref()->agent, AgentId(1));
}

TEST(Desugar, KsafeExpansion) {
  const Formula phi = f::atom("p");
  const Formula expected = f::exists("a", f::neg(f::diamond("a", f::neg(phi))));
  EXPECT_EQ(desugar(f::ksafe("a", phi)), expected);
}

TEST(Desugar, KunsafeExpansion) {
  const Formula phi = f::atom("p");
  const Formula expected = f::neg(f::exists("a", f::neg(f::neg(f::diamond("a", f::neg(phi))))));
  EXPECT_EQ(desugar(f::kunsafe("a", phi)), expected);
}

TEST(Desugar, AliveUsesPrimitiveTrue) { EXPECT_EQ(desugar(f::alive("c")), f::exists("c", f::top())); }

TEST(Desugar, DualsAndConnectives) {
  const Formula p = f::atom("p"), q = f::atom("q");
  EXPECT_EQ(desugar(f::disj(p, q)), f::neg(f::conj(f::neg(p), f::neg(q))));
  EXPECT_EQ(desugar(f::implies(p, q)), f::neg(f::conj(p, f::neg(q))));
  EXPECT_EQ(desugar(f::forall("a", f::atom("pa"))), f::neg(f::exists("a", f::neg(f::atom("pa")))));
  EXPECT_EQ(desugar(f::box("a", p)), f::neg(f::diamond("a", f::neg(p))));
}

TEST(Desugar, IdempotentAndCore) {
  const Formula x = f::implies(f::kunsafe("a", f::disj(f::atom("p"), f::alive("b"))), f::ksafe("b", f::atom("q")));
  const Formula once = desugar(x);
  EXPECT_TRUE(is_core(once));
  EXPECT_FALSE(is_core(x));
  EXPECT_EQ(desugar(once), once);
}

TEST(Desugar, PreservesSortCheckingAndResolution) {
  const Formula x = f::ksafe("a", f::forall("b", f::atom("pb")));
  const Formula checked = sort_check(x, Sort::world(), sig2());
  const Formula d = desugar(checked);
  EXPECT_NO_THROW(sort_check(d, Sort::world(), sig2()));
  EXPECT_EQ(d.agent_id(), AgentId(0));

  const Formula bad = f::ksafe("a", f::atom("pa"));
  EXPECT_THROW(sort_check(bad, Sort::world(), sig2()), SortError);
  EXPECT_THROW(sort_check(desugar(bad), Sort::world(), sig2()), SortError);
}

TEST(ModalDepth, Counts) {
  EXPECT_EQ(modal_depth(f::atom("p")), 0u);
  EXPECT_EQ(modal_depth(f::exists("a", f::diamond("a", f::atom("p")))), 2u);
  EXPECT_EQ(modal_depth(f::ksafe("a", f::atom("p"))), 2u);
  EXPECT_EQ(modal_depth(f::conj(f::alive("a"), f::atom("p"))), 1u);
}

TEST(AtomsOf, SplitsBySort) {
  const Formula x = f::conj(f::atom("p"), f::exists("a", f::conj(f::atom("pa"), f::diamond("a", f::atom("q")))));
  const auto occ = atoms_of(x, Sort::world());
  EXPECT_EQ(occ.env, (std::set<std::string>{"p", "q"}));
  EXPECT_EQ(occ.agent.at("a"), (std::set<std::string>{"pa"}));
}

TEST(Substitute, ReplacesByName) {
  const Formula x = f::conj(f::atom("p"), f::atom("q"));
  EXPECT_EQ(substitute(x, {{"p", f::top()}}), f::conj(f::top(), f::atom("q")));
}

TEST(Kb4Syntax, AtomsMustBeEnvironmentAtoms) {
  EXPECT_NO_THROW(sort_check(kb4f::knows("a", kb4f::atom("p")), sig2()));
  EXPECT_THROW(sort_check(kb4f::knows("a", kb4f::atom("pa")), sig2()), SortError);
  EXPECT_THROW(sort_check(kb4f::knows("z", kb4f::atom("p")), sig2()), SortError);
  EXPECT_EQ(modal_depth(kb4f::neg(kb4f::knows("a", kb4f::knows("b", kb4f::atom("p"))))), 2u);
}

// Sugared and desugared forms agree at every point of every example.
TEST(Desugar, PreservesTruth) {
  for (const char* name : {"h1", "h3", "nested"}) {
    const Model m = example(name);
    const std::vector<Formula> pool = {
        f::ksafe("a", f::alive("b")),
        f::kunsafe("a", f::disj(f::alive("b"), f::alive("c"))),
        f::implies(f::alive("a"), f::forall("b", f::box("b", f::alive("c")))),
        f::disj(f::ksafe("c", f::bottom()), f::kunsafe("b", f::top())),
    };
    Evaluator ev(m);
    for (const auto& x : pool) {
      const Formula c = sort_check(x, Sort::world(), m.signature());
      const Formula d = desugar(c);
      for (std::size_t e = 0; e < m.hypergraph().edge_count(); ++e)
        EXPECT_EQ(ev.world(EdgeId(e), c), ev.world(EdgeId(e), d)) << name;
    }
  }
}
