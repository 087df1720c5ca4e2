#ifndef HYPERKNOW_KB4_HPP
#define HYPERKNOW_KB4_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperknow/formula.hpp"
#include "hyperknow/frames.hpp"
#include "hyperknow/semantics.hpp"

namespace hyperknow {

// ---------------------------------------------------------------------------
// Kripke semantics on partial epistemic models, evaluated on the frame itself.

namespace detail {

inline bool kb4_holds(const PartialEpistemicModel& m, std::size_t w, const Kb4Formula& x) {
  switch (x.kind()) {
    case Kb4Kind::True: return true;
    case Kb4Kind::False: return false;
    case Kb4Kind::Atom: {
      const auto i = m.find_atom(x.name());
      if (!i) throw Error(ErrorKind::UnknownAtom, "unknown atom '" + x.name() + "'");
      return m.env[*i][w];
    }
    case Kb4Kind::Not: return !kb4_holds(m, w, x.operand());
    case Kb4Kind::And: return kb4_holds(m, w, x.lhs()) && kb4_holds(m, w, x.rhs());
    case Kb4Kind::Knows: {
      const auto a = m.frame.find_agent(x.name());
      if (!a) throw Error(ErrorKind::UnknownAgent, "unknown agent '" + x.name() + "'");
      const auto c = m.frame.class_of(*a, w);
      if (!c) return true;
      for (auto u : m.frame.classes(*a)[*c])
        if (!kb4_holds(m, u, x.operand())) return false;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline bool sat_kb4(const PartialEpistemicModel& m, std::size_t w, const Kb4Formula& x) {
  if (w >= m.frame.world_count()) throw Error(ErrorKind::UnknownPoint, "unknown world #" + std::to_string(w));
  return detail::kb4_holds(m, w, x);
}

inline bool sat_kb4(const PartialEpistemicModel& m, std::string_view world, const Kb4Formula& x) {
  const auto w = m.frame.find_world(world);
  if (!w) throw Error(ErrorKind::UnknownPoint, "unknown world '" + std::string(world) + "'");
  return detail::kb4_holds(m, *w, x);
}

inline std::vector<bool> extension_kb4(const PartialEpistemicModel& m, const Kb4Formula& x) {
  std::vector<bool> out(m.frame.world_count());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = detail::kb4_holds(m, w, x);
  return out;
}

// ---------------------------------------------------------------------------
// Translation

/// How K_a is rendered: Unsafe is the faithful choice; Safe exists to show
/// that the other reading breaks the correspondence.
enum class KnowledgeEncoding { Unsafe, Safe };

inline Formula translate(const Kb4Formula& x, KnowledgeEncoding enc = KnowledgeEncoding::Unsafe) {
  switch (x.kind()) {
    case Kb4Kind::True: return f::top();
    case Kb4Kind::False: return f::bottom();
    case Kb4Kind::Atom: return f::atom(x.name());
    case Kb4Kind::Not: return f::neg(translate(x.operand(), enc));
    case Kb4Kind::And: return f::conj(translate(x.lhs(), enc), translate(x.rhs(), enc));
    case Kb4Kind::Knows: {
      auto inner = translate(x.operand(), enc);
      return enc == KnowledgeEncoding::Unsafe ? f::kunsafe(x.name(), std::move(inner)) : f::ksafe(x.name(), std::move(inner));
    }
  }
  return f::top();
}

/// True iff the KB4 evaluator and the translated formula on eta(m) agree at
/// every world.
inline bool check_translation_equiv(const PartialEpistemicModel& m, const Kb4Formula& x,
                                    KnowledgeEncoding enc = KnowledgeEncoding::Unsafe) {
  const Model h = eta_model(m);
  const auto translated = extension_world(h, translate(x, enc));
  std::vector<bool> hit(m.frame.world_count(), false);
  for (auto e : translated) hit[e.index()] = true;
  return extension_kb4(m, x) == hit;
}

struct TranslationMismatch {
  Kb4Formula formula;
  std::size_t world = 0;
  bool kb4 = false;
  bool translated = false;
};

/// Exhaustive check over every KB4 formula of modal depth <= depth built from
/// the model's atoms. Formulas are grouped by their pair of extensions (KB4
/// side, translated side); both semantics are compositional, so one witness
/// per pair covers the whole class. K_a steps are evaluated by replacing the
/// operand with a fresh atom carrying the operand's extension.
inline std::optional<TranslationMismatch> translation_counterexample(const PartialEpistemicModel& m, std::size_t depth,
                                                                     KnowledgeEncoding enc = KnowledgeEncoding::Unsafe) {
  using Ext = std::vector<bool>;
  using Key = std::pair<Ext, Ext>;
  const std::size_t n = m.frame.world_count();

  std::string hole = "x";
  while (m.find_atom(hole)) hole += "_";
  std::vector<std::string> atoms = m.env_atoms;
  atoms.push_back(hole);
  const Signature sig(m.frame.agents(), {}, atoms);
  const auto graph = std::make_shared<const ChromaticHypergraph>(eta(m.frame, sig));

  auto with_hole = [&](const Ext& kb4_ext, const Ext& t_ext) {
    std::vector<std::vector<bool>> kb4_env = m.env;
    kb4_env.push_back(kb4_ext);
    PartialEpistemicModel km(m.frame, atoms, std::move(kb4_env));
    Valuation val = Valuation::empty_for(*graph);
    for (std::size_t i = 0; i < m.env.size(); ++i) val.env[i] = m.env[i];
    val.env.back() = t_ext;
    return std::pair<PartialEpistemicModel, Model>(std::move(km), Model(graph, std::move(val)));
  };
  auto translated_ext = [&](const Model& model, const Formula& x) {
    Ext out(n, false);
    for (auto e : extension_world(model, x)) out[e.index()] = true;
    return out;
  };

  std::map<Key, Kb4Formula> classes;
  auto add = [&](Ext k, Ext t, Kb4Formula witness) {
    return classes.emplace(Key(std::move(k), std::move(t)), std::move(witness)).second;
  };
  auto mismatch = [&]() -> std::optional<TranslationMismatch> {
    for (const auto& [key, witness] : classes)
      for (std::size_t w = 0; w < n; ++w)
        if (key.first[w] != key.second[w]) return TranslationMismatch{witness, w, key.first[w], key.second[w]};
    return std::nullopt;
  };
  auto boolean_closure = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::pair<Key, Kb4Formula>> snapshot(classes.begin(), classes.end());
      for (const auto& [key, x] : snapshot) {
        Ext nk(n), nt(n);
        for (std::size_t w = 0; w < n; ++w) {
          nk[w] = !key.first[w];
          nt[w] = !key.second[w];
        }
        grew |= add(nk, nt, kb4f::neg(x));
      }
      for (std::size_t i = 0; i < snapshot.size(); ++i)
        for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
          Ext nk(n), nt(n);
          for (std::size_t w = 0; w < n; ++w) {
            nk[w] = snapshot[i].first.first[w] && snapshot[j].first.first[w];
            nt[w] = snapshot[i].first.second[w] && snapshot[j].first.second[w];
          }
          grew |= add(nk, nt, kb4f::conj(snapshot[i].second, snapshot[j].second));
        }
    }
  };

  // Depth 0: atoms and constants, each evaluated by both sides.
  {
    const Model base = eta_model(m);
    std::vector<Kb4Formula> seeds{kb4f::top()};
    for (const auto& p : m.env_atoms) seeds.push_back(kb4f::atom(p));
    for (const auto& x : seeds) add(extension_kb4(m, x), translated_ext(base, translate(x, enc)), x);
  }
  boolean_closure();
  if (auto bad = mismatch()) return bad;

  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<std::pair<Key, Kb4Formula>> snapshot(classes.begin(), classes.end());
    for (const auto& [key, x] : snapshot) {
      const auto [km, model] = with_hole(key.first, key.second);
      for (const auto& a : m.frame.agents()) {
        const Kb4Formula step = kb4f::knows(a, kb4f::atom(hole));
        add(extension_kb4(km, step), translated_ext(model, translate(step, enc)), kb4f::knows(a, x));
      }
    }
    boolean_closure();
    if (auto bad = mismatch()) return bad;
  }
  return std::nullopt;
}

}  // namespace hyperknow

#endif  // HYPERKNOW_KB4_HPP
