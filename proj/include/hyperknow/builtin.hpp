#ifndef HYPERKNOW_BUILTIN_HPP
#define HYPERKNOW_BUILTIN_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "hyperknow/core.hpp"

namespace hyperknow {

struct ExampleParams {
  std::size_t cards = 4;
  std::size_t agents = 3;
};

inline const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"h1",        "h2",          "h3",        "nested",
                                              "binary-input", "card-game", "shared-memory-functionalized"};
  return names;
}

namespace detail {

inline std::string agent_letter(std::size_t i) {
  // a, b, ..., z, a1, b1, ...
  std::string name(1, static_cast<char>('a' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

// H1/H2/H3: agents a, b, c with one view each; `groups` lists the edges as
// agent subsets.
inline Model three_agent_model(const std::vector<std::string>& groups) {
  RawModel raw;
  raw.sig = Signature({"a", "b", "c"}, {}, {});
  for (const char* a : {"a", "b", "c"}) raw.views.push_back({a, std::string("v") + a, {}, std::nullopt});
  for (const auto& g : groups) {
    RawEdge edge{"e_" + g, {}, {}, std::nullopt};
    for (char c : g) edge.members.push_back({std::string(1, c), std::string("v") + c, std::nullopt});
    raw.edges.push_back(std::move(edge));
  }
  return build_model(raw);
}

inline Model binary_input_model() {
  RawModel raw;
  raw.sig = Signature({"a", "b"}, {{"0_a", "1_a"}, {"0_b", "1_b"}}, {"solo"});
  for (const char* a : {"a", "b"})
    for (const char* bit : {"0", "1"})
      raw.views.push_back({a, std::string(a) + bit, {std::string(bit) + "_" + a}, std::nullopt});
  for (const char* a : {"a", "b"})
    for (const char* bit : {"0", "1"}) {
      const std::string view = std::string(a) + bit;
      raw.edges.push_back({"solo_" + view, {{a, view, std::nullopt}}, {"solo"}, std::nullopt});
    }
  for (const char* x : {"0", "1"})
    for (const char* y : {"0", "1"}) {
      const std::string va = std::string("a") + x, vb = std::string("b") + y;
      raw.edges.push_back({va + "_" + vb, {{"a", va, std::nullopt}, {"b", vb, std::nullopt}}, {}, std::nullopt});
    }
  return build_model(raw);
}

// Agents hold distinct cards out of `cards`; view "<agent><card>" carries the
// atom "c<card>_<agent>"; edge "d<c1>_<c2>_..." is one deal.
inline Model card_game_model(std::size_t cards, std::size_t agents) {
  if (agents == 0 || cards <= agents)
    throw Error(ErrorKind::Usage, "card-game needs more cards than agents (got " + std::to_string(cards) + " cards, " +
                                      std::to_string(agents) + " agents)");
  if (cards > 9 || agents > 6) throw Error(ErrorKind::Bounds, "card-game is limited to 9 cards and 6 agents");
  RawModel raw;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> atoms(agents);
  for (std::size_t i = 0; i < agents; ++i) {
    names.push_back(agent_letter(i));
    for (std::size_t c = 1; c <= cards; ++c) atoms[i].push_back("c" + std::to_string(c) + "_" + names[i]);
  }
  raw.sig = Signature(names, atoms, {});
  for (std::size_t i = 0; i < agents; ++i)
    for (std::size_t c = 1; c <= cards; ++c)
      raw.views.push_back({names[i], names[i] + std::to_string(c), {atoms[i][c - 1]}, std::nullopt});

  // All injective deals, in lexicographic order.
  std::vector<std::size_t> deal(agents, 1);
  auto next = [&]() {
    for (std::size_t pos = agents; pos-- > 0;) {
      if (deal[pos] < cards) {
        ++deal[pos];
        std::fill(deal.begin() + static_cast<std::ptrdiff_t>(pos) + 1, deal.end(), 1);
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<std::size_t> sorted = deal;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    RawEdge edge{"d", {}, {}, std::nullopt};
    for (std::size_t i = 0; i < agents; ++i) {
      edge.name += (i ? "_" : "") + std::to_string(deal[i]);
      edge.members.push_back({names[i], names[i] + std::to_string(deal[i]), std::nullopt});
    }
    raw.edges.push_back(std::move(edge));
  } while (next());
  return build_model(raw);
}

// Two processes over a two-cell shared memory, split so that every edge fixes
// which cell each process reads: edge "s<xL><xR>_<ma><mb>".
inline Model shared_memory_functionalized_model() {
  RawModel raw;
  raw.sig = Signature({"a", "b"}, {{"reads0_a", "reads1_a"}, {"reads0_b", "reads1_b"}}, {"L1", "R1"});
  for (const char* a : {"a", "b"})
    for (const char* cell : {"L", "R"})
      for (const char* bit : {"0", "1"})
        raw.views.push_back({a, std::string(a) + cell + bit, {std::string("reads") + bit + "_" + a}, std::nullopt});
  for (int xl = 0; xl < 2; ++xl)
    for (int xr = 0; xr < 2; ++xr)
      for (const char* ma : {"L", "R"})
        for (const char* mb : {"L", "R"}) {
          const int ba = std::string_view(ma) == "L" ? xl : xr;
          const int bb = std::string_view(mb) == "L" ? xl : xr;
          RawEdge edge{"s" + std::to_string(xl) + std::to_string(xr) + "_" + ma + mb, {}, {}, std::nullopt};
          edge.members.push_back({"a", std::string("a") + ma + std::to_string(ba), std::nullopt});
          edge.members.push_back({"b", std::string("b") + mb + std::to_string(bb), std::nullopt});
          if (xl) edge.env_atoms.push_back("L1");
          if (xr) edge.env_atoms.push_back("R1");
          raw.edges.push_back(std::move(edge));
        }
  return build_model(raw);
}

// Three views x, y, z with edges {x}, {x,y}, {x,y,z}.
inline Model nested_model() {
  RawModel raw;
  raw.sig = Signature({"a", "b", "c"}, {}, {});
  raw.views = {{"a", "x", {}, std::nullopt}, {"b", "y", {}, std::nullopt}, {"c", "z", {}, std::nullopt}};
  raw.edges = {{"w3", {{"a", "x", std::nullopt}}, {}, std::nullopt},
               {"w2", {{"a", "x", std::nullopt}, {"b", "y", std::nullopt}}, {}, std::nullopt},
               {"w1", {{"a", "x", std::nullopt}, {"b", "y", std::nullopt}, {"c", "z", std::nullopt}}, {}, std::nullopt}};
  return build_model(raw);
}

}  // namespace detail

/// Built-in models from the worked examples.
inline Model example(std::string_view name, const ExampleParams& params = {}) {
  if (name == "h1") return detail::three_agent_model({"a", "b", "c", "ab", "ac", "bc", "abc"});
  if (name == "h2") return detail::three_agent_model({"abc"});
  if (name == "h3") return detail::three_agent_model({"ab", "ac", "bc"});
  if (name == "nested") return detail::nested_model();
  if (name == "binary-input") return detail::binary_input_model();
  if (name == "card-game") return detail::card_game_model(params.cards, params.agents);
  if (name == "shared-memory-functionalized") return detail::shared_memory_functionalized_model();
  throw Error(ErrorKind::Usage, "unknown example '" + std::string(name) + "'");
}

}  // namespace hyperknow

#endif  // HYPERKNOW_BUILTIN_HPP
