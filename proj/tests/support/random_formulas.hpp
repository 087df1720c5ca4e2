#ifndef HYPERKNOW_TESTS_RANDOM_FORMULAS_HPP
#define HYPERKNOW_TESTS_RANDOM_FORMULAS_HPP

#include <random>
#include <string>
#include <vector>

#include "hyperknow/formula.hpp"

namespace testing_support {

using hyperknow::Formula;
using hyperknow::Signature;
using hyperknow::Sort;
namespace f = hyperknow::f;

/// Random well-sorted formulas over a signature, including every derived
/// constructor.
class FormulaGenerator {
 public:
  FormulaGenerator(Signature sig, unsigned seed) : sig_(std::move(sig)), rng_(seed) {}

  Formula generate(const Sort& sort, int depth) {
    if (depth <= 0 || pick(4) == 0) return leaf(sort);
    const int n = sort.is_world() ? 12 : 7;
    switch (pick(n)) {
      case 0: return f::neg(generate(sort, depth - 1));
      case 1: {
        Formula l = generate(sort, depth - 1);
        return f::conj(l, generate(sort, depth - 1));
      }
      case 2: {
        Formula l = generate(sort, depth - 1);
        return f::disj(l, generate(sort, depth - 1));
      }
      case 3: {
        Formula l = generate(sort, depth - 1);
        return f::implies(l, generate(sort, depth - 1));
      }
      case 4: return leaf(sort);
      case 5:
        if (!sort.is_world()) return f::diamond(*sort.agent, generate(Sort::world(), depth - 1));
        return f::alive(agent());
      case 6:
        if (!sort.is_world()) return f::box(*sort.agent, generate(Sort::world(), depth - 1));
        return leaf(sort);
      case 7: return f::alive(agent());
      case 8: {
        const std::string a = agent();
        return f::ksafe(a, generate(Sort::world(), depth - 1));
      }
      case 9: {
        const std::string a = agent();
        return f::kunsafe(a, generate(Sort::world(), depth - 1));
      }
      case 10: {
        const std::string a = agent();
        return f::exists(a, generate(Sort::of(a), depth - 1));
      }
      default: {
        const std::string a = agent();
        return f::forall(a, generate(Sort::of(a), depth - 1));
      }
    }
  }

 private:
  std::string agent() {
    return sig_.agents()[static_cast<std::size_t>(pick(static_cast<int>(sig_.agent_count())))];
  }

  Formula leaf(const Sort& sort) {
    std::vector<std::string> atoms;
    if (sort.is_world())
      atoms = sig_.env_atoms();
    else
      atoms = sig_.agent_atoms(*sig_.find_agent(*sort.agent));
    const int k = pick(static_cast<int>(atoms.size()) + 2);
    if (k == 0) return f::top();
    if (k == 1) return f::bottom();
    return f::atom(atoms[static_cast<std::size_t>(k - 2)]);
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Signature sig_;
  std::mt19937 rng_;
};

}  // namespace testing_support

#endif
