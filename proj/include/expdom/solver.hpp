#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "expdom/circulant.hpp"
#include "expdom/weights.hpp"

namespace expdom {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t explored, std::uint64_t budget)
      : std::runtime_error("search budget exceeded: explored " + std::to_string(explored) +
                           " nodes with budget " + std::to_string(budget)),
        explored_(explored) {}
  std::uint64_t explored() const { return explored_; }

 private:
  std::uint64_t explored_;
};

enum class SolveMode { porous, nonporous, classical };

struct SolverOptions {
  bool enumerate_all = false;
  std::uint64_t node_budget = 100'000'000;
  // Start the cardinality scan at ceil(n/(3l+1)) instead of 1. Off by
  // default so correctness never leans on the formula under test.
  bool seed_theorem_bound = false;
  // Admissible optimistic-bound pruning; disable to get the plain
  // exhaustive scan the pruned search is checked against.
  bool enable_pruning = true;
};

struct SolveResult {
  int gamma = 0;
  VertexSet witness;
  SolveMode mode = SolveMode::porous;
  std::uint64_t explored = 0;
  std::vector<VertexSet> all_minima;  // complete when enumerate_all was set
};

// Lexicographically smallest rotation/reflection image of D.
VertexSet canonical_representative(const CirculantGraph& g, const VertexSet& D);

// Closed-neighborhood domination check; witness is the first uncovered vertex.
DominationVerdict is_classical_dominating(const CirculantGraph& g, const VertexSet& D);

SolveResult min_porous_eds(const CirculantGraph& g, const SolverOptions& options = {});
SolveResult min_nonporous_eds(const CirculantGraph& g, const SolverOptions& options = {});
SolveResult min_classical_dominating(const CirculantGraph& g, const SolverOptions& options = {});

// ceil(n / (3l+1)).
int theorem_value(int n, int ell);

// 2 when n = 4, otherwise ceil(n/4).
int cycle_reference_value(int n);

}  // namespace expdom
