#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "expdom/circulant.hpp"
#include "expdom/solver.hpp"

namespace expdom {

enum class LawVerdict { pass, fail, not_applicable, out_of_warranty };
std::string to_string(LawVerdict v);

// Machine-checked statement outcome. A fail carries a concrete
// counterexample in `evidence`; not-applicable names the violated
// hypothesis; out-of-warranty marks instances outside a theorem's
// hypotheses where the formula is known to deviate.
struct LawReport {
  std::string law;
  int n = 0;
  int ell = 0;
  std::optional<int> offset;
  LawVerdict verdict = LawVerdict::not_applicable;
  nlohmann::json evidence;

  nlohmann::json to_json() const;  // keys: law, n, ell, offset, verdict, evidence
};

// gamma*_e <= gamma_e <= gamma with exact solver values.
LawReport check_inequality_chain(const CirculantGraph& g, const SolverOptions& options = {});

// Both exponential domination numbers equal ceil(n/(3l+1)). Instances with
// n < 6l+2 are reported out-of-warranty instead of pass/fail.
LawReport check_main_theorem(const CirculantGraph& g, const SolverOptions& options = {});

// For (3l+1) | n, n >= 6l+2: the minimum porous sets are exactly the 3l+1
// rotations of the canonical progression, and every offset partition of each
// has f* = 1 and no empty block.
LawReport check_uniqueness(const CirculantGraph& g, const SolverOptions& options = {});

// The five strict weight bounds at the empty-block checkpoints, decided by
// integer cross multiplication. Requires (3l+1) | n, f* = 1 and an empty
// block at the given offset.
LawReport check_newbc2_bounds(const CirculantGraph& g, const VertexSet& D, Vertex offset);

// For a solver-minimum porous set with f* = 2 at some offset: the number of
// two-blocks equals the number of empty blocks and every empty block has an
// adjacent two-block. Minimality is recomputed, not trusted.
LawReport check_fk_equals_Z(const CirculantGraph& g, const VertexSet& D,
                            const SolverOptions& options = {});

// Window placement of the members flanking each empty block under f* = 2.
LawReport check_locations(const CirculantGraph& g, const VertexSet& D,
                          const SolverOptions& options = {});

// Sets matching the two-empty/one-triple/rest-single block pattern are never
// porous exponential dominating sets.
LawReport check_f3_nondomination(const CirculantGraph& g, const VertexSet& D);

// Non-porous solver values on C_n for n = 3..16 against the closed form.
LawReport check_cycle_proposition(const SolverOptions& options = {});

}  // namespace expdom
