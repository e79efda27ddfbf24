#include "expdom/solver.hpp"

#include <algorithm>
#include <set>

#include "expdom/dyadic.hpp"

namespace expdom {

VertexSet canonical_representative(const CirculantGraph& g, const VertexSet& D) {
  require_vertices(g, D);
  const int n = g.order();
  std::vector<Vertex> best = D.members();
  std::sort(best.begin(), best.end());
  std::vector<Vertex> image(best.size());
  for (int refl = 0; refl < 2; ++refl) {
    for (int shift = 0; shift < n; ++shift) {
      for (std::size_t k = 0; k < image.size(); ++k) {
        const long long v = refl ? -static_cast<long long>(D.members()[k])
                                 : static_cast<long long>(D.members()[k]);
        image[k] = g.reduce(v + shift);
      }
      std::sort(image.begin(), image.end());
      if (image < best) best = image;
    }
  }
  return VertexSet(std::move(best));
}

DominationVerdict is_classical_dominating(const CirculantGraph& g, const VertexSet& D) {
  require_vertices(g, D);
  if (D.empty()) throw std::invalid_argument("dominating set must be non-empty");
  for (Vertex v = 0; v < g.order(); ++v) {
    bool covered = false;
    for (Vertex d : D) {
      if (hamiltonian_distance(g, d, v) <= g.radius()) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, v, DyadicRational()};
  }
  return {true, -1, DyadicRational()};
}

namespace {

class Search {
 public:
  Search(const CirculantGraph& g, SolveMode mode, const SolverOptions& options)
      : g_(g),
        mode_(mode),
        options_(options),
        porous_sum_(static_cast<std::size_t>(g.order())),
        cover_count_(static_cast<std::size_t>(g.order()), 0) {}

  SolveResult run() {
    SolveResult result;
    result.mode = mode_;
    int k = 1;
    if (options_.seed_theorem_bound && mode_ != SolveMode::classical)
      k = theorem_value(g_.order(), g_.radius());
    for (; k <= g_.order(); ++k) {
      target_ = k;
      found_.clear();
      prefix_.clear();
      push(0);
      descend(1);
      pop(0);
      if (!found_.empty()) {
        result.gamma = k;
        result.witness = found_.front();
        result.explored = explored_;
        if (options_.enumerate_all) result.all_minima = expand_orbits(found_);
        return result;
      }
    }
    throw std::logic_error("the full vertex set always dominates");  // not reachable
  }

 private:
  bool verify(const VertexSet& candidate) const {
    switch (mode_) {
      case SolveMode::porous:
        return is_porous_eds(g_, candidate).dominated;
      case SolveMode::nonporous:
        return is_nonporous_eds(g_, candidate).dominated;
      case SolveMode::classical:
        return is_classical_dominating(g_, candidate).dominated;
    }
    return false;
  }

  void push(Vertex v) {
    if (mode_ == SolveMode::classical) {
      for (Vertex u = 0; u < g_.order(); ++u)
        if (hamiltonian_distance(g_, v, u) <= g_.radius())
          ++cover_count_[static_cast<std::size_t>(u)];
    } else {
      for (Vertex u = 0; u < g_.order(); ++u)
        porous_sum_[static_cast<std::size_t>(u)] += porous_weight(g_, v, u);
    }
    prefix_.push_back(v);
  }

  void pop(Vertex v) {
    prefix_.pop_back();
    if (mode_ == SolveMode::classical) {
      for (Vertex u = 0; u < g_.order(); ++u)
        if (hamiltonian_distance(g_, v, u) <= g_.radius())
          --cover_count_[static_cast<std::size_t>(u)];
    } else {
      for (Vertex u = 0; u < g_.order(); ++u)
        porous_sum_[static_cast<std::size_t>(u)] -= porous_weight(g_, v, u);
    }
  }

  // Smallest Hamiltonian distance from u to any vertex in [lo, n-1].
  int min_dh_to_candidates(Vertex u, Vertex lo) const {
    if (u >= lo) return 0;
    return std::min(lo - u, u + 1);
  }

  // A branch is cut only when some vertex stays short of weight 1 even if
  // every remaining slot contributes its maximum possible weight. The
  // porous optimistic bound also covers the non-porous mode, whose weights
  // are pointwise no larger.
  bool hopeless(Vertex lo, int slots) const {
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (mode_ == SolveMode::classical) {
        if (cover_count_[static_cast<std::size_t>(u)] > 0) continue;
        if (slots == 0 || min_dh_to_candidates(u, lo) > g_.radius()) return true;
        continue;
      }
      const int dmin = (lo < g_.order())
                           ? (min_dh_to_candidates(u, lo) + g_.radius() - 1) / g_.radius()
                           : -1;
      DyadicRational bound = porous_sum_[static_cast<std::size_t>(u)];
      if (dmin >= 0 && slots > 0)
        bound += DyadicRational(slots) * DyadicRational::pow2(1 - dmin);
      if (bound < 1) return true;
    }
    return false;
  }

  void descend(Vertex lo) {
    if (++explored_ > options_.node_budget)
      throw BudgetExceeded(explored_, options_.node_budget);
    const int slots = target_ - static_cast<int>(prefix_.size());
    if (slots == 0) {
      std::vector<Vertex> leaf(prefix_);
      VertexSet candidate(std::move(leaf));
      if (candidate == canonical_representative(g_, candidate) && verify(candidate))
        found_.push_back(std::move(candidate));
      return;
    }
    if (options_.enable_pruning && hopeless(lo, slots)) return;
    for (Vertex v = lo; v <= g_.order() - slots; ++v) {
      push(v);
      descend(v + 1);
      pop(v);
      if (!found_.empty() && !options_.enumerate_all) return;
    }
  }

  std::vector<VertexSet> expand_orbits(const std::vector<VertexSet>& reps) const {
    std::set<VertexSet> expanded;
    for (const VertexSet& rep : reps) {
      for (int refl = 0; refl < 2; ++refl) {
        const VertexSet base = refl ? reflect(g_, rep, 0) : rep;
        for (int shift = 0; shift < g_.order(); ++shift)
          expanded.insert(rotated(g_, base, shift));
      }
    }
    return {expanded.begin(), expanded.end()};
  }

  const CirculantGraph& g_;
  SolveMode mode_;
  SolverOptions options_;
  int target_ = 0;
  std::uint64_t explored_ = 0;
  std::vector<Vertex> prefix_;
  std::vector<DyadicRational> porous_sum_;
  std::vector<int> cover_count_;
  std::vector<VertexSet> found_;
};

}  // namespace

SolveResult min_porous_eds(const CirculantGraph& g, const SolverOptions& options) {
  return Search(g, SolveMode::porous, options).run();
}

SolveResult min_nonporous_eds(const CirculantGraph& g, const SolverOptions& options) {
  return Search(g, SolveMode::nonporous, options).run();
}

SolveResult min_classical_dominating(const CirculantGraph& g, const SolverOptions& options) {
  return Search(g, SolveMode::classical, options).run();
}

int theorem_value(int n, int ell) {
  CirculantGraph g(n, ell);  // validates the parameter domain
  const int period = 3 * ell + 1;
  return (n + period - 1) / period;
}

int cycle_reference_value(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (n == 4) return 2;
  return (n + 3) / 4;
}

}  // namespace expdom
