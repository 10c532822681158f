#pragma once

// Strongly solvable spherical subgroups (P = B^-): everything is determined
// by the set of active roots Psi and the restriction map iota.

#include <map>
#include <vector>

#include "ewm/core.hpp"

namespace ewm {

struct SolvableDatum {
  std::shared_ptr<const RootSystem> rs;
  std::vector<RootVec> active_roots;
  CharSpacePtr codomain;
  IntMatrix iota;  // codomain.dim() x rank, column i = iota(w_i)

  // S = T: codomain Z^rank with iota the identity.
  static SolvableDatum with_identity_iota(std::shared_ptr<const RootSystem> rs, std::vector<RootVec> active);
  void validate() const;
};

struct SolvableResult {
  std::vector<int> pi_map;  // pi_map[k] = pi(active_roots[k])
  std::vector<CharVec> phi;
  std::vector<Biweight> generators;
  IndexSet sigma;
};

// Throws NoCandidate / NotUnique when no simple root (or several) satisfies
// the decomposition property.
std::vector<int> pi_map(const SolvableDatum& d);

// Indices into active_roots of F(beta) = {beta} u {gamma in Psi : beta - gamma in Delta+}.
std::vector<std::size_t> f_set(const SolvableDatum& d, std::size_t beta);

// Throws BijectionFailure naming the first beta where pi: F(beta) -> Supp beta is not bijective.
void validate_pi(const SolvableDatum& d, const std::vector<int>& pi);

IndexSet solvable_sigma(const SolvableDatum& d);

SolvableResult solvable_monoid(const SolvableDatum& d);

// The same subgroup as input to the general pipeline (empty Levi, K = S).
GeneralDatum to_general_datum(const SolvableDatum& d);

}  // namespace ewm
