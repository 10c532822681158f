#include "ewm/solvable.hpp"

#include <algorithm>

#include "ewm/error.hpp"

namespace ewm {

namespace {

std::string root_name(const RootVec& r) {
  std::string out;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const int c = r.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c);
    out += "alpha" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

bool contains_root(const std::vector<RootVec>& set, const RootVec& r) {
  return std::find(set.begin(), set.end(), r) != set.end();
}

}  // namespace

SolvableDatum SolvableDatum::with_identity_iota(std::shared_ptr<const RootSystem> rs, std::vector<RootVec> active) {
  SolvableDatum d;
  const auto n = static_cast<std::size_t>(rs->rank());
  auto space = std::make_shared<CharSpace>();
  space->free_rank = rs->rank();
  for (std::size_t i = 0; i < n; ++i) space->names.push_back("ϖ" + std::to_string(i + 1));
  d.rs = std::move(rs);
  d.active_roots = std::move(active);
  d.codomain = std::move(space);
  d.iota = IntMatrix::identity(n);
  return d;
}

void SolvableDatum::validate() const {
  if (!rs || !codomain) throw Error(ErrorCode::InvalidInput, "incomplete solvable datum");
  codomain->validate();
  if (iota.rows() != codomain->dim() || iota.cols() != static_cast<std::size_t>(rs->rank()))
    throw Error(ErrorCode::DimensionMismatch, "iota must be (codomain dim) x (rank)");
  for (std::size_t k = 0; k < active_roots.size(); ++k) {
    if (!rs->is_positive_root(active_roots[k]))
      throw Error(ErrorCode::InvalidInput, "active root " + root_name(active_roots[k]) + " is not a positive root");
    for (std::size_t j = 0; j < k; ++j)
      if (active_roots[j] == active_roots[k])
        throw Error(ErrorCode::InvalidInput, "active root " + root_name(active_roots[k]) + " listed twice");
  }
}

std::vector<int> pi_map(const SolvableDatum& d) {
  d.validate();
  std::vector<int> out;
  for (const auto& alpha : d.active_roots) {
    // decompositions alpha = beta + gamma into positive roots
    std::vector<std::pair<RootVec, RootVec>> splits;
    for (const auto& beta : d.rs->positive_roots()) {
      const RootVec gamma = alpha - beta;
      if (d.rs->is_positive_root(gamma)) splits.emplace_back(beta, gamma);
    }
    std::vector<int> candidates;
    for (int delta : supp(alpha)) {
      const bool ok = std::all_of(splits.begin(), splits.end(), [&](const auto& s) {
        const bool beta_ok = contains_root(d.active_roots, s.first) == !supp(s.first).count(delta);
        const bool gamma_ok = contains_root(d.active_roots, s.second) == !supp(s.second).count(delta);
        return beta_ok && gamma_ok;
      });
      if (ok) candidates.push_back(delta);
    }
    if (candidates.empty())
      throw Error(ErrorCode::NoCandidate, "no simple root qualifies as pi(" + root_name(alpha) + ")");
    if (candidates.size() > 1)
      throw Error(ErrorCode::NotUnique, "several simple roots qualify as pi(" + root_name(alpha) + ")");
    out.push_back(candidates.front());
  }
  return out;
}

std::vector<std::size_t> f_set(const SolvableDatum& d, std::size_t beta) {
  const RootVec& b = d.active_roots.at(beta);
  std::vector<std::size_t> out{beta};
  for (std::size_t k = 0; k < d.active_roots.size(); ++k)
    if (k != beta && d.rs->is_positive_root(b - d.active_roots[k])) out.push_back(k);
  return out;
}

void validate_pi(const SolvableDatum& d, const std::vector<int>& pi) {
  for (std::size_t k = 0; k < d.active_roots.size(); ++k) {
    const IndexSet s = supp(d.active_roots[k]);
    if (!s.count(pi.at(k)))
      throw Error(ErrorCode::BijectionFailure, "pi(" + root_name(d.active_roots[k]) + ") is outside its support");
    IndexSet image;
    const auto f = f_set(d, k);
    for (std::size_t g : f) image.insert(pi[g]);
    if (image.size() != f.size() || image != s)
      throw Error(ErrorCode::BijectionFailure,
                  "pi restricted to F(" + root_name(d.active_roots[k]) + ") is not a bijection onto its support");
  }
}

IndexSet solvable_sigma(const SolvableDatum& d) {
  IndexSet out;
  for (const auto& r : d.active_roots) {
    const IndexSet s = supp(r);
    out.insert(s.begin(), s.end());
  }
  return out;
}

SolvableResult solvable_monoid(const SolvableDatum& d) {
  SolvableResult res;
  res.pi_map = pi_map(d);
  validate_pi(d, res.pi_map);
  res.sigma = solvable_sigma(d);

  const int n = d.rs->rank();
  auto restrict = [&](const WeightVec& w) { return CharVec(d.codomain, d.iota.apply(w.coeffs)); };

  // fibres of iota over Psi, first-occurrence order
  std::vector<IndexSet> fibre_images;
  for (std::size_t k = 0; k < d.active_roots.size(); ++k) {
    const CharVec phi = restrict(d.rs->root_to_weight(d.active_roots[k]));
    auto it = std::find(res.phi.begin(), res.phi.end(), phi);
    if (it == res.phi.end()) {
      res.phi.push_back(phi);
      fibre_images.emplace_back();
      it = res.phi.end() - 1;
    }
    fibre_images[static_cast<std::size_t>(it - res.phi.begin())].insert(res.pi_map[k]);
  }

  for (int a = 0; a < n; ++a) {
    const WeightVec w = WeightVec::fundamental(n, a);
    res.generators.push_back({w, -restrict(w), Origin::Xi1});
  }
  for (std::size_t f = 0; f < res.phi.size(); ++f) {
    WeightVec lambda = WeightVec::zero(n);
    for (int a : fibre_images[f]) lambda.coeffs[a] += 1;
    res.generators.push_back({lambda, res.phi[f] - restrict(lambda), Origin::Xi3});
  }
  return res;
}

GeneralDatum to_general_datum(const SolvableDatum& d) {
  d.validate();
  GeneralDatum g;
  g.rs = d.rs;
  g.char_space_k = d.codomain;
  g.codomain = d.codomain;
  g.iota = d.iota;
  const int n = d.rs->rank();
  for (int a = 0; a < n; ++a)
    g.omega_bar.emplace(a, CharVec(d.codomain, d.iota.apply(WeightVec::fundamental(n, a).coeffs)));
  std::vector<CharVec> seen;
  for (const auto& r : d.active_roots) {
    const WeightVec w = d.rs->root_to_weight(r);
    CharVec phi(d.codomain, d.iota.apply(w.coeffs));
    if (std::find(seen.begin(), seen.end(), phi) != seen.end()) continue;
    seen.push_back(phi);
    g.xi3_prime.push_back({phi, w});
  }
  g.sigma_simple = solvable_sigma(d);
  g.unique_expected = true;
  return g;
}

}  // namespace ewm
