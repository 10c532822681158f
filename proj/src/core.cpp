#include "ewm/core.hpp"

#include <algorithm>
#include <sstream>

#include "ewm/error.hpp"

namespace ewm {

IntVec CharSpace::coordinate_moduli() const {
  IntVec m = zero_vec(static_cast<std::size_t>(free_rank));
  m.insert(m.end(), moduli.begin(), moduli.end());
  return m;
}

std::string CharSpace::name(std::size_t i) const {
  if (i < names.size()) return names[i];
  return "x" + std::to_string(i + 1);
}

void CharSpace::validate() const {
  if (free_rank < 0) throw Error(ErrorCode::InvalidInput, "negative free rank");
  for (const auto& m : moduli)
    if (m < 2) throw Error(ErrorCode::InvalidInput, "torsion modulus must be >= 2");
  if (!names.empty() && names.size() != dim())
    throw Error(ErrorCode::InvalidInput, "character space needs one name per coordinate");
  for (const auto& r : relations)
    if (r.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "relation has the wrong length");
}

CharVec::CharVec(CharSpacePtr space, IntVec coords) : space_(std::move(space)), coords_(std::move(coords)) {
  if (!space_) throw Error(ErrorCode::InvalidInput, "character without a space");
  if (coords_.size() != space_->dim())
    throw Error(ErrorCode::DimensionMismatch, "character has " + std::to_string(coords_.size()) +
                                                  " coordinates, space has " + std::to_string(space_->dim()));
  reduce_mod(coords_, space_->coordinate_moduli());
}

CharVec CharVec::zero(CharSpacePtr space) {
  const std::size_t n = space->dim();
  return CharVec(std::move(space), zero_vec(n));
}

void CharVec::check_same_space(const CharVec& o) const {
  if (space_ != o.space_ && !(space_ && o.space_ && *space_ == *o.space_))
    throw Error(ErrorCode::DimensionMismatch, "characters from different spaces");
}

CharVec CharVec::operator+(const CharVec& o) const {
  check_same_space(o);
  IntVec c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return CharVec(space_, std::move(c));
}

CharVec CharVec::operator-(const CharVec& o) const { return *this + (-o); }

CharVec CharVec::operator-() const { return *this * Int(-1); }

CharVec CharVec::operator*(const Int& k) const {
  IntVec c = coords_;
  for (auto& x : c) x *= k;
  return CharVec(space_, std::move(c));
}

bool CharVec::operator==(const CharVec& o) const {
  if (space_ != o.space_ && !(space_ && o.space_ && *space_ == *o.space_)) return false;
  if (coords_ == o.coords_) return true;
  if (!space_ || space_->relations.empty()) return false;
  IntVec diff = coords_;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= o.coords_[i];
  return in_sublattice(diff, space_->relations, space_->coordinate_moduli());
}

std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::Xi1: return "Xi1";
    case Origin::Xi2: return "Xi2";
    case Origin::Xi3: return "Xi3";
  }
  return "?";
}

std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "?";
}

std::string_view to_string(NecessaryVerdict v) {
  return v == NecessaryVerdict::NecessaryPassed ? "NecessaryPassed" : "NecessaryFailed";
}

std::string_view to_string(SufficientVerdict v) {
  switch (v) {
    case SufficientVerdict::NotSpherical: return "NotSpherical";
    case SufficientVerdict::Spherical: return "Spherical";
    case SufficientVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::string alpha_name(int i) { return "alpha" + std::to_string(i + 1); }

void check_index(const GeneralDatum& d, int i, const char* what) {
  if (i < 0 || i >= d.rank())
    throw Error(ErrorCode::InvalidInput, std::string(what) + " index " + std::to_string(i + 1) + " out of range");
}

void check_space(const CharVec& v, const CharSpacePtr& s, const std::string& what) {
  if (!v.space() || !(*v.space() == *s))
    throw Error(ErrorCode::DimensionMismatch, what + " is not in the expected character space");
}

WeightVec simple_root_weight(const GeneralDatum& d, int alpha) {
  return d.rs->root_to_weight(d.rs->simple_root(alpha));
}

IntMatrix mu_matrix(const GeneralDatum& d) {
  std::vector<IntVec> cols;
  for (const auto& x : d.xi3_prime) cols.push_back(x.mu.coords());
  return IntMatrix::from_columns(cols, d.codomain->dim());
}

bool congruent(IntVec a, IntVec b, const IntVec& moduli) {
  reduce_mod(a, moduli);
  reduce_mod(b, moduli);
  return a == b;
}

std::vector<Biweight> xi12_of(const GeneralDatum& d) {
  auto xi = compute_xi1(d);
  auto xi2 = compute_xi2(d);
  xi.insert(xi.end(), xi2.begin(), xi2.end());
  return xi;
}

}  // namespace

void GeneralDatum::validate() const {
  if (!rs) throw Error(ErrorCode::InvalidInput, "missing root system");
  if (!char_space_k || !codomain) throw Error(ErrorCode::InvalidInput, "missing character space");
  char_space_k->validate();
  codomain->validate();
  for (int i : pi_levi) check_index(*this, i, "Levi simple root");
  for (int i : sigma_simple) check_index(*this, i, "spherical simple root");
  for (const auto& [i, v] : omega_bar) {
    check_index(*this, i, "omega_bar");
    check_space(v, char_space_k, "omega_bar for " + alpha_name(i));
  }
  if (iota.rows() != codomain->dim() || iota.cols() != static_cast<std::size_t>(rank()))
    throw Error(ErrorCode::DimensionMismatch, "iota must be (codomain dim) x (rank)");
  for (const auto& x : xi2_prime) check_space(x.chi_tilde, char_space_k, "Xi2' character");
  for (const auto& x : xi3_prime) {
    check_space(x.mu, codomain, "Xi3' weight");
    if (x.mu_lift && x.mu_lift->coeffs.size() != static_cast<std::size_t>(rank()))
      throw Error(ErrorCode::DimensionMismatch, "mu lift of wrong length");
  }
}

std::vector<Biweight> compute_xi1(const GeneralDatum& d) {
  for (const auto& [i, v] : d.omega_bar)
    if (d.pi_levi.count(i))
      throw Error(ErrorCode::InvalidInput, "omega_bar given for Levi simple root " + alpha_name(i));
  std::vector<Biweight> out;
  for (int i = 0; i < d.rank(); ++i) {
    if (d.pi_levi.count(i)) continue;
    auto it = d.omega_bar.find(i);
    if (it == d.omega_bar.end())
      throw Error(ErrorCode::MissingOmegaBar, "no restriction of w" + std::to_string(i + 1) + " given");
    out.push_back({WeightVec::fundamental(d.rank(), i), -it->second, Origin::Xi1});
  }
  return out;
}

WeightVec lift_tau_levi(const GeneralDatum& d, const LeviWeight& lambda_levi) {
  WeightVec w = WeightVec::zero(d.rank());
  for (const auto& [i, c] : lambda_levi) {
    if (!d.pi_levi.count(i))
      throw Error(ErrorCode::SupportOutsidePiL, "Levi weight uses w" + std::to_string(i + 1) + " outside Pi_L");
    w.coeffs[i] = c;
  }
  return w;
}

std::vector<Biweight> compute_xi2(const GeneralDatum& d) {
  std::vector<Biweight> out;
  for (const auto& x : d.xi2_prime) {
    WeightVec lambda = lift_tau_levi(d, x.lambda_levi);
    if (!is_dominant(lambda)) throw Error(ErrorCode::InvalidInput, "Xi2' weight is not dominant");
    for (int i : wsupp(lambda))
      if (!d.pi_levi.count(i))
        throw Error(ErrorCode::SupportClash, "Xi2 support meets " + alpha_name(i) + " outside Pi_L");
    out.push_back({std::move(lambda), x.chi_tilde, Origin::Xi2});
  }
  return out;
}

IndexSet pi12(const std::vector<Biweight>& xi12) {
  IndexSet s;
  for (const auto& b : xi12) {
    const auto w = wsupp(b.lambda);
    s.insert(w.begin(), w.end());
  }
  return s;
}

std::vector<Biweight> xi12_at(const std::vector<Biweight>& xi12, int alpha) {
  std::vector<Biweight> out;
  for (const auto& b : xi12)
    if (wsupp(b.lambda).count(alpha)) out.push_back(b);
  return out;
}

std::vector<IntVec> ker_iota(const GeneralDatum& d) {
  return kernel_with_moduli(d.iota, d.codomain->coordinate_moduli());
}

std::vector<IntVec> lambda_lattice(const GeneralDatum& d) {
  if (d.xi3_prime.empty()) return ker_iota(d);
  // x with iota(x) in Z{mu}: kernel of [iota | -M], projected to x
  const std::size_t n = static_cast<std::size_t>(d.rank());
  const std::size_t m = d.xi3_prime.size();
  const IntMatrix mus = mu_matrix(d);
  IntMatrix a(d.codomain->dim(), n + m);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = d.iota(r, c);
    for (std::size_t c = 0; c < m; ++c) a(r, n + c) = -mus(r, c);
  }
  std::vector<IntVec> gens;
  for (const auto& k : kernel_with_moduli(a, d.codomain->coordinate_moduli()))
    gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
  return hermite_basis(gens, n);
}

WeightVec mu_lift(const GeneralDatum& d, std::size_t mu_index) {
  const auto& x = d.xi3_prime.at(mu_index);
  const IntVec moduli = d.codomain->coordinate_moduli();
  if (x.mu_lift) {
    if (!congruent(d.iota.apply(x.mu_lift->coeffs), x.mu.coords(), moduli))
      throw Error(ErrorCode::NoLift, "supplied lift of mu" + std::to_string(mu_index + 1) + " does not restrict to mu");
    return *x.mu_lift;
  }
  auto sol = solve_with_moduli(d.iota, moduli, x.mu.coords());
  if (!sol) throw Error(ErrorCode::NoLift, "mu" + std::to_string(mu_index + 1) + " is not in the image of iota");
  return {sol->particular};
}

IntVec rho_values(const GeneralDatum& d, int alpha) {
  const IntVec target = d.iota.apply(simple_root_weight(d, alpha).coeffs);
  auto sol = solve_with_moduli(mu_matrix(d), d.codomain->coordinate_moduli(), target);
  if (!sol) throw Error(ErrorCode::AlphaNotInLambda, alpha_name(alpha) + " is not in the weight lattice");
  if (!sol->homogeneous.empty())
    throw Error(ErrorCode::NoExpression, "the weights mu are not linearly independent");
  return sol->particular;
}

Int rho_value(const GeneralDatum& d, std::size_t mu_index, int alpha) {
  return rho_values(d, alpha).at(mu_index);
}

int delta_coeff(const GeneralDatum& d, std::size_t mu_index, int alpha) {
  if (!d.sigma_simple.count(alpha)) return 0;
  const auto xi12 = xi12_of(d);
  if (xi12_at(xi12, alpha).size() != 1) return 0;
  return rho_value(d, mu_index, alpha) == 1 ? 1 : 0;
}

bool Xi3Result::unique() const {
  return std::all_of(entries.begin(), entries.end(), [](const Xi3Entry& e) { return e.relations.empty(); });
}

std::vector<Biweight> Xi3Result::generators() const {
  std::vector<Biweight> out;
  for (const auto& e : entries)
    if (e.generator) out.push_back(*e.generator);
  return out;
}

Xi3Result solve_xi3(const GeneralDatum& d, const std::vector<WeightVec>* lifts) {
  const auto xi12 = xi12_of(d);
  const IndexSet p12 = pi12(xi12);
  const std::vector<int> rows(p12.begin(), p12.end());

  // delta(mu, a) needs rho only where a is spherical with a single Xi12 element
  std::map<int, IntVec> rho;
  for (int a : rows)
    if (d.sigma_simple.count(a) && xi12_at(xi12, a).size() == 1) rho.emplace(a, rho_values(d, a));

  IntMatrix eq(rows.size(), xi12.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < xi12.size(); ++c) eq(r, c) = xi12[c].lambda.coeffs[rows[r]];

  Xi3Result result;
  for (std::size_t j = 0; j < d.xi3_prime.size(); ++j) {
    Xi3Entry entry;
    entry.mu_index = j;
    entry.lift = lifts ? lifts->at(j) : mu_lift(d, j);
    entry.equations = eq;
    entry.rhs = zero_vec(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = rho.find(rows[r]);
      const int delta = (it != rho.end() && it->second[j] == 1) ? 1 : 0;
      entry.rhs[r] = delta - entry.lift.coeffs[rows[r]];
    }
    std::vector<IntVec> augmented;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      IntVec row = eq.row(r);
      row.push_back(entry.rhs[r]);
      augmented.push_back(std::move(row));
    }
    entry.echelon = hermite_basis(augmented, xi12.size() + 1);

    auto sol = solve_with_moduli(eq, zero_vec(rows.size()), entry.rhs);
    if (!sol)
      throw Error(ErrorCode::Inconsistent,
                  "no integer coefficients for mu" + std::to_string(j + 1) + "; the input is inconsistent");
    entry.particular = sol->particular;
    entry.relations = sol->homogeneous;
    if (!entry.relations.empty()) {
      if (d.unique_expected)
        throw Error(ErrorCode::UniquenessViolated,
                    "coefficients for mu" + std::to_string(j + 1) + " are not unique although uniqueness was expected");
      result.entries.push_back(std::move(entry));
      continue;
    }

    WeightVec lambda = entry.lift;
    CharVec chi = CharVec::zero(d.char_space_k);
    for (std::size_t c = 0; c < xi12.size(); ++c) {
      lambda = lambda + xi12[c].lambda * entry.particular[c];
      chi = chi + xi12[c].chi * entry.particular[c];
    }
    if (!is_dominant(lambda))
      throw Error(ErrorCode::Inconsistent, "Xi3 weight for mu" + std::to_string(j + 1) + " is not dominant");
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (lambda.coeffs[rows[r]] != entry.rhs[r] + entry.lift.coeffs[rows[r]])
        throw Error(ErrorCode::Inconsistent, "Xi3 weight violates its prescribed coefficients");
    entry.generator = Biweight{std::move(lambda), std::move(chi), Origin::Xi3};
    result.entries.push_back(std::move(entry));
  }
  return result;
}

NecessaryReport check_necessary(const GeneralDatum& d, int alpha) {
  NecessaryReport rep;
  rep.alpha = alpha;
  try {
    const IntVec rho = rho_values(d, alpha);
    rep.in_lambda = true;
    rep.rho = rho;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::AlphaNotInLambda) throw;
    return rep;
  }
  std::size_t ones = 0;
  bool others_nonpositive = true;
  for (std::size_t j = 0; j < rep.rho.size(); ++j) {
    if (rep.rho[j] == 1) {
      ++ones;
      rep.unique_mu = j;
    } else if (rep.rho[j] > 0) {
      others_nonpositive = false;
    }
  }
  if (ones != 1) rep.unique_mu.reset();
  if (ones == 1 && others_nonpositive) rep.verdict = NecessaryVerdict::NecessaryPassed;
  return rep;
}

namespace {

bool same_generators(const std::vector<Biweight>& a, const std::vector<Biweight>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].same_pair(b[i])) return false;
  return true;
}

}  // namespace

MonoidResult compute_monoid(const GeneralDatum& d) {
  d.validate();
  MonoidResult res;
  auto xi1 = compute_xi1(d);
  auto xi2 = compute_xi2(d);
  for (const auto& a : xi1)
    for (const auto& b : xi2)
      for (int i : wsupp(a.lambda))
        if (wsupp(b.lambda).count(i))
          throw Error(ErrorCode::SupportClash, "Xi1 and Xi2 supports meet at " + alpha_name(i));
  std::vector<Biweight> xi12 = xi1;
  xi12.insert(xi12.end(), xi2.begin(), xi2.end());

  res.ker_iota = ker_iota(d);
  res.lambda_basis = lambda_lattice(d);
  res.pi12 = pi12(xi12);

  if (!d.xi3_prime.empty()) {
    const IntVec moduli = d.codomain->coordinate_moduli();
    if (!kernel_with_moduli(mu_matrix(d), moduli).empty())
      throw Error(ErrorCode::NoExpression, "the weights mu are not linearly independent");
  }

  for (int a : d.sigma_simple) {
    if (!res.pi12.count(a)) {
      res.diagnostics.push_back({Severity::Warning, "SIGMA_OUTSIDE_PI12",
                                 alpha_name(a) + " is listed as spherical but lies outside Pi12; ignored",
                                 {{"alpha", std::to_string(a + 1)}}});
    } else if (xi12_at(xi12, a).size() != 1) {
      res.diagnostics.push_back({Severity::Info, "SIGMA_SHARED_COLOR",
                                 alpha_name(a) + " meets several Xi12 elements; its delta coefficients are 0",
                                 {{"alpha", std::to_string(a + 1)}}});
    }
  }

  for (int a : res.pi12) {
    if (xi12_at(xi12, a).size() != 1) continue;
    NecessaryReport rep = check_necessary(d, a);
    const bool in_sigma = d.sigma_simple.count(a) > 0;
    if (rep.verdict == NecessaryVerdict::NecessaryFailed && in_sigma)
      throw Error(ErrorCode::Inconsistent,
                  alpha_name(a) + " is listed as spherical but fails the necessary conditions");
    if (rep.verdict == NecessaryVerdict::NecessaryPassed && !in_sigma)
      res.diagnostics.push_back({Severity::Info, "NECESSARY_PASSED_NOT_IN_SIGMA",
                                 alpha_name(a) + " satisfies the necessary conditions but is not listed as spherical",
                                 {{"alpha", std::to_string(a + 1)}}});
    res.necessary.push_back(std::move(rep));
  }

  if (d.xi3_prime.empty()) {
    res.generators = xi12;
    res.diagnostics.push_back({Severity::Info, "PARABOLIC_INDUCTION",
                               "no Xi3' input: the monoid is generated by Xi1 and Xi2", {}});
  } else {
    res.rho_table.assign(d.xi3_prime.size(), std::vector<std::optional<Int>>(d.rank()));
    for (int a = 0; a < d.rank(); ++a) {
      try {
        const IntVec rho = rho_values(d, a);
        for (std::size_t j = 0; j < rho.size(); ++j) res.rho_table[j][a] = rho[j];
      } catch (const Error& e) {
        if (e.code() != ErrorCode::AlphaNotInLambda) throw;
      }
    }

    res.xi3 = solve_xi3(d);
    res.generators = xi12;
    const auto xi3 = res.xi3.generators();
    res.generators.insert(res.generators.end(), xi3.begin(), xi3.end());

    if (!res.xi3.unique()) {
      res.nonunique = true;
      res.diagnostics.push_back({Severity::Warning, "NONUNIQUE",
                                 "the coefficient system does not determine every Xi3 generator", {}});
    } else {
      // The result may not depend on the chosen lifts.
      std::vector<WeightVec> lifts;
      for (const auto& e : res.xi3.entries) lifts.push_back(e.lift);
      for (const auto& k : res.ker_iota) {
        std::vector<WeightVec> shifted = lifts;
        for (auto& l : shifted) l = l + WeightVec{k};
        if (!same_generators(solve_xi3(d, &shifted).generators(), xi3))
          throw Error(ErrorCode::Inconsistent, "Xi3 depends on the choice of lifts (shift by " + to_string(k) + ")");
      }
    }
  }

  const std::size_t expected = static_cast<std::size_t>(d.rank()) - d.pi_levi.size() + d.xi2_prime.size() +
                               (res.nonunique ? res.xi3.generators().size() : d.xi3_prime.size());
  if (res.generators.size() != expected)
    throw Error(ErrorCode::Inconsistent, "rank identity violated");
  for (const auto& g : res.generators)
    if (!is_dominant(g.lambda)) throw Error(ErrorCode::Inconsistent, "non-dominant generator");
  return res;
}

SufficientReport check_sufficient_lie(const ChevalleyAlgebra& alg, int alpha,
                                      const std::vector<AlgVec>& p_u,
                                      const std::vector<AlgVec>& h_u,
                                      const std::vector<AlgVec>& s_prime_gens) {
  SufficientReport rep;
  rep.alpha = alpha;
  const AlgVec gen = alg.e(-alg.root_system().simple_root(alpha));
  rep.ideal = ideal_closure(alg, {gen}, p_u);
  rep.ideal_in_h_u = is_contained(alg, rep.ideal, h_u);
  rep.commutes = commutes_with_all(alg, gen, s_prime_gens);
  if (rep.ideal_in_h_u)
    rep.verdict = SufficientVerdict::NotSpherical;
  else if (rep.commutes)
    rep.verdict = SufficientVerdict::Spherical;
  else
    rep.verdict = SufficientVerdict::Inconclusive;
  return rep;
}

LeviKernel levi_kernel_helper(const GeneralDatum& d, const std::vector<WeightVec>& lambda_levi_basis) {
  LeviKernel out;
  for (int a : d.pi_levi) {
    const WeightVec alpha = simple_root_weight(d, a);
    const bool orthogonal = std::all_of(lambda_levi_basis.begin(), lambda_levi_basis.end(),
                                        [&](const WeightVec& l) { return d.rs->inner(alpha, l) == 0; });
    if (orthogonal) out.pi_m.insert(a);
  }
  std::vector<IntVec> rows;
  for (const auto& l : lambda_levi_basis) rows.push_back(l.coeffs);
  const IntMatrix m = IntMatrix::from_rows(rows, static_cast<std::size_t>(d.rank()));
  out.torus_lattice = kernel_with_moduli(m, zero_vec(m.rows()));
  return out;
}

}  // namespace ewm
