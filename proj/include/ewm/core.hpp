#pragma once

// Extended weight monoid of G/H for a spherical H regularly embedded in a
// parabolic P containing B^-, assembled from three families of generators:
//
//   Xi1  (w_a, -restriction of w_a to H)      for simple roots outside the Levi
//   Xi2  lifts of the generators of the Levi quotient's monoid
//   Xi3  one generator per indecomposable weight mu of the S-module p_u/h_u,
//        (lift(mu), 0) + sum a_{mu,W} W over W in Xi1 u Xi2, with the integer
//        coefficients a fixed by prescribing the w_a-coefficient of lambda at
//        every a in Pi12 (the 0/1 value delta(mu, a)).
//
// Character groups are CharSpaces (free part plus cyclic torsion factors,
// optionally cut down by relations among the named coordinates).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ewm/chevalley.hpp"
#include "ewm/intlin.hpp"
#include "ewm/rootsys.hpp"

namespace ewm {

struct CharSpace {
  int free_rank = 0;
  IntVec moduli;                   // each >= 2
  std::vector<std::string> names;  // optional, one per coordinate
  // Extra relations among the coordinates. Characters keep the representative
  // they were computed with and compare equal modulo these rows.
  std::vector<IntVec> relations;

  std::size_t dim() const { return static_cast<std::size_t>(free_rank) + moduli.size(); }
  // Per-coordinate moduli: 0 for free coordinates.
  IntVec coordinate_moduli() const;
  std::string name(std::size_t i) const;
  void validate() const;
  bool operator==(const CharSpace&) const = default;
};

using CharSpacePtr = std::shared_ptr<const CharSpace>;

class CharVec {
 public:
  CharVec() = default;
  CharVec(CharSpacePtr space, IntVec coords);  // reduces torsion coordinates
  static CharVec zero(CharSpacePtr space);

  const CharSpacePtr& space() const { return space_; }
  const IntVec& coords() const { return coords_; }
  bool is_zero() const { return ewm::is_zero(coords_); }

  CharVec operator+(const CharVec& o) const;
  CharVec operator-(const CharVec& o) const;
  CharVec operator-() const;
  CharVec operator*(const Int& k) const;
  bool operator==(const CharVec& o) const;

 private:
  void check_same_space(const CharVec& o) const;

  CharSpacePtr space_;
  IntVec coords_;
};

enum class Origin { Xi1, Xi2, Xi3 };
std::string_view to_string(Origin o);

struct Biweight {
  WeightVec lambda;
  CharVec chi;
  Origin origin = Origin::Xi1;

  // Origin is bookkeeping; equality compares the pair only.
  bool same_pair(const Biweight& o) const { return lambda == o.lambda && chi == o.chi; }
};

// Weight of the Levi's derived subgroup, keyed by simple-root index of G.
using LeviWeight = std::map<int, Int>;

struct Xi2Input {
  LeviWeight lambda_levi;
  CharVec chi_tilde;
};

struct Xi3Input {
  CharVec mu;                         // in the codomain of iota
  std::optional<WeightVec> mu_lift;   // iota(lift) = mu
};

struct GeneralDatum {
  std::shared_ptr<const RootSystem> rs;
  IndexSet pi_levi;
  CharSpacePtr char_space_k;
  std::map<int, CharVec> omega_bar;  // exactly the simple roots outside pi_levi
  CharSpacePtr codomain;
  IntMatrix iota;  // codomain.dim() x rank, column i = iota(w_i)
  std::vector<Xi2Input> xi2_prime;
  std::vector<Xi3Input> xi3_prime;
  IndexSet sigma_simple;
  bool unique_expected = true;

  int rank() const { return rs->rank(); }
  void validate() const;  // structural checks; throws
};

enum class Severity { Info, Warning, Error };
std::string_view to_string(Severity s);

struct Diagnostic {
  Severity severity = Severity::Info;
  std::string code;
  std::string message;
  std::map<std::string, std::string> data;
  bool operator==(const Diagnostic&) const = default;
};

// Coefficient system for one mu: unknowns a_W indexed like Xi1 u Xi2.
struct Xi3Entry {
  std::size_t mu_index = 0;
  WeightVec lift;
  IntMatrix equations;  // one row per a in Pi12, columns = unknowns
  IntVec rhs;
  IntVec particular;
  std::vector<IntVec> relations;  // homogeneous solutions; empty iff unique
  // Hermite form of [equations | rhs], describing the solution set compactly.
  std::vector<IntVec> echelon;
  std::optional<Biweight> generator;
};

struct Xi3Result {
  std::vector<Xi3Entry> entries;
  bool unique() const;
  std::vector<Biweight> generators() const;
};

enum class NecessaryVerdict { NecessaryPassed, NecessaryFailed };
std::string_view to_string(NecessaryVerdict v);

struct NecessaryReport {
  int alpha = 0;
  bool in_lambda = false;
  std::vector<Int> rho;               // one per mu when in_lambda
  std::optional<std::size_t> unique_mu;
  NecessaryVerdict verdict = NecessaryVerdict::NecessaryFailed;
};

struct MonoidResult {
  std::vector<Biweight> generators;
  std::vector<IntVec> ker_iota;
  std::vector<IntVec> lambda_basis;
  IndexSet pi12;
  std::vector<std::vector<std::optional<Int>>> rho_table;  // [mu][alpha]
  Xi3Result xi3;
  std::vector<NecessaryReport> necessary;
  std::vector<Diagnostic> diagnostics;
  bool nonunique = false;
};

std::vector<Biweight> compute_xi1(const GeneralDatum& d);
WeightVec lift_tau_levi(const GeneralDatum& d, const LeviWeight& lambda_levi);
std::vector<Biweight> compute_xi2(const GeneralDatum& d);

IndexSet pi12(const std::vector<Biweight>& xi12);
std::vector<Biweight> xi12_at(const std::vector<Biweight>& xi12, int alpha);

std::vector<IntVec> ker_iota(const GeneralDatum& d);
std::vector<IntVec> lambda_lattice(const GeneralDatum& d);

// Lift of mu through iota: the supplied one (validated) or a computed one.
WeightVec mu_lift(const GeneralDatum& d, std::size_t mu_index);

// Coefficients of iota(alpha) in the basis of the mu's.
// Throws AlphaNotInLambda, NoExpression.
IntVec rho_values(const GeneralDatum& d, int alpha);
Int rho_value(const GeneralDatum& d, std::size_t mu_index, int alpha);
int delta_coeff(const GeneralDatum& d, std::size_t mu_index, int alpha);

// Solves the coefficient system with the given lifts (defaults to mu_lift).
// Throws NoLift, Inconsistent, UniquenessViolated.
Xi3Result solve_xi3(const GeneralDatum& d, const std::vector<WeightVec>* lifts = nullptr);

NecessaryReport check_necessary(const GeneralDatum& d, int alpha);

MonoidResult compute_monoid(const GeneralDatum& d);

enum class SufficientVerdict { NotSpherical, Spherical, Inconclusive };
std::string_view to_string(SufficientVerdict v);

struct SufficientReport {
  int alpha = 0;
  std::vector<AlgVec> ideal;
  bool ideal_in_h_u = false;
  bool commutes = false;
  SufficientVerdict verdict = SufficientVerdict::Inconclusive;
};

SufficientReport check_sufficient_lie(const ChevalleyAlgebra& alg, int alpha,
                                      const std::vector<AlgVec>& p_u,
                                      const std::vector<AlgVec>& h_u,
                                      const std::vector<AlgVec>& s_prime_gens);

struct LeviKernel {
  IndexSet pi_m;
  std::vector<IntVec> torus_lattice;  // cocharacters killed by every weight, coroot coordinates
};

LeviKernel levi_kernel_helper(const GeneralDatum& d, const std::vector<WeightVec>& lambda_levi_basis);

}  // namespace ewm
