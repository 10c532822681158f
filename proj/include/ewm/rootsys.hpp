#pragma once

// Root systems of semisimple simply connected groups given as products of
// simple factors of types A-G (Bourbaki labelling per factor, factors
// concatenated in the given order).
//
// Indices of simple roots are 0-based throughout the library.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ewm/intlin.hpp"

namespace ewm {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

struct SimpleFactor {
  Family family;
  int rank;
  bool operator==(const SimpleFactor&) const = default;
};

struct CartanType {
  std::vector<SimpleFactor> factors;

  // "A5", "B3xA1", "E6" ...
  static CartanType parse(const std::string& text);
  std::string to_string() const;
  int rank() const;
  void validate() const;  // throws InvalidType
  bool operator==(const CartanType&) const = default;
};

using IndexSet = std::set<int>;

// Coordinates in the basis of simple roots.
struct RootVec {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;  // all >= 0, some > 0
  RootVec operator+(const RootVec& o) const;
  RootVec operator-(const RootVec& o) const;
  RootVec operator-() const;
  bool operator==(const RootVec&) const = default;
  auto operator<=>(const RootVec&) const = default;
};

// Coordinates in the basis of fundamental weights.
struct WeightVec {
  IntVec coeffs;

  static WeightVec zero(std::size_t n) { return {zero_vec(n)}; }
  static WeightVec fundamental(std::size_t n, int i);
  WeightVec operator+(const WeightVec& o) const;
  WeightVec operator-(const WeightVec& o) const;
  WeightVec operator*(const Int& k) const;
  bool operator==(const WeightVec&) const = default;
};

IndexSet supp(const RootVec& r);     // throws NegativeRootCoordinate on mixed signs
IndexSet wsupp(const WeightVec& w);  // indices of positive coefficients
bool is_dominant(const WeightVec& w);

class RootSystem {
 public:
  explicit RootSystem(CartanType ctype);

  const CartanType& ctype() const { return ctype_; }
  int rank() const { return rank_; }

  // cartan(i, j) = 2 (a_i, a_j) / (a_i, a_i)
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  // (a_i, a_i) / 2, with short roots of each factor of squared length 2.
  int symmetrizer(int i) const { return sym_[i]; }

  const std::vector<RootVec>& positive_roots() const { return pos_roots_; }
  std::optional<std::size_t> positive_index(const RootVec& r) const;
  bool is_positive_root(const RootVec& r) const { return positive_index(r).has_value(); }
  bool is_root(const RootVec& r) const;

  RootVec simple_root(int i) const;

  WeightVec root_to_weight(const RootVec& r) const;
  std::vector<Rational> weight_to_root(const WeightVec& w) const;

  // <r, a_i^vee>
  int pairing(const RootVec& r, int i) const;
  int inner(const RootVec& a, const RootVec& b) const;
  Rational inner(const WeightVec& a, const WeightVec& b) const;

 private:
  void generate_positive_roots();

  CartanType ctype_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<RootVec> pos_roots_;
};

// Number of positive roots of a simple factor by the closed-form formulas.
std::size_t expected_positive_root_count(const SimpleFactor& f);

}  // namespace ewm
