#pragma once

// Chevalley basis of the Lie algebra of a root system: structure constants,
// brackets, and the subspace computations used by the sphericity tests
// (ideal closure in a nilradical, containment, commutation).
//
// Basis layout for N positive roots and rank n:
//   0 .. N-1      e_b for the positive roots b (in RootSystem order)
//   N .. 2N-1     e_{-b}
//   2N .. 2N+n-1  h_i = coroot of the i-th simple root
//
// Sign convention: N_{a,b} = p+1 > 0 for every extraspecial pair (a, b),
// a the smallest positive root (in RootSystem order) among the special pairs
// with sum a+b. All other constants follow from the standard identities.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ewm/intlin.hpp"
#include "ewm/rootsys.hpp"

namespace ewm {

class AlgVec {
 public:
  AlgVec() = default;
  static AlgVec basis(std::size_t index, Rational coeff = 1);

  const std::map<std::size_t, Rational>& terms() const { return terms_; }
  Rational coeff(std::size_t index) const;
  bool is_zero() const { return terms_.empty(); }

  void add(std::size_t index, const Rational& c);
  AlgVec& operator+=(const AlgVec& o);
  AlgVec operator+(const AlgVec& o) const;
  AlgVec operator-(const AlgVec& o) const;
  AlgVec operator*(const Rational& c) const;
  bool operator==(const AlgVec&) const = default;

 private:
  std::map<std::size_t, Rational> terms_;
};

class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  std::size_t num_positive() const { return npos_; }
  std::size_t dimension() const { return 2 * npos_ + static_cast<std::size_t>(rs_.rank()); }

  // Signed root indices: k < N is a positive root, k >= N its negative.
  std::size_t num_roots() const { return 2 * npos_; }
  RootVec root(std::size_t k) const;
  std::optional<std::size_t> root_index(const RootVec& r) const;

  std::size_t e_index(const RootVec& r) const;  // throws for non-roots
  std::size_t h_index(int i) const { return 2 * npos_ + static_cast<std::size_t>(i); }
  AlgVec e(const RootVec& r) const { return AlgVec::basis(e_index(r)); }
  AlgVec h(int i) const { return AlgVec::basis(h_index(i)); }

  // N_{a,b} for signed root indices; 0 when a+b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return table_[a * num_roots() + b]; }

  // Coroot of a root in the h_i basis.
  std::vector<int> coroot(const RootVec& r) const;

  AlgVec bracket_basis(std::size_t x, std::size_t y) const;
  AlgVec bracket(const AlgVec& x, const AlgVec& y) const;

 private:
  int derived_constant(std::size_t a, std::size_t b) const;
  int string_length_below(std::size_t a, std::size_t b) const;  // p for the pair (a, b)

  RootSystem rs_;
  std::size_t npos_ = 0;
  std::vector<std::optional<std::size_t>> sum_;  // sum_[a*2N+b]
  std::vector<int> table_;
};

// Exact subspace of the algebra kept in reduced row echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return rows_.size(); }
  bool contains(const AlgVec& v) const;
  bool insert(const AlgVec& v);  // false when already contained
  std::vector<AlgVec> basis() const;

 private:
  std::vector<Rational> reduce(const AlgVec& v) const;

  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace span_of(const ChevalleyAlgebra& alg, const std::vector<AlgVec>& vectors);

// Smallest subspace containing `generators` and stable under ad of every
// ambient vector. Throws GeneratorsOutsideAmbient.
std::vector<AlgVec> ideal_closure(const ChevalleyAlgebra& alg, const std::vector<AlgVec>& generators,
                                  const std::vector<AlgVec>& ambient);

bool is_contained(const ChevalleyAlgebra& alg, const std::vector<AlgVec>& sub,
                  const std::vector<AlgVec>& space);

bool commutes_with_all(const ChevalleyAlgebra& alg, const AlgVec& x, const std::vector<AlgVec>& gens);

// e_{-b} for all positive b whose support leaves `levi` (the nilradical of
// the parabolic containing B^- with Levi simple roots `levi`).
std::vector<AlgVec> negative_nilradical(const ChevalleyAlgebra& alg, const IndexSet& levi);

}  // namespace ewm
