#pragma once

// Exact integer linear algebra: Smith normal form and everything built on it
// (kernels and solutions of congruence systems, sublattice membership).
//
// Systems are described by an integer matrix A together with one modulus per
// row. A modulus of 0 makes the row an exact equation; a modulus m >= 2 makes
// it a congruence mod m. Vectors living in a group with torsion use the same
// convention per coordinate.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ewm {

using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;

IntVec zero_vec(std::size_t n);
bool is_zero(std::span<const Int> v);
std::string to_string(std::span<const Int> v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  IntMatrix transposed() const;

  IntVec apply(std::span<const Int> x) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_diagonal() const;

  // Elementary operations; these are all unimodular.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal, d_1 | d_2 | ..., d_i >= 0
  IntMatrix v;  // cols x cols, unimodular
  std::size_t rank = 0;
};

// D = U * A * V.
SmithForm smith_normal_form(const IntMatrix& a);

// Canonical row basis of the lattice spanned by `generators` (row-style
// Hermite normal form: positive pivots, entries above a pivot reduced into
// [0, pivot)). Zero rows are dropped.
std::vector<IntVec> hermite_basis(const std::vector<IntVec>& generators, std::size_t dim);

// Same, with the lattice taken modulo the torsion coordinates: each nonzero
// modulus m_i contributes m_i * e_i before reduction, and the returned rows
// are the ones not made redundant by those torsion generators.
std::vector<IntVec> hermite_basis_mod(const std::vector<IntVec>& generators,
                                      std::span<const Int> moduli);

// Basis of {x : (Ax)_i = 0 where moduli[i] = 0, (Ax)_i = 0 mod moduli[i] otherwise},
// returned in Hermite form.
std::vector<IntVec> kernel_with_moduli(const IntMatrix& a, std::span<const Int> moduli);

struct CongruenceSolution {
  IntVec particular;
  std::vector<IntVec> homogeneous;
};

// All integer x with Ax = b under the row moduli; nullopt when inconsistent.
std::optional<CongruenceSolution> solve_with_moduli(const IntMatrix& a,
                                                    std::span<const Int> moduli,
                                                    std::span<const Int> b);

// v is an integer combination of `basis` modulo the per-coordinate torsion.
bool in_sublattice(std::span<const Int> v, const std::vector<IntVec>& basis,
                   std::span<const Int> moduli);

bool lattice_equal(const std::vector<IntVec>& lhs, const std::vector<IntVec>& rhs,
                   std::span<const Int> moduli);

// Reduces torsion coordinates into [0, m).
void reduce_mod(IntVec& v, std::span<const Int> moduli);

}  // namespace ewm
