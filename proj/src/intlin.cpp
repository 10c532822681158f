#include "ewm/intlin.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "ewm/error.hpp"

namespace ewm {

IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

bool is_zero(std::span<const Int> v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t rows) {
  if (!columns.empty()) rows = columns.front().size();
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVec IntMatrix::apply(std::span<const Int> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  IntVec y = zero_vec(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  return y;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Quotient rounded toward negative infinity.
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Position of the nonzero entry of smallest magnitude in the trailing block; row m.rows() if none.
std::pair<std::size_t, std::size_t> smallest_entry(const IntMatrix& m, std::size_t t) {
  std::pair<std::size_t, std::size_t> best{m.rows(), m.cols()};
  Int best_abs;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      const Int& x = m(r, c);
      if (x == 0) continue;
      Int ax = abs(x);
      if (best.first == m.rows() || ax < best_abs) {
        best = {r, c};
        best_abs = ax;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm sf{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = sf.d;
  const std::size_t limit = std::min(a.rows(), a.cols());

  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pivot = smallest_entry(d, t);
    if (pivot.first == d.rows()) break;
    for (;;) {
      d.swap_rows(t, pivot.first);
      sf.u.swap_rows(t, pivot.first);
      d.swap_cols(t, pivot.second);
      sf.v.swap_cols(t, pivot.second);

      bool cleared = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t) == 0) continue;
        Int q = floor_div(d(r, t), d(t, t));
        d.add_row_multiple(r, t, -q);
        sf.u.add_row_multiple(r, t, -q);
        if (d(r, t) != 0) cleared = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c) == 0) continue;
        Int q = floor_div(d(t, c), d(t, t));
        d.add_col_multiple(c, t, -q);
        sf.v.add_col_multiple(c, t, -q);
        if (d(t, c) != 0) cleared = false;
      }
      if (!cleared) {
        pivot = smallest_entry(d, t);
        continue;
      }

      // Divisibility: fold an offending row into the pivot row and repeat.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < d.rows() && !offending; ++r)
        for (std::size_t c = t + 1; c < d.cols(); ++c)
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = r;
            break;
          }
      if (!offending) break;
      d.add_row_multiple(t, *offending, Int(1));
      sf.u.add_row_multiple(t, *offending, Int(1));
      pivot = std::pair{t, t};
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      sf.u.negate_row(t);
    }
  }
  sf.rank = t;
  return sf;
}

std::vector<IntVec> hermite_basis(const std::vector<IntVec>& generators, std::size_t dim) {
  std::vector<IntVec> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorCode::DimensionMismatch, "generator of wrong length");
    if (!is_zero(g)) rows.push_back(g);
  }
  auto add_multiple = [&](std::size_t target, std::size_t source, const Int& f) {
    for (std::size_t c = 0; c < dim; ++c) rows[target][c] += f * rows[source][c];
  };

  std::size_t p = 0;
  for (std::size_t col = 0; col < dim && p < rows.size(); ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t r = p; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (!best || abs(rows[r][col]) < abs(rows[*best][col]))) best = r;
      if (!best) break;
      std::swap(rows[p], rows[*best]);
      bool done = true;
      for (std::size_t r = p + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        add_multiple(r, p, -floor_div(rows[r][col], rows[p][col]));
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[p][col] == 0) continue;
    if (rows[p][col] < 0)
      for (auto& x : rows[p]) x = -x;
    for (std::size_t r = 0; r < p; ++r) add_multiple(r, p, -floor_div(rows[r][col], rows[p][col]));
    ++p;
  }
  rows.resize(p);
  return rows;
}

void reduce_mod(IntVec& v, std::span<const Int> moduli) {
  if (moduli.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "moduli length mismatch");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (moduli[i] != 0) mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), moduli[i].get_mpz_t());
}

namespace {

bool pure_torsion(const IntVec& v, std::span<const Int> moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (moduli[i] == 0) {
      if (v[i] != 0) return false;
    } else if (!mpz_divisible_p(v[i].get_mpz_t(), moduli[i].get_mpz_t())) {
      return false;
    }
  }
  return true;
}

// [A | diag(nonzero moduli)]
IntMatrix augment_with_moduli(const IntMatrix& a, std::span<const Int> moduli) {
  if (moduli.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "one modulus per row required");
  std::size_t extra = 0;
  for (const auto& m : moduli) {
    if (m < 0 || m == 1) throw Error(ErrorCode::InvalidInput, "moduli must be 0 or >= 2");
    if (m != 0) ++extra;
  }
  IntMatrix out(a.rows(), a.cols() + extra);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  std::size_t k = a.cols();
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (moduli[r] != 0) out(r, k++) = moduli[r];
  return out;
}

}  // namespace

std::vector<IntVec> hermite_basis_mod(const std::vector<IntVec>& generators,
                                      std::span<const Int> moduli) {
  const std::size_t dim = moduli.size();
  std::vector<IntVec> gens = generators;
  for (std::size_t i = 0; i < dim; ++i)
    if (moduli[i] != 0) {
      IntVec e = zero_vec(dim);
      e[i] = moduli[i];
      gens.push_back(std::move(e));
    }
  std::vector<IntVec> out;
  for (auto& row : hermite_basis(gens, dim))
    if (!pure_torsion(row, moduli)) out.push_back(std::move(row));
  return out;
}

std::vector<IntVec> kernel_with_moduli(const IntMatrix& a, std::span<const Int> moduli) {
  const IntMatrix m = augment_with_moduli(a, moduli);
  const SmithForm sf = smith_normal_form(m);
  std::vector<IntVec> gens;
  for (std::size_t j = sf.rank; j < m.cols(); ++j) {
    IntVec x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = sf.v(i, j);
    gens.push_back(std::move(x));
  }
  return hermite_basis(gens, a.cols());
}

std::optional<CongruenceSolution> solve_with_moduli(const IntMatrix& a,
                                                    std::span<const Int> moduli,
                                                    std::span<const Int> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  const IntMatrix m = augment_with_moduli(a, moduli);
  const SmithForm sf = smith_normal_form(m);
  const IntVec c = sf.u.apply(b);

  IntVec y = zero_vec(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < sf.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), sf.d(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), sf.d(i, i).get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  const IntVec x = sf.v.apply(y);
  CongruenceSolution sol;
  sol.particular.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(a.cols()));
  sol.homogeneous = kernel_with_moduli(a, moduli);
  return sol;
}

bool in_sublattice(std::span<const Int> v, const std::vector<IntVec>& basis,
                   std::span<const Int> moduli) {
  const IntMatrix a = IntMatrix::from_columns(basis, v.size());
  if (a.rows() != v.size()) throw Error(ErrorCode::DimensionMismatch, "basis vector of wrong length");
  return solve_with_moduli(a, moduli, v).has_value();
}

bool lattice_equal(const std::vector<IntVec>& lhs, const std::vector<IntVec>& rhs,
                   std::span<const Int> moduli) {
  auto covered = [&](const std::vector<IntVec>& gens, const std::vector<IntVec>& basis) {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const IntVec& g) { return in_sublattice(g, basis, moduli); });
  };
  return covered(lhs, rhs) && covered(rhs, lhs);
}

}  // namespace ewm
