#pragma once

// Reference computations written independently of the library, plus small
// helpers for loading the committed example inputs.

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ewm/core.hpp"
#include "ewm/io.hpp"
#include "ewm/rootsys.hpp"

#ifndef EWM_DATA_DIR
#error "EWM_DATA_DIR must be defined"
#endif

namespace oracle {

using ewm::Int;
using ewm::IntVec;
using ewm::Rational;

inline std::string data_path(const std::string& name) { return std::string(EWM_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline ewm::io::InputDocument load(const std::string& name) { return ewm::io::parse_input(read_file(data_path(name))); }

// Number of positive roots from the closed forms per family.
inline std::size_t positive_root_count(ewm::Family f, int n) {
  const auto r = static_cast<std::size_t>(n);
  switch (f) {
    case ewm::Family::A: return r * (r + 1) / 2;
    case ewm::Family::B:
    case ewm::Family::C: return r * r;
    case ewm::Family::D: return r * (r - 1);
    case ewm::Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case ewm::Family::F: return 24;
    case ewm::Family::G: return 6;
  }
  return 0;
}

// Gaussian elimination over Q: coefficients c with sum c_i b_i = v, if any.
// The b_i must be linearly independent.
inline std::optional<std::vector<Rational>> rational_coordinates(const IntVec& v, const std::vector<IntVec>& basis) {
  const std::size_t n = v.size(), k = basis.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = basis[c][r];
    m[r][k] = v[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[row][c];
      for (std::size_t x = c; x <= k; ++x) m[r][x] -= f * m[row][x];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (m[r][k] != 0) return std::nullopt;
  std::vector<Rational> out(k);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = m[i][k] / m[i][pivot_col[i]];
  return out;
}

// Membership in the lattice spanned by independent vectors.
inline bool in_span_integrally(const IntVec& v, const std::vector<IntVec>& basis) {
  auto c = rational_coordinates(v, basis);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.get_den() == 1; });
}

// Searches sum c_i b_i = v with |c_i| <= bound.
inline bool small_combination(const IntVec& v, const std::vector<IntVec>& basis, int bound) {
  std::vector<int> c(basis.size(), -bound);
  while (true) {
    bool hit = true;
    for (std::size_t r = 0; r < v.size() && hit; ++r) {
      Int s = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) s += basis[i][r] * c[i];
      hit = s == v[r];
    }
    if (hit) return true;
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound) c[i++] = -bound;
    if (i == c.size()) return false;
    ++c[i];
  }
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Determinant by cofactor expansion (fine for the small sizes used here).
inline Int cofactor_det(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t x = 0; x < n; ++x)
        if (x != c) row.push_back(m[r][x]);
      minor.push_back(std::move(row));
    }
    const Int sub = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? sub : Int(-sub);
  }
  return det;
}

// k-th determinantal divisor: gcd of all k x k minors.
inline Int determinantal_divisor(const ewm::IntMatrix& a, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  Int g = 0;
  auto next = [](std::vector<std::size_t>& s, std::size_t n) {
    std::size_t i = s.size();
    while (i > 0) {
      --i;
      if (s[i] < n - s.size() + i) {
        ++s[i];
        for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m[r][c] = a(rows[r], cols[c]);
      Int d = cofactor_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next(cols, a.cols()));
  } while (next(rows, a.rows()));
  return g;
}

// Order-insensitive comparison of generator sets given as (lambda, chi) pairs.
inline bool same_generator_set(const std::vector<ewm::Biweight>& got,
                               const std::vector<std::pair<IntVec, IntVec>>& expected,
                               const ewm::CharSpacePtr& space) {
  if (got.size() != expected.size()) return false;
  std::vector<bool> used(got.size(), false);
  for (const auto& [lambda, chi] : expected) {
    const ewm::CharVec target(space, chi);
    bool found = false;
    for (std::size_t i = 0; i < got.size() && !found; ++i) {
      if (used[i] || got[i].lambda.coeffs != lambda || !(got[i].chi == target)) continue;
      used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace oracle
