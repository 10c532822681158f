#include "ewm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ewm/error.hpp"

namespace ewm {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

Family family_from_letter(char c) {
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'G') throw Error(ErrorCode::InvalidType, std::string("unknown family '") + c + "'");
  return static_cast<Family>(c - 'A');
}

CartanType CartanType::parse(const std::string& text) {
  CartanType t;
  std::size_t pos = 0;
  auto separator = [](char c) { return c == 'x' || c == '*' || c == ' ' || c == '+'; };
  while (pos < text.size()) {
    if (!t.factors.empty()) {
      if (!separator(text[pos])) throw Error(ErrorCode::InvalidType, "malformed type '" + text + "'");
      while (pos < text.size() && separator(text[pos])) ++pos;
      if (pos == text.size()) throw Error(ErrorCode::InvalidType, "trailing separator in type '" + text + "'");
    }
    Family f = family_from_letter(text[pos++]);
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw Error(ErrorCode::InvalidType, "missing rank in type '" + text + "'");
    t.factors.push_back({f, std::stoi(text.substr(start, pos - start))});
  }
  t.validate();
  return t;
}

std::string CartanType::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += family_letter(factors[i].family);
    out += std::to_string(factors[i].rank);
  }
  return out;
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

void CartanType::validate() const {
  if (factors.empty()) throw Error(ErrorCode::InvalidType, "empty Cartan type");
  for (const auto& f : factors) {
    const int n = f.rank;
    bool ok = false;
    switch (f.family) {
      case Family::A: ok = n >= 1; break;
      case Family::B: ok = n >= 2; break;
      case Family::C: ok = n >= 2; break;
      case Family::D: ok = n >= 3; break;
      case Family::E: ok = n >= 6 && n <= 8; break;
      case Family::F: ok = n == 4; break;
      case Family::G: ok = n == 2; break;
    }
    if (!ok)
      throw Error(ErrorCode::InvalidType,
                  std::string("rank ") + std::to_string(n) + " out of range for type " + family_letter(f.family));
  }
}

std::size_t expected_positive_root_count(const SimpleFactor& f) {
  const std::size_t n = static_cast<std::size_t>(f.rank);
  switch (f.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

int RootVec::height() const {
  int h = 0;
  for (int c : coeffs) h += c;
  return h;
}

bool RootVec::is_positive() const {
  bool some = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) some = true;
  }
  return some;
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

RootVec RootVec::operator-(const RootVec& o) const {
  RootVec r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

WeightVec WeightVec::fundamental(std::size_t n, int i) {
  WeightVec w = zero(n);
  w.coeffs.at(static_cast<std::size_t>(i)) = 1;
  return w;
}

WeightVec WeightVec::operator+(const WeightVec& o) const {
  WeightVec r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

WeightVec WeightVec::operator-(const WeightVec& o) const {
  WeightVec r = *this;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

WeightVec WeightVec::operator*(const Int& k) const {
  WeightVec r = *this;
  for (auto& c : r.coeffs) c *= k;
  return r;
}

IndexSet supp(const RootVec& r) {
  IndexSet s;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (r.coeffs[i] < 0)
      throw Error(ErrorCode::NegativeRootCoordinate, "Supp of a vector with a negative coordinate");
    if (r.coeffs[i] > 0) s.insert(static_cast<int>(i));
  }
  return s;
}

IndexSet wsupp(const WeightVec& w) {
  IndexSet s;
  for (std::size_t i = 0; i < w.coeffs.size(); ++i)
    if (w.coeffs[i] > 0) s.insert(static_cast<int>(i));
  return s;
}

bool is_dominant(const WeightVec& w) {
  return std::all_of(w.coeffs.begin(), w.coeffs.end(), [](const Int& c) { return c >= 0; });
}

namespace {

// Gram matrix of the simple roots of one factor, short roots of length^2 2.
std::vector<std::vector<int>> factor_gram(const SimpleFactor& f) {
  const int n = f.rank;
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (f.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 4;
      g[n - 1][n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;  // Cartan matrices are invertible
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// height ascending, then coordinates lexicographically descending
bool root_order(const RootVec& a, const RootVec& b) {
  const int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

}  // namespace

RootSystem::RootSystem(CartanType ctype) : ctype_(std::move(ctype)) {
  ctype_.validate();
  rank_ = ctype_.rank();
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  sym_.assign(rank_, 1);
  int offset = 0;
  for (const auto& f : ctype_.factors) {
    const auto g = factor_gram(f);
    for (int i = 0; i < f.rank; ++i) {
      sym_[offset + i] = g[i][i] / 2;
      for (int j = 0; j < f.rank; ++j) cartan_[offset + i][offset + j] = 2 * g[i][j] / g[i][i];
    }
    offset += f.rank;
  }
  cartan_inverse_ = rational_inverse(cartan_);
  generate_positive_roots();
}

void RootSystem::generate_positive_roots() {
  std::vector<RootVec> level;
  for (int i = 0; i < rank_; ++i) level.push_back(simple_root(i));
  std::set<RootVec> known(level.begin(), level.end());

  while (!level.empty()) {
    std::set<RootVec> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank_; ++i) {
        // length of the string below beta in direction a_i
        int p = 0;
        RootVec down = beta;
        for (;;) {
          down.coeffs[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - pairing(beta, i);
        if (q > 0) {
          RootVec up = beta;
          up.coeffs[i] += 1;
          next.insert(up);
        }
      }
    }
    pos_roots_.insert(pos_roots_.end(), level.begin(), level.end());
    level.assign(next.begin(), next.end());
    known.insert(level.begin(), level.end());
  }
  std::sort(pos_roots_.begin(), pos_roots_.end(), root_order);
}

std::optional<std::size_t> RootSystem::positive_index(const RootVec& r) const {
  if (r.coeffs.size() != static_cast<std::size_t>(rank_) || !r.is_positive()) return std::nullopt;
  auto it = std::lower_bound(pos_roots_.begin(), pos_roots_.end(), r, root_order);
  if (it != pos_roots_.end() && *it == r) return static_cast<std::size_t>(it - pos_roots_.begin());
  return std::nullopt;
}

bool RootSystem::is_root(const RootVec& r) const {
  return is_positive_root(r) || is_positive_root(-r);
}

RootVec RootSystem::simple_root(int i) const {
  RootVec r{std::vector<int>(rank_, 0)};
  r.coeffs.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

int RootSystem::pairing(const RootVec& r, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += r.coeffs[j] * cartan_[i][j];
  return s;
}

WeightVec RootSystem::root_to_weight(const RootVec& r) const {
  if (r.coeffs.size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorCode::DimensionMismatch, "root vector of wrong length");
  WeightVec w = WeightVec::zero(rank_);
  for (int i = 0; i < rank_; ++i) w.coeffs[i] = pairing(r, i);
  return w;
}

std::vector<Rational> RootSystem::weight_to_root(const WeightVec& w) const {
  if (w.coeffs.size() != static_cast<std::size_t>(rank_))
    throw Error(ErrorCode::DimensionMismatch, "weight vector of wrong length");
  std::vector<Rational> out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += cartan_inverse_[i][j] * Rational(w.coeffs[j]);
  return out;
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a.coeffs[i] * b.coeffs[j] * sym_[i] * cartan_[i][j];
  return s;
}

Rational RootSystem::inner(const WeightVec& a, const WeightVec& b) const {
  const auto ra = weight_to_root(a);
  const auto rb = weight_to_root(b);
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += ra[i] * rb[j] * (sym_[i] * cartan_[i][j]);
  return s;
}

}  // namespace ewm
