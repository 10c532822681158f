#include "ewm/chevalley.hpp"

#include <algorithm>
#include <deque>

#include "ewm/error.hpp"

namespace ewm {

AlgVec AlgVec::basis(std::size_t index, Rational coeff) {
  AlgVec v;
  v.add(index, coeff);
  return v;
}

Rational AlgVec::coeff(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgVec::add(std::size_t index, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgVec& AlgVec::operator+=(const AlgVec& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

AlgVec AlgVec::operator+(const AlgVec& o) const {
  AlgVec r = *this;
  r += o;
  return r;
}

AlgVec AlgVec::operator-(const AlgVec& o) const { return *this + o * Rational(-1); }

AlgVec AlgVec::operator*(const Rational& c) const {
  AlgVec r;
  if (c == 0) return r;
  for (const auto& [k, x] : terms_) r.terms_.emplace(k, x * c);
  return r;
}

namespace {

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int to_int_exact(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p())
    throw Error(ErrorCode::Inconsistent, "non-integral structure constant");
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  npos_ = rs_.positive_roots().size();
  const std::size_t nr = num_roots();
  sum_.assign(nr * nr, std::nullopt);
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b) sum_[a * nr + b] = root_index(root(a) + root(b));
  table_.assign(nr * nr, 0);

  // Positive pairs, by increasing height of the sum.
  for (std::size_t xi = 0; xi < npos_; ++xi) {
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a = 0; a < xi; ++a)
      for (std::size_t b = a + 1; b < xi; ++b)
        if (sum_[a * nr + b] == xi) special.emplace_back(a, b);
    if (special.empty()) continue;

    const auto [g, d] = special.front();  // extraspecial
    const int pgd = string_length_below(g, d);
    table_[g * nr + d] = pgd + 1;
    table_[d * nr + g] = -(pgd + 1);
    const RootVec rg = root(g), rxi = root(xi);
    const std::size_t ng = g + npos_, nd = d + npos_;
    const int n_neg = -(pgd + 1);  // N_{-g,-d}

    for (std::size_t k = 1; k < special.size(); ++k) {
      const auto [a, b] = special[k];
      const RootVec ra = root(a), rb = root(b);
      Rational bracket_sum = 0;
      // terms with (b - g) and (a - g); zero when the difference is not a root
      if (rs_.is_root(rb - rg)) {
        const RootVec diff = rb - rg;
        bracket_sum += ratio(derived_constant(b, ng) * derived_constant(a, nd), rs_.inner(diff, diff));
      }
      if (rs_.is_root(ra - rg)) {
        const RootVec diff = ra - rg;
        bracket_sum += ratio(derived_constant(ng, a) * derived_constant(b, nd), rs_.inner(diff, diff));
      }
      const Rational value = -Rational(rs_.inner(rxi, rxi)) * bracket_sum / n_neg;
      const int n = to_int_exact(value);
      table_[a * nr + b] = n;
      table_[b * nr + a] = -n;
    }
  }

  // Every remaining pair is fixed by the positive ones.
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b)
      if (sum_[a * nr + b] && !(a < npos_ && b < npos_)) table_[a * nr + b] = derived_constant(a, b);
}

RootVec ChevalleyAlgebra::root(std::size_t k) const {
  return k < npos_ ? rs_.positive_roots()[k] : -rs_.positive_roots()[k - npos_];
}

std::optional<std::size_t> ChevalleyAlgebra::root_index(const RootVec& r) const {
  if (auto i = rs_.positive_index(r)) return *i;
  if (auto i = rs_.positive_index(-r)) return *i + npos_;
  return std::nullopt;
}

std::size_t ChevalleyAlgebra::e_index(const RootVec& r) const {
  auto k = root_index(r);
  if (!k) throw Error(ErrorCode::InvalidInput, "not a root");
  return *k;
}

int ChevalleyAlgebra::string_length_below(std::size_t a, std::size_t b) const {
  const RootVec ra = root(a);
  RootVec r = root(b);
  int p = 0;
  for (;;) {
    r = r - ra;
    if (!rs_.is_root(r)) return p;
    ++p;
  }
}

// N_{a,b} from the positive-pair entries already in the table.
int ChevalleyAlgebra::derived_constant(std::size_t a, std::size_t b) const {
  const std::size_t nr = num_roots();
  const auto c = sum_[a * nr + b];
  if (!c) return 0;
  const bool pa = a < npos_, pb = b < npos_;
  if (pa && pb) return table_[a * nr + b];
  if (!pa && !pb) {
    // N_{a,b} N_{-a,-b} = -(p+1)^2
    const int p = string_length_below(a, b);
    const int pos = table_[(a - npos_) * nr + (b - npos_)];
    return -(p + 1) * (p + 1) / pos;
  }
  // a + b + (-c) = 0: N_{a,b}/(c,c) = N_{b,-c}/(a,a) = N_{-c,a}/(b,b)
  const RootVec rc = root(*c);
  const std::size_t neg_c = *c < npos_ ? *c + npos_ : *c - npos_;
  const int cc = rs_.inner(rc, rc);
  const bool pneg_c = neg_c < npos_;
  if (pb == pneg_c) {
    const RootVec ra = root(a);
    return to_int_exact(ratio(cc, rs_.inner(ra, ra)) * derived_constant(b, neg_c));
  }
  const RootVec rb = root(b);
  return to_int_exact(ratio(cc, rs_.inner(rb, rb)) * derived_constant(neg_c, a));
}

std::vector<int> ChevalleyAlgebra::coroot(const RootVec& r) const {
  const int rr = rs_.inner(r, r);
  std::vector<int> out(rs_.rank(), 0);
  for (int j = 0; j < rs_.rank(); ++j) {
    const int num = r.coeffs[j] * 2 * rs_.symmetrizer(j);
    out[j] = to_int_exact(ratio(num, rr));
  }
  return out;
}

AlgVec ChevalleyAlgebra::bracket_basis(std::size_t x, std::size_t y) const {
  const std::size_t nr = num_roots();
  AlgVec out;
  const bool hx = x >= nr, hy = y >= nr;
  if (hx && hy) return out;
  if (hx) {
    const int i = static_cast<int>(x - nr);
    out.add(y, rs_.pairing(root(y), i));
    return out;
  }
  if (hy) {
    const int i = static_cast<int>(y - nr);
    out.add(x, -rs_.pairing(root(x), i));
    return out;
  }
  if (root(x) + root(y) == RootVec{std::vector<int>(rs_.rank(), 0)}) {
    const auto h = coroot(root(x));
    for (int i = 0; i < rs_.rank(); ++i) out.add(h_index(i), h[i]);
    return out;
  }
  if (auto c = sum_[x * nr + y]) out.add(*c, table_[x * nr + y]);
  return out;
}

AlgVec ChevalleyAlgebra::bracket(const AlgVec& x, const AlgVec& y) const {
  AlgVec out;
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms()) out += bracket_basis(i, j) * (a * b);
  return out;
}

std::vector<Rational> Subspace::reduce(const AlgVec& v) const {
  std::vector<Rational> dense(dim_, Rational(0));
  for (const auto& [k, c] : v.terms()) {
    if (k >= dim_) throw Error(ErrorCode::DimensionMismatch, "vector index outside the algebra");
    dense[k] = c;
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = dense[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (rows_[r][k] != 0) dense[k] -= f * rows_[r][k];
  }
  return dense;
}

bool Subspace::contains(const AlgVec& v) const {
  const auto rest = reduce(v);
  return std::all_of(rest.begin(), rest.end(), [](const Rational& q) { return q == 0; });
}

bool Subspace::insert(const AlgVec& v) {
  auto rest = reduce(v);
  auto it = std::find_if(rest.begin(), rest.end(), [](const Rational& q) { return q != 0; });
  if (it == rest.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - rest.begin());
  const Rational inv = 1 / rest[pivot];
  for (auto& q : rest) q *= inv;
  for (auto& row : rows_) {
    const Rational f = row[pivot];
    if (f == 0) continue;
    for (std::size_t k = 0; k < dim_; ++k) row[k] -= f * rest[k];
  }
  // keep rows ordered by pivot
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(rest));
  return true;
}

std::vector<AlgVec> Subspace::basis() const {
  std::vector<AlgVec> out;
  for (const auto& row : rows_) {
    AlgVec v;
    for (std::size_t k = 0; k < dim_; ++k) v.add(k, row[k]);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace span_of(const ChevalleyAlgebra& alg, const std::vector<AlgVec>& vectors) {
  Subspace s(alg.dimension());
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::vector<AlgVec> ideal_closure(const ChevalleyAlgebra& alg, const std::vector<AlgVec>& generators,
                                  const std::vector<AlgVec>& ambient) {
  const Subspace amb = span_of(alg, ambient);
  for (const auto& g : generators)
    if (!amb.contains(g))
      throw Error(ErrorCode::GeneratorsOutsideAmbient, "ideal generator outside the ambient subalgebra");

  Subspace ideal(alg.dimension());
  std::deque<AlgVec> queue;
  for (const auto& g : generators)
    if (ideal.insert(g)) queue.push_back(g);
  while (!queue.empty()) {
    const AlgVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : ambient) {
      AlgVec w = alg.bracket(a, v);
      if (ideal.insert(w)) queue.push_back(std::move(w));
    }
  }
  return ideal.basis();
}

bool is_contained(const ChevalleyAlgebra& alg, const std::vector<AlgVec>& sub,
                  const std::vector<AlgVec>& space) {
  const Subspace s = span_of(alg, space);
  return std::all_of(sub.begin(), sub.end(), [&](const AlgVec& v) { return s.contains(v); });
}

bool commutes_with_all(const ChevalleyAlgebra& alg, const AlgVec& x, const std::vector<AlgVec>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const AlgVec& g) { return alg.bracket(x, g).is_zero(); });
}

std::vector<AlgVec> negative_nilradical(const ChevalleyAlgebra& alg, const IndexSet& levi) {
  std::vector<AlgVec> out;
  const auto& roots = alg.root_system().positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const IndexSet s = supp(roots[k]);
    const bool inside = std::includes(levi.begin(), levi.end(), s.begin(), s.end());
    if (!inside) out.push_back(AlgVec::basis(k + alg.num_positive()));
  }
  return out;
}

}  // namespace ewm
