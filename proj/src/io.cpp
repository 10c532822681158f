#include "ewm/io.hpp"

#include <cstdint>
#include <initializer_list>
#include <sstream>

#include "ewm/error.hpp"
#include "json.hpp"

namespace ewm::io {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) {
  throw Error(ErrorCode::SchemaError, (ptr.empty() ? std::string("/") : ptr) + ": " + msg);
}

std::string child(const std::string& ptr, std::string_view key) {
  std::string out = ptr + "/";
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void expect_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object");
}

void expect_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
}

void check_keys(const json& obj, const std::string& ptr, std::initializer_list<std::string_view> allowed) {
  expect_object(obj, ptr);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == it.key();
    if (!ok) fail(child(ptr, it.key()), "unknown field");
  }
}

const json& require(const json& obj, const std::string& ptr, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(child(ptr, key), "missing required field");
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

bool is_decimal(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && s[0] == '-') i = 1;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_int(const json& j, const std::string& ptr) {
  if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!is_decimal(s, true)) fail(ptr, "expected an integer");
    return Int(s);
  }
  fail(ptr, "expected an integer");
}

int parse_small(const json& j, const std::string& ptr) {
  const Int v = parse_int(j, ptr);
  if (!v.fits_sint_p()) fail(ptr, "integer out of range");
  return static_cast<int>(v.get_si());
}

Rational parse_rational(const json& j, const std::string& ptr) {
  if (!j.is_string()) return Rational(parse_int(j, ptr));
  const auto& s = j.get_ref<const std::string&>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(j, ptr));
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false)) fail(ptr, "expected a rational \"p/q\"");
  const Int d{den};
  if (d == 0) fail(ptr, "zero denominator");
  Rational q{Int{num}, d};
  q.canonicalize();
  return q;
}

bool parse_bool(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) fail(ptr, "expected a boolean");
  return j.get<bool>();
}

std::string parse_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

IntVec parse_int_array(const json& j, const std::string& ptr, std::optional<std::size_t> len = std::nullopt) {
  expect_array(j, ptr);
  if (len && j.size() != *len)
    fail(ptr, "expected " + std::to_string(*len) + " entries, found " + std::to_string(j.size()));
  IntVec out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_int(j[i], child(ptr, i)));
  return out;
}

int parse_index(const json& j, const std::string& ptr, int rank) {
  const int i = parse_small(j, ptr);
  if (i < 1 || i > rank) fail(ptr, "simple-root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  return i - 1;
}

IndexSet parse_index_set(const json& j, const std::string& ptr, int rank) {
  expect_array(j, ptr);
  IndexSet out;
  for (std::size_t k = 0; k < j.size(); ++k)
    if (!out.insert(parse_index(j[k], child(ptr, k), rank)).second) fail(child(ptr, k), "repeated index");
  return out;
}

// Dense array of length n, or sparse {"i": c} with 1-based keys.
IntVec parse_coefficients(const json& j, const std::string& ptr, int n) {
  if (j.is_array()) return parse_int_array(j, ptr, static_cast<std::size_t>(n));
  if (!j.is_object()) fail(ptr, "expected a coefficient array or a sparse index map");
  IntVec out = zero_vec(static_cast<std::size_t>(n));
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string p = child(ptr, it.key());
    if (!is_decimal(it.key(), false)) fail(p, "sparse keys must be 1-based indices");
    const int i = parse_index(json(it.key()), p, n);
    out[static_cast<std::size_t>(i)] = parse_int(it.value(), p);
  }
  return out;
}

WeightVec parse_weight(const json& j, const std::string& ptr, int n) { return {parse_coefficients(j, ptr, n)}; }

RootVec parse_root(const json& j, const std::string& ptr, int n) {
  const IntVec c = parse_coefficients(j, ptr, n);
  RootVec r;
  for (const auto& x : c) {
    if (!x.fits_sint_p()) fail(ptr, "root coordinate out of range");
    r.coeffs.push_back(static_cast<int>(x.get_si()));
  }
  return r;
}

CartanType parse_group(const json& j, const std::string& ptr) {
  CartanType t;
  if (j.is_string()) {
    try {
      t = CartanType::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail(ptr, e.what());
    }
  } else if (j.is_array()) {
    if (j.empty()) fail(ptr, "at least one simple factor is required");
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string p = child(ptr, k);
      check_keys(j[k], p, {"family", "rank"});
      const std::string fam = parse_string(require(j[k], p, "family"), child(p, "family"));
      if (fam.size() != 1) fail(child(p, "family"), "expected one of A..G");
      SimpleFactor f{};
      try {
        f.family = family_from_letter(fam[0]);
      } catch (const Error& e) {
        fail(child(p, "family"), e.what());
      }
      f.rank = parse_small(require(j[k], p, "rank"), child(p, "rank"));
      t.factors.push_back(f);
    }
  } else {
    fail(ptr, "expected a type string such as \"A5\" or a list of factors");
  }
  try {
    t.validate();
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
  return t;
}

CharSpacePtr parse_char_space(const json& j, const std::string& ptr) {
  check_keys(j, ptr, {"free_rank", "moduli", "names", "relations"});
  auto s = std::make_shared<CharSpace>();
  s->free_rank = parse_small(require(j, ptr, "free_rank"), child(ptr, "free_rank"));
  if (s->free_rank < 0) fail(child(ptr, "free_rank"), "must be non-negative");
  if (const json* m = optional_field(j, "moduli")) {
    s->moduli = parse_int_array(*m, child(ptr, "moduli"));
    for (std::size_t k = 0; k < s->moduli.size(); ++k)
      if (s->moduli[k] < 2) fail(child(child(ptr, "moduli"), k), "modulus must be at least 2");
  }
  if (const json* names = optional_field(j, "names")) {
    const std::string p = child(ptr, "names");
    expect_array(*names, p);
    if (names->size() != s->dim()) fail(p, "expected one name per coordinate (" + std::to_string(s->dim()) + ")");
    for (std::size_t k = 0; k < names->size(); ++k) s->names.push_back(parse_string((*names)[k], child(p, k)));
  }
  if (const json* rel = optional_field(j, "relations")) {
    const std::string p = child(ptr, "relations");
    expect_array(*rel, p);
    for (std::size_t k = 0; k < rel->size(); ++k) s->relations.push_back(parse_int_array((*rel)[k], child(p, k), s->dim()));
  }
  return s;
}

CharVec parse_char(const json& j, const std::string& ptr, const CharSpacePtr& space) {
  return CharVec(space, parse_int_array(j, ptr, space->dim()));
}

IntMatrix parse_iota(const json& j, const std::string& ptr, std::size_t rows, int rank) {
  expect_array(j, ptr);
  if (j.size() != rows) fail(ptr, "expected " + std::to_string(rows) + " rows (one per codomain coordinate)");
  std::vector<IntVec> r;
  for (std::size_t k = 0; k < j.size(); ++k)
    r.push_back(parse_int_array(j[k], child(ptr, k), static_cast<std::size_t>(rank)));
  return IntMatrix::from_rows(r, static_cast<std::size_t>(rank));
}

GeneralDatum parse_general(const json& j, std::shared_ptr<const RootSystem> rs) {
  check_keys(j, "", {"mode", "group", "comment", "pi_L", "char_space_K", "omega_bar", "codomain", "iota",
                     "xi2_prime", "xi3_prime", "sigma_simple", "unique_expected"});
  const int n = rs->rank();
  GeneralDatum d;
  d.rs = rs;
  if (const json* p = optional_field(j, "pi_L")) d.pi_levi = parse_index_set(*p, "/pi_L", n);
  d.char_space_k = parse_char_space(require(j, "", "char_space_K"), "/char_space_K");
  d.codomain = parse_char_space(require(j, "", "codomain"), "/codomain");
  d.iota = parse_iota(require(j, "", "iota"), "/iota", d.codomain->dim(), n);

  if (const json* ob = optional_field(j, "omega_bar")) {
    expect_object(*ob, "/omega_bar");
    for (auto it = ob->begin(); it != ob->end(); ++it) {
      const std::string p = child("/omega_bar", it.key());
      if (!is_decimal(it.key(), false)) fail(p, "keys must be 1-based simple-root indices");
      const int a = parse_index(json(it.key()), p, n);
      if (d.pi_levi.count(a)) fail(p, "index belongs to pi_L");
      d.omega_bar.emplace(a, parse_char(it.value(), p, d.char_space_k));
    }
  }
  for (int a = 0; a < n; ++a)
    if (!d.pi_levi.count(a) && !d.omega_bar.count(a))
      fail(child("/omega_bar", std::to_string(a + 1)), "missing restriction for a simple root outside pi_L");

  if (const json* xs = optional_field(j, "xi2_prime")) {
    expect_array(*xs, "/xi2_prime");
    const std::vector<int> levi(d.pi_levi.begin(), d.pi_levi.end());
    for (std::size_t k = 0; k < xs->size(); ++k) {
      const std::string p = child("/xi2_prime", k);
      check_keys((*xs)[k], p, {"lambda", "chi"});
      const json& lj = require((*xs)[k], p, "lambda");
      Xi2Input in;
      if (lj.is_array()) {
        const IntVec c = parse_int_array(lj, child(p, "lambda"), levi.size());
        for (std::size_t i = 0; i < levi.size(); ++i)
          if (c[i] != 0) in.lambda_levi[levi[i]] = c[i];
      } else {
        const IntVec c = parse_coefficients(lj, child(p, "lambda"), n);
        for (int i = 0; i < n; ++i) {
          if (c[static_cast<std::size_t>(i)] == 0) continue;
          if (!d.pi_levi.count(i))
            fail(child(child(p, "lambda"), std::to_string(i + 1)), "Levi weight supported outside pi_L");
          in.lambda_levi[i] = c[static_cast<std::size_t>(i)];
        }
      }
      in.chi_tilde = parse_char(require((*xs)[k], p, "chi"), child(p, "chi"), d.char_space_k);
      d.xi2_prime.push_back(std::move(in));
    }
  }
  if (const json* xs = optional_field(j, "xi3_prime")) {
    expect_array(*xs, "/xi3_prime");
    for (std::size_t k = 0; k < xs->size(); ++k) {
      const std::string p = child("/xi3_prime", k);
      check_keys((*xs)[k], p, {"mu", "lift"});
      Xi3Input in;
      in.mu = parse_char(require((*xs)[k], p, "mu"), child(p, "mu"), d.codomain);
      if (const json* l = optional_field((*xs)[k], "lift")) in.mu_lift = parse_weight(*l, child(p, "lift"), n);
      d.xi3_prime.push_back(std::move(in));
    }
  }
  if (const json* s = optional_field(j, "sigma_simple")) d.sigma_simple = parse_index_set(*s, "/sigma_simple", n);
  if (const json* u = optional_field(j, "unique_expected")) d.unique_expected = parse_bool(*u, "/unique_expected");
  return d;
}

SolvableDatum parse_solvable(const json& j, std::shared_ptr<const RootSystem> rs) {
  check_keys(j, "", {"mode", "group", "comment", "active_roots", "codomain", "iota"});
  const int n = rs->rank();
  const json& ar = require(j, "", "active_roots");
  expect_array(ar, "/active_roots");
  std::vector<RootVec> active;
  for (std::size_t k = 0; k < ar.size(); ++k) {
    const std::string p = child("/active_roots", k);
    RootVec r = parse_root(ar[k], p, n);
    if (!rs->is_positive_root(r)) fail(p, "not a positive root");
    for (const auto& prev : active)
      if (prev == r) fail(p, "repeated root");
    active.push_back(std::move(r));
  }
  const json* cod = optional_field(j, "codomain");
  const json* iota = optional_field(j, "iota");
  if (!cod && !iota) return SolvableDatum::with_identity_iota(rs, std::move(active));
  if (!cod) fail("/codomain", "required together with iota");
  if (!iota) fail("/iota", "required together with codomain");
  SolvableDatum d;
  d.rs = rs;
  d.active_roots = std::move(active);
  d.codomain = parse_char_space(*cod, "/codomain");
  d.iota = parse_iota(*iota, "/iota", d.codomain->dim(), n);
  return d;
}

AlgVec parse_alg_vec(const json& j, const std::string& ptr, const ChevalleyAlgebra& alg) {
  expect_array(j, ptr);
  const int n = alg.root_system().rank();
  AlgVec v;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = child(ptr, k);
    check_keys(j[k], p, {"root", "h", "coeff"});
    const json* root = optional_field(j[k], "root");
    const json* h = optional_field(j[k], "h");
    if ((root != nullptr) == (h != nullptr)) fail(p, "a term names exactly one of \"root\" or \"h\"");
    Rational c = 1;
    if (const json* cj = optional_field(j[k], "coeff")) c = parse_rational(*cj, child(p, "coeff"));
    if (root) {
      const RootVec r = parse_root(*root, child(p, "root"), n);
      if (!alg.root_index(r)) fail(child(p, "root"), "not a root");
      v.add(alg.e_index(r), c);
    } else {
      v.add(alg.h_index(parse_index(*h, child(p, "h"), n)), c);
    }
  }
  return v;
}

std::vector<AlgVec> parse_alg_list(const json& j, const std::string& ptr, const ChevalleyAlgebra& alg) {
  expect_array(j, ptr);
  std::vector<AlgVec> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_alg_vec(j[k], child(ptr, k), alg));
  return out;
}

CheckRequest parse_check(const json& j, std::shared_ptr<const RootSystem> rs) {
  check_keys(j, "", {"mode", "group", "comment", "alpha", "alphas", "pi_L", "p_u", "h_u", "s_prime"});
  const int n = rs->rank();
  CheckRequest c;
  c.alg = std::make_shared<ChevalleyAlgebra>(*rs);
  const json* one = optional_field(j, "alpha");
  const json* many = optional_field(j, "alphas");
  if (one && many) fail("/alphas", "give either alpha or alphas");
  if (one) {
    c.alphas.push_back(parse_index(*one, "/alpha", n));
  } else if (many) {
    const IndexSet s = parse_index_set(*many, "/alphas", n);
    c.alphas.assign(s.begin(), s.end());
  } else {
    fail("/alpha", "missing required field");
  }
  const json* pl = optional_field(j, "pi_L");
  const json* pu = optional_field(j, "p_u");
  if (pl && pu) fail("/p_u", "give either pi_L or p_u");
  if (pu) {
    c.p_u = parse_alg_list(*pu, "/p_u", *c.alg);
  } else {
    const IndexSet levi = pl ? parse_index_set(*pl, "/pi_L", n) : IndexSet{};
    c.p_u = negative_nilradical(*c.alg, levi);
  }
  c.h_u = parse_alg_list(require(j, "", "h_u"), "/h_u", *c.alg);
  if (const json* s = optional_field(j, "s_prime")) c.s_prime = parse_alg_list(*s, "/s_prime", *c.alg);
  return c;
}

// Output serialization.

json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

json vec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json vecs_json(const std::vector<IntVec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_json(v));
  return a;
}

json ints_json(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

json rational_json(const Rational& q) {
  if (q.get_den() == 1) return int_json(q.get_num());
  return json(q.get_str());
}

json char_space_json(const CharSpace& s) {
  json o;
  o["free_rank"] = s.free_rank;
  o["moduli"] = vec_json(s.moduli);
  if (!s.names.empty()) o["names"] = s.names;
  if (!s.relations.empty()) o["relations"] = vecs_json(s.relations);
  return o;
}

json terms_json(const std::vector<AlgTermOut>& terms) {
  json a = json::array();
  for (const auto& t : terms) {
    json o;
    if (t.root.empty()) o["h"] = t.h;
    else o["root"] = ints_json(t.root);
    o["coeff"] = rational_json(t.coeff);
    a.push_back(std::move(o));
  }
  return a;
}

json to_json(const OutputDocument& doc) {
  json o;
  o["mode"] = doc.mode;
  o["status"] = doc.status;
  if (!doc.group.empty()) o["group"] = doc.group;
  if (doc.chi_space) o["chi_space"] = char_space_json(*doc.chi_space);
  json gens = json::array();
  for (const auto& g : doc.generators)
    gens.push_back(json{{"lambda", vec_json(g.lambda)}, {"chi", vec_json(g.chi)}, {"origin", g.origin}});
  o["generators"] = std::move(gens);
  if (!doc.lambda_basis.empty()) o["lambda_basis"] = vecs_json(doc.lambda_basis);
  if (!doc.sigma_used.empty()) o["sigma_used"] = ints_json(doc.sigma_used);
  if (!doc.ker_iota.empty()) o["ker_iota"] = vecs_json(doc.ker_iota);
  if (!doc.pi12.empty()) o["pi12"] = ints_json(doc.pi12);
  if (!doc.rho_table.empty()) {
    json t = json::array();
    for (const auto& row : doc.rho_table) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x ? int_json(*x) : json(nullptr));
      t.push_back(std::move(r));
    }
    o["rho_table"] = std::move(t);
  }
  if (!doc.xi3.empty()) {
    json a = json::array();
    for (const auto& e : doc.xi3) {
      json x;
      x["mu"] = e.mu;
      x["lift"] = vec_json(e.lift);
      x["unique"] = e.unique;
      x["particular"] = vec_json(e.particular);
      x["relations"] = vecs_json(e.relations);
      x["equations"] = vecs_json(e.echelon);
      a.push_back(std::move(x));
    }
    o["xi3"] = std::move(a);
  }
  if (!doc.pi_map.empty()) {
    json a = json::array();
    for (const auto& p : doc.pi_map) a.push_back(json{{"root", ints_json(p.root)}, {"pi", p.pi}});
    o["pi_map"] = std::move(a);
  }
  if (!doc.phi.empty()) o["phi"] = vecs_json(doc.phi);
  if (!doc.roots.empty()) {
    json a = json::array();
    for (const auto& r : doc.roots)
      a.push_back(json{{"root", ints_json(r.root)}, {"weight", vec_json(r.weight)}, {"height", r.height}});
    o["roots"] = std::move(a);
  }
  if (!doc.checks.empty()) {
    json a = json::array();
    for (const auto& c : doc.checks) {
      json x;
      x["alpha"] = c.alpha;
      x["verdict"] = c.verdict;
      x["ideal_in_h_u"] = c.ideal_in_h_u;
      x["commutes"] = c.commutes;
      json ideal = json::array();
      for (const auto& v : c.ideal) ideal.push_back(terms_json(v));
      x["ideal"] = std::move(ideal);
      a.push_back(std::move(x));
    }
    o["checks"] = std::move(a);
  }
  json diags = json::array();
  for (const auto& d : doc.diagnostics) {
    json data = json::object();
    for (const auto& [k, v] : d.data) data[k] = v;
    diags.push_back(json{{"severity", std::string(to_string(d.severity))},
                         {"code", d.code},
                         {"message", d.message},
                         {"data", std::move(data)}});
  }
  o["diagnostics"] = std::move(diags);
  o["meta"] = json{{"tool", doc.tool}, {"version", doc.version}, {"input_hash", doc.input_hash}};
  return o;
}

std::vector<IntVec> parse_int_arrays(const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_int_array(j[k], child(ptr, k)));
  return out;
}

std::vector<int> parse_small_array(const json& j, const std::string& ptr) {
  expect_array(j, ptr);
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_small(j[k], child(ptr, k)));
  return out;
}

Severity severity_from_string(const std::string& s, const std::string& ptr) {
  if (s == "info") return Severity::Info;
  if (s == "warning") return Severity::Warning;
  if (s == "error") return Severity::Error;
  fail(ptr, "unknown severity");
}

// Text rendering.

const char* const kMinus = "−";

std::string signed_str(const Int& v) { return v < 0 ? kMinus + Int(-v).get_str() : v.get_str(); }

std::string combination(const std::vector<std::pair<Int, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c == 0) continue;
    const Int a = abs(c);
    const std::string body = (a == 1 ? std::string() : a.get_str()) + name;
    if (out.empty()) out = (c < 0 ? std::string(kMinus) : std::string()) + body;
    else out += (c < 0 ? std::string(" ") + kMinus + " " : std::string(" + ")) + body;
  }
  return out.empty() ? "0" : out;
}

std::string simple_root_name(int i) { return "α" + std::to_string(i); }

std::string render_root(const std::vector<int>& r) {
  std::vector<std::pair<Int, std::string>> t;
  for (std::size_t i = 0; i < r.size(); ++i) t.emplace_back(Int(r[i]), simple_root_name(static_cast<int>(i + 1)));
  return combination(t);
}

std::string unknown_name(std::size_t k, std::size_t count) {
  if (count <= 26) return std::string(1, static_cast<char>('a' + k));
  return "a" + std::to_string(k + 1);
}

std::string render_index_list(const std::vector<int>& v) {
  std::string out;
  for (int i : v) out += (out.empty() ? "" : ", ") + simple_root_name(i);
  return out.empty() ? "(none)" : out;
}

std::string render_term(const AlgTermOut& t) {
  std::string basis = t.root.empty() ? "h" + std::to_string(t.h) : "e(" + render_root(t.root) + ")";
  std::string c;
  if (t.coeff == -1) c = kMinus;
  else if (t.coeff != 1) c = (t.coeff < 0 ? kMinus + Rational(-t.coeff).get_str() : t.coeff.get_str()) + " ";
  return c + basis;
}

std::string render_text(const OutputDocument& doc) {
  std::ostringstream os;
  const CharSpace space = doc.chi_space.value_or(CharSpace{});
  os << "mode: " << doc.mode << "\n";
  if (!doc.group.empty()) os << "group: " << doc.group << "\n";
  os << "status: " << doc.status << "\n";
  if (!doc.generators.empty()) {
    os << "generators (" << doc.generators.size() << "):\n";
    for (const auto& g : doc.generators) os << "  " << render_biweight(g, space) << "  [" << g.origin << "]\n";
  }
  if (!doc.lambda_basis.empty()) {
    os << "lattice basis:";
    for (std::size_t k = 0; k < doc.lambda_basis.size(); ++k)
      os << (k ? "; " : " ") << render_weight(doc.lambda_basis[k]);
    os << "\n";
  }
  if (!doc.ker_iota.empty()) {
    os << "kernel of iota:";
    for (std::size_t k = 0; k < doc.ker_iota.size(); ++k) os << (k ? "; " : " ") << render_weight(doc.ker_iota[k]);
    os << "\n";
  }
  if (!doc.pi12.empty()) os << "pi12: " << render_index_list(doc.pi12) << "\n";
  if (!doc.sigma_used.empty()) os << "spherical simple roots: " << render_index_list(doc.sigma_used) << "\n";
  if (!doc.rho_table.empty()) {
    os << "rho table:\n";
    for (std::size_t j = 0; j < doc.rho_table.size(); ++j) {
      os << "  μ" << j + 1 << ":";
      for (const auto& x : doc.rho_table[j]) os << " " << (x ? signed_str(*x) : std::string("."));
      os << "\n";
    }
  }
  if (!doc.xi3.empty()) {
    const std::size_t unknowns = doc.xi3.front().echelon.empty() ? 0 : doc.xi3.front().echelon.front().size() - 1;
    if (unknowns > 0) {
      os << "unknowns:";
      for (std::size_t k = 0; k < unknowns && k < doc.generators.size(); ++k)
        os << (k ? ", " : " ") << unknown_name(k, unknowns) << " = " << render_biweight(doc.generators[k], space);
      os << "\n";
    }
    os << "coefficients:\n";
    for (const auto& e : doc.xi3) {
      os << "  μ" << e.mu << (e.unique ? "" : " (not unique)") << ":";
      if (e.echelon.empty()) os << " (no conditions)";
      for (std::size_t r = 0; r < e.echelon.size(); ++r) {
        const IntVec& row = e.echelon[r];
        std::vector<std::pair<Int, std::string>> lhs;
        for (std::size_t k = 0; k + 1 < row.size(); ++k) lhs.emplace_back(row[k], unknown_name(k, row.size() - 1));
        os << (r ? ", " : " ") << combination(lhs) << " = " << signed_str(row.back());
      }
      os << "\n";
    }
  }
  if (!doc.pi_map.empty()) {
    os << "pi map:\n";
    for (const auto& p : doc.pi_map) os << "  " << render_root(p.root) << " -> " << simple_root_name(p.pi) << "\n";
  }
  if (!doc.phi.empty()) {
    os << "phi:";
    for (std::size_t k = 0; k < doc.phi.size(); ++k) os << (k ? "; " : " ") << render_character(doc.phi[k], space);
    os << "\n";
  }
  if (!doc.roots.empty()) {
    os << "positive roots (" << doc.roots.size() << "):\n";
    for (const auto& r : doc.roots)
      os << "  " << r.height << "  " << render_root(r.root) << "  =  " << render_weight(r.weight) << "\n";
  }
  for (const auto& c : doc.checks) {
    os << simple_root_name(c.alpha) << ": " << c.verdict << " (ideal dimension " << c.ideal.size()
       << ", inside h_u: " << (c.ideal_in_h_u ? "yes" : "no") << ", commutes with s': " << (c.commutes ? "yes" : "no")
       << ")\n";
    for (const auto& v : c.ideal) {
      os << "   ";
      for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " + " : " ") << render_term(v[k]);
      os << "\n";
    }
  }
  if (!doc.diagnostics.empty()) {
    os << "diagnostics:\n";
    for (const auto& d : doc.diagnostics) os << "  " << to_string(d.severity) << " " << d.code << ": " << d.message << "\n";
  }
  return os.str();
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::General: return "general";
    case Mode::Solvable: return "solvable";
    case Mode::Roots: return "roots";
    case Mode::Check: return "check";
  }
  return "?";
}

Mode mode_from_string(std::string_view s) {
  for (Mode m : {Mode::General, Mode::Solvable, Mode::Roots, Mode::Check})
    if (to_string(m) == s) return m;
  throw Error(ErrorCode::SchemaError, "/mode: unknown mode \"" + std::string(s) + "\"");
}

InputDocument parse_input(std::string_view text, std::optional<Mode> expected) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("/: malformed JSON (") + e.what() + ")");
  }
  expect_object(j, "");
  InputDocument doc;
  if (const json* m = optional_field(j, "mode")) {
    doc.mode = mode_from_string(parse_string(*m, "/mode"));
    if (expected && *expected != doc.mode)
      fail("/mode", "document is for \"" + std::string(to_string(doc.mode)) + "\", command is \"" +
                        std::string(to_string(*expected)) + "\"");
  } else if (expected) {
    doc.mode = *expected;
  } else {
    fail("/mode", "missing required field");
  }
  doc.rs = std::make_shared<RootSystem>(parse_group(require(j, "", "group"), "/group"));
  switch (doc.mode) {
    case Mode::General: doc.general = parse_general(j, doc.rs); break;
    case Mode::Solvable: doc.solvable = parse_solvable(j, doc.rs); break;
    case Mode::Check: doc.check = parse_check(j, doc.rs); break;
    case Mode::Roots: check_keys(j, "", {"mode", "group", "comment"}); break;
  }
  return doc;
}

std::string emit_output(const OutputDocument& doc, Format format) {
  if (format == Format::Text) return render_text(doc);
  return to_json(doc).dump(2) + "\n";
}

OutputDocument parse_output(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("/: malformed JSON (") + e.what() + ")");
  }
  check_keys(j, "", {"mode", "status", "group", "chi_space", "generators", "lambda_basis", "sigma_used", "ker_iota",
                     "pi12", "rho_table", "xi3", "pi_map", "phi", "roots", "checks", "diagnostics", "meta"});
  OutputDocument doc;
  doc.mode = parse_string(require(j, "", "mode"), "/mode");
  doc.status = parse_string(require(j, "", "status"), "/status");
  if (const json* g = optional_field(j, "group")) doc.group = parse_string(*g, "/group");
  if (const json* c = optional_field(j, "chi_space")) doc.chi_space = *parse_char_space(*c, "/chi_space");
  const json& gens = require(j, "", "generators");
  expect_array(gens, "/generators");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string p = child("/generators", k);
    check_keys(gens[k], p, {"lambda", "chi", "origin"});
    doc.generators.push_back({parse_int_array(require(gens[k], p, "lambda"), child(p, "lambda")),
                              parse_int_array(require(gens[k], p, "chi"), child(p, "chi")),
                              parse_string(require(gens[k], p, "origin"), child(p, "origin"))});
  }
  if (const json* x = optional_field(j, "lambda_basis")) doc.lambda_basis = parse_int_arrays(*x, "/lambda_basis");
  if (const json* x = optional_field(j, "sigma_used")) doc.sigma_used = parse_small_array(*x, "/sigma_used");
  if (const json* x = optional_field(j, "ker_iota")) doc.ker_iota = parse_int_arrays(*x, "/ker_iota");
  if (const json* x = optional_field(j, "pi12")) doc.pi12 = parse_small_array(*x, "/pi12");
  if (const json* x = optional_field(j, "rho_table")) {
    expect_array(*x, "/rho_table");
    for (std::size_t r = 0; r < x->size(); ++r) {
      const std::string p = child("/rho_table", r);
      expect_array((*x)[r], p);
      std::vector<std::optional<Int>> row;
      for (std::size_t c = 0; c < (*x)[r].size(); ++c) {
        const json& v = (*x)[r][c];
        if (v.is_null()) row.emplace_back();
        else row.emplace_back(parse_int(v, child(p, c)));
      }
      doc.rho_table.push_back(std::move(row));
    }
  }
  if (const json* x = optional_field(j, "xi3")) {
    expect_array(*x, "/xi3");
    for (std::size_t k = 0; k < x->size(); ++k) {
      const std::string p = child("/xi3", k);
      const json& e = (*x)[k];
      check_keys(e, p, {"mu", "lift", "unique", "particular", "relations", "equations"});
      Xi3Out o;
      o.mu = parse_small(require(e, p, "mu"), child(p, "mu"));
      o.lift = parse_int_array(require(e, p, "lift"), child(p, "lift"));
      o.unique = parse_bool(require(e, p, "unique"), child(p, "unique"));
      o.particular = parse_int_array(require(e, p, "particular"), child(p, "particular"));
      o.relations = parse_int_arrays(require(e, p, "relations"), child(p, "relations"));
      o.echelon = parse_int_arrays(require(e, p, "equations"), child(p, "equations"));
      doc.xi3.push_back(std::move(o));
    }
  }
  if (const json* x = optional_field(j, "pi_map")) {
    expect_array(*x, "/pi_map");
    for (std::size_t k = 0; k < x->size(); ++k) {
      const std::string p = child("/pi_map", k);
      check_keys((*x)[k], p, {"root", "pi"});
      doc.pi_map.push_back({parse_small_array(require((*x)[k], p, "root"), child(p, "root")),
                            parse_small(require((*x)[k], p, "pi"), child(p, "pi"))});
    }
  }
  if (const json* x = optional_field(j, "phi")) doc.phi = parse_int_arrays(*x, "/phi");
  if (const json* x = optional_field(j, "roots")) {
    expect_array(*x, "/roots");
    for (std::size_t k = 0; k < x->size(); ++k) {
      const std::string p = child("/roots", k);
      check_keys((*x)[k], p, {"root", "weight", "height"});
      doc.roots.push_back({parse_small_array(require((*x)[k], p, "root"), child(p, "root")),
                           parse_int_array(require((*x)[k], p, "weight"), child(p, "weight")),
                           parse_small(require((*x)[k], p, "height"), child(p, "height"))});
    }
  }
  if (const json* x = optional_field(j, "checks")) {
    expect_array(*x, "/checks");
    for (std::size_t k = 0; k < x->size(); ++k) {
      const std::string p = child("/checks", k);
      const json& e = (*x)[k];
      check_keys(e, p, {"alpha", "verdict", "ideal_in_h_u", "commutes", "ideal"});
      CheckOut c;
      c.alpha = parse_small(require(e, p, "alpha"), child(p, "alpha"));
      c.verdict = parse_string(require(e, p, "verdict"), child(p, "verdict"));
      c.ideal_in_h_u = parse_bool(require(e, p, "ideal_in_h_u"), child(p, "ideal_in_h_u"));
      c.commutes = parse_bool(require(e, p, "commutes"), child(p, "commutes"));
      const json& ideal = require(e, p, "ideal");
      const std::string ip = child(p, "ideal");
      expect_array(ideal, ip);
      for (std::size_t v = 0; v < ideal.size(); ++v) {
        const std::string vp = child(ip, v);
        expect_array(ideal[v], vp);
        std::vector<AlgTermOut> terms;
        for (std::size_t t = 0; t < ideal[v].size(); ++t) {
          const std::string tp = child(vp, t);
          const json& tj = ideal[v][t];
          check_keys(tj, tp, {"root", "h", "coeff"});
          AlgTermOut term;
          if (const json* r = optional_field(tj, "root")) term.root = parse_small_array(*r, child(tp, "root"));
          else term.h = parse_small(require(tj, tp, "h"), child(tp, "h"));
          term.coeff = parse_rational(require(tj, tp, "coeff"), child(tp, "coeff"));
          terms.push_back(std::move(term));
        }
        c.ideal.push_back(std::move(terms));
      }
      doc.checks.push_back(std::move(c));
    }
  }
  const json& diags = require(j, "", "diagnostics");
  expect_array(diags, "/diagnostics");
  for (std::size_t k = 0; k < diags.size(); ++k) {
    const std::string p = child("/diagnostics", k);
    check_keys(diags[k], p, {"severity", "code", "message", "data"});
    Diagnostic d;
    d.severity = severity_from_string(parse_string(require(diags[k], p, "severity"), child(p, "severity")),
                                      child(p, "severity"));
    d.code = parse_string(require(diags[k], p, "code"), child(p, "code"));
    d.message = parse_string(require(diags[k], p, "message"), child(p, "message"));
    const json& data = require(diags[k], p, "data");
    expect_object(data, child(p, "data"));
    for (auto it = data.begin(); it != data.end(); ++it)
      d.data[it.key()] = parse_string(it.value(), child(child(p, "data"), it.key()));
    doc.diagnostics.push_back(std::move(d));
  }
  const json& meta = require(j, "", "meta");
  check_keys(meta, "/meta", {"tool", "version", "input_hash"});
  doc.tool = parse_string(require(meta, "/meta", "tool"), "/meta/tool");
  doc.version = parse_string(require(meta, "/meta", "version"), "/meta/version");
  doc.input_hash = parse_string(require(meta, "/meta", "input_hash"), "/meta/input_hash");
  return doc;
}

std::string render_weight(const IntVec& w) {
  std::vector<std::pair<Int, std::string>> t;
  for (std::size_t i = 0; i < w.size(); ++i) t.emplace_back(w[i], "ϖ" + std::to_string(i + 1));
  return combination(t);
}

std::string render_character(const IntVec& chi, const CharSpace& space) {
  std::vector<std::pair<Int, std::string>> t;
  for (std::size_t i = 0; i < chi.size(); ++i) t.emplace_back(chi[i], space.name(i));
  return combination(t);
}

std::string render_biweight(const GeneratorOut& g, const CharSpace& space) {
  return "(" + render_weight(g.lambda) + ", " + render_character(g.chi, space) + ")";
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace ewm::io
