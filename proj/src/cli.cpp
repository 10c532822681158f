#include "ewm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ewm/error.hpp"

namespace ewm::cli {

namespace {

// "SchemaError" -> "SCHEMA_ERROR"
std::string diagnostic_code(std::string_view camel) {
  std::string out;
  for (char c : camel) {
    if (c >= 'A' && c <= 'Z' && !out.empty()) out += '_';
    out += static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
  }
  return out;
}

std::vector<int> one_based(const IndexSet& s) {
  std::vector<int> out;
  for (int i : s) out.push_back(i + 1);
  return out;
}

io::GeneratorOut generator_out(const Biweight& b) {
  return {b.lambda.coeffs, b.chi.coords(), std::string(to_string(b.origin))};
}

std::vector<io::AlgTermOut> terms_out(const ChevalleyAlgebra& alg, const AlgVec& v) {
  std::vector<io::AlgTermOut> out;
  for (const auto& [index, c] : v.terms()) {
    io::AlgTermOut t;
    if (index < alg.num_roots()) t.root = alg.root(index).coeffs;
    else t.h = static_cast<int>(index - alg.num_roots()) + 1;
    t.coeff = c;
    out.push_back(std::move(t));
  }
  return out;
}

int fill_general(io::OutputDocument& doc, const GeneralDatum& d, const RunOptions& opts) {
  const MonoidResult r = compute_monoid(d);
  doc.chi_space = *d.char_space_k;
  for (const auto& g : r.generators) doc.generators.push_back(generator_out(g));
  doc.ker_iota = r.ker_iota;
  doc.lambda_basis = r.lambda_basis;
  doc.pi12 = one_based(r.pi12);
  doc.rho_table = r.rho_table;
  for (const auto& e : r.xi3.entries)
    doc.xi3.push_back({static_cast<int>(e.mu_index) + 1, e.lift.coeffs, e.particular, e.relations, e.echelon,
                       e.relations.empty()});
  doc.sigma_used = one_based(d.sigma_simple);
  doc.diagnostics = r.diagnostics;
  for (const auto& rep : r.necessary) {
    Diagnostic diag{Severity::Info,
                    rep.verdict == NecessaryVerdict::NecessaryPassed ? "NECESSARY_PASSED" : "NECESSARY_FAILED",
                    "necessary conditions for alpha" + std::to_string(rep.alpha + 1) + ": " +
                        std::string(to_string(rep.verdict)),
                    {{"alpha", std::to_string(rep.alpha + 1)}, {"in_lambda", rep.in_lambda ? "true" : "false"}}};
    if (rep.in_lambda) diag.data["rho"] = to_string(rep.rho);
    doc.diagnostics.push_back(std::move(diag));
  }
  if (r.nonunique && !opts.allow_nonunique) {
    doc.status = "nonunique";
    return 4;
  }
  return 0;
}

int fill_solvable(io::OutputDocument& doc, const SolvableDatum& d) {
  const SolvableResult r = solvable_monoid(d);
  doc.chi_space = *d.codomain;
  for (const auto& g : r.generators) doc.generators.push_back(generator_out(g));
  doc.lambda_basis = lambda_lattice(to_general_datum(d));
  doc.sigma_used = one_based(r.sigma);
  for (std::size_t k = 0; k < d.active_roots.size(); ++k)
    doc.pi_map.push_back({d.active_roots[k].coeffs, r.pi_map[k] + 1});
  for (const auto& phi : r.phi) doc.phi.push_back(phi.coords());
  return 0;
}

int fill_roots(io::OutputDocument& doc, const RootSystem& rs) {
  for (const auto& r : rs.positive_roots()) doc.roots.push_back({r.coeffs, rs.root_to_weight(r).coeffs, r.height()});
  return 0;
}

int fill_check(io::OutputDocument& doc, const io::CheckRequest& c) {
  for (int a : c.alphas) {
    const SufficientReport rep = check_sufficient_lie(*c.alg, a, c.p_u, c.h_u, c.s_prime);
    io::CheckOut out;
    out.alpha = a + 1;
    for (const auto& v : rep.ideal) out.ideal.push_back(terms_out(*c.alg, v));
    out.ideal_in_h_u = rep.ideal_in_h_u;
    out.commutes = rep.commutes;
    out.verdict = std::string(to_string(rep.verdict));
    doc.checks.push_back(std::move(out));
  }
  return 0;
}

}  // namespace

Evaluation evaluate(std::string_view input_text, io::Mode mode, const RunOptions& opts) {
  Evaluation ev;
  io::OutputDocument& doc = ev.doc;
  doc.mode = std::string(io::to_string(mode));
  doc.version = std::string(kVersion);
  doc.input_hash = io::fnv1a_hex(input_text);
  try {
    const io::InputDocument in = io::parse_input(input_text, mode);
    doc.group = in.rs->ctype().to_string();
    switch (mode) {
      case io::Mode::General: ev.exit_code = fill_general(doc, *in.general, opts); break;
      case io::Mode::Solvable: ev.exit_code = fill_solvable(doc, *in.solvable); break;
      case io::Mode::Roots: ev.exit_code = fill_roots(doc, *in.rs); break;
      case io::Mode::Check: ev.exit_code = fill_check(doc, *in.check); break;
    }
  } catch (const Error& e) {
    doc.generators.clear();
    Diagnostic diag{Severity::Error, diagnostic_code(to_string(e.code())), e.what(), {}};
    if (e.code() == ErrorCode::SchemaError) {
      const std::string msg = e.what();
      diag.data["pointer"] = msg.substr(0, msg.find(": "));
      doc.status = "schema_error";
    } else {
      doc.status = is_mathematical(e.code()) ? "inconsistent" : "invalid_input";
    }
    doc.diagnostics.push_back(std::move(diag));
    ev.exit_code = is_mathematical(e.code()) ? 3 : 2;
    return ev;
  }
  if (ev.exit_code == 0 && opts.strict) {
    const auto warnings = std::count_if(doc.diagnostics.begin(), doc.diagnostics.end(),
                                        [](const Diagnostic& d) { return d.severity == Severity::Warning; });
    if (warnings > 0) {
      doc.status = "strict_failure";
      doc.diagnostics.push_back({Severity::Error, "STRICT_WARNINGS",
                                 std::to_string(warnings) + " warning(s) treated as errors", {}});
      ev.exit_code = 3;
    }
  }
  return ev;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended weight monoids of spherical homogeneous spaces", "ewm"};
  std::string mode_name;
  std::string input = "-";
  std::string format = "json";
  RunOptions opts;
  app.add_option("mode", mode_name, "general | solvable | roots | check")
      ->required()
      ->check(CLI::IsMember({"general", "solvable", "roots", "check"}));
  app.add_option("--input,-i", input, "input JSON file, - for stdin");
  app.add_option("--format,-f", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", opts.strict, "treat warnings as errors");
  app.add_flag("--allow-nonunique", opts.allow_nonunique, "report non-unique coefficients without failing");
  app.set_version_flag("--version", std::string(kVersion));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
      err << "ewm: cannot read " << input << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }

  const Evaluation ev = evaluate(text, io::mode_from_string(mode_name), opts);
  out << io::emit_output(ev.doc, format == "text" ? io::Format::Text : io::Format::Json);
  if (ev.exit_code != 0)
    for (const auto& d : ev.doc.diagnostics)
      if (d.severity != Severity::Info) err << "ewm: " << to_string(d.severity) << " " << d.code << ": " << d.message << "\n";
  return ev.exit_code;
}

}  // namespace ewm::cli
