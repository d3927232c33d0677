#include "symtutte/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "symtutte/arrangement_io.hpp"
#include "symtutte/egf.hpp"
#include "symtutte/errors.hpp"
#include "symtutte/families.hpp"
#include "symtutte/finite_field.hpp"
#include "symtutte/symmetric.hpp"
#include <CLI11.hpp>

namespace symtutte {

namespace {

struct Options {
  std::string file;
  bool json = false;
  unsigned threads = 0;
  std::string method = "definition";
  std::vector<unsigned> primes;
  std::string backend = "prime-field";
  bool all_methods = false;
  std::string identity;
  unsigned q = 5;
  unsigned m = 1;
  unsigned p = 1;
  unsigned order = 4;
  std::string source = "definition";
  std::string family;
  std::vector<unsigned> family_params;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Backend backend_of(const std::string& name) {
  if (name == "prime-field") return Backend::PrimeField;
  if (name == "paper") return Backend::PaperLiteral;
  throw UsageError("unknown backend '" + name + "' (expected paper or prime-field)");
}

RingSpec spec_for(Backend b, unsigned m, unsigned q) {
  return b == Backend::PrimeField ? RingSpec::prime_field(m, q) : RingSpec::paper_literal(m, q);
}

ArrangementFile read_input(const Options& o, std::istream& in) {
  std::string text;
  if (!o.file.empty()) {
    std::ifstream f(o.file);
    if (!f) throw UsageError("cannot open " + o.file);
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_arrangement(text);
}

void print(std::ostream& out, const BivarPoly& p, bool json) {
  out << (json ? to_json(p) : p.to_string()) << "\n";
}

void print(std::ostream& out, const Poly& p, const std::string& var, bool json) {
  out << (json ? to_json(p, var) : p.to_string(var)) << "\n";
}

std::vector<RingSpec> specs_for(const Arrangement& a, const Options& o, std::size_t count) {
  const Backend b = backend_of(o.backend);
  if (o.primes.empty()) return select_valid_specs(a, b, count);
  std::vector<RingSpec> specs;
  for (auto q : o.primes) {
    const RingSpec s = spec_for(b, a.root_order(), q);
    if (!check_correct_reduction(a, s))
      throw UsageError("prime " + std::to_string(q) + " does not give a correct reduction over " + s.describe());
    specs.push_back(s);
  }
  return specs;
}

// Representatives and symmetry kind: from the file, else by orbit discovery.
std::optional<std::pair<SymmetryKind, std::vector<RepresentativeEquation>>> symmetry_of(const ArrangementFile& f,
                                                                                      const Arrangement& a) {
  if (f.kind) return std::make_pair(*f.kind, f.reps);
  // Prefer the colored structure when there is one; it is the finer statement.
  for (auto kind : {SymmetryKind::CSH, SymmetryKind::SH}) {
    if (kind == SymmetryKind::CSH && a.root_order() == 1) continue;
    try {
      return std::make_pair(kind, discover_representatives(a, kind));
    } catch (const InvalidParameter&) {
    }
  }
  return std::nullopt;
}

// The ordinary coboundary cob(q, t) by the requested method.
BivarPoly coboundary_by(const std::string& method, const ArrangementFile& f, const Arrangement& a,
                        const Options& o) {
  const unsigned l = l_of(a.root_order());
  if (method == "definition") return coboundary(a);
  const unsigned r = rank(a);
  if (method == "finite-field") return interpolate_coboundary(a, specs_for(a, o, std::max(r, 1u)), o.threads).unscale_first(l);
  if (method == "symmetric") {
    const auto sym = symmetry_of(f, a);
    if (!sym) throw UsageError("the symmetric method needs an sh or csh arrangement");
    std::vector<Integer> nodes;
    std::vector<Poly> values;
    for (const auto& s : specs_for(a, o, std::max(r, 1u))) {
      nodes.emplace_back(static_cast<unsigned long>(s.ring_size()));
      values.push_back(sym->first == SymmetryKind::SH ? coboundary_sh_closed_form(sym->second, a.dim(), s, r)
                                                      : coboundary_csh_closed_form(sym->second, a.dim(), s, r));
    }
    return interpolate_coboundary_values(nodes, values, r);
  }
  throw UsageError("unknown method '" + method + "'");
}

int run_verify(const ArrangementFile& f, const Arrangement& a, const Options& o, std::ostream& out) {
  const BivarPoly def = coboundary(a);
  const unsigned r = rank(a);
  bool ok = true;
  out << "definition: " << def.to_string() << "\n";
  out << "tutte-coboundary relation: " << (tutte_coboundary_check(a) ? "ok" : "MISMATCH") << "\n";
  ok = ok && tutte_coboundary_check(a);

  const auto specs = specs_for(a, o, r + 2);
  for (const auto& s : specs) {
    const Poly got = coboundary_at_prime(a, s, o.threads);
    const Poly want = expected_at_prime(a, s);
    const bool eq = got == want;
    ok = ok && eq;
    out << "point count over " << s.describe() << ": " << (eq ? "ok" : "MISMATCH");
    if (!eq) out << "\n  expected " << want.to_string("t") << "\n  got      " << got.to_string("t");
    out << "\n";
  }
  {
    const std::vector<RingSpec> fit(specs.begin(), specs.begin() + std::min<std::size_t>(specs.size(), r + 1));
    const BivarPoly ff = interpolate_coboundary(a, fit, o.threads).unscale_first(l_of(a.root_order()));
    const bool eq = ff == def;
    ok = ok && eq;
    out << "finite-field interpolation: " << (eq ? "ok" : "MISMATCH");
    if (!eq) out << "\n  got " << ff.to_string();
    out << "\n";
  }
  if (o.all_methods) {
    const auto sym = symmetry_of(f, a);
    if (!sym) {
      out << "symmetric: not applicable (no sh or csh structure)\n";
    } else {
      bool sym_ok = true;
      for (const auto& s : specs) {
        const Poly closed = sym->first == SymmetryKind::SH ? coboundary_sh_closed_form(sym->second, a.dim(), s, r)
                                                           : coboundary_csh_closed_form(sym->second, a.dim(), s, r);
        const Poly want = expected_at_prime(a, s);
        if (closed != want) {
          sym_ok = false;
          out << "symmetric closed form over " << s.describe() << ": MISMATCH\n  expected " << want.to_string("t")
              << "\n  got      " << closed.to_string("t") << "\n";
        }
      }
      ok = ok && sym_ok;
      out << "symmetric (" << to_string(sym->first) << ") closed form: " << (sym_ok ? "ok" : "MISMATCH") << "\n";
    }
  }
  out << (ok ? "verified" : "verification FAILED") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

LhsSource source_of(const std::string& s) {
  if (s == "definition") return LhsSource::Definition;
  if (s == "point-count") return LhsSource::PointCount;
  if (s == "closed-form") return LhsSource::ClosedForm;
  throw UsageError("unknown source '" + s + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tutte and coboundary polynomials of hyperplane arrangements over Z[w_m]"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-f,--file", o.file, "Arrangement file (default: standard input)");
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--threads", o.threads, "Worker threads for point counting (0 = all cores)");

  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial T(x, y)");
  auto* cob_cmd = app.add_subcommand("coboundary", "Coboundary polynomial cob(q, t)");
  auto* zeta_cmd = app.add_subcommand("zeta-coboundary", "w-coboundary polynomial cob(q^{l_m}, t)");
  for (auto* c : {cob_cmd, zeta_cmd}) {
    c->add_option("--method", o.method, "definition | finite-field | symmetric")
        ->check(CLI::IsMember({"definition", "finite-field", "symmetric"}));
    c->add_option("--primes", o.primes, "Primes for the finite-field and symmetric methods")->delimiter(',');
    c->add_option("--backend", o.backend, "paper | prime-field")->check(CLI::IsMember({"paper", "prime-field"}));
  }
  auto* char_cmd = app.add_subcommand("characteristic", "Characteristic polynomial chi(q)");
  auto* poin_cmd = app.add_subcommand("poincare", "Poincare polynomial of the complement");
  auto* reg_cmd = app.add_subcommand("regions", "Number of regions of a real arrangement");
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the computation methods");
  verify_cmd->add_flag("--all-methods", o.all_methods, "Include the symmetric closed forms");
  verify_cmd->add_option("--primes", o.primes, "Primes to use")->delimiter(',');
  verify_cmd->add_option("--backend", o.backend, "paper | prime-field")->check(CLI::IsMember({"paper", "prime-field"}));
  auto* egf_cmd = app.add_subcommand("egf", "Check a generating-function identity");
  egf_cmd->add_option("--identity", o.identity, "A | B | D | In | Gmpn | Gmmn")->required();
  egf_cmd->add_option("--q", o.q, "Prime q");
  egf_cmd->add_option("--m", o.m, "Root order (G identities)");
  egf_cmd->add_option("--p", o.p, "Parameter p of G(m,p,n)");
  egf_cmd->add_option("--order", o.order, "Truncation order N");
  egf_cmd->add_option("--backend", o.backend, "paper | prime-field")->check(CLI::IsMember({"paper", "prime-field"}));
  egf_cmd->add_option("--source", o.source, "definition | point-count | closed-form");
  auto* fam_cmd = app.add_subcommand("family", "Print a named arrangement family");
  fam_cmd->add_option("name", o.family, "A | B | D | I | G")->required();
  fam_cmd->add_option("params", o.family_params, "n, or m p n for G");

  std::vector<std::string> argv_store{"symtutte"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fam_cmd->parsed()) {
      const auto fam = family_by_name(o.family, o.family_params);
      out << "# " << fam.name << "\n" << render_arrangement(file_from(fam.arrangement));
      return kExitOk;
    }
    if (egf_cmd->parsed()) {
      const EgfParams params{o.q, o.m, o.p, backend_of(o.backend)};
      const auto report = egf_check(identity_from_name(o.identity), params, o.order, source_of(o.source));
      out << report.to_string();
      return report.all_equal() ? kExitOk : kExitMismatch;
    }
    const ArrangementFile file = read_input(o, in);
    const Arrangement a = file.arrangement();
    if (tutte_cmd->parsed()) {
      print(out, tutte(a), o.json);
    } else if (cob_cmd->parsed()) {
      print(out, coboundary_by(o.method, file, a, o), o.json);
    } else if (zeta_cmd->parsed()) {
      print(out, coboundary_by(o.method, file, a, o).scale_first(l_of(a.root_order())), o.json);
    } else if (char_cmd->parsed()) {
      print(out, characteristic(a), "q", o.json);
    } else if (poin_cmd->parsed()) {
      print(out, poincare(a), "q", o.json);
    } else if (reg_cmd->parsed()) {
      if (a.root_order() > 2) throw UsageError("regions needs a real arrangement (m <= 2)");
      out << region_count(a) << "\n";
    } else if (verify_cmd->parsed()) {
      return run_verify(file, a, o, out);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitTheoremViolation;
  } catch (const FreenessViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitTheoremViolation;
  } catch (const FlatSizeViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitTheoremViolation;
  } catch (const InconsistencyError& e) {
    err << "theorem violation: per-ring values are not consistent with one polynomial: " << e.what() << "\n";
    return kExitTheoremViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace symtutte
