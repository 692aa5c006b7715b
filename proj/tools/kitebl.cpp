// kitebl: command-line front end for the kite library.
//
// Exit codes: 0 pass, 1 semantic failure, 2 parse/usage error, 3 resource
// bound exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kitebl/bl_verifier.hpp"
#include "kitebl/errors.hpp"
#include "kitebl/filters.hpp"
#include "kitebl/hoop.hpp"
#include "kitebl/io.hpp"
#include "kitebl/kite.hpp"
#include "kitebl/structure.hpp"

namespace fs = std::filesystem;
using namespace kitebl;

namespace {

enum Exit : int { ok = 0, failed = 1, usage = 2, bound = 3 };

bool quiet = false;

std::ostream& out() {
  static std::ostringstream sink;
  if (quiet) {
    sink.str({});
    return sink;
  }
  return std::cout;
}

EnumerationOptions enumeration_options() {
  EnumerationOptions opt;
  if (const char* env = std::getenv("KITEBL_ENUM_BOUND")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string_view(env).size() || v == 0) throw std::invalid_argument(env);
      opt.bound = v;
    } catch (const std::exception&) {
      throw ParseError(std::string("KITEBL_ENUM_BOUND is not a positive integer: ") + env, 0);
    }
  }
  return opt;
}

std::string join_names(const std::vector<Elem>& xs, auto&& name) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ", ";
    s += name(xs[k]);
  }
  return s;
}

void print_violations(const AxiomReport& r, auto&& name) {
  for (const auto& v : r.violations) {
    out() << "  violation: " << v.axiom << " at (" << join_names(v.witness, name) << ")\n";
  }
}

/// A hoop argument is a file path, or a catalog name when no such file exists.
FiniteHoop load_hoop(const std::string& arg) {
  if (!fs::exists(arg)) {
    try {
      return catalog_hoop(arg);
    } catch (const ParseError&) {
      throw ParseError("no such file or catalog hoop: " + arg, 0);
    }
  }
  return io::hoop_from_text(io::read_file(arg));
}

// ------------------------------------------------------------ kite spec flags

struct SpecArgs {
  std::string hoop;
  std::string spec_file;
  std::optional<std::size_t> i_size;
  std::optional<std::size_t> j_size;
  std::vector<Elem> lambda;
  std::vector<Elem> rho;
  bool force = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("hoop", hoop, "Hoop file or catalog name");
    cmd->add_option("--spec", spec_file, "Kite spec file (instead of the hoop and map flags)");
    cmd->add_option("-I,--I,--i-size", i_size, "Size of I");
    cmd->add_option("-J,--J,--j-size", j_size, "Size of J (defaults to the length of --lambda)");
    cmd->add_option("--lambda", lambda, "Images of lambda, comma separated")->delimiter(',');
    cmd->add_option("--rho", rho, "Images of rho, comma separated")->delimiter(',');
    cmd->add_flag("--force", force, "Build over a non-basic hoop; the result is marked unverified");
  }

  std::pair<FiniteHoop, KiteSpec> resolve() const {
    if (!spec_file.empty()) {
      if (!hoop.empty() || i_size || j_size || !lambda.empty() || !rho.empty()) {
        throw ParseError("--spec cannot be combined with a hoop or map flags", 0);
      }
      const auto f = io::spec_file_from_text(io::read_file(spec_file));
      return {io::resolve_hoop(f, fs::path(spec_file).parent_path()), f.spec};
    }
    if (hoop.empty()) throw ParseError("a hoop file or --spec is required", 0);
    if (!i_size) throw ParseError("--I is required", 0);
    KiteSpec s{*i_size, j_size.value_or(lambda.size()), lambda, rho};
    s.validate();
    return {load_hoop(hoop), std::move(s)};
  }
};

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& path, std::string kind) {
  const auto text = io::read_file(path);
  if (kind.empty()) kind = io::detect_kind(text);

  if (kind == "hoop") {
    const auto h = io::hoop_from_text(text);
    const auto name = [&](Elem e) { return h.element_name(e); };
    out() << "kind: hoop\n";
    if (!h.name().empty()) out() << "name: " << h.name() << "\n";
    out() << "size: " << h.size() << "\n";
    const auto r = check_pseudo_hoop(h);
    if (!r.passed()) {
      out() << "pseudo hoop: FAILED\n";
      print_violations(r, name);
      return failed;
    }
    out() << "pseudo hoop: passed\n";
    out() << "basic: " << (check_basic(h) ? "yes" : "no") << "\n";
    out() << "wajsberg: " << (check_wajsberg(h) ? "yes" : "no") << "\n";
    out() << "commutative: " << (check_commutative(h) ? "yes" : "no") << "\n";
    return ok;
  }
  if (kind == "bl") {
    const auto b = io::bl_from_text(text);
    const auto name = [&](Elem e) { return b.label(e); };
    out() << "kind: bl\n";
    if (!b.name().empty()) out() << "name: " << b.name() << "\n";
    out() << "size: " << b.size() << "\n";
    const auto r = check_pseudo_bl(b);
    if (!r.passed()) {
      out() << "pseudo BL: FAILED\n";
      print_violations(r, name);
      return failed;
    }
    out() << "pseudo BL: passed\n";
    return ok;
  }
  throw ParseError("cannot verify objects of kind '" + kind + "'", 0);
}

// --------------------------------------------------------------------- kite

std::string negation_status(const FiniteBL& b, const NegationCheck& c) {
  if (c.holds) return "yes";
  return "no (witness " + b.label(*c.witness) + ")";
}

int cmd_kite(const SpecArgs& args, const std::string& out_path) {
  const auto [h, spec] = args.resolve();
  BuildOptions opt;
  opt.force = args.force;
  const auto k = build_kite(h, spec, opt);

  out() << "kite: " << k.name() << "\n";
  out() << "size: " << k.size() << " (" << Kite(h, spec).lower_size() << " lower)\n";
  if (!k.provenance().empty()) out() << "note: " << k.provenance() << "\n";

  const auto r = check_pseudo_bl(k);
  out() << "pseudo BL: " << (r.passed() ? "yes" : "no") << "\n";
  print_violations(r, [&](Elem e) { return k.label(e); });
  out() << "good: " << negation_status(k, is_good(k)) << "\n";
  out() << "MV: " << negation_status(k, is_pseudo_mv(k)) << "\n";
  out() << "components: " << connected_components(spec).components.size() << "\n";
  out() << "class: " << classify_finite(spec).tag() << "\n";
  if (h.is_trivial()) {
    out() << "subdirectly irreducible: n/a (trivial hoop)\n";
  } else {
    const bool si = irreducibility_criterion(h, spec, enumeration_options());
    out() << "subdirectly irreducible: " << (si ? "yes" : "no") << "\n";
  }

  if (!out_path.empty()) {
    io::write_file(out_path, io::to_text(k));
    out() << "wrote " << out_path << "\n";
  }
  return ok;
}

// ------------------------------------------------------------------ analyze

std::string filter_text(const FiniteBL& b, const FilterSet& f) {
  return "{" + join_names(f.members(), [&](Elem e) { return b.label(e); }) + "}";
}

std::optional<FilterSet> upper_block(const FiniteBL& b) {
  if (b.elements().empty()) return std::nullopt;
  std::vector<Elem> up;
  for (Elem e = 0; e < b.size(); ++e) {
    if (b.elements()[e].part == Part::upper) up.push_back(e);
  }
  return FilterSet(std::move(up));
}

int cmd_analyze(const std::string& path, bool filters, bool monolith,
                const std::vector<std::string>& witnesses) {
  const auto b = io::bl_from_text(io::read_file(path));
  const auto opt = enumeration_options();
  out() << "size: " << b.size() << "\n";

  if (filters) {
    const auto all = enumerate_filters(b, opt);
    const auto normal = enumerate_normal_filters(b, opt);
    out() << "filters: " << all.size() << "\n";
    for (const auto& f : all) out() << "  " << filter_text(b, f) << "\n";
    out() << "normal filters: " << normal.size() << "\n";
    for (const auto& f : normal) out() << "  " << filter_text(b, f) << "\n";
  }

  if (monolith) {
    const auto si = is_subdirectly_irreducible(b, opt);
    if (!si.irreducible) {
      out() << "monolith: none (not subdirectly irreducible)\n";
    } else {
      const auto& m = *si.monolith;
      const auto up = upper_block(b);
      const std::string what = up && *up == m ? "A^I" : filter_text(b, m);
      out() << "monolith: " << what << " (" << m.size() << " elements)\n";
    }
  }

  for (const auto& w : witnesses) {
    if (w == "good") {
      const auto c = is_good(b);
      if (c.holds) {
        out() << "good: yes\n";
        continue;
      }
      const Elem x = *c.witness;
      const auto [minus, tilde] = negations(b, x);
      const Elem minus_tilde = negations(b, minus).second;
      const Elem tilde_minus = negations(b, tilde).first;
      out() << "good: no\n";
      out() << "  x = " << b.label(x) << "\n";
      out() << "  x-~ = " << b.label(minus_tilde) << "\n";
      out() << "  x~- = " << b.label(tilde_minus) << "\n";
    } else if (w == "comm") {
      const auto p = find_noncommutative_witness(b);
      if (!p) {
        out() << "commutative: yes\n";
        continue;
      }
      const auto [x, y] = *p;
      out() << "commutative: no\n";
      out() << "  x = " << b.label(x) << ", y = " << b.label(y) << "\n";
      out() << "  x*y = " << b.label(b.mul(x, y)) << "\n";
      out() << "  y*x = " << b.label(b.mul(y, x)) << "\n";
    }
  }
  return ok;
}

// ---------------------------------------------------------------- decompose

std::string index_list(const std::vector<Elem>& xs) {
  return "[" + join_names(xs, [](Elem e) { return std::to_string(e); }) + "]";
}

int cmd_decompose(const SpecArgs& args, const std::string& out_dir) {
  const auto [h, spec] = args.resolve();
  if (!check_basic(h)) throw PreconditionError("hoop is not basic");
  const auto opt = enumeration_options();

  const auto family = h.is_trivial() ? std::vector<FilterSet>{}
                                     : irreducible_quotient_family(h, opt);
  out() << "hoop factors: " << std::max<std::size_t>(family.size(), 1) << "\n";
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto q = quotient(h, family[k]);
    out() << "  hoop factor " << k << ": filter " << io::to_text(family[k]) << ", size "
          << q.size() << "\n";
  }
  out() << "components: " << connected_components(spec).components.size() << "\n";

  const auto factors = subdirect_representation(h, spec, opt);
  out() << "factors: " << factors.size() << "\n";
  if (factors.size() == 1 && !h.is_trivial() && irreducibility_criterion(h, spec, opt)) {
    out() << "already subdirectly irreducible\n";
  }
  // subdirect_representation throws unless the joint map is injective and
  // every factor satisfies the criterion
  out() << "joint map injective: yes\n";

  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    const bool si = f.hoop.is_trivial() || irreducibility_criterion(f.hoop, f.spec, opt);
    out() << "factor " << k << ": I" << index_list(f.i_indices) << " J"
          << index_list(f.j_indices) << ", hoop size " << f.hoop.size() << ", kite size "
          << f.kite.size() << ", class " << classify_finite(f.spec).tag()
          << ", subdirectly irreducible: " << (si ? "yes" : "no") << "\n";
    if (!out_dir.empty()) {
      const auto file = fs::path(out_dir) / ("factor-" + std::to_string(k) + ".json");
      io::write_file(file, io::to_text(io::KiteSpecFile{f.hoop, f.spec}));
      out() << "  wrote " << file.string() << "\n";
    }
  }
  return ok;
}

// ------------------------------------------------------------------ catalog

int cmd_catalog_list() {
  out() << "trivial            size 1\n"
        << "godel:n            size n (Goedel chain)\n"
        << "lukasiewicz:n      size n (Lukasiewicz chain)\n"
        << "product:A,B        size |A|*|B|\n"
        << "osum:A,B           size |A|+|B|-1 (ordinal sum, A below B)\n";
  return ok;
}

int cmd_catalog_emit(const std::string& name, const std::string& out_path) {
  const auto h = catalog_hoop(name);
  const auto text = io::to_text(h);
  if (out_path.empty()) {
    out() << text;
  } else {
    io::write_file(out_path, text);
  }
  return ok;
}

int run(int argc, char** argv) {
  CLI::App app{"Kite pseudo BL-algebras over finite basic pseudo hoops"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("-q,--quiet", quiet, "Suppress reports; exit codes are unchanged");

  auto* verify = app.add_subcommand("verify", "Check a hoop or BL-algebra file against its axioms");
  std::string verify_path, verify_kind;
  verify->add_option("path", verify_path, "Input file")->required();
  verify->add_option("--kind", verify_kind, "Override the detected kind")
      ->check(CLI::IsMember({"hoop", "bl"}));

  auto* kite = app.add_subcommand("kite", "Build a kite and report its properties");
  SpecArgs kite_args;
  std::string kite_out;
  kite_args.add_to(kite);
  kite->add_option("-o,--out", kite_out, "Write the kite as a BL-algebra file");

  auto* analyze = app.add_subcommand("analyze", "Filters, monolith and witnesses of a BL file");
  std::string analyze_path;
  bool want_filters = false, want_monolith = false;
  std::vector<std::string> witnesses;
  analyze->add_option("path", analyze_path, "BL-algebra file")->required();
  analyze->add_flag("--filters", want_filters, "List all filters and normal filters");
  analyze->add_flag("--monolith", want_monolith, "Report the monolith, if any");
  analyze->add_option("--witness", witnesses, "Print a witness: good or comm")
      ->check(CLI::IsMember({"good", "comm"}));

  auto* decompose = app.add_subcommand("decompose", "Subdirect representation of a kite");
  SpecArgs dec_args;
  std::string dec_dir;
  dec_args.add_to(decompose);
  decompose->add_option("--out-dir", dec_dir, "Directory for factor spec files");

  auto* catalog = app.add_subcommand("catalog", "Built-in hoops");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog names");
  auto* emit = catalog->add_subcommand("emit", "Emit a catalog hoop file");
  std::string emit_name, emit_out;
  emit->add_option("name", emit_name, "e.g. godel:3 or product:godel:2,lukasiewicz:3")->required();
  emit->add_option("-o,--out", emit_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (*verify) return cmd_verify(verify_path, verify_kind);
  if (*kite) return cmd_kite(kite_args, kite_out);
  if (*analyze) return cmd_analyze(analyze_path, want_filters, want_monolith, witnesses);
  if (*decompose) return cmd_decompose(dec_args, dec_dir);
  if (*list) return cmd_catalog_list();
  if (*emit) return cmd_catalog_emit(emit_name, emit_out);
  return usage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BoundExceeded& e) {
    std::cerr << "kitebl: " << e.what() << "\n";
    return bound;
  } catch (const ParseError& e) {
    std::cerr << "kitebl: parse error: " << e.what() << "\n";
    return usage;
  } catch (const StructuralError& e) {
    std::cerr << "kitebl: malformed input: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "kitebl: " << e.what() << "\n";
    return failed;
  }
}
