#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sympolar/capacity.hpp"
#include "sympolar/enumeration.hpp"
#include "sympolar/errors.hpp"
#include "sympolar/generation.hpp"
#include "sympolar/io.hpp"
#include "sympolar/sequences.hpp"
#include "sympolar/suspension.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar::cli {

namespace fs = std::filesystem;

namespace {

std::string exact_and_float(const Rational& value) {
  std::ostringstream os;
  os << to_string(value) << " (" << std::setprecision(12) << to_double(value) << ")";
  return os.str();
}

// Exact rationals from the generation loop run to hundreds of digits; those
// are summarized here and written in full to the CSV.
std::string compact_exact_and_float(const Rational& value) {
  std::string exact = to_string(value);
  if (exact.size() <= 60) return exact_and_float(value);
  std::ostringstream os;
  os << exact.size() << "-character rational (" << std::setprecision(12) << to_double(value) << ")";
  return os.str();
}

fs::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

fs::path resolve_output(const std::string& explicit_path, const fs::path& out_dir, const std::string& fallback_name) {
  if (!explicit_path.empty()) return explicit_path;
  return out_dir / fallback_name;
}

void ensure_parent(const fs::path& file) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
}

// Shared option block; every field has a documented default echoed at start.
struct Config {
  std::string input;
  std::string second_input;
  std::string out;
  std::string out_dir = default_out_dir().string();
  int n = 0;
  std::string mode = "vertices";
  std::string method = "auto";
  std::optional<std::size_t> support_bound;
  std::uint64_t budget = CapacitySearchOptions{}.budget;
  std::optional<std::size_t> clique_budget;
  unsigned threads = 1;
  std::size_t dim = 4;
  std::size_t k = 4;
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::size_t max_iter = GenerationOptions{}.max_iter;
  std::string csv;
  std::string svg;
  std::string cert;
  std::string kind = "compare";
  int check = 0;
  int equal_weight = 0;
  std::string cache_dir;
  bool no_float_prepass = false;
};

Polytope load(const std::string& path) { return read_polytope_file(path); }

void write_polytope(const fs::path& path, const Polytope& p, std::ostream& out) {
  ensure_parent(path);
  write_polytope_file(path, p);
  out << "wrote " << path.string() << '\n';
}

void print_summary(const Polytope& p, std::ostream& out) {
  out << "dim " << p.dim() << ", " << p.vertices().size() << " vertices, " << p.facets().size() << " facets\n";
}

void print_witness(const SubsetCheck& check, std::ostream& out) {
  if (!check.witness) return;
  out << "witness: omega(" << check.witness->v << ", " << check.witness->w
      << ") = " << exact_and_float(check.witness->value) << '\n';
}

int cmd_power_suspend(const Config& c, std::ostream& out) {
  std::optional<fs::path> cache;
  if (!c.cache_dir.empty()) cache = fs::path(c.cache_dir);
  const Polytope p = power_suspend(c.n, cache);
  print_summary(p, out);
  write_polytope(resolve_output(c.out, c.out_dir, "power_suspend_n" + std::to_string(c.n) + ".json"), p, out);
  return kOk;
}

int cmd_suspend(const Config& c, std::ostream& out) {
  const Polytope x = load(c.input);
  std::string method = c.method;
  if (method == "auto") method = is_self_polar(x) ? "vertices" : "halfspaces";
  const Polytope p = method == "vertices" ? suspend_vertices(x) : suspend_halfspaces(x);
  out << "method " << method << '\n';
  print_summary(p, out);
  write_polytope(resolve_output(c.out, c.out_dir, fs::path(c.input).stem().string() + "_suspended.json"), p, out);
  return kOk;
}

int cmd_sympolar(const Config& c, std::ostream& out) {
  const Polytope p = symplectic_polar(load(c.input));
  print_summary(p, out);
  write_polytope(resolve_output(c.out, c.out_dir, fs::path(c.input).stem().string() + "_sympolar.json"), p, out);
  return kOk;
}

int cmd_selfpolar_check(const Config& c, std::ostream& out) {
  const Polytope p = load(c.input);
  const SubsetCheck inner = check_subset_sympolar(p);
  if (!inner.holds) {
    out << "false\nK is not contained in K^omega\n";
    print_witness(inner, out);
    return kOk;
  }
  const SubsetCheck outer = check_pairwise_omega(symplectic_polar(p).vertices());
  if (!outer.holds) {
    out << "false\nK^omega is not contained in K\n";
    print_witness(outer, out);
    return kOk;
  }
  out << "true\n";
  return kOk;
}

int cmd_volume(const Config& c, std::ostream& out) {
  out << exact_and_float(volume(load(c.input))) << '\n';
  return kOk;
}

int cmd_cj(const Config& c, std::ostream& out) {
  out << exact_and_float(c_j(load(c.input))) << '\n';
  return kOk;
}

int cmd_shadow(const Config& c, std::ostream& out) {
  out << exact_and_float(shadow_area(load(c.input))) << '\n';
  return kOk;
}

int cmd_ehz(const Config& c, std::ostream& out) {
  const Polytope p = load(c.input);
  CapacitySearchOptions options;
  options.support_bound = c.support_bound;
  options.budget = c.budget;
  options.threads = c.threads;
  options.float_prepass = !c.no_float_prepass;
  const CapacityResult r = ehz_brute_force(p, parse_generator_kind(c.mode), options);
  out << exact_and_float(r.capacity) << '\n';
  out << "generators " << r.generator_count << ", support bound " << r.support_bound << ", configurations "
      << r.configurations << ", exact solves " << r.exact_solves << ", singular skipped " << r.degenerate_skipped
      << '\n';
  const fs::path cert = resolve_output(c.cert, c.out_dir, fs::path(c.input).stem().string() + "_ehz_certificate.json");
  ensure_parent(cert);
  write_file_atomically(cert, certificate_to_json(r.certificate));
  out << "wrote " << cert.string() << '\n';
  return kOk;
}

int cmd_certify(const Config& c, std::ostream& out) {
  if (c.equal_weight > 0) {
    const CapacityCertificate cert = equal_weight_certificate(c.equal_weight);
    out << "objective " << exact_and_float(cert.objective) << ", capacity bound "
        << exact_and_float(1 / cert.objective) << '\n';
    const fs::path path =
        resolve_output(c.out, c.out_dir, "equal_weight_n" + std::to_string(c.equal_weight) + ".json");
    ensure_parent(path);
    write_file_atomically(path, certificate_to_json(cert));
    out << "wrote " << path.string() << '\n';
    return kOk;
  }
  if (c.input.empty() || c.second_input.empty())
    throw PreconditionError("certify needs POLYTOPE and CERTIFICATE files, or --equal-weight N");
  const Polytope p = load(c.input);
  const CapacityCertificate cert = certificate_from_json(read_text_file(c.second_input));
  const Rational objective = evaluate_certificate(p, cert);
  out << "objective " << exact_and_float(objective) << ", capacity bound " << exact_and_float(1 / objective) << '\n';
  return kOk;
}

int cmd_generate(const Config& c, std::ostream& out, std::ostream& err) {
  BatchOptions options;
  options.generation.max_iter = c.max_iter;
  options.threads = c.threads;
  if (!c.csv.empty()) options.csv_path = fs::path(c.csv);
  if (!c.svg.empty()) options.svg_path = fs::path(c.svg);
  if (options.csv_path) ensure_parent(*options.csv_path);
  if (options.svg_path) ensure_parent(*options.svg_path);
  const auto records = batch_generate(c.dim, c.k, c.runs, c.seed, options);

  std::optional<Rational> min_volume;
  std::optional<std::size_t> min_vertices;
  std::size_t failed = 0, not_polar = 0;
  for (const auto& r : records) {
    if (r.error) {
      ++failed;
      out << "seed " << r.seed << ": failed: " << *r.error << '\n';
      continue;
    }
    out << "seed " << r.seed << ": iterations " << r.iterations << ", vertices " << r.vertex_count << ", volume "
        << compact_exact_and_float(r.volume) << ", self-polar " << (r.self_polar ? "true" : "false") << '\n';
    if (!r.self_polar) ++not_polar;
    if (!min_volume || r.volume < *min_volume) min_volume = r.volume;
    if (!min_vertices || r.vertex_count < *min_vertices) min_vertices = r.vertex_count;
  }
  if (min_volume) out << "min volume " << compact_exact_and_float(*min_volume) << ", min vertices " << *min_vertices << '\n';
  if (c.runs == 1 && options.svg_path) err << "note: a single run produces no histogram\n";
  if (c.dim == 4 && min_volume && *min_volume < ratio(7, 2))
    err << "WARNING: a generated polytope has volume below 7/2\n";
  if (c.dim == 4 && min_vertices && *min_vertices <= 16)
    err << "WARNING: a generated polytope has at most 16 vertices\n";
  if (not_polar) err << "WARNING: " << not_polar << " run(s) stopped at max_iter without self-polarity\n";
  if (options.csv_path) out << "wrote " << options.csv_path->string() << '\n';
  return failed ? kFailure : kOk;
}

int report_enumeration(const Pm1Enumeration& result, const Config& c, std::ostream& out) {
  out << "dim " << result.dim << ": " << result.cliques << " maximal cliques, " << result.rejected
      << " not self-polar, " << result.degenerate << " lower-dimensional" << (result.partial ? " (partial)" : "")
      << '\n';
  out << "vertices  volume  count\n";
  for (const auto& cls : result.classes)
    out << cls.vertex_count << "  " << exact_and_float(cls.volume) << "  " << cls.count << '\n';
  const fs::path dir = c.out.empty() ? fs::path(c.out_dir) / ("pm1_dim" + std::to_string(result.dim)) : fs::path(c.out);
  fs::create_directories(dir);
  write_clique_report(result, dir);
  out << "wrote " << (dir / "classes.json").string() << '\n';
  return kOk;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  Pm1Options options;
  options.budget = c.clique_budget;
  options.threads = c.threads;
  return report_enumeration(enumerate_pm1(c.dim, options), c, out);
}

int cmd_table1(const Config& c, std::ostream& out) {
  Pm1Options options;
  options.threads = c.threads;
  return report_enumeration(enumerate_pm1(4, options), c, out);
}

int cmd_sequences(const Config& c, std::ostream& out) {
  const SequenceKind kind = parse_sequence_kind(c.kind);
  if (c.n > 0) {
    if (kind == SequenceKind::Compare) {
      const SequenceValue v = sequence_compare(c.n);
      out << to_string(v) << " (" << std::setprecision(12) << v.to_double() << ")\n";
    } else {
      out << exact_and_float(sequence_viterbo_ratio(c.n)) << '\n';
    }
  }
  if (c.check > 0) {
    const MonotonicityReport r = monotonicity_check(kind, c.check);
    out << to_string(kind) << " monotone up to " << r.checked_up_to << ": " << (r.holds ? "yes" : "no");
    if (r.offending_n) out << " (fails at n = " << *r.offending_n << ')';
    out << '\n'
        << "a_N / N^(1/4) = " << std::setprecision(12) << r.normalized << ", limit " << r.limit << '\n';
    if (!r.holds) return kFailure;
  }
  return kOk;
}

// Effective configuration of the chosen subcommand plus the global options,
// defaults included.
void echo_config(const CLI::App& app, const CLI::App& sub, std::ostream& err) {
  err << "config: " << sub.get_name() << '\n';
  std::istringstream all(app.config_to_str(true, false));
  const std::string prefix = sub.get_name() + ".";
  for (std::string line; std::getline(all, line);) {
    const auto eq = line.find('=');
    const std::string key = line.substr(0, eq);
    if (key.find('.') == std::string::npos || key.rfind(prefix, 0) == 0) err << "  " << line << '\n';
  }
}

void add_input(CLI::App* cmd, Config& c) {
  cmd->add_option("input", c.input, "Polytope JSON file")->required()->check(CLI::ExistingFile);
}

void add_out(CLI::App* cmd, Config& c, const std::string& what) {
  cmd->add_option("-o,--out", c.out, what + " (default: inside --out-dir)");
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact symplectic polarity, suspension and capacity toolkit", "sympolar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out-dir", c.out_dir, std::string("Directory for default outputs (env ") + kOutDirEnv + ")")
      ->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  std::string chosen;
  auto* ps = app.add_subcommand("power-suspend", "Build the n-fold suspension of the hexagon");
  ps->add_option("n", c.n, "Suspension depth")->required()->check(CLI::Range(1, 8));
  ps->add_option("--cache-dir", c.cache_dir, "Reuse/store results here");
  add_out(ps, c, "Output polytope file");

  auto* su = app.add_subcommand("suspend", "Suspend a polytope over the hexagon");
  add_input(su, c);
  su->add_option("--method", c.method, "vertices, halfspaces or auto")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "vertices", "halfspaces"}));
  add_out(su, c, "Output polytope file");

  auto* sp = app.add_subcommand("sympolar", "Symplectic polar of a polytope");
  add_input(sp, c);
  add_out(sp, c, "Output polytope file");

  auto* sc = app.add_subcommand("selfpolar-check", "Exact self-polarity test with a witness on failure");
  add_input(sc, c);

  auto* vo = app.add_subcommand("volume", "Exact volume");
  add_input(vo, c);

  auto* eh = app.add_subcommand("ehz", "EHZ capacity by exhaustive search");
  add_input(eh, c);
  eh->add_option("--mode", c.mode, "vertices or facet-normals")
      ->capture_default_str()
      ->check(CLI::IsMember({"vertices", "facet-normals"}));
  eh->add_option("--support-bound", c.support_bound, "Largest support size (default min(m, dim+1))");
  eh->add_option("--budget", c.budget, "Maximum configurations")->capture_default_str();
  eh->add_flag("--no-float-prepass", c.no_float_prepass, "Solve every configuration exactly");
  eh->add_option("--cert", c.cert, "Certificate output file");

  auto* cj = app.add_subcommand("cj", "c_J = 1 / max |omega| over the symplectic polar");
  add_input(cj, c);

  auto* sh = app.add_subcommand("shadow", "Area of the projection to the first symplectic plane");
  add_input(sh, c);

  auto* ge = app.add_subcommand("generate", "Random self-polar polytopes");
  ge->add_option("--dim", c.dim, "Ambient dimension (2, 4 or 6)")->capture_default_str();
  ge->add_option("--k", c.k, "Initial random points")->capture_default_str();
  ge->add_option("--runs", c.runs, "Number of runs")->capture_default_str();
  ge->add_option("--seed", c.seed, "Seed of the first run")->capture_default_str();
  ge->add_option("--max-iter", c.max_iter, "Expansion steps before giving up")->capture_default_str();
  ge->add_option("--csv", c.csv, "CSV output file");
  ge->add_option("--svg", c.svg, "SVG histogram file");

  auto* en = app.add_subcommand("enumerate-pm1", "Self-polar -1/0/1 polytopes from maximal cliques");
  en->add_option("--dim", c.dim, "Ambient dimension (2, 4 or 6)")->capture_default_str();
  en->add_option("--budget", c.clique_budget, "Maximum cliques (required for dim 6)");
  add_out(en, c, "Report directory");

  auto* sq = app.add_subcommand("sequences", "Exact sequence values and monotonicity checks");
  sq->add_option("--kind", c.kind, "compare or viterbo")
      ->capture_default_str()
      ->check(CLI::IsMember({"compare", "viterbo"}));
  sq->add_option("--n", c.n, "Print a_n");
  sq->add_option("--check", c.check, "Verify monotonicity up to N");

  auto* t1 = app.add_subcommand("table1", "Volume/vertex classes of 4-dimensional -1/0/1 self-polar polytopes");
  add_out(t1, c, "Report directory");

  auto* ce = app.add_subcommand("certify", "Evaluate or emit a capacity certificate");
  ce->add_option("polytope", c.input, "Polytope JSON file")->check(CLI::ExistingFile);
  ce->add_option("certificate", c.second_input, "Certificate JSON file")->check(CLI::ExistingFile);
  ce->add_option("--equal-weight", c.equal_weight, "Emit the equal-weight certificate of the n-fold suspension")
      ->check(CLI::Range(1, 8));
  add_out(ce, c, "Certificate output file");

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  echo_config(app, *sub, err);

  try {
    const std::string& name = sub->get_name();
    if (name == "power-suspend") return cmd_power_suspend(c, out);
    if (name == "suspend") return cmd_suspend(c, out);
    if (name == "sympolar") return cmd_sympolar(c, out);
    if (name == "selfpolar-check") return cmd_selfpolar_check(c, out);
    if (name == "volume") return cmd_volume(c, out);
    if (name == "ehz") return cmd_ehz(c, out);
    if (name == "cj") return cmd_cj(c, out);
    if (name == "shadow") return cmd_shadow(c, out);
    if (name == "generate") return cmd_generate(c, out, err);
    if (name == "enumerate-pm1") return cmd_enumerate(c, out);
    if (name == "sequences") return cmd_sequences(c, out);
    if (name == "table1") return cmd_table1(c, out);
    if (name == "certify") return cmd_certify(c, out);
    err << "error: unhandled subcommand " << name << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const PolarityDomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace sympolar::cli
