// geowb: command-line front door for the hyperbolic-surface toolkit.
//
// Subcommands: spectrum, extremal, plot, markov. Every run is fully
// determined by its effective configuration (defaults + config file +
// flags), and every output embeds that configuration and the toolkit
// version: JSON outputs in an envelope object, CSV outputs in `#` comment
// lines, SVG outputs in a <desc> element. Identical configurations produce
// byte-identical outputs.
//
// Exit codes (stable contract):
//   0  success
//   1  inconclusive result (optimizer budget exhausted, enumeration word
//      cap reached) or an internal numeric failure
//   2  usage error: unknown flags, malformed values, unknown surface,
//      unsupported signature for the requested command
//
// The environment variable GEOWB_THREADS caps worker parallelism.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "geowb/enumerate.hpp"
#include "geowb/extremal.hpp"
#include "geowb/format.hpp"
#include "geowb/holonomy.hpp"
#include "geowb/markov.hpp"
#include "geowb/plot.hpp"
#include "geowb/spectra.hpp"
#include "geowb/surface_io.hpp"
#include "geowb/trace_tree.hpp"
#include "geowb/version.hpp"

namespace {

using geowb::Length;
using nlohmann::ordered_json;

constexpr std::size_t kTorusDefaultBudget = 4000;
constexpr std::size_t kGenus2DefaultBudget = 900;

struct Output {
  std::string text;
  int exit_code = 0;
};

// ---- surface resolution ---------------------------------------------------

std::vector<double> parse_inline_values(const std::string& text,
                                        std::size_t expected,
                                        const std::string& what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    double value = 0.0;
    if (!geowb::parse_double(token, value))
      throw std::invalid_argument("malformed number '" + token + "' in " +
                                  what);
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != expected)
    throw std::invalid_argument(what + " needs " +
                                geowb::format_int(static_cast<int>(expected)) +
                                " comma-separated values");
  return values;
}

// Accepts a preset name ("modular-torus"), inline Fenchel-Nielsen values
// ("torus:L,TAU,B" or "genus2:L0,L1,L2,T0,T1,T2"), or a surface file path.
geowb::HolonomyRep resolve_surface(const std::string& spec) {
  if (spec == "modular-torus" || spec == "modular")
    return geowb::modular_torus();
  if (spec.rfind("torus:", 0) == 0) {
    const auto v = parse_inline_values(spec.substr(6), 3, "torus:L,TAU,B");
    return geowb::holonomy(geowb::torus_graph(),
                           geowb::torus_fn(v[0], v[1], v[2]));
  }
  if (spec.rfind("genus2:", 0) == 0) {
    const auto v = parse_inline_values(spec.substr(7), 6,
                                       "genus2:L0,L1,L2,T0,T1,T2");
    return geowb::holonomy(
        geowb::genus2_graph(),
        geowb::genus2_fn(v[0], v[1], v[2], v[3], v[4], v[5]));
  }
  if (std::filesystem::exists(spec)) {
    const geowb::SurfaceSpec s = geowb::read_surface_file(spec);
    return geowb::holonomy(s.graph, s.fn);
  }
  throw std::invalid_argument(
      "unknown surface '" + spec +
      "': expected modular-torus, torus:L,TAU,B, "
      "genus2:L0,L1,L2,T0,T1,T2, or a surface file path");
}

// ---- output plumbing ------------------------------------------------------

std::string json_envelope(const std::string& command,
                          const ordered_json& config,
                          const ordered_json& result) {
  ordered_json j;
  j["tool"] = "geowb";
  j["version"] = geowb::kVersion;
  j["command"] = command;
  j["config"] = config;
  j["result"] = result;
  return j.dump(2) + "\n";
}

std::string csv_header(const std::string& command,
                       const ordered_json& config) {
  return std::string("# geowb ") + geowb::kVersion + "\n# command: " +
         command + "\n# config: " + config.dump() + "\n";
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + out_path);
  out << text;
  if (!out.flush())
    throw std::runtime_error("cannot write output file: " + out_path);
}

// ---- spectrum ------------------------------------------------------------

Output run_spectrum(const std::string& surface, bool simple, double cutoff,
                    const std::string& format) {
  ordered_json config;
  config["surface"] = surface;
  config["simple"] = simple;
  config["cutoff"] = cutoff;
  config["format"] = format;

  const geowb::HolonomyRep rep = resolve_surface(surface);
  Output out;

  if (simple) {
    if (rep.preset != "torus")
      throw std::invalid_argument(
          "--simple needs a one-holed torus surface; the simple spectrum of "
          "other signatures is not enumerable here");
    if (cutoff > 200.0)
      throw std::invalid_argument("--simple cutoff is capped at 200");
    const geowb::SimpleSpectrum spectrum = geowb::trace_tree(rep, cutoff);
    if (format == "csv") {
      std::ostringstream rows;
      geowb::write_spectrum_csv(spectrum, rows);
      out.text = csv_header("spectrum", config) + rows.str();
    } else {
      ordered_json result;
      result["cutoff"] = spectrum.cutoff;
      result["count"] = spectrum.entries.size();
      ordered_json entries = ordered_json::array();
      for (const auto& e : spectrum.entries)
        entries.push_back({{"p", e.slope.p},
                           {"q", e.slope.q},
                           {"trace", e.trace},
                           {"length", e.length}});
      result["entries"] = std::move(entries);
      out.text = json_envelope("spectrum", config, result);
    }
    return out;
  }

  if (cutoff > 14.0)
    throw std::invalid_argument(
        "full-spectrum cutoff is capped at 14 (class counts grow like "
        "e^L/L); use --simple for longer cutoffs on the torus");
  const geowb::GeodesicSpectrum spectrum =
      geowb::enumerate_geodesics(rep, cutoff);
  if (spectrum.status != "complete") out.exit_code = 1;
  if (format == "csv") {
    std::ostringstream rows;
    geowb::write_geodesics_csv(spectrum, rows);
    out.text = csv_header("spectrum", config) +
               "# status: " + spectrum.status + "\n" + rows.str();
  } else {
    ordered_json result;
    result["cutoff"] = spectrum.cutoff;
    result["status"] = spectrum.status;
    result["count"] = spectrum.classes.size();
    ordered_json classes = ordered_json::array();
    for (const auto& c : spectrum.classes)
      classes.push_back({{"word", c.word},
                         {"trace", c.trace},
                         {"length", c.length},
                         {"primitive", c.primitive}});
    result["classes"] = std::move(classes);
    out.text = json_envelope("spectrum", config, result);
  }
  return out;
}

// ---- extremal -------------------------------------------------------------

Output run_extremal(const std::string& target, double boundary,
                    std::size_t budget, std::uint64_t seed) {
  ordered_json config;
  config["target"] = target;
  if (target == "torus") config["boundary"] = boundary;
  config["budget"] = budget;
  if (target == "genus2") config["seed"] = seed;
  config["format"] = "json";

  const geowb::OptRun run = target == "torus"
                                ? geowb::maximize_torus_systole(boundary, budget)
                                : geowb::maximize_genus2_systole(budget, seed);
  Output out;
  out.text = json_envelope("extremal", config,
                           ordered_json::parse(geowb::opt_run_json(run)));
  out.exit_code = run.status == "ok" ? 0 : 1;
  return out;
}

// ---- plot -----------------------------------------------------------------

Output run_plot(const std::string& surface, int slope_bound, int resolution) {
  ordered_json config;
  config["surface"] = surface;
  config["slope_bound"] = slope_bound;
  config["resolution"] = resolution;
  config["format"] = "svg";

  const geowb::HolonomyRep rep = resolve_surface(surface);
  geowb::PlotConfig plot;
  plot.slope_bound = slope_bound;
  plot.samples_per_unit = resolution;
  plot.metadata = std::string("geowb ") + geowb::kVersion +
                  " plot config: " + config.dump();
  Output out;
  out.text = geowb::plot_geodesics_svg(rep, plot);
  return out;
}

// ---- markov ---------------------------------------------------------------

mpz_class parse_big(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(what + " must be a positive decimal integer");
  return mpz_class(text);
}

ordered_json triple_json(const geowb::MarkovTriple& t) {
  return ordered_json::array(
      {t.a.get_str(), t.b.get_str(), t.c.get_str()});
}

Output run_markov(const std::string& bound, const std::string& frobenius,
                  long long correspond) {
  ordered_json config;
  if (!bound.empty()) config["bound"] = bound;
  if (!frobenius.empty()) config["frobenius"] = frobenius;
  if (correspond > 0) config["correspond"] = correspond;
  config["format"] = "json";

  ordered_json result;
  if (!bound.empty()) {
    const mpz_class b = parse_big(bound, "--bound");
    if (b < 1) throw std::invalid_argument("--bound must be >= 1");
    const std::vector<geowb::MarkovTriple> triples = geowb::markov_tree(b);
    ordered_json tree;
    tree["bound"] = b.get_str();
    tree["count"] = triples.size();
    ordered_json list = ordered_json::array();
    for (const auto& t : triples) list.push_back(triple_json(t));
    tree["triples"] = std::move(list);
    result["tree"] = std::move(tree);
  }
  if (!frobenius.empty()) {
    const mpz_class b = parse_big(frobenius, "--frobenius");
    if (b < 1) throw std::invalid_argument("--frobenius must be >= 1");
    const geowb::FrobeniusReport scan = geowb::frobenius_scan(b);
    ordered_json fr;
    fr["bound"] = scan.bound.get_str();
    fr["triples"] = scan.triples.size();
    fr["markov_numbers"] = scan.markov_numbers.size();
    fr["collisions"] = scan.collisions.size();
    fr["unique"] = scan.unique;
    result["frobenius"] = std::move(fr);
  }
  if (correspond > 0) {
    const geowb::CorrespondenceReport rep =
        geowb::modular_correspondence(correspond);
    ordered_json co;
    co["bound"] = rep.bound;
    co["status"] = rep.status;
    co["matched"] = rep.matched;
    co["systole_multiplicity"] = rep.systole_multiplicity;
    ordered_json mult = ordered_json::array();
    for (const auto& [trace, count] : rep.trace_multiplicities)
      mult.push_back(ordered_json::array({trace, count}));
    co["trace_multiplicities"] = std::move(mult);
    co["diagnostics"] = rep.diagnostics;
    result["correspondence"] = std::move(co);
  }

  Output out;
  out.text = json_envelope("markov", config, result);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geowb: hyperbolic-surface toolkit (spectra, systoles, "
               "Markov triples, plots)"};
  app.set_version_flag("--version", geowb::kVersion);
  app.set_config("--config", "",
                 "Plain-text config file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();  // lets --out / --config appear after the subcommand
  app.footer("Exit codes: 0 success, 1 inconclusive (budget/word cap), "
             "2 usage error.\nGEOWB_THREADS caps worker parallelism.");

  std::string out_path;
  app.add_option("--out", out_path,
                 "Write the output to this file instead of stdout")
      ->configurable(true);

  // spectrum
  auto* spectrum = app.add_subcommand(
      "spectrum", "Length spectrum of a surface as CSV or JSON");
  std::string sp_surface = "modular-torus";
  bool sp_simple = false;
  double sp_cutoff = 10.0;
  std::string sp_format = "csv";
  spectrum->add_option("surface,--surface", sp_surface,
                       "modular-torus | torus:L,TAU,B | "
                       "genus2:L0,L1,L2,T0,T1,T2 | surface file path")
      ->capture_default_str();
  spectrum->add_flag("--simple", sp_simple,
                     "Simple closed geodesics only (one-holed torus)");
  spectrum->add_option("--cutoff", sp_cutoff, "Length cutoff")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--format", sp_format, "csv | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  // extremal
  auto* extremal = app.add_subcommand(
      "extremal", "Maximize the systole over a moduli family");
  std::string ex_target;
  double ex_boundary = 0.0;
  std::size_t ex_budget = 0;
  std::uint64_t ex_seed = 1;
  extremal->add_option("target,--target", ex_target, "torus | genus2")
      ->required()
      ->check(CLI::IsMember({"torus", "genus2"}));
  auto* ex_boundary_opt =
      extremal->add_option("--boundary", ex_boundary,
                           "Boundary length of the one-holed torus (torus "
                           "target only)")
          ->capture_default_str()
          ->check(CLI::NonNegativeNumber);
  auto* ex_budget_opt = extremal->add_option(
      "--budget", ex_budget,
      "Objective-evaluation budget (default: 4000 for torus, 900 for "
      "genus2)");
  auto* ex_seed_opt = extremal->add_option(
      "--seed", ex_seed, "Random-start seed (genus2 target only, default 1)");

  // plot
  auto* plot = app.add_subcommand(
      "plot", "Fold simple closed geodesics of a one-holed torus into a "
              "fundamental polygon (SVG)");
  std::string pl_surface = "modular-torus";
  int pl_bound = 1;
  int pl_resolution = 40;
  std::string pl_format = "svg";
  plot->add_option("surface,--surface", pl_surface,
                   "modular-torus | torus:L,TAU,B | surface file path")
      ->capture_default_str();
  plot->add_option("--slope-bound", pl_bound,
                   "Draw slopes (p, q) with 0 <= p, q <= bound")
      ->capture_default_str()
      ->check(CLI::Range(0, 64));
  plot->add_option("--resolution", pl_resolution,
                   "Samples per unit of arclength")
      ->capture_default_str()
      ->check(CLI::Range(2, 512));
  plot->add_option("--format", pl_format, "svg")
      ->capture_default_str()
      ->check(CLI::IsMember({"svg"}));

  // markov
  auto* markov = app.add_subcommand(
      "markov", "Markov triples, uniqueness scan, modular correspondence");
  std::string mk_bound;
  std::string mk_frobenius;
  long long mk_correspond = 0;
  markov->add_option("--bound", mk_bound,
                     "Enumerate Markov triples with max <= bound (decimal, "
                     "big integers fine)");
  markov->add_option("--frobenius", mk_frobenius,
                     "Uniqueness scan of triple maxima up to this bound");
  markov->add_option("--correspond", mk_correspond,
                     "Cross-check Markov numbers <= N against modular-torus "
                     "simple traces <= 3N")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    if (spectrum->parsed()) {
      out = run_spectrum(sp_surface, sp_simple, sp_cutoff, sp_format);
    } else if (extremal->parsed()) {
      if (ex_target == "genus2" && ex_boundary_opt->count() > 0)
        throw std::invalid_argument("--boundary applies to the torus target");
      if (ex_target == "torus" && ex_seed_opt->count() > 0)
        throw std::invalid_argument(
            "--seed applies to the genus2 target (the torus search is "
            "deterministic)");
      if (ex_budget_opt->count() == 0)
        ex_budget = ex_target == "torus" ? kTorusDefaultBudget
                                         : kGenus2DefaultBudget;
      out = run_extremal(ex_target, ex_boundary, ex_budget, ex_seed);
    } else if (plot->parsed()) {
      out = run_plot(pl_surface, pl_bound, pl_resolution);
    } else if (markov->parsed()) {
      if (mk_bound.empty() && mk_frobenius.empty() && mk_correspond == 0)
        throw std::invalid_argument(
            "markov needs at least one of --bound, --frobenius, "
            "--correspond");
      out = run_markov(mk_bound, mk_frobenius, mk_correspond);
    }
    write_output(out.text, out_path);
    return out.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "geowb: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "geowb: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "geowb: " << e.what() << "\n";
    return 1;
  }
}
