// Batch CLI binding the toolkit: sequence generation, correlations,
// autocorrelations, Fourier-Bohr coefficients, spectrum estimation, Gram
// matrices, experiment drivers, and report rendering.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "eberlein/experiments.hpp"
#include "eberlein/json_io.hpp"

namespace {

using namespace eberlein;

constexpr int kExitOk = 0;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUsage = 64;
constexpr int kExitSupport = 65;

// "prefix:100000" or "symmetric:50000", optional ":count" to thin the family
// to evenly spaced checkpoint windows (default 48).
WindowFamily parse_windows(const std::string& spec) {
  std::size_t c1 = spec.find(':');
  if (c1 == std::string::npos)
    throw std::invalid_argument("window spec must look like prefix:N or symmetric:N[:count]");
  std::string kind = spec.substr(0, c1);
  std::string rest = spec.substr(c1 + 1);
  std::size_t c2 = rest.find(':');
  std::int64_t n = std::stoll(rest.substr(0, c2));
  std::size_t count = 48;
  if (c2 != std::string::npos) count = static_cast<std::size_t>(std::stoull(rest.substr(c2 + 1)));
  WindowFamily full = kind == "prefix"      ? make_prefix(n)
                      : kind == "symmetric" ? make_symmetric(n)
                                            : throw std::invalid_argument(
                                                  "window kind must be prefix or symmetric");
  return count == 0 ? full : full.thin(count);
}

// "a..b"
Interval parse_range(const std::string& s) {
  std::size_t pos = s.find("..", 1);  // skip a leading minus sign
  if (pos == std::string::npos) throw std::invalid_argument("range must look like a..b");
  return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
}

SequenceSpec load_spec(const std::string& path) {
  return sequence_spec_from_json(load_json_file(path));
}

void check_support_rule(const WindowFamily& w, std::int64_t L) {
  if (w.largest().length() < 4 * L)
    throw std::invalid_argument("window length " + std::to_string(w.largest().length()) +
                                " violates the support rule: must be >= 4*L = " +
                                std::to_string(4 * L));
}

void write_two_column_csv(const std::string& path, const char* header,
                          const std::vector<std::pair<double, double>>& rows) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << header << '\n';
  char buf[80];
  for (const auto& [a, b] : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", a, b);
    os << buf;
  }
}

int cmd_gen(const std::string& spec_path, const std::string& range, const std::string& out) {
  SampledSequence s = generate(load_spec(spec_path), parse_range(range));
  write_sequence_csv(s, out);
  std::cout << "wrote " << s.values.size() << " samples to " << out << "\n";
  return kExitOk;
}

int cmd_corr(const std::string& f_path, const std::string& g_path, const std::string& windows,
             const std::string& lag_range, const std::string& out) {
  WindowFamily w = parse_windows(windows);
  Interval lr = parse_range(lag_range);
  std::vector<std::int64_t> lags;
  for (std::int64_t t = lr.lo; t <= lr.hi; ++t) lags.push_back(t);
  std::int64_t Lmax = std::max(std::abs(lr.lo), std::abs(lr.hi));
  check_support_rule(w, Lmax);
  Interval margin{w.hull().lo - Lmax, w.hull().hi + Lmax};
  SampledSequence f = generate(load_spec(f_path), margin);
  SampledSequence g = generate(load_spec(g_path), margin);
  auto est = reflected_eberlein(f, g, w, lags);
  save_json_file(to_json(est), out);
  std::cout << "wrote correlation estimate (" << lags.size() << " lags, " << w.size()
            << " windows) to " << out << "\n";
  return kExitOk;
}

int cmd_autocorr(const std::string& seq_path, const std::string& windows, std::int64_t L,
                 const std::string& out) {
  WindowFamily w = parse_windows(windows);
  check_support_rule(w, L);
  Interval margin{w.hull().lo - L, w.hull().hi + L};
  SampledSequence f = generate(load_spec(seq_path), margin);
  auto gamma = autocorrelation(f, w, L);
  save_json_file(to_json(gamma), out);
  std::cout << "wrote autocorrelation (L = " << L << ", gamma(0) = " << gamma.gamma0() << ") to "
            << out << "\n";
  return kExitOk;
}

int cmd_fb(const std::string& seq_path, double theta, const std::string& windows,
           const std::string& out) {
  WindowFamily w = parse_windows(windows);
  SampledSequence f = generate(load_spec(seq_path), w.hull());
  auto est = fourier_bohr(f, theta, w);
  save_json_file(to_json(est), out);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", std::abs(est.final));
  std::cout << "a_theta(" << theta << ") final modulus " << buf << ", defect "
            << est.cauchy_defect << "\n";
  return kExitOk;
}

int cmd_spectrum(const std::string& gamma_path, std::size_t grid, const std::string& atoms,
                 const std::string& out, const std::string& density_csv,
                 const std::string& atoms_csv) {
  Autocorrelation gamma = autocorrelation_from_json(load_json_file(gamma_path));
  HerglotzOptions opts;
  opts.grid_size = grid;
  if (atoms != "auto") {
    for (const auto& v : load_json_file(atoms)) opts.atom_candidates.push_back(v.get<double>());
  }
  auto est = herglotz_invert(gamma, opts);
  save_json_file(to_json(est), out);
  if (!density_csv.empty()) {
    std::vector<std::pair<double, double>> rows;
    for (std::size_t m = 0; m < est.ac_density.size(); ++m)
      rows.push_back({static_cast<double>(m) / est.ac_density.size(), est.ac_density[m]});
    write_two_column_csv(density_csv, "theta,density", rows);
  }
  if (!atoms_csv.empty()) {
    std::vector<std::pair<double, double>> rows;
    for (const auto& a : est.atoms) rows.push_back({a.theta, a.mass});
    write_two_column_csv(atoms_csv, "theta,mass", rows);
  }
  std::cout << "atoms " << est.atoms.size() << ", ac integral " << est.ac_integral
            << ", sc residual " << est.residual_sc_mass << " (total " << est.total_mass << ")\n";
  return kExitOk;
}

int cmd_gram(const std::string& family_path, const std::string& windows, const std::string& out) {
  WindowFamily w = parse_windows(windows);
  json fam_json = load_json_file(family_path);
  TranslateFamily fam;
  for (std::int64_t s : fam_json.value("shifts", std::vector<std::int64_t>{0}))
    fam.shifts.push_back(s);
  std::int64_t max_shift = 0;
  for (std::int64_t s : fam.shifts) max_shift = std::max(max_shift, std::abs(s));
  Interval margin{w.hull().lo - max_shift, w.hull().hi + max_shift};
  for (const auto& sj : fam_json.at("sequences")) {
    SequenceSpec spec = sequence_spec_from_json(sj);
    fam.base.push_back(generate(spec, margin));
    fam.labels.push_back(spec.label);
  }
  GramMatrix g = gram(fam, w);
  save_json_file(to_json(g), out);
  std::cout << "wrote " << g.dim << "x" << g.dim << " gram matrix (hermiticity defect "
            << g.hermiticity_defect << ") to " << out << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& id, const std::string& config_path, const std::string& out) {
  json cfg = config_path.empty() ? json::object() : load_json_file(config_path);
  ExperimentReport rep = run_experiment(id, cfg);
  if (!out.empty()) save_json_file(report_to_json(rep), out);
  for (const auto& [name, obs] : rep.observed) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-34s %.17g  (tol %.17g)  %s", name.c_str(), obs.value,
                  obs.tolerance, obs.within() ? "ok" : "VIOLATED");
    std::cout << buf << "\n";
  }
  std::cout << id << ": " << verdict_name(rep.verdict) << "\n";
  switch (rep.verdict) {
    case Verdict::Pass: return kExitOk;
    case Verdict::Fail: return kExitFail;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_report(const std::string& in, const std::string& text_out, const std::string& csv_out) {
  ExperimentReport rep = report_from_json(load_json_file(in));
  std::ostringstream os;
  os << "experiment: " << rep.experiment_id << "\nverdict:    " << verdict_name(rep.verdict)
     << "\n\nobserved:\n";
  for (const auto& [name, obs] : rep.observed) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-34s %.17g  tol %.17g  %s\n", name.c_str(), obs.value,
                  obs.tolerance, obs.within() ? "ok" : "VIOLATED");
    os << buf;
  }
  if (!rep.notes.empty()) {
    os << "\nnotes:\n";
    for (const auto& n : rep.notes) os << "  - " << n << "\n";
  }
  if (text_out.empty())
    std::cout << os.str();
  else {
    std::ofstream f(text_out);
    if (!f) throw std::runtime_error("cannot open " + text_out);
    f << os.str();
  }
  if (!csv_out.empty()) {
    std::ofstream f(csv_out);
    if (!f) throw std::runtime_error("cannot open " + csv_out);
    f << "name,value,tolerance,within\n";
    for (const auto& [name, obs] : rep.observed) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%d\n", name.c_str(), obs.value,
                    obs.tolerance, obs.within() ? 1 : 0);
      f << buf;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflected Eberlein convolutions, diffraction, and spectral measures on Z"};
  app.require_subcommand(1);

  std::string spec_path, range, out, f_path, g_path, windows = "prefix:100000",
              lag_range = "-64..64", gamma_path, atoms = "auto", density_csv, atoms_csv,
              family_path, experiment, config_path, report_in, text_out, csv_out;
  std::int64_t L = 64;
  double theta = 0.0;
  std::size_t grid = 4096;

  auto* gen = app.add_subcommand("gen", "generate samples from a sequence spec");
  gen->add_option("--seq-spec", spec_path, "sequence spec JSON")->required();
  gen->add_option("--window", range, "sample window a..b")->required();
  gen->add_option("--out", out, "output CSV (index,re,im)")->required();

  auto* corr = app.add_subcommand("corr", "reflected Eberlein convolution of two sequences");
  corr->add_option("--f", f_path, "left sequence spec JSON")->required();
  corr->add_option("--g", g_path, "right sequence spec JSON")->required();
  corr->add_option("--windows", windows, "window family, kind:N[:count]");
  corr->add_option("--lags", lag_range, "lag grid a..b");
  corr->add_option("--out", out, "output JSON")->required();

  auto* ac = app.add_subcommand("autocorr", "autocorrelation on the symmetric lag grid");
  ac->add_option("--seq", spec_path, "sequence spec JSON")->required();
  ac->add_option("--windows", windows, "window family, kind:N[:count]");
  ac->add_option("--L", L, "lag half-width");
  ac->add_option("--out", out, "output JSON")->required();

  auto* fb = app.add_subcommand("fb", "Fourier-Bohr coefficient at one torus point");
  fb->add_option("--seq", spec_path, "sequence spec JSON")->required();
  fb->add_option("--theta", theta, "torus point in [0,1)")->required();
  fb->add_option("--windows", windows, "window family, kind:N[:count]");
  fb->add_option("--out", out, "output JSON")->required();

  auto* sp = app.add_subcommand("spectrum", "Herglotz inversion of an autocorrelation");
  sp->add_option("--gamma", gamma_path, "autocorrelation JSON")->required();
  sp->add_option("--grid", grid, "ac density grid size");
  sp->add_option("--atoms", atoms, "'auto' or JSON array of candidate torus points");
  sp->add_option("--out", out, "output JSON")->required();
  sp->add_option("--density-csv", density_csv, "plot data: theta,density");
  sp->add_option("--atoms-csv", atoms_csv, "plot data: theta,mass");

  auto* gr = app.add_subcommand("gram", "Gram matrix of a translate family");
  gr->add_option("--family", family_path, "family JSON {sequences:[spec...], shifts:[...]}")
      ->required();
  gr->add_option("--windows", windows, "window family, kind:N[:count]");
  gr->add_option("--out", out, "output JSON")->required();

  auto* ve = app.add_subcommand("verify", "run a theorem-verification experiment");
  ve->add_option("experiment", experiment,
                 "one of: " + [] {
                   std::string s;
                   for (const auto& id : eberlein::experiment_ids()) s += id + " ";
                   return s;
                 }())
      ->required();
  ve->add_option("--config", config_path, "config JSON overriding experiment defaults");
  ve->add_option("--out", out, "report JSON output");

  auto* re = app.add_subcommand("report", "render an experiment report");
  re->add_option("--in", report_in, "report JSON")->required();
  re->add_option("--text", text_out, "write human-readable text here (default stdout)");
  re->add_option("--csv", csv_out, "write observations CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(spec_path, range, out);
    if (corr->parsed()) return cmd_corr(f_path, g_path, windows, lag_range, out);
    if (ac->parsed()) return cmd_autocorr(spec_path, windows, L, out);
    if (fb->parsed()) return cmd_fb(spec_path, theta, windows, out);
    if (sp->parsed()) return cmd_spectrum(gamma_path, grid, atoms, out, density_csv, atoms_csv);
    if (gr->parsed()) return cmd_gram(family_path, windows, out);
    if (ve->parsed()) return cmd_verify(experiment, config_path, out);
    if (re->parsed()) return cmd_report(report_in, text_out, csv_out);
  } catch (const std::out_of_range& e) {
    std::cerr << "support violation: " << e.what() << "\n";
    return kExitSupport;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
