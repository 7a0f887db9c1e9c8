#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eberlein/hilbert.hpp"
#include "eberlein/spectral.hpp"

namespace eberlein {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

/// A named deviation with its tolerance; the verdict aggregates these.
struct Observation {
  double value = 0.0;      // observed deviation (absolute)
  double tolerance = 0.0;  // allowed deviation
  bool within() const { return value <= tolerance; }
};

struct ExperimentReport {
  std::string experiment_id;
  nlohmann::json inputs;  // sufficient to reproduce bit-exactly
  std::map<std::string, Observation> observed;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;

  void add(const std::string& name, double value, double tolerance);
  /// Pass iff every observation is within tolerance; Fail otherwise.
  void finalize();
};

nlohmann::json report_to_json(const ExperimentReport& r);  // {"schema": 1, ...}
ExperimentReport report_from_json(const nlohmann::json& j);

/// Default tolerance: 10/√N for stochastic inputs, 10·L/N for deterministic
/// pairs; overridable per experiment.
double default_tolerance(bool stochastic, std::int64_t N, std::int64_t L);

/// Prefix family to N, thinned to the standard checkpoint count.
WindowFamily experiment_prefix(std::int64_t N, std::size_t checkpoints = 32);

/// §6 main theorem: declared mutually singular diffraction types force
/// vanishing cross-correlation. Throws invalid-argument when the declared
/// types do not differ (the experiment would be ill-posed).
ExperimentReport verify_orthogonality(const SequenceSpec& fspec, const SequenceSpec& gspec,
                                      const WindowFamily& w, std::int64_t L,
                                      std::optional<double> tol_override = std::nullopt);

/// §6 Remark pair: Dirac comb vs sign comb on symmetric windows. The cross
/// vanishes while the diffractions coincide, so it is not an instance of the
/// orthogonality theorem; the report says so.
ExperimentReport remark_pair_experiment(std::int64_t max_n, std::int64_t L);

/// §6 Pythagoras corollary for declared singular pairs.
ExperimentReport verify_pythagoras(const SequenceSpec& fspec, const SequenceSpec& gspec,
                                   Complex a, Complex b, const WindowFamily& w, std::int64_t L,
                                   std::int64_t atom_lag_cutoff = 512,
                                   std::optional<double> tol_override = std::nullopt);

/// §7 Bombieri–Taylor: no detected atom at θ forces a vanishing Fourier–Bohr
/// coefficient; for declared continuous inputs every scanned coefficient
/// vanishes; the sign-comb counterexample bounds the converse.
ExperimentReport bombieri_taylor_suite(const SequenceSpec& fspec, const WindowFamily& w,
                                       const std::vector<double>& thetas, std::int64_t L,
                                       std::optional<double> tol_override = std::nullopt);

struct RefinedDecompositionConfig {
  std::int64_t lag_cutoff = 65536;
  std::size_t grid_size = 256;
  std::vector<double> atom_candidates;  // empty = default grid
};

/// §8 refined Eberlein decomposition: the pp/ac/sc split of a three-part
/// mixture tracks |a|², |b|², |c|² times the parts' split.
ExperimentReport verify_refined_decomposition(const SequenceSpec& pp_spec,
                                              const SequenceSpec& ac_spec,
                                              const SequenceSpec& sc_spec, Complex a, Complex b,
                                              Complex c, const WindowFamily& w,
                                              const RefinedDecompositionConfig& cfg = {});

enum class HullVariant { MutuallySingular, ProductOfMeans };

/// §9: sampled random origins stand in for "almost every" point of the hulls.
ExperimentReport hull_orthogonality(const SequenceSpec& fspec, const SequenceSpec& gspec,
                                    int n_origins, std::uint64_t origin_seed,
                                    const WindowFamily& w, std::int64_t L,
                                    HullVariant variant = HullVariant::MutuallySingular,
                                    std::optional<double> tol_override = std::nullopt);

/// §10 generalized consistent phase property for Besicovitch inputs:
/// a_ξ(⟨⟨μ,ν⟩⟩) = a_ξ(μ)·conj(a_ξ(ν)); plus the orthogonal-complement check
/// when every scanned coefficient of ν vanishes.
ExperimentReport verify_besicovitch_cpp(const SequenceSpec& mu_spec, const SequenceSpec& nu_spec,
                                        const WindowFamily& w, const std::vector<double>& thetas,
                                        std::int64_t L,
                                        std::optional<double> tol_override = std::nullopt);

/// Canned experiment ids runnable from the CLI.
std::vector<std::string> experiment_ids();

/// Runs a canned experiment; config keys (all optional) override the defaults
/// recorded in each experiment's inputs, e.g. {"N":..., "L":..., "tol":...}.
ExperimentReport run_experiment(const std::string& id, const nlohmann::json& config);

}  // namespace eberlein
