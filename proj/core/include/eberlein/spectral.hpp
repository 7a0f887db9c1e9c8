#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eberlein/correlation.hpp"

namespace eberlein {

struct FourierBohrEstimate {
  double theta = 0.0;
  std::vector<Complex> per_window;  // (1/|A_n|) Σ_{k∈A_n} e^{-2πiθk} f(k)
  Complex final;
  double cauchy_defect = 0.0;
};

FourierBohrEstimate fourier_bohr(const SampledSequence& f, double theta, const WindowFamily& w);

struct Atom {
  double theta = 0.0;
  double mass = 0.0;
};

/// Wiener mean of the modulated lag sequence over [-L, L] with half weights
/// at the endpoints, so full periods cancel exactly whenever p divides 2L.
double wiener_atom_mass(const Autocorrelation& gamma, double theta);

struct SpectralMeasureEstimate {
  std::vector<Atom> atoms;
  std::vector<double> ac_density;  // on the uniform grid m/M, clipped at 0
  double total_mass = 0.0;         // = gamma(0)
  double ac_integral = 0.0;        // (1/M) Σ ac_density
  double residual_sc_mass = 0.0;   // total - atoms - ac, clipped at 0
  double clipped_mass = 0.0;       // mass removed by the clipping steps
  struct Provenance {
    std::int64_t lag_cutoff = 0;
    std::string kernel = "fejer";
    double atom_threshold = 0.0;
  } provenance;

  double atom_mass_sum() const;
};

/// {k/τ mod 1 : |k| <= rotation_depth} ∪ {j/2^dyadic_depth}; the bundled
/// exemplars' known atom locations live on this grid.
std::vector<double> default_atom_candidates(int rotation_depth = 32, int dyadic_depth = 8);

struct HerglotzOptions {
  std::size_t grid_size = 256;
  std::vector<double> atom_candidates;           // empty = default grid
  std::optional<double> atom_threshold;          // default max(1e-3, 5/sqrt(L))
  std::optional<double> psd_tolerance_override;  // default psd_tolerance(...)
};

/// Positive measure on the torus from a positive-definite lag sequence:
/// atoms by Wiener means at the candidates, ac density by Fejér smoothing of
/// the atom-free remainder, sc residual by mass bookkeeping.
SpectralMeasureEstimate herglotz_invert(const Autocorrelation& gamma,
                                        const HerglotzOptions& opts);

/// Σ atoms·e^{2πiθt} + grid quadrature of e^{2πiθt}·ac_density; the sc
/// residual is not reconstructible and is reported as a gap by callers.
Complex reconstruct_gamma(const SpectralMeasureEstimate& est, std::int64_t t);

enum class BraggVerdict { Atom, NoAtom, Inconclusive };

struct BraggClassification {
  double theta = 0.0;
  std::vector<double> intensities;  // |Σ_{A_n} e^{-2πiθk} f(k)|² / |A_n|²
  double scaling_exponent = 0.0;    // slope of log intensity vs log |A_n|
  BraggVerdict verdict = BraggVerdict::Inconclusive;
};

/// Bragg peak detection by intensity scaling over the last half of windows.
/// Atom: slope in (-0.15, 0.15]; NoAtom: slope < -0.35, or a final intensity
/// below the fluctuation floor max(1e-4, 1/sqrt(|A_last|)).
std::vector<BraggClassification> bragg_scan(const SampledSequence& f, const WindowFamily& w,
                                            const std::vector<double>& thetas);

struct PhasePair {
  double theta = 0.0;
  double fb_mass = 0.0;    // |a_theta|²
  double atom_mass = 0.0;  // Wiener mean of the autocorrelation
  double gap = 0.0;
};

struct ConsistentPhaseReport {
  std::vector<PhasePair> pairs;
  double max_gap = 0.0;
};

/// Compares |a_θ|² with the Herglotz atom mass per θ. Evidence only: the CPP
/// needs uniform existence, which finite data cannot certify.
ConsistentPhaseReport consistent_phase_check(const SampledSequence& f, const WindowFamily& w,
                                             std::int64_t L, const std::vector<double>& thetas);

/// Smallest eigenvalue of the hermitian Toeplitz matrix G_{s,t} = gamma(s-t),
/// s,t in [0, dim); dim is capped so the check stays cheap at large cutoffs.
double min_toeplitz_eigenvalue(const Autocorrelation& gamma, std::size_t max_dim = 129);

}  // namespace eberlein
