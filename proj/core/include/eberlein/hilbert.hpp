#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eberlein/spectral.hpp"

namespace eberlein {

/// The finite slice of Span{τ_t f : f ∈ F, t} actually realized: every pair
/// (sequence, shift) is one member τ_shift f.
struct TranslateFamily {
  std::vector<SampledSequence> base;
  std::vector<std::int64_t> shifts;
  std::vector<std::string> labels;  // one per base sequence, optional

  std::size_t size() const { return base.size() * shifts.size(); }
  /// Member index (i, s) -> flattened row index.
  std::size_t member(std::size_t seq_index, std::size_t shift_index) const {
    return seq_index * shifts.size() + shift_index;
  }
  double max_sup_norm() const;
};

struct GramMatrix {
  std::size_t dim = 0;
  std::vector<Complex> entries;  // row-major
  std::string window_label;
  std::int64_t n_used = 0;
  double hermiticity_defect = 0.0;  // max asymmetry before symmetrization

  const Complex& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

/// G_{(i,s),(j,t)} = final mean of (τ_s f_i)·conj(τ_t f_j), hermitian-symmetrized.
GramMatrix gram(const TranslateFamily& fam, const WindowFamily& w);

/// Smallest eigenvalue (Gram matrices of means are PSD up to boundary terms).
double min_eigenvalue(const GramMatrix& g);

/// gram(family shifted by t0) vs gram(family): entrywise gap bounded by
/// 2·(max sup-norm)²·|t0| / |A_last|.
CheckReport shift_unitarity_check(const TranslateFamily& fam, const WindowFamily& w,
                                  std::int64_t t0);

/// Spectral measure of the vector f under the shift representation: the
/// Herglotz measure of the diagonal lag sequence ⟨f, T_t f⟩ = ⟨⟨f,f⟩⟩(t).
SpectralMeasureEstimate spectral_measure_of_vector(const SampledSequence& f,
                                                   const WindowFamily& w, std::int64_t L,
                                                   const HerglotzOptions& opts);

struct OrthogonalityReport {
  SpectralMeasureEstimate rho_f;
  SpectralMeasureEstimate rho_g;
  double sup_cross = 0.0;     // sup over lags of |final ⟨⟨f,g⟩⟩|
  double cross_defect = 0.0;  // max cauchy defect across lags
  bool mutually_singular_estimate = false;  // from the two estimated spectral types
  bool consistent = false;           // singular ⟹ orthogonal holds on the data
  bool converse_failure_witness = false;  // orthogonal but not singular
  std::string note;
};

/// Checks "ρ_f ⊥ ρ_g ⟹ ⟨⟨f,g⟩⟩ = 0" on data, and flags witnesses that the
/// converse fails.
OrthogonalityReport orthogonality_vs_singularity_check(const SampledSequence& f,
                                                       const SampledSequence& g,
                                                       const WindowFamily& w, std::int64_t L,
                                                       const HerglotzOptions& opts);

/// Finitely supported convolution kernel; taps[i] sits at offset start + i.
struct FiniteKernel {
  std::int64_t start = 0;
  std::vector<Complex> taps;

  double l1_norm() const;
  std::int64_t width() const { return static_cast<std::int64_t>(taps.size()); }
  static FiniteKernel point_mass() { return {0, {Complex{1.0, 0.0}}}; }
};

/// Exact finite convolution with support bookkeeping: the result covers
/// [lo + max offset, hi + min offset] of the input support (no padding).
SampledSequence convolve(const SampledSequence& mu, const FiniteKernel& phi);

/// ⟨⟨μ∗φ, μ∗ψ⟩⟩(t) vs (⟨⟨μ,μ⟩⟩ ∗ φ ∗ ψ̃)(t); both sides computed on exact
/// finite sums, gap bounded by 2·sup|μ|²·‖φ‖₁·‖ψ‖₁·(max offsets)/|A_n|.
CheckReport smoothing_equivalence_check(const SampledSequence& mu, const FiniteKernel& phi,
                                        const FiniteKernel& psi, const WindowFamily& w,
                                        const std::vector<std::int64_t>& lags);

}  // namespace eberlein
