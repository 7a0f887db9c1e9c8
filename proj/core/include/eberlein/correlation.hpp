#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eberlein/sequences.hpp"
#include "eberlein/windows.hpp"

namespace eberlein {

/// Per-window averaged values along a family, with convergence diagnostics.
struct SeriesEstimate {
  std::vector<Complex> per_window;
  Complex final;
  double defect = 0.0;  // cauchy_defect of per_window
};

/// Mean M_A(f): value at window n is (1/|A_n|) Σ_{k∈A_n} f(k).
SeriesEstimate mean(const SampledSequence& f, const WindowFamily& w);

/// One lag of the reflected Eberlein convolution:
/// (1/|A_n|) Σ_{k∈A_n} f(k) · conj(g(k − t)). Exact finite sums; g must
/// genuinely cover every shifted window (no zero padding, ever).
SeriesEstimate correlate_lag(const SampledSequence& f, const SampledSequence& g,
                             const WindowFamily& w, std::int64_t t);

struct CorrelationEstimate {
  std::vector<std::int64_t> lags;
  std::vector<std::vector<Complex>> values;  // [lag index][window index]
  std::vector<Complex> final;                // [lag index], last-window values
  std::vector<double> cauchy_defect;         // [lag index]

  std::size_t lag_index(std::int64_t t) const;
  const Complex& final_at(std::int64_t t) const { return final[lag_index(t)]; }
};

CorrelationEstimate reflected_eberlein(const SampledSequence& f, const SampledSequence& g,
                                       const WindowFamily& w,
                                       const std::vector<std::int64_t>& lags);

/// Lag grid -L..L.
std::vector<std::int64_t> symmetric_lags(std::int64_t L);

/// Final autocorrelation on the symmetric lag grid, hermitian-symmetrized:
/// gamma(t) = (v(t) + conj(v(-t))) / 2, so gamma(-t) = conj(gamma(t)) exactly.
struct Autocorrelation {
  std::vector<std::int64_t> lags;  // -L..L
  std::vector<Complex> gamma;
  std::string window_label;
  std::int64_t n_used = 0;  // |A| of the last window

  std::int64_t max_lag() const { return lags.empty() ? 0 : lags.back(); }
  const Complex& at(std::int64_t t) const;
  double gamma0() const { return at(0).real(); }
};

Autocorrelation autocorrelation(const SampledSequence& f, const WindowFamily& w, std::int64_t L);

struct CheckReport {
  double max_gap = 0.0;  // worst observed deviation
  double bound = 0.0;    // allowed deviation at the point of the worst ratio
  bool pass = false;
  std::string detail;
};

/// ⟨⟨a·f + b·h, g⟩⟩ = a⟨⟨f,g⟩⟩ + b⟨⟨h,g⟩⟩ is an identity of finite sums;
/// asserts it to 1e-12 relative at every window and lag.
CheckReport sesquilinearity_check(const SampledSequence& f, const SampledSequence& g,
                                  const SampledSequence& h, Complex a, Complex b,
                                  const WindowFamily& w, const std::vector<std::int64_t>& lags);

/// ⟨⟨τ_{t0} f, g⟩⟩(t) vs ⟨⟨f,g⟩⟩(t − t0), per-window gap bounded by
/// 2·sup|f|·sup|g|·|t0| / |A_n|.
CheckReport translation_covariance_check(const SampledSequence& f, const SampledSequence& g,
                                         std::int64_t t0, const WindowFamily& w,
                                         const std::vector<std::int64_t>& lags);

/// Finite-N positive-definiteness floor: the limit array is positive definite,
/// finite windows may dip below zero by at most 10·sup²·dim²/N.
double psd_tolerance(double sup_norm, std::size_t dim, std::int64_t n_used);

}  // namespace eberlein
